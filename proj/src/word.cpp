#include "braidlab/word.hpp"

#include <sstream>
#include <stdexcept>

namespace braidlab {

size_t Word::length() const {
  size_t n = 0;
  for (auto& [g, e] : syl) n += size_t(e < 0 ? -e : e);
  return n;
}

uint32_t Word::max_generator() const {
  uint32_t m = 0;
  for (auto& [g, e] : syl)
    if (g > m) m = g;
  return m;
}

Word word_one() { return Word{}; }

Word word_gen(uint32_t g, int64_t exp) {
  if (g == 0) throw std::invalid_argument("generator indices are 1-based");
  Word w;
  if (exp != 0) w.syl.push_back({g, exp});
  return w;
}

void word_push(Word& w, uint32_t g, int64_t exp) {
  if (exp == 0) return;
  if (!w.syl.empty() && w.syl.back().first == g) {
    w.syl.back().second += exp;
    if (w.syl.back().second == 0) w.syl.pop_back();
    return;
  }
  w.syl.push_back({g, exp});
}

Word word_mul(const Word& a, const Word& b) {
  Word r = a;
  r.syl.reserve(a.syl.size() + b.syl.size());
  for (auto& [g, e] : b.syl) word_push(r, g, e);
  return r;
}

Word word_inv(const Word& a) {
  Word r;
  r.syl.reserve(a.syl.size());
  for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it)
    r.syl.push_back({it->first, -it->second});
  return r;
}

Word word_pow(const Word& a, int64_t k) {
  if (k == 0) return word_one();
  Word base = k > 0 ? a : word_inv(a);
  if (k < 0) k = -k;
  Word r;
  for (int64_t i = 0; i < k; i++) r = word_mul(r, base);
  return r;
}

Word commutator(const Word& a, const Word& b) {
  return word_mul(word_mul(word_inv(a), word_inv(b)), word_mul(a, b));
}

Word conjugate(const Word& a, const Word& b) {
  return word_mul(word_mul(word_inv(b), a), b);
}

Word left_normed_commutator(const std::vector<uint32_t>& gens) {
  if (gens.empty()) return word_one();
  Word w = word_gen(gens[0]);
  for (size_t i = 1; i < gens.size(); i++) w = commutator(w, word_gen(gens[i]));
  return w;
}

Word word_shift(const Word& w, int64_t offset) {
  Word r;
  r.syl.reserve(w.syl.size());
  for (auto& [g, e] : w.syl) {
    int64_t ng = int64_t(g) + offset;
    if (ng < 1) throw std::invalid_argument("word_shift: index underflow");
    r.syl.push_back({uint32_t(ng), e});
  }
  return r;
}

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok[0] != 'x' && tok[0] != 'X')
      throw std::invalid_argument("bad word token: " + tok);
    size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos
                                        ? std::string::npos
                                        : caret - 1);
    int64_t exp = 1;
    if (caret != std::string::npos) exp = std::stoll(tok.substr(caret + 1));
    uint32_t g = uint32_t(std::stoul(idx));
    if (g == 0) throw std::invalid_argument("bad generator index in: " + tok);
    word_push(w, g, exp);
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto& [g, e] : w.syl) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << g;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {
// c^a in the sense used by the identity suite: conjugate of b by a means
// a^{-1} b a, written conj(b, a).
Word cj(const Word& b, const Word& a) { return conjugate(b, a); }
}  // namespace

std::vector<bool> hall_witt_check(const Word& a, const Word& b, const Word& c) {
  std::vector<bool> out;
  // (1) [a,b][b,a] = 1
  out.push_back(word_mul(commutator(a, b), commutator(b, a)).is_identity());
  // (2) [a, bc] = [a,c][a,b][[a,b],c]
  out.push_back(commutator(a, word_mul(b, c)) ==
                word_mul(word_mul(commutator(a, c), commutator(a, b)),
                         commutator(commutator(a, b), c)));
  // (3) [ab, c] = [a,c][[a,c],b][b,c]
  out.push_back(commutator(word_mul(a, b), c) ==
                word_mul(word_mul(commutator(a, c),
                                  commutator(commutator(a, c), b)),
                         commutator(b, c)));
  // (4) [[a,b], c^a] [[c,a], b^c] [[b,c], a^b] = 1, where y^x = x^{-1} y x
  out.push_back(word_mul(word_mul(commutator(commutator(a, b), cj(c, a)),
                                  commutator(commutator(c, a), cj(b, c))),
                         commutator(commutator(b, c), cj(a, b)))
                    .is_identity());
  // (5) [[a,b],c][[b,c],a][[c,a],b]
  //       = [b,a][c,a] [c,b]^a [a,b] [a,c]^b [b,c]^a [a,c] [c,a]^b
  {
    Word lhs = word_mul(word_mul(commutator(commutator(a, b), c),
                                 commutator(commutator(b, c), a)),
                        commutator(commutator(c, a), b));
    Word rhs = commutator(b, a);
    rhs = word_mul(rhs, commutator(c, a));
    rhs = word_mul(rhs, cj(commutator(c, b), a));
    rhs = word_mul(rhs, commutator(a, b));
    rhs = word_mul(rhs, cj(commutator(a, c), b));
    rhs = word_mul(rhs, cj(commutator(b, c), a));
    rhs = word_mul(rhs, commutator(a, c));
    rhs = word_mul(rhs, cj(commutator(c, a), b));
    out.push_back(lhs == rhs);
  }
  // (6) [a, b^n] = [a,b] [a,b]^b ... [a,b]^{b^{n-1}}, checked for n = 2,3,4
  {
    bool ok = true;
    for (int64_t n = 2; n <= 4; n++) {
      Word lhs = commutator(a, word_pow(b, n));
      Word rhs;
      for (int64_t i = 0; i < n; i++)
        rhs = word_mul(rhs, cj(commutator(a, b), word_pow(b, i)));
      ok = ok && lhs == rhs;
    }
    out.push_back(ok);
  }
  return out;
}

bool commutator_identity_check(const Word& x, const Word& y, const Word& v) {
  Word lhs = commutator(conjugate(y, x), word_mul(word_mul(v, y), word_inv(v)));
  Word xv = word_mul(x, v);
  Word rhs = word_mul(
      word_mul(word_inv(x),
               commutator(y, word_mul(word_mul(xv, y), word_inv(xv)))),
      x);
  return lhs == rhs;
}

}  // namespace braidlab
