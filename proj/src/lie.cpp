#include "braidlab/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace braidlab {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in Lie arithmetic");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in Lie arithmetic");
  return r;
}

AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly r;
  for (auto& [u, cu] : a)
    for (auto& [v, cv] : b) {
      LWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      int64_t& c = r[w];
      c = checked_add(c, checked_mul(cu, cv));
      if (c == 0) r.erase(w);
    }
  return r;
}

void assoc_add_scaled(AssocPoly& a, const AssocPoly& b, int64_t c) {
  if (c == 0) return;
  for (auto& [w, cw] : b) {
    int64_t& t = a[w];
    t = checked_add(t, checked_mul(cw, c));
    if (t == 0) a.erase(w);
  }
}

LieElement lie_zero(uint32_t alphabet) { return LieElement{alphabet, {}}; }

LieElement lie_gen(uint32_t alphabet, uint8_t letter) {
  if (letter >= alphabet) throw std::invalid_argument("letter out of range");
  LieElement e{alphabet, {}};
  e.terms[{letter}] = 1;
  return e;
}

LieElement lie_scale(const LieElement& a, int64_t c) {
  LieElement r{a.alphabet, {}};
  if (c == 0) return r;
  for (auto& [w, cw] : a.terms) r.terms[w] = checked_mul(cw, c);
  return r;
}

void lie_add_scaled(LieElement& a, const LieElement& b, int64_t c) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("alphabet mismatch");
  if (c == 0) return;
  for (auto& [w, cw] : b.terms) {
    int64_t& t = a.terms[w];
    t = checked_add(t, checked_mul(cw, c));
    if (t == 0) a.terms.erase(w);
  }
}

LieElement lie_add(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  lie_add_scaled(r, b, 1);
  return r;
}

const AssocPoly& lyndon_expansion(const LWord& w) {
  static std::map<LWord, AssocPoly> memo;
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  AssocPoly p;
  if (w.size() == 1) {
    p[w] = 1;
  } else {
    auto [u, v] = standard_factorization(w);
    const AssocPoly& pu = lyndon_expansion(u);
    const AssocPoly& pv = lyndon_expansion(v);
    p = assoc_mul(pu, pv);
    assoc_add_scaled(p, assoc_mul(pv, pu), -1);
  }
  return memo.emplace(w, std::move(p)).first->second;
}

LieElement lie_from_assoc(uint32_t alphabet, const AssocPoly& p) {
  LieElement out{alphabet, {}};
  AssocPoly rest = p;
  while (!rest.empty()) {
    // Lyndon expansions are triangular: sigma(w) = w + (lex-greater words),
    // so peeling the least word is exact.
    LWord w = rest.begin()->first;
    int64_t c = rest.begin()->second;
    if (!is_lyndon(w))
      throw std::invalid_argument("polynomial is not a Lie element");
    assoc_add_scaled(rest, lyndon_expansion(w), -c);
    int64_t& t = out.terms[w];
    t = checked_add(t, c);
    if (t == 0) out.terms.erase(w);
  }
  return out;
}

AssocPoly lie_to_assoc(const LieElement& a) {
  AssocPoly p;
  for (auto& [w, c] : a.terms) assoc_add_scaled(p, lyndon_expansion(w), c);
  return p;
}

namespace {

// bracket of two Lyndon basis elements, memoized per alphabet
const LieElement& basis_bracket(uint32_t alphabet, const LWord& u,
                                const LWord& v) {
  static std::map<std::tuple<uint32_t, LWord, LWord>, LieElement> memo;
  auto key = std::make_tuple(alphabet, u, v);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  AssocPoly p = assoc_mul(lyndon_expansion(u), lyndon_expansion(v));
  assoc_add_scaled(p, assoc_mul(lyndon_expansion(v), lyndon_expansion(u)), -1);
  LieElement r = lie_from_assoc(alphabet, p);
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("alphabet mismatch");
  LieElement r{a.alphabet, {}};
  for (auto& [u, cu] : a.terms)
    for (auto& [v, cv] : b.terms) {
      if (u == v) continue;
      lie_add_scaled(r, basis_bracket(a.alphabet, u, v),
                     checked_mul(cu, cv));
    }
  return r;
}

LieElement lie_left_normed(uint32_t alphabet, const LWord& letters) {
  if (letters.empty()) return lie_zero(alphabet);
  LieElement e = lie_gen(alphabet, letters[0]);
  for (size_t i = 1; i < letters.size(); i++)
    e = lie_bracket(e, lie_gen(alphabet, letters[i]));
  return e;
}

LieElement lie_degree_part(const LieElement& a, uint32_t deg) {
  LieElement r{a.alphabet, {}};
  for (auto& [w, c] : a.terms)
    if (w.size() == deg) r.terms[w] = c;
  return r;
}

uint32_t lie_max_degree(const LieElement& a) {
  uint32_t d = 0;
  for (auto& [w, c] : a.terms)
    if (w.size() > d) d = uint32_t(w.size());
  return d;
}

namespace {

LieElement substitute_word(const LWord& w, const std::vector<LieElement>& imgs) {
  if (w.size() == 1) return imgs[w[0]];
  auto [u, v] = standard_factorization(w);
  return lie_bracket(substitute_word(u, imgs), substitute_word(v, imgs));
}

}  // namespace

LieElement lie_substitute(const LieElement& a,
                          const std::vector<LieElement>& images) {
  if (images.size() < a.alphabet)
    throw std::invalid_argument("need an image per letter");
  uint32_t target = images.empty() ? a.alphabet : images[0].alphabet;
  LieElement r = lie_zero(target);
  for (auto& [w, c] : a.terms)
    lie_add_scaled(r, substitute_word(w, images), c);
  return r;
}

std::string lie_str(const LieElement& a,
                    const std::vector<std::string>& letter_names) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [w, c] : a.terms) {
    if (!first) out << (c >= 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    int64_t ac = c < 0 ? -c : c;
    if (ac != 1) out << ac << "*";
    out << "[";
    for (size_t i = 0; i < w.size(); i++) {
      if (i) out << ".";
      out << (w[i] < letter_names.size() ? letter_names[w[i]]
                                         : std::to_string(w[i]));
    }
    out << "]";
  }
  return out.str();
}

}  // namespace braidlab
