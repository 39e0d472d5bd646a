#include "braidlab/braid.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace braidlab {

BraidWord braid_one(uint32_t strands) { return BraidWord{strands, {}}; }

BraidWord braid_sigma(uint32_t strands, uint32_t i, int64_t exp) {
  if (i < 1 || i + 1 > strands)
    throw std::invalid_argument("sigma index out of range");
  BraidWord b{strands, {}};
  if (exp != 0) b.letters.push_back({BraidLetter::Sigma, i, 0, 0, exp});
  return b;
}

BraidWord braid_agen(uint32_t strands, uint32_t r, uint32_t s, int64_t exp) {
  if (!(1 <= r && r < s && s <= strands))
    throw std::invalid_argument("A-generator indices out of range");
  BraidWord b{strands, {}};
  if (exp != 0) b.letters.push_back({BraidLetter::AGen, 0, r, s, exp});
  return b;
}

void braid_push(BraidWord& b, const BraidLetter& l) {
  if (l.exp == 0) return;
  if (!b.letters.empty() && b.letters.back().same_base(l)) {
    b.letters.back().exp += l.exp;
    if (b.letters.back().exp == 0) b.letters.pop_back();
    return;
  }
  b.letters.push_back(l);
}

BraidWord braid_mul(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("strand count mismatch");
  BraidWord r = a;
  for (auto& l : b.letters) braid_push(r, l);
  return r;
}

BraidWord braid_inv(const BraidWord& a) {
  BraidWord r{a.strands, {}};
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
    BraidLetter l = *it;
    l.exp = -l.exp;
    r.letters.push_back(l);
  }
  return r;
}

BraidWord braid_pow(const BraidWord& a, int64_t k) {
  BraidWord r = braid_one(a.strands);
  BraidWord base = k >= 0 ? a : braid_inv(a);
  if (k < 0) k = -k;
  for (int64_t i = 0; i < k; i++) r = braid_mul(r, base);
  return r;
}

size_t braid_length(const BraidWord& b) {
  size_t n = 0;
  for (auto& l : b.letters) n += size_t(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

BraidWord parse_braid(const std::string& text, uint32_t strands) {
  BraidWord b{strands, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    char c = char(std::tolower(tok[0]));
    size_t caret = tok.find('^');
    std::string core =
        tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    int64_t exp = 1;
    if (caret != std::string::npos) exp = std::stoll(tok.substr(caret + 1));
    if (c == 's') {
      uint32_t i = uint32_t(std::stoul(core.substr(1)));
      BraidWord l = braid_sigma(strands, i, exp);
      for (auto& x : l.letters) braid_push(b, x);
    } else if (c == 'a') {
      // A[r,s]
      size_t lb = core.find('['), comma = core.find(','), rb = core.find(']');
      if (lb == std::string::npos || comma == std::string::npos ||
          rb == std::string::npos)
        throw std::invalid_argument("bad braid token: " + tok);
      uint32_t r = uint32_t(std::stoul(core.substr(lb + 1, comma - lb - 1)));
      uint32_t s = uint32_t(std::stoul(core.substr(comma + 1, rb - comma - 1)));
      BraidWord l = braid_agen(strands, r, s, exp);
      for (auto& x : l.letters) braid_push(b, x);
    } else {
      throw std::invalid_argument("bad braid token: " + tok);
    }
  }
  return b;
}

std::string braid_str(const BraidWord& b) {
  if (b.letters.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto& l : b.letters) {
    if (!first) out << ' ';
    first = false;
    if (l.kind == BraidLetter::Sigma)
      out << 's' << l.i;
    else
      out << "A[" << l.r << ',' << l.s << ']';
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

FreeAutomorphism FreeAutomorphism::identity(uint32_t rank) {
  FreeAutomorphism f;
  f.rank = rank;
  f.images.reserve(rank);
  for (uint32_t i = 1; i <= rank; i++) f.images.push_back(word_gen(i));
  return f;
}

bool FreeAutomorphism::is_identity() const {
  for (uint32_t i = 0; i < rank; i++)
    if (images[i] != word_gen(i + 1)) return false;
  return true;
}

Word FreeAutomorphism::apply(const Word& w) const {
  Word r;
  for (auto& [g, e] : w.syl) {
    if (g > rank) throw std::invalid_argument("word exceeds automorphism rank");
    const Word& img = images[g - 1];
    Word part = e >= 0 ? img : word_inv(img);
    int64_t n = e < 0 ? -e : e;
    for (int64_t i = 0; i < n; i++) r = word_mul(r, part);
  }
  return r;
}

FreeAutomorphism FreeAutomorphism::then(const FreeAutomorphism& other) const {
  if (rank != other.rank) throw std::invalid_argument("rank mismatch");
  FreeAutomorphism f;
  f.rank = rank;
  f.images.reserve(rank);
  for (auto& w : images) f.images.push_back(other.apply(w));
  return f;
}

FreeAutomorphism sigma_action(uint32_t i, bool inverse, uint32_t n) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("sigma index out of range");
  FreeAutomorphism f = FreeAutomorphism::identity(n);
  Word xi = word_gen(i), xj = word_gen(i + 1);
  if (!inverse) {
    f.images[i - 1] = xj;                                    // x_i -> x_{i+1}
    f.images[i] = word_mul(word_mul(word_inv(xj), xi), xj);  // x_{i+1}^{-1} x_i x_{i+1}
  } else {
    f.images[i - 1] = word_mul(word_mul(xi, xj), word_inv(xi));  // x_i x_{i+1} x_i^{-1}
    f.images[i] = xi;
  }
  return f;
}

namespace {

// per-letter automorphisms, memoized across the process
const FreeAutomorphism& letter_action(const BraidLetter& l, uint32_t n) {
  bool inv = l.exp < 0;
  auto key = std::make_tuple(uint8_t(l.kind), l.i, l.r, l.s, inv);
  static std::map<uint32_t,
                  std::map<std::tuple<uint8_t, uint32_t, uint32_t, uint32_t, bool>,
                           FreeAutomorphism>>
      memo_by_rank;
  auto& m = memo_by_rank[n];
  auto it = m.find(key);
  if (it != m.end()) return it->second;

  FreeAutomorphism f;
  if (l.kind == BraidLetter::Sigma) {
    f = sigma_action(l.i, inv, n);
  } else {
    BraidWord expansion = a_generator(l.r, l.s, n);
    if (inv) expansion = braid_inv(expansion);
    f = FreeAutomorphism::identity(n);
    for (auto& sl : expansion.letters) {
      FreeAutomorphism base = sigma_action(sl.i, sl.exp < 0, n);
      int64_t cnt = sl.exp < 0 ? -sl.exp : sl.exp;
      for (int64_t c = 0; c < cnt; c++) f = f.then(base);
    }
  }
  return m.emplace(key, std::move(f)).first->second;
}

}  // namespace

FreeAutomorphism artin_action(const BraidWord& b) {
  FreeAutomorphism f = FreeAutomorphism::identity(b.strands);
  for (auto& l : b.letters) {
    const FreeAutomorphism& base = letter_action(l, b.strands);
    int64_t cnt = l.exp < 0 ? -l.exp : l.exp;
    for (int64_t c = 0; c < cnt; c++) f = f.then(base);
  }
  return f;
}

std::vector<uint32_t> braid_permutation(const BraidWord& b) {
  std::vector<uint32_t> p(b.strands);
  for (uint32_t i = 0; i < b.strands; i++) p[i] = i;
  for (auto& l : b.letters) {
    if (l.kind == BraidLetter::AGen) continue;  // pure
    if (l.exp % 2 == 0) continue;
    std::swap(p[l.i - 1], p[l.i]);
  }
  return p;
}

bool is_pure(const BraidWord& b) {
  auto p = braid_permutation(b);
  for (uint32_t i = 0; i < b.strands; i++)
    if (p[i] != i) return false;
  return true;
}

int64_t exponent_sum(const BraidWord& b) {
  int64_t s = 0;
  for (auto& l : b.letters)
    s += l.exp * (l.kind == BraidLetter::AGen ? 2 : 1);  // A_{r,s} ~ sigma_r^2
  return s;
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands)
    throw std::invalid_argument("strand count mismatch");
  if (braid_permutation(u) != braid_permutation(v)) return false;
  return artin_action(u) == artin_action(v);
}

BraidWord a_generator(uint32_t r, uint32_t s, uint32_t n) {
  if (!(1 <= r && r < s && s <= n))
    throw std::invalid_argument("A-generator indices out of range");
  BraidWord alpha = braid_one(n);
  for (uint32_t i = s - 1; i >= r + 1; i--) {
    braid_push(alpha, {BraidLetter::Sigma, i, 0, 0, 1});
    if (i == r + 1) break;  // unsigned loop guard
  }
  BraidWord core = braid_sigma(n, r, 2);
  return braid_mul(braid_mul(alpha, core), braid_inv(alpha));
}

Word agen_image(uint32_t i, uint32_t k, uint32_t j) {
  Word xi = word_gen(i), xk = word_gen(k), xj = word_gen(j);
  if (j < i || k < j) return xj;
  if (j == i) return word_mul(xi, commutator(xi, xk));
  if (j == k) return word_mul(commutator(xk, xi), xk);
  return word_mul(xj, commutator(xj, commutator(xi, xk)));  // i < j < k
}

BraidWord word_to_agen_braid(const Word& w, uint32_t n) {
  BraidWord b = braid_one(n + 1);
  for (auto& [g, e] : w.syl) {
    if (g > n) throw std::invalid_argument("word index exceeds n");
    braid_push(b, {BraidLetter::AGen, 0, g, n + 1, e});
  }
  return b;
}

BraidWord random_pure_braid(Rng& rng, uint32_t strands, uint32_t len) {
  BraidWord b = braid_one(strands);
  while (braid_length(b) < len) {
    uint32_t r = uint32_t(1 + rng.next(strands - 1));
    uint32_t s = uint32_t(r + 1 + rng.next(strands - r));
    braid_push(b, {BraidLetter::AGen, 0, r, s, rng.pick_sign()});
  }
  return b;
}

Suite verify_braid_relations(uint32_t n) {
  Suite suite{"braid-relations(n=" + std::to_string(n) + ")"};
  for (uint32_t i = 1; i + 1 < n; i++)
    for (uint32_t j = i + 2; j < n; j++) {
      BraidWord lhs = braid_mul(braid_sigma(n, i), braid_sigma(n, j));
      BraidWord rhs = braid_mul(braid_sigma(n, j), braid_sigma(n, i));
      suite.record("commuting", "s" + std::to_string(i) + ",s" + std::to_string(j),
                   braids_equal(lhs, rhs));
    }
  for (uint32_t i = 1; i + 1 <= n - 1; i++) {
    BraidWord lhs = braid_mul(
        braid_mul(braid_sigma(n, i), braid_sigma(n, i + 1)), braid_sigma(n, i));
    BraidWord rhs = braid_mul(
        braid_mul(braid_sigma(n, i + 1), braid_sigma(n, i)), braid_sigma(n, i + 1));
    suite.record("braid", "s" + std::to_string(i), braids_equal(lhs, rhs));
  }
  return suite;
}

namespace {

std::string tup(std::initializer_list<uint32_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x);
  }
  return s + ")";
}

BraidWord A(uint32_t n, uint32_t r, uint32_t s, int64_t e = 1) {
  return braid_agen(n, r, s, e);
}

BraidWord comm(const BraidWord& a, const BraidWord& b) {
  return braid_mul(braid_mul(braid_inv(a), braid_inv(b)), braid_mul(a, b));
}

}  // namespace

Suite verify_pn_relations(uint32_t n) {
  Suite suite{"pn-relations(n=" + std::to_string(n) + ")"};
  auto conj = [&](const BraidWord& g, const BraidWord& x) {
    return braid_mul(braid_mul(g, x), braid_inv(g));
  };
  // conjugation form
  for (uint32_t r = 1; r <= n; r++)
    for (uint32_t s = r + 1; s <= n; s++)
      for (uint32_t i = 1; i <= n; i++)
        for (uint32_t k = i + 1; k <= n; k++) {
          if (s < i || k < r) {
            suite.record("conj-1", tup({r, s, i, k}),
                         braids_equal(conj(A(n, r, s), A(n, i, k)), A(n, i, k)));
          }
        }
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t k = i + 1; k <= n; k++)
      for (uint32_t s = k + 1; s <= n; s++) {
        BraidWord lhs = conj(A(n, k, s), A(n, i, k));
        BraidWord rhs = braid_mul(braid_mul(A(n, i, s, -1), A(n, i, k)), A(n, i, s));
        suite.record("conj-2", tup({i, k, s}), braids_equal(lhs, rhs));
      }
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t r = i + 1; r <= n; r++)
      for (uint32_t k = r + 1; k <= n; k++) {
        BraidWord lhs = conj(A(n, r, k), A(n, i, k));
        BraidWord rhs = braid_mul(
            braid_mul(braid_mul(A(n, i, k, -1), A(n, i, r, -1)), A(n, i, k)),
            braid_mul(A(n, i, r), A(n, i, k)));
        suite.record("conj-3", tup({i, r, k}), braids_equal(lhs, rhs));
      }
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t r = i + 1; r <= n; r++)
      for (uint32_t k = r + 1; k <= n; k++)
        for (uint32_t s = k + 1; s <= n; s++) {
          BraidWord lhs = conj(A(n, r, s), A(n, i, k));
          BraidWord rhs = A(n, i, s, -1);
          rhs = braid_mul(rhs, A(n, i, r, -1));
          rhs = braid_mul(rhs, A(n, i, s));
          rhs = braid_mul(rhs, A(n, i, r));
          rhs = braid_mul(rhs, A(n, i, k));
          rhs = braid_mul(rhs, A(n, i, r, -1));
          rhs = braid_mul(rhs, A(n, i, s, -1));
          rhs = braid_mul(rhs, A(n, i, r));
          rhs = braid_mul(rhs, A(n, i, s));
          suite.record("conj-4", tup({i, r, k, s}), braids_equal(lhs, rhs));
        }
  // commutator form
  for (uint32_t r = 1; r <= n; r++)
    for (uint32_t s = r + 1; s <= n; s++)
      for (uint32_t i = 1; i <= n; i++)
        for (uint32_t k = i + 1; k <= n; k++)
          if (s < i || k < r)
            suite.record("comm-1", tup({i, k, r, s}),
                         braids_equal(comm(A(n, i, k), A(n, r, s)),
                                      braid_one(n)));
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t k = i + 1; k <= n; k++)
      for (uint32_t s = k + 1; s <= n; s++)
        suite.record("comm-2", tup({i, k, s}),
                     braids_equal(comm(A(n, i, k), A(n, k, s, -1)),
                                  comm(A(n, i, k), A(n, i, s))));
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t r = i + 1; r <= n; r++)
      for (uint32_t k = r + 1; k <= n; k++)
        suite.record("comm-3", tup({i, r, k}),
                     braids_equal(comm(A(n, r, k, -1), A(n, i, k, -1)),
                                  comm(A(n, i, k), A(n, i, r))));
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t r = i + 1; r <= n; r++)
      for (uint32_t k = r + 1; k <= n; k++)
        for (uint32_t s = k + 1; s <= n; s++)
          suite.record(
              "comm-4", tup({i, r, k, s}),
              braids_equal(comm(A(n, i, k), A(n, r, s, -1)),
                           comm(A(n, i, k), comm(A(n, i, r), A(n, i, s)))));
  return suite;
}

Suite conjugation_formula_check(uint32_t n) {
  Suite suite{"conjugation-formula(n=" + std::to_string(n) + ")"};
  uint32_t N = n + 1;
  // sigma_i^{-1} A_{j,n+1} sigma_i = A(sigma_i^{-1})(A_{j,n+1})
  for (uint32_t i = 1; i <= n - 1; i++)
    for (uint32_t j = 1; j <= n; j++) {
      BraidWord lhs = braid_mul(
          braid_mul(braid_sigma(N, i, -1), A(N, j, n + 1)), braid_sigma(N, i));
      Word img = sigma_action(i, true, n).apply(word_gen(j));
      BraidWord rhs = word_to_agen_braid(img, n);
      suite.record("sigma", tup({i, j}), braids_equal(lhs, rhs));
    }
  // A_{r,s}^{-1} A_{j,n+1} A_{r,s} = A(A_{r,s}^{-1})(A_{j,n+1})
  for (uint32_t r = 1; r <= n; r++)
    for (uint32_t s = r + 1; s <= n; s++)
      for (uint32_t j = 1; j <= n; j++) {
        BraidWord lhs = braid_mul(
            braid_mul(A(N, r, s, -1), A(N, j, n + 1)), A(N, r, s));
        Word img = artin_action(braid_agen(n, r, s, -1)).apply(word_gen(j));
        BraidWord rhs = word_to_agen_braid(img, n);
        suite.record("agen", tup({r, s, j}), braids_equal(lhs, rhs));
      }
  return suite;
}

}  // namespace braidlab
