#include "braidlab/kohno.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace braidlab {

bool KohnoElement::is_zero() const {
  for (auto& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

KohnoElement ke_zero(uint32_t k) {
  if (k < 2) throw std::invalid_argument("need at least two strands");
  KohnoElement e;
  e.strands = k;
  e.comp.reserve(k - 1);
  for (uint32_t m = 2; m <= k; m++) e.comp.push_back(lie_zero(m - 1));
  return e;
}

KohnoElement ke_generator(uint32_t i, uint32_t j, uint32_t k) {
  if (!(1 <= i && i < j && j <= k))
    throw std::invalid_argument("generator indices out of range");
  KohnoElement e = ke_zero(k);
  e.comp[j - 2] = lie_gen(j - 1, uint8_t(i - 1));
  return e;
}

KohnoElement ke_scale(const KohnoElement& a, int64_t c) {
  KohnoElement r = a;
  for (auto& x : r.comp) x = lie_scale(x, c);
  return r;
}

void ke_add_scaled(KohnoElement& a, const KohnoElement& b, int64_t c) {
  if (a.strands != b.strands) throw std::invalid_argument("strand mismatch");
  for (size_t i = 0; i < a.comp.size(); i++)
    lie_add_scaled(a.comp[i], b.comp[i], c);
}

KohnoElement ke_add(const KohnoElement& a, const KohnoElement& b) {
  KohnoElement r = a;
  ke_add_scaled(r, b, 1);
  return r;
}

namespace {

LieElement basis_elem(uint32_t alphabet, const LWord& w) {
  LieElement e{alphabet, {}};
  e.terms[w] = 1;
  return e;
}

// Derivation of the generator B_{s,msrc} on the level-mtgt basis word v,
// msrc < mtgt.  On generators:
//   B_{i,mtgt} -> 0                          if i not in {s, msrc}
//   B_{s,mtgt} -> [B_{s,mtgt}, B_{msrc,mtgt}]
//   B_{msrc,mtgt} -> [B_{msrc,mtgt}, B_{s,mtgt}]
// (both from the infinitesimal braid relations), extended as a derivation.
const LieElement& gen_derive(uint32_t s, uint32_t msrc, const LWord& v,
                             uint32_t mtgt) {
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t, LWord>, LieElement>
      memo;
  auto key = std::make_tuple(s, msrc, mtgt, v);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  uint32_t alph = mtgt - 1;
  LieElement r = lie_zero(alph);
  if (v.size() == 1) {
    uint32_t i = uint32_t(v[0]) + 1;
    if (i == s)
      r = lie_bracket(lie_gen(alph, uint8_t(s - 1)),
                      lie_gen(alph, uint8_t(msrc - 1)));
    else if (i == msrc)
      r = lie_bracket(lie_gen(alph, uint8_t(msrc - 1)),
                      lie_gen(alph, uint8_t(s - 1)));
  } else {
    auto [a, b] = standard_factorization(v);
    r = lie_add(lie_bracket(gen_derive(s, msrc, a, mtgt), basis_elem(alph, b)),
                lie_bracket(basis_elem(alph, a), gen_derive(s, msrc, b, mtgt)));
  }
  return memo.emplace(key, std::move(r)).first->second;
}

LieElement act_letter(uint32_t s, uint32_t msrc, const LieElement& t,
                      uint32_t mtgt) {
  LieElement r = lie_zero(mtgt - 1);
  for (auto& [v, c] : t.terms)
    lie_add_scaled(r, gen_derive(s, msrc, v, mtgt), c);
  return r;
}

// ad of the level-msrc basis word w on a level-mtgt element
LieElement act_word(const LWord& w, uint32_t msrc, const LieElement& t,
                    uint32_t mtgt) {
  if (w.size() == 1) return act_letter(uint32_t(w[0]) + 1, msrc, t, mtgt);
  auto [a, b] = standard_factorization(w);
  LieElement bt = act_word(b, msrc, t, mtgt);
  LieElement at = act_word(a, msrc, t, mtgt);
  LieElement r = act_word(a, msrc, bt, mtgt);
  lie_add_scaled(r, act_word(b, msrc, at, mtgt), -1);
  return r;
}

LieElement act(const LieElement& src, uint32_t msrc, const LieElement& tgt,
               uint32_t mtgt) {
  LieElement r = lie_zero(mtgt - 1);
  for (auto& [w, c] : src.terms)
    lie_add_scaled(r, act_word(w, msrc, tgt, mtgt), c);
  return r;
}

}  // namespace

KohnoElement ke_bracket(const KohnoElement& a, const KohnoElement& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand mismatch");
  KohnoElement r = ke_zero(a.strands);
  for (uint32_t ma = 2; ma <= a.strands; ma++) {
    const LieElement& am = a.comp[ma - 2];
    if (am.is_zero()) continue;
    for (uint32_t mb = 2; mb <= b.strands; mb++) {
      const LieElement& bm = b.comp[mb - 2];
      if (bm.is_zero()) continue;
      if (ma == mb)
        lie_add_scaled(r.comp[ma - 2], lie_bracket(am, bm), 1);
      else if (ma < mb)
        lie_add_scaled(r.comp[mb - 2], act(am, ma, bm, mb), 1);
      else
        lie_add_scaled(r.comp[ma - 2], act(bm, mb, am, ma), -1);
    }
  }
  return r;
}

KohnoElement ke_degree_part(const KohnoElement& a, uint32_t deg) {
  KohnoElement r = a;
  for (auto& c : r.comp) c = lie_degree_part(c, deg);
  return r;
}

uint32_t ke_max_degree(const KohnoElement& a) {
  uint32_t d = 0;
  for (auto& c : a.comp) d = std::max(d, lie_max_degree(c));
  return d;
}

std::string ke_str(const KohnoElement& a) {
  std::ostringstream out;
  bool any = false;
  for (uint32_t m = 2; m <= a.strands; m++) {
    const LieElement& c = a.comp[m - 2];
    if (c.is_zero()) continue;
    std::vector<std::string> names;
    for (uint32_t i = 1; i < m; i++)
      names.push_back("B[" + std::to_string(i) + "," + std::to_string(m) + "]");
    if (any) out << " + ";
    any = true;
    out << lie_str(c, names);
  }
  return any ? out.str() : "0";
}

KExpr KExpr::gen(uint32_t i, uint32_t j) {
  KExpr e;
  e.kind = Gen;
  e.i = i;
  e.j = j;
  return e;
}
KExpr KExpr::sum(std::vector<KExpr> xs) {
  KExpr e;
  e.kind = Sum;
  e.args = std::move(xs);
  return e;
}
KExpr KExpr::scale(int64_t c, KExpr x) {
  KExpr e;
  e.kind = Scale;
  e.c = c;
  e.args.push_back(std::move(x));
  return e;
}
KExpr KExpr::bracket(KExpr a, KExpr b) {
  KExpr e;
  e.kind = Bracket;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

namespace {

struct KParser {
  std::string s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(uint8_t(s[pos]))) pos++;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
  }
  int64_t number() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) pos++;
    while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) pos++;
    if (start == pos) throw std::invalid_argument("expected a number");
    return std::stoll(s.substr(start, pos - start));
  }

  KExpr expr() {
    std::vector<KExpr> terms;
    skip();
    int64_t sign = 1;
    if (eat('-')) sign = -1;
    terms.push_back(KExpr::scale(sign, term()));
    while (true) {
      skip();
      if (eat('+'))
        terms.push_back(term());
      else if (eat('-'))
        terms.push_back(KExpr::scale(-1, term()));
      else
        break;
    }
    return terms.size() == 1 ? std::move(terms[0])
                             : KExpr::sum(std::move(terms));
  }

  KExpr term() {
    skip();
    if (pos < s.size() && std::isdigit(uint8_t(s[pos]))) {
      int64_t c = number();
      skip();
      if (eat('*')) return KExpr::scale(c, factor());
      throw std::invalid_argument("bare scalar has no meaning here");
    }
    return factor();
  }

  KExpr factor() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end");
    char c = s[pos];
    if (c == 'B' || c == 'b') {
      pos++;
      expect('[');
      int64_t i = number();
      expect(',');
      int64_t j = number();
      expect(']');
      return KExpr::gen(uint32_t(i), uint32_t(j));
    }
    if (c == '[') {
      pos++;
      KExpr a = expr();
      expect(',');
      KExpr b = expr();
      expect(']');
      return KExpr::bracket(std::move(a), std::move(b));
    }
    if (c == '(') {
      pos++;
      KExpr a = expr();
      expect(')');
      return a;
    }
    throw std::invalid_argument(std::string("unexpected character '") + c +
                                "'");
  }
};

}  // namespace

KExpr parse_kexpr(const std::string& text) {
  KParser p{text};
  KExpr e = p.expr();
  p.skip();
  if (p.pos != p.s.size())
    throw std::invalid_argument("trailing input in expression");
  return e;
}

KohnoElement kohno_normalize(const KExpr& e, uint32_t strands) {
  switch (e.kind) {
    case KExpr::Gen:
      return ke_generator(e.i, e.j, strands);
    case KExpr::Sum: {
      KohnoElement r = ke_zero(strands);
      for (auto& a : e.args) ke_add_scaled(r, kohno_normalize(a, strands), 1);
      return r;
    }
    case KExpr::Scale:
      return ke_scale(kohno_normalize(e.args[0], strands), e.c);
    case KExpr::Bracket:
      return ke_bracket(kohno_normalize(e.args[0], strands),
                        kohno_normalize(e.args[1], strands));
  }
  throw std::logic_error("bad expression node");
}

size_t kohno_dim(uint32_t k, uint32_t d) {
  if (k < 2 || d < 1) throw std::invalid_argument("need k >= 2, d >= 1");
  size_t out = 0;
  for (uint32_t m = 2; m <= k; m++) out += witt_number(m - 1, d);
  return out;
}

KohnoElement lambda_elem(uint32_t n) {
  KohnoElement r = ke_zero(n + 1);
  for (uint32_t i = 1; i <= n; i++)
    ke_add_scaled(r, ke_generator(i, n + 1, n + 1), 1);
  return r;
}

KohnoElement gamma_elem(uint32_t q, uint32_t n) {
  if (!(2 <= q && q <= n)) throw std::invalid_argument("need 2 <= q <= n");
  KohnoElement r = ke_zero(n + 1);
  for (uint32_t i = n - q + 2; i <= n; i++)
    ke_add_scaled(r, ke_generator(i, n + 1, n + 1), -1);
  return r;
}

KohnoElement theta_x(uint32_t q, uint32_t n) {
  if (!(1 <= q && q <= n)) throw std::invalid_argument("need 1 <= q <= n");
  KohnoElement r = ke_zero(n + 1);
  for (uint32_t i = 1; i <= n - q + 1; i++)
    for (uint32_t j = n - q + 2; j <= n + 1; j++)
      ke_add_scaled(r, ke_generator(i, j, n + 1), 1);
  return r;
}

namespace {

const KohnoElement& theta_basis_image(uint32_t n, const LWord& w) {
  static std::map<std::pair<uint32_t, LWord>, KohnoElement> memo;
  auto key = std::make_pair(n, w);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  KohnoElement r = ke_zero(n + 1);
  if (w.size() == 1) {
    r = theta_x(uint32_t(w[0]) + 1, n);
  } else {
    auto [a, b] = standard_factorization(w);
    r = ke_bracket(theta_basis_image(n, a), theta_basis_image(n, b));
  }
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

KohnoElement theta_graded(uint32_t n, const LieElement& a) {
  if (a.alphabet != n) throw std::invalid_argument("alphabet must equal n");
  KohnoElement r = ke_zero(n + 1);
  for (auto& [w, c] : a.terms)
    ke_add_scaled(r, theta_basis_image(n, w), c);
  return r;
}

KohnoElement ke_degeneracy1(uint32_t t, const KohnoElement& a) {
  KohnoElement r = ke_zero(a.strands + 1);
  for (uint32_t m = 2; m <= a.strands; m++) {
    for (auto& [w, c] : a.comp[m - 2].terms) {
      if (w.size() != 1)
        throw std::invalid_argument(
            "graded degeneracy implemented on degree-1 elements only");
      uint32_t i = uint32_t(w[0]) + 1, j = m, u = t + 1;
      if (u < i) {
        ke_add_scaled(r, ke_generator(i + 1, j + 1, a.strands + 1), c);
      } else if (u == i) {
        ke_add_scaled(r, ke_generator(i, j + 1, a.strands + 1), c);
        ke_add_scaled(r, ke_generator(i + 1, j + 1, a.strands + 1), c);
      } else if (u < j) {
        ke_add_scaled(r, ke_generator(i, j + 1, a.strands + 1), c);
      } else if (u == j) {
        ke_add_scaled(r, ke_generator(i, j, a.strands + 1), c);
        ke_add_scaled(r, ke_generator(i, j + 1, a.strands + 1), c);
      } else {
        ke_add_scaled(r, ke_generator(i, j, a.strands + 1), c);
      }
    }
  }
  return r;
}

KohnoElement ke_face_top(const KohnoElement& a) {
  if (a.strands < 3) throw std::invalid_argument("cannot drop below 2 strands");
  KohnoElement r = ke_zero(a.strands - 1);
  for (uint32_t m = 2; m < a.strands; m++) r.comp[m - 2] = a.comp[m - 2];
  return r;
}

namespace {

bool ke_zero_mod(const KohnoElement& a, uint64_t mod) {
  if (mod == 0) return a.is_zero();
  for (auto& c : a.comp)
    for (auto& [w, v] : c.terms)
      if (v % int64_t(mod) != 0) return false;
  return true;
}

}  // namespace

Suite infinitesimal_relations_check(uint32_t k, uint64_t mod) {
  Suite suite{"infinitesimal-relations(k=" + std::to_string(k) +
              (mod ? ",mod=" + std::to_string(mod) : "") + ")"};
  auto B = [&](uint32_t i, uint32_t j) { return ke_generator(i, j, k); };
  // (i) disjoint pairs commute
  for (uint32_t i = 1; i <= k; i++)
    for (uint32_t j = i + 1; j <= k; j++)
      for (uint32_t s = 1; s <= k; s++)
        for (uint32_t t = s + 1; t <= k; t++) {
          if (s == i || s == j || t == i || t == j) continue;
          suite.record("rel-i",
                       "(" + std::to_string(i) + "," + std::to_string(j) +
                           ")(" + std::to_string(s) + "," + std::to_string(t) +
                           ")",
                       ke_zero_mod(ke_bracket(B(i, j), B(s, t)), mod));
        }
  // (ii) [B_{i,j}, B_{i,t} + B_{t,j}] = 0 and (iii) [B_{t,j}, B_{i,j} + B_{i,t}] = 0
  for (uint32_t i = 1; i <= k; i++)
    for (uint32_t t = i + 1; t <= k; t++)
      for (uint32_t j = t + 1; j <= k; j++) {
        std::string id = "(" + std::to_string(i) + "," + std::to_string(t) +
                         "," + std::to_string(j) + ")";
        suite.record("rel-ii", id,
                     ke_zero_mod(ke_bracket(B(i, j), ke_add(B(i, t), B(t, j))),
                                 mod));
        suite.record("rel-iii", id,
                     ke_zero_mod(ke_bracket(B(t, j), ke_add(B(i, j), B(i, t))),
                                 mod));
        // derived identities: [B_{j',k'}+B_{t',k'}, B_{j',t'}] = 0 and
        // [B_{j',t'}, B_{t',k'}] = [B_{t',k'}, B_{j',k'}] with (j',t',k') = (i,t,j)
        suite.record("derived-sum", id,
                     ke_zero_mod(ke_bracket(ke_add(B(i, j), B(t, j)), B(i, t)),
                                 mod));
        KohnoElement lhs = ke_bracket(B(i, t), B(t, j));
        ke_add_scaled(lhs, ke_bracket(B(t, j), B(i, j)), -1);
        suite.record("derived-swap", id, ke_zero_mod(lhs, mod));
      }
  return suite;
}

bool kohno_rank_consistency(uint32_t k, uint32_t d) {
  size_t target = kohno_dim(k, d);
  // coordinates of the degree-d normal form
  std::vector<std::pair<uint32_t, LWord>> index;
  std::map<std::pair<uint32_t, LWord>, size_t> pos;
  for (uint32_t m = 2; m <= k; m++)
    for (auto& w : lyndon_words(m - 1, d)) {
      pos[{m, w}] = index.size();
      index.push_back({m, w});
    }
  if (index.size() != target) return false;

  std::vector<std::pair<uint32_t, uint32_t>> gens;
  for (uint32_t i = 1; i <= k; i++)
    for (uint32_t j = i + 1; j <= k; j++) gens.push_back({i, j});

  RankTracker tracker(target);
  // left-normed generator bracket words, lexicographic over generator tuples
  std::vector<size_t> tuple(d, 0);
  while (true) {
    KohnoElement e = ke_generator(gens[tuple[0]].first, gens[tuple[0]].second, k);
    for (uint32_t p = 1; p < d; p++)
      e = ke_bracket(
          e, ke_generator(gens[tuple[p]].first, gens[tuple[p]].second, k));
    std::vector<BigRat> v(target, BigRat(0));
    bool nonzero = false;
    for (uint32_t m = 2; m <= k; m++)
      for (auto& [w, c] : e.comp[m - 2].terms) {
        if (w.size() != d) continue;
        v[pos[{m, w}]] = BigRat(c);
        nonzero = true;
      }
    if (nonzero) tracker.add(std::move(v));
    if (tracker.rank() == target) return true;
    // odometer over generator tuples
    size_t p = d;
    while (p > 0) {
      if (++tuple[p - 1] < gens.size()) break;
      tuple[p - 1] = 0;
      p--;
    }
    if (p == 0) break;
  }
  return tracker.rank() == target;
}

Suite theta_identities_check(uint32_t n) {
  Suite suite{"theta-identities(n=" + std::to_string(n) + ")"};
  uint32_t k = n + 1;
  KohnoElement lam = lambda_elem(n);
  auto B = [&](uint32_t i, uint32_t j) { return ke_generator(i, j, k); };

  suite.record("theta-x1", "n=" + std::to_string(n),
               theta_x(1, n) == lam);
  // (a) [Lambda_n, B_{i,j}] = 0 for j < n+1
  for (uint32_t i = 1; i <= n; i++)
    for (uint32_t j = i + 1; j <= n; j++)
      suite.record("lambda-bracket",
                   "(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   ke_bracket(lam, B(i, j)).is_zero());
  // (b) [gamma_p, theta(x_q)] = 0 for 2 <= p <= q <= n
  for (uint32_t p = 2; p <= n; p++)
    for (uint32_t q = p; q <= n; q++)
      suite.record("gamma-theta",
                   "(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")",
                   ke_bracket(gamma_elem(p, n), theta_x(q, n)).is_zero());
  // (c) theta(x_q) = Lambda + gamma_q + sum_{i <= n-q+1 < j <= n} B_{i,j}
  for (uint32_t q = 2; q <= n; q++) {
    KohnoElement rhs = ke_add(lam, gamma_elem(q, n));
    for (uint32_t i = 1; i <= n - q + 1; i++)
      for (uint32_t j = n - q + 2; j <= n; j++)
        ke_add_scaled(rhs, B(i, j), 1);
    suite.record("theta-decomposition", "q=" + std::to_string(q),
                 theta_x(q, n) == rhs);
  }
  // (d) [gamma_j, theta(x_i)] = [gamma_j,Lam] + [Lam,gamma_i] + 2[gamma_j,gamma_i]
  for (uint32_t i = 2; i <= n; i++)
    for (uint32_t j = i + 1; j <= n; j++) {
      KohnoElement gj = gamma_elem(j, n), gi = gamma_elem(i, n);
      KohnoElement lhs = ke_bracket(gj, theta_x(i, n));
      KohnoElement rhs = ke_bracket(gj, lam);
      ke_add_scaled(rhs, ke_bracket(lam, gi), 1);
      ke_add_scaled(rhs, ke_bracket(gj, gi), 2);
      suite.record("gamma-theta-expansion",
                   "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")",
                   lhs == rhs);
    }
  // (e) [sum_i B_{i,n+1}, sum_{j<=r} B_{j,m}] = 0 for 1 <= r < m < n+1
  for (uint32_t m = 2; m <= n; m++)
    for (uint32_t r = 1; r < m; r++) {
      KohnoElement s2 = ke_zero(k);
      for (uint32_t j = 1; j <= r; j++) ke_add_scaled(s2, B(j, m), 1);
      suite.record("lambda-partial-sum",
                   "(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ")",
                   ke_bracket(lam, s2).is_zero());
    }
  // degeneracy values: s_j Lambda_n = Lambda_{n+1} and the gamma case split,
  // valid for 0 <= j <= n-1
  for (uint32_t t = 0; t + 1 <= n; t++) {
    suite.record("degeneracy-lambda", "t=" + std::to_string(t),
                 ke_degeneracy1(t, lam) == lambda_elem(n + 1));
    for (uint32_t q = 2; q <= n; q++) {
      KohnoElement expect = t <= n - q ? gamma_elem(q, n + 1)
                                       : gamma_elem(q + 1, n + 1);
      suite.record("degeneracy-gamma",
                   "(t=" + std::to_string(t) + ",q=" + std::to_string(q) + ")",
                   ke_degeneracy1(t, gamma_elem(q, n)) == expect);
    }
  }
  // projection kill: p(theta(w)) = 0 for w in the x_1 ideal, where p sends
  // B_{1,n+1} to -(B_{2,n+1}+...+B_{n,n+1}); the image must also be purely
  // top-level.
  if (n >= 2) {
    std::vector<LieElement> p_images;
    LieElement minus_sum = lie_zero(n);
    for (uint32_t j = 2; j <= n; j++)
      lie_add_scaled(minus_sum, lie_gen(n, uint8_t(j - 1)), -1);
    p_images.push_back(minus_sum);
    for (uint32_t j = 2; j <= n; j++)
      p_images.push_back(lie_gen(n, uint8_t(j - 1)));

    uint32_t max_q = n <= 3 ? 3 : 2;
    std::vector<std::vector<uint32_t>> seqs{{}};
    for (uint32_t q = 1; q <= max_q; q++) {
      std::vector<std::vector<uint32_t>> next;
      for (auto& s : seqs) {
        if (s.size() == q - 1) {
          for (uint32_t j = 2; j <= n; j++) {
            auto t = s;
            t.push_back(j);
            next.push_back(t);
          }
        }
      }
      for (auto& s : next) {
        LWord letters{0};
        for (auto j : s) letters.push_back(uint8_t(j - 1));
        KohnoElement img = theta_graded(n, lie_left_normed(n, letters));
        bool top_only = true;
        for (uint32_t m = 2; m <= n; m++)
          if (!img.comp[m - 2].is_zero()) top_only = false;
        bool killed =
            lie_substitute(img.comp[k - 2], p_images).is_zero();
        std::string id = "seq=";
        for (auto j : s) id += std::to_string(j);
        suite.record("ideal-image-top-level", id, top_only);
        suite.record("projection-kill", id, killed);
      }
      seqs = next;
    }
  }
  return suite;
}

Suite theta_square_check(uint32_t n, uint32_t max_degree) {
  Suite suite{"theta-square(n=" + std::to_string(n) + ")"};
  if (n < 2) return suite;
  std::vector<LieElement> face_images;
  face_images.push_back(lie_zero(n - 1));  // x_1 -> 0
  for (uint32_t q = 2; q <= n; q++)
    face_images.push_back(lie_gen(n - 1, uint8_t(q - 2)));  // x_q -> x_{q-1}
  for (uint32_t d = 1; d <= max_degree; d++)
    for (auto& w : lyndon_words(n, d)) {
      LieElement basis{n, {}};
      basis.terms[w] = 1;
      KohnoElement lhs = ke_face_top(theta_graded(n, basis));
      KohnoElement rhs = theta_graded(n - 1, lie_substitute(basis, face_images));
      std::string id = "d=" + std::to_string(d) + ",w=";
      for (auto l : w) id += std::to_string(unsigned(l) + 1);
      suite.record("square", id, lhs == rhs);
    }
  return suite;
}

namespace {

KohnoElement lambda_gamma_bracket(uint32_t n, const std::vector<uint32_t>& gs) {
  KohnoElement acc = lambda_elem(n);
  for (auto q : gs) acc = ke_bracket(acc, gamma_elem(q, n));
  return acc;
}

}  // namespace

bool admissible_bracket_check(uint32_t n, const std::vector<uint32_t>& seq) {
  for (size_t i = 0; i < seq.size(); i++) {
    if (seq[i] < 2 || seq[i] > n)
      throw std::invalid_argument("sequence entries must lie in 2..n");
    if (i && seq[i - 1] > seq[i])
      throw std::invalid_argument("sequence must be weakly increasing");
  }
  LWord letters{0};
  for (auto j : seq) letters.push_back(uint8_t(j - 1));
  KohnoElement lhs = theta_graded(n, lie_left_normed(n, letters));
  std::vector<uint32_t> rev(seq.rbegin(), seq.rend());
  return lhs == lambda_gamma_bracket(n, rev);
}

Suite admissible_bracket_sweep(uint32_t max_n, uint32_t max_q) {
  Suite suite{"admissible-brackets(n<=" + std::to_string(max_n) + ")"};
  for (uint32_t n = 2; n <= max_n; n++) {
    std::vector<std::vector<uint32_t>> seqs{{}};
    for (uint32_t q = 0; q <= max_q; q++) {
      for (auto& s : seqs)
        if (s.size() == q) {
          std::string id = "n=" + std::to_string(n) + ",seq=";
          for (auto j : s) id += std::to_string(j);
          suite.record("admissible", id, admissible_bracket_check(n, s));
        }
      std::vector<std::vector<uint32_t>> next;
      for (auto& s : seqs)
        if (s.size() == q)
          for (uint32_t j = s.empty() ? 2 : s.back(); j <= n; j++) {
            auto t = s;
            t.push_back(j);
            next.push_back(t);
          }
      seqs.insert(seqs.end(), next.begin(), next.end());
    }
  }
  return suite;
}

uint32_t filtration_D(const std::vector<uint32_t>& seq) {
  uint32_t d = 0;
  for (size_t i = 0; i < seq.size(); i++)
    for (size_t k = i + 1; k < seq.size(); k++)
      if (seq[i] > seq[k]) d++;
  return d;
}

uint32_t filtration_Delta(const std::vector<uint32_t>& seq) {
  uint32_t d = 0;
  for (size_t i = 0; i < seq.size(); i++)
    for (size_t k = i + 1; k < seq.size(); k++)
      if (seq[i] < seq[k]) d++;
  return d;
}

namespace {

struct CoordIndex {
  std::vector<std::pair<uint32_t, LWord>> items;
  std::map<std::pair<uint32_t, LWord>, size_t> pos;
};

CoordIndex coord_index(uint32_t k, uint32_t d) {
  CoordIndex ci;
  for (uint32_t m = 2; m <= k; m++)
    for (auto& w : lyndon_words(m - 1, d)) {
      ci.pos[{m, w}] = ci.items.size();
      ci.items.push_back({m, w});
    }
  return ci;
}

std::vector<BigInt> ke_coords(const KohnoElement& a, uint32_t d,
                              const CoordIndex& ci) {
  std::vector<BigInt> v(ci.items.size());
  for (uint32_t m = 2; m <= a.strands; m++)
    for (auto& [w, c] : a.comp[m - 2].terms) {
      if (w.size() != d) continue;
      v[ci.pos.at({m, w})] = c;
    }
  return v;
}

// left-normed brackets of Lambda/gamma letters of total length `len` with at
// least `min_lambda` occurrences of Lambda; these span the decomposables of
// the relevant subalgebra in that degree
std::vector<KohnoElement> decomposable_span(uint32_t n, uint32_t len,
                                            uint32_t min_lambda = 2) {
  std::vector<KohnoElement> out;
  std::vector<KohnoElement> letters;  // 0 = Lambda, i-1 = gamma_i
  letters.push_back(lambda_elem(n));
  for (uint32_t q = 2; q <= n; q++) letters.push_back(gamma_elem(q, n));

  std::vector<uint32_t> word(len, 0);
  while (true) {
    uint32_t lambdas = 0;
    for (auto x : word)
      if (x == 0) lambdas++;
    if (lambdas >= min_lambda) {
      KohnoElement e = letters[word[0]];
      for (uint32_t p = 1; p < len; p++) e = ke_bracket(e, letters[word[p]]);
      if (!e.is_zero()) out.push_back(e);
    }
    size_t p = len;
    while (p > 0) {
      if (++word[p - 1] < letters.size()) break;
      word[p - 1] = 0;
      p--;
    }
    if (p == 0) break;
  }
  return out;
}

}  // namespace

LeadingCoeff leading_coefficient_check(uint32_t n,
                                       const std::vector<uint32_t>& seq) {
  for (auto j : seq)
    if (j < 2 || j > n)
      throw std::invalid_argument("sequence entries must lie in 2..n");
  uint32_t q = uint32_t(seq.size());
  if (q == 0) throw std::invalid_argument("need a nonempty sequence");
  uint32_t d = q + 1, k = n + 1;

  LWord letters{0};
  for (auto j : seq) letters.push_back(uint8_t(j - 1));
  KohnoElement target = theta_graded(n, lie_left_normed(n, letters));

  // columns: all bracket classes [..[Lam,g_{w_1}]..g_{w_q}] over sequences w,
  // then the decomposable span
  std::vector<std::vector<uint32_t>> lseqs;
  {
    std::vector<std::vector<uint32_t>> cur{{}};
    for (uint32_t p = 0; p < q; p++) {
      std::vector<std::vector<uint32_t>> next;
      for (auto& s : cur)
        for (uint32_t j = 2; j <= n; j++) {
          auto t = s;
          t.push_back(j);
          next.push_back(t);
        }
      cur = next;
    }
    lseqs = cur;
  }
  std::vector<KohnoElement> lcols;
  for (auto& w : lseqs) lcols.push_back(lambda_gamma_bracket(n, w));
  std::vector<KohnoElement> dcols = decomposable_span(n, d);

  CoordIndex ci = coord_index(k, d);
  size_t rows = ci.items.size();
  IntMat D(rows, dcols.size());
  for (size_t j = 0; j < dcols.size(); j++) {
    auto col = ke_coords(dcols[j], d, ci);
    for (size_t i = 0; i < rows; i++) D.at(i, j) = col[i];
  }
  IntMat DL(rows, dcols.size() + lcols.size());
  for (size_t j = 0; j < dcols.size(); j++)
    for (size_t i = 0; i < rows; i++) DL.at(i, j) = D.at(i, j);
  for (size_t j = 0; j < lcols.size(); j++) {
    auto col = ke_coords(lcols[j], d, ci);
    for (size_t i = 0; i < rows; i++) DL.at(i, dcols.size() + j) = col[i];
  }

  LeadingCoeff out;
  // bracket-class coordinates are unique iff the L columns stay independent
  // over the decomposable span
  size_t rd = rank_z(D);
  size_t rdl = rank_z(DL);
  if (rdl != rd + lcols.size()) return out;

  auto sol = solve(DL, ke_coords(target, d, ci));
  if (!sol) return out;
  out.decomposition_ok = true;

  std::vector<uint32_t> rev(seq.rbegin(), seq.rend());
  uint32_t rev_filt = filtration_Delta(rev);
  out.lower_filtration_ok = true;
  for (size_t j = 0; j < lseqs.size(); j++) {
    BigRat c = (*sol)[dcols.size() + j];
    if (lseqs[j] == rev) {
      out.coeff = c;
      out.unit = (c == 1 || c == -1);
    } else if (c != 0 && filtration_Delta(lseqs[j]) >= rev_filt) {
      out.lower_filtration_ok = false;
    }
  }
  return out;
}

InjectivityResult injectivity_rank(uint32_t n, uint32_t d, uint64_t mod,
                                   size_t budget_cells) {
  const auto& basis = lyndon_words(n, d);
  CoordIndex ci = coord_index(n + 1, d);
  InjectivityResult res;
  res.domain_dim = basis.size();
  if (basis.size() * ci.items.size() > budget_cells)
    throw BudgetExceeded("injectivity matrix exceeds the configured budget");

  IntMat M(ci.items.size(), basis.size());
  for (size_t j = 0; j < basis.size(); j++) {
    LieElement e{n, {}};
    e.terms[basis[j]] = 1;
    auto col = ke_coords(theta_graded(n, e), d, ci);
    for (size_t i = 0; i < ci.items.size(); i++) M.at(i, j) = col[i];
  }
  if (mod == 0) {
    auto divisors = smith_divisors(M);
    res.rank = divisors.size();
    res.unit_divisors = true;
    for (auto& x : divisors)
      if (x != 1) res.unit_divisors = false;
  } else {
    res.rank = rank_mod_p(M, mod);
  }
  return res;
}

Suite appendix_check() {
  Suite suite{"appendix"};
  const uint32_t n = 3, d = 4, k = 4;
  auto theta_of = [&](std::initializer_list<uint8_t> letters) {
    return theta_graded(n, lie_left_normed(n, LWord(letters)));
  };
  auto lg = [&](std::initializer_list<uint32_t> gs) {
    return lambda_gamma_bracket(n, std::vector<uint32_t>(gs));
  };

  // item 1: exact equality
  suite.record("item-1", "[[[x1,x2],x2],x3] = [[[Lam,g3],g2],g2]",
               theta_of({0, 1, 1, 2}) == lg({3, 2, 2}));

  CoordIndex ci = coord_index(k, d);
  auto dcols = decomposable_span(n, d);
  IntMat D(ci.items.size(), dcols.size());
  for (size_t j = 0; j < dcols.size(); j++) {
    auto col = ke_coords(dcols[j], d, ci);
    for (size_t i = 0; i < ci.items.size(); i++) D.at(i, j) = col[i];
  }
  auto congruent = [&](const KohnoElement& lhs, const KohnoElement& rhs) {
    KohnoElement diff = lhs;
    ke_add_scaled(diff, rhs, -1);
    return solvable(D, ke_coords(diff, d, ci));
  };

  // item 2: congruence modulo decomposables
  {
    KohnoElement rhs = ke_scale(lg({2, 3, 2}), -1);
    ke_add_scaled(rhs, lg({3, 2, 2}), 2);
    suite.record("item-2", "[[[x1,x2],x3],x2]",
                 congruent(theta_of({0, 1, 2, 1}), rhs));
  }
  // item 3
  {
    KohnoElement rhs = lg({2, 2, 3});
    ke_add_scaled(rhs, lg({2, 3, 2}), -2);
    ke_add_scaled(rhs, lg({3, 2, 2}), 2);
    suite.record("item-3", "[[[x1,x3],x2],x2]",
                 congruent(theta_of({0, 2, 1, 1}), rhs));
  }
  return suite;
}

}  // namespace braidlab
