#include "braidlab/magnus.hpp"

#include <stdexcept>

namespace braidlab {

TensorSeries ts_one(uint32_t rank, uint32_t truncation) {
  TensorSeries t{rank, truncation, {}};
  t.terms[{}] = 1;
  return t;
}

TensorSeries ts_mul(const TensorSeries& a, const TensorSeries& b) {
  if (a.rank != b.rank || a.truncation != b.truncation)
    throw std::invalid_argument("series shape mismatch");
  TensorSeries r{a.rank, a.truncation, {}};
  for (auto& [u, cu] : a.terms)
    for (auto& [v, cv] : b.terms) {
      if (u.size() + v.size() > a.truncation) continue;
      std::vector<uint8_t> w = u;
      w.insert(w.end(), v.begin(), v.end());
      int64_t& c = r.terms[w];
      c = checked_add(c, checked_mul(cu, cv));
      if (c == 0) r.terms.erase(w);
    }
  return r;
}

void ts_add_scaled(TensorSeries& a, const TensorSeries& b, int64_t c) {
  if (a.rank != b.rank || a.truncation != b.truncation)
    throw std::invalid_argument("series shape mismatch");
  for (auto& [w, cw] : b.terms) {
    int64_t& t = a.terms[w];
    t = checked_add(t, checked_mul(cw, c));
    if (t == 0) a.terms.erase(w);
  }
}

namespace {

// 1 + X_g or its exact truncated inverse 1 - X_g + X_g^2 - ...
TensorSeries gen_factor(uint32_t rank, uint32_t truncation, uint8_t g,
                        bool inverse) {
  TensorSeries t{rank, truncation, {}};
  std::vector<uint8_t> w;
  int64_t sign = 1;
  for (uint32_t d = 0; d <= truncation; d++) {
    t.terms[w] = sign;
    w.push_back(g);
    if (inverse) sign = -sign;
    if (!inverse && d >= 1) break;  // 1 + X only
  }
  return t;
}

}  // namespace

TensorSeries magnus_expand(const Word& w, uint32_t rank, uint32_t truncation) {
  if (w.max_generator() > rank)
    throw std::invalid_argument("word index exceeds rank");
  TensorSeries r = ts_one(rank, truncation);
  for (auto& [g, e] : w.syl) {
    TensorSeries f = gen_factor(rank, truncation, uint8_t(g - 1), e < 0);
    int64_t n = e < 0 ? -e : e;
    for (int64_t i = 0; i < n; i++) r = ts_mul(r, f);
  }
  return r;
}

std::optional<LcsResult> lcs_degree(const Word& w, uint32_t rank,
                                    uint32_t max_degree) {
  if (w.is_identity())
    throw std::invalid_argument("identity has no lower-central-series degree");
  TensorSeries t = magnus_expand(w, rank, max_degree);
  t.terms.erase(std::vector<uint8_t>{});  // drop the constant term 1
  uint32_t best = max_degree + 1;
  for (auto& [m, c] : t.terms)
    if (m.size() < best) best = uint32_t(m.size());
  if (best > max_degree) return std::nullopt;

  // Dynkin bracketing: on a homogeneous Lie element of degree d the
  // left-normed bracketing of its monomials returns d times the element.
  LieElement sum = lie_zero(rank);
  for (auto& [m, c] : t.terms)
    if (m.size() == best) lie_add_scaled(sum, lie_left_normed(rank, m), c);
  LieElement leading{rank, {}};
  for (auto& [lw, c] : sum.terms) {
    if (c % int64_t(best) != 0)
      throw std::runtime_error("lowest Magnus term is not primitive");
    leading.terms[lw] = c / int64_t(best);
  }
  return LcsResult{best, leading};
}

}  // namespace braidlab
