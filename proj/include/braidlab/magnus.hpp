#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "braidlab/lie.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

/// Truncated Magnus series: integer combination of monomials X_{i_1}...X_{i_d}
/// of degree <= truncation, indices 1-based.  Zero coefficients are never
/// stored.
struct TensorSeries {
  uint32_t rank = 0;
  uint32_t truncation = 0;
  std::map<std::vector<uint8_t>, int64_t> terms;  // 0-based letters internally

  bool operator==(const TensorSeries& o) const {
    return rank == o.rank && truncation == o.truncation && terms == o.terms;
  }
};

TensorSeries ts_one(uint32_t rank, uint32_t truncation);
TensorSeries ts_mul(const TensorSeries& a, const TensorSeries& b);
void ts_add_scaled(TensorSeries& a, const TensorSeries& b, int64_t c);

/// x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i + X_i^2 - ..., truncated.
TensorSeries magnus_expand(const Word& w, uint32_t rank, uint32_t truncation);

struct LcsResult {
  uint32_t degree;      // smallest d with a nonzero degree-d Magnus term
  LieElement leading;   // that part rewritten in the Lyndon basis
};

/// Lower-central-series degree of a nontrivial word, or nullopt when the
/// expansion vanishes up to max_degree ("deeper than max-degree").
/// Throws on the identity.
std::optional<LcsResult> lcs_degree(const Word& w, uint32_t rank,
                                    uint32_t max_degree);

}  // namespace braidlab
