#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

/// Element of the ring Z<X_1..X_n> / (monomials with a repeated index).
/// Keys are sequences of pairwise distinct 1-based indices; series are finite
/// and products are exact.  Group elements have constant term 1 and this is
/// the normal form used for the reduced free group.
struct SquareFreeSeries {
  uint32_t rank = 0;
  std::map<std::vector<uint8_t>, int64_t> terms;

  bool operator==(const SquareFreeSeries& o) const {
    return rank == o.rank && terms == o.terms;
  }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->first.empty() &&
           terms.begin()->second == 1;
  }
};

SquareFreeSeries sfs_one(uint32_t rank);
SquareFreeSeries sfs_mul(const SquareFreeSeries& a, const SquareFreeSeries& b);
void sfs_add_scaled(SquareFreeSeries& a, const SquareFreeSeries& b, int64_t c);
std::string sfs_str(const SquareFreeSeries& s);

/// x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i (exact inverse since X_i^2 = 0).
SquareFreeSeries kn_embed(const Word& w, uint32_t rank);
bool kn_equal(const Word& u, const Word& v, uint32_t rank);

/// Rank of the degree-t graded piece, computed from the listed bracket basis
/// [[x_{i_1}, x_{i_tau(2)}], ..., x_{i_tau(t)}]; equals C(n,t)(t-1)!.
size_t kn_graded_rank(uint32_t n, uint32_t t);

/// Class of artin_action(b)(w) in the reduced free group.
SquareFreeSeries reduced_braid_action(const BraidWord& b, const Word& w);

/// Relation word [x_i, g x_i g^{-1}].
Word kn_relation_word(uint32_t i, const Word& g);

}  // namespace braidlab
