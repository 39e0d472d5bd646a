#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense integer matrix, row major. All ranks and normal forms in the repo
/// are exact; no floating point anywhere.
struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  BigInt& at(size_t i, size_t j) { return a[i * cols + j]; }
  const BigInt& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Rank over Z (fraction-free Gaussian elimination).
size_t rank_z(IntMat m);

/// Rank over F_p.
size_t rank_mod_p(const IntMat& m, uint64_t p);

/// Nonzero elementary divisors d_1 | d_2 | ... of the Smith normal form.
std::vector<BigInt> smith_divisors(IntMat m);

/// Whether A c = b has a rational solution.
bool solvable(const IntMat& A, const std::vector<BigInt>& b);

/// One rational solution of A c = b, if any.
std::optional<std::vector<BigRat>> solve(const IntMat& A,
                                         const std::vector<BigInt>& b);

/// Incremental rank tracker over Q; used for spanning checks with early exit.
struct RankTracker {
  size_t cols = 0;
  std::vector<std::vector<BigRat>> echelon;  // reduced rows
  explicit RankTracker(size_t c) : cols(c) {}
  size_t rank() const { return echelon.size(); }
  /// Returns true when the vector enlarged the span.
  bool add(std::vector<BigRat> v);
};

}  // namespace braidlab
