#include "braidlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidlab {

size_t rank_z(IntMat m) {
  // Bareiss fraction-free elimination.
  size_t r = 0;
  BigInt prev = 1;
  for (size_t c = 0; c < m.cols && r < m.rows; c++) {
    size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) piv++;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols; j++) std::swap(m.at(piv, j), m.at(r, j));
    for (size_t i = r + 1; i < m.rows; i++) {
      for (size_t j = c + 1; j < m.cols; j++) {
        BigInt t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        m.at(i, j) = t / prev;
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    r++;
  }
  return r;
}

size_t rank_mod_p(const IntMat& m, uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  std::vector<std::vector<uint64_t>> a(m.rows, std::vector<uint64_t>(m.cols));
  for (size_t i = 0; i < m.rows; i++)
    for (size_t j = 0; j < m.cols; j++) {
      BigInt v = m.at(i, j) % BigInt(p);
      if (v < 0) v += p;
      a[i][j] = v.convert_to<uint64_t>();
    }
  auto inv_mod = [&](uint64_t x) {
    // p prime, small: Fermat
    uint64_t e = p - 2, base = x % p, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc;
  };
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; c++) {
    size_t piv = r;
    while (piv < m.rows && a[piv][c] == 0) piv++;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[r]);
    uint64_t inv = inv_mod(a[r][c]);
    for (size_t i = r + 1; i < m.rows; i++) {
      if (!a[i][c]) continue;
      uint64_t f = a[i][c] * inv % p;
      for (size_t j = c; j < m.cols; j++)
        a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    r++;
  }
  return r;
}

std::vector<BigInt> smith_divisors(IntMat m) {
  std::vector<BigInt> out;
  size_t top = 0;
  size_t nmin = std::min(m.rows, m.cols);
  auto abs_val = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
  while (top < nmin) {
    // find the nonzero entry of least absolute value in the lower right block
    size_t bi = top, bj = top;
    BigInt best = 0;
    for (size_t i = top; i < m.rows; i++)
      for (size_t j = top; j < m.cols; j++) {
        if (m.at(i, j) == 0) continue;
        BigInt v = abs_val(m.at(i, j));
        if (best == 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == 0) break;  // block is zero
    if (bi != top)
      for (size_t j = 0; j < m.cols; j++) std::swap(m.at(bi, j), m.at(top, j));
    if (bj != top)
      for (size_t i = 0; i < m.rows; i++) std::swap(m.at(i, bj), m.at(i, top));

    bool clean = true;
    for (size_t i = top + 1; i < m.rows; i++) {
      BigInt q = m.at(i, top) / m.at(top, top);
      if (q != 0)
        for (size_t j = top; j < m.cols; j++)
          m.at(i, j) -= q * m.at(top, j);
      if (m.at(i, top) != 0) clean = false;
    }
    for (size_t j = top + 1; j < m.cols; j++) {
      BigInt q = m.at(top, j) / m.at(top, top);
      if (q != 0)
        for (size_t i = top; i < m.rows; i++)
          m.at(i, j) -= q * m.at(i, top);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; pick a new pivot

    // divisibility condition against the rest of the block
    bool divides = true;
    size_t di = 0, dj = 0;
    for (size_t i = top + 1; i < m.rows && divides; i++)
      for (size_t j = top + 1; j < m.cols && divides; j++)
        if (m.at(i, j) % m.at(top, top) != 0) {
          divides = false;
          di = i;
          dj = j;
        }
    if (!divides) {
      // fold the offending row into the pivot row and retry
      for (size_t j = top; j < m.cols; j++) m.at(top, j) += m.at(di, j);
      (void)dj;
      continue;
    }
    out.push_back(abs_val(m.at(top, top)));
    top++;
  }
  return out;
}

namespace {

// Row-reduce [A | b] over Q; returns echelon form and pivot columns.
struct Reduced {
  std::vector<std::vector<BigRat>> rows;
  std::vector<size_t> pivot_col;
};

Reduced reduce(const IntMat& A, const std::vector<BigInt>* b) {
  size_t cols = A.cols + (b ? 1 : 0);
  std::vector<std::vector<BigRat>> rows(A.rows, std::vector<BigRat>(cols));
  for (size_t i = 0; i < A.rows; i++) {
    for (size_t j = 0; j < A.cols; j++) rows[i][j] = BigRat(A.at(i, j));
    if (b) rows[i][A.cols] = BigRat((*b)[i]);
  }
  Reduced red;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < A.rows; c++) {
    size_t piv = r;
    while (piv < A.rows && rows[piv][c] == 0) piv++;
    if (piv == A.rows) continue;
    std::swap(rows[piv], rows[r]);
    BigRat inv = rows[r][c];
    for (size_t j = c; j < cols; j++) rows[r][j] /= inv;
    for (size_t i = 0; i < A.rows; i++) {
      if (i == r || rows[i][c] == 0) continue;
      BigRat f = rows[i][c];
      for (size_t j = c; j < cols; j++) rows[i][j] -= f * rows[r][j];
    }
    red.pivot_col.push_back(c);
    r++;
  }
  rows.resize(r);
  red.rows = std::move(rows);
  return red;
}

}  // namespace

bool solvable(const IntMat& A, const std::vector<BigInt>& b) {
  Reduced red = reduce(A, &b);
  for (size_t k = 0; k < red.pivot_col.size(); k++)
    if (red.pivot_col[k] == A.cols) return false;  // pivot in the b column
  return true;
}

std::optional<std::vector<BigRat>> solve(const IntMat& A,
                                         const std::vector<BigInt>& b) {
  Reduced red = reduce(A, &b);
  std::vector<BigRat> x(A.cols, BigRat(0));
  for (size_t k = 0; k < red.pivot_col.size(); k++) {
    if (red.pivot_col[k] == A.cols) return std::nullopt;
    x[red.pivot_col[k]] = red.rows[k][A.cols];
  }
  return x;
}

bool RankTracker::add(std::vector<BigRat> v) {
  if (v.size() != cols) throw std::invalid_argument("vector size mismatch");
  for (auto& row : echelon) {
    size_t lead = 0;
    while (lead < cols && row[lead] == 0) lead++;
    if (lead < cols && v[lead] != 0) {
      BigRat f = v[lead] / row[lead];
      for (size_t j = lead; j < cols; j++) v[j] -= f * row[j];
    }
  }
  size_t lead = 0;
  while (lead < cols && v[lead] == 0) lead++;
  if (lead == cols) return false;
  BigRat inv = v[lead];
  for (size_t j = lead; j < cols; j++) v[j] /= inv;
  echelon.push_back(std::move(v));
  // keep rows ordered by leading column for the reduction loop above
  std::sort(echelon.begin(), echelon.end(),
            [this](const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
              size_t la = 0, lb = 0;
              while (la < cols && a[la] == 0) la++;
              while (lb < cols && b[lb] == 0) lb++;
              return la < lb;
            });
  return true;
}

}  // namespace braidlab
