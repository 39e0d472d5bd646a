#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidlab {

/// Reduced word in a free group on indexed generators x_1, x_2, ...
/// Stored as run-length syllables (generator, exponent) with adjacent
/// generators distinct and all exponents nonzero.  The empty word is the
/// identity.  Reduction is eager: every constructor and product maintains
/// the invariant.
struct Word {
  std::vector<std::pair<uint32_t, int64_t>> syl;

  bool is_identity() const { return syl.empty(); }
  /// Total letter count, counting |exponent|.
  size_t length() const;
  /// Largest generator index used (0 for the identity).
  uint32_t max_generator() const;

  bool operator==(const Word& o) const { return syl == o.syl; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const { return syl < o.syl; }
};

Word word_one();
Word word_gen(uint32_t g, int64_t exp = 1);

/// Append a single syllable, merging and cancelling as needed.
void word_push(Word& w, uint32_t g, int64_t exp);

Word word_mul(const Word& a, const Word& b);
Word word_inv(const Word& a);
Word word_pow(const Word& a, int64_t k);

/// [a,b] = a^{-1} b^{-1} a b
Word commutator(const Word& a, const Word& b);
/// b^{-1} a b
Word conjugate(const Word& a, const Word& b);
/// Left-normed commutator [...[[g_1,g_2],g_3],...,g_t] of generators.
Word left_normed_commutator(const std::vector<uint32_t>& gens);

/// Shifts every generator index by `offset`.
Word word_shift(const Word& w, int64_t offset);

/// Grammar: `x3^-2 x1 x2^4` (whitespace separated, `^1` optional);
/// identity is the empty string or `1`.
Word parse_word(const std::string& s);
std::string word_str(const Word& w);

/// Evaluates the six Hall-Witt style commutator identities on (a, b, c)
/// as reduced-word equalities.  Returns six booleans, one per identity.
std::vector<bool> hall_witt_check(const Word& a, const Word& b, const Word& c);

/// [x^{-1}yx, vyv^{-1}] = x^{-1} [y, (xv) y (xv)^{-1}] x
bool commutator_identity_check(const Word& x, const Word& y, const Word& v);

}  // namespace braidlab
