#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidlab/lyndon.hpp"

namespace braidlab {

/// Noncommutative polynomial with integer coefficients: map from words over
/// a 0-based alphabet to coefficients.  Used for Lyndon-basis expansions and
/// as the brute-force oracle target in tests.
using AssocPoly = std::map<LWord, int64_t>;

AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b);
void assoc_add_scaled(AssocPoly& a, const AssocPoly& b, int64_t c);

/// Integer combination of Lyndon-basis brackets of the free Lie algebra on
/// `alphabet` letters.  Keys are Lyndon words; the basis element of a Lyndon
/// word is its standard bracketing.
struct LieElement {
  uint32_t alphabet = 0;
  std::map<LWord, int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LieElement& o) const {
    return alphabet == o.alphabet && terms == o.terms;
  }
};

LieElement lie_zero(uint32_t alphabet);
LieElement lie_gen(uint32_t alphabet, uint8_t letter);
LieElement lie_scale(const LieElement& a, int64_t c);
LieElement lie_add(const LieElement& a, const LieElement& b);
void lie_add_scaled(LieElement& a, const LieElement& b, int64_t c);

/// Lie bracket, output in the Lyndon basis.
LieElement lie_bracket(const LieElement& a, const LieElement& b);

/// [...[[l_1,l_2],l_3],...,l_q] for a letter sequence.
LieElement lie_left_normed(uint32_t alphabet, const LWord& letters);

/// Expansion of the standard bracketing of a Lyndon word in the free
/// associative algebra.  Memoized.
const AssocPoly& lyndon_expansion(const LWord& w);

/// Inverse of `lyndon_expansion` on Lie elements: rewrites a homogeneous
/// Lie polynomial in the Lyndon basis.  Throws if the input is not a Lie
/// element.
LieElement lie_from_assoc(uint32_t alphabet, const AssocPoly& p);

/// Full associative expansion of a Lie element.
AssocPoly lie_to_assoc(const LieElement& a);

/// Keeps only the terms of the given degree (Lyndon word length).
LieElement lie_degree_part(const LieElement& a, uint32_t deg);
uint32_t lie_max_degree(const LieElement& a);

/// Lie algebra map determined by generator images: evaluates each basis
/// bracket on the images.  images[l] is the image of letter l.
LieElement lie_substitute(const LieElement& a,
                          const std::vector<LieElement>& images);

std::string lie_str(const LieElement& a,
                    const std::vector<std::string>& letter_names);

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

}  // namespace braidlab
