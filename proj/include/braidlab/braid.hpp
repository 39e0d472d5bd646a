#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/report.hpp"
#include "braidlab/rng.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

/// Letter of a braid word: an elementary crossing sigma_i or a pure braid
/// generator A_{r,s} kept symbolic until an action is needed.
struct BraidLetter {
  enum Kind : uint8_t { Sigma, AGen } kind;
  uint32_t i = 0;       // Sigma index, 1 <= i <= strands-1
  uint32_t r = 0, s = 0;  // AGen indices, 1 <= r < s <= strands
  int64_t exp = 1;

  bool same_base(const BraidLetter& o) const {
    return kind == o.kind && i == o.i && r == o.r && s == o.s;
  }
  bool operator==(const BraidLetter& o) const {
    return same_base(o) && exp == o.exp;
  }
};

struct BraidWord {
  uint32_t strands = 1;
  std::vector<BraidLetter> letters;

  bool operator==(const BraidWord& o) const {  // literal equality only
    return strands == o.strands && letters == o.letters;
  }
};

BraidWord braid_one(uint32_t strands);
BraidWord braid_sigma(uint32_t strands, uint32_t i, int64_t exp = 1);
BraidWord braid_agen(uint32_t strands, uint32_t r, uint32_t s, int64_t exp = 1);
void braid_push(BraidWord& b, const BraidLetter& l);  // free reduction
BraidWord braid_mul(const BraidWord& a, const BraidWord& b);
BraidWord braid_inv(const BraidWord& a);
BraidWord braid_pow(const BraidWord& a, int64_t k);
size_t braid_length(const BraidWord& b);

/// Grammar: `s1 s2^-1 A[1,3]^2`, case-insensitive; empty or `1` is trivial.
BraidWord parse_braid(const std::string& text, uint32_t strands);
std::string braid_str(const BraidWord& b);

/// Automorphism of a free group given by generator images.  Instances come
/// from braid words (Artin's representation), so inverses always exist as the
/// action of the inverse word.
struct FreeAutomorphism {
  uint32_t rank = 0;
  std::vector<Word> images;  // images[i] = image of x_{i+1}

  static FreeAutomorphism identity(uint32_t rank);
  bool is_identity() const;
  Word apply(const Word& w) const;
  /// x |-> other(this(x)); matches the left-to-right action convention
  /// artin_action(uv) = artin_action(u) followed by artin_action(v).
  FreeAutomorphism then(const FreeAutomorphism& other) const;
  bool operator==(const FreeAutomorphism& o) const {
    return rank == o.rank && images == o.images;
  }
};

/// Automorphism of F_n induced by sigma_i^{+-1}.
FreeAutomorphism sigma_action(uint32_t i, bool inverse, uint32_t n);
FreeAutomorphism artin_action(const BraidWord& b);

std::vector<uint32_t> braid_permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
int64_t exponent_sum(const BraidWord& b);

/// Equality in B_n via the faithful Artin action.
bool braids_equal(const BraidWord& u, const BraidWord& v);

/// A_{r,s} = alpha(r,s) sigma_r^2 alpha(r,s)^{-1} as a sigma-letter word.
BraidWord a_generator(uint32_t r, uint32_t s, uint32_t n);

/// Image of x_j under A(A_{i,k}) per the conjugation formula.
Word agen_image(uint32_t i, uint32_t k, uint32_t j);

/// Verifies the complete pure braid relation set (conjugation form and
/// commutator form) for all applicable index tuples in P_n.
Suite verify_pn_relations(uint32_t n);

/// Verifies the two sigma relation families under artin_action.
Suite verify_braid_relations(uint32_t n);

/// sigma_i^{-1} A_{j,n+1} sigma_i = A(sigma_i^{-1})(A_{j,n+1}) and
/// A_{r,s}^{-1} A_{j,n+1} A_{r,s} = A(A_{r,s}^{-1})(A_{j,n+1}) in B_{n+1}.
Suite conjugation_formula_check(uint32_t n);

/// Substitutes x_i := A_{i,n+1} into a word of F_n.
BraidWord word_to_agen_braid(const Word& w, uint32_t n);

/// Random pure braid word with `len` AGen letters (exponents +-1).
BraidWord random_pure_braid(Rng& rng, uint32_t strands, uint32_t len);

}  // namespace braidlab
