#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/lie.hpp"
#include "braidlab/linalg.hpp"
#include "braidlab/report.hpp"

namespace braidlab {

/// Element of the graded Lie algebra of the k-strand pure braid group in the
/// recursive normal form: for each m = 2..k a component in the free Lie
/// algebra on B_{1,m}, ..., B_{m-1,m} (the ideal of the split extension at
/// stage m).  The decomposition is additively faithful and normalization is
/// idempotent.
struct KohnoElement {
  uint32_t strands = 2;
  std::vector<LieElement> comp;  // comp[m-2] over alphabet m-1

  bool is_zero() const;
  bool operator==(const KohnoElement& o) const {
    return strands == o.strands && comp == o.comp;
  }
};

KohnoElement ke_zero(uint32_t k);
/// The class of A_{i,j}: a single generator in the level-j component.
KohnoElement ke_generator(uint32_t i, uint32_t j, uint32_t k);
KohnoElement ke_scale(const KohnoElement& a, int64_t c);
void ke_add_scaled(KohnoElement& a, const KohnoElement& b, int64_t c);
KohnoElement ke_add(const KohnoElement& a, const KohnoElement& b);

/// Bracket in the normal form: free within a level, derivation action of a
/// lower level on a higher one (via the infinitesimal braid relations).
KohnoElement ke_bracket(const KohnoElement& a, const KohnoElement& b);

KohnoElement ke_degree_part(const KohnoElement& a, uint32_t deg);
uint32_t ke_max_degree(const KohnoElement& a);
std::string ke_str(const KohnoElement& a);

/// Formal bracket expression over the symbols B[i,j], built by the CLI parser
/// or programmatically.
struct KExpr {
  enum Kind : uint8_t { Gen, Sum, Scale, Bracket } kind = Gen;
  uint32_t i = 0, j = 0;   // Gen
  int64_t c = 1;           // Scale
  std::vector<KExpr> args;

  static KExpr gen(uint32_t i, uint32_t j);
  static KExpr sum(std::vector<KExpr> xs);
  static KExpr scale(int64_t c, KExpr x);
  static KExpr bracket(KExpr a, KExpr b);
};

/// Grammar: `[B[1,2], B[1,3] + B[2,3]]`, integer scalars with `*`, `(...)`.
KExpr parse_kexpr(const std::string& text);

/// Canonical form of a formal expression; idempotent and linear.
KohnoElement kohno_normalize(const KExpr& e, uint32_t strands);

/// Sum over m = 2..k of the number of degree-d Lyndon words on m-1 letters.
size_t kohno_dim(uint32_t k, uint32_t d);

/// Lambda_n = B_{1,n+1} + ... + B_{n,n+1} (strands n+1).
KohnoElement lambda_elem(uint32_t n);
/// gamma_q(n) = -(B_{n-q+2,n+1} + ... + B_{n,n+1}), 2 <= q <= n.
KohnoElement gamma_elem(uint32_t q, uint32_t n);

/// Graded image of the generator x_q: sum of B_{i,j} over
/// 1 <= i <= n-q+1 < j <= n+1.
KohnoElement theta_x(uint32_t q, uint32_t n);

/// Graded image of a Lie element over x_1..x_n (linear; basis brackets are
/// evaluated with ke_bracket and memoized).
KohnoElement theta_graded(uint32_t n, const LieElement& a);

/// Degree-1 graded degeneracy (strand doubling) on linear combinations of
/// generators; used for the Lambda/gamma degeneracy identities.
KohnoElement ke_degeneracy1(uint32_t t, const KohnoElement& a);

/// Drops the top level: the graded face deleting the last strand.
KohnoElement ke_face_top(const KohnoElement& a);

/// All infinitesimal braid relation instances on k strands normalize to zero
/// (exactly for mod = 0, as mod-p reductions otherwise), together with the
/// two derived bracket identities.
Suite infinitesimal_relations_check(uint32_t k, uint64_t mod = 0);

/// The degree-d span of normalized generator brackets fills the whole normal
/// form: rank == kohno_dim(k, d).
bool kohno_rank_consistency(uint32_t k, uint32_t d);

/// Identity suite for the graded embedding: bracket vanishing, the
/// decomposition of theta_x, the gamma bracket expansion, degeneracy values,
/// and the projection-kill property on the x_1 ideal.
Suite theta_identities_check(uint32_t n);

/// Commutes with the graded faces: dropping the last strand on both sides.
Suite theta_square_check(uint32_t n, uint32_t max_degree);

/// theta_graded of the left-normed bracket [..[x_1,x_{j_1}]..x_{j_q}] equals
/// the reversed bracket [..[Lambda,gamma_{j_q}]..gamma_{j_1}] exactly, for
/// weakly increasing sequences.
bool admissible_bracket_check(uint32_t n, const std::vector<uint32_t>& seq);
Suite admissible_bracket_sweep(uint32_t max_n, uint32_t max_q);

/// Inversion counts: D counts later strictly smaller entries, Delta later
/// strictly larger ones.
uint32_t filtration_D(const std::vector<uint32_t>& seq);
uint32_t filtration_Delta(const std::vector<uint32_t>& seq);

struct LeadingCoeff {
  bool decomposition_ok = false;  // class decomposes against the bracket basis
  bool unit = false;              // reversed-sequence coefficient is +-1
  bool lower_filtration_ok = false;  // other terms have strictly smaller Delta
  BigRat coeff;
};
/// Class of theta_graded([..[x_1,x_{j_1}]..x_{j_q}]) modulo decomposables,
/// expanded over the left-normed Lambda/gamma bracket classes.
LeadingCoeff leading_coefficient_check(uint32_t n,
                                       const std::vector<uint32_t>& seq);

struct InjectivityResult {
  size_t domain_dim = 0;
  size_t rank = 0;
  bool unit_divisors = false;  // over Z: all elementary divisors are 1
};
/// Rank of theta_graded on the degree-d Lyndon basis of the free Lie algebra
/// on n letters, over Z (mod = 0, with Smith divisors) or over F_p.
InjectivityResult injectivity_rank(uint32_t n, uint32_t d, uint64_t mod,
                                   size_t budget_cells = 4u << 20);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The three appendix computations: item 1 exactly, items 2-3 modulo the
/// decomposable subspace (brackets of Lambda/gamma letters with at least two
/// Lambdas).
Suite appendix_check();

}  // namespace braidlab
