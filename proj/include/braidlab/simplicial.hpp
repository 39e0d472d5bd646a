#pragma once

#include <cstdint>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/reduced.hpp"
#include "braidlab/report.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

/// The four simplicial groups of the repo.  Degree-n carriers:
///   AP       pure braid words on n+1 strands (A-generator letters),
///   FS1      free words on x_1..x_n,
///   FDELTA1  free words on n+1 generators (index i+1 carries <0^i 1^{n+1-i}>),
///   KS1      FS1 words modulo the reduced-free-group normal form.
enum class Family { AP, FS1, FDELTA1, KS1 };

/// Face/degeneracy tables for AP: operators act letterwise on A-generators.
/// `b` lives in degree n = strands-1; 0 <= t <= n.
BraidWord ap_face(uint32_t t, const BraidWord& b);
BraidWord ap_degeneracy(uint32_t t, const BraidWord& b);

/// Word-carrier operators; `n` is the simplicial degree of `w`.
Word fs1_face(uint32_t t, const Word& w, uint32_t n);
Word fs1_degeneracy(uint32_t t, const Word& w, uint32_t n);
Word fdelta1_face(uint32_t t, const Word& w, uint32_t n);
Word fdelta1_degeneracy(uint32_t t, const Word& w, uint32_t n);

/// The generator x_q(n) of FS1 in degree n (1 <= q <= n), pinned by the
/// recursion x_1(1) = x_1, x_1(n) = s_0 x_1(n-1), x_q(n) = s_{n-1} x_{q-1}(n-1).
Word fs1_generator(uint32_t q, uint32_t n);

/// The embedding into AP: homomorphic extension of x_q(n) |-> the image of
/// A_{1,2} under the same degeneracy word as in the fs1_generator recursion.
BraidWord theta_generator(uint32_t q, uint32_t n);
BraidWord theta(uint32_t n, const Word& w);

/// Class of w under the degreewise quotient FS1 -> KS1.
SquareFreeSeries rho(uint32_t n, const Word& w);

/// True iff all faces d_first..d_n of the element vanish (first = 0 for the
/// cycle test, 1 for Moore-chain membership).
bool moore_faces_trivial(Family fam, uint32_t n, const Word& w,
                         uint32_t first = 0);
bool moore_faces_trivial_ap(uint32_t n, const BraidWord& b, uint32_t first = 0);

struct MooreProjection {
  BraidWord chain;
  std::vector<BraidWord> corrections;  // degenerate factors, one per step
};

/// Deterministic Moore-chain representative of gamma's coset: sweeps i = n..1
/// multiplying (s_{i-1} d_i c)^{-1} on the right (or left).
MooreProjection moore_project(uint32_t n, const BraidWord& gamma,
                              bool left = false);

/// Free generators A_{1,n+2}, ..., A_{n+1,n+2} of the degree-n loop group
/// ker(top face of P_{n+2}).
std::vector<BraidWord> omega_ap_generators(uint32_t n);

/// Loop-space comparison word for the generator <0^i 1^{m+1-i}> of FDELTA1:
/// the tail product A_{i+1,m+2} A_{i+2,m+2} ... A_{m+1,m+2}.
BraidWord psi_generator(uint32_t i, uint32_t m);
BraidWord psi_apply(uint32_t m, const Word& w);

/// Checks that psi is a simplicial isomorphism onto the loop group in
/// degrees <= max_degree: generator bijection onto {A_{j,m+2}} via successive
/// quotients, kernel membership, and face/degeneracy compatibility.
Suite psi_check(uint32_t max_degree);

/// All five simplicial identity families on generators and `words_per_degree`
/// random elements per degree.
Suite verify_simplicial_identities(Family fam, uint32_t max_degree,
                                   uint32_t words_per_degree, uint64_t seed,
                                   uint32_t word_len = 4);

/// Theta commutes with every face and degeneracy (checked on generators,
/// which suffices for homomorphisms, plus pinned image values).
Suite theta_morphism_check(uint32_t max_degree);

/// rho commutes with the operators: relation-perturbed representatives have
/// equal images under every face/degeneracy.
Suite rho_commutes_check(uint32_t max_degree, uint32_t samples, uint64_t seed);

}  // namespace braidlab
