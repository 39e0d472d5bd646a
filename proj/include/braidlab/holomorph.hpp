#pragma once

#include "braidlab/braid.hpp"
#include "braidlab/report.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

/// Element (f, x) of Hol(F_n) with the automorphism part restricted to
/// braid-image automorphisms; the braid word is the invertibility witness.
/// Product: (f,x) (g,y) = (f o g, g^{-1}(x) y).
struct HolElement {
  BraidWord braid;  // f = action of this braid word
  Word elem;        // x

  uint32_t rank() const { return braid.strands; }
  FreeAutomorphism auto_part() const { return artin_action(braid); }
};

HolElement hol_identity(uint32_t n);
HolElement hol_mul(const HolElement& a, const HolElement& b);
HolElement hol_inv(const HolElement& a);
bool hol_equal(const HolElement& a, const HolElement& b);

/// e(f): extends f to F_{n+m} fixing the top m generators.
FreeAutomorphism e_extend(const FreeAutomorphism& f, uint32_t extra);
/// chi(h): fixes the first n generators, z |-> h^{-1} z h on the top ones.
FreeAutomorphism chi_extend(const Word& h, uint32_t n, uint32_t extra);
/// E(f, h) = e(f) o chi(h) on F_{n+extra}.
FreeAutomorphism e_embed(const HolElement& h, uint32_t extra);

/// Conjugation of A_{j,n+1} inside B_{n+1} matches the holomorph action
/// computed with hol_mul, for every A_{r,s} with r < s <= n and every j.
Suite pullback_check(uint32_t n);

/// chi(h) e(f) = e(f) chi(f^{-1}(h)) on sampled f (braid words) and h.
Suite chi_e_exchange_check(uint32_t samples, uint64_t seed);

}  // namespace braidlab
