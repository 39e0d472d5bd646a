#include "braidlab/holomorph.hpp"

#include <stdexcept>

namespace braidlab {

HolElement hol_identity(uint32_t n) { return {braid_one(n), word_one()}; }

HolElement hol_mul(const HolElement& a, const HolElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  // f o g acts as "g first": with the left-to-right artin convention this is
  // the action of the concatenation b.braid * a.braid.
  HolElement r;
  r.braid = braid_mul(b.braid, a.braid);
  FreeAutomorphism g_inv = artin_action(braid_inv(b.braid));
  r.elem = word_mul(g_inv.apply(a.elem), b.elem);
  return r;
}

HolElement hol_inv(const HolElement& a) {
  // (f, x)^{-1} = (f^{-1}, f(x)^{-1})
  HolElement r;
  r.braid = braid_inv(a.braid);
  r.elem = word_inv(artin_action(a.braid).apply(a.elem));
  return r;
}

bool hol_equal(const HolElement& a, const HolElement& b) {
  return a.rank() == b.rank() && braids_equal(a.braid, b.braid) &&
         a.elem == b.elem;
}

FreeAutomorphism e_extend(const FreeAutomorphism& f, uint32_t extra) {
  FreeAutomorphism r = FreeAutomorphism::identity(f.rank + extra);
  for (uint32_t i = 0; i < f.rank; i++) r.images[i] = f.images[i];
  return r;
}

FreeAutomorphism chi_extend(const Word& h, uint32_t n, uint32_t extra) {
  FreeAutomorphism r = FreeAutomorphism::identity(n + extra);
  for (uint32_t j = n; j < n + extra; j++)
    r.images[j] = conjugate(word_gen(j + 1), h);  // h^{-1} z h
  return r;
}

FreeAutomorphism e_embed(const HolElement& h, uint32_t extra) {
  uint32_t n = h.rank();
  // E(f, x) = e(f) o chi(x): apply chi first.
  return chi_extend(h.elem, n, extra).then(e_extend(h.auto_part(), extra));
}

Suite pullback_check(uint32_t n) {
  Suite suite{"pullback(n=" + std::to_string(n) + ")"};
  uint32_t N = n + 1;
  for (uint32_t r = 1; r <= n; r++)
    for (uint32_t s = r + 1; s <= n; s++) {
      HolElement hf{braid_agen(n, r, s), word_one()};
      HolElement hf_inv = hol_inv(hf);
      for (uint32_t j = 1; j <= n; j++) {
        HolElement hx{braid_one(n), word_gen(j)};
        // (f,1)^{-1} (1,x_j) (f,1) = (1, f^{-1}(x_j))
        HolElement res = hol_mul(hol_mul(hf_inv, hx), hf);
        bool trivial_f = braids_equal(res.braid, braid_one(n));
        BraidWord lhs = braid_mul(
            braid_mul(braid_agen(N, r, s, -1), braid_agen(N, j, n + 1)),
            braid_agen(N, r, s));
        BraidWord rhs = word_to_agen_braid(res.elem, n);
        suite.record("pullback",
                     "(" + std::to_string(r) + "," + std::to_string(s) + ";" +
                         std::to_string(j) + ")",
                     trivial_f && braids_equal(lhs, rhs));
      }
    }
  return suite;
}

Suite chi_e_exchange_check(uint32_t samples, uint64_t seed) {
  Suite suite{"chi-e-exchange"};
  Rng rng(seed);
  const uint32_t n = 3, extra = 2;
  for (uint32_t t = 0; t < samples; t++) {
    // f from a random braid word, h a random word in F_n
    BraidWord b = braid_one(n);
    uint32_t len = uint32_t(1 + rng.next(4));
    for (uint32_t i = 0; i < len; i++) {
      uint32_t g = uint32_t(1 + rng.next(n - 1));
      braid_push(b, {BraidLetter::Sigma, g, 0, 0, rng.pick_sign()});
    }
    Word h = rng.word(n, uint32_t(1 + rng.next(5)));
    FreeAutomorphism f = artin_action(b);
    FreeAutomorphism f_inv = artin_action(braid_inv(b));

    // chi(h) o e(f)  vs  e(f) o chi(f^{-1}(h))
    FreeAutomorphism lhs = e_extend(f, extra).then(chi_extend(h, n, extra));
    FreeAutomorphism rhs =
        chi_extend(f_inv.apply(h), n, extra).then(e_extend(f, extra));
    suite.record("exchange", braid_str(b) + " | " + word_str(h), lhs == rhs);
  }
  return suite;
}

}  // namespace braidlab
