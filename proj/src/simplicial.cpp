#include "braidlab/simplicial.hpp"

#include <map>
#include <stdexcept>

namespace braidlab {

namespace {

void require_agen_only(const BraidWord& b) {
  for (auto& l : b.letters)
    if (l.kind != BraidLetter::AGen)
      throw std::invalid_argument("AP operators need A-generator words");
}

}  // namespace

BraidWord ap_face(uint32_t t, const BraidWord& b) {
  require_agen_only(b);
  uint32_t n = b.strands - 1;
  if (t > n) throw std::invalid_argument("face index out of range");
  BraidWord out = braid_one(b.strands - 1);
  for (auto& l : b.letters) {
    uint32_t u = t + 1;
    if (u < l.r)
      braid_push(out, {BraidLetter::AGen, 0, l.r - 1, l.s - 1, l.exp});
    else if (u == l.r)
      continue;  // strand r deleted
    else if (u < l.s)
      braid_push(out, {BraidLetter::AGen, 0, l.r, l.s - 1, l.exp});
    else if (u == l.s)
      continue;  // strand s deleted
    else
      braid_push(out, {BraidLetter::AGen, 0, l.r, l.s, l.exp});
  }
  return out;
}

BraidWord ap_degeneracy(uint32_t t, const BraidWord& b) {
  require_agen_only(b);
  uint32_t n = b.strands - 1;
  if (t > n) throw std::invalid_argument("degeneracy index out of range");
  BraidWord out = braid_one(b.strands + 1);
  for (auto& l : b.letters) {
    uint32_t u = t + 1;
    if (u < l.r) {
      braid_push(out, {BraidLetter::AGen, 0, l.r + 1, l.s + 1, l.exp});
    } else if (u == l.r) {
      BraidWord unit = braid_one(b.strands + 1);
      braid_push(unit, {BraidLetter::AGen, 0, l.r, l.s + 1, 1});
      braid_push(unit, {BraidLetter::AGen, 0, l.r + 1, l.s + 1, 1});
      out = braid_mul(out, braid_pow(unit, l.exp));
    } else if (u < l.s) {
      braid_push(out, {BraidLetter::AGen, 0, l.r, l.s + 1, l.exp});
    } else if (u == l.s) {
      BraidWord unit = braid_one(b.strands + 1);
      braid_push(unit, {BraidLetter::AGen, 0, l.r, l.s, 1});
      braid_push(unit, {BraidLetter::AGen, 0, l.r, l.s + 1, 1});
      out = braid_mul(out, braid_pow(unit, l.exp));
    } else {
      braid_push(out, {BraidLetter::AGen, 0, l.r, l.s, l.exp});
    }
  }
  return out;
}

// FS1 degree-n generator x_q carries the simplex with q ones; faces delete a
// coordinate, degeneracies double one.
Word fs1_face(uint32_t t, const Word& w, uint32_t n) {
  if (t > n || n == 0) throw std::invalid_argument("face index out of range");
  Word out;
  for (auto& [q, e] : w.syl) {
    if (q > n) throw std::invalid_argument("generator exceeds degree");
    if (t <= n - q) {
      if (q != n) word_push(out, q, e);  // q == n: basepoint
    } else {
      if (q != 1) word_push(out, q - 1, e);
    }
  }
  return out;
}

Word fs1_degeneracy(uint32_t t, const Word& w, uint32_t n) {
  if (t > n) throw std::invalid_argument("degeneracy index out of range");
  Word out;
  for (auto& [q, e] : w.syl) {
    if (q > n) throw std::invalid_argument("generator exceeds degree");
    word_push(out, t <= n - q ? q : q + 1, e);
  }
  return out;
}

// FDELTA1 generator index i+1 carries <0^i 1^{n+1-i}>; the all-zeros simplex
// is the basepoint.
Word fdelta1_face(uint32_t t, const Word& w, uint32_t n) {
  if (t > n || n == 0) throw std::invalid_argument("face index out of range");
  Word out;
  for (auto& [gidx, e] : w.syl) {
    uint32_t i = gidx - 1;
    if (i > n) throw std::invalid_argument("generator exceeds degree");
    if (t + 1 <= i) {
      word_push(out, gidx - 1, e);  // i-1 zeros -> index i
    } else {
      if (i != n) word_push(out, gidx, e);  // i == n: <0^n> is the basepoint
    }
  }
  return out;
}

Word fdelta1_degeneracy(uint32_t t, const Word& w, uint32_t n) {
  if (t > n) throw std::invalid_argument("degeneracy index out of range");
  Word out;
  for (auto& [gidx, e] : w.syl) {
    uint32_t i = gidx - 1;
    if (i > n) throw std::invalid_argument("generator exceeds degree");
    word_push(out, t + 1 <= i ? gidx + 1 : gidx, e);
  }
  return out;
}

Word fs1_generator(uint32_t q, uint32_t n) {
  if (q < 1 || q > n) throw std::invalid_argument("generator out of range");
  return word_gen(q);
}

BraidWord theta_generator(uint32_t q, uint32_t n) {
  if (q < 1 || q > n) throw std::invalid_argument("generator out of range");
  static std::map<std::pair<uint32_t, uint32_t>, BraidWord> memo;
  auto key = std::make_pair(q, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BraidWord r;
  if (n == 1) {
    r = braid_agen(2, 1, 2);
  } else if (q == 1) {
    r = ap_degeneracy(0, theta_generator(1, n - 1));
  } else {
    r = ap_degeneracy(n - 1, theta_generator(q - 1, n - 1));
  }
  memo[key] = r;
  return r;
}

BraidWord theta(uint32_t n, const Word& w) {
  if (n == 0) {
    if (!w.is_identity()) throw std::invalid_argument("degree-0 group is trivial");
    return braid_one(1);
  }
  BraidWord out = braid_one(n + 1);
  for (auto& [q, e] : w.syl)
    out = braid_mul(out, braid_pow(theta_generator(q, n), e));
  return out;
}

SquareFreeSeries rho(uint32_t n, const Word& w) { return kn_embed(w, n); }

bool moore_faces_trivial(Family fam, uint32_t n, const Word& w,
                         uint32_t first) {
  for (uint32_t t = first; t <= n; t++) {
    Word f;
    switch (fam) {
      case Family::FS1:
      case Family::KS1:
        f = fs1_face(t, w, n);
        break;
      case Family::FDELTA1:
        f = fdelta1_face(t, w, n);
        break;
      default:
        throw std::invalid_argument("use moore_faces_trivial_ap for AP");
    }
    bool trivial = fam == Family::KS1 ? kn_embed(f, n - 1).is_one()
                                      : f.is_identity();
    if (!trivial) return false;
  }
  return true;
}

bool moore_faces_trivial_ap(uint32_t n, const BraidWord& b, uint32_t first) {
  for (uint32_t t = first; t <= n; t++)
    if (!braids_equal(ap_face(t, b), braid_one(n))) return false;
  return true;
}

MooreProjection moore_project(uint32_t n, const BraidWord& gamma, bool left) {
  if (gamma.strands != n + 1)
    throw std::invalid_argument("element does not live in degree n");
  MooreProjection out;
  out.chain = gamma;
  // downward so that killing d_i preserves the higher faces already killed
  for (uint32_t i = n; i >= 1; i--) {
    BraidWord corr = ap_degeneracy(i - 1, ap_face(i, out.chain));
    out.corrections.push_back(corr);
    out.chain = left ? braid_mul(braid_inv(corr), out.chain)
                     : braid_mul(out.chain, braid_inv(corr));
  }
  return out;
}

std::vector<BraidWord> omega_ap_generators(uint32_t n) {
  std::vector<BraidWord> out;
  for (uint32_t j = 1; j <= n + 1; j++) out.push_back(braid_agen(n + 2, j, n + 2));
  return out;
}

BraidWord psi_generator(uint32_t i, uint32_t m) {
  if (i > m) throw std::invalid_argument("generator out of range");
  BraidWord out = braid_one(m + 2);
  for (uint32_t j = i + 1; j <= m + 1; j++)
    braid_push(out, {BraidLetter::AGen, 0, j, m + 2, 1});
  return out;
}

BraidWord psi_apply(uint32_t m, const Word& w) {
  BraidWord out = braid_one(m + 2);
  for (auto& [gidx, e] : w.syl)
    out = braid_mul(out, braid_pow(psi_generator(gidx - 1, m), e));
  return out;
}

Suite psi_check(uint32_t max_degree) {
  Suite suite{"psi(deg<=" + std::to_string(max_degree) + ")"};
  for (uint32_t m = 0; m <= max_degree; m++) {
    // (a) successive quotients realize the bijection g_i <-> A_{i+1,m+2}
    for (uint32_t i = 0; i <= m; i++) {
      BraidWord next = i + 1 <= m ? psi_generator(i + 1, m) : braid_one(m + 2);
      BraidWord quot = braid_mul(psi_generator(i, m), braid_inv(next));
      suite.record("generator-bijection",
                   "m=" + std::to_string(m) + ",i=" + std::to_string(i),
                   braids_equal(quot, braid_agen(m + 2, i + 1, m + 2)));
      // (b) kernel of the loop structure map (top face)
      suite.record("kernel-membership",
                   "m=" + std::to_string(m) + ",i=" + std::to_string(i),
                   braids_equal(ap_face(m + 1, psi_generator(i, m)),
                                braid_one(m + 1)));
    }
    // (c) compatibility with every face and degeneracy
    for (uint32_t i = 0; i <= m; i++) {
      Word gi = word_gen(i + 1);
      for (uint32_t t = 0; t <= m && m >= 1; t++) {
        BraidWord lhs = psi_apply(m - 1, fdelta1_face(t, gi, m));
        BraidWord rhs = ap_face(t, psi_generator(i, m));
        suite.record("face-compat",
                     "m=" + std::to_string(m) + ",t=" + std::to_string(t) +
                         ",i=" + std::to_string(i),
                     braids_equal(lhs, rhs));
      }
      for (uint32_t t = 0; t <= m && m + 1 <= max_degree; t++) {
        BraidWord lhs = psi_apply(m + 1, fdelta1_degeneracy(t, gi, m));
        BraidWord rhs = ap_degeneracy(t, psi_generator(i, m));
        suite.record("degeneracy-compat",
                     "m=" + std::to_string(m) + ",t=" + std::to_string(t) +
                         ",i=" + std::to_string(i),
                     braids_equal(lhs, rhs));
      }
    }
  }
  return suite;
}

namespace {

// family adaptor: uniform element/operator/equality view for the sweeps
struct FamilyOps {
  Family fam;
  uint32_t degree;

  bool word_based() const { return fam != Family::AP; }

  Word wface(uint32_t t, const Word& w, uint32_t n) const {
    return fam == Family::FDELTA1 ? fdelta1_face(t, w, n) : fs1_face(t, w, n);
  }
  Word wdegen(uint32_t t, const Word& w, uint32_t n) const {
    return fam == Family::FDELTA1 ? fdelta1_degeneracy(t, w, n)
                                  : fs1_degeneracy(t, w, n);
  }
  uint32_t wrank(uint32_t n) const {
    return fam == Family::FDELTA1 ? n + 1 : n;
  }
  bool wequal(const Word& a, const Word& b, uint32_t n) const {
    if (fam == Family::KS1) return kn_equal(a, b, wrank(n));
    return a == b;
  }
};

std::string inst(uint32_t n, uint32_t i, uint32_t j, const std::string& tag) {
  return "n=" + std::to_string(n) + ",i=" + std::to_string(i) +
         ",j=" + std::to_string(j) + (tag.empty() ? "" : "," + tag);
}

}  // namespace

Suite verify_simplicial_identities(Family fam, uint32_t max_degree,
                                   uint32_t words_per_degree, uint64_t seed,
                                   uint32_t word_len) {
  static const char* names[] = {"AP", "FS1", "FDELTA1", "KS1"};
  Suite suite{std::string("simplicial-identities(") + names[int(fam)] +
              ",deg<=" + std::to_string(max_degree) + ")"};
  Rng rng(seed);
  FamilyOps ops{fam, 0};

  for (uint32_t n = 0; n <= max_degree; n++) {
    // test pool: generators plus random elements
    std::vector<Word> wpool;
    std::vector<BraidWord> bpool;
    if (fam == Family::AP) {
      for (uint32_t r = 1; r <= n; r++)
        for (uint32_t s = r + 1; s <= n + 1; s++)
          bpool.push_back(braid_agen(n + 1, r, s));
      for (uint32_t k = 0; k < words_per_degree && n >= 1; k++)
        bpool.push_back(random_pure_braid(rng, n + 1, word_len));
    } else {
      uint32_t rank = ops.wrank(n);
      for (uint32_t g = 1; g <= rank; g++) wpool.push_back(word_gen(g));
      for (uint32_t k = 0; k < words_per_degree && rank > 0; k++)
        wpool.push_back(rng.word(rank, word_len));
    }

    auto record_all = [&](const std::string& check, uint32_t i, uint32_t j,
                          auto&& lhs_of, auto&& rhs_of, uint32_t target_deg) {
      if (fam == Family::AP) {
        for (auto& b : bpool) {
          bool ok = braids_equal(lhs_of(b), rhs_of(b));
          suite.record(check, inst(n, i, j, ""), ok);
          if (!ok) return;
        }
      } else {
        for (auto& w : wpool) {
          bool ok = ops.wequal(lhs_of(w), rhs_of(w), target_deg);
          suite.record(check, inst(n, i, j, ""), ok);
          if (!ok) return;
        }
      }
    };

    auto face = [&](uint32_t t, auto&& x, uint32_t deg) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BraidWord>)
        return ap_face(t, x);
      else
        return ops.wface(t, x, deg);
    };
    auto degen = [&](uint32_t t, auto&& x, uint32_t deg) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BraidWord>)
        return ap_degeneracy(t, x);
      else
        return ops.wdegen(t, x, deg);
    };

    // d_i d_j = d_{j-1} d_i, i < j
    if (n >= 2)
      for (uint32_t j = 1; j <= n; j++)
        for (uint32_t i = 0; i < j; i++)
          record_all(
              "dd", i, j,
              [&](auto& x) { return face(i, face(j, x, n), n - 1); },
              [&](auto& x) { return face(j - 1, face(i, x, n), n - 1); },
              n - 2);
    // s_i s_j = s_{j+1} s_i, i <= j
    for (uint32_t j = 0; j <= n; j++)
      for (uint32_t i = 0; i <= j; i++)
        record_all(
            "ss", i, j,
            [&](auto& x) { return degen(i, degen(j, x, n), n + 1); },
            [&](auto& x) { return degen(j + 1, degen(i, x, n), n + 1); },
            n + 2);
    // d_i s_j = s_{j-1} d_i, i < j
    if (n >= 1)
      for (uint32_t j = 1; j <= n; j++)
        for (uint32_t i = 0; i < j; i++)
          record_all(
              "ds-low", i, j,
              [&](auto& x) { return face(i, degen(j, x, n), n + 1); },
              [&](auto& x) { return degen(j - 1, face(i, x, n), n - 1); }, n);
    // d_j s_j = id = d_{j+1} s_j
    for (uint32_t j = 0; j <= n; j++) {
      record_all(
          "ds-id", j, j,
          [&](auto& x) { return face(j, degen(j, x, n), n + 1); },
          [&](auto& x) { return x; }, n);
      record_all(
          "ds-id", j + 1, j,
          [&](auto& x) { return face(j + 1, degen(j, x, n), n + 1); },
          [&](auto& x) { return x; }, n);
    }
    // d_i s_j = s_j d_{i-1}, i > j + 1
    if (n >= 1)
      for (uint32_t j = 0; j <= n; j++)
        for (uint32_t i = j + 2; i <= n + 1; i++)
          record_all(
              "ds-high", i, j,
              [&](auto& x) { return face(i, degen(j, x, n), n + 1); },
              [&](auto& x) { return degen(j, face(i - 1, x, n), n - 1); }, n);
  }
  return suite;
}

Suite theta_morphism_check(uint32_t max_degree) {
  Suite suite{"theta-morphism(deg<=" + std::to_string(max_degree) + ")"};
  suite.record("theta-x1-deg1", "", braids_equal(theta(1, word_gen(1)),
                                                 braid_agen(2, 1, 2)));
  for (uint32_t n = 1; n <= max_degree; n++)
    for (uint32_t q = 1; q <= n; q++) {
      Word xq = word_gen(q);
      for (uint32_t t = 0; t <= n; t++) {
        BraidWord lhs = theta(n - 1, fs1_face(t, xq, n));
        BraidWord rhs = ap_face(t, theta_generator(q, n));
        suite.record("face",
                     "n=" + std::to_string(n) + ",q=" + std::to_string(q) +
                         ",t=" + std::to_string(t),
                     braids_equal(lhs, rhs));
      }
      for (uint32_t t = 0; t <= n; t++) {
        BraidWord lhs = theta(n + 1, fs1_degeneracy(t, xq, n));
        BraidWord rhs = ap_degeneracy(t, theta_generator(q, n));
        suite.record("degeneracy",
                     "n=" + std::to_string(n) + ",q=" + std::to_string(q) +
                         ",t=" + std::to_string(t),
                     braids_equal(lhs, rhs));
      }
    }
  return suite;
}

Suite rho_commutes_check(uint32_t max_degree, uint32_t samples, uint64_t seed) {
  Suite suite{"rho-commutes(deg<=" + std::to_string(max_degree) + ")"};
  Rng rng(seed);
  for (uint32_t n = 1; n <= max_degree; n++) {
    for (uint32_t k = 0; k < samples; k++) {
      Word w = rng.word(n, 3);
      // perturb by a relation word: same class in the reduced group
      uint32_t i = uint32_t(1 + rng.next(n));
      Word wp = word_mul(w, kn_relation_word(i, rng.word(n, 3)));
      bool same = kn_equal(w, wp, n);
      suite.record("relation-kill", "n=" + std::to_string(n), same);
      for (uint32_t t = 0; t <= n && same; t++) {
        suite.record("face", "n=" + std::to_string(n) + ",t=" + std::to_string(t),
                      n == 1 || kn_equal(fs1_face(t, w, n), fs1_face(t, wp, n),
                                         n - 1));
        suite.record("degeneracy",
                     "n=" + std::to_string(n) + ",t=" + std::to_string(t),
                     kn_equal(fs1_degeneracy(t, w, n),
                              fs1_degeneracy(t, wp, n), n + 1));
      }
    }
  }
  return suite;
}

}  // namespace braidlab
