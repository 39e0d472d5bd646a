#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/report.hpp"

namespace braidlab {

/// Named sweep bounds for the verification orchestrator.
struct Budget {
  std::string name = "standard";
  uint32_t braid_rel_n = 6;       // sigma and pure braid relation families
  uint32_t pullback_n = 4;        // holomorph pullback / conjugation formula
  uint32_t ap_degree = 5;         // AP simplicial identities
  uint32_t word_degree = 6;       // FS1/FDELTA1/KS1 identities
  uint32_t theta_degree = 5;      // theta morphism checks
  uint32_t psi_degree = 4;        // loop comparison
  uint32_t moore_degree = 4;      // moore projection sweeps
  uint32_t kohno_strands = 6;     // relation instances
  uint32_t rank_consistency_k = 5, rank_consistency_d = 4;
  uint32_t theta_ident_n = 5;     // graded identities
  uint32_t admissible_n = 4, admissible_q = 4;
  uint32_t leading_n = 3, leading_q = 3;
  uint32_t inject_n = 4, inject_d = 5;
  std::vector<uint64_t> moduli{0, 2, 3, 5};
  uint32_t kn_rank_n = 5;
  uint32_t random_words = 100;
  uint32_t random_triples = 100;
  uint32_t kn_relation_samples = 500;
};

Budget budget_named(const std::string& name);  // smoke | standard | deep

struct VerifyOptions {
  Budget budget;
  uint64_t seed = 20240817;
  uint64_t mod = 0;  // 0: run the configured modulus sweep
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<Suite> suites;

  bool ok() const {
    for (auto& s : suites)
      if (!s.ok()) return false;
    return true;
  }
  size_t total_checked() const {
    size_t n = 0;
    for (auto& s : suites) n += s.checked;
    return n;
  }
};

/// Runs every theorem-level suite in the repo at the given budget.
VerifyReport verify_all(const VerifyOptions& options);

std::string report_json(const VerifyReport& report);

}  // namespace braidlab
