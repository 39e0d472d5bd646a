#include "braidlab/verify.hpp"

#include <json.hpp>

#include "braidlab/braid.hpp"
#include "braidlab/holomorph.hpp"
#include "braidlab/kohno.hpp"
#include "braidlab/magnus.hpp"
#include "braidlab/reduced.hpp"
#include "braidlab/simplicial.hpp"

namespace braidlab {

Budget budget_named(const std::string& name) {
  Budget b;
  b.name = name;
  if (name == "smoke") {
    b.braid_rel_n = 4;
    b.pullback_n = 3;
    b.ap_degree = 3;
    b.word_degree = 4;
    b.theta_degree = 3;
    b.psi_degree = 3;
    b.moore_degree = 3;
    b.kohno_strands = 4;
    b.rank_consistency_k = 4;
    b.rank_consistency_d = 3;
    b.theta_ident_n = 3;
    b.admissible_n = 3;
    b.admissible_q = 3;
    b.leading_n = 3;
    b.leading_q = 2;
    b.inject_n = 3;
    b.inject_d = 3;
    b.kn_rank_n = 4;
    b.random_words = 25;
    b.random_triples = 25;
    b.kn_relation_samples = 100;
  } else if (name == "deep") {
    b.word_degree = 6;
    b.inject_n = 5;
    b.inject_d = 6;
    b.ap_degree = 5;
    b.kohno_strands = 6;
    b.rank_consistency_k = 5;
    b.rank_consistency_d = 4;
    b.kn_rank_n = 5;
  } else if (name != "standard") {
    throw std::invalid_argument("unknown budget: " + name);
  }
  return b;
}

namespace {

Suite hall_witt_suite(uint32_t triples, uint64_t seed) {
  Suite suite{"hall-witt"};
  Rng rng(seed);
  auto run = [&](const Word& a, const Word& b, const Word& c,
                 const std::string& id) {
    auto r = hall_witt_check(a, b, c);
    for (size_t i = 0; i < r.size(); i++)
      suite.record("identity-" + std::to_string(i + 1), id, r[i]);
  };
  run(word_gen(1), word_gen(2), word_gen(3), "generators");
  run(word_one(), rng.word(3, 4), rng.word(3, 4), "identity-first");
  for (uint32_t t = 0; t < triples; t++)
    run(rng.word(4, 1 + uint32_t(rng.next(8))),
        rng.word(4, 1 + uint32_t(rng.next(8))),
        rng.word(4, 1 + uint32_t(rng.next(8))), "random-" + std::to_string(t));
  return suite;
}

Suite commutator_lemma_suite(uint32_t triples, uint64_t seed) {
  Suite suite{"commutator-identity"};
  Rng rng(seed);
  for (uint32_t t = 0; t < triples; t++)
    suite.record("lemma", "random-" + std::to_string(t),
                 commutator_identity_check(rng.word(3, 1 + uint32_t(rng.next(6))),
                                           rng.word(3, 1 + uint32_t(rng.next(6))),
                                           rng.word(3, 1 + uint32_t(rng.next(6)))));
  return suite;
}

Suite kn_rank_suite(uint32_t max_n) {
  Suite suite{"kn-graded-ranks"};
  auto factorial = [](uint32_t x) {
    size_t f = 1;
    for (uint32_t i = 2; i <= x; i++) f *= i;
    return f;
  };
  auto binom = [](uint32_t n, uint32_t t) {
    size_t r = 1;
    for (uint32_t i = 0; i < t; i++) r = r * (n - i) / (i + 1);
    return r;
  };
  for (uint32_t n = 2; n <= max_n; n++)
    for (uint32_t t = 1; t <= n; t++)
      suite.record("rank",
                   "(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")",
                   kn_graded_rank(n, t) == binom(n, t) * factorial(t - 1));
  return suite;
}

Suite kn_relation_suite(uint32_t samples, uint64_t seed) {
  Suite suite{"kn-relations"};
  Rng rng(seed);
  for (uint32_t t = 0; t < samples; t++) {
    uint32_t n = uint32_t(2 + rng.next(3));  // n <= 4
    uint32_t i = uint32_t(1 + rng.next(n));
    Word g = rng.word(n, 1 + uint32_t(rng.next(6)));
    suite.record("relation-word", "n=" + std::to_string(n),
                 kn_embed(kn_relation_word(i, g), n).is_one());
  }
  // simple commutators with a repeated generator die
  Rng rng2(seed ^ 0x9e3779b97f4a7c15ull);
  for (uint32_t t = 0; t < samples / 5 + 1; t++) {
    uint32_t n = uint32_t(2 + rng2.next(3));
    uint32_t len = uint32_t(2 + rng2.next(3));
    std::vector<uint32_t> gens;
    for (uint32_t p = 0; p < len; p++)
      gens.push_back(uint32_t(1 + rng2.next(n)));
    gens.push_back(gens[rng2.next(gens.size())]);  // force a repeat
    suite.record("repeated-commutator", "n=" + std::to_string(n),
                 kn_embed(left_normed_commutator(gens), n).is_one());
  }
  return suite;
}

Suite moore_suite(uint32_t max_degree, uint32_t samples, uint64_t seed) {
  Suite suite{"moore"};
  // the fundamental cycle and its theta image
  Word hopf = commutator(word_gen(1), word_gen(2));
  suite.record("fs1-cycle", "[x1,x2]",
               moore_faces_trivial(Family::FS1, 2, hopf, 0));
  suite.record("ap-cycle", "theta[x1,x2]",
               moore_faces_trivial_ap(2, theta(2, hopf), 0));
  Rng rng(seed);
  for (uint32_t n = 1; n <= max_degree; n++)
    for (uint32_t t = 0; t < samples; t++) {
      BraidWord gamma = random_pure_braid(rng, n + 1, 3);
      MooreProjection pr = moore_project(n, gamma);
      bool chain = moore_faces_trivial_ap(n, pr.chain, 1);
      MooreProjection pr2 = moore_project(n, pr.chain);
      bool idem = braids_equal(pr2.chain, pr.chain);
      suite.record("chain", "n=" + std::to_string(n), chain);
      suite.record("idempotent", "n=" + std::to_string(n), idem);
    }
  return suite;
}

Suite theta_injectivity_evidence_suite() {
  Suite suite{"theta-injectivity-evidence"};
  for (uint32_t n = 1; n <= 3; n++) {
    // every nontrivial reduced word of length <= 4 maps to a nontrivial braid
    std::vector<Word> pool{word_one()};
    for (uint32_t len = 1; len <= 4; len++) {
      std::vector<Word> next;
      for (auto& w : pool)
        if (w.length() == len - 1)
          for (uint32_t g = 1; g <= n; g++)
            for (int64_t e : {int64_t(1), int64_t(-1)}) {
              Word v = word_mul(w, word_gen(g, e));
              if (v.length() == len) next.push_back(v);
            }
      for (auto& w : next)
        suite.record("nontrivial", "n=" + std::to_string(n),
                     !braids_equal(theta(n, w), braid_one(n + 1)));
      pool.insert(pool.end(), next.begin(), next.end());
    }
  }
  return suite;
}

Suite injectivity_suite(const Budget& b) {
  Suite suite{"injectivity-ranks"};
  for (uint32_t n = 2; n <= b.inject_n; n++)
    for (uint32_t d = 1; d <= b.inject_d; d++) {
      size_t domain = witt_number(n, d);
      for (uint64_t mod : b.moduli) {
        InjectivityResult r = injectivity_rank(n, d, mod);
        bool ok = r.domain_dim == domain && r.rank == domain &&
                  (mod != 0 || r.unit_divisors);
        suite.record("full-rank",
                     "(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                         ",mod=" + std::to_string(mod) + ")",
                     ok);
      }
    }
  return suite;
}

Suite leading_coefficient_suite(uint32_t max_n, uint32_t max_q) {
  Suite suite{"leading-coefficient"};
  for (uint32_t n = 2; n <= max_n; n++) {
    std::vector<std::vector<uint32_t>> seqs{{}};
    for (uint32_t q = 1; q <= max_q; q++) {
      std::vector<std::vector<uint32_t>> next;
      for (auto& s : seqs)
        if (s.size() == q - 1)
          for (uint32_t j = 2; j <= n; j++) {
            auto t = s;
            t.push_back(j);
            next.push_back(t);
          }
      for (auto& s : next) {
        LeadingCoeff lc = leading_coefficient_check(n, s);
        std::string id = "n=" + std::to_string(n) + ",seq=";
        for (auto j : s) id += std::to_string(j);
        suite.record("unit-leading", id,
                     lc.decomposition_ok && lc.unit && lc.lower_filtration_ok);
      }
      seqs = next;
    }
  }
  return suite;
}

Suite rank_consistency_suite(uint32_t max_k, uint32_t max_d) {
  Suite suite{"kohno-rank-consistency"};
  for (uint32_t k = 3; k <= max_k; k++)
    for (uint32_t d = 1; d <= max_d; d++)
      suite.record("rank-equals-dim",
                   "(k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")",
                   kohno_rank_consistency(k, d));
  return suite;
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
  const Budget& b = options.budget;
  VerifyReport rep;
  rep.options = options;

  for (uint32_t n = 2; n <= b.braid_rel_n; n++) {
    rep.suites.push_back(verify_braid_relations(n));
    rep.suites.push_back(verify_pn_relations(n));
  }
  for (uint32_t n = 2; n <= b.pullback_n; n++) {
    rep.suites.push_back(conjugation_formula_check(n));
    rep.suites.push_back(pullback_check(n));
  }
  rep.suites.push_back(chi_e_exchange_check(50, options.seed));

  rep.suites.push_back(verify_simplicial_identities(
      Family::AP, b.ap_degree, b.random_words, options.seed));
  rep.suites.push_back(verify_simplicial_identities(
      Family::FS1, b.word_degree, b.random_words, options.seed + 1));
  rep.suites.push_back(verify_simplicial_identities(
      Family::FDELTA1, b.word_degree, b.random_words, options.seed + 2));
  rep.suites.push_back(verify_simplicial_identities(
      Family::KS1, b.word_degree, b.random_words, options.seed + 3));

  rep.suites.push_back(theta_morphism_check(b.theta_degree));
  rep.suites.push_back(theta_injectivity_evidence_suite());
  rep.suites.push_back(psi_check(b.psi_degree));
  rep.suites.push_back(moore_suite(b.moore_degree, b.random_words / 10 + 1,
                                   options.seed + 4));

  rep.suites.push_back(hall_witt_suite(b.random_triples, options.seed + 5));
  rep.suites.push_back(commutator_lemma_suite(b.random_triples,
                                              options.seed + 6));

  rep.suites.push_back(kn_rank_suite(b.kn_rank_n));
  rep.suites.push_back(kn_relation_suite(b.kn_relation_samples,
                                         options.seed + 7));
  rep.suites.push_back(rho_commutes_check(3, b.random_words / 10 + 1,
                                          options.seed + 8));

  if (options.mod == 0) {
    rep.suites.push_back(infinitesimal_relations_check(b.kohno_strands, 0));
    for (uint64_t m : b.moduli)
      if (m != 0)
        rep.suites.push_back(infinitesimal_relations_check(b.kohno_strands, m));
  } else {
    rep.suites.push_back(
        infinitesimal_relations_check(b.kohno_strands, options.mod));
  }
  rep.suites.push_back(
      rank_consistency_suite(b.rank_consistency_k, b.rank_consistency_d));

  for (uint32_t n = 2; n <= b.theta_ident_n; n++) {
    rep.suites.push_back(theta_identities_check(n));
    rep.suites.push_back(theta_square_check(n, 3));
  }
  rep.suites.push_back(admissible_bracket_sweep(b.admissible_n, b.admissible_q));
  rep.suites.push_back(leading_coefficient_suite(b.leading_n, b.leading_q));
  rep.suites.push_back(injectivity_suite(b));
  rep.suites.push_back(appendix_check());
  return rep;
}

std::string report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["config"]["budget"] = report.options.budget.name;
  j["config"]["seed"] = report.options.seed;
  j["config"]["mod"] = report.options.mod;
  j["config"]["bounds"] = {
      {"braid_rel_n", report.options.budget.braid_rel_n},
      {"pullback_n", report.options.budget.pullback_n},
      {"ap_degree", report.options.budget.ap_degree},
      {"word_degree", report.options.budget.word_degree},
      {"theta_degree", report.options.budget.theta_degree},
      {"psi_degree", report.options.budget.psi_degree},
      {"inject_n", report.options.budget.inject_n},
      {"inject_d", report.options.budget.inject_d},
  };
  j["suites"] = nlohmann::json::array();
  for (auto& s : report.suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["instances_checked"] = s.checked;
    js["failures"] = nlohmann::json::array();
    for (auto& [check, instance] : s.failures)
      js["failures"].push_back({{"check", check}, {"instance", instance}});
    j["suites"].push_back(js);
  }
  j["ok"] = report.ok();
  j["total_checked"] = report.total_checked();
  return j.dump(2);
}

}  // namespace braidlab
