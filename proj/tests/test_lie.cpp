#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidlab/lie.hpp"
#include "braidlab/lyndon.hpp"

using namespace braidlab;

namespace {

// independent Witt-formula oracle via Moebius counting
int64_t witt_formula(int64_t k, int64_t d) {
  auto mobius = [](int64_t m) {
    int64_t mu = 1;
    for (int64_t p = 2; p * p <= m; p++) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return int64_t(0);
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  int64_t sum = 0;
  for (int64_t e = 1; e <= d; e++) {
    if (d % e) continue;
    int64_t pw = 1;
    for (int64_t i = 0; i < d / e; i++) pw *= k;
    sum += mobius(e) * pw;
  }
  return sum / d;
}

LieElement basis(uint32_t alphabet, std::initializer_list<uint8_t> w) {
  LieElement e{alphabet, {}};
  e.terms[LWord(w)] = 1;
  return e;
}

}  // namespace

TEST_CASE("lyndon enumeration matches the Witt formula oracle") {
  for (uint32_t k = 1; k <= 5; k++)
    for (uint32_t d = 1; d <= 6; d++)
      CHECK(int64_t(witt_number(k, d)) == witt_formula(k, d));
  CHECK(witt_number(3, 3) == 8);
  CHECK(witt_number(2, 5) == 6);
}

TEST_CASE("lyndon word predicates") {
  CHECK(is_lyndon({0, 1}));
  CHECK(!is_lyndon({1, 0}));
  CHECK(!is_lyndon({0, 1, 0, 1}));
  CHECK(is_lyndon({0, 0, 1, 0, 1}));
  auto [u, v] = standard_factorization({0, 0, 1, 0, 1});
  CHECK(u == LWord{0, 0, 1});
  CHECK(v == LWord{0, 1});
}

TEST_CASE("lyndon expansions are triangular with unit lead") {
  for (uint32_t d = 1; d <= 5; d++)
    for (auto& w : lyndon_words(3, d)) {
      const AssocPoly& p = lyndon_expansion(w);
      REQUIRE(p.count(w));
      CHECK(p.at(w) == 1);
      CHECK(p.begin()->first == w);  // least word in the support
    }
}

TEST_CASE("bracket examples") {
  LieElement x1 = lie_gen(3, 0), x2 = lie_gen(3, 1);
  CHECK(lie_bracket(x1, x1).is_zero());
  CHECK(lie_bracket(x1, x2) == basis(3, {0, 1}));
  // [[x1,x2],x1] = -[x1,[x1,x2]] = -(Lyndon basis element 001)
  CHECK(lie_bracket(lie_bracket(x1, x2), x1) ==
        lie_scale(basis(3, {0, 0, 1}), -1));
}

TEST_CASE("bracket against the associative oracle") {
  std::mt19937_64 rng(23);
  auto random_elem = [&](uint32_t maxdeg) {
    LieElement e = lie_zero(3);
    for (int i = 0; i < 3; i++) {
      uint32_t d = uint32_t(1 + rng() % maxdeg);
      const auto& words = lyndon_words(3, d);
      if (words.empty()) continue;
      LieElement b{3, {}};
      b.terms[words[rng() % words.size()]] = int64_t(rng() % 5) - 2;
      if (b.terms.begin()->second == 0) continue;
      lie_add_scaled(e, b, 1);
    }
    return e;
  };
  for (int t = 0; t < 40; t++) {
    LieElement a = random_elem(3), b = random_elem(3), c = random_elem(2);
    // antisymmetry
    CHECK(lie_add(lie_bracket(a, b), lie_bracket(b, a)).is_zero());
    // matches uv - vu in the free associative algebra
    AssocPoly pa = lie_to_assoc(a), pb = lie_to_assoc(b);
    AssocPoly comm = assoc_mul(pa, pb);
    assoc_add_scaled(comm, assoc_mul(pb, pa), -1);
    CHECK(lie_to_assoc(lie_bracket(a, b)) == comm);
    // Jacobi
    LieElement j = lie_bracket(lie_bracket(a, b), c);
    lie_add_scaled(j, lie_bracket(lie_bracket(b, c), a), 1);
    lie_add_scaled(j, lie_bracket(lie_bracket(c, a), b), 1);
    CHECK(j.is_zero());
  }
}

TEST_CASE("from_assoc inverts lie_to_assoc") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; t++) {
    uint32_t d = uint32_t(1 + rng() % 4);
    const auto& words = lyndon_words(3, d);
    LieElement e = lie_zero(3);
    for (int i = 0; i < 4; i++) {
      LieElement b{3, {}};
      b.terms[words[rng() % words.size()]] = int64_t(rng() % 7) - 3;
      if (b.terms.begin()->second == 0) continue;
      lie_add_scaled(e, b, 1);
    }
    CHECK(lie_from_assoc(3, lie_to_assoc(e)) == e);
  }
  CHECK_THROWS(lie_from_assoc(2, AssocPoly{{{1, 0}, 1}}));
}

TEST_CASE("left normed brackets") {
  // [[x1,x2],x3] expands into the two Lyndon basis elements of that degree
  LieElement e = lie_left_normed(3, {0, 1, 2});
  LieElement expect = basis(3, {0, 1, 2});
  lie_add_scaled(expect, basis(3, {0, 2, 1}), 1);
  CHECK(e == expect);
}

TEST_CASE("substitution is a Lie map") {
  std::vector<LieElement> imgs{lie_gen(2, 1), lie_bracket(lie_gen(2, 0),
                                                          lie_gen(2, 1))};
  LieElement a = basis(2, {0, 1});
  LieElement sub = lie_substitute(a, imgs);
  CHECK(sub == lie_bracket(imgs[0], imgs[1]));
}
