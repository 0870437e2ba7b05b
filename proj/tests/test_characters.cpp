#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solvmf/characters.hpp"
#include "support/test_support.hpp"

using namespace solvmf;
using solvmf::testing::character_from_quadruples;
using solvmf::testing::rand_rational;

namespace {

Character rand_character(std::mt19937& rng, int n) {
  Character chi(n);
  for (int i = 0; i < n; ++i) {
    chi.coord(i).a = rand_rational(rng, 3, 2);
    chi.coord(i).b = rand_rational(rng, 3, 2);
    chi.coord(i).c = rand_rational(rng, 3, 2);
    chi.coord(i).d = rand_rational(rng, 3, 2);
  }
  return chi;
}

}  // namespace

TEST_CASE("group structure of characters") {
  Character ex = character_from_quadruples({{1, 0, 0, 0}});    // e^x
  Character emx = character_from_quadruples({{-1, 0, 0, 0}});  // e^-x
  CHECK((ex * emx).is_trivial());
  // conj e^{x+iy} = e^{x-iy}
  CHECK(character_from_quadruples({{1, 0, 0, 1}}).conjugate() ==
        character_from_quadruples({{1, 0, 0, -1}}));
  // (e^{-iy})^{-1} = e^{iy}
  CHECK(character_from_quadruples({{0, 0, 0, -1}}).inverse() ==
        character_from_quadruples({{0, 0, 0, 1}}));
  Character two_dim(2);
  CHECK_THROWS_AS(ex * two_dim, std::invalid_argument);
}

TEST_CASE("unitary equivalents") {
  // e^x ~ e^{-iy}
  CHECK(unitary_equivalent(character_from_quadruples({{1, 0, 0, 0}})) ==
        character_from_quadruples({{0, 0, 0, -1}}));
  // holomorphic characters are equivalent to the trivial one
  CHECK(unitary_equivalent(character_from_quadruples({{1, 0, 0, 1}})).is_trivial());
  // e^{x-iy} ~ e^{-2iy}
  CHECK(unitary_equivalent(character_from_quadruples({{1, 0, 0, -1}})) ==
        character_from_quadruples({{0, 0, 0, -2}}));
}

TEST_CASE("predicates") {
  CHECK(character_from_quadruples({{1, 0, 0, 1}}).is_holomorphic());
  Character beta = character_from_quadruples({{0, 0, 0, -1}});
  CHECK(beta.is_unitary());
  CHECK_FALSE(beta.is_holomorphic());

  // unitary and holomorphic together force triviality
  std::mt19937 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    Character u(2);
    for (int i = 0; i < 2; ++i) {
      u.coord(i).c = rand_rational(rng);
      u.coord(i).d = rand_rational(rng);
    }
    REQUIRE(u.is_unitary());
    if (u.is_holomorphic()) CHECK(u.is_trivial());
    // and conversely the holomorphy defect never hides: u trivial iff c=d=0
    if (u.is_trivial()) CHECK(u.is_holomorphic());
  }
}

TEST_CASE("unitary_equivalent properties on random characters") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 1 + iter % 3;
    Character alpha = rand_character(rng, n);
    Character beta = unitary_equivalent(alpha);
    CHECK(beta.is_unitary());
    CHECK((alpha * beta.inverse()).is_holomorphic());
    // idempotent on unitary characters
    CHECK(unitary_equivalent(beta) == beta);
    // group homomorphism
    Character alpha2 = rand_character(rng, n);
    CHECK(unitary_equivalent(alpha * alpha2) ==
          unitary_equivalent(alpha) * unitary_equivalent(alpha2));
  }
}

TEST_CASE("lattice restriction triviality") {
  // Gamma' = a Z + 2 pi i Z
  std::vector<LatticeGen> two_pi = {LatticeGen{{FormalReal::symbol("a"), FormalReal(0)}},
                                    LatticeGen{{FormalReal(0), FormalReal::pi(Rational(2))}}};
  std::vector<LatticeGen> pi_lat = {LatticeGen{{FormalReal::symbol("a"), FormalReal(0)}},
                                    LatticeGen{{FormalReal(0), FormalReal::pi(Rational(1))}}};
  std::vector<LatticeGen> sym_lat = {LatticeGen{{FormalReal::symbol("a"), FormalReal::symbol("b")}},
                                     LatticeGen{{FormalReal::symbol("c"), FormalReal::symbol("d")}}};

  Character beta = character_from_quadruples({{0, 0, 0, -1}});   // e^{-iy}
  Character beta2 = character_from_quadruples({{0, 0, 0, -2}});  // e^{-2iy}

  CHECK(restricts_trivially(beta, two_pi));
  CHECK_FALSE(restricts_trivially(beta, pi_lat));
  CHECK(restricts_trivially(beta2, pi_lat));
  CHECK_FALSE(restricts_trivially(beta2, sym_lat));

  // the trivial character restricts trivially to anything
  CHECK(restricts_trivially(Character::trivial(1), two_pi));
  CHECK(restricts_trivially(Character::trivial(1), sym_lat));

  // non-unitary input is rejected, not silently normalized
  CHECK_THROWS_AS(restricts_trivially(character_from_quadruples({{1, 0, 0, 0}}), two_pi),
                  std::invalid_argument);
}
