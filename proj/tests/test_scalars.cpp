#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solvmf/scalars.hpp"
#include "support/test_support.hpp"

using namespace solvmf;
using solvmf::testing::rand_gauss;
using solvmf::testing::rand_gauss_nonzero;
using solvmf::testing::rand_rational;

TEST_CASE("gaussian rational arithmetic basics") {
  GaussRat one_plus_i{Rational(1), Rational(1)};
  GaussRat one_minus_i{Rational(1), Rational(-1)};
  CHECK(one_plus_i * one_minus_i == GaussRat(2));
  CHECK(GaussRat{rational(3, 2), Rational(-2)}.conj() == GaussRat{rational(3, 2), Rational(2)});
  CHECK(one_plus_i / one_plus_i == GaussRat(1));
  CHECK_THROWS_AS(one_plus_i / GaussRat(0), std::domain_error);
}

TEST_CASE("gaussian rationals satisfy the field axioms on random triples") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    GaussRat a = rand_gauss(rng), b = rand_gauss(rng), c = rand_gauss(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + GaussRat(0) == a);
    CHECK(a * GaussRat(1) == a);
    CHECK(a - a == GaussRat(0));
    GaussRat nz = rand_gauss_nonzero(rng);
    CHECK(nz * (a / nz) == a);
    CHECK(nz / nz == GaussRat(1));
  }
}

TEST_CASE("conjugation is an involution and a ring homomorphism") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    GaussRat a = rand_gauss(rng), b = rand_gauss(rng);
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("rational parsing is strict") {
  CHECK((parse_rational("3/2") == rational(3, 2)));
  CHECK((parse_rational("-7") == Rational(-7)));
  CHECK((parse_rational("4/6") == rational(2, 3)));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/2/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("membership in 2*pi*Z") {
  CHECK(is_in_two_pi_Z(FormalReal::pi(Rational(2))));
  CHECK_FALSE(is_in_two_pi_Z(FormalReal::pi(Rational(1))));
  CHECK_FALSE(is_in_two_pi_Z(FormalReal::symbol("b")));
  CHECK(is_in_two_pi_Z(FormalReal(0)));
  CHECK_FALSE(is_in_two_pi_Z(FormalReal(2)));
  CHECK_FALSE(is_in_two_pi_Z(FormalReal::pi(Rational(2)) + FormalReal::symbol("b")));
}

TEST_CASE("2*q*pi lies in 2*pi*Z exactly when q is an integer") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    Rational q = rand_rational(rng, 8, 5);
    CHECK(is_in_two_pi_Z(FormalReal::pi(2 * q)) == is_integer(q));
  }
}

TEST_CASE("formal reals form a module over the rationals") {
  std::mt19937 rng(13);
  std::vector<std::string> syms{"a", "b"};
  for (int iter = 0; iter < 200; ++iter) {
    FormalReal u = testing::rand_formal_real(rng, syms);
    FormalReal v = testing::rand_formal_real(rng, syms);
    FormalReal w = testing::rand_formal_real(rng, syms);
    Rational s = rand_rational(rng);
    CHECK(u + v == v + u);
    CHECK((u + v) + w == u + (v + w));
    CHECK((u + v) * s == u * s + v * s);
    CHECK(u - u == FormalReal(0));
  }
}

TEST_CASE("formal real equality is componentwise") {
  FormalReal u = FormalReal(1) + FormalReal::pi(rational(1, 2)) + FormalReal::symbol("a");
  FormalReal v = FormalReal::symbol("a") + FormalReal::pi(rational(1, 2)) + FormalReal(1);
  CHECK(u == v);
  CHECK(u != u + FormalReal::symbol("b"));
  // cancelled symbols leave no residue
  CHECK(FormalReal::symbol("a") - FormalReal::symbol("a") == FormalReal(0));
}
