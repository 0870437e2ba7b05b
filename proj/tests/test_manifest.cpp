#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solvmf/cohomology.hpp"
#include "solvmf/manifest.hpp"
#include "support/test_support.hpp"

using namespace solvmf;
using namespace solvmf::testing;

namespace {

bool has_error_at(const ManifestResult& r, const std::string& path) {
  for (const auto& e : r.errors)
    if (e.path == path) return true;
  return false;
}

}  // namespace

TEST_CASE("every preset parses and validates cleanly") {
  auto names = preset_names();
  REQUIRE(names.size() == 6);
  for (const auto& name : names) {
    CAPTURE(name);
    ManifestResult r = parse_manifest(preset_manifest(name));
    REQUIRE_MESSAGE(r.ok(), r.summary());
    ValidationReport v = validate(*r.spec);
    CHECK_MESSAGE(v.ok(), v.summary());
  }
  CHECK_THROWS_AS(preset_manifest("no-such-preset"), Error);
}

TEST_CASE("example1B preset carries the pi lattice") {
  ManifestResult r = parse_manifest(preset_manifest("example1B"));
  REQUIRE(r.ok());
  CHECK(r.spec->n == 1);
  CHECK(r.spec->m == 2);
  REQUIRE(r.spec->lattice.size() == 2);
  CHECK(r.spec->lattice[1].coords[1] == FormalReal::pi(Rational(1)));
  // and the parsed spec reproduces the in-memory fixture
  BComplex from_preset = build_bcomplex(ValidatedModel::check(*r.spec));
  BComplex from_fixture = build_bcomplex(ValidatedModel::check(example1_spec('B')));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(from_preset.dim(p, q) == from_fixture.dim(p, q));
}

TEST_CASE("schema violations carry JSON paths") {
  SUBCASE("missing assertion flag") {
    ManifestResult r = parse_manifest(R"({
      "schema_version": 1, "n": 1, "m": 0,
      "alphas": [], "nilpotent": {"brackets": {}},
      "lattice": [["1", "0"], ["0", "1"]]
    })");
    CHECK_FALSE(r.ok());
    CHECK(has_error_at(r, "/assert_nilmanifold_dolbeault"));
  }
  SUBCASE("wrong generator count") {
    ManifestResult r = parse_manifest(R"({
      "schema_version": 1, "n": 1, "m": 0,
      "alphas": [], "nilpotent": {"brackets": {}},
      "lattice": [["1", "0"]],
      "assert_nilmanifold_dolbeault": true
    })");
    CHECK(has_error_at(r, "/lattice"));
  }
  SUBCASE("unknown fields are rejected") {
    ManifestResult r = parse_manifest(R"({
      "schema_version": 1, "n": 1, "m": 0,
      "alphas": [], "nilpotent": {"brackets": {}},
      "lattice": [["1", "0"], ["0", "1"]],
      "assert_nilmanifold_dolbeault": true,
      "comment": "free-floating"
    })");
    CHECK(has_error_at(r, "/comment"));
  }
  SUBCASE("malformed JSON") {
    ManifestResult r = parse_manifest("{ not json");
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.errors.empty());
    CHECK(r.errors[0].path.empty());
  }
  SUBCASE("bad formal real coordinate") {
    ManifestResult r = parse_manifest(R"({
      "schema_version": 1, "n": 1, "m": 0,
      "alphas": [], "nilpotent": {"brackets": {}},
      "lattice": [["1 + + 2", "0"], ["0", "1"]],
      "assert_nilmanifold_dolbeault": true
    })");
    CHECK(has_error_at(r, "/lattice/0/0"));
  }
  SUBCASE("bad schema version") {
    ManifestResult r = parse_manifest(R"({
      "schema_version": 2, "n": 1, "m": 0,
      "alphas": [], "nilpotent": {"brackets": {}},
      "lattice": [["1", "0"], ["0", "1"]],
      "assert_nilmanifold_dolbeault": true
    })");
    CHECK(has_error_at(r, "/schema_version"));
  }
  SUBCASE("floating point rationals are rejected") {
    ManifestResult r = parse_manifest(R"({
      "schema_version": 1, "n": 1, "m": 1,
      "alphas": [[[0.5, "0", "0", "0"]]], "nilpotent": {"brackets": {}},
      "lattice": [["1", "0"], ["0", "1"]],
      "assert_nilmanifold_dolbeault": true
    })");
    CHECK(has_error_at(r, "/alphas/0/0/0"));
  }
}

TEST_CASE("formal real grammar") {
  CHECK(parse_formal_real("3/2*pi + 1*b") ==
        FormalReal::pi(rational(3, 2)) + FormalReal::symbol("b"));
  CHECK(parse_formal_real("0") == FormalReal(0));
  CHECK(parse_formal_real("-2") == FormalReal(-2));
  CHECK(parse_formal_real("pi") == FormalReal::pi(Rational(1)));
  CHECK(parse_formal_real("-pi + 1/2") == FormalReal::pi(Rational(-1)) + FormalReal(rational(1, 2)));
  CHECK(parse_formal_real("b") == FormalReal::symbol("b"));
  CHECK(parse_formal_real("2*pi - 2*pi") == FormalReal(0));
  CHECK_THROWS_AS(parse_formal_real("1 + + 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formal_real("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formal_real(""), std::invalid_argument);
}

TEST_CASE("gaussian coefficient grammar") {
  CHECK(parse_gauss("1") == GaussRat(1));
  CHECK(parse_gauss("-1/2") == GaussRat(rational(-1, 2)));
  CHECK(parse_gauss("i") == GaussRat::i());
  CHECK(parse_gauss("-i") == -GaussRat::i());
  CHECK(parse_gauss("3/2i") == GaussRat{Rational(0), rational(3, 2)});
  CHECK(parse_gauss("(1+i)") == GaussRat{Rational(1), Rational(1)});
  CHECK(parse_gauss("(1/2-3/4i)") == GaussRat{rational(1, 2), rational(-3, 4)});
  CHECK_THROWS_AS(parse_gauss("xyz"), std::invalid_argument);
}

TEST_CASE("form expressions round-trip through their printed representation") {
  CHECK(parse_form_expr("0").is_zero());
  CHECK(parse_form_expr("-1*w1^wb2") ==
        -wedge(Form::generator({GenKind::w, 1}), Form::generator({GenKind::wb, 2})));
  CHECK(parse_form_expr("xb1^w1") ==
        wedge(Form::generator({GenKind::xb, 1}), Form::generator({GenKind::w, 1})));

  std::mt19937 rng(113);
  GeneratorUniverse u{2, 3};
  for (int iter = 0; iter < 100; ++iter) {
    Form f;
    for (int t = 0; t < 3; ++t) {
      auto mask = [&](int bits) {
        return static_cast<std::uint32_t>(std::uniform_int_distribution<int>(0, (1 << bits) - 1)(rng));
      };
      f += Form(rand_gauss(rng), Monomial{mask(u.n), mask(u.m), mask(u.n), mask(u.m)});
    }
    CHECK(parse_form_expr(to_expr_string(f)) == f);
  }
}

TEST_CASE("dbar images through the manifest match the bracket pathway") {
  // complex Heisenberg fiber: dbar wb3 = -wb1^wb2, everything else closed
  ManifestResult images = parse_manifest(R"({
    "schema_version": 1, "n": 1, "m": 3,
    "alphas": [[["0","0","0","0"]], [["0","0","0","0"]], [["0","0","0","0"]]],
    "nilpotent": {"dbar_images": {"wb3": "-1*wb1^wb2"}},
    "lattice": [["1", "0"], ["0", "1"]],
    "assert_nilmanifold_dolbeault": true
  })");
  REQUIRE_MESSAGE(images.ok(), images.summary());
  REQUIRE(validate(*images.spec).ok());

  CohomologyTable via_images =
      cohomology(build_bcomplex(ValidatedModel::check(*images.spec)).cx);
  CohomologyTable via_brackets =
      cohomology(build_bcomplex(ValidatedModel::check(heisenberg_spec())).cx);
  CHECK(via_images.dims_equal(via_brackets));
}

TEST_CASE("bracket manifests reject inconsistent data with located errors") {
  ManifestResult r = parse_manifest(R"({
    "schema_version": 1, "n": 1, "m": 3,
    "alphas": [[["0","0","0","0"]], [["0","0","0","0"]], [["0","0","0","0"]]],
    "nilpotent": {"brackets": {"C": [[1, 2, 3, "1"], [1, 3, 1, "bogus"]]}},
    "lattice": [["1", "0"], ["0", "1"]],
    "assert_nilmanifold_dolbeault": true
  })");
  CHECK_FALSE(r.ok());
  CHECK(has_error_at(r, "/nilpotent/brackets/C/1/3"));
}
