// Timings for the hot paths: building the filtered complex, the exact
// elimination behind the cohomology tables, harmonic spaces, and a full
// report. The synthetic family grows the fiber rank to show the 4^(n+m)
// monomial scaling.

#include <benchmark/benchmark.h>

#include "solvmf/cohomology.hpp"
#include "solvmf/hodge.hpp"
#include "solvmf/manifest.hpp"
#include "solvmf/report.hpp"

using namespace solvmf;

namespace {

ValidatedModel preset_model(const std::string& name) {
  ManifestResult parsed = parse_manifest(preset_manifest(name));
  if (!parsed.ok()) throw Error("bad preset: " + parsed.summary());
  return ValidatedModel::check(*parsed.spec);
}

// Abelian fiber of rank m with weights e^{x}, e^{-x}, e^{2x}, e^{-2x}, ...
// and the pi lattice, so roughly half of the monomials survive.
ModelSpec synthetic_spec(int m) {
  ModelSpec spec;
  spec.n = 1;
  spec.m = m;
  for (int j = 0; j < m; ++j) {
    Character alpha(1);
    long k = (j / 2 + 1) * (j % 2 == 0 ? 1 : -1);
    alpha.coord(0).a = k;
    spec.alphas.push_back(alpha);
  }
  if (m % 2 == 1) spec.alphas[m - 1].coord(0).a = 0;  // keep the product unimodular
  spec.brackets = NilBrackets{m, {}, {}, {}};
  spec.symbols = {"a"};
  spec.lattice = {LatticeGen{{FormalReal::symbol("a"), FormalReal(0)}},
                  LatticeGen{{FormalReal(0), FormalReal::pi(Rational(1))}}};
  spec.nilmanifold_assumption_asserted = true;
  return spec;
}

void BM_BuildFilteredComplex(benchmark::State& state) {
  ValidatedModel model = ValidatedModel::check(synthetic_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_bcomplex(model));
}
BENCHMARK(BM_BuildFilteredComplex)->Arg(2)->Arg(3)->Arg(4);

void BM_Cohomology(benchmark::State& state) {
  ValidatedModel model = ValidatedModel::check(synthetic_spec(static_cast<int>(state.range(0))));
  BComplex b = build_bcomplex(model);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(b.cx));
}
BENCHMARK(BM_Cohomology)->Arg(2)->Arg(3)->Arg(4);

void BM_HarmonicSpaces(benchmark::State& state) {
  ValidatedModel model = ValidatedModel::check(synthetic_spec(static_cast<int>(state.range(0))));
  BComplex b = build_bcomplex(model);
  const int N = b.cx.top();
  for (auto _ : state) {
    int total = 0;
    for (int p = 0; p <= N; ++p)
      for (int q = 0; q <= N; ++q) total += harmonic_space(b.cx, p, q).dim();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HarmonicSpaces)->Arg(2)->Arg(3);

void BM_DeRham(benchmark::State& state) {
  ValidatedModel model = ValidatedModel::check(synthetic_spec(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(de_rham(model));
}
BENCHMARK(BM_DeRham)->Arg(2)->Arg(3);

void BM_FullReport(benchmark::State& state) {
  const std::string names[] = {"example1C", "example2-generic", "torus3"};
  const std::string& name = names[state.range(0)];
  ValidatedModel model = preset_model(name);
  const std::string& text = preset_manifest(name);
  for (auto _ : state) benchmark::DoNotOptimize(build_report(model, text));
  state.SetLabel(name);
}
BENCHMARK(BM_FullReport)->Arg(0)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
