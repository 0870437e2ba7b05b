#include "solvmf/cohomology.hpp"

#include <algorithm>

namespace solvmf {

namespace {

std::uint32_t full_mask(int count) {
  return count == 0 ? 0u : (count >= 32 ? ~0u : (1u << count) - 1u);
}

Matrix incoming_or_zero(const BigradedComplex& cx, int p, int q) {
  if (q == 0) return Matrix(cx.dim(p, 0), 0);
  return cx.dbar_at(p, q - 1);
}

}  // namespace

CohomologyTable cohomology(const BigradedComplex& cx) {
  const int N = cx.top();
  CohomologyTable table;
  table.h.assign(N + 1, std::vector<int>(N + 1, 0));
  table.representatives.assign(N + 1, std::vector<std::vector<Form>>(N + 1));
  for (int p = 0; p <= N; ++p) {
    for (int q = 0; q <= N; ++q) {
      auto reps = quotient_representatives(cx.dbar_at(p, q), incoming_or_zero(cx, p, q));
      table.h[p][q] = static_cast<int>(reps.size());
      for (const auto& v : reps) table.representatives[p][q].push_back(cx.to_form(p, q, v));
    }
    // Each fixed-p row is a complex, so its Euler characteristic must match
    // the alternating dimension sum; a mismatch means elimination went wrong.
    long lhs = 0, rhs = 0;
    for (int q = 0; q <= N; ++q) {
      lhs += (q % 2 == 0 ? 1 : -1) * table.h[p][q];
      rhs += (q % 2 == 0 ? 1 : -1) * cx.dim(p, q);
    }
    if (lhs != rhs) throw Error("internal: Euler characteristic mismatch in row p=" + std::to_string(p));
  }
  return table;
}

DifferentialSpec lie_full_dbar(const ValidatedModel& model) {
  const GeneratorUniverse u = model.universe();
  std::vector<Form> images(u.total());
  for (int j = 1; j <= u.m; ++j) {
    // (0,1)-parts of d log alpha_j and d log conj(alpha_j)
    Form twist_w, twist_wb;
    for (int i = 1; i <= u.n; ++i) {
      twist_w += Form(model.alpha(j).zbar_coeff(i - 1), Monomial::of({GenKind::xb, i}));
      twist_wb += Form(model.alpha(j).z_coeff(i - 1).conj(), Monomial::of({GenKind::xb, i}));
    }
    images[generator_id(u, {GenKind::w, j})] =
        model.nil_dbar().image({GenKind::w, j}) - wedge(twist_w, Form::generator({GenKind::w, j}));
    images[generator_id(u, {GenKind::wb, j})] =
        model.nil_dbar().image({GenKind::wb, j}) - wedge(twist_wb, Form::generator({GenKind::wb, j}));
  }
  DifferentialSpec spec(u, std::move(images), /*dolbeault=*/true);
  spec.validate();
  return spec;
}

CohomologyTable lie_dolbeault(const ValidatedModel& model, LieVariant which) {
  auto keep_all = [](const Monomial&) { return true; };
  switch (which) {
    case LieVariant::nilpotent: {
      const GeneratorUniverse nil{0, model.spec().m};
      std::vector<Form> images(nil.total());
      for (int j = 1; j <= nil.m; ++j) {
        images[generator_id(nil, {GenKind::w, j})] = model.nil_dbar().image({GenKind::w, j});
        images[generator_id(nil, {GenKind::wb, j})] = model.nil_dbar().image({GenKind::wb, j});
      }
      DifferentialSpec spec(nil, std::move(images), /*dolbeault=*/true);
      spec.validate();
      return cohomology(build_bigraded(nil, spec, keep_all));
    }
    case LieVariant::direct_sum:
      return cohomology(build_bigraded(model.universe(), model.nil_dbar(), keep_all));
    case LieVariant::full:
      return cohomology(build_bigraded(model.universe(), lie_full_dbar(model), keep_all));
  }
  throw Error("lie_dolbeault: bad variant");
}

GradedComplex build_graded(const GeneratorUniverse& uni, const DifferentialSpec& d_total) {
  if (!d_total.validated()) throw Error("build_graded needs a validated differential");
  GradedComplex cx;
  cx.uni = uni;
  cx.basis.assign(uni.total() + 1, {});
  for (std::uint32_t I = 0; I <= full_mask(uni.n); ++I) {
    for (std::uint32_t J = 0; J <= full_mask(uni.m); ++J) {
      for (std::uint32_t K = 0; K <= full_mask(uni.n); ++K) {
        for (std::uint32_t L = 0; L <= full_mask(uni.m); ++L) {
          Monomial mon{I, J, K, L};
          cx.basis[mon.degree()].push_back(mon);
          if (L == full_mask(uni.m)) break;
        }
        if (K == full_mask(uni.n)) break;
      }
      if (J == full_mask(uni.m)) break;
    }
    if (I == full_mask(uni.n)) break;
  }
  for (auto& b : cx.basis) std::sort(b.begin(), b.end());
  cx.d.assign(uni.total() + 1, Matrix());
  for (int k = 0; k <= uni.total(); ++k) {
    const auto& src = cx.basis[k];
    const auto& dst = k + 1 <= uni.total() ? cx.basis[k + 1] : std::vector<Monomial>{};
    Matrix mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t col = 0; col < src.size(); ++col) {
      Form img = apply_diff(d_total, Form(GaussRat(1), src[col]));
      for (const auto& [mon, c] : img.terms()) {
        auto it = std::lower_bound(dst.begin(), dst.end(), mon);
        if (it == dst.end() || *it != mon)
          throw Error("internal: total differential leaves the graded basis");
        mat.at(static_cast<int>(it - dst.begin()), static_cast<int>(col)) = c;
      }
    }
    cx.d[k] = std::move(mat);
  }
  return cx;
}

std::vector<int> de_rham(const ValidatedModel& model) {
  GradedComplex cx = build_graded(model.universe(), total_from_dolbeault(lie_full_dbar(model)));
  std::vector<int> betti(cx.top() + 1, 0);
  for (int k = 0; k <= cx.top(); ++k) {
    Matrix incoming = k == 0 ? Matrix(cx.dim(0), 0) : cx.d[k - 1];
    betti[k] = static_cast<int>(quotient_representatives(cx.d[k], incoming).size());
  }
  return betti;
}

HodgeSumReport hodge_sum_check(const ValidatedModel& model) {
  CohomologyTable table = cohomology(build_bcomplex(model).cx);
  std::vector<int> betti = de_rham(model);
  const int N = table.top();
  HodgeSumReport report;
  report.all_equal = true;
  for (int k = 0; k <= 2 * N; ++k) {
    HodgeSumReport::Entry e;
    e.k = k;
    for (int p = 0; p <= N; ++p) {
      int q = k - p;
      if (q >= 0 && q <= N) e.dolbeault_sum += table.at(p, q);
    }
    e.betti = betti.at(k);
    e.equal = e.dolbeault_sum == e.betti;
    report.all_equal = report.all_equal && e.equal;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace solvmf
