#include "solvmf/model.hpp"

#include <algorithm>

namespace solvmf {

namespace {

std::uint32_t full_mask(int count) {
  return count == 0 ? 0u : (count >= 32 ? ~0u : (1u << count) - 1u);
}

// Indices (1-based) of the set bits.
std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

DifferentialSpec build_nil_dbar(const ModelSpec& spec) {
  const GeneratorUniverse u = spec.universe();
  if (spec.brackets && spec.dbar_images)
    throw Error("ModelSpec carries both bracket constants and dbar images");
  if (spec.brackets) return ce_from_brackets(*spec.brackets, u);
  std::vector<Form> images(u.total());
  if (spec.dbar_images)
    for (const auto& [gen, img] : *spec.dbar_images) images[generator_id(u, gen)] = img;
  DifferentialSpec d(u, std::move(images), /*dolbeault=*/true);
  d.validate();
  return d;
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += '\n';
    out += "[" + issue.code + "] " + issue.message;
  }
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : Error("model validation failed:\n" + report.summary()), report_(std::move(report)) {}

ValidationReport validate(const ModelSpec& spec) {
  ValidationReport report;
  auto fail = [&](std::string code, std::string message) {
    report.issues.push_back({std::move(code), std::move(message)});
  };

  if (spec.n < 1) fail("dimension", "n must be at least 1 (the abelian factor carries the lattice)");
  if (spec.m < 0) fail("dimension", "m must be nonnegative");
  if (spec.n > 16 || spec.m > 16) fail("dimension", "n and m are capped at 16");
  if (static_cast<int>(spec.alphas.size()) != spec.m)
    fail("weights", "expected exactly m = " + std::to_string(spec.m) + " weight characters");
  for (std::size_t j = 0; j < spec.alphas.size(); ++j)
    if (spec.alphas[j].dim() != spec.n)
      fail("weights", "weight " + std::to_string(j + 1) + " is not a character of C^" +
                          std::to_string(spec.n));
  if (!report.ok()) return report;

  // Lattice rank: 2n generators with 2n coordinates each.
  if (static_cast<int>(spec.lattice.size()) != 2 * spec.n)
    fail("lattice_rank", "a lattice of C^" + std::to_string(spec.n) + " needs exactly " +
                             std::to_string(2 * spec.n) + " generators, got " +
                             std::to_string(spec.lattice.size()));
  for (std::size_t g = 0; g < spec.lattice.size(); ++g) {
    if (static_cast<int>(spec.lattice[g].coords.size()) != 2 * spec.n)
      fail("lattice_rank",
           "lattice generator " + std::to_string(g + 1) + " must have 2n coordinates");
    else
      for (const auto& coord : spec.lattice[g].coords)
        for (const auto& [name, c] : coord.sym_coeffs())
          if (std::find(spec.symbols.begin(), spec.symbols.end(), name) == spec.symbols.end())
            fail("symbols", "lattice generator " + std::to_string(g + 1) +
                                " uses undeclared symbol '" + name + "'");
  }

  // Unimodularity: the a- and b-vectors of the weights sum to zero, i.e.
  // prod_j alpha_j * conj(alpha_j) = 1.
  for (int i = 0; i < spec.n; ++i) {
    Rational sum_a(0), sum_b(0);
    for (const auto& alpha : spec.alphas) {
      sum_a += alpha.coord(i).a;
      sum_b += alpha.coord(i).b;
    }
    if (sum_a != 0 || sum_b != 0)
      fail("unimodularity", "weights are not unimodular: the exponent sums over coordinate " +
                                std::to_string(i + 1) + " are (" + to_string(sum_a) + ", " +
                                to_string(sum_b) + "), expected (0, 0)");
  }

  if (!spec.nilmanifold_assumption_asserted)
    fail("nilmanifold_assumption",
         "the manifest must assert that the Dolbeault cohomology of the nilpotent fiber is "
         "computed by its Lie algebra (holds e.g. for iterated principal holomorphic torus "
         "bundles, rational complex structures, and complex Lie groups)");

  if (spec.brackets && spec.dbar_images)
    fail("nilpotent_structure", "give either bracket constants or dbar images, not both");

  const auto alpha_at = [&](int j) -> const Character& { return spec.alphas.at(j - 1); };

  if (spec.brackets) {
    if (spec.brackets->m != spec.m)
      fail("nilpotent_structure", "bracket rank differs from m");
    else {
      auto bracket_issues = check_brackets(*spec.brackets);
      for (const auto& issue : bracket_issues) report.issues.push_back({issue.code, issue.message});
      if (bracket_issues.empty()) {
        // Weight compatibility: the action by holomorphic automorphisms
        // scales brackets consistently.
        for (const auto& t : spec.brackets->C)
          if (!t.coeff.is_zero() && !(alpha_at(t.a) * alpha_at(t.b) == alpha_at(t.c)))
            fail("weight_compatibility",
                 "C^" + std::to_string(t.c) + "_{" + std::to_string(t.a) + "," + std::to_string(t.b) +
                     "} is nonzero but alpha_" + std::to_string(t.a) + " * alpha_" +
                     std::to_string(t.b) + " != alpha_" + std::to_string(t.c));
        for (const auto& t : spec.brackets->D)
          if (!t.coeff.is_zero() &&
              !(alpha_at(t.a) * alpha_at(t.b).conjugate() == alpha_at(t.c)))
            fail("weight_compatibility",
                 "D^" + std::to_string(t.c) + "_{" + std::to_string(t.a) + "," + std::to_string(t.b) +
                     "} is nonzero but alpha_" + std::to_string(t.a) + " * conj(alpha_" +
                     std::to_string(t.b) + ") != alpha_" + std::to_string(t.c));
        for (const auto& t : spec.brackets->E)
          if (!t.coeff.is_zero() &&
              !(alpha_at(t.a) * alpha_at(t.b).conjugate() == alpha_at(t.c).conjugate()))
            fail("weight_compatibility",
                 "E^" + std::to_string(t.c) + "_{" + std::to_string(t.a) + "," + std::to_string(t.b) +
                     "} is nonzero but alpha_" + std::to_string(t.a) + " * conj(alpha_" +
                     std::to_string(t.b) + ") != conj(alpha_" + std::to_string(t.c) + ")");
      }
    }
  }

  if (spec.dbar_images) {
    const std::size_t issues_before = report.issues.size();
    for (const auto& [gen, img] : *spec.dbar_images) {
      std::string name = Monomial::of(gen).to_string();
      if (gen.kind != GenKind::w && gen.kind != GenKind::wb) {
        fail("nilpotent_structure", "dbar image given for " + name + "; only w/wb generators carry one");
        continue;
      }
      if (gen.index < 1 || gen.index > spec.m) {
        fail("nilpotent_structure", "dbar image given for " + name + " outside 1..m");
        continue;
      }
      for (const auto& [mon, c] : img.terms()) {
        if (mon.I != 0 || mon.K != 0) {
          fail("nilpotent_structure",
               "dbar image of " + name + " must involve only the nilpotent generators");
          continue;
        }
        std::pair<int, int> pq{mon.degree_p(), mon.degree_q()};
        if (gen.kind == GenKind::w && pq != std::pair{1, 1}) {
          // A (0,2) component of d(w_j) is exactly the integrability defect
          // of the complex structure.
          fail(pq == std::pair{0, 2} ? "integrability" : "bidegree",
               "term " + mon.to_string() + " in the dbar image of " + name +
                   (pq == std::pair{0, 2} ? " violates integrability of the complex structure"
                                          : " has the wrong bidegree"));
        } else if (gen.kind == GenKind::wb && pq != std::pair{0, 2}) {
          fail("bidegree", "term " + mon.to_string() + " in the dbar image of " + name +
                               " has the wrong bidegree (a (1,1) part belongs to del, not dbar)");
        }
      }
    }
    if (report.issues.size() == issues_before) {
      // Weight compatibility, term by term: dbar must preserve the full
      // alpha-weight of every generator.
      auto full_weight = [&](const Monomial& mon) {
        Character chi = Character::trivial(spec.n);
        for (int j : mask_indices(mon.J)) chi = chi * alpha_at(j).inverse();
        for (int l : mask_indices(mon.L)) chi = chi * alpha_at(l).conjugate().inverse();
        return chi;
      };
      for (const auto& [gen, img] : *spec.dbar_images) {
        Character want = full_weight(Monomial::of(gen));
        for (const auto& [mon, c] : img.terms())
          if (!(full_weight(mon) == want))
            fail("weight_compatibility", "term " + mon.to_string() + " in the dbar image of " +
                                             Monomial::of(gen).to_string() +
                                             " changes the character weight");
      }
    }
  }

  bool structure_clean = true;
  for (const auto& issue : report.issues)
    structure_clean = structure_clean && issue.code != "nilpotent_structure" &&
                      issue.code != "bidegree" && issue.code != "integrability" &&
                      issue.code != "jacobi" && issue.code != "antisymmetry" &&
                      issue.code != "reality" && issue.code != "bracket_index";
  if (structure_clean) {
    try {
      build_nil_dbar(spec);
    } catch (const Error& e) {
      fail("dbar_squared", e.what());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

ValidatedModel::ValidatedModel(ModelSpec spec)
    : spec_(std::move(spec)), nil_dbar_(build_nil_dbar(spec_)) {
  betas_.reserve(spec_.m);
  gammas_.reserve(spec_.m);
  for (int j = 1; j <= spec_.m; ++j) {
    betas_.push_back(unitary_equivalent(alpha(j)));
    gammas_.push_back(unitary_equivalent(alpha(j).conjugate()));
  }
}

ValidatedModel ValidatedModel::check(ModelSpec spec) {
  ValidationReport report = validate(spec);
  if (!report.ok()) throw ValidationError(std::move(report));
  return ValidatedModel(std::move(spec));
}

ValidatedModel ValidatedModel::assume_valid(ModelSpec spec) { return ValidatedModel(std::move(spec)); }

Character ValidatedModel::monomial_unitary_weight(const Monomial& mon) const {
  Character chi = Character::trivial(spec_.n);
  for (int j : mask_indices(mon.J)) chi = chi * beta(j);
  for (int l : mask_indices(mon.L)) chi = chi * gamma(l);
  return chi;
}

Character ValidatedModel::monomial_full_weight(const Monomial& mon) const {
  Character chi = Character::trivial(spec_.n);
  for (int j : mask_indices(mon.J)) chi = chi * alpha(j).inverse();
  for (int l : mask_indices(mon.L)) chi = chi * alpha(l).conjugate().inverse();
  return chi;
}

bool ValidatedModel::weight_restricts_trivially(const Monomial& mon) const {
  auto key = std::pair{mon.J, mon.L};
  auto it = filter_cache_.find(key);
  if (it != filter_cache_.end()) return it->second;
  bool keep = restricts_trivially(monomial_unitary_weight(mon), spec_.lattice);
  filter_cache_.emplace(key, keep);
  return keep;
}

// ---------------------------------------------------------------------------

int BigradedComplex::dim(int p, int q) const {
  if (p < 0 || q < 0 || p > top() || q > top()) return 0;
  return static_cast<int>(basis[p][q].size());
}

int BigradedComplex::index_of(int p, int q, const Monomial& mon) const {
  const auto& b = basis.at(p).at(q);
  auto it = std::lower_bound(b.begin(), b.end(), mon);
  if (it == b.end() || *it != mon) return -1;
  return static_cast<int>(it - b.begin());
}

int BigradedComplex::total_dim() const {
  int total = 0;
  for (const auto& row : basis)
    for (const auto& b : row) total += static_cast<int>(b.size());
  return total;
}

Form BigradedComplex::to_form(int p, int q, const QVector& coords) const {
  const auto& b = basis.at(p).at(q);
  Form f;
  for (std::size_t i = 0; i < b.size(); ++i) f += Form(coords.at(i), b[i]);
  return f;
}

QVector BigradedComplex::coordinates(int p, int q, const Form& f) const {
  QVector v(dim(p, q));
  for (const auto& [mon, c] : f.terms()) {
    int idx = index_of(p, q, mon);
    if (idx < 0)
      throw Error("form leaves the (" + std::to_string(p) + "," + std::to_string(q) +
                  ") basis at monomial " + mon.to_string());
    v[idx] = c;
  }
  return v;
}

BigradedComplex build_bigraded(const GeneratorUniverse& uni, const DifferentialSpec& dbar,
                               const std::function<bool(const Monomial&)>& keep) {
  if (!dbar.is_dolbeault() || !dbar.validated())
    throw Error("build_bigraded needs a validated dbar spec");
  const int N = uni.complex_dim();
  BigradedComplex cx;
  cx.uni = uni;
  cx.basis.assign(N + 1, std::vector<std::vector<Monomial>>(N + 1));
  // Ascending mask iteration in (I, J, K, L) priority matches the canonical
  // monomial order, so every bucket ends up sorted.
  for (std::uint32_t I = 0; I <= full_mask(uni.n); ++I) {
    for (std::uint32_t J = 0; J <= full_mask(uni.m); ++J) {
      for (std::uint32_t K = 0; K <= full_mask(uni.n); ++K) {
        for (std::uint32_t L = 0; L <= full_mask(uni.m); ++L) {
          Monomial mon{I, J, K, L};
          if (keep(mon)) cx.basis[mon.degree_p()][mon.degree_q()].push_back(mon);
          if (L == full_mask(uni.m)) break;
        }
        if (K == full_mask(uni.n)) break;
      }
      if (J == full_mask(uni.m)) break;
    }
    if (I == full_mask(uni.n)) break;
  }
  cx.dbar.assign(N + 1, std::vector<Matrix>(N + 1));
  for (int p = 0; p <= N; ++p) {
    for (int q = 0; q <= N; ++q) {
      const auto& src = cx.basis[p][q];
      const int target_dim = q + 1 <= N ? static_cast<int>(cx.basis[p][q + 1].size()) : 0;
      Matrix mat(target_dim, static_cast<int>(src.size()));
      for (std::size_t col = 0; col < src.size(); ++col) {
        Form img = apply_diff(dbar, Form(GaussRat(1), src[col]));
        for (const auto& [mon, c] : img.terms()) {
          int row = q + 1 <= N ? cx.index_of(p, q + 1, mon) : -1;
          if (row < 0)
            throw Error("complex is not closed under dbar: dbar(" + src[col].to_string() +
                        ") contains " + mon.to_string() + " which the filter rejects");
          mat.at(row, static_cast<int>(col)) = c;
        }
      }
      cx.dbar[p][q] = std::move(mat);
    }
    for (int q = 0; q + 1 <= N; ++q)
      if (!(cx.dbar[p][q + 1] * cx.dbar[p][q]).is_zero())
        throw Error("dbar composed with dbar is nonzero on bidegree (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
  }
  return cx;
}

BComplex build_bcomplex(const ValidatedModel& model) {
  BigradedComplex cx = build_bigraded(
      model.universe(), model.nil_dbar(),
      [&model](const Monomial& mon) { return model.weight_restricts_trivially(mon); });
  // dbar must preserve the full character weight of every basis monomial.
  const int N = cx.top();
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q < N; ++q)
      for (const Monomial& mon : cx.basis_at(p, q)) {
        Character want = model.monomial_full_weight(mon);
        Form img = apply_diff(model.nil_dbar(), Form(GaussRat(1), mon));
        for (const auto& [t, c] : img.terms())
          if (!(model.monomial_full_weight(t) == want))
            throw Error("dbar changes the character weight of " + mon.to_string() +
                        "; the manifest weights and nilpotent structure are inconsistent");
      }
  return BComplex{model, std::move(cx)};
}

bool star_condition_check(const ValidatedModel& model, int max_m) {
  const int m = model.spec().m;
  if (m > max_m)
    throw Error("star condition enumerates 2^(2m) index pairs and m = " + std::to_string(m) +
                " exceeds the bound " + std::to_string(max_m) +
                "; raise it explicitly (--max-star-dim) to force the check");
  for (std::uint32_t J = 0; J <= full_mask(m); ++J) {
    for (std::uint32_t L = 0; L <= full_mask(m); ++L) {
      Monomial mon{0, J, 0, L};
      Character weight = model.monomial_unitary_weight(mon);
      if (!weight.is_trivial() && restricts_trivially(weight, model.spec().lattice)) return false;
      if (L == full_mask(m)) break;
    }
    if (J == full_mask(m)) break;
  }
  return true;
}

}  // namespace solvmf
