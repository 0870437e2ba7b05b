#include "solvmf/differential.hpp"

#include <array>

namespace solvmf {

namespace {

std::uint32_t full_mask(int count) {
  return count == 0 ? 0u : (count >= 32 ? ~0u : (1u << count) - 1u);
}

bool in_universe(const Monomial& mon, const GeneratorUniverse& u) {
  return (mon.I & ~full_mask(u.n)) == 0 && (mon.J & ~full_mask(u.m)) == 0 &&
         (mon.K & ~full_mask(u.n)) == 0 && (mon.L & ~full_mask(u.m)) == 0;
}

std::string gen_name(Generator g) { return Monomial::of(g).to_string(); }

std::pair<int, int> gen_bidegree(Generator g) {
  return (g.kind == GenKind::x || g.kind == GenKind::w) ? std::pair{1, 0} : std::pair{0, 1};
}

}  // namespace

int generator_id(const GeneratorUniverse& u, Generator g) {
  switch (g.kind) {
    case GenKind::x: return g.index - 1;
    case GenKind::w: return u.n + g.index - 1;
    case GenKind::xb: return u.n + u.m + g.index - 1;
    case GenKind::wb: return 2 * u.n + u.m + g.index - 1;
  }
  throw Error("generator_id: bad kind");
}

Generator generator_from_id(const GeneratorUniverse& u, int id) {
  if (id < u.n) return {GenKind::x, id + 1};
  if (id < u.n + u.m) return {GenKind::w, id - u.n + 1};
  if (id < 2 * u.n + u.m) return {GenKind::xb, id - u.n - u.m + 1};
  if (id < u.total()) return {GenKind::wb, id - 2 * u.n - u.m + 1};
  throw Error("generator_from_id: out of range");
}

DifferentialSpec::DifferentialSpec(GeneratorUniverse u, std::vector<Form> images, bool dolbeault)
    : uni_(u), images_(std::move(images)), dolbeault_(dolbeault) {
  if (static_cast<int>(images_.size()) != uni_.total())
    throw Error("DifferentialSpec: expected one image per generator");
}

DifferentialSpec DifferentialSpec::zero(GeneratorUniverse u, bool dolbeault) {
  DifferentialSpec spec(u, std::vector<Form>(u.total()), dolbeault);
  spec.validated_ = true;
  return spec;
}

Form apply_diff_unchecked(const DifferentialSpec& spec, const Form& u) {
  Form result;
  for (const auto& [mon, c] : u.terms()) {
    auto gens = mon.generators();
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const Form& img = spec.image(gens[t]);
      if (img.is_zero()) continue;
      Monomial prefix, suffix;
      for (std::size_t s = 0; s < t; ++s) {
        Monomial merged;
        wedge_sign(prefix, Monomial::of(gens[s]), &merged);
        prefix = merged;
      }
      for (std::size_t s = t + 1; s < gens.size(); ++s) {
        Monomial merged;
        wedge_sign(suffix, Monomial::of(gens[s]), &merged);
        suffix = merged;
      }
      GaussRat scale = (t % 2 == 0) ? c : -c;
      result += wedge(wedge(Form(scale, prefix), img), Form(GaussRat(1), suffix));
    }
  }
  return result;
}

void DifferentialSpec::validate() {
  for (int id = 0; id < uni_.total(); ++id) {
    Generator g = generator_from_id(uni_, id);
    const Form& img = images_[id];
    for (const auto& [mon, c] : img.terms())
      if (!in_universe(mon, uni_))
        throw Error("differential image of " + gen_name(g) + " uses generators outside the universe");
    if (dolbeault_ && !img.is_zero()) {
      auto [p, q] = gen_bidegree(g);
      auto bidegree = img.pure_bidegree();
      if (!bidegree || *bidegree != std::pair{p, q + 1})
        throw Error("dbar image of " + gen_name(g) + " must be pure bidegree (" +
                    std::to_string(p) + "," + std::to_string(q + 1) + ")");
    }
  }
  for (int id = 0; id < uni_.total(); ++id) {
    Form dd = apply_diff_unchecked(*this, images_[id]);
    if (!dd.is_zero())
      throw Error("differential does not square to zero on " +
                  gen_name(generator_from_id(uni_, id)) + ": d(d(gen)) = " + dd.to_string());
  }
  validated_ = true;
}

Form apply_diff(const DifferentialSpec& spec, const Form& u) {
  if (!spec.validated()) throw Error("apply_diff: differential spec was not validated");
  return apply_diff_unchecked(spec, u);
}

// ---------------------------------------------------------------------------

namespace {

// Bracket table on the 2m basis vectors Y_1..Y_m, Yb_1..Yb_m; values are
// coefficient vectors of length 2m.
class BracketTable {
 public:
  explicit BracketTable(int m) : m_(m), table_(4 * m * m) {}

  std::vector<GaussRat>& at(int u, int v) { return table_[u * 2 * m_ + v]; }
  const std::vector<GaussRat>& at(int u, int v) const { return table_[u * 2 * m_ + v]; }

  void add(int u, int v, int w, const GaussRat& c) {
    ensure(u, v);
    ensure(v, u);
    at(u, v)[w] += c;
    at(v, u)[w] -= c;
  }

  std::vector<GaussRat> bracket_vec(const std::vector<GaussRat>& lhs, int v) const {
    std::vector<GaussRat> out(2 * m_);
    for (int u = 0; u < 2 * m_; ++u) {
      if (lhs[u].is_zero()) continue;
      const auto& row = at(u, v);
      if (row.empty()) continue;
      for (int w = 0; w < 2 * m_; ++w) out[w] += lhs[u] * row[w];
    }
    return out;
  }

  std::vector<GaussRat> jacobiator(int u, int v, int w) const {
    std::vector<GaussRat> acc(2 * m_);
    auto cyc = [&](int a, int b, int c) {
      const auto& ab = at(a, b);
      if (ab.empty()) return;
      auto res = bracket_vec(ab, c);
      for (int k = 0; k < 2 * m_; ++k) acc[k] += res[k];
    };
    cyc(u, v, w);
    cyc(v, w, u);
    cyc(w, u, v);
    return acc;
  }

 private:
  void ensure(int u, int v) {
    if (at(u, v).empty()) at(u, v).assign(2 * m_, GaussRat());
  }

  int m_;
  std::vector<std::vector<GaussRat>> table_;
};

bool all_zero(const std::vector<GaussRat>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

struct AccumulatedBrackets {
  // keyed by (a-1, b-1, c-1), 0-based
  std::map<std::array<int, 3>, GaussRat> C, D, E;
};

void accumulate(std::map<std::array<int, 3>, GaussRat>& dst, const BracketTriple& t) {
  auto [it, inserted] = dst.try_emplace({t.a - 1, t.b - 1, t.c - 1}, t.coeff);
  if (!inserted) it->second += t.coeff;
}

}  // namespace

std::vector<StructureIssue> check_brackets(const NilBrackets& nb) {
  std::vector<StructureIssue> issues;
  auto index_ok = [&](const BracketTriple& t) {
    return t.a >= 1 && t.a <= nb.m && t.b >= 1 && t.b <= nb.m && t.c >= 1 && t.c <= nb.m;
  };
  AccumulatedBrackets acc;
  for (const char* name : {"C", "D", "E"}) {
    const auto& src = name[0] == 'C' ? nb.C : (name[0] == 'D' ? nb.D : nb.E);
    auto& dst = name[0] == 'C' ? acc.C : (name[0] == 'D' ? acc.D : acc.E);
    for (const auto& t : src) {
      if (!index_ok(t)) {
        issues.push_back({"bracket_index",
                          std::string(name) + " entry (" + std::to_string(t.a) + "," +
                              std::to_string(t.b) + "," + std::to_string(t.c) +
                              ") has an index outside 1.." + std::to_string(nb.m)});
        continue;
      }
      accumulate(dst, t);
    }
  }
  if (!issues.empty()) return issues;

  // C must be antisymmetric in (a, b).
  for (const auto& [key, coeff] : acc.C) {
    auto [a, b, c] = key;
    if (a == b && !coeff.is_zero()) {
      issues.push_back({"antisymmetry", "C has a nonzero diagonal bracket [Y" +
                                            std::to_string(a + 1) + ",Y" + std::to_string(a + 1) + "]"});
      continue;
    }
    auto rev = acc.C.find({b, a, c});
    if (rev != acc.C.end() && !(rev->second + coeff).is_zero())
      issues.push_back({"antisymmetry",
                        "C entries for [Y" + std::to_string(a + 1) + ",Y" + std::to_string(b + 1) +
                            "] and the reversed pair do not negate each other"});
  }

  // Reality of the underlying real algebra: E^c_ab = -conj(D^c_ba).
  {
    auto value = [](const std::map<std::array<int, 3>, GaussRat>& mp, int a, int b, int c) {
      auto it = mp.find({a, b, c});
      return it == mp.end() ? GaussRat() : it->second;
    };
    for (int a = 0; a < nb.m; ++a)
      for (int b = 0; b < nb.m; ++b)
        for (int c = 0; c < nb.m; ++c) {
          GaussRat e = value(acc.E, a, b, c);
          GaussRat d = value(acc.D, b, a, c);
          if (!(e + d.conj()).is_zero()) {
            issues.push_back({"reality", "E^" + std::to_string(c + 1) + "_{" + std::to_string(a + 1) +
                                             "," + std::to_string(b + 1) +
                                             "} must equal -conj(D with swapped pair) for the "
                                             "brackets to close over a real Lie algebra"});
          }
        }
  }
  if (!issues.empty()) return issues;

  // Jacobi on the full 2m-dimensional complexified algebra.
  BracketTable table(nb.m);
  for (const auto& [key, coeff] : acc.C) {
    auto [a, b, c] = key;
    if (a < b) {
      table.add(a, b, c, coeff);
      table.add(nb.m + a, nb.m + b, nb.m + c, coeff.conj());
    }
  }
  for (const auto& [key, coeff] : acc.D) {
    auto [a, b, c] = key;
    table.add(a, nb.m + b, c, coeff);
  }
  for (const auto& [key, coeff] : acc.E) {
    auto [a, b, c] = key;
    table.add(a, nb.m + b, nb.m + c, coeff);
  }
  for (int u = 0; u < 2 * nb.m; ++u)
    for (int v = u + 1; v < 2 * nb.m; ++v)
      for (int w = v + 1; w < 2 * nb.m; ++w)
        if (!all_zero(table.jacobiator(u, v, w)))
          issues.push_back({"jacobi", "Jacobi identity fails on basis triple (" + std::to_string(u + 1) +
                                          "," + std::to_string(v + 1) + "," + std::to_string(w + 1) +
                                          ") of the complexified algebra"});
  return issues;
}

DifferentialSpec ce_from_brackets(const NilBrackets& nb, const GeneratorUniverse& u) {
  if (nb.m != u.m) throw Error("ce_from_brackets: bracket rank differs from universe");
  auto issues = check_brackets(nb);
  if (!issues.empty()) {
    std::string msg = "invalid nilpotent structure constants:";
    for (const auto& issue : issues) msg += "\n  [" + issue.code + "] " + issue.message;
    throw Error(msg);
  }
  std::vector<Form> images(u.total());
  // dbar w^c = -sum D^c_ab w_a ^ wb_b
  for (const auto& t : nb.D) {
    Form term = wedge(Form::generator({GenKind::w, t.a}), Form::generator({GenKind::wb, t.b}));
    images[generator_id(u, {GenKind::w, t.c})] -= t.coeff * term;
  }
  // dbar wb^c = -sum_{a<b} conj(C^c_ab) wb_a ^ wb_b
  for (const auto& t : nb.C) {
    if (t.coeff.is_zero() || t.a == t.b) continue;
    int a = t.a, b = t.b;
    GaussRat coeff = t.coeff.conj();
    if (a > b) {
      std::swap(a, b);
      coeff = -coeff;
    }
    Form term = wedge(Form::generator({GenKind::wb, a}), Form::generator({GenKind::wb, b}));
    images[generator_id(u, {GenKind::wb, t.c})] -= coeff * term;
  }
  DifferentialSpec spec(u, std::move(images), /*dolbeault=*/true);
  spec.validate();
  return spec;
}

DifferentialSpec total_from_dolbeault(const DifferentialSpec& dbar) {
  const GeneratorUniverse& u = dbar.universe();
  auto conj_gen = [](Generator g) {
    switch (g.kind) {
      case GenKind::x: return Generator{GenKind::xb, g.index};
      case GenKind::w: return Generator{GenKind::wb, g.index};
      case GenKind::xb: return Generator{GenKind::x, g.index};
      case GenKind::wb: return Generator{GenKind::w, g.index};
    }
    throw Error("conj_gen: bad kind");
  };
  std::vector<Form> images(u.total());
  for (int id = 0; id < u.total(); ++id) {
    Generator g = generator_from_id(u, id);
    images[id] = dbar.image(g) + form_conj(dbar.image(conj_gen(g)));
  }
  DifferentialSpec spec(u, std::move(images), /*dolbeault=*/false);
  spec.validate();
  return spec;
}

}  // namespace solvmf
