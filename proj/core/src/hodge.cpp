#include "solvmf/hodge.hpp"

#include <algorithm>
#include <map>

namespace solvmf {

std::pair<int, Monomial> hodge_star(const Monomial& mon, const GeneratorUniverse& u) {
  Monomial comp = mon.complement(u);
  Monomial vol;
  int sign = wedge_sign(mon, comp, &vol);
  // sign cannot be zero: mon and its complement are disjoint by construction
  return {sign, comp};
}

Form hodge_star(const Form& f, const GeneratorUniverse& u) {
  Form out;
  for (const auto& [mon, c] : f.terms()) {
    auto [sign, comp] = hodge_star(mon, u);
    GaussRat coeff = c.conj();
    if (sign < 0) coeff = -coeff;
    out += Form(coeff, comp);
  }
  return out;
}

Form codifferential(const Form& f, const DifferentialSpec& dbar) {
  const GeneratorUniverse& u = dbar.universe();
  return hodge_star(apply_diff(dbar, hodge_star(f, u)), u);
}

HarmonicSpace harmonic_space(const BigradedComplex& cx, int p, int q) {
  const int dim = cx.dim(p, q);
  const Matrix& out = cx.dbar_at(p, q);
  Matrix in_adj = (q == 0 ? Matrix(cx.dim(p, 0), 0) : cx.dbar_at(p, q - 1)).conj_transpose();
  // Stack both conditions into one system.
  Matrix sys(out.rows() + in_adj.rows(), dim);
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < dim; ++c) sys.at(r, c) = out.at(r, c);
  for (int r = 0; r < in_adj.rows(); ++r)
    for (int c = 0; c < dim; ++c) sys.at(out.rows() + r, c) = in_adj.at(r, c);
  HarmonicSpace h;
  h.p = p;
  h.q = q;
  for (const auto& v : kernel_basis(sys)) h.basis.push_back(cx.to_form(p, q, v));
  return h;
}

ConcreteForm concrete_form(const ValidatedModel& model, const Monomial& mon, const GaussRat& scalar) {
  // Each w_j contributes alpha_j^{-1} beta_j, each wb_l contributes
  // conj(alpha_l)^{-1} gamma_l to the function coefficient.
  Character chi = model.monomial_full_weight(mon) * model.monomial_unitary_weight(mon);
  return {std::move(chi), mon, scalar};
}

ConcreteForm conj(const ConcreteForm& f) {
  Monomial swapped{f.mon.K, f.mon.L, f.mon.I, f.mon.J};
  int sign = (f.mon.degree_p() * f.mon.degree_q()) % 2 == 0 ? 1 : -1;
  GaussRat scalar = f.scalar.conj();
  if (sign < 0) scalar = -scalar;
  return {f.chi.conjugate(), swapped, std::move(scalar)};
}

namespace {

using ConcreteKey = std::pair<Character, Monomial>;

// Span of concrete forms as coordinate rows over the shared key set.
std::vector<QVector> concrete_rows(const std::vector<std::vector<ConcreteForm>>& spans,
                                   std::map<ConcreteKey, int>& key_index) {
  for (const auto& span : spans)
    for (const auto& f : span) key_index.try_emplace({f.chi, f.mon}, 0);
  int next = 0;
  for (auto& [key, idx] : key_index) idx = next++;
  std::vector<QVector> rows;
  for (const auto& span : spans) {
    QVector row(key_index.size());
    for (const auto& f : span) row[key_index.at({f.chi, f.mon})] += f.scalar;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ConcreteForm> to_concrete(const ValidatedModel& model, const Form& f) {
  std::vector<ConcreteForm> out;
  for (const auto& [mon, c] : f.terms()) out.push_back(concrete_form(model, mon, c));
  return out;
}

int span_rank(const std::vector<QVector>& rows, std::size_t begin, std::size_t end) {
  std::vector<QVector> slice(rows.begin() + begin, rows.begin() + end);
  return rref(std::move(slice)).rank();
}

}  // namespace

bool hodge_symmetry_check(const BComplex& b, int p, int q) {
  HarmonicSpace hpq = harmonic_space(b.cx, p, q);
  HarmonicSpace hqp = harmonic_space(b.cx, q, p);
  if (hpq.dim() != hqp.dim()) return false;
  std::vector<std::vector<ConcreteForm>> spans;
  for (const auto& f : hpq.basis) {
    auto concrete = to_concrete(b.model, f);
    for (auto& term : concrete) term = conj(term);
    spans.push_back(std::move(concrete));
  }
  const std::size_t conj_count = spans.size();
  for (const auto& f : hqp.basis) spans.push_back(to_concrete(b.model, f));
  std::map<ConcreteKey, int> keys;
  auto rows = concrete_rows(spans, keys);
  int rank_conj = span_rank(rows, 0, conj_count);
  int rank_other = span_rank(rows, conj_count, rows.size());
  int rank_both = span_rank(rows, 0, rows.size());
  return rank_conj == rank_both && rank_other == rank_both;
}

bool serre_duality_check(const BComplex& b) {
  const int N = b.cx.top();
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q <= N; ++q)
      for (const Monomial& mon : b.basis_at(p, q)) {
        auto [sign, comp] = hodge_star(mon, b.cx.uni);
        if (b.cx.index_of(N - p, N - q, comp) < 0)
          throw Error("hodge star escapes the filtered complex at " + mon.to_string() +
                      ": the weight system is not unimodular");
      }
  CohomologyTable table = cohomology(b.cx);
  for (int p = 0; p <= N; ++p)
    for (int q = 0; q <= N; ++q)
      if (table.at(p, q) != table.at(N - p, N - q)) return false;
  return true;
}

}  // namespace solvmf
