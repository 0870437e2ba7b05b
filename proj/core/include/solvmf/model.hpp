// The finite-dimensional model of a solvmanifold C^n x|_phi N / Gamma:
// manifest validation (unimodularity, weight compatibility, differential
// consistency), the unitary weight labeling of monomials, and the
// construction of the filtered subcomplex B^{p,q} whose cohomology equals
// the Dolbeault cohomology of the quotient. The filter keeps exactly the
// monomials whose unitary weight restricts trivially to the lattice.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solvmf/characters.hpp"
#include "solvmf/differential.hpp"
#include "solvmf/linalg.hpp"

namespace solvmf {

struct ModelSpec {
  int n = 0;
  int m = 0;
  std::vector<Character> alphas;  // diagonal weights of the semidirect action
  // Exactly one nilpotent-structure input:
  std::optional<NilBrackets> brackets;
  std::optional<std::map<Generator, Form>> dbar_images;  // keys: w_j / wb_j
  std::vector<LatticeGen> lattice;                       // 2n generators of Gamma'
  std::vector<std::string> symbols;
  bool nilmanifold_assumption_asserted = false;

  GeneratorUniverse universe() const { return {n, m}; }
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

// Full structural validation: lattice rank, unimodularity of the weights,
// weight compatibility of the nilpotent structure, dbar^2 = 0,
// integrability, the nilmanifold assertion flag. Collects every failure.
ValidationReport validate(const ModelSpec& spec);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// A spec that passed validate(), plus derived data every builder needs:
// the dbar of the nilpotent fiber and the unitary twist characters
// beta_j ~ alpha_j and gamma_j ~ conj(alpha_j).
class ValidatedModel {
 public:
  static ValidatedModel check(ModelSpec spec);         // throws ValidationError
  static ValidatedModel assume_valid(ModelSpec spec);  // test harness bypass

  const ModelSpec& spec() const { return spec_; }
  GeneratorUniverse universe() const { return spec_.universe(); }
  const Character& alpha(int j) const { return spec_.alphas.at(j - 1); }
  const Character& beta(int j) const { return betas_.at(j - 1); }
  const Character& gamma(int j) const { return gammas_.at(j - 1); }
  const DifferentialSpec& nil_dbar() const { return nil_dbar_; }

  // beta_J * gamma_L: the unitary weight the lattice filter tests.
  Character monomial_unitary_weight(const Monomial& mon) const;
  // prod alpha_J^{-1} * conj(alpha_L)^{-1}: the full character weight
  // preserved by the differential.
  Character monomial_full_weight(const Monomial& mon) const;

  bool weight_restricts_trivially(const Monomial& mon) const;

 private:
  explicit ValidatedModel(ModelSpec spec);

  ModelSpec spec_;
  std::vector<Character> betas_;
  std::vector<Character> gammas_;
  DifferentialSpec nil_dbar_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, bool> filter_cache_;
};

// Bigraded bases plus the dbar matrices between them; what every
// cohomology and harmonic computation consumes. basis[p][q] is sorted in
// canonical monomial order; dbar[p][q] maps coordinates at (p,q) to
// coordinates at (p,q+1).
struct BigradedComplex {
  GeneratorUniverse uni;
  std::vector<std::vector<std::vector<Monomial>>> basis;
  std::vector<std::vector<Matrix>> dbar;

  int top() const { return uni.complex_dim(); }
  int dim(int p, int q) const;
  const std::vector<Monomial>& basis_at(int p, int q) const { return basis.at(p).at(q); }
  const Matrix& dbar_at(int p, int q) const { return dbar.at(p).at(q); }
  // Index of mon in basis_at(p,q), or -1.
  int index_of(int p, int q, const Monomial& mon) const;
  int total_dim() const;

  Form to_form(int p, int q, const QVector& coords) const;
  QVector coordinates(int p, int q, const Form& f) const;  // throws if f leaves the basis
};

// Generic builder: all monomials of the universe passing `keep`, with the
// differential expressed in the surviving bases. Throws when the kept set
// is not closed under the differential (the message names the escaping
// monomial).
BigradedComplex build_bigraded(const GeneratorUniverse& uni, const DifferentialSpec& dbar,
                               const std::function<bool(const Monomial&)>& keep);

struct BComplex {
  ValidatedModel model;
  BigradedComplex cx;

  const std::vector<Monomial>& basis_at(int p, int q) const { return cx.basis_at(p, q); }
  int dim(int p, int q) const { return cx.dim(p, q); }
};

// The lattice-filtered model complex. Verifies closure under dbar and that
// dbar preserves the full character weight of every basis monomial.
BComplex build_bcomplex(const ValidatedModel& model);

// Condition: whenever beta_J * gamma_L restricts trivially to the lattice
// it is already trivial. Enumerates all 2^(2m) index pairs, so m is capped.
bool star_condition_check(const ValidatedModel& model, int max_m = 12);

}  // namespace solvmf
