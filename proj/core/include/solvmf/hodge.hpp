// Metric layer: the Hermitian inner product that makes canonical monomials
// orthonormal, the anti-linear Hodge star, harmonic spaces as
// ker dbar /\ ker dbar*, and the Hodge-symmetry / Serre-duality
// diagnostics evaluated on honest differential forms (character
// coefficient times frame monomial).
#pragma once

#include "solvmf/cohomology.hpp"

namespace solvmf {

// Star of a basis monomial: the complementary monomial with the sign eps
// fixed by  mon ^ star(mon) = vol,  vol the canonical top monomial. eps is
// the sign of the permutation merging the two index tuples.
std::pair<int, Monomial> hodge_star(const Monomial& mon, const GeneratorUniverse& u);

// Anti-linear extension to forms: coefficients are conjugated.
Form hodge_star(const Form& f, const GeneratorUniverse& u);

// star o dbar o star, the codifferential up to sign; used for the duality
// checks, not for the harmonic computation.
Form codifferential(const Form& f, const DifferentialSpec& dbar);

struct HarmonicSpace {
  int p = 0;
  int q = 0;
  std::vector<Form> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// ker dbar_{p,q} /\ ker (dbar_{p,q-1})^* with the adjoint taken in the
// monomial-orthonormal inner product; dimension equals h^{p,q}.
HarmonicSpace harmonic_space(const BigradedComplex& cx, int p, int q);

// A differential form on the group: scalar * chi * x_I^y_J^xb_K^yb_L with
// chi a character of the abelian factor. This is what basis monomials of
// the model become downstairs, and the only representation in which
// conjugation symmetry can be decided honestly.
struct ConcreteForm {
  Character chi;
  Monomial mon;
  GaussRat scalar;
};

ConcreteForm concrete_form(const ValidatedModel& model, const Monomial& mon,
                           const GaussRat& scalar = GaussRat(1));
ConcreteForm conj(const ConcreteForm& f);

// conj(H^{p,q}) == H^{q,p} as spans of concrete forms (characters compared
// exactly by exponent).
bool hodge_symmetry_check(const BComplex& b, int p, int q);

// The star maps each B^{p,q} basis monomial into B^{N-p,N-q} and the
// cohomology table is symmetric under (p,q) -> (N-p,N-q). A star image
// escaping the filter signals a non-unimodular weight system and throws.
bool serre_duality_check(const BComplex& b);

}  // namespace solvmf
