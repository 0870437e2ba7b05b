// Exact cohomology of the built complexes: Dolbeault tables with canonical
// representative cocycles, the Lie-algebra Dolbeault variants (nilpotent
// fiber, direct product, full solvable algebra with its twisted frame),
// de Rham Betti numbers of the solvable algebra, and the comparison of
// Frolicher-type sums against Betti numbers.
#pragma once

#include "solvmf/model.hpp"

namespace solvmf {

struct CohomologyTable {
  // h[p][q] = dim ker dbar_{p,q} - rank dbar_{p,q-1}
  std::vector<std::vector<int>> h;
  // canonical cocycle representatives spanning a complement of the
  // coboundaries (reduced against them, echelonized)
  std::vector<std::vector<std::vector<Form>>> representatives;

  int top() const { return static_cast<int>(h.size()) - 1; }
  int at(int p, int q) const { return h.at(p).at(q); }
  bool dims_equal(const CohomologyTable& o) const { return h == o.h; }

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

CohomologyTable cohomology(const BigradedComplex& cx);

enum class LieVariant {
  nilpotent,   // the fiber algebra alone
  direct_sum,  // abelian factor x fiber, the model differential
  full,        // the solvable algebra: twisted frame w_j, dbar picks up
               // -(dbar log alpha_j) ^ w_j
};

CohomologyTable lie_dolbeault(const ValidatedModel& model, LieVariant which);

// dbar of the full solvable algebra in the left-invariant frame (exposed
// for the twist tests).
DifferentialSpec lie_full_dbar(const ValidatedModel& model);

// Total-degree complex for the de Rham pathway; mixed bidegrees allowed.
struct GradedComplex {
  GeneratorUniverse uni;
  std::vector<std::vector<Monomial>> basis;  // by total degree
  std::vector<Matrix> d;                     // degree k -> k+1

  int top() const { return uni.total(); }
  int dim(int k) const { return static_cast<int>(basis.at(k).size()); }
};

GradedComplex build_graded(const GeneratorUniverse& uni, const DifferentialSpec& d_total);

// Betti numbers of the solvable algebra under the full differential
// d = del + dbar, twists included. For these lattices this equals the
// de Rham cohomology of the quotient.
std::vector<int> de_rham(const ValidatedModel& model);

struct HodgeSumReport {
  struct Entry {
    int k = 0;
    int dolbeault_sum = 0;  // sum of h^{p,q} over p+q = k in the model complex
    int betti = 0;
    bool equal = false;
  };
  std::vector<Entry> entries;
  bool all_equal = false;
};

HodgeSumReport hodge_sum_check(const ValidatedModel& model);

}  // namespace solvmf
