// Smooth characters of C^n, parametrized per coordinate by the exponent
// coefficient quadruple (a, b, c, d):
//
//   chi(x_1 + i y_1, ...) = exp( sum_i a_i x_i + b_i y_i + i(c_i x_i + d_i y_i) ).
//
// The group law is addition of exponents. Every character is equivalent
// (modulo holomorphic characters) to a unique unitary one, which is what
// the lattice triviality filter consumes.
#pragma once

#include <vector>

#include "solvmf/scalars.hpp"

namespace solvmf {

struct CharCoeffs {
  Rational a{0}, b{0}, c{0}, d{0};

  friend bool operator==(const CharCoeffs& x, const CharCoeffs& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

class Character {
 public:
  Character() = default;
  explicit Character(int n) : coeffs_(n) {}
  explicit Character(std::vector<CharCoeffs> coeffs) : coeffs_(std::move(coeffs)) {}

  static Character trivial(int n) { return Character(n); }

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const CharCoeffs& coord(int i) const { return coeffs_.at(i); }
  CharCoeffs& coord(int i) { return coeffs_.at(i); }
  const std::vector<CharCoeffs>& coords() const { return coeffs_; }

  Character inverse() const;
  Character conjugate() const;  // (a,b,c,d) -> (a,b,-c,-d)

  bool is_trivial() const;
  bool is_unitary() const;      // a = b = 0
  bool is_holomorphic() const;  // a = d, b = -c

  // Coefficients of dz_i and dzbar_i in d(log chi):
  //   z:    (a + d + i(c - b)) / 2
  //   zbar: (a - d + i(b + c)) / 2
  GaussRat z_coeff(int i) const;
  GaussRat zbar_coeff(int i) const;

  friend Character operator*(const Character& x, const Character& y);
  friend bool operator==(const Character& x, const Character& y) {
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Character& x, const Character& y) { return !(x == y); }
  // Lexicographic on quadruples; only used for deterministic keying.
  friend bool operator<(const Character& x, const Character& y);

  std::string to_string() const;

 private:
  std::vector<CharCoeffs> coeffs_;
};

// The unique unitary character equivalent to alpha: coefficientwise
// (a,b,c,d) -> (0, 0, c+b, d-a). alpha * result^{-1} is holomorphic.
Character unitary_equivalent(const Character& alpha);

// One generator of the abelian lattice, as 2n formal-real coordinates
// (x_1, y_1, ..., x_n, y_n).
struct LatticeGen {
  std::vector<FormalReal> coords;
};

// exponent/i of beta at the generator: sum_i c_i x_i + d_i y_i.
// Meaningful for unitary beta, where beta(g) = e^{i * value}.
FormalReal unitary_exponent_at(const Character& beta, const LatticeGen& gen);

// True iff the unitary character beta is 1 on every generator, i.e. all
// exponents land in 2*pi*Z. Non-unitary input is rejected: callers that
// want the filter of the model builder must pass the unitary equivalent
// explicitly.
bool restricts_trivially(const Character& beta, const std::vector<LatticeGen>& gens);

}  // namespace solvmf
