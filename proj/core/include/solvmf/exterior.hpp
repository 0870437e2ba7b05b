// Bigraded exterior algebra over the generators
//   x_1..x_n, w_1..w_m        (degree (1,0))
//   xb_1..xb_n, wb_1..wb_m    (degree (0,1))
// Monomials are stored canonically as x_I ^ w_J ^ xb_K ^ wb_L with strictly
// increasing indices inside each block; Koszul signs are normalized at
// construction. All coefficients are Gaussian rationals.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvmf/scalars.hpp"

namespace solvmf {

struct GeneratorUniverse {
  int n = 0;  // abelian (x) generators
  int m = 0;  // nilpotent (w) generators

  int total() const { return 2 * (n + m); }
  int complex_dim() const { return n + m; }

  friend bool operator==(const GeneratorUniverse&, const GeneratorUniverse&) = default;
};

enum class GenKind : std::uint8_t { x, w, xb, wb };

struct Generator {
  GenKind kind;
  int index;  // 1-based

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Index sets as bitmasks, bit t <-> index t+1.
struct Monomial {
  std::uint32_t I = 0;  // x-indices
  std::uint32_t J = 0;  // w-indices
  std::uint32_t K = 0;  // xb-indices
  std::uint32_t L = 0;  // wb-indices

  static Monomial unit() { return {}; }
  static Monomial of(Generator g);

  int degree_p() const { return std::popcount(I) + std::popcount(J); }
  int degree_q() const { return std::popcount(K) + std::popcount(L); }
  int degree() const { return degree_p() + degree_q(); }

  // Generators in canonical order.
  std::vector<Generator> generators() const;

  // Complementary index sets within the universe.
  Monomial complement(const GeneratorUniverse& u) const;

  std::string to_string() const;  // "x1^w2^xb1", unit prints "1"

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sign of u^v relative to the canonical reordering: +1/-1, or 0 when the
// monomials share a generator. On success *out is the merged monomial.
int wedge_sign(const Monomial& u, const Monomial& v, Monomial* out);

class Form {
 public:
  using TermMap = std::map<Monomial, GaussRat>;

  Form() = default;
  Form(GaussRat coeff, Monomial mon);

  static Form zero() { return {}; }
  static Form unit(GaussRat coeff = GaussRat(1)) { return Form(std::move(coeff), Monomial::unit()); }
  static Form generator(Generator g) { return Form(GaussRat(1), Monomial::of(g)); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  GaussRat coeff(const Monomial& mon) const;

  // (p,q) when every monomial agrees, std::nullopt for mixed or zero forms.
  std::optional<std::pair<int, int>> pure_bidegree() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const GaussRat& s);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const GaussRat& s) { return a *= s; }
  friend Form operator*(const GaussRat& s, Form a) { return a *= s; }
  friend Form operator-(Form a) { return a *= GaussRat(-1); }
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(const Monomial& mon, const GaussRat& coeff);

  TermMap terms_;  // nonzero coefficients only

  friend Form wedge(const Form& u, const Form& v);
  friend Form form_conj(const Form& u);
};

Form wedge(const Form& u, const Form& v);

// Geometric conjugation: coefficients conjugated, (I,J,K,L) -> (K,L,I,J)
// with the Koszul sign (-1)^{(|I|+|J|)(|K|+|L|)}.
Form form_conj(const Form& u);

}  // namespace solvmf
