// Exact scalar arithmetic: arbitrary-precision rationals, Gaussian
// rationals (the coefficient field of all forms), and formal real values
// of the shape  q0 + q1*pi + sum_k qk*symbol_k  used for lattice
// coordinates. No floating point anywhere: the 2*pi*Z membership test
// that drives the lattice filter is a decision, not an approximation.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace solvmf {

using Rational = mpq_class;

// num/den with canonicalization (mpq_class(num, den) does not canonicalize).
Rational rational(long num, long den = 1);

// Strict grammar: -?digits(/digits)?  Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_even_integer(const Rational& q);

// ---------------------------------------------------------------------------

struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    Rational norm = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / norm;
    Rational i = (im * o.re - re * o.im) / norm;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(GaussRat a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

GaussRat conj(const GaussRat& z);

// "0", "1", "-1/2", "i", "-i", "3/2i", "1+i", "1/2-3/4i"
std::string to_string(const GaussRat& z);

// ---------------------------------------------------------------------------

// A real value  const + pi_coeff*pi + sum_k sym_coeffs[k]*symbol_k.
// The constant 1, pi and the declared symbols are treated as Q-linearly
// independent; that assumption is recorded in the model manifest, never
// decided here.
class FormalReal {
 public:
  FormalReal() = default;
  FormalReal(Rational c) : const_(std::move(c)) {}  // NOLINT
  FormalReal(long c) : const_(c) {}                 // NOLINT

  static FormalReal pi(Rational coeff = Rational(1));
  static FormalReal symbol(const std::string& name, Rational coeff = Rational(1));

  const Rational& constant() const { return const_; }
  const Rational& pi_coeff() const { return pi_; }
  const std::map<std::string, Rational>& sym_coeffs() const { return syms_; }

  bool is_zero() const { return const_ == 0 && pi_ == 0 && syms_.empty(); }

  FormalReal& operator+=(const FormalReal& o);
  FormalReal& operator-=(const FormalReal& o);
  FormalReal& operator*=(const Rational& s);

  friend FormalReal operator+(FormalReal a, const FormalReal& b) { return a += b; }
  friend FormalReal operator-(FormalReal a, const FormalReal& b) { return a -= b; }
  friend FormalReal operator*(FormalReal a, const Rational& s) { return a *= s; }
  friend FormalReal operator*(const Rational& s, FormalReal a) { return a *= s; }
  friend FormalReal operator-(FormalReal a) { return a *= Rational(-1); }

  friend bool operator==(const FormalReal& a, const FormalReal& b) {
    return a.const_ == b.const_ && a.pi_ == b.pi_ && a.syms_ == b.syms_;
  }
  friend bool operator!=(const FormalReal& a, const FormalReal& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void prune();

  Rational const_{0};
  Rational pi_{0};
  std::map<std::string, Rational> syms_;  // nonzero coefficients only
};

// e^{i*v} = 1  <=>  v in 2*pi*Z: no constant part, no symbol part, and an
// even integer multiple of pi.
bool is_in_two_pi_Z(const FormalReal& v);

}  // namespace solvmf
