#include "solvmf/scalars.hpp"

#include <cctype>

namespace solvmf {

Rational rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  std::size_t pos = 0;
  if (text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
  if (digits == 0) bad();
  if (pos < text.size()) {
    if (text[pos] != '/') bad();
    ++pos;
    digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
    if (digits == 0 || pos != text.size()) bad();
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) bad();
  if (q.get_den() == 0) throw std::domain_error("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_even_integer(const Rational& q) {
  return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

GaussRat conj(const GaussRat& z) { return z.conj(); }

std::string to_string(const GaussRat& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out += to_string(z.re);
  if (z.im != 0) {
    if (z.im == 1) {
      out += out.empty() ? "i" : "+i";
    } else if (z.im == -1) {
      out += "-i";
    } else {
      std::string im = to_string(z.im);
      if (!out.empty() && im[0] != '-') out += '+';
      out += im + "i";
    }
  }
  return out;
}

FormalReal FormalReal::pi(Rational coeff) {
  FormalReal v;
  v.pi_ = std::move(coeff);
  return v;
}

FormalReal FormalReal::symbol(const std::string& name, Rational coeff) {
  FormalReal v;
  if (coeff != 0) v.syms_.emplace(name, std::move(coeff));
  return v;
}

FormalReal& FormalReal::operator+=(const FormalReal& o) {
  const_ += o.const_;
  pi_ += o.pi_;
  for (const auto& [name, c] : o.syms_) syms_[name] += c;
  prune();
  return *this;
}

FormalReal& FormalReal::operator-=(const FormalReal& o) {
  const_ -= o.const_;
  pi_ -= o.pi_;
  for (const auto& [name, c] : o.syms_) syms_[name] -= c;
  prune();
  return *this;
}

FormalReal& FormalReal::operator*=(const Rational& s) {
  const_ *= s;
  pi_ *= s;
  for (auto& [name, c] : syms_) c *= s;
  prune();
  return *this;
}

void FormalReal::prune() {
  for (auto it = syms_.begin(); it != syms_.end();) {
    if (it->second == 0)
      it = syms_.erase(it);
    else
      ++it;
  }
}

std::string FormalReal::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const Rational& coeff, const std::string& atom) {
    if (coeff == 0) return;
    std::string piece = solvmf::to_string(coeff);
    if (!atom.empty()) piece += "*" + atom;
    if (!out.empty() && piece[0] != '-') out += " + ";
    if (!out.empty() && piece[0] == '-') {
      out += " - ";
      piece.erase(piece.begin());
    }
    out += piece;
  };
  append(const_, "");
  append(pi_, "pi");
  for (const auto& [name, c] : syms_) append(c, name);
  return out;
}

bool is_in_two_pi_Z(const FormalReal& v) {
  return v.constant() == 0 && v.sym_coeffs().empty() && is_even_integer(v.pi_coeff());
}

}  // namespace solvmf
