#include "solvmf/characters.hpp"

#include <stdexcept>

namespace solvmf {

Character Character::inverse() const {
  Character out = *this;
  for (auto& q : out.coeffs_) {
    q.a = -q.a;
    q.b = -q.b;
    q.c = -q.c;
    q.d = -q.d;
  }
  return out;
}

Character Character::conjugate() const {
  Character out = *this;
  for (auto& q : out.coeffs_) {
    q.c = -q.c;
    q.d = -q.d;
  }
  return out;
}

bool Character::is_trivial() const {
  for (const auto& q : coeffs_)
    if (!(q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0)) return false;
  return true;
}

bool Character::is_unitary() const {
  for (const auto& q : coeffs_)
    if (!(q.a == 0 && q.b == 0)) return false;
  return true;
}

bool Character::is_holomorphic() const {
  for (const auto& q : coeffs_)
    if (!(q.a == q.d && q.b == -q.c)) return false;
  return true;
}

GaussRat Character::z_coeff(int i) const {
  const CharCoeffs& q = coeffs_.at(i);
  return {(q.a + q.d) / 2, (q.c - q.b) / 2};
}

GaussRat Character::zbar_coeff(int i) const {
  const CharCoeffs& q = coeffs_.at(i);
  return {(q.a - q.d) / 2, (q.b + q.c) / 2};
}

Character operator*(const Character& x, const Character& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("Character: dimension mismatch in product");
  Character out = x;
  for (int i = 0; i < out.dim(); ++i) {
    out.coeffs_[i].a += y.coeffs_[i].a;
    out.coeffs_[i].b += y.coeffs_[i].b;
    out.coeffs_[i].c += y.coeffs_[i].c;
    out.coeffs_[i].d += y.coeffs_[i].d;
  }
  return out;
}

bool operator<(const Character& x, const Character& y) {
  if (x.dim() != y.dim()) return x.dim() < y.dim();
  for (int i = 0; i < x.dim(); ++i) {
    const CharCoeffs &p = x.coeffs_[i], &q = y.coeffs_[i];
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    if (p.c != q.c) return p.c < q.c;
    if (p.d != q.d) return p.d < q.d;
  }
  return false;
}

std::string Character::to_string() const {
  if (is_trivial()) return "1";
  std::string out = "exp(";
  bool first = true;
  auto append = [&](const Rational& coeff, const std::string& atom) {
    if (coeff == 0) return;
    std::string piece;
    if (coeff == 1)
      piece = atom;
    else if (coeff == -1)
      piece = "-" + atom;
    else
      piece = solvmf::to_string(coeff) + "*" + atom;
    if (!first && piece[0] != '-') out += "+";
    out += piece;
    first = false;
  };
  for (int i = 0; i < dim(); ++i) {
    const std::string suffix = dim() == 1 ? "" : std::to_string(i + 1);
    append(coeffs_[i].a, "x" + suffix);
    append(coeffs_[i].b, "y" + suffix);
    append(coeffs_[i].c, "i*x" + suffix);
    append(coeffs_[i].d, "i*y" + suffix);
  }
  return out + ")";
}

Character unitary_equivalent(const Character& alpha) {
  Character out(alpha.dim());
  for (int i = 0; i < alpha.dim(); ++i) {
    const CharCoeffs& q = alpha.coord(i);
    out.coord(i).c = q.c + q.b;
    out.coord(i).d = q.d - q.a;
  }
  return out;
}

FormalReal unitary_exponent_at(const Character& beta, const LatticeGen& gen) {
  if (static_cast<int>(gen.coords.size()) != 2 * beta.dim())
    throw std::invalid_argument("lattice generator has wrong coordinate count");
  FormalReal value;
  for (int i = 0; i < beta.dim(); ++i) {
    value += gen.coords[2 * i] * beta.coord(i).c;
    value += gen.coords[2 * i + 1] * beta.coord(i).d;
  }
  return value;
}

bool restricts_trivially(const Character& beta, const std::vector<LatticeGen>& gens) {
  if (!beta.is_unitary())
    throw std::invalid_argument(
        "restricts_trivially: character is not unitary; take its unitary equivalent first");
  for (const auto& g : gens)
    if (!is_in_two_pi_Z(unitary_exponent_at(beta, g))) return false;
  return true;
}

}  // namespace solvmf
