#include "solvmf/exterior.hpp"

#include <stdexcept>

namespace solvmf {

namespace {

// Number of pairs (a in A, b in B) with a > b; the inversions created when
// merging two ascending index blocks.
int cross_inversions(std::uint32_t A, std::uint32_t B) {
  int inv = 0;
  while (B) {
    int b = std::countr_zero(B);
    B &= B - 1;
    inv += std::popcount(A >> (b + 1));
  }
  return inv;
}

void append_block(std::vector<Generator>& out, std::uint32_t mask, GenKind kind) {
  while (mask) {
    int t = std::countr_zero(mask);
    mask &= mask - 1;
    out.push_back({kind, t + 1});
  }
}

std::uint32_t full_mask(int count) {
  return count == 0 ? 0u : (count >= 32 ? ~0u : (1u << count) - 1u);
}

}  // namespace

Monomial Monomial::of(Generator g) {
  Monomial mon;
  std::uint32_t bit = 1u << (g.index - 1);
  switch (g.kind) {
    case GenKind::x: mon.I = bit; break;
    case GenKind::w: mon.J = bit; break;
    case GenKind::xb: mon.K = bit; break;
    case GenKind::wb: mon.L = bit; break;
  }
  return mon;
}

std::vector<Generator> Monomial::generators() const {
  std::vector<Generator> out;
  out.reserve(degree());
  append_block(out, I, GenKind::x);
  append_block(out, J, GenKind::w);
  append_block(out, K, GenKind::xb);
  append_block(out, L, GenKind::wb);
  return out;
}

Monomial Monomial::complement(const GeneratorUniverse& u) const {
  return {full_mask(u.n) & ~I, full_mask(u.m) & ~J, full_mask(u.n) & ~K, full_mask(u.m) & ~L};
}

std::string Monomial::to_string() const {
  if (degree() == 0) return "1";
  std::string out;
  for (const Generator& g : generators()) {
    if (!out.empty()) out += '^';
    switch (g.kind) {
      case GenKind::x: out += 'x'; break;
      case GenKind::w: out += 'w'; break;
      case GenKind::xb: out += "xb"; break;
      case GenKind::wb: out += "wb"; break;
    }
    out += std::to_string(g.index);
  }
  return out;
}

int wedge_sign(const Monomial& u, const Monomial& v, Monomial* out) {
  if ((u.I & v.I) || (u.J & v.J) || (u.K & v.K) || (u.L & v.L)) return 0;
  // All generators are odd, so the sign is (-1)^inversions where inversions
  // counts how far v's blocks travel left past u's later blocks.
  int inv = cross_inversions(u.I, v.I);
  inv += std::popcount(v.I) * (std::popcount(u.J) + std::popcount(u.K) + std::popcount(u.L));
  inv += cross_inversions(u.J, v.J);
  inv += std::popcount(v.J) * (std::popcount(u.K) + std::popcount(u.L));
  inv += cross_inversions(u.K, v.K);
  inv += std::popcount(v.K) * std::popcount(u.L);
  inv += cross_inversions(u.L, v.L);
  if (out) *out = {u.I | v.I, u.J | v.J, u.K | v.K, u.L | v.L};
  return (inv % 2 == 0) ? 1 : -1;
}

Form::Form(GaussRat coeff, Monomial mon) {
  if (!coeff.is_zero()) terms_.emplace(mon, std::move(coeff));
}

GaussRat Form::coeff(const Monomial& mon) const {
  auto it = terms_.find(mon);
  return it == terms_.end() ? GaussRat() : it->second;
}

std::optional<std::pair<int, int>> Form::pure_bidegree() const {
  std::optional<std::pair<int, int>> bidegree;
  for (const auto& [mon, c] : terms_) {
    std::pair<int, int> pq{mon.degree_p(), mon.degree_q()};
    if (!bidegree)
      bidegree = pq;
    else if (*bidegree != pq)
      return std::nullopt;
  }
  return bidegree;
}

void Form::add_term(const Monomial& mon, const GaussRat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mon, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [mon, c] : o.terms_) add_term(mon, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [mon, c] : o.terms_) add_term(mon, -c);
  return *this;
}

Form& Form::operator*=(const GaussRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mon, c] : terms_) c *= s;
  return *this;
}

Form wedge(const Form& u, const Form& v) {
  Form out;
  for (const auto& [mu, cu] : u.terms_) {
    for (const auto& [mv, cv] : v.terms_) {
      Monomial merged;
      int sign = wedge_sign(mu, mv, &merged);
      if (sign == 0) continue;
      GaussRat c = cu * cv;
      if (sign < 0) c = -c;
      out.add_term(merged, c);
    }
  }
  return out;
}

Form form_conj(const Form& u) {
  Form out;
  for (const auto& [mon, c] : u.terms_) {
    Monomial swapped{mon.K, mon.L, mon.I, mon.J};
    int sign = (mon.degree_p() * mon.degree_q()) % 2 == 0 ? 1 : -1;
    GaussRat cc = c.conj();
    if (sign < 0) cc = -cc;
    out.add_term(swapped, cc);
  }
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mon, c] : terms_) {
    std::string cs = solvmf::to_string(c);
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (composite) cs = "(" + cs + ")";
    std::string piece;
    if (mon.degree() == 0)
      piece = cs;
    else if (cs == "1")
      piece = mon.to_string();
    else if (cs == "-1")
      piece = "-" + mon.to_string();
    else
      piece = cs + "*" + mon.to_string();
    if (!out.empty()) {
      if (piece[0] == '-') {
        out += " - ";
        piece.erase(piece.begin());
      } else {
        out += " + ";
      }
    }
    out += piece;
  }
  return out;
}

}  // namespace solvmf
