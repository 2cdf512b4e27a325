#include "picard/eisenstein.hpp"

#include <stdexcept>

namespace picard {

CycloInt CycloInt::omega_pow(int k) {
  k = ((k % 3) + 3) % 3;
  switch (k) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};  // w^2 = -1 - w
  }
}

CycloInt CycloInt::unit_inverse() const {
  if (!is_unit()) throw std::invalid_argument("CycloInt: not a unit");
  // the six units are +-w^k; conjugate divided by the norm
  return {c0 - c1, -c1};
}

std::string CycloInt::str() const {
  if (c1 == 0) return std::to_string(c0);
  std::string w = (c1 == 1) ? "w" : (c1 == -1 ? "-w" : std::to_string(c1) + "w");
  if (c0 == 0) return w;
  return std::to_string(c0) + (c1 > 0 ? "+" : "") + w;
}

PolyZw::PolyZw(CycloInt c) { add_term({0, 0}, c); }

PolyZw PolyZw::term(CycloInt c, Mono m) {
  PolyZw p;
  p.add_term(m, c);
  return p;
}

PolyZw PolyZw::a_pow(int e) { return term(CycloInt::one(), {e, 0}); }
PolyZw PolyZw::b_pow(int e) { return term(CycloInt::one(), {0, e}); }
PolyZw PolyZw::omega_pow(int k) { return PolyZw(CycloInt::omega_pow(k)); }

void PolyZw::add_term(Mono m, CycloInt c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PolyZw PolyZw::operator+(const PolyZw& o) const {
  PolyZw out(*this);
  for (const auto& [m, c] : o.t_) out.add_term(m, c);
  return out;
}

PolyZw PolyZw::operator-(const PolyZw& o) const {
  PolyZw out(*this);
  for (const auto& [m, c] : o.t_) out.add_term(m, -c);
  return out;
}

PolyZw PolyZw::operator-() const {
  PolyZw out;
  for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
  return out;
}

PolyZw PolyZw::operator*(const PolyZw& o) const {
  PolyZw out;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_)
      out.add_term({m1.da + m2.da, m1.db + m2.db}, c1 * c2);
  return out;
}

PolyZw PolyZw::operator*(CycloInt c) const {
  PolyZw out;
  for (const auto& [m, v] : t_) out.add_term(m, v * c);
  return out;
}

std::pair<Mono, CycloInt> PolyZw::leading() const {
  if (t_.empty()) throw std::invalid_argument("PolyZw: leading term of zero");
  return *t_.begin();
}

Mono PolyZw::monomial_gcd() const {
  if (t_.empty()) throw std::invalid_argument("PolyZw: monomial gcd of zero");
  Mono g = t_.begin()->first;
  for (const auto& [m, c] : t_) {
    g.da = std::min(g.da, m.da);
    g.db = std::min(g.db, m.db);
  }
  return g;
}

PolyZw PolyZw::divided_by(Mono m) const {
  PolyZw out;
  for (const auto& [mm, c] : t_) {
    if (mm.da < m.da || mm.db < m.db)
      throw std::invalid_argument("PolyZw: inexact monomial division");
    out.t_.emplace(Mono{mm.da - m.da, mm.db - m.db}, c);
  }
  return out;
}

PolyZw PolyZw::twist_a(int k) const {
  PolyZw out;
  for (const auto& [m, c] : t_) out.add_term(m, c * CycloInt::omega_pow(k * m.da));
  return out;
}

PolyZw PolyZw::twist_b(int k) const {
  PolyZw out;
  for (const auto& [m, c] : t_) out.add_term(m, c * CycloInt::omega_pow(k * m.db));
  return out;
}

std::string PolyZw::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (m.da != 0) out += "*a^" + std::to_string(m.da);
    if (m.db != 0) out += "*b^" + std::to_string(m.db);
  }
  return out;
}

}  // namespace picard
