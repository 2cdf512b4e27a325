#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace picard {

// Eisenstein integer c0 + c1*w with w^2 + w + 1 = 0.
struct CycloInt {
  long long c0 = 0;
  long long c1 = 0;

  friend CycloInt operator+(CycloInt x, CycloInt y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
  friend CycloInt operator-(CycloInt x, CycloInt y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
  friend CycloInt operator-(CycloInt x) { return {-x.c0, -x.c1}; }
  friend CycloInt operator*(CycloInt x, CycloInt y) {
    // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
    return {x.c0 * y.c0 - x.c1 * y.c1, x.c0 * y.c1 + x.c1 * y.c0 - x.c1 * y.c1};
  }

  bool is_zero() const { return c0 == 0 && c1 == 0; }
  long long norm() const { return c0 * c0 - c0 * c1 + c1 * c1; }
  bool is_unit() const { return norm() == 1; }
  CycloInt unit_inverse() const;  // requires is_unit()

  static CycloInt one() { return {1, 0}; }
  static CycloInt omega_pow(int k);  // w^k, any integer k

  std::string str() const;
  friend auto operator<=>(const CycloInt&, const CycloInt&) = default;
};

// Monomial a^da * b^db in the formal cube roots a, b.
struct Mono {
  int da = 0;
  int db = 0;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Polynomial in a, b over the Eisenstein integers. a and b are independent
// transcendentals, so the polynomial vanishes iff every coefficient does.
class PolyZw {
 public:
  PolyZw() = default;
  explicit PolyZw(CycloInt c);
  static PolyZw term(CycloInt c, Mono m);
  static PolyZw a_pow(int e);       // a^e
  static PolyZw b_pow(int e);       // b^e
  static PolyZw omega_pow(int k);   // w^k as a constant

  PolyZw operator+(const PolyZw&) const;
  PolyZw operator-(const PolyZw&) const;
  PolyZw operator-() const;
  PolyZw operator*(const PolyZw&) const;
  PolyZw operator*(CycloInt c) const;
  friend auto operator<=>(const PolyZw&, const PolyZw&) = default;

  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  std::size_t term_count() const { return t_.size(); }
  const std::map<Mono, CycloInt>& terms() const { return t_; }

  // leading = first term in (da, db)-lexicographic order; requires nonzero
  std::pair<Mono, CycloInt> leading() const;
  Mono monomial_gcd() const;          // componentwise minimum of exponents
  PolyZw divided_by(Mono m) const;    // exact division by a monomial

  PolyZw twist_a(int k) const;  // a -> w^k a
  PolyZw twist_b(int k) const;  // b -> w^k b

  std::string str() const;

 private:
  std::map<Mono, CycloInt> t_;
  void add_term(Mono m, CycloInt c);
};

}  // namespace picard
