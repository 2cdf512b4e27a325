#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "picard/eisenstein.hpp"
#include "picard/perm.hpp"
#include "picard/weyl_e6.hpp"

namespace picard {

// Family 1: a x + w^i a^2 y = 0,  b z + w^j b^2 t = 0
// Family 2: a x + w^i b z   = 0,  a^2 y + w^j b^2 t = 0
// Family 3: a x + w^i b^2 t = 0,  a^2 y + w^j b z = 0
// with a, b the formal cube roots of lambda and mu, and i, j in {0,1,2}.
struct LineLabel {
  int family = 1;  // 1..3
  int i = 0;
  int j = 0;
  int index() const { return (family - 1) * 9 + i * 3 + j; }
  static LineLabel from_index(int idx);
  std::string str() const;  // "f1_02"
};

enum class Subst { sigma1, sigma2, sigma3, gamma_lambda, gamma_mu };
std::string to_string(Subst s);

using FormVec = std::array<PolyZw, 4>;  // coefficients of (x, y, z, t)

struct LineEq {
  LineLabel label;
  FormVec f, g;
};

// Transformed coefficient vectors: the sigmas scale one coordinate column by
// w^-1, the gammas twist a (resp. b) by w.
FormVec apply_subst(Subst s, const FormVec& form);

// Canonical reduced basis of the span {f, g}: division-free echelon followed
// by clearing each row to a primitive polynomial pair with unit-normalized
// leading coefficient. Equal spans map to equal pairs.
std::pair<FormVec, FormVec> canonical_pair(FormVec f, FormVec g);

// True iff span{f,g} == span{f2,g2}; all 3x3 minors of the stacked 3x4
// matrices vanish. Used as an independent cross-check of canonical_pair.
bool same_span(const FormVec& f, const FormVec& g, const FormVec& f2, const FormVec& g2);

class CubicLines {
 public:
  CubicLines();

  const std::vector<LineEq>& lines() const { return lines_; }
  bool meets(int p, int q) const { return meets_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }
  // determinant of the four stacked forms; identically zero iff the lines meet
  PolyZw incidence_determinant(int p, int q) const;

  // substituting a kernel parameterization into a^3 x^3 + a^6 y^3 + b^3 z^3 + b^6 t^3
  // gives the zero polynomial
  bool line_on_surface(int idx) const;

  // label index of the unique line with the same form span; throws naming the
  // forms if there is none
  int match_line(const FormVec& f, const FormVec& g) const;

  Permutation substitution_perm(Subst s) const;

 private:
  std::vector<LineEq> lines_;
  std::array<std::array<bool, 27>, 27> meets_{};
  std::map<std::string, int> canon_index_;
};

// Fixed identification of the 27 labeled lines with the abstract (-1)-classes:
// the lexicographically first 6-clique of the disjointness graph becomes
// E1..E6 and the rest follow from their incidence pattern with it. The
// constructor verifies the extension is a bijection and a graph isomorphism
// on all 351 pairs.
class LineMatching {
 public:
  LineMatching(const CubicLines& cl, const WeylE6& weyl);

  int abstract_of_label(int idx) const { return a_of_l_[static_cast<std::size_t>(idx)]; }
  int label_of_abstract(int idx) const { return l_of_a_[static_cast<std::size_t>(idx)]; }
  const std::array<int, 6>& sixer_labels() const { return sixer_; }
  Permutation to_abstract(const Permutation& label_perm) const;

 private:
  std::array<int, 27> a_of_l_{};
  std::array<int, 27> l_of_a_{};
  std::array<int, 6> sixer_{};
};

// The Weyl element whose line permutation corresponds to the label
// permutation under the fixed matching; throws if the permutation does not
// preserve incidence.
WeylElement embed_in_weyl(const LineMatching& matching, const WeylE6& weyl,
                          const Permutation& label_perm);

}  // namespace picard
