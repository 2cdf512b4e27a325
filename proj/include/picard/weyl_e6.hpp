#pragma once

#include <array>
#include <string>
#include <vector>

#include "picard/group.hpp"
#include "picard/lattice.hpp"
#include "picard/perm.hpp"

namespace picard {

// Carter labels for the order-3 classes, told apart by the rank of the fixed
// sublattice: 5, 3, 1.
enum class CarterType { A2, A2xA2, A2xA2xA2 };
std::string to_string(CarterType t);

struct WeylElement {
  IntMatrix matrix;
  Permutation perm;
};

// W(E6) generated by the six simple reflections, acting on the 27 lines in
// their canonical (sorted) order.
class WeylE6 {
 public:
  WeylE6();

  const std::vector<LineClass>& lines() const { return lines_; }
  int line_index(const LatticeVector& v) const;  // throws if not a line
  const GroupSpec& group() const { return group_; }
  const std::vector<IntMatrix>& simple_reflections() const { return simple_; }

  Permutation perm_of_matrix(const IntMatrix& m) const;
  // Reconstructs the lattice isometry from the line permutation; verifies the
  // matrix maps line i to line p(i) for all i and preserves the pairing
  // table. Throws if p is not induced by an isometry.
  IntMatrix matrix_of_perm(const Permutation& p) const;
  WeylElement element(const Permutation& p) const;

  int fixed_line_count(const Permutation& p) const { return p.fixed_points(); }
  int fixed_rank_of(const Permutation& p) const;
  CarterType carter_type(const Permutation& p) const;  // requires order 3

  struct CensusRow {
    CarterType type;
    long long count = 0;
    int fixed_lines = 0;
    int fixed_rank = 0;
  };
  // One row per type in order A2, A2xA2, A2xA2xA2, over all order-3 elements.
  // Throws if any order-3 element fails the rank/fixed-line cross-check.
  std::vector<CensusRow> order3_census() const;

 private:
  std::vector<LineClass> lines_;
  std::vector<IntMatrix> simple_;
  std::array<int, 7> basis_lines_;  // indices of a unimodular line basis
  IntMatrix basis_inverse_;
  GroupSpec group_;
};

// 3-Sylow subgroup of W(E6) plus the standard comparison models.
GroupSpec wreath_model_mu3();    // mu_3^3 : mu_3 on 9 points
GroupSpec heisenberg_model();    // right regular action on 27 elements
GroupSpec mu3_cubed_model();     // mu_3^3 on 9 points
GroupSpec symmetric3_model();    // S3 on 3 points

}  // namespace picard
