#pragma once

#include <array>
#include <vector>

#include "picard/group.hpp"
#include "picard/lattice.hpp"
#include "picard/perm.hpp"

namespace picard {

// The rank-4 lattice of a degree-6 del Pezzo surface: six (-1)-classes
// forming a hexagon under the pairing-1 adjacency, and the group of curve
// permutations extending to lattice isometries (which automatically fix K,
// since the sum of the six curves is -K).
class DP6Hexagon {
 public:
  DP6Hexagon();

  const std::vector<LineClass>& curves() const { return curves_; }
  int curve_index(const LatticeVector& v) const;
  bool adjacent(int p, int q) const {
    return adj_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }

  // order 12; found by brute force over all 720 curve permutations
  const GroupSpec& symmetry_group() const { return sym_; }
  // the lattice isometry inducing the curve permutation; throws if there is none
  IntMatrix matrix_of_perm(const Permutation& p) const;

  // the two alternating triples of pairwise disjoint curves, as index sets
  std::array<std::array<int, 3>, 2> disjoint_triples() const;

 private:
  std::vector<LineClass> curves_;
  std::array<std::array<bool, 6>, 6> adj_{};
  std::array<int, 4> basis_curves_{};
  IntMatrix basis_inverse_;
  GroupSpec sym_;
};

}  // namespace picard
