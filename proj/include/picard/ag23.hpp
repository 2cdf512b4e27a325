#pragma once

#include <array>
#include <vector>

#include "picard/group.hpp"
#include "picard/perm.hpp"

namespace picard {

// Point (u,v) of A^2(F_3); point index is 3u + v.
struct AffinePointF3 {
  int u = 0;
  int v = 0;
  int index() const { return 3 * u + v; }
  static AffinePointF3 from_index(int idx) { return {idx / 3, idx % 3}; }
};

// x -> M x + t over F_3 with det M != 0.
struct AffineMapF3 {
  std::array<std::array<int, 2>, 2> m{{{1, 0}, {0, 1}}};
  std::array<int, 2> t{0, 0};

  static AffineMapF3 identity() { return {}; }
  bool invertible() const;
  AffinePointF3 apply(AffinePointF3 p) const;
  AffineMapF3 compose(const AffineMapF3& other) const;  // this after other
  Permutation to_perm() const;                          // degree 9
};

class AG23 {
 public:
  AG23();

  // all 432 affine transformations as permutations of the 9 points; built
  // from a small generating set and checked against the brute-force list
  const GroupSpec& group() const { return group_; }
  // the 12 affine lines as sorted point-index triples, sorted
  const std::vector<std::array<int, 3>>& config_lines() const { return lines_; }

  bool is_line(const std::array<int, 3>& sorted_triple) const;
  // permutation induced on the 12 lines; throws if some image is not a line
  Permutation line_action(const Permutation& point_perm) const;

 private:
  GroupSpec group_;
  std::vector<std::array<int, 3>> lines_;
};

// true iff some point is fixed by every element
bool has_common_fixed_point(const GroupSpec& subgroup);
// orbit sizes of the action on {0..degree-1}, sorted descending
std::vector<int> orbit_sizes(const GroupSpec& subgroup);

}  // namespace picard
