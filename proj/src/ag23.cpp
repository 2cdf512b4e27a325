#include "picard/ag23.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace picard {

namespace {
int mod3(int x) { return ((x % 3) + 3) % 3; }
}  // namespace

bool AffineMapF3::invertible() const {
  return mod3(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 0;
}

AffinePointF3 AffineMapF3::apply(AffinePointF3 p) const {
  return {mod3(m[0][0] * p.u + m[0][1] * p.v + t[0]),
          mod3(m[1][0] * p.u + m[1][1] * p.v + t[1])};
}

AffineMapF3 AffineMapF3::compose(const AffineMapF3& o) const {
  AffineMapF3 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mod3(m[static_cast<std::size_t>(i)][0] * o.m[0][static_cast<std::size_t>(j)] +
               m[static_cast<std::size_t>(i)][1] * o.m[1][static_cast<std::size_t>(j)]);
  for (int i = 0; i < 2; ++i)
    r.t[static_cast<std::size_t>(i)] =
        mod3(m[static_cast<std::size_t>(i)][0] * o.t[0] +
             m[static_cast<std::size_t>(i)][1] * o.t[1] + t[static_cast<std::size_t>(i)]);
  return r;
}

Permutation AffineMapF3::to_perm() const {
  if (!invertible()) throw std::invalid_argument("AffineMapF3: singular matrix");
  std::vector<int> img(9);
  for (int idx = 0; idx < 9; ++idx)
    img[static_cast<std::size_t>(idx)] = apply(AffinePointF3::from_index(idx)).index();
  return Permutation::from_images(img);
}

AG23::AG23() : group_(9, {}) {
  // shear and swap generate GL_2(F_3) together with nothing else needed
  // (swap has determinant -1, shear generates the unipotents)
  AffineMapF3 shear;
  shear.m = {{{1, 1}, {0, 1}}};
  AffineMapF3 swap;
  swap.m = {{{0, 1}, {1, 0}}};
  AffineMapF3 t1;
  t1.t = {1, 0};
  AffineMapF3 t2;
  t2.t = {0, 1};
  group_ = GroupSpec(9, {shear.to_perm(), swap.to_perm(), t1.to_perm(), t2.to_perm()});

  // brute-force list of all affine maps doubles as a correctness check
  std::set<Permutation> all;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          AffineMapF3 f;
          f.m = {{{a, b}, {c, d}}};
          if (!f.invertible()) continue;
          for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v) {
              f.t = {u, v};
              all.insert(f.to_perm());
            }
        }
  if (all.size() != 432 || group_.order() != 432 ||
      !std::equal(all.begin(), all.end(), group_.elements().begin()))
    throw std::logic_error("AG23: generated group does not match the 432 affine maps");

  std::set<std::array<int, 3>> lines;
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& d : dirs)
    for (int idx = 0; idx < 9; ++idx) {
      AffinePointF3 p = AffinePointF3::from_index(idx);
      std::array<int, 3> tri{};
      for (int k = 0; k < 3; ++k)
        tri[static_cast<std::size_t>(k)] =
            AffinePointF3{mod3(p.u + k * d[0]), mod3(p.v + k * d[1])}.index();
      std::sort(tri.begin(), tri.end());
      lines.insert(tri);
    }
  lines_.assign(lines.begin(), lines.end());
  if (lines_.size() != 12) throw std::logic_error("AG23: expected 12 lines");
}

bool AG23::is_line(const std::array<int, 3>& tri) const {
  return std::binary_search(lines_.begin(), lines_.end(), tri);
}

Permutation AG23::line_action(const Permutation& point_perm) const {
  if (point_perm.degree() != 9)
    throw std::invalid_argument("line_action: degree mismatch");
  std::vector<int> img(12);
  for (std::size_t k = 0; k < 12; ++k) {
    std::array<int, 3> tri{point_perm(lines_[k][0]), point_perm(lines_[k][1]),
                           point_perm(lines_[k][2])};
    std::sort(tri.begin(), tri.end());
    auto it = std::lower_bound(lines_.begin(), lines_.end(), tri);
    if (it == lines_.end() || *it != tri)
      throw std::invalid_argument("line_action: image of a line is not a line");
    img[k] = static_cast<int>(it - lines_.begin());
  }
  return Permutation::from_images(img);
}

bool has_common_fixed_point(const GroupSpec& subgroup) {
  for (int p = 0; p < subgroup.degree(); ++p) {
    bool fixed = true;
    for (const auto& g : subgroup.generators())
      if (g(p) != p) {
        fixed = false;
        break;
      }
    if (fixed) return true;
  }
  return false;
}

std::vector<int> orbit_sizes(const GroupSpec& subgroup) {
  int n = subgroup.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> sizes;
  for (int p = 0; p < n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    std::vector<int> orbit{p};
    seen[static_cast<std::size_t>(p)] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : subgroup.generators()) {
        int q = g(orbit[k]);
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = true;
          orbit.push_back(q);
        }
      }
    sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace picard
