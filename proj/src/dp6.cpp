#include "picard/dp6.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

DP6Hexagon::DP6Hexagon() : basis_inverse_(4), sym_(6, {}) {
  curves_ = enumerate_lines(4);
  if (curves_.size() != 6) throw std::logic_error("DP6Hexagon: expected 6 curves");
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      adj_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          (p != q) &&
          pairing(curves_[static_cast<std::size_t>(p)].v, curves_[static_cast<std::size_t>(q)].v) == 1;

  // first four linearly independent curves give a rational (here unimodular)
  // basis; the isometry extending a curve permutation is then unique
  std::vector<LatticeVector> basis;
  int bn = 0;
  for (int i = 0; i < 6 && bn < 4; ++i) {
    std::vector<std::vector<Coord>> rows;
    for (int k = 0; k < bn; ++k) rows.push_back(basis[static_cast<std::size_t>(k)].coords());
    rows.push_back(curves_[static_cast<std::size_t>(i)].v.coords());
    if (integer_rank(std::move(rows)) == bn + 1) {
      basis.push_back(curves_[static_cast<std::size_t>(i)].v);
      basis_curves_[static_cast<std::size_t>(bn++)] = i;
    }
  }
  if (bn != 4) throw std::logic_error("DP6Hexagon: curves do not span the lattice");
  basis_inverse_ = inverse_unimodular(IntMatrix::from_columns(basis));

  std::vector<Permutation> sym_elements;
  std::vector<int> img(6);
  std::array<bool, 6> used{};
  auto search = [&](auto&& self, int pos) -> void {
    if (pos == 6) {
      Permutation p = Permutation::from_images(img);
      try {
        matrix_of_perm(p);
      } catch (const std::invalid_argument&) {
        return;
      }
      sym_elements.push_back(std::move(p));
      return;
    }
    for (int v = 0; v < 6; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int u = 0; u < pos; ++u)
        if (adjacent(u, pos) !=
            adjacent(img[static_cast<std::size_t>(u)], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = true;
      img[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  search(search, 0);
  sym_ = GroupSpec(6, std::move(sym_elements));
}

int DP6Hexagon::curve_index(const LatticeVector& v) const {
  for (int i = 0; i < 6; ++i)
    if (curves_[static_cast<std::size_t>(i)].v == v) return i;
  throw std::invalid_argument("DP6Hexagon: " + v.str() + " is not one of the 6 curves");
}

IntMatrix DP6Hexagon::matrix_of_perm(const Permutation& p) const {
  if (p.degree() != 6) throw std::invalid_argument("matrix_of_perm: degree mismatch");
  std::vector<LatticeVector> cols;
  for (int k = 0; k < 4; ++k)
    cols.push_back(curves_[static_cast<std::size_t>(p(basis_curves_[static_cast<std::size_t>(k)]))].v);
  IntMatrix m = IntMatrix::from_columns(cols) * basis_inverse_;
  for (int i = 0; i < 6; ++i)
    if (m.apply(curves_[static_cast<std::size_t>(i)].v) != curves_[static_cast<std::size_t>(p(i))].v)
      throw std::invalid_argument("matrix_of_perm: permutation has no linear extension");
  if (!preserves_pairing(m) || !fixes_canonical_class(m))
    throw std::invalid_argument("matrix_of_perm: extension is not an isometry fixing K");
  return m;
}

std::array<std::array<int, 3>, 2> DP6Hexagon::disjoint_triples() const {
  std::array<std::array<int, 3>, 2> out{};
  int found = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        if (!adjacent(a, b) && !adjacent(a, c) && !adjacent(b, c)) {
          if (found == 2) throw std::logic_error("DP6Hexagon: more than two disjoint triples");
          out[static_cast<std::size_t>(found++)] = {a, b, c};
        }
  if (found != 2) throw std::logic_error("DP6Hexagon: expected two disjoint triples");
  return out;
}

}  // namespace picard
