#include "picard/weyl_e6.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace picard {

std::string to_string(CarterType t) {
  switch (t) {
    case CarterType::A2: return "A2";
    case CarterType::A2xA2: return "A2^2";
    case CarterType::A2xA2xA2: return "A2^3";
  }
  throw std::logic_error("unknown CarterType");
}

namespace {

std::vector<RootVector> simple_roots() {
  std::vector<RootVector> out;
  for (int i = 1; i <= 5; ++i) {
    std::vector<Coord> c(7, 0);
    c[static_cast<std::size_t>(i)] = 1;
    c[static_cast<std::size_t>(i + 1)] = -1;
    out.emplace_back(LatticeVector(std::move(c)));
  }
  out.emplace_back(LatticeVector({1, -1, -1, -1, 0, 0, 0}));
  return out;
}

}  // namespace

WeylE6::WeylE6()
    : lines_(enumerate_lines(7)),
      basis_inverse_(7),
      group_(27, {}) {
  if (lines_.size() != 27) throw std::logic_error("WeylE6: expected 27 lines");

  std::map<LatticeVector, int> index;
  for (int i = 0; i < 27; ++i) index.emplace(lines_[static_cast<std::size_t>(i)].v, i);

  // L-E1-E2 together with E1..E6 is a unimodular basis of the lattice.
  std::vector<LatticeVector> basis_vecs;
  basis_vecs.push_back(LatticeVector({1, -1, -1, 0, 0, 0, 0}));
  for (int i = 1; i <= 6; ++i) basis_vecs.push_back(LatticeVector::unit(7, i));
  for (int k = 0; k < 7; ++k)
    basis_lines_[static_cast<std::size_t>(k)] = index.at(basis_vecs[static_cast<std::size_t>(k)]);
  basis_inverse_ = inverse_unimodular(IntMatrix::from_columns(basis_vecs));

  std::vector<Permutation> gens;
  for (const auto& root : simple_roots()) {
    simple_.push_back(reflection_matrix(7, root));
    gens.push_back(perm_of_matrix(simple_.back()));
  }
  group_ = GroupSpec(27, std::move(gens));
}

int WeylE6::line_index(const LatticeVector& v) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), v,
                             [](const LineClass& a, const LatticeVector& b) { return a.v < b; });
  if (it == lines_.end() || it->v != v)
    throw std::invalid_argument("WeylE6: " + v.str() + " is not one of the 27 lines");
  return static_cast<int>(it - lines_.begin());
}

Permutation WeylE6::perm_of_matrix(const IntMatrix& m) const {
  std::vector<int> img(27);
  for (int i = 0; i < 27; ++i)
    img[static_cast<std::size_t>(i)] = line_index(m.apply(lines_[static_cast<std::size_t>(i)].v));
  return Permutation::from_images(img);
}

IntMatrix WeylE6::matrix_of_perm(const Permutation& p) const {
  if (p.degree() != 27)
    throw std::invalid_argument("matrix_of_perm: permutation degree is not 27");
  std::vector<LatticeVector> cols;
  cols.reserve(7);
  for (int k = 0; k < 7; ++k)
    cols.push_back(lines_[static_cast<std::size_t>(p(basis_lines_[static_cast<std::size_t>(k)]))].v);
  IntMatrix m = IntMatrix::from_columns(cols) * basis_inverse_;
  for (int i = 0; i < 27; ++i)
    if (m.apply(lines_[static_cast<std::size_t>(i)].v) != lines_[static_cast<std::size_t>(p(i))].v)
      throw std::invalid_argument(
          "matrix_of_perm: permutation is not induced by a lattice isometry");
  // mapping all 27 lines consistently forces an isometry fixing K, since the
  // lines span the lattice and the permutation preserves their Gram table;
  // check the table to reject incidence-breaking permutations early
  for (int i = 0; i < 27; ++i)
    for (int j = i + 1; j < 27; ++j)
      if (pairing(lines_[static_cast<std::size_t>(p(i))].v, lines_[static_cast<std::size_t>(p(j))].v) !=
          pairing(lines_[static_cast<std::size_t>(i)].v, lines_[static_cast<std::size_t>(j)].v))
        throw std::invalid_argument("matrix_of_perm: permutation breaks the pairing table");
  return m;
}

WeylElement WeylE6::element(const Permutation& p) const { return {matrix_of_perm(p), p}; }

int WeylE6::fixed_rank_of(const Permutation& p) const {
  IntMatrix m = matrix_of_perm(p);
  return fixed_rank(7, std::span(&m, 1));
}

CarterType WeylE6::carter_type(const Permutation& p) const {
  if (p.order() != 3)
    throw std::invalid_argument("carter_type: element order is not 3");
  int fr = fixed_rank_of(p);
  int fl = fixed_line_count(p);
  CarterType t;
  switch (fr) {
    case 5: t = CarterType::A2; break;
    case 3: t = CarterType::A2xA2; break;
    case 1: t = CarterType::A2xA2xA2; break;
    default:
      throw std::logic_error("carter_type: unexpected fixed rank " + std::to_string(fr));
  }
  int want_fl = (t == CarterType::A2) ? 9 : 0;
  if (fl != want_fl)
    throw std::logic_error("carter_type: fixed-line count " + std::to_string(fl) +
                           " inconsistent with fixed rank " + std::to_string(fr));
  return t;
}

std::vector<WeylE6::CensusRow> WeylE6::order3_census() const {
  std::vector<CensusRow> rows = {{CarterType::A2, 0, 9, 5},
                                 {CarterType::A2xA2, 0, 0, 3},
                                 {CarterType::A2xA2xA2, 0, 0, 1}};
  for (const auto& p : group_.elements()) {
    if (p.order() != 3) continue;
    CarterType t = carter_type(p);  // cross-checks rank against fixed lines
    rows[static_cast<std::size_t>(t == CarterType::A2 ? 0 : (t == CarterType::A2xA2 ? 1 : 2))]
        .count++;
  }
  return rows;
}

GroupSpec wreath_model_mu3() {
  return GroupSpec(9, {Permutation::from_cycles(9, {{0, 1, 2}}),
                       Permutation::from_cycles(9, {{3, 4, 5}}),
                       Permutation::from_cycles(9, {{6, 7, 8}}),
                       Permutation::from_cycles(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})});
}

GroupSpec mu3_cubed_model() {
  return GroupSpec(9, {Permutation::from_cycles(9, {{0, 1, 2}}),
                       Permutation::from_cycles(9, {{3, 4, 5}}),
                       Permutation::from_cycles(9, {{6, 7, 8}})});
}

GroupSpec symmetric3_model() {
  return GroupSpec(3, {Permutation::from_cycles(3, {{0, 1}}),
                       Permutation::from_cycles(3, {{0, 1, 2}})});
}

namespace {

// Elements (a,b,c) with product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'),
// i.e. upper unitriangular 3x3 matrices over F_3; index = 9a + 3b + c.
int h3_mul(int x, int y) {
  int a = x / 9, b = (x / 3) % 3, c = x % 3;
  int a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
  return 9 * ((a + a2) % 3) + 3 * ((b + b2) % 3) + (c + c2 + a * b2) % 3;
}

Permutation h3_right_translation(int g) {
  std::vector<int> img(27);
  for (int x = 0; x < 27; ++x) img[static_cast<std::size_t>(x)] = h3_mul(x, g);
  return Permutation::from_images(img);
}

}  // namespace

GroupSpec heisenberg_model() {
  return GroupSpec(27, {h3_right_translation(9),   // (1,0,0)
                        h3_right_translation(3)}); // (0,1,0)
}

}  // namespace picard
