#include <doctest.h>

#include <algorithm>
#include <set>

#include "picard/dp6.hpp"
#include "picard/weyl_e6.hpp"

using namespace picard;

namespace {

GroupSpec s3_times_mu2_model() {
  return GroupSpec(5, {Permutation::from_cycles(5, {{0, 1}}),
                       Permutation::from_cycles(5, {{0, 1, 2}}),
                       Permutation::from_cycles(5, {{3, 4}})});
}

}  // namespace

TEST_SUITE("dp6") {

TEST_CASE("six curves forming a 6-cycle") {
  DP6Hexagon hex;
  REQUIRE(hex.curves().size() == 6);
  for (int p = 0; p < 6; ++p) {
    int deg = 0;
    for (int q = 0; q < 6; ++q)
      if (hex.adjacent(p, q)) ++deg;
    CHECK(deg == 2);
  }
  // E1, E2, E3 are pairwise disjoint
  int e1 = hex.curve_index(LatticeVector::unit(4, 1));
  int e2 = hex.curve_index(LatticeVector::unit(4, 2));
  int e3 = hex.curve_index(LatticeVector::unit(4, 3));
  CHECK_FALSE(hex.adjacent(e1, e2));
  CHECK_FALSE(hex.adjacent(e1, e3));
  CHECK_FALSE(hex.adjacent(e2, e3));
}

TEST_CASE("the alternating triples are the only independent 3-sets") {
  DP6Hexagon hex;
  auto triples = hex.disjoint_triples();
  auto has = [&](const std::array<int, 3>& t, int v) {
    return std::find(t.begin(), t.end(), v) != t.end();
  };
  // they partition the vertices
  for (int v = 0; v < 6; ++v) CHECK((has(triples[0], v) ^ has(triples[1], v)));
  // the blow-up classes form one of them
  int e1 = hex.curve_index(LatticeVector::unit(4, 1));
  CHECK((has(triples[0], e1) || has(triples[1], e1)));
}

TEST_CASE("symmetry group has order 12 and preserves the lattice structure") {
  DP6Hexagon hex;
  const GroupSpec& sym = hex.symmetry_group();
  CHECK(sym.order() == 12);
  for (const auto& p : sym.elements()) {
    IntMatrix m = hex.matrix_of_perm(p);
    CHECK(preserves_pairing(m));
    CHECK(fixes_canonical_class(m));
    // all 16 basis pairs
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        LatticeVector u = m.apply(LatticeVector::unit(4, i));
        LatticeVector v = m.apply(LatticeVector::unit(4, j));
        CHECK(pairing(u, v) ==
              pairing(LatticeVector::unit(4, i), LatticeVector::unit(4, j)));
      }
  }
  CHECK(isomorphic_small(sym, s3_times_mu2_model()));
}

TEST_CASE("z is the unique central involution and swaps the triples") {
  DP6Hexagon hex;
  const GroupSpec& sym = hex.symmetry_group();
  GroupSpec zc = center(sym);
  REQUIRE(zc.order() == 2);
  Permutation z = zc.elements()[0].is_identity() ? zc.elements()[1] : zc.elements()[0];
  CHECK(z.order() == 2);
  CHECK(z.fixed_points() == 0);
  auto triples = hex.disjoint_triples();
  for (int v : triples[0])
    CHECK(std::find(triples[1].begin(), triples[1].end(), z(v)) != triples[1].end());
}

TEST_CASE("triple-preserving symmetries form S3") {
  DP6Hexagon hex;
  auto triples = hex.disjoint_triples();
  std::vector<Permutation> preserving;
  for (const auto& x : hex.symmetry_group().elements()) {
    bool pres = true;
    for (int v : triples[0])
      if (std::find(triples[0].begin(), triples[0].end(), x(v)) == triples[0].end())
        pres = false;
    if (pres) preserving.push_back(x);
  }
  GroupSpec s3(6, preserving);
  CHECK(s3.order() == 6);
  CHECK(isomorphic_small(s3, symmetric3_model()));
}

TEST_CASE("order-3 rotations: centralizer of order 6, subgroup orders without z, rank 2") {
  DP6Hexagon hex;
  const GroupSpec& sym = hex.symmetry_group();
  GroupSpec zc = center(sym);
  Permutation z = zc.elements()[0].is_identity() ? zc.elements()[1] : zc.elements()[0];
  int rotations = 0;
  for (const auto& g : sym.elements()) {
    if (g.order() != 3) continue;
    ++rotations;
    GroupSpec c = centralizer(sym, g);
    CHECK(c.order() == 6);
    CHECK(GroupSpec(6, {g, z}).elements() == c.elements());
    std::set<std::size_t> orders_without_z;
    for (const auto& sub : enumerate_subgroups(c, 6))
      if (!sub.contains(z)) orders_without_z.insert(sub.order());
    CHECK(orders_without_z == std::set<std::size_t>{1, 3});
    IntMatrix m = hex.matrix_of_perm(g);
    CHECK(fixed_rank(4, std::span(&m, 1)) == 2);
  }
  CHECK(rotations == 2);
}

TEST_CASE("matrix_of_perm rejects non-symmetries") {
  DP6Hexagon hex;
  // a transposition of two adjacent vertices does not extend to an isometry
  bool found = false;
  for (int a = 0; a < 6 && !found; ++a)
    for (int b = a + 1; b < 6 && !found; ++b)
      if (hex.adjacent(a, b)) {
        CHECK_THROWS_AS(hex.matrix_of_perm(Permutation::from_cycles(6, {{a, b}})),
                        std::invalid_argument);
        found = true;
      }
  CHECK(found);
}

}  // TEST_SUITE
