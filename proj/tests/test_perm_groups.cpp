#include <doctest.h>

#include <algorithm>
#include <random>

#include "picard/group.hpp"
#include "picard/weyl_e6.hpp"

using namespace picard;

namespace {

GroupSpec s3_times_mu2() {
  return GroupSpec(5, {Permutation::from_cycles(5, {{0, 1}}),
                       Permutation::from_cycles(5, {{0, 1, 2}}),
                       Permutation::from_cycles(5, {{3, 4}})});
}

}  // namespace

TEST_SUITE("perm_groups") {

TEST_CASE("permutation basics") {
  Permutation a = Permutation::from_cycles(5, {{0, 1, 2}});
  Permutation b = Permutation::from_cycles(5, {{2, 3}});
  CHECK((a * b)(2) == a(b(2)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);
  CHECK(a.cycle_string() == "(0 1 2)");
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK(a.fixed_points() == 2);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("generate: empty set gives the trivial group") {
  GroupSpec g(4, {});
  CHECK(g.order() == 1);
  CHECK(g.elements()[0].is_identity());
}

TEST_CASE("generate: a 3-cycle gives order 3") {
  GroupSpec g(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(g.order() == 3);
}

TEST_CASE("generate is deterministic and order-independent") {
  Permutation a = Permutation::from_cycles(4, {{0, 1}});
  Permutation b = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  GroupSpec g1(4, {a, b});
  GroupSpec g2(4, {b, a});
  GroupSpec g3(4, {a, b});
  CHECK(g1.elements() == g2.elements());
  CHECK(g1.elements() == g3.elements());
  CHECK(g1.order() == 24);
}

TEST_CASE("generation cap is enforced and named") {
  GroupSpec g(8, {Permutation::from_cycles(8, {{0, 1}}),
                  Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})},
              1000);
  CHECK_THROWS_WITH_AS(g.order(), doctest::Contains("1000"), GenerationCapExceeded);
}

TEST_CASE("center of an abelian group is the whole group") {
  GroupSpec g = mu3_cubed_model();
  CHECK(center(g).order() == g.order());
  CHECK(is_abelian(g));
}

TEST_CASE("center of S3 is trivial") {
  CHECK(center(symmetric3_model()).order() == 1);
  CHECK_FALSE(is_abelian(symmetric3_model()));
}

TEST_CASE("centralizer basics and membership error") {
  GroupSpec s3 = symmetric3_model();
  CHECK(centralizer(s3, Permutation::identity(3)).order() == 6);
  CHECK(centralizer(s3, Permutation::from_cycles(3, {{0, 1, 2}})).order() == 3);
  CHECK(centralizer(s3_times_mu2(), Permutation::from_cycles(5, {{0, 1, 2}})).order() == 6);
  GroupSpec mu3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK_THROWS_AS(centralizer(mu3, Permutation::from_cycles(3, {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("center is contained in every centralizer") {
  GroupSpec g = wreath_model_mu3();
  GroupSpec z = center(g);
  for (const auto& x : g.elements()) {
    GroupSpec c = centralizer(g, x);
    CHECK(c.contains(x));
    for (const auto& zz : z.elements()) CHECK(c.contains(zz));
  }
}

TEST_CASE("sylow subgroup of S3 at p=3") {
  GroupSpec syl = sylow_subgroup(symmetric3_model(), 3);
  CHECK(syl.order() == 3);
  CHECK_THROWS_AS(sylow_subgroup(symmetric3_model(), 5), std::invalid_argument);
}

TEST_CASE("sylow subgroup of S4 at p=2") {
  GroupSpec s4(4, {Permutation::from_cycles(4, {{0, 1}}),
                   Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  GroupSpec syl = sylow_subgroup(s4, 2);
  CHECK(syl.order() == 8);
  for (const auto& x : syl.elements()) CHECK((x.order() == 1 || x.order() % 2 == 0));
}

TEST_CASE("subgroups of mu3 and mu3^2") {
  GroupSpec mu3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(enumerate_subgroups(mu3, 3).size() == 2);

  GroupSpec mu3sq(6, {Permutation::from_cycles(6, {{0, 1, 2}}),
                      Permutation::from_cycles(6, {{3, 4, 5}})});
  auto subs = enumerate_subgroups(mu3sq, 9);
  CHECK(subs.size() == 6);  // trivial + four of order 3 + full
  for (const auto& s : subs) CHECK(9 % s.order() == 0);
}

TEST_CASE("subgroup enumeration respects Lagrange and max_order") {
  GroupSpec s4(4, {Permutation::from_cycles(4, {{0, 1}}),
                   Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  auto subs = enumerate_subgroups(s4, 12);
  for (const auto& s : subs) {
    CHECK(24 % s.order() == 0);
    CHECK(s.order() <= 12);
  }
  // 24 has 30 subgroups; excluding S4 itself leaves 29
  CHECK(subs.size() == 29);
  CHECK_THROWS_AS(enumerate_subgroups(s4, 200), std::invalid_argument);
}

TEST_CASE("subgroup enumeration rejects oversized groups") {
  GroupSpec s8(8, {Permutation::from_cycles(8, {{0, 1}}),
                   Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  CHECK_THROWS_AS(enumerate_subgroups(s8, 16), std::invalid_argument);
}

TEST_CASE("element orders of S3 x mu2") {
  auto orders = element_orders(s3_times_mu2());
  std::map<int, std::size_t> expected{{1, 1}, {2, 7}, {3, 2}, {6, 2}};
  CHECK(orders == expected);
  CHECK(exponent(s3_times_mu2()) == 6);
}

TEST_CASE("heisenberg model has order 27 and exponent 3") {
  GroupSpec h = heisenberg_model();
  CHECK(h.order() == 27);
  CHECK(exponent(h) == 3);
  CHECK_FALSE(is_abelian(h));
  CHECK(center(h).order() == 3);
}

TEST_CASE("isomorphic_small accepts equal cyclic groups across degrees") {
  GroupSpec a(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  GroupSpec b(6, {Permutation::from_cycles(6, {{1, 3, 5}})});
  CHECK(isomorphic_small(a, b));
}

TEST_CASE("isomorphic_small separates H3 from mu3^3") {
  CHECK_FALSE(isomorphic_small(heisenberg_model(), mu3_cubed_model()));
}

TEST_CASE("isomorphic_small separates mu9 from mu3^2") {
  GroupSpec mu9(9, {Permutation::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})});
  GroupSpec mu3sq(6, {Permutation::from_cycles(6, {{0, 1, 2}}),
                      Permutation::from_cycles(6, {{3, 4, 5}})});
  CHECK_FALSE(isomorphic_small(mu9, mu3sq));
}

TEST_CASE("isomorphic_small finds the wreath model isomorphic to itself rebased") {
  GroupSpec w = wreath_model_mu3();
  // same group with the point labels rotated
  Permutation relabel = Permutation::from_cycles(9, {{0, 4, 8, 2, 6, 1, 5, 3, 7}});
  std::vector<Permutation> gens;
  for (const auto& g : w.generators()) gens.push_back(g.conjugate_by(relabel));
  CHECK(isomorphic_small(w, GroupSpec(9, gens)));
}

TEST_CASE("isomorphic_small enforces the size bound") {
  GroupSpec big(27, heisenberg_model().generators());
  GroupSpec other = wreath_model_mu3();
  GroupSpec w81 = wreath_model_mu3();
  CHECK(isomorphic_small(w81, w81));
  GroupSpec s8(8, {Permutation::from_cycles(8, {{0, 1}}),
                   Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  CHECK_THROWS_AS(isomorphic_small(s8, s8), std::invalid_argument);
  CHECK_FALSE(isomorphic_small(big, other));  // 27 vs 81
}

TEST_CASE("greedy generators regenerate the group") {
  for (const GroupSpec& g : {wreath_model_mu3(), heisenberg_model(), s3_times_mu2()}) {
    auto gens = greedy_generators(g);
    CHECK(GroupSpec(g.degree(), gens).order() == g.order());
    CHECK(gens.size() <= 4);
  }
}

}  // TEST_SUITE
