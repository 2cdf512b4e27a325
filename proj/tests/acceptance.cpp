// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 shells out to the CLI binary passed via --cli.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "picard/ag23.hpp"
#include "picard/claims.hpp"
#include "picard/cubic_lines.hpp"
#include "picard/dp6.hpp"
#include "picard/weyl_e6.hpp"

using namespace picard;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void()> body;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

void require_budget_ms(long long elapsed, long long budget, const std::string& what) {
  if (elapsed >= budget)
    throw Failure(what + " took " + std::to_string(elapsed) + " ms (budget " +
                  std::to_string(budget) + " ms)");
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string cli_path;

// ---------------------------------------------------------------- criteria

void criterion1_weyl_order() {
  auto t0 = std::chrono::steady_clock::now();
  WeylE6 w;
  require(w.group().order() == 51840, "|W(E6)| = 51840");
  require_budget_ms(ms_since(t0), 10'000, "building W(E6)");
}

void criterion2_enumerations() {
  auto lines = enumerate_lines(7);
  auto roots = enumerate_roots(7);
  require(lines.size() == 27, "exactly 27 lines");
  require(roots.size() == 72, "exactly 72 roots");
  for (const auto& p : lines) {
    int meet = 0;
    for (const auto& q : lines)
      if (!(p.v == q.v) && pairing(p.v, q.v) == 1) ++meet;
    require(meet == 10, "line " + p.v.str() + " meets exactly 10 others");
  }
}

void criterion3_main_example() {
  auto t0 = std::chrono::steady_clock::now();
  CubicLines cl;
  WeylE6 w;
  for (int idx = 0; idx < 27; ++idx)
    require(cl.line_on_surface(idx),
            "line " + LineLabel::from_index(idx).str() + " lies on the cubic");
  for (int p = 0; p < 27; ++p) {
    int n = 0;
    for (int q = 0; q < 27; ++q)
      if (p != q && cl.meets(p, q)) ++n;
    require(n == 10, "symbolic line meets exactly 10 others");
  }
  LineMatching match(cl, w);  // verifies the incidence-graph isomorphism

  Permutation gl = cl.substitution_perm(Subst::gamma_lambda);
  Permutation gm = cl.substitution_perm(Subst::gamma_mu);
  require(GroupSpec(27, {gl, gm}).order() == 9, "Gamma has order 9");

  for (const Permutation& g : {gl * gm, gl * gm.inverse()}) {
    require(w.carter_type(embed_in_weyl(match, w, g).perm) == CarterType::A2,
            "gamma_i has type A2");
    require(g.fixed_points() == 9, "gamma_i fixes 9 lines");
    std::vector<bool> seen(27, false);
    int triples = 0;
    for (int p = 0; p < 27; ++p) {
      if (seen[static_cast<std::size_t>(p)] || g(p) == p) continue;
      std::vector<int> orbit;
      int q = p;
      while (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        orbit.push_back(q);
        q = g(q);
      }
      require(orbit.size() == 3, "moved lines split into triples");
      for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = s + 1; t < 3; ++t)
          require(!cl.meets(orbit[s], orbit[t]), "invariant triples are disjoint");
      ++triples;
    }
    require(triples == 6, "six invariant disjoint triples");
  }

  std::vector<IntMatrix> ms;
  for (Subst s : {Subst::sigma1, Subst::sigma2, Subst::sigma3})
    require(w.carter_type(embed_in_weyl(match, w, cl.substitution_perm(s)).perm) ==
                CarterType::A2xA2xA2,
            "sigma_i has type A2^3");
  ms.push_back(embed_in_weyl(match, w, gl).matrix);
  ms.push_back(embed_in_weyl(match, w, gm).matrix);
  require(fixed_rank(7, ms) == 3, "fixed rank of Gamma is 3");
  ms.push_back(embed_in_weyl(match, w, cl.substitution_perm(Subst::sigma3)).matrix);
  require(fixed_rank(7, ms) == 1, "fixed rank of Gamma + sigma_3 is 1");
  require_budget_ms(ms_since(t0), 30'000, "main-example pipeline");
}

void criterion4_ag23() {
  auto t0 = std::chrono::steady_clock::now();
  AG23 ag;
  require(ag.group().order() == 432, "|GA_2(F_3)| = 432");
  require(ag.config_lines().size() == 12, "12 configuration lines");
  std::array<int, 9> per_point{};
  for (const auto& tri : ag.config_lines())
    for (int p : tri) ++per_point[static_cast<std::size_t>(p)];
  for (int c : per_point) require(c == 4, "every point on exactly 4 lines");

  GroupSpec syl = sylow_subgroup(ag.group(), 2);
  require(syl.order() == 16, "Sylow-2 has order 16");
  std::set<std::vector<Permutation>> sylows;
  for (const auto& c : ag.group().elements()) {
    std::vector<Permutation> conj;
    for (const auto& x : syl.elements()) conj.push_back(x.conjugate_by(c));
    std::sort(conj.begin(), conj.end());
    sylows.insert(std::move(conj));
  }
  std::size_t checked = 0;
  for (const auto& sy : sylows)
    for (const auto& sub : enumerate_subgroups(GroupSpec(9, sy), 16)) {
      ++checked;
      require(has_common_fixed_point(sub), "2-subgroup has a common fixed point");
    }
  require(checked == sylows.size() * 15, "all 2-subgroups of all Sylow-2s checked");
  require_budget_ms(ms_since(t0), 10'000, "AG(2,3) verification");
}

void criterion5_sylow_lemmas() {
  auto t0 = std::chrono::steady_clock::now();
  WeylE6 w;
  GroupSpec delta = sylow_subgroup(w.group(), 3);
  require(delta.order() == 81, "|Delta| = 81");
  GroupSpec xi = center(delta);
  require(xi.order() == 3, "center of Delta has order 3");
  require(isomorphic_small(delta, wreath_model_mu3()), "Delta is the wreath model");

  for (const auto& x : delta.elements()) {
    if (x.order() != 3 || xi.contains(x)) continue;
    require(is_abelian(centralizer(delta, x)),
            "centralizer of non-central order-3 element is abelian");
  }
  for (const auto& sub : enumerate_subgroups(delta, 81)) {
    bool contains_xi = true;
    for (const auto& z : xi.elements())
      if (!sub.contains(z)) contains_xi = false;
    if (!contains_xi)
      require(is_abelian(sub), "Delta subgroup not containing Xi is abelian");
  }

  GroupSpec h = heisenberg_model();
  require(h.order() == 27, "|H_3| = 27");
  require(exponent(h) == 3, "H_3 has exponent 3");
  GroupSpec hz = center(h);
  require(hz.order() == 3, "center of H_3 has order 3");
  for (const auto& sub : enumerate_subgroups(h, 27)) {
    bool contains_z = true;
    for (const auto& z : hz.elements())
      if (!sub.contains(z)) contains_z = false;
    if (!contains_z)
      require(is_abelian(sub), "H_3 subgroup not containing the center is abelian");
  }
  require_budget_ms(ms_since(t0), 60'000, "Sylow lemmas");
}

void criterion6_dp6() {
  auto t0 = std::chrono::steady_clock::now();
  DP6Hexagon hex;
  const GroupSpec& sym = hex.symmetry_group();
  require(sym.order() == 12, "hexagon symmetry group has order 12");

  GroupSpec zc = center(sym);
  require(zc.order() == 2, "unique central involution");
  Permutation z = zc.elements()[0].is_identity() ? zc.elements()[1] : zc.elements()[0];
  auto triples = hex.disjoint_triples();
  for (int v : triples[0]) {
    bool in2 = false;
    for (int u : triples[1])
      if (u == z(v)) in2 = true;
    require(in2, "z swaps the disjoint triples");
  }
  std::vector<Permutation> preserving;
  for (const auto& x : sym.elements()) {
    bool pres = true;
    for (int v : triples[0]) {
      bool in0 = false;
      for (int u : triples[0])
        if (u == x(v)) in0 = true;
      if (!in0) pres = false;
    }
    if (pres) preserving.push_back(x);
  }
  GroupSpec s3(6, preserving);
  require(s3.order() == 6, "triple-preserving subgroup has order 6");
  require(isomorphic_small(s3, symmetric3_model()), "triple-preserving subgroup is S_3");

  int rotations = 0;
  for (const auto& g : sym.elements()) {
    if (g.order() != 3) continue;
    ++rotations;
    GroupSpec c = centralizer(sym, g);
    require(c.order() == 6, "centralizer of the rotation has order 6");
    for (const auto& sub : enumerate_subgroups(c, 6))
      if (!sub.contains(z)) require(sub.order() <= 3, "subgroups avoiding z have order <= 3");
    IntMatrix m = hex.matrix_of_perm(g);
    require(fixed_rank(4, std::span(&m, 1)) == 2, "rotation-fixed rank is 2");
  }
  require(rotations == 2, "two order-3 rotations");
  require_budget_ms(ms_since(t0), 1'000, "dP6 verification");
}

void criterion7_census() {
  auto t0 = std::chrono::steady_clock::now();
  WeylE6 w;
  auto rows = w.order3_census();  // classification throws on any inconsistency
  require(rows.size() == 3, "three Carter types");
  require(rows[0].count == kOrder3Counts[0] && rows[0].fixed_lines == 9 &&
              rows[0].fixed_rank == 5,
          "A2 row matches the frozen fixture");
  require(rows[1].count == kOrder3Counts[1] && rows[1].fixed_lines == 0 &&
              rows[1].fixed_rank == 3,
          "A2^2 row matches the frozen fixture");
  require(rows[2].count == kOrder3Counts[2] && rows[2].fixed_lines == 0 &&
              rows[2].fixed_rank == 1,
          "A2^3 row matches the frozen fixture");
  require_budget_ms(ms_since(t0), 60'000, "order-3 census (single-threaded)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "report file " + path + " exists");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion8_determinism() {
  auto masked_dump = [](const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    for (auto& claim : j["claims"]) claim["stats"] = nullptr;
    return j.dump();
  };
  if (!cli_path.empty()) {
    std::string r1 = "acceptance_report_1.json", r2 = "acceptance_report_2.json";
    for (const auto& [path, n] : {std::pair{r1, 1}, std::pair{r2, 2}}) {
      std::string cmd = "\"" + cli_path + "\" verify all --json " + path + " > /dev/null";
      require(std::system(cmd.c_str()) == 0, "verify-all run " + std::to_string(n) +
                                                 " exits 0 with all claims verified");
    }
    std::string a = slurp(r1), b = slurp(r2);
    std::remove(r1.c_str());
    std::remove(r2.c_str());
    require(masked_dump(a) == masked_dump(b),
            "two verify-all reports are byte-identical modulo stats");
  } else {
    auto a = report_json(run_all_claims());
    auto b = report_json(run_all_claims());
    require(all_verified(run_all_claims()), "all claims verified");
    require(masked_dump(a.dump()) == masked_dump(b.dump()),
            "two in-process reports are byte-identical modulo stats");
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  std::vector<Criterion> criteria = {
      {1, "W(E6) from 6 simple reflections has order 51840 (< 10 s)", criterion1_weyl_order},
      {2, "27 lines and 72 roots; each line meets exactly 10 others", criterion2_enumerations},
      {3, "main example: symbolic lines, incidence, types, ranks 3 and 1 (< 30 s)",
       criterion3_main_example},
      {4, "GA_2(F_3): order 432, configuration counts, 2-subgroup fixed points (< 10 s)",
       criterion4_ag23},
      {5, "Delta and H_3: orders, centers, wreath model, abelian off-center subgroups (< 60 s)",
       criterion5_sylow_lemmas},
      {6, "dP6 hexagon: S_3 x mu_2 symmetries, order-6 centralizers, rank 2 (< 1 s)",
       criterion6_dp6},
      {7, "order-3 census frozen at 240/480/80 with lines 9/0/0 (< 60 s)", criterion7_census},
      {8, "verify-all reports byte-identical modulo stats", criterion8_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body();
      std::cout << "PASS criterion " << c.number << ": " << c.title << " [" << ms_since(t0)
                << " ms]\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << c.number << ": " << c.title << " — " << e.what()
                << "\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/"
            << criteria.size() << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
