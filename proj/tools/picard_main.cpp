#include <iostream>

#include <CLI11.hpp>

#include "picard/claims.hpp"
#include "picard/graph_export.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
  if (!picard::write_text_file(path, content)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the lattice and group claims behind the 27-line, "
               "AG(2,3) and del Pezzo hexagon computations"};
  app.require_subcommand(1);

  std::string claim = "all";
  std::string json_path;
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "run a claim (or all) and report verdicts");
  verify->add_option("claim", claim, "claim id or 'all'")->required();
  verify->add_option("--json", json_path, "write the JSON report to this path");
  verify->add_flag("--slow-cross-checks", slow, "also run the exhaustive cross-checks");

  std::string census_target;
  std::string census_json;
  auto* census = app.add_subcommand("census", "order-3 census tables");
  census->add_option("target", census_target, "census name (w_e6_order3)")->required();
  census->add_option("--json", census_json, "write the JSON table to this path");

  std::string graph;
  std::string out_path;
  auto* exp = app.add_subcommand("export", "write a graph in DOT format");
  exp->add_option("graph", graph, "one of: lines27, hexagon, ag23")->required();
  exp->add_option("--out", out_path, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      std::vector<std::string> ids;
      if (claim == "all") {
        for (const auto& info : picard::list_claims()) ids.push_back(info.id);
      } else if (picard::is_claim_id(claim)) {
        ids.push_back(claim);
      } else {
        std::cerr << "error: unknown claim id '" << claim << "'\nvalid ids:\n";
        for (const auto& info : picard::list_claims()) std::cerr << "  " << info.id << "\n";
        return 2;
      }
      picard::ClaimOptions options;
      options.slow_cross_checks = slow;
      auto certs = picard::run_claims(ids, options);
      std::cout << picard::report_text(certs);
      if (!json_path.empty()) {
        int rc = write_file(json_path, picard::report_json(certs).dump(2) + "\n");
        if (rc != 0) return rc;
      }
      return picard::all_verified(certs) ? 0 : 1;
    }

    if (census->parsed()) {
      if (census_target != "w_e6_order3") {
        std::cerr << "error: unknown census target '" << census_target
                  << "' (expected w_e6_order3)\n";
        return 2;
      }
      std::cout << picard::census_order3_text();
      if (!census_json.empty()) {
        int rc = write_file(census_json, picard::census_order3_json().dump(2) + "\n");
        if (rc != 0) return rc;
      }
      return 0;
    }

    if (exp->parsed()) {
      std::string dot;
      if (graph == "lines27")
        dot = picard::dot_lines27();
      else if (graph == "hexagon")
        dot = picard::dot_hexagon();
      else if (graph == "ag23")
        dot = picard::dot_ag23();
      else {
        std::cerr << "error: unknown graph '" << graph
                  << "' (expected lines27, hexagon or ag23)\n";
        return 2;
      }
      return write_file(out_path, dot);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
