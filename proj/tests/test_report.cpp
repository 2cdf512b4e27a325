#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "picard/claims.hpp"
#include "picard/graph_export.hpp"

using namespace picard;

namespace {

nlohmann::ordered_json masked(nlohmann::ordered_json report) {
  for (auto& claim : report["claims"]) claim["stats"] = nullptr;
  return report;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("claim registry is sorted and non-trivial") {
  auto claims = list_claims();
  CHECK(claims.size() >= 10);
  for (std::size_t k = 1; k < claims.size(); ++k) CHECK(claims[k - 1].id < claims[k].id);
  CHECK(is_claim_id("sec3.rank3"));
  CHECK(is_claim_id("lemma4.1"));
  CHECK_FALSE(is_claim_id("lemma9.9"));
}

TEST_CASE("lemma4.1 verifies in under five seconds") {
  auto t0 = std::chrono::steady_clock::now();
  auto certs = run_claims({"lemma4.1"});
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].verdict == Verdict::verified);
  CHECK(certs[0].witness.is_null());
  CHECK(certs[0].stats["sylow2_count"] == 27);
  CHECK(ms < 5000);
}

TEST_CASE("unknown claim ids are rejected") {
  CHECK_THROWS_AS(run_claims({"nonexistent"}), std::invalid_argument);
}

TEST_CASE("the JSON schema has fixed keys in fixed order") {
  auto certs = run_claims({"lemma6.2", "lemma6.3"});
  auto j = report_json(certs);
  CHECK(j.begin().key() == "version");
  CHECK(j["version"] == "1.0.0");
  REQUIRE(j["claims"].size() == 2);
  CHECK(j["claims"][0]["claim_id"] == "lemma6.2");
  std::vector<std::string> keys;
  for (auto it = j["claims"][0].begin(); it != j["claims"][0].end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"claim_id", "paper_anchor", "verdict", "witness",
                                         "stats"});
  CHECK(j["claims"][0]["stats"]["elapsed_ms"].is_number_integer());
}

TEST_CASE("reports are byte-identical modulo stats") {
  std::vector<std::string> ids{"lattice.lines27", "lemma6.2", "lemma6.3", "sec3.galois"};
  auto a = report_json(run_claims(ids));
  auto b = report_json(run_claims(ids));
  CHECK(masked(a).dump() == masked(b).dump());
}

TEST_CASE("a failed check produces a refuted certificate with a witness") {
  ClaimRun run("demo.claim", "anchor text");
  run.check(1 + 1 == 2, "arithmetic holds");
  run.check(false, "deliberately failing check", {{"value", 41}});
  Certificate cert = run.finish();
  CHECK(cert.verdict == Verdict::refuted);
  REQUIRE(cert.witness.is_array());
  CHECK(cert.witness.size() == 1);
  CHECK(cert.witness[0]["failed_check"] == "deliberately failing check");
  auto j = cert.to_json();
  CHECK(j["verdict"] == "refuted");
}

TEST_CASE("text report counts verdicts") {
  auto certs = run_claims({"lemma6.2"});
  std::string text = report_text(certs);
  CHECK(text.find("verified lemma6.2") != std::string::npos);
  CHECK(text.find("1/1 claims verified") != std::string::npos);
}

TEST_CASE("census table carries the frozen counts") {
  auto j = census_order3_json();
  CHECK(j["census"] == "w_e6_order3");
  CHECK(j["group_order"] == 51840);
  CHECK(j["order3_total"] == 800);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["type"] == "A2");
  CHECK(j["rows"][0]["count"] == kOrder3Counts[0]);
  CHECK(j["rows"][0]["fixed_lines"] == 9);
  CHECK(j["rows"][1]["count"] == kOrder3Counts[1]);
  CHECK(j["rows"][2]["count"] == kOrder3Counts[2]);
  std::string text = census_order3_text();
  CHECK(text.find("A2^3") != std::string::npos);
}

TEST_CASE("DOT exports have the right vertex and edge counts") {
  std::string l27 = dot_lines27();
  CHECK(count_lines_with(l27, " -- ") == 135);
  CHECK(count_lines_with(l27, "f1_") >= 9);

  std::string hex = dot_hexagon();
  CHECK(count_lines_with(hex, " -- ") == 6);

  std::string ag = dot_ag23();
  CHECK(count_lines_with(ag, " -- ") == 36);
  // bipartite: point-line edges only
  CHECK(count_lines_with(ag, "p") >= 9);
  CHECK(dot_lines27() == l27);  // deterministic
}

TEST_CASE("file writing reports I/O failures") {
  CHECK_FALSE(write_text_file("/nonexistent-dir/out.dot", "x"));
  std::string path = "test_report_tmp.dot";
  CHECK(write_text_file(path, dot_hexagon()));
  std::remove(path.c_str());
}

}  // TEST_SUITE
