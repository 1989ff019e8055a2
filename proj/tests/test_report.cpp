#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "logsplit/errors.hpp"
#include "logsplit/parse.hpp"
#include "logsplit/report.hpp"

using namespace logsplit;

namespace {

Arrangement nearly5() {
  return Arrangement{parse_arrangement("1 0 0\n0 1 0\n0 0 1\n0 1 -1\n1 2 3\n")};
}

std::set<std::string> check_names(const FullReport& r) {
  std::set<std::string> names;
  for (const auto& c : r.checks) names.insert(c.name);
  return names;
}

}  // namespace

TEST_CASE("curve report: nearly free quintic") {
  FullReport r = analyze_curve(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
  CHECK(r.degree == 5);
  CHECK(r.tau == 11);
  CHECK(r.mdr == 2);
  CHECK(r.nu == 1);
  CHECK(r.chern == ChernPair{-4, 5});
  CHECK(r.cls == CurveClass::NearlyFree);
  REQUIRE(r.exponents.has_value());
  CHECK(*r.exponents == ExponentPair{2, 3});
  REQUIRE(r.generic.has_value());
  CHECK(*r.generic == SplitType{2, 2});
  CHECK(r.tau_range.tau_min == 8);
  CHECK(r.tau_range.tau_max == 12);
  CHECK(r.gen_degrees == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
  CHECK(!r.arrangement.has_value());
  CHECK(r.all_passed());
  for (const auto& c : r.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.passed);
  }

  nlohmann::ordered_json j = report_json(r);
  CHECK(j["degree"] == 5);
  CHECK(j["tau"] == 11);
  CHECK(j["classification"] == "nearly_free");
  CHECK(j["exponents"] == nlohmann::ordered_json::array({2, 3}));
  CHECK(j["generic_splitting"] == nlohmann::ordered_json::array({2, 2}));
  CHECK(j["arrangement"].is_null());
}

TEST_CASE("arrangement report: nearly free quintic arrangement") {
  FullReport r = analyze_arrangement(nearly5());
  REQUIRE(r.arrangement.has_value());
  const ArrangementReport& ar = *r.arrangement;
  CHECK(ar.n == 5);
  CHECK(ar.chi == CharPoly{4, 5});
  CHECK(ar.tau_lattice == 11);
  CHECK(ar.flats.size() == 8);
  CHECK(ar.decision.applicable);
  CHECK(ar.decision.verdict == ArrVerdict::NearlyFree);
  CHECK(ar.decision.h == 0);
  CHECK(ar.unbalanced_lines == std::vector<int>{1, 2, 3});
  CHECK(ar.unbalanced_verdict == ArrVerdict::NearlyFree);
  CHECK(ar.has_second_type);
  REQUIRE(ar.second_type_witness.has_value());
  CHECK(*ar.second_type_witness == 1);
  CHECK(ar.additions.empty());
  CHECK(r.all_passed());

  // the arrangement layer contributes its own cross-checks
  auto names = check_names(r);
  for (const char* required :
       {"tau_lattice_agreement", "char_poly_tau", "restriction_sum",
        "splitting_restriction_agreement", "freeness_by_restriction", "nearfree_by_restriction",
        "chi_factors", "small_restriction_agreement", "unbalanced_agreement", "reduced_witness",
        "classification_consistent", "chern_consistent", "generic_vs_exponents"}) {
    INFO(required);
    CHECK(names.count(required) == 1);
  }

  nlohmann::ordered_json j = report_json(r);
  CHECK(j["arrangement"]["n"] == 5);
  CHECK(j["arrangement"]["char_poly"] == nlohmann::ordered_json::array({4, 5}));
  CHECK(j["arrangement"]["restriction_decision"]["verdict"] == "nearly_free");
  CHECK(j["arrangement"]["second_type_restriction"]["exists"] == true);
  CHECK(j["arrangement"]["second_type_restriction"]["h_index"] == 1);
  CHECK(j["arrangement"]["restrictions"].size() == 5);
  CHECK(!j["arrangement"].contains("additions"));
}

TEST_CASE("per-line rows: members first, then the generic witness") {
  FullReport r = analyze_arrangement(nearly5());
  REQUIRE(r.lines.size() >= 6);  // five members plus at least one sampled line
  int members = 0;
  for (const auto& lr : r.lines) {
    if (lr.member) ++members;
    CHECK(lr.splitting.d1 + lr.splitting.d2 == r.degree - 1);
    CHECK(lr.defect >= r.tau + r.nu);
  }
  CHECK(members == 5);
  // x jumps, z does not
  CHECK(r.lines[0].splitting == SplitType{1, 3});
  CHECK(r.lines[2].splitting == SplitType{2, 2});

  // a bare curve knows no member lines: only the sampled generic witness
  FullReport rc = analyze_curve(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
  REQUIRE(rc.lines.size() == 1);
  CHECK(!rc.lines[0].member);
  CHECK(rc.lines[0].splitting == SplitType{2, 2});
  CHECK(rc.lines[0].defect == rc.tau + rc.nu);
}

TEST_CASE("pencil report: no generic splitting, direct member types") {
  FullReport r = analyze_curve(parse_poly("x*y*(x - y)*(x + y)"));
  CHECK(r.cls == CurveClass::Pencil);
  CHECK(!r.generic.has_value());
  REQUIRE(r.exponents.has_value());
  CHECK(*r.exponents == ExponentPair{0, 3});
  for (const auto& lr : r.lines) {
    CHECK(lr.member);
    CHECK(lr.splitting == SplitType{0, 3});
  }
  CHECK(r.all_passed());
  nlohmann::ordered_json j = report_json(r);
  CHECK(j["generic_splitting"].is_null());
}

TEST_CASE("free arrangement report with addition ledgers") {
  Arrangement tri{parse_arrangement("1 0 0\n0 1 0\n0 0 1\n")};
  ReportOptions opt;
  opt.with_addition = true;
  FullReport r = analyze_arrangement(tri, opt);
  REQUIRE(r.arrangement.has_value());
  CHECK(r.arrangement->additions.size() == 3);
  for (const auto& ad : r.arrangement->additions)
    for (const auto& im : ad.implications) CHECK(im.respected());
  CHECK(check_names(r).count("addition_deletion_respected") == 1);
  CHECK(r.all_passed());

  nlohmann::ordered_json j = report_json(r);
  REQUIRE(j["arrangement"].contains("additions"));
  CHECK(j["arrangement"]["additions"].size() == 3);
}

TEST_CASE("addition ledger serialization") {
  Arrangement g4{parse_arrangement("1 0 0\n0 1 0\n0 0 1\n1 2 3\n")};
  AdditionDeletion ad = addition_deletion(g4, 3);
  nlohmann::ordered_json j = addition_json(ad);
  CHECK(j["h_index"] == 3);
  CHECK(j["restriction_count"] == 3);
  CHECK(j["with_line"] == "nearly_free");
  CHECK(j["without_line"] == "free");
  REQUIRE(j["implications"].is_array());
  for (const auto& im : j["implications"]) {
    CHECK(im.contains("name"));
    CHECK(im.contains("premises"));
    CHECK(im.contains("conclusion"));
    CHECK(im["respected"] == true);
  }
  std::string text = addition_text(ad);
  CHECK(text.find("nearly_addition") != std::string::npos);
  CHECK(text.find("[ok]") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  ReportOptions opt;
  opt.seed = 9;
  std::string a = report_json(analyze_curve(parse_poly("x*y*z*(x + 2*y + 3*z)"), opt)).dump(2);
  std::string b = report_json(analyze_curve(parse_poly("x*y*z*(x + 2*y + 3*z)"), opt)).dump(2);
  CHECK(a == b);

  std::string c = report_json(analyze_arrangement(nearly5(), opt)).dump(2);
  std::string d = report_json(analyze_arrangement(nearly5(), opt)).dump(2);
  CHECK(c == d);
}

TEST_CASE("text rendering carries the headline invariants") {
  std::string text = report_text(analyze_curve(parse_poly("x*y*z")));
  CHECK(text.find("degree 3") != std::string::npos);
  CHECK(text.find("tau 3") != std::string::npos);
  CHECK(text.find("free") != std::string::npos);
  CHECK(text.find("(1,1)") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("failed squarefree certificate aborts curve analysis") {
  CHECK_THROWS_AS(analyze_curve(parse_poly("x^2*y")), InvariantError);
}
