#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibalg/catalog.hpp"
#include "leibalg/theorems.hpp"

using namespace leibalg;

namespace {

const std::vector<std::string> kLeibniz = {"L1",  "L2",    "L1p",   "N2b",  "N2c",
                                           "OM5", "ABEL1", "ABEL2", "ABEL3"};

const TheoremReport& find(const std::vector<TheoremReport>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  static TheoremReport missing;
  REQUIRE(false);
  return missing;
}

}  // namespace

TEST_CASE("no refuted reports on any catalog algebra") {
  for (const auto& name : kLeibniz) {
    CAPTURE(name);
    auto reports = run_suite(catalog::leibniz(name));
    for (const auto& r : reports) {
      CAPTURE(r.id);
      CHECK(r.verdict != "refuted");
    }
  }
}

TEST_CASE("suite is deterministic for a fixed seed") {
  auto a = reports_json(run_suite(catalog::leibniz("N2b"), 7)).dump();
  auto b = reports_json(run_suite(catalog::leibniz("N2b"), 7)).dump();
  CHECK(a == b);
}

TEST_CASE("N2c satisfies the dichotomy with both sides true") {
  auto reports = run_suite(catalog::leibniz("N2c"));
  const auto& eq = find(reports, "thm-equal-5");
  CHECK(eq.applicable);
  CHECK(eq.verdict == "verified");
  const auto& cor = find(reports, "cor-5.10");
  CHECK(cor.verdict == "verified");
  const auto& cap = find(reports, "cor-derc-der-cap-gamma");
  CHECK(cap.verdict == "verified");
}

TEST_CASE("L1 reports the inner-derivation obstruction") {
  auto reports = run_suite(catalog::leibniz("L1"));
  const auto& ider = find(reports, "thm-ider");
  CHECK_FALSE(ider.applicable);
  CHECK(ider.verdict == "skipped");
  CHECK(ider.reason.find("gamma_2 not in Z") != std::string::npos);
  CHECK(find(reports, "thm-gamma-eq-qder-cap-qgamma").verdict == "verified");
}

TEST_CASE("the centroid-intersection check is gated by the computed hypothesis") {
  auto reports = run_suite(catalog::leibniz("L2"));
  const auto& r = find(reports, "thm-gamma-eq-qder-cap-qgamma");
  CHECK_FALSE(r.applicable);
  CHECK(r.verdict == "skipped");
  CHECK(r.witnesses.at("gamma-contained").get<bool>());
  CHECK(r.witnesses.at("refined-equality").get<bool>());
}

TEST_CASE("abelian algebras verify everything applicable") {
  auto reports = run_suite(catalog::leibniz("ABEL3"));
  for (const auto& r : reports) {
    CAPTURE(r.id);
    if (r.applicable) CHECK(r.verdict == "verified");
  }
  CHECK(find(reports, "thm-gamma-eq-qder-cap-qgamma").verdict == "verified");
}

TEST_CASE("pair suite on (L1, L1) verifies all five block decompositions") {
  auto reports = run_pair_suite(catalog::leibniz("L1"), catalog::leibniz("L1"));
  CHECK(find(reports, "lemma-lemma2-i").verdict == "verified");
  for (const char* id : {"lemma-lemma2-ii-a", "lemma-lemma2-ii-b", "lemma-lemma2-ii-c",
                         "lemma-lemma2-ii-d", "lemma-lemma2-ii-e"}) {
    CAPTURE(id);
    const auto& r = find(reports, id);
    CHECK(r.applicable);
    CHECK(r.verdict == "verified");
  }
}

TEST_CASE("pair suite on (L2, L2) skips the zero-centre cases") {
  auto reports = run_pair_suite(catalog::leibniz("L2"), catalog::leibniz("L2"));
  CHECK(find(reports, "lemma-lemma2-i").verdict == "verified");
  const auto& a = find(reports, "lemma-lemma2-ii-a");
  CHECK_FALSE(a.applicable);
  CHECK(a.verdict == "skipped");
}

TEST_CASE("pair suite on (ABEL1, ABEL1)") {
  auto reports = run_pair_suite(catalog::leibniz("ABEL1"), catalog::leibniz("ABEL1"));
  CHECK(find(reports, "lemma-lemma2-i").verdict == "verified");
}

TEST_CASE("tensor suite verdicts") {
  {
    auto reports = run_tensor_suite(catalog::assoc("A4"), catalog::leibniz("L1p"));
    CHECK(find(reports, "lemma-4.1").verdict == "verified");
    CHECK(find(reports, "thm-4.4").verdict == "verified");
    CHECK(find(reports, "prop-tensor-gamma2").verdict == "verified");
    CHECK(find(reports, "sigma-iso").verdict == "verified");
    for (const auto& r : reports) CHECK(r.verdict != "refuted");
  }
  {
    auto reports = run_tensor_suite(catalog::assoc("TK3"), catalog::leibniz("OM5"));
    const auto& t44 = find(reports, "thm-4.4");
    CHECK(t44.verdict == "verified");
    bool found = false;
    for (const auto& [k, v] : t44.dims)
      if (k == "gamma") {
        CHECK(v == 3);
        found = true;
      }
    CHECK(found);
    for (const auto& r : reports) CHECK(r.verdict != "refuted");
  }
  {
    auto reports = run_tensor_suite(catalog::assoc("B4"), catalog::leibniz("OM5"));
    CHECK(find(reports, "lemma-4.1").verdict == "verified");
    const auto& strict = find(reports, "remark-nonunital-strictness");
    CHECK(strict.applicable);
    CHECK(strict.verdict == "verified");
    const auto& g2 = find(reports, "prop-tensor-gamma2");
    CHECK_FALSE(g2.applicable);
    CHECK(g2.verdict == "skipped");
    CHECK(find(reports, "thm-4.4").verdict == "skipped");
    for (const auto& r : reports) CHECK(r.verdict != "refuted");
  }
}

TEST_CASE("reports serialize sorted by id with the fixed schema") {
  auto reports = run_suite(catalog::leibniz("L1"));
  auto arr = reports_json(reports);
  REQUIRE(arr.is_array());
  std::string prev;
  for (const auto& j : arr) {
    CHECK(j.contains("id"));
    CHECK(j.contains("applicable"));
    CHECK(j.contains("reason"));
    CHECK(j.contains("verdict"));
    CHECK(j.contains("dims"));
    CHECK(j.contains("witnesses"));
    std::string id = j.at("id").get<std::string>();
    CHECK(prev < id);
    prev = id;
  }
}

TEST_CASE("every report id has a suite section") {
  auto reports = run_suite(catalog::leibniz("N2c"));
  for (const auto& r : reports) {
    std::string s = report_section(r.id);
    CHECK((s == "s3" || s == "s4" || s == "s5" || s == "s6"));
  }
  CHECK(report_section("thm-equal-5") == "s5");
  CHECK(report_section("lemma-lemma1-ii") == "s4");
  CHECK(report_section("thm-4.4") == "s6");
  CHECK(report_section("thm-pushforward") == "s3");
}

TEST_CASE("any_refuted flags a refutation") {
  std::vector<TheoremReport> rs(1);
  rs[0].verdict = "verified";
  CHECK_FALSE(any_refuted(rs));
  rs[0].verdict = "refuted";
  CHECK(any_refuted(rs));
}
