#include <doctest.h>

#include <set>

#include "../fixtures.hpp"
#include "sfcplace/ilp.hpp"
#include "sfcplace/lp_format.hpp"

using namespace sfcplace;

TEST_CASE("registry sizes follow the scenario dimensions") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  const auto& d = m.vars.dims();
  CHECK(d.vnfs == 5);
  CHECK(d.vnfis == 5);
  CHECK(d.pairs.size() == 3);
  CHECK(m.vars.count(VarKind::X) == 25);
  CHECK(m.vars.count(VarKind::Yvuc) == 75);
  CHECK(m.vars.count(VarKind::Cucf) == 30);
  CHECK(m.vars.count(VarKind::Ypair) == 18);
  CHECK(m.vars.count(VarKind::Fhop) == 3);
  CHECK(m.vars.size() == 211);
  CHECK(m.vars.info(m.vars.fhop(0)).continuous);
  CHECK(m.vars.name(m.vars.ypair(1, 2, 0)) == "Ypair_1_2_0");
  CHECK(m.vars.find("Cucf_4_2_1") == m.vars.cucf(4, 2, 1));
  CHECK(m.vars.find("nope") == -1);
}

TEST_CASE("row counts per family") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  CHECK(m.count_tag("eq1") == 5);            // one per VNF
  CHECK(m.count_tag("eq13") == 75);          // one per Yvuc
  CHECK(m.count_tag("eq21") == 30);          // one per Cucf
  CHECK(m.count_tag("eq24") == 9);           // clouds x resource kinds
  CHECK(m.count_tag("eq26") == 18);          // one per Ypair
  CHECK(m.count_tag("hopdef") == 3);
  CHECK(m.count_tag("eq32") == 2);
  CHECK(m.count_tag("eq33") == 18);
  CHECK(m.count_tag("conflict") == 5);       // one conflicting pair x VNFIs
}

TEST_CASE("every base tag appears for a feature-complete scenario") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  for (const auto& tag : base_tags()) CHECK_MESSAGE(m.count_tag(tag) > 0, tag);
  std::set<std::string> known(base_tags().begin(), base_tags().end());
  for (const auto& row : m.constraints)
    CHECK_MESSAGE((known.count(row.tag) || row.tag.rfind("ext-", 0) == 0), row.tag);
}

TEST_CASE("no conflict rows without conflicts") {
  auto doc = ordered_json::parse(fixtures::kFeatureComplete);
  doc["sfcs"][1]["vnfs"][0].erase("conflicts");
  const IlpModel m = build_model(normalize_types(load_bundle(doc.dump())));
  CHECK(m.count_tag("conflict") == 0);
}

TEST_CASE("extensions are opt-in") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  CHECK(build_model(s).count_tag("ext-bandwidth") == 0);
  BuildOptions o;
  o.bandwidth = true;
  o.endpoints = true;
  o.symmetry_breaking = false;
  const IlpModel m = build_model(s, o);
  CHECK(m.count_tag("ext-bandwidth") > 0);
  CHECK(m.count_tag("ext-endpoints") > 0);
  CHECK(m.count_tag("ext-symbreak") == 0);
}

TEST_CASE("security rows bound each pair's link choice") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  for (const auto& row : m.constraints) {
    if (row.tag != "eq33") continue;
    REQUIRE(row.terms.size() == 1);
    CHECK(m.vars.info(row.terms[0].var).kind == VarKind::Ypair);
    CHECK(row.sense == Sense::LessEqual);
  }
}

TEST_CASE("big-M type rows use |types| + 1") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  bool seen = false;
  for (const auto& row : m.constraints) {
    if (row.tag != "eq5") continue;
    for (const auto& t : row.terms)
      if (m.vars.info(t.var).kind == VarKind::X) {
        CHECK(t.coeff == Rational(3));
        seen = true;
      }
  }
  CHECK(seen);
}

TEST_CASE("objective prices every flavor choice") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  CHECK(m.objective.size() == 10);
  for (const auto& t : m.objective) CHECK(m.vars.info(t.var).kind == VarKind::Phi);
}

TEST_CASE("integrity check rejects dangling variables") {
  IlpModel m = build_model(fixtures::load(fixtures::kOneVnf));
  CHECK_NOTHROW(check_integrity(m));
  m.constraints.push_back({{{Rational(1), static_cast<int>(m.vars.size())}}, Sense::LessEqual, Rational(0), "eq1"});
  CHECK_THROWS_AS(check_integrity(m), IntegrityError);
}

TEST_CASE("model building is deterministic") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  CHECK(to_lp_string(build_model(s)) == to_lp_string(build_model(s)));
}

TEST_CASE("evaluate and satisfied") {
  const IlpModel m = build_model(fixtures::load(fixtures::kOneVnf));
  std::vector<Rational> zero(m.vars.size(), Rational(0));
  CHECK(evaluate(m.objective, zero) == Rational(0));
  const auto& eq1 = *std::find_if(m.constraints.begin(), m.constraints.end(),
                                  [](const LinearConstraint& r) { return r.tag == "eq1"; });
  CHECK_FALSE(satisfied(eq1, zero));
}
