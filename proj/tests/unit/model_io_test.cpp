#include <doctest.h>

#include <string>

#include "../fixtures.hpp"
#include "sfcplace/model.hpp"
#include "sfcplace/scenario_io.hpp"

using namespace sfcplace;

namespace {

std::string error_of(const std::string& doc) {
  try {
    load_bundle(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

ordered_json feature_complete() { return ordered_json::parse(fixtures::kFeatureComplete); }

}  // namespace

TEST_CASE("bundle loads and indexes VNFs in chain order") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  REQUIRE(s.vnf_count() == 5);
  CHECK(s.vnf(0).id == "v-fw");
  CHECK(s.vnf(3).id == "t-fw");
  CHECK(s.sfc_offset(1) == 3);
  CHECK(*s.vnf_index("t-dpi") == 4);
  CHECK(s.type_count() == 2);
  CHECK(s.vnf(0).type == s.vnf(2).type);
  CHECK(s.vnf(0).type != s.vnf(1).type);
}

TEST_CASE("conflicts are closed symmetrically") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  const auto& v = s.vnf(0);
  REQUIRE(v.conflicts.size() == 1);
  CHECK(v.conflicts[0] == "t-fw");
}

TEST_CASE("cloud link matrix") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  const auto& t = s.topology();
  CHECK(t.cloud_link(0, 1).delay_ms == Rational(3, 2));
  CHECK(t.cloud_link(1, 0).security_level == 9);
  CHECK(t.cloud_link(2, 2).delay_ms == Rational(0));
  CHECK(t.cloud_link(2, 2).security_level == t.max_security());
  CHECK(t.link("iot", "c") != nullptr);
  CHECK(t.link("ran", "b") == nullptr);
}

TEST_CASE("input errors carry a field path") {
  auto doc = feature_complete();
  doc["sfcs"][1]["vnfs"][0]["conflicts"][0] = "ghost";
  CHECK(error_of(doc.dump()).rfind("sfcs[1].vnfs[0].conflicts[0]: dangling id 'ghost'", 0) == 0);

  doc = feature_complete();
  doc["topology"]["links"].erase(1);
  CHECK(error_of(doc.dump()).find("no link between clouds 'a' and 'c'") != std::string::npos);

  doc = feature_complete();
  doc["flavors"][0]["price"] = -1;
  CHECK(error_of(doc.dump()).rfind("flavors[0].price", 0) == 0);

  doc = feature_complete();
  doc["sfcs"][0].erase("max_delay_ms");
  CHECK(error_of(doc.dump()).find("max_delay_ms") != std::string::npos);

  doc = feature_complete();
  doc["topology"]["links"][0]["security_level"] = 16;
  CHECK(error_of(doc.dump()).rfind("topology.links[0].security_level", 0) == 0);

  CHECK(error_of("{not json").find("invalid JSON") != std::string::npos);
}

TEST_CASE("unreachable links count as security zero") {
  auto doc = feature_complete();
  doc["topology"]["links"][0]["unreachable"] = true;
  const Scenario s = load_bundle(doc.dump());
  CHECK(s.topology().cloud_link(0, 1).security_level == 0);
}

TEST_CASE("canonical documents round-trip byte for byte") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  const std::string once = bundle_to_json(s).dump(2);
  const std::string twice = bundle_to_json(load_bundle(once)).dump(2);
  CHECK(once == twice);
}

TEST_CASE("three documents load like the bundle") {
  const Scenario s = fixtures::load(fixtures::kFeatureComplete);
  const Scenario t = load_scenario(topology_to_json(s.topology()).dump(), sfcs_to_json(s).dump(),
                                   flavors_to_json(s.flavors(), s.topology().resource_kinds()).dump());
  CHECK(bundle_to_json(normalize_types(t)).dump() == bundle_to_json(s).dump());
}
