#include <doctest.h>

#include "../fixtures.hpp"
#include "sfcplace/ilp.hpp"
#include "sfcplace/lp_format.hpp"
#include "sfcplace/solver.hpp"

using namespace sfcplace;

TEST_CASE("lp text has the standard sections and tag names") {
  const IlpModel m = build_model(fixtures::load(fixtures::kFeatureComplete));
  const std::string lp = to_lp_string(m);
  for (const char* section : {"Minimize", "Subject To", "Bounds", "Binaries", "End"})
    CHECK_MESSAGE(lp.find(section) != std::string::npos, section);
  CHECK(lp.find(" eq33_0:") != std::string::npos);
  CHECK(lp.find(" conflict_4:") != std::string::npos);
  CHECK(lp.find(" hopdef_0:") != std::string::npos);
  CHECK(lp.find("Fhop_0") != std::string::npos);
}

TEST_CASE("solution files round-trip") {
  const IlpModel m = build_model(fixtures::load(fixtures::kOneVnf));
  const SolveResult r = solve_bnb(m);
  REQUIRE(r.status == SolveStatus::Optimal);
  const std::string text = format_solution_file(m, r.assignment, *r.objective);
  const ExternalSolution sol = parse_solution_file(text);
  REQUIRE(sol.has_solution);
  CHECK(sol.objective == *r.objective);
  for (std::size_t i = 0; i < m.vars.size(); ++i) {
    const auto it = sol.values.find(m.vars.name(static_cast<int>(i)));
    const Rational v = it == sol.values.end() ? Rational(0) : it->second;
    CHECK(v == r.assignment[i]);
  }
}

TEST_CASE("solution file parsing") {
  CHECK_FALSE(parse_solution_file("infeasible\n").has_solution);
  CHECK_FALSE(parse_solution_file("X_0_0 1\n").has_solution);
  const auto s = parse_solution_file("=obj= 7.5\nX_0_0 1\nPhi_0_1 0.9999999\n");
  REQUIRE(s.has_solution);
  CHECK(s.objective == Rational(15, 2));
  CHECK(s.values.at("X_0_0") == Rational(1));
}
