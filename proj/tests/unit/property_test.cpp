#include <doctest.h>

#include "../fixtures.hpp"
#include "sfcplace/assignment.hpp"
#include "sfcplace/ilp.hpp"
#include "sfcplace/oracle.hpp"
#include "sfcplace/scenarios.hpp"
#include "sfcplace/solver.hpp"

using namespace sfcplace;

TEST_CASE("bnb matches exhaustive search on random tiny instances") {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    CAPTURE(seed);
    const Scenario s = generate(fixtures::tiny_config(seed));
    const SolveResult r = solve_bnb(build_model(s));
    const BruteForceResult b = brute_force(s);
    REQUIRE(r.status != SolveStatus::TimedOut);
    CHECK((r.status == SolveStatus::Optimal) == b.feasible);
    if (b.feasible) CHECK(*r.objective == *b.objective);
  }
}

TEST_CASE("symmetry breaking and the placement bound keep the optimum") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    CAPTURE(seed);
    GenConfig g;
    g.seed = seed;
    g.n_clouds = 3;
    g.n_sfcs = 2;
    g.chain_len = {1, 3};
    const Scenario s = generate(g);
    BuildOptions plain;
    plain.symmetry_breaking = false;
    BnbOptions bare;
    bare.placement_bound = false;
    bare.greedy_incumbent = false;
    const SolveResult a = solve_bnb(build_model(s));
    const SolveResult b = solve_bnb(build_model(s, plain), {}, bare);
    CHECK(a.status == b.status);
    if (a.objective && b.objective) CHECK(*a.objective == *b.objective);
  }
}

TEST_CASE("solutions validate and survive a decode/encode round trip") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CAPTURE(seed);
    GenConfig g;
    g.seed = seed;
    g.n_clouds = 2 + static_cast<int>(seed % 5);
    g.n_sfcs = 1 + static_cast<int>(seed % 3);
    const IlpModel m = build_model(generate(g));
    const SolveResult r = solve_bnb(m);
    if (!r.has_solution()) continue;
    const Placement p = decode_placement(m, r.assignment);
    CHECK(validate_solution(*m.scenario, p).empty());
    CHECK(p.total_cost == *r.objective);
    auto values = encode_placement(m, p);
    CHECK(check_assignment(m, values).empty());
    CHECK(evaluate(m.objective, values) == *r.objective);
    for (const auto& q : p.sfcs) {
      const auto& sfc = *std::find_if(m.scenario->sfcs().begin(), m.scenario->sfcs().end(),
                                      [&](const SfcRequest& x) { return x.id == q.sfc_id; });
      CHECK(q.total_delay_ms <= sfc.max_delay_ms);
      CHECK(q.min_link_security_used >= sfc.min_security);
    }
  }
}

TEST_CASE("propagation never removes an optimal completion") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CAPTURE(seed);
    const IlpModel m = build_model(generate(fixtures::tiny_config(seed)));
    const SolveResult r = solve_bnb(m);
    if (!r.has_solution()) continue;
    // Fix a prefix of the optimum and propagate: nothing may contradict it.
    for (std::size_t cut : {std::size_t{1}, m.vars.size() / 4, m.vars.size() / 2}) {
      PartialAssignment p(m.vars.size(), -1);
      for (std::size_t i = 0; i < cut; ++i)
        if (!m.vars.info(static_cast<int>(i)).continuous) p[i] = r.assignment[i] == Rational(1) ? 1 : 0;
      const auto out = propagate(m, p);
      REQUIRE_FALSE(out.conflict);
      for (std::size_t i = 0; i < m.vars.size(); ++i)
        if (out.values[i] >= 0) CHECK(Rational(out.values[i]) == r.assignment[i]);
      const auto lb = lower_bound(m, p);
      REQUIRE(lb);
      CHECK(*lb <= *r.objective);
    }
  }
}

TEST_CASE("nested topologies never raise the optimal cost") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    std::optional<Rational> prev;
    for (int clouds = 2; clouds <= 6; ++clouds) {
      GenConfig g;
      g.seed = seed;
      g.n_clouds = clouds;
      g.n_sfcs = 2;
      const SolveResult r = solve_bnb(build_model(generate(g)));
      REQUIRE(r.status != SolveStatus::TimedOut);
      if (r.status != SolveStatus::Optimal) continue;
      if (prev) CHECK(*r.objective <= *prev);
      prev = r.objective;
    }
  }
}

TEST_CASE("adding an SFC never lowers the optimal cost") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CAPTURE(seed);
    std::optional<Rational> prev;
    bool infeasible = false;
    for (int sfcs = 1; sfcs <= 3; ++sfcs) {
      GenConfig g;
      g.seed = seed;
      g.n_clouds = 4;
      g.n_sfcs = sfcs;
      const SolveResult r = solve_bnb(build_model(generate(g)));
      REQUIRE(r.status != SolveStatus::TimedOut);
      if (r.status == SolveStatus::Infeasible) infeasible = true;
      if (r.status != SolveStatus::Optimal) continue;
      CHECK_FALSE(infeasible);
      if (prev) CHECK(*r.objective >= *prev);
      prev = r.objective;
    }
  }
}

TEST_CASE("mutations of optimal placements are always caught") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CAPTURE(seed);
    GenConfig g;
    g.seed = seed;
    g.n_clouds = 4;
    g.n_sfcs = 3;
    const IlpModel m = build_model(generate(g));
    const SolveResult r = solve_bnb(m);
    if (!r.has_solution()) continue;
    const Placement p = decode_placement(m, r.assignment);
    for (const auto& mut : single_mutations(*m.scenario, p))
      CHECK_MESSAGE(!validate_solution(*m.scenario, mut.placement).empty(), mut.description);
  }
}
