#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfcplace/ilp.hpp"
#include "sfcplace/model.hpp"
#include "sfcplace/placement.hpp"
#include "sfcplace/solver.hpp"
#include "sfcplace/stats.hpp"

namespace sfcplace {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct GenConfig {
  int n_clouds = 6;
  int n_sfcs = 4;
  IntRange chain_len{2, 4};
  int n_types = 3;
  int n_flavors = 3;
  int security_levels = 15;
  double conflict_prob = 0.1;
  std::uint64_t seed = 1;
  // Mixed into the streams of clouds and links, or of SFCs and conflicts.
  // Varying one salt changes that part of the instance and keeps the rest.
  std::uint64_t topology_salt = 0;
  std::uint64_t workload_salt = 0;

  // Clouds sit on an integer grid of this side length; link delay is
  // delay_base_ms plus the Euclidean distance times delay_per_unit_ms,
  // rounded to 0.1 ms.
  std::int64_t area = 100;
  double delay_base_ms = 1.0;
  double delay_per_unit_ms = 0.1;
  IntRange bandwidth_mbps{100, 1000};
  // CPU units per cloud; RAM and storage follow at fixed ratios.
  IntRange cloud_cpu{6, 16};
  // CPU units of the largest flavor and of the smallest one; larger flavors
  // are cheaper.
  IntRange flavor_cpu{2, 8};
  IntRange flavor_price{1, 10};
  IntRange traffic_mbps{10, 100};
  // Required security level per SFC.
  IntRange min_security{1, 5};
  // Delay allowance per hop of a chain, in ms.
  IntRange hop_delay_budget_ms{8, 16};
};

// Deterministic for a fixed config. Clouds, SFCs and conflicts come from
// per-entity random streams, so the instance for n clouds (or n SFCs) is a
// prefix of the one for n + k with the same seed.
Scenario generate(const GenConfig& config);

enum class Axis { Edges, Sfcs };

const char* to_string(Axis axis);

struct SweepConfig {
  Axis axis = Axis::Edges;
  std::vector<int> points;
  int repetitions = 10;
  GenConfig base;
  // Every point of a repetition shares the repetition seed, so flavors and
  // the part of the instance not being swept are common to all points.
  // Without nesting the swept part also gets a salt per point; with nesting
  // it does not, and by the prefix property of generate() each larger
  // instance extends the smaller one.
  bool nested = false;
  // Every repetition uses base.seed.
  bool identical_seeds = false;
  int jobs = 1;
  Budget budget{2'000'000, std::numeric_limits<double>::infinity()};
  BnbOptions solver{true, true, true, Budget{200'000, std::numeric_limits<double>::infinity()}};
  BuildOptions build;
};

struct SweepRow {
  int axis_value = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Rational> cost;
  // Mean over SFCs of the chain delay.
  std::optional<Rational> mean_delay_ms;
  std::uint64_t nodes_explored = 0;
  double wall_ms = 0.0;
  std::optional<Placement> placement;
  // Violations the independent validator found in the placement.
  std::size_t violations = 0;
};

struct SweepPoint {
  int axis_value = 0;
  int repetitions = 0;
  int infeasible = 0;
  int timed_out = 0;
  // Over Optimal repetitions only.
  Summary cost;
  Summary delay;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;  // point-major, repetition order
  std::vector<SweepPoint> points;
};

std::uint64_t instance_seed(const SweepConfig& config, int point_index, int rep);
// The generator config of one sweep instance.
GenConfig instance_config(const SweepConfig& config, int point_index, int rep);

using SweepProgress = std::function<void(const SweepRow&)>;

SweepResult run_sweep(const SweepConfig& config, const SweepProgress& progress = {});

// axis_value,rep,seed,status,cost,mean_delay_ms,nodes_explored,wall_ms.
// wall_ms is left empty unless `timing` is set, which keeps the file
// reproducible.
std::string sweep_rows_csv(const SweepResult& result, bool timing = false);
// axis_value,n,infeasible,timed_out,mean_cost,ci95_cost,mean_delay_ms,ci95_delay_ms.
std::string sweep_summary_csv(const SweepResult& result);

}  // namespace sfcplace
