#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfcplace/ilp.hpp"
#include "sfcplace/placement.hpp"
#include "sfcplace/rational.hpp"

namespace sfcplace {

enum class SolveStatus { Optimal, Infeasible, TimedOut };

const char* to_string(SolveStatus status);

struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  double max_wall_ms = std::numeric_limits<double>::infinity();
};

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t propagations = 0;
  double wall_ms = 0.0;
  std::uint64_t incumbents = 0;
  // Constraint family of the row that refuted each failed node.
  std::map<std::string, std::uint64_t> conflicts_by_tag;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  // Present iff a feasible assignment is known (always when Optimal; the
  // incumbent when TimedOut).
  std::optional<Rational> objective;
  // Value per model variable; empty when no feasible assignment is known.
  std::vector<Rational> assignment;
  // Admissible bound on the optimum. Equals objective when Optimal.
  std::optional<Rational> lower_bound;
  SolveStats stats;

  bool has_solution() const { return !assignment.empty(); }
};

struct BnbOptions {
  // Seed the search with first-fit placements.
  bool greedy_incumbent = true;
  // Placement-aware lower bound on top of the objective's own bound.
  bool placement_bound = true;
  // After proving the cost optimum, search for the lowest total chain delay
  // among cost-optimal placements (within tiebreak_budget).
  bool delay_tiebreak = false;
  Budget tiebreak_budget{};
};

SolveResult solve_bnb(const IlpModel& model, const Budget& budget = {}, const BnbOptions& options = {});

class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual SolveResult solve(const IlpModel& model, const Budget& budget) = 0;
};

class BnbBackend final : public SolverBackend {
 public:
  explicit BnbBackend(BnbOptions options = {}) : options_(options) {}
  std::string name() const override { return "bnb"; }
  SolveResult solve(const IlpModel& model, const Budget& budget) override {
    return solve_bnb(model, budget, options_);
  }

 private:
  BnbOptions options_;
};

// Runs `<command> <model.lp> <solution.txt>` and reads the solution file
// (see parse_solution_file). The returned assignment is re-derived and
// checked exactly against the model.
class ExternalBackend final : public SolverBackend {
 public:
  explicit ExternalBackend(std::string command) : command_(std::move(command)) {}
  std::string name() const override { return "external:" + command_; }
  SolveResult solve(const IlpModel& model, const Budget& budget) override;

 private:
  std::string command_;
};

// "bnb" or "external:<cmd>".
std::unique_ptr<SolverBackend> make_backend(const std::string& spec, const BnbOptions& options = {});

// Partial assignment over model variables: -1 unfixed, 0, 1. Continuous
// variables are ignored.
using PartialAssignment = std::vector<std::int8_t>;

struct PropagationOutcome {
  bool conflict = false;
  // Input fixings plus everything they force (meaningless on conflict).
  PartialAssignment values;
  std::string conflict_tag;
};

PropagationOutcome propagate(const IlpModel& model, const PartialAssignment& partial);

// Admissible bound on the best objective of any completion of `partial`.
// Infinity (nullopt) when the bound proves no completion exists.
std::optional<Rational> lower_bound(const IlpModel& model, const PartialAssignment& partial);

// Fills continuous variables from their defining equalities and checks
// every constraint with exact arithmetic. Returns the violated tags.
std::vector<std::string> check_assignment(const IlpModel& model, std::vector<Rational>& assignment);

// First-fit placements used as initial incumbents. `share` lets VNFs join
// an existing compatible VNFI before opening a new one.
std::optional<Placement> greedy_placement(const Scenario& scenario, bool share);

}  // namespace sfcplace
