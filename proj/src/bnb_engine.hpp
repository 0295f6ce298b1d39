#pragma once

// Internal search machinery for the branch-and-bound backend.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfcplace/ilp.hpp"
#include "sfcplace/rational.hpp"

namespace sfcplace::detail {

inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

// Affine definition of a continuous variable over booleans.
struct Definition {
  Rational constant;
  std::vector<Term> terms;
};

// The model restated over boolean variables only: continuous variables are
// substituted by their defining equalities, every row becomes
// sum(a_j x_j) <= b with integer a_j, b, and rows that can never be
// violated are dropped.
class BooleanSystem {
 public:
  BooleanSystem(const IlpModel& model, const std::vector<Term>& objective,
                const std::vector<LinearConstraint>& extra_rows = {});

  std::size_t var_count() const { return is_continuous_.size(); }
  bool is_continuous(int var) const { return is_continuous_[static_cast<std::size_t>(var)]; }
  const std::vector<std::optional<Definition>>& definitions() const { return definitions_; }

  std::size_t row_count() const { return rhs_.size(); }
  std::int64_t rhs(std::size_t row) const { return rhs_[row]; }
  // Tag of the model row a system row came from ("objective-cut" for
  // extra rows).
  const std::string& tag(std::size_t row) const { return tags_[row]; }

  // Row terms sorted by decreasing magnitude.
  std::size_t row_begin(std::size_t row) const { return row_start_[row]; }
  std::size_t row_end(std::size_t row) const { return row_start_[row + 1]; }
  int term_var(std::size_t k) const { return term_var_[k]; }
  std::int64_t term_coef(std::size_t k) const { return term_coef_[k]; }

  std::size_t occ_begin(int var) const { return occ_start_[static_cast<std::size_t>(var)]; }
  std::size_t occ_end(int var) const { return occ_start_[static_cast<std::size_t>(var) + 1]; }
  int occ_row(std::size_t k) const { return occ_row_[k]; }
  std::int64_t occ_coef(std::size_t k) const { return occ_coef_[k]; }

  // Objective value = (constant + sum c_j x_j) / scale.
  std::int64_t objective_coef(int var) const { return obj_coef_[static_cast<std::size_t>(var)]; }
  std::int64_t objective_constant() const { return obj_const_; }
  std::int64_t objective_scale() const { return obj_scale_; }
  Rational objective_value(std::int64_t scaled) const { return Rational(scaled, obj_scale_); }
  // Smallest scaled objective >= value.
  std::int64_t scale_objective_ceil(const Rational& value) const;

  bool trivially_infeasible() const { return trivially_infeasible_; }
  const std::string& infeasible_tag() const { return infeasible_tag_; }

 private:
  void add_row(std::vector<std::pair<int, Rational>> terms, Rational rhs, const std::string& tag);

  std::vector<bool> is_continuous_;
  std::vector<std::optional<Definition>> definitions_;

  std::vector<std::int64_t> rhs_;
  std::vector<std::string> tags_;
  std::vector<std::size_t> row_start_{0};
  std::vector<int> term_var_;
  std::vector<std::int64_t> term_coef_;

  std::vector<std::size_t> occ_start_;
  std::vector<int> occ_row_;
  std::vector<std::int64_t> occ_coef_;

  std::vector<std::int64_t> obj_coef_;
  std::int64_t obj_const_ = 0;
  std::int64_t obj_scale_ = 1;

  bool trivially_infeasible_ = false;
  std::string infeasible_tag_;
};

class PlacementBound;

// Trail-based propagation state over a BooleanSystem.
class Engine {
 public:
  Engine(const BooleanSystem& system, const IlpModel& model, bool placement_bound);
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // Propagates every row once; false on conflict.
  bool initialize();
  // Fixes var and propagates to a fixpoint; false on conflict. On conflict
  // the caller must backtrack.
  bool assign(int var, std::int8_t value);
  void backtrack(std::size_t trail_size);
  std::size_t trail_size() const { return trail_.size(); }

  std::int8_t value(int var) const { return value_[static_cast<std::size_t>(var)]; }
  const std::vector<std::int8_t>& values() const { return value_; }

  // Scaled lower bound; kInfinity when the node cannot be completed. Work
  // stops early once the bound reaches `cutoff`.
  std::int64_t bound(std::int64_t cutoff = kInfinity) const;
  // Scaled objective; exact once every boolean is fixed.
  std::int64_t objective_floor() const { return obj_min_; }

  const std::string& conflict_tag() const { return *conflict_tag_; }
  std::uint64_t propagations() const { return propagations_; }

 private:
  bool fix(int var, std::int8_t value);
  bool run_queue();
  void enqueue(int row);
  void clear_queue();

  const BooleanSystem& sys_;
  std::vector<std::int8_t> value_;
  std::vector<std::int64_t> min_act_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<char> queued_;
  std::int64_t obj_min_ = 0;
  const std::string* conflict_tag_;
  std::uint64_t propagations_ = 0;
  std::unique_ptr<PlacementBound> placement_;
};

// Branching rule. VNFs are taken in order: first the X variables that pick
// the VNF's VNFI, then the U and Phi variables of that VNFI (Phi by
// decreasing objective coefficient), so chain, capacity and security rows
// bite while the prefix is still short. Remaining booleans follow by index.
class Brancher {
 public:
  Brancher(const IlpModel& model, const BooleanSystem& system);

  // Lowest unfixed variable at or after `cursor` (advanced in place); -1
  // when every boolean is fixed.
  int next(const Engine& engine, std::size_t& cursor) const;

 private:
  const VarRegistry& vars_;
  int vnfs_;
  std::vector<int> flavor_order_;
  std::vector<int> rest_;
};

}  // namespace sfcplace::detail
