#include "bnb_engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sfcplace::detail {
namespace {

const std::string kNoTag;
// Assigning the opposite of a value that propagation already forced.
const std::string kForcedTag = "forced";

std::int64_t delta(std::int64_t a, std::int8_t value) {
  if (a > 0) return value == 1 ? a : 0;
  return value == 0 ? -a : 0;
}

std::int64_t to_int(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("non-integral coefficient after scaling");
  return r.num();
}

}  // namespace

BooleanSystem::BooleanSystem(const IlpModel& model, const std::vector<Term>& objective,
                             const std::vector<LinearConstraint>& extra_rows) {
  const std::size_t n = model.vars.size();
  is_continuous_.resize(n);
  definitions_.resize(n);
  for (std::size_t i = 0; i < n; ++i) is_continuous_[i] = model.vars.info(static_cast<int>(i)).continuous;

  std::vector<bool> defining(model.constraints.size(), false);
  std::vector<std::string> def_tag(n);
  for (std::size_t r = 0; r < model.constraints.size(); ++r) {
    const auto& row = model.constraints[r];
    if (row.sense != Sense::Equal) continue;
    int cont = -1, count = 0;
    for (const auto& t : row.terms)
      if (is_continuous(t.var) && !t.coeff.is_zero()) {
        cont = t.var;
        ++count;
      }
    if (count != 1 || definitions_[static_cast<std::size_t>(cont)]) continue;
    Rational k(0);
    for (const auto& t : row.terms)
      if (t.var == cont) k += t.coeff;
    Definition def;
    def.constant = row.rhs / k;
    for (const auto& t : row.terms)
      if (t.var != cont) def.terms.push_back({-t.coeff / k, t.var});
    definitions_[static_cast<std::size_t>(cont)] = std::move(def);
    def_tag[static_cast<std::size_t>(cont)] = row.tag;
    defining[r] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_continuous_[i]) continue;
    if (!definitions_[i]) throw std::logic_error("continuous variable " + model.vars.name(static_cast<int>(i)) +
                                                 " has no defining equality");
    for (const auto& t : definitions_[i]->terms)
      if (is_continuous(t.var)) throw std::logic_error("nested continuous definitions are not supported");
  }

  // sum(terms) over booleans plus a constant, after substitution.
  auto flatten = [&](const std::vector<Term>& terms, Rational& constant) {
    std::map<int, Rational> acc;
    for (const auto& t : terms) {
      if (t.coeff.is_zero()) continue;
      if (is_continuous(t.var)) {
        const auto& def = *definitions_[static_cast<std::size_t>(t.var)];
        constant += t.coeff * def.constant;
        for (const auto& d : def.terms) acc[d.var] += t.coeff * d.coeff;
      } else {
        acc[t.var] += t.coeff;
      }
    }
    std::vector<std::pair<int, Rational>> out;
    for (auto& [var, c] : acc)
      if (!c.is_zero()) out.emplace_back(var, c);
    return out;
  };
  auto negate = [](std::vector<std::pair<int, Rational>> terms) {
    for (auto& t : terms) t.second = -t.second;
    return terms;
  };
  auto add_constraint = [&](const LinearConstraint& row) {
    Rational constant(0);
    auto terms = flatten(row.terms, constant);
    const Rational rhs = row.rhs - constant;
    if (row.sense != Sense::GreaterEqual) add_row(terms, rhs, row.tag);
    if (row.sense != Sense::LessEqual) add_row(negate(std::move(terms)), -rhs, row.tag);
  };

  for (std::size_t r = 0; r < model.constraints.size(); ++r)
    if (!defining[r]) add_constraint(model.constraints[r]);
  for (const auto& row : extra_rows) add_constraint(row);
  // Continuous variables are non-negative.
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_continuous_[i]) continue;
    LinearConstraint row{{{1, static_cast<int>(i)}}, Sense::GreaterEqual, 0, def_tag[i]};
    add_constraint(row);
  }

  occ_start_.assign(n + 1, 0);
  for (int v : term_var_) ++occ_start_[static_cast<std::size_t>(v) + 1];
  for (std::size_t i = 0; i < n; ++i) occ_start_[i + 1] += occ_start_[i];
  occ_row_.resize(term_var_.size());
  occ_coef_.resize(term_var_.size());
  std::vector<std::size_t> fill(occ_start_.begin(), occ_start_.end() - 1);
  for (std::size_t row = 0; row < rhs_.size(); ++row) {
    for (std::size_t k = row_start_[row]; k < row_start_[row + 1]; ++k) {
      const auto slot = fill[static_cast<std::size_t>(term_var_[k])]++;
      occ_row_[slot] = static_cast<int>(row);
      occ_coef_[slot] = term_coef_[k];
    }
  }

  Rational obj_constant(0);
  auto obj_terms = flatten(objective, obj_constant);
  std::int64_t scale = obj_constant.den();
  for (const auto& t : obj_terms) scale = lcm_checked(scale, t.second.den());
  obj_scale_ = scale;
  obj_const_ = to_int(obj_constant * Rational(scale));
  obj_coef_.assign(n, 0);
  for (const auto& t : obj_terms) obj_coef_[static_cast<std::size_t>(t.first)] = to_int(t.second * Rational(scale));
}

void BooleanSystem::add_row(std::vector<std::pair<int, Rational>> terms, Rational rhs, const std::string& tag) {
  std::int64_t scale = rhs.den();
  for (const auto& t : terms) scale = lcm_checked(scale, t.second.den());
  std::vector<std::pair<int, std::int64_t>> ints;
  ints.reserve(terms.size());
  std::int64_t max_act = 0;
  for (const auto& t : terms) {
    const std::int64_t a = to_int(t.second * Rational(scale));
    ints.emplace_back(t.first, a);
    if (a > 0) max_act += a;
  }
  const std::int64_t b = to_int(rhs * Rational(scale));
  if (max_act <= b) return;
  if (ints.empty()) {
    if (!trivially_infeasible_) infeasible_tag_ = tag;
    trivially_infeasible_ = true;
    return;
  }
  std::stable_sort(ints.begin(), ints.end(), [](const auto& x, const auto& y) {
    const auto ax = x.second < 0 ? -x.second : x.second;
    const auto ay = y.second < 0 ? -y.second : y.second;
    return ax > ay;
  });
  for (const auto& [var, a] : ints) {
    term_var_.push_back(var);
    term_coef_.push_back(a);
  }
  row_start_.push_back(term_var_.size());
  rhs_.push_back(b);
  tags_.push_back(tag);
}

std::int64_t BooleanSystem::scale_objective_ceil(const Rational& value) const {
  const Rational scaled = value * Rational(obj_scale_);
  std::int64_t q = scaled.num() / scaled.den();
  if (q * scaled.den() < scaled.num()) ++q;
  return q;
}

// Lower bound from the placement structure of the cost objective: every
// deployed VNFI pays for one flavor, every type needs enough VNFIs for its
// members that cannot share, and all flavors together must fit into the
// residual capacity.
class PlacementBound {
 public:
  static std::unique_ptr<PlacementBound> create(const BooleanSystem& sys, const IlpModel& model) {
    if (!model.scenario || sys.objective_constant() != 0) return nullptr;
    const auto& r = model.vars;
    const auto& d = r.dims();
    if (d.vnfis == 0 || d.flavors == 0) return nullptr;
    std::vector<std::int64_t> price(static_cast<std::size_t>(d.flavors));
    for (int f = 0; f < d.flavors; ++f) price[static_cast<std::size_t>(f)] = sys.objective_coef(r.phi(0, f));
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto& info = r.info(static_cast<int>(i));
      const auto c = sys.objective_coef(static_cast<int>(i));
      if (info.kind == VarKind::Phi) {
        if (c != price[static_cast<std::size_t>(info.idx[1])] || c < 0) return nullptr;
      } else if (c != 0) {
        return nullptr;
      }
    }
    return std::unique_ptr<PlacementBound>(new PlacementBound(model, std::move(price)));
  }

  std::int64_t compute(const std::vector<std::int8_t>& val, std::int64_t obj_min, std::int64_t cutoff) const {
    const auto& r = model_.vars;
    const auto& d = r.dims();
    const Scenario& s = *model_.scenario;
    const auto at = [&](int var) { return val[static_cast<std::size_t>(var)]; };

    std::int64_t flex_min = 0;
    int flex = 0;
    int unknown_type = 0;
    std::fill(known_.begin(), known_.end(), 0);
    for (int u = 0; u < d.vnfis; ++u) {
      auto& st = state_[static_cast<std::size_t>(u)];
      st = {};
      for (int c = 0; c < d.clouds; ++c)
        if (at(r.u(u, c)) == 1) st.cloud = c;
      bool any_phi = true;
      std::int64_t best = kInfinity;
      for (int f = 0; f < d.flavors; ++f) {
        const auto v = at(r.phi(u, f));
        if (v == 1) st.flavor = f;
        if (v != 0) best = std::min(best, price_[static_cast<std::size_t>(f)]);
      }
      any_phi = best != kInfinity;
      st.deployed = st.cloud >= 0 || st.flavor >= 0;
      for (int t = 1; t <= d.types && st.type == 0; ++t)
        if (at(r.a(u, t)) == 1) st.type = t;
      for (int v = 0; v < d.vnfs && !(st.deployed && st.type != 0); ++v) {
        if (at(r.x(v, u)) != 1) continue;
        st.deployed = true;
        if (st.type == 0) st.type = s.vnf(static_cast<std::size_t>(v)).type;
      }
      if (!st.deployed) continue;
      if (st.type == 0 && model_.options.symmetry_breaking) st.type = model_.layout.vnfi_block_type[static_cast<std::size_t>(u)];
      if (st.flavor < 0) {
        if (!any_phi) return kInfinity;
        flex_min += best;
        ++flex;
      }
      if (st.type == 0) {
        ++unknown_type;
      } else {
        ++known_[static_cast<std::size_t>(st.type)];
      }
    }

    for (auto& h : homeless_) h.clear();
    for (int v = 0; v < d.vnfs; ++v) {
      const int t = s.vnf(static_cast<std::size_t>(v)).type;
      bool placed = false, home = false;
      for (int u = 0; u < d.vnfis && !placed; ++u) {
        const auto x = at(r.x(v, u));
        if (x == 1) placed = true;
        const auto& st = state_[static_cast<std::size_t>(u)];
        if (x == -1 && st.deployed && (st.type == t || st.type == 0)) home = true;
      }
      if (!placed && !home) homeless_[static_cast<std::size_t>(t)].push_back(v);
    }
    int extra = 0;
    for (int t = 1; t <= d.types; ++t) {
      const int need = model_.layout.min_vnfis_per_type[static_cast<std::size_t>(t)];
      const int e = std::max(need - known_[static_cast<std::size_t>(t)], clique(homeless_[static_cast<std::size_t>(t)]));
      extra += std::max(0, e);
    }
    extra = std::max(0, extra - unknown_type);

    const std::int64_t bound_a = obj_min + flex_min + extra * pmin_;
    if (bound_a >= cutoff) return bound_a;
    const int units = flex + extra;
    if (units == 0) return bound_a;

    // Residual capacity after VNFIs whose cloud and flavor are both fixed;
    // VNFIs with a known cloud but open flavor must still fit there.
    const std::size_t kinds = s.topology().resource_kinds().size();
    std::fill(required_.begin(), required_.end(), 0);
    for (int c = 0; c < d.clouds; ++c) resid_[static_cast<std::size_t>(c)] = s.topology().clouds()[static_cast<std::size_t>(c)].capacity;
    for (int u = 0; u < d.vnfis; ++u) {
      const auto& st = state_[static_cast<std::size_t>(u)];
      if (!st.deployed || st.cloud < 0) continue;
      if (st.flavor < 0) {
        ++required_[static_cast<std::size_t>(st.cloud)];
        continue;
      }
      auto& r = resid_[static_cast<std::size_t>(st.cloud)];
      for (std::size_t k = 0; k < kinds; ++k) r[k] -= s.flavors().flavors[static_cast<std::size_t>(st.flavor)].demand[k];
    }
    // Cheapest way to spread `units` VNFIs over the clouds, each cloud
    // holding at least its required ones.
    const auto total = static_cast<std::size_t>(units);
    std::fill(dp_.begin(), dp_.end(), kInfinity);
    dp_[0] = 0;
    std::size_t reach = 0;
    for (int c = 0; c < d.clouds; ++c) {
      for (std::size_t k = 0; k < kinds; ++k)
        if (resid_[static_cast<std::size_t>(c)][k] < 0) return kInfinity;
      const auto& g = cloud_table(c);
      const auto lo = static_cast<std::size_t>(required_[static_cast<std::size_t>(c)]);
      std::fill(next_.begin(), next_.end(), kInfinity);
      std::size_t new_reach = 0;
      for (std::size_t j = 0; j <= reach; ++j) {
        if (dp_[j] == kInfinity) continue;
        for (std::size_t k = lo; j + k <= total && k < g.size(); ++k) {
          if (g[k] == kInfinity) break;
          const auto v = dp_[j] + g[k];
          if (v < next_[j + k]) next_[j + k] = v;
          new_reach = std::max(new_reach, j + k);
        }
      }
      dp_.swap(next_);
      reach = new_reach;
    }
    if (dp_[total] == kInfinity) return kInfinity;
    return std::max(bound_a, obj_min + dp_[total]);
  }

 private:
  struct VnfiState {
    bool deployed = false;
    int cloud = -1;
    int flavor = -1;
    int type = 0;
  };

  PlacementBound(const IlpModel& model, std::vector<std::int64_t> price) : model_(model), price_(std::move(price)) {
    const auto& d = model.vars.dims();
    const Scenario& s = *model.scenario;
    const std::size_t kinds = s.topology().resource_kinds().size();
    state_.resize(static_cast<std::size_t>(d.vnfis));
    known_.resize(static_cast<std::size_t>(d.types) + 1);
    homeless_.resize(static_cast<std::size_t>(d.types) + 1);
    apart_.assign(static_cast<std::size_t>(d.vnfs), std::vector<char>(static_cast<std::size_t>(d.vnfs), 0));
    for (int a = 0; a < d.vnfs; ++a) {
      for (int b = 0; b < d.vnfs; ++b) {
        if (a == b) continue;
        const auto& va = s.vnf(static_cast<std::size_t>(a));
        const bool same_sfc = s.vnf_ref(static_cast<std::size_t>(a)).sfc == s.vnf_ref(static_cast<std::size_t>(b)).sfc;
        const bool conflict =
            std::binary_search(va.conflicts.begin(), va.conflicts.end(), s.vnf(static_cast<std::size_t>(b)).id);
        apart_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = same_sfc || conflict;
      }
    }
    max_units_ = d.vnfis;
    resid_.assign(static_cast<std::size_t>(d.clouds), ResourceVector(kinds, 0));
    required_.resize(static_cast<std::size_t>(d.clouds));
    dp_.resize(static_cast<std::size_t>(d.vnfis) + 1);
    next_.resize(static_cast<std::size_t>(d.vnfis) + 1);
    memo_.resize(static_cast<std::size_t>(d.clouds));
    for (int f = 0; f < d.flavors; ++f) order_.push_back(f);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return price_[static_cast<std::size_t>(a)] < price_[static_cast<std::size_t>(b)];
    });
    pmin_ = kInfinity;
    // Cheapest flavor that fits into at least one empty cloud.
    for (int f : order_) {
      const auto& demand = s.flavors().flavors[static_cast<std::size_t>(f)].demand;
      for (const auto& cloud : s.topology().clouds()) {
        bool fits = true;
        for (std::size_t k = 0; k < kinds; ++k) fits = fits && demand[k] <= cloud.capacity[k];
        if (fits) pmin_ = std::min(pmin_, price_[static_cast<std::size_t>(f)]);
      }
    }
    if (pmin_ == kInfinity) pmin_ = 0;
  }

  // Size of a greedy clique of mutually apart VNFs: each needs its own VNFI.
  int clique(const std::vector<int>& members) const {
    int best = 0;
    for (std::size_t start = 0; start < members.size(); ++start) {
      int size = 0;
      pick_.clear();
      for (std::size_t i = start; i < start + members.size(); ++i) {
        const int v = members[i % members.size()];
        bool ok = true;
        for (int w : pick_) ok = ok && apart_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        if (!ok) continue;
        pick_.push_back(v);
        ++size;
      }
      best = std::max(best, size);
      if (best == static_cast<int>(members.size())) break;
    }
    return best;
  }

  // table[k] = cheapest flavors for k VNFIs inside cloud c's residual
  // capacity (kInfinity when they do not fit). Memoized per residual.
  const std::vector<std::int64_t>& cloud_table(int c) const {
    auto& memo = memo_[static_cast<std::size_t>(c)];
    const auto& resid = resid_[static_cast<std::size_t>(c)];
    auto it = memo.find(resid);
    if (it != memo.end()) return it->second;
    std::vector<std::int64_t> table(static_cast<std::size_t>(max_units_) + 1, kInfinity);
    ResourceVector r = resid;
    fill_table(0, 0, 0, r, table);
    return memo.emplace(resid, std::move(table)).first->second;
  }

  void fill_table(std::size_t i, int count, std::int64_t cost, ResourceVector& r, std::vector<std::int64_t>& table) const {
    if (i == order_.size()) {
      auto& t = table[static_cast<std::size_t>(count)];
      t = std::min(t, cost);
      return;
    }
    const auto& flavor = model_.scenario->flavors().flavors[static_cast<std::size_t>(order_[i])];
    const std::int64_t p = price_[static_cast<std::size_t>(order_[i])];
    int n = 0;
    while (true) {
      fill_table(i + 1, count + n, cost + n * p, r, table);
      if (count + n == max_units_) break;
      bool fits = true;
      for (std::size_t k = 0; k < r.size(); ++k) fits = fits && flavor.demand[k] <= r[k];
      if (!fits) break;
      for (std::size_t k = 0; k < r.size(); ++k) r[k] -= flavor.demand[k];
      ++n;
    }
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += n * flavor.demand[k];
  }

  const IlpModel& model_;
  std::vector<std::int64_t> price_;
  std::vector<int> order_;
  std::int64_t pmin_ = 0;

  mutable std::vector<VnfiState> state_;
  mutable std::vector<int> known_;
  // VNFs that can never share a VNFI.
  std::vector<std::vector<char>> apart_;
  // Per type, unplaced VNFs with no open VNFI left to join.
  mutable std::vector<std::vector<int>> homeless_;
  int max_units_ = 0;
  mutable std::vector<int> pick_;
  mutable std::vector<ResourceVector> resid_;
  mutable std::vector<int> required_;
  mutable std::vector<std::int64_t> dp_;
  mutable std::vector<std::int64_t> next_;
  mutable std::vector<std::map<ResourceVector, std::vector<std::int64_t>>> memo_;
};

Engine::Engine(const BooleanSystem& system, const IlpModel& model, bool placement_bound)
    : sys_(system),
      value_(system.var_count(), -1),
      min_act_(system.row_count(), 0),
      queued_(system.row_count(), 0),
      conflict_tag_(&kNoTag) {
  if (placement_bound) placement_ = PlacementBound::create(system, model);
}

Engine::~Engine() = default;

bool Engine::initialize() {
  for (std::size_t row = 0; row < sys_.row_count(); ++row) {
    std::int64_t act = 0;
    for (std::size_t k = sys_.row_begin(row); k < sys_.row_end(row); ++k) {
      const auto v = value_[static_cast<std::size_t>(sys_.term_var(k))];
      const auto a = sys_.term_coef(k);
      act += v == -1 ? std::min<std::int64_t>(a, 0) : a * v;
    }
    min_act_[row] = act;
  }
  obj_min_ = sys_.objective_constant();
  for (std::size_t i = 0; i < sys_.var_count(); ++i) {
    const auto c = sys_.objective_coef(static_cast<int>(i));
    obj_min_ += value_[i] == -1 ? std::min<std::int64_t>(c, 0) : c * value_[i];
  }
  if (sys_.trivially_infeasible()) {
    conflict_tag_ = &sys_.infeasible_tag();
    return false;
  }
  for (std::size_t row = 0; row < sys_.row_count(); ++row) enqueue(static_cast<int>(row));
  return run_queue();
}

bool Engine::fix(int var, std::int8_t value) {
  auto& cur = value_[static_cast<std::size_t>(var)];
  if (cur != -1) {
    if (cur != value) conflict_tag_ = &kForcedTag;
    return cur == value;
  }
  cur = value;
  trail_.push_back(var);
  obj_min_ += delta(sys_.objective_coef(var), value);
  bool ok = true;
  for (std::size_t k = sys_.occ_begin(var); k < sys_.occ_end(var); ++k) {
    const auto dlt = delta(sys_.occ_coef(k), value);
    if (dlt == 0) continue;
    const int row = sys_.occ_row(k);
    min_act_[static_cast<std::size_t>(row)] += dlt;
    if (min_act_[static_cast<std::size_t>(row)] > sys_.rhs(static_cast<std::size_t>(row))) {
      if (ok) conflict_tag_ = &sys_.tag(static_cast<std::size_t>(row));
      ok = false;
    } else {
      enqueue(row);
    }
  }
  return ok;
}

void Engine::enqueue(int row) {
  auto& q = queued_[static_cast<std::size_t>(row)];
  if (q) return;
  q = 1;
  queue_.push_back(row);
}

void Engine::clear_queue() {
  for (int row : queue_) queued_[static_cast<std::size_t>(row)] = 0;
  queue_.clear();
}

bool Engine::run_queue() {
  while (!queue_.empty()) {
    const int row = queue_.back();
    queue_.pop_back();
    queued_[static_cast<std::size_t>(row)] = 0;
    const auto r = static_cast<std::size_t>(row);
    const std::int64_t slack = sys_.rhs(r) - min_act_[r];
    if (slack < 0) {
      conflict_tag_ = &sys_.tag(r);
      clear_queue();
      return false;
    }
    for (std::size_t k = sys_.row_begin(r); k < sys_.row_end(r); ++k) {
      const auto a = sys_.term_coef(k);
      if ((a < 0 ? -a : a) <= slack) break;
      const int var = sys_.term_var(k);
      if (value_[static_cast<std::size_t>(var)] != -1) continue;
      ++propagations_;
      if (!fix(var, a > 0 ? 0 : 1)) {
        clear_queue();
        return false;
      }
    }
  }
  return true;
}

bool Engine::assign(int var, std::int8_t value) {
  if (!fix(var, value)) {
    clear_queue();
    return false;
  }
  return run_queue();
}

void Engine::backtrack(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    const int var = trail_.back();
    trail_.pop_back();
    auto& cur = value_[static_cast<std::size_t>(var)];
    const auto value = cur;
    obj_min_ -= delta(sys_.objective_coef(var), value);
    for (std::size_t k = sys_.occ_begin(var); k < sys_.occ_end(var); ++k)
      min_act_[static_cast<std::size_t>(sys_.occ_row(k))] -= delta(sys_.occ_coef(k), value);
    cur = -1;
  }
}

std::int64_t Engine::bound(std::int64_t cutoff) const {
  if (!placement_ || obj_min_ >= cutoff) return obj_min_;
  return std::max(obj_min_, placement_->compute(value_, obj_min_, cutoff));
}

Brancher::Brancher(const IlpModel& model, const BooleanSystem& system)
    : vars_(model.vars), vnfs_(model.vars.dims().vnfs) {
  const auto& d = vars_.dims();
  // Zero-first search over mutually exclusive flavors ends on the last one
  // listed, so the cheapest flavor goes last.
  for (int f = 0; f < d.flavors; ++f) flavor_order_.push_back(f);
  if (d.vnfis > 0)
    std::stable_sort(flavor_order_.begin(), flavor_order_.end(), [&](int a, int b) {
      return system.objective_coef(vars_.phi(0, a)) > system.objective_coef(vars_.phi(0, b));
    });
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto kind = vars_.info(static_cast<int>(i)).kind;
    if (kind != VarKind::X && kind != VarKind::U && kind != VarKind::Phi && !system.is_continuous(static_cast<int>(i)))
      rest_.push_back(static_cast<int>(i));
  }
  // U and Phi of VNFIs that no VNF ends up using are left to propagation;
  // list them too so that every boolean is eventually fixed.
  for (int u = 0; u < d.vnfis; ++u) {
    for (int c = 0; c < d.clouds; ++c) rest_.push_back(vars_.u(u, c));
    for (int f : flavor_order_) rest_.push_back(vars_.phi(u, f));
  }
}

int Brancher::next(const Engine& engine, std::size_t& cursor) const {
  const auto& d = vars_.dims();
  const auto stages = static_cast<std::size_t>(2 * vnfs_);
  while (cursor < stages) {
    const int v = static_cast<int>(cursor / 2);
    if (cursor % 2 == 0) {
      for (int u = 0; u < d.vnfis; ++u)
        if (engine.value(vars_.x(v, u)) == -1) return vars_.x(v, u);
    } else {
      int home = -1;
      for (int u = 0; u < d.vnfis && home < 0; ++u)
        if (engine.value(vars_.x(v, u)) == 1) home = u;
      if (home >= 0) {
        for (int c = 0; c < d.clouds; ++c)
          if (engine.value(vars_.u(home, c)) == -1) return vars_.u(home, c);
        for (int f : flavor_order_)
          if (engine.value(vars_.phi(home, f)) == -1) return vars_.phi(home, f);
      }
    }
    ++cursor;
  }
  while (cursor - stages < rest_.size()) {
    const int var = rest_[cursor - stages];
    if (engine.value(var) == -1) return var;
    ++cursor;
  }
  return -1;
}

}  // namespace sfcplace::detail
