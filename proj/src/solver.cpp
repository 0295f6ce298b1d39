#include "sfcplace/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "bnb_engine.hpp"
#include "sfcplace/assignment.hpp"
#include "sfcplace/lp_format.hpp"

namespace sfcplace {
namespace {

using detail::BooleanSystem;
using detail::Engine;
using detail::kInfinity;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t scaled_objective(const BooleanSystem& sys, const std::vector<std::int8_t>& values) {
  std::int64_t total = sys.objective_constant();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == 1) total += sys.objective_coef(static_cast<int>(i));
  return total;
}

std::vector<std::int8_t> to_booleans(const IlpModel& model, const std::vector<Rational>& assignment) {
  std::vector<std::int8_t> out(model.vars.size(), -1);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!model.vars.info(static_cast<int>(i)).continuous) out[i] = assignment[i] == Rational(1) ? 1 : 0;
  return out;
}

std::vector<Rational> to_assignment(const std::vector<std::int8_t>& values) {
  std::vector<Rational> out(values.size(), Rational(0));
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == 1) out[i] = Rational(1);
  return out;
}

// Sets every continuous variable from its defining equality.
void fill_continuous(const IlpModel& model, std::vector<Rational>& a) {
  for (const auto& row : model.constraints) {
    if (row.sense != Sense::Equal) continue;
    int cont = -1, count = 0;
    for (const auto& t : row.terms)
      if (model.vars.info(t.var).continuous && !t.coeff.is_zero()) {
        cont = t.var;
        ++count;
      }
    if (count != 1) continue;
    Rational k(0), rest(0);
    for (const auto& t : row.terms) {
      if (t.var == cont) {
        k += t.coeff;
      } else {
        rest += t.coeff * a[static_cast<std::size_t>(t.var)];
      }
    }
    a[static_cast<std::size_t>(cont)] = (row.rhs - rest) / k;
  }
}

struct Incumbent {
  std::vector<std::int8_t> values;
  std::int64_t scaled = kInfinity;
};

struct SearchResult {
  SolveStatus status = SolveStatus::Infeasible;
  Incumbent best;
  std::int64_t lower = kInfinity;
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
  std::uint64_t incumbents = 0;
  std::map<std::string, std::uint64_t> conflicts;
};

// Depth-first branch and bound: first unfixed variable in branching order,
// 0-branch first, prune when the bound reaches the incumbent.
SearchResult search(const IlpModel& model, const BooleanSystem& sys, bool placement_bound, Incumbent start,
                    const Budget& budget, Clock::time_point t0) {
  SearchResult out;
  out.best = std::move(start);
  Engine engine(sys, model, placement_bound);
  if (!engine.initialize()) {
    ++out.conflicts[engine.conflict_tag()];
    out.nodes = 1;
    out.status = SolveStatus::Infeasible;
    out.best = {};
    return out;
  }
  const detail::Brancher brancher(model, sys);

  struct Frame {
    int var;
    std::size_t cursor;
    std::size_t trail;
    int next;
    std::int64_t lb;
  };
  std::vector<Frame> stack;
  std::int64_t& ub = out.best.scaled;
  const std::int64_t root_lb = engine.bound();
  bool timed_out = false;

  auto out_of_budget = [&] {
    if (out.nodes >= budget.max_nodes) return true;
    if ((out.nodes & 255U) == 0 && elapsed_ms(t0) >= budget.max_wall_ms) return true;
    return false;
  };

  while (true) {
    // Evaluate the current node.
    ++out.nodes;
    if (out_of_budget()) {
      timed_out = true;
      break;
    }
    const std::int64_t lb = engine.bound(ub);
    if (lb < ub) {
      std::size_t cursor = stack.empty() ? 0 : stack.back().cursor;
      const int var = brancher.next(engine, cursor);
      if (var < 0) {
        ub = engine.objective_floor();
        out.best.values = engine.values();
        ++out.incumbents;
      } else {
        stack.push_back({var, cursor, engine.trail_size(), 0, lb});
      }
    }
    // Move to the next open child.
    bool entered = false;
    while (!stack.empty() && !entered) {
      Frame& f = stack.back();
      if (f.lb >= ub) {
        engine.backtrack(f.trail);
        stack.pop_back();
        continue;
      }
      while (f.next < 2 && !entered) {
        const std::int8_t value = f.next == 0 ? 0 : 1;
        ++f.next;
        engine.backtrack(f.trail);
        if (engine.assign(f.var, value)) {
          entered = true;
        } else {
          ++out.conflicts[engine.conflict_tag()];
          ++out.nodes;
        }
      }
      if (!entered) {
        engine.backtrack(f.trail);
        stack.pop_back();
      }
    }
    if (!entered) break;
  }

  out.propagations = engine.propagations();
  if (timed_out) {
    out.status = SolveStatus::TimedOut;
    std::int64_t lower = stack.empty() ? root_lb : ub;
    for (const auto& f : stack) lower = std::min(lower, f.lb);
    out.lower = std::min(lower, ub);
  } else if (ub != kInfinity) {
    out.status = SolveStatus::Optimal;
    out.lower = ub;
  } else {
    out.status = SolveStatus::Infeasible;
  }
  return out;
}

std::vector<Rational> verified(const IlpModel& model, const std::vector<std::int8_t>& values) {
  auto a = to_assignment(values);
  const auto bad = check_assignment(model, a);
  if (!bad.empty()) {
    std::string what = "internal error: solver assignment violates";
    for (const auto& t : bad) what += " " + t;
    throw IntegrityError(what);
  }
  return a;
}

void merge_stats(SolveStats& stats, const SearchResult& r) {
  stats.nodes_explored += r.nodes;
  stats.propagations += r.propagations;
  stats.incumbents += r.incumbents;
  for (const auto& [tag, n] : r.conflicts) stats.conflicts_by_tag[tag] += n;
}

}  // namespace

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::TimedOut: return "TimedOut";
  }
  return "?";
}

std::vector<std::string> check_assignment(const IlpModel& model, std::vector<Rational>& assignment) {
  if (assignment.size() != model.vars.size()) throw std::invalid_argument("assignment size does not match model");
  std::set<std::string> bad;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (model.vars.info(static_cast<int>(i)).continuous) continue;
    if (assignment[i] != Rational(0) && assignment[i] != Rational(1)) bad.insert("binary");
  }
  fill_continuous(model, assignment);
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (model.vars.info(static_cast<int>(i)).continuous && assignment[i].sign() < 0) bad.insert("bounds");
  for (const auto& row : model.constraints)
    if (!satisfied(row, assignment)) bad.insert(row.tag);
  return {bad.begin(), bad.end()};
}

std::optional<Placement> greedy_placement(const Scenario& input, bool share) {
  const Scenario s = input.normalized() ? input : normalize_types(input);
  const auto& topo = s.topology();
  const auto& flavors = s.flavors().flavors;
  const std::size_t kinds = topo.resource_kinds().size();
  const int clouds = static_cast<int>(topo.cloud_count());
  if (clouds == 0 || flavors.empty()) return std::nullopt;

  std::vector<ResourceVector> resid;
  for (const auto& c : topo.clouds()) resid.push_back(c.capacity);
  std::vector<std::size_t> by_price(flavors.size());
  for (std::size_t f = 0; f < flavors.size(); ++f) by_price[f] = f;
  std::stable_sort(by_price.begin(), by_price.end(),
                   [&](std::size_t a, std::size_t b) { return flavors[a].price < flavors[b].price; });

  struct Vnfi {
    int type;
    int cloud;
    std::size_t flavor;
    std::vector<int> members;
    std::set<int> sfcs;
  };
  std::vector<Vnfi> pool;
  std::vector<int> home(s.vnf_count(), -1);
  std::vector<Rational> delay(s.sfcs().size(), Rational(0));

  auto hop_ok = [&](int sfc, int from, int to) {
    if (from == to) return true;
    const auto& link = topo.cloud_link(from, to);
    const auto& req = s.sfcs()[static_cast<std::size_t>(sfc)];
    if (link.unreachable || link.security_level < req.min_security) return false;
    return delay[static_cast<std::size_t>(sfc)] + link.delay_ms <= req.max_delay_ms;
  };
  auto fits = [&](int c, std::size_t f) {
    for (std::size_t k = 0; k < kinds; ++k)
      if (flavors[f].demand[k] > resid[static_cast<std::size_t>(c)][k]) return false;
    return true;
  };

  for (std::size_t v = 0; v < s.vnf_count(); ++v) {
    const auto& spec = s.vnf(v);
    const auto ref = s.vnf_ref(v);
    const int prev = ref.pos > 0 ? pool[static_cast<std::size_t>(home[v - 1])].cloud : -1;
    auto compatible = [&](const Vnfi& g) {
      if (g.type != spec.type || g.sfcs.count(ref.sfc) != 0) return false;
      for (int m : g.members)
        if (std::binary_search(spec.conflicts.begin(), spec.conflicts.end(), s.vnf(static_cast<std::size_t>(m)).id))
          return false;
      return prev < 0 || hop_ok(ref.sfc, prev, g.cloud);
    };
    int chosen = -1;
    if (share)
      for (std::size_t g = 0; g < pool.size() && chosen < 0; ++g)
        if (compatible(pool[g])) chosen = static_cast<int>(g);
    if (chosen < 0) {
      // Previous hop's cloud first, then by hop delay from it.
      std::vector<int> order;
      for (int c = 0; c < clouds; ++c) order.push_back(c);
      if (prev >= 0)
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
          return topo.cloud_link(prev, a).delay_ms < topo.cloud_link(prev, b).delay_ms;
        });
      for (std::size_t f : by_price) {
        for (int c : order) {
          if (!fits(c, f) || (prev >= 0 && !hop_ok(ref.sfc, prev, c))) continue;
          pool.push_back({spec.type, c, f, {}, {}});
          for (std::size_t k = 0; k < kinds; ++k) resid[static_cast<std::size_t>(c)][k] -= flavors[f].demand[k];
          chosen = static_cast<int>(pool.size()) - 1;
          break;
        }
        if (chosen >= 0) break;
      }
    }
    if (chosen < 0) return std::nullopt;
    Vnfi& g = pool[static_cast<std::size_t>(chosen)];
    if (prev >= 0) delay[static_cast<std::size_t>(ref.sfc)] += topo.cloud_link(prev, g.cloud).delay_ms;
    g.members.push_back(static_cast<int>(v));
    g.sfcs.insert(ref.sfc);
    home[v] = chosen;
  }

  Placement p;
  for (std::size_t v = 0; v < s.vnf_count(); ++v) {
    const Vnfi& g = pool[static_cast<std::size_t>(home[v])];
    p.vnfs.push_back({s.vnf(v).id, "g" + std::to_string(home[v]), topo.clouds()[static_cast<std::size_t>(g.cloud)].id,
                      flavors[g.flavor].id, g.type});
  }
  for (const auto& g : pool) p.total_cost += flavors[g.flavor].price;
  p.sfcs = summarize_sfcs(s, p);
  return p;
}

SolveResult solve_bnb(const IlpModel& model, const Budget& budget, const BnbOptions& options) {
  const auto t0 = Clock::now();
  check_integrity(model);
  SolveResult result;

  const BooleanSystem sys(model, model.objective);
  Incumbent start;
  if (options.greedy_incumbent && model.scenario) {
    for (bool share : {true, false}) {
      auto p = greedy_placement(*model.scenario, share);
      if (!p) continue;
      std::vector<Rational> a;
      try {
        a = encode_placement(model, *p);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!check_assignment(model, a).empty()) continue;
      auto values = to_booleans(model, a);
      const auto scaled = scaled_objective(sys, values);
      if (scaled < start.scaled) start = {std::move(values), scaled};
    }
  }

  auto phase1 = search(model, sys, options.placement_bound, std::move(start), budget, t0);
  merge_stats(result.stats, phase1);
  result.status = phase1.status;
  if (phase1.best.scaled != kInfinity) {
    result.assignment = verified(model, phase1.best.values);
    result.objective = evaluate(model.objective, result.assignment);
  }
  if (phase1.status != SolveStatus::Infeasible) result.lower_bound = sys.objective_value(phase1.lower);

  if (options.delay_tiebreak && phase1.status == SolveStatus::Optimal && !model.delay_objective.empty()) {
    std::vector<LinearConstraint> cut{{model.objective, Sense::LessEqual, *result.objective, "objective-cut"}};
    const BooleanSystem sys2(model, model.delay_objective, cut);
    Incumbent seed{phase1.best.values, scaled_objective(sys2, phase1.best.values)};
    Budget b2 = options.tiebreak_budget;
    b2.max_wall_ms = std::min(b2.max_wall_ms, budget.max_wall_ms - elapsed_ms(t0));
    const auto t1 = Clock::now();
    auto phase2 = search(model, sys2, false, seed, b2, t1);
    merge_stats(result.stats, phase2);
    if (phase2.best.scaled < seed.scaled) {
      auto a = verified(model, phase2.best.values);
      if (evaluate(model.objective, a) == *result.objective) result.assignment = std::move(a);
    }
  }
  result.stats.wall_ms = elapsed_ms(t0);
  return result;
}

PropagationOutcome propagate(const IlpModel& model, const PartialAssignment& partial) {
  const BooleanSystem sys(model, model.objective);
  Engine engine(sys, model, false);
  PropagationOutcome out;
  bool ok = engine.initialize();
  for (std::size_t i = 0; ok && i < partial.size() && i < sys.var_count(); ++i)
    if (partial[i] != -1 && !sys.is_continuous(static_cast<int>(i))) ok = engine.assign(static_cast<int>(i), partial[i]);
  out.conflict = !ok;
  if (!ok) out.conflict_tag = engine.conflict_tag();
  out.values = engine.values();
  return out;
}

std::optional<Rational> lower_bound(const IlpModel& model, const PartialAssignment& partial) {
  const BooleanSystem sys(model, model.objective);
  Engine engine(sys, model, true);
  bool ok = engine.initialize();
  for (std::size_t i = 0; ok && i < partial.size() && i < sys.var_count(); ++i)
    if (partial[i] != -1 && !sys.is_continuous(static_cast<int>(i))) ok = engine.assign(static_cast<int>(i), partial[i]);
  if (!ok) return std::nullopt;
  const auto b = engine.bound();
  if (b == kInfinity) return std::nullopt;
  return sys.objective_value(b);
}

SolveResult ExternalBackend::solve(const IlpModel& model, const Budget& budget) {
  static std::atomic<unsigned> counter{0};
  const auto t0 = Clock::now();
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("sfcplace-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::create_directories(dir);
  const fs::path lp = dir / "model.lp";
  const fs::path sol = dir / "solution.txt";
  {
    std::ofstream os(lp);
    write_lp(os, model);
  }
  std::string cmd = command_ + " '" + lp.string() + "' '" + sol.string() + "'";
  if (budget.max_wall_ms < std::numeric_limits<double>::infinity())
    cmd = "SFC_PLACER_TIME_LIMIT_MS=" + std::to_string(static_cast<long long>(budget.max_wall_ms)) + " " + cmd;
  const int rc = std::system(cmd.c_str());
  std::string text;
  if (rc == 0 && fs::exists(sol)) {
    std::ifstream in(sol);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  fs::remove_all(dir);
  if (rc != 0) throw std::runtime_error("external solver failed (exit status " + std::to_string(rc) + "): " + command_);

  const auto parsed = parse_solution_file(text);
  SolveResult result;
  result.stats.wall_ms = elapsed_ms(t0);
  if (!parsed.has_solution) {
    result.status = SolveStatus::Infeasible;
    return result;
  }
  std::vector<Rational> a(model.vars.size(), Rational(0));
  for (const auto& [name, value] : parsed.values) {
    const int var = model.vars.find(name);
    if (var < 0) throw std::runtime_error("external solver reported unknown variable '" + name + "'");
    if (model.vars.info(var).continuous) continue;
    const double x = value.to_double();
    if (std::abs(x - 1.0) < 1e-6) {
      a[static_cast<std::size_t>(var)] = Rational(1);
    } else if (std::abs(x) >= 1e-6) {
      throw std::runtime_error("external solver reported non-binary value for " + name);
    }
  }
  const auto bad = check_assignment(model, a);
  if (!bad.empty()) throw std::runtime_error("external solution violates " + bad.front());
  result.status = SolveStatus::Optimal;
  result.objective = evaluate(model.objective, a);
  result.lower_bound = result.objective;
  result.assignment = std::move(a);
  return result;
}

std::unique_ptr<SolverBackend> make_backend(const std::string& spec, const BnbOptions& options) {
  if (spec == "bnb") return std::make_unique<BnbBackend>(options);
  const std::string prefix = "external:";
  if (spec.rfind(prefix, 0) == 0 && spec.size() > prefix.size())
    return std::make_unique<ExternalBackend>(spec.substr(prefix.size()));
  throw std::invalid_argument("unknown backend '" + spec + "' (expected bnb or external:<cmd>)");
}

}  // namespace sfcplace
