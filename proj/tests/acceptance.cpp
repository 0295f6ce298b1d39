// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Usage: acceptance <path-to-sfc-placer> <work-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sfcplace/assignment.hpp"
#include "sfcplace/ilp.hpp"
#include "sfcplace/oracle.hpp"
#include "sfcplace/scenario_io.hpp"
#include "sfcplace/scenarios.hpp"
#include "sfcplace/solver.hpp"
#include "sfcplace/stats.hpp"

namespace fs = std::filesystem;
using namespace sfcplace;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Solved {
  std::shared_ptr<const Scenario> scenario;
  Placement placement;
  std::string where;
};

// Solutions collected by criteria 1-4 for the hard-guarantee audit.
std::vector<Solved> g_solved;

int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!pass) ++g_failures;
}

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void criterion_oracle_equivalence() {
  const auto t0 = Clock::now();
  int compared = 0, mismatches = 0, feasible = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const Scenario s = generate(fixtures::tiny_config(seed));
    const IlpModel m = build_model(s);
    const SolveResult r = solve_bnb(m);
    const BruteForceResult b = brute_force(s);
    ++compared;
    const bool same_status = (r.status == SolveStatus::Optimal) == b.feasible && r.status != SolveStatus::TimedOut;
    const bool same_value = !b.feasible || (r.objective && *r.objective == *b.objective);
    if (!same_status || !same_value) {
      ++mismatches;
      if (first.empty()) first = " (first at seed " + std::to_string(seed) + ")";
    }
    if (b.feasible) {
      ++feasible;
      g_solved.push_back({m.scenario, *b.placement, "tiny/bf/" + std::to_string(seed)});
    }
    if (r.has_solution()) g_solved.push_back({m.scenario, decode_placement(m, r.assignment), "tiny/bnb/" + std::to_string(seed)});
  }
  const double secs = seconds_since(t0);
  report(1, compared >= 200 && mismatches == 0 && secs < 300,
         std::to_string(compared) + " tiny instances (" + std::to_string(feasible) + " feasible), " +
             std::to_string(mismatches) + " mismatches" + first + ", " + fixed(secs, 1) + " s");
}

void criterion_validator_soundness() {
  const auto t0 = Clock::now();
  int instances = 0, optimal = 0, dirty = 0, mutations = 0, silent = 0, timeouts = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    GenConfig g;
    g.seed = 1000 + seed;
    g.n_clouds = 2 + static_cast<int>(seed % 7);
    g.n_sfcs = 1 + static_cast<int>(seed % 4);
    const IlpModel m = build_model(generate(g));
    const SolveResult r = solve_bnb(m, {2'000'000, std::numeric_limits<double>::infinity()});
    ++instances;
    if (r.status == SolveStatus::TimedOut) ++timeouts;
    if (r.status != SolveStatus::Optimal) continue;
    ++optimal;
    const Placement p = decode_placement(m, r.assignment);
    if (!validate_solution(*m.scenario, p).empty()) ++dirty;
    for (const auto& mut : single_mutations(*m.scenario, p)) {
      ++mutations;
      if (validate_solution(*m.scenario, mut.placement).empty()) ++silent;
    }
  }
  const double secs = seconds_since(t0);
  report(2, instances >= 500 && dirty == 0 && silent == 0 && mutations > 0 && secs < 600,
         std::to_string(instances) + " instances, " + std::to_string(optimal) + " optimal (" +
             std::to_string(timeouts) + " timed out), " + std::to_string(dirty) + " with violations; " +
             std::to_string(mutations) + " mutations, " + std::to_string(silent) + " undetected, " + fixed(secs, 1) +
             " s");
}

struct Trend {
  std::optional<double> cost;
  std::optional<double> delay;
};

Trend trend(const SweepResult& r) {
  std::vector<double> x, c, d;
  for (const auto& p : r.points) {
    if (p.cost.n == 0) continue;
    x.push_back(p.axis_value);
    c.push_back(p.cost.mean);
    d.push_back(p.delay.mean);
  }
  return {spearman(x, c), spearman(x, d)};
}

void collect(const SweepResult& r, const std::string& label) {
  for (int pi = 0; pi < static_cast<int>(r.config.points.size()); ++pi)
    for (int rep = 0; rep < r.config.repetitions; ++rep) {
      const auto& row = r.rows[static_cast<std::size_t>(pi * r.config.repetitions + rep)];
      if (!row.placement) continue;
      auto s = std::make_shared<const Scenario>(generate(instance_config(r.config, pi, rep)));
      g_solved.push_back({s, *row.placement, label + "/" + std::to_string(row.axis_value) + "/" + std::to_string(rep)});
    }
}

std::string rho(std::optional<double> v) { return v ? fixed(*v) : "undefined (constant)"; }

int timed_out(const SweepResult& r) {
  int n = 0;
  for (const auto& p : r.points) n += p.timed_out;
  return n;
}

void criterion_edges_trend() {
  const auto t0 = Clock::now();
  SweepConfig c;
  c.axis = Axis::Edges;
  c.points = {4, 6, 8, 10, 12};
  c.repetitions = 10;
  c.base.n_sfcs = 4;
  const SweepResult plain = run_sweep(c);
  collect(plain, "edges");
  const Trend t = trend(plain);

  c.nested = true;
  const SweepResult nested = run_sweep(c);
  collect(nested, "edges-nested");
  int increases = 0, unresolved = 0;
  for (int rep = 0; rep < c.repetitions; ++rep) {
    std::optional<Rational> prev;
    for (std::size_t pi = 0; pi < c.points.size(); ++pi) {
      const auto& row = nested.rows[pi * static_cast<std::size_t>(c.repetitions) + static_cast<std::size_t>(rep)];
      if (row.status == SolveStatus::TimedOut) ++unresolved;
      if (row.status != SolveStatus::Optimal) continue;
      if (prev && *row.cost > *prev) ++increases;
      prev = row.cost;
    }
  }
  const double secs = seconds_since(t0);
  // A constant series has no rank correlation; it is neither increasing nor decreasing.
  const bool pass = t.cost.value_or(0.0) <= 0.0 && t.delay.value_or(0.0) <= 0.0 && increases == 0 &&
                    unresolved == 0 && timed_out(plain) == 0 && secs < 1800;
  report(3, pass,
         "rho(cost) " + rho(t.cost) + ", rho(delay) " + rho(t.delay) + ", nested: " + std::to_string(increases) +
             " increases, " + std::to_string(unresolved + timed_out(plain)) + " timeouts, " + fixed(secs, 1) + " s");
}

void criterion_sfcs_trend() {
  const auto t0 = Clock::now();
  SweepConfig c;
  c.axis = Axis::Sfcs;
  c.points = {1, 2, 3, 4};
  c.repetitions = 10;
  c.base.n_clouds = 10;
  const SweepResult r = run_sweep(c);
  collect(r, "sfcs");
  const Trend t = trend(r);
  const double secs = seconds_since(t0);
  report(4, t.cost.value_or(0.0) >= 0.0 && t.delay.value_or(0.0) >= 0.0 && timed_out(r) == 0 && secs < 1800,
         "rho(cost) " + rho(t.cost) + ", rho(delay) " + rho(t.delay) + ", " + std::to_string(timed_out(r)) +
             " timeouts, " + fixed(secs, 1) + " s");
}

void criterion_tag_coverage() {
  const IlpModel full = build_model(fixtures::load(fixtures::kFeatureComplete));
  std::vector<std::string> missing;
  for (const auto& tag : base_tags())
    if (full.count_tag(tag) == 0) missing.push_back(tag);
  auto doc = ordered_json::parse(fixtures::kFeatureComplete);
  for (auto& sfc : doc["sfcs"])
    for (auto& v : sfc["vnfs"]) v.erase("conflicts");
  const IlpModel plain = build_model(normalize_types(load_bundle(doc.dump())));
  const std::size_t stray = plain.count_tag("conflict");
  std::string detail = std::to_string(base_tags().size() - missing.size()) + "/" + std::to_string(base_tags().size()) +
                       " tags emitted";
  for (const auto& t : missing) detail += " missing:" + t;
  detail += ", " + std::to_string(stray) + " conflict rows without conflicts";
  report(5, missing.empty() && stray == 0, detail);
}

// Exhaustive check of the product linearizations over every 0/1 point that
// satisfies all rows. Continuous hop delays are set from their defining
// rows before checking.
struct ProductCheck {
  std::uint64_t points = 0;
  std::uint64_t feasible = 0;
  std::uint64_t yvuc = 0, cucf = 0, ypair = 0;  // product checks made
  std::uint64_t ones = 0;                      // products checked at value 1
  std::uint64_t broken = 0;
};

void fill_hops(const IlpModel& m, std::vector<Rational>& v) {
  for (const auto& row : m.constraints) {
    if (row.tag != "hopdef") continue;
    int hop = -1;
    Rational rest(0), coeff(0);
    for (const auto& t : row.terms) {
      if (m.vars.info(t.var).continuous) {
        hop = t.var;
        coeff = t.coeff;
      } else {
        rest += t.coeff * v[static_cast<std::size_t>(t.var)];
      }
    }
    if (hop >= 0) v[static_cast<std::size_t>(hop)] = (row.rhs - rest) / coeff;
  }
}

void check_products(const IlpModel& m, const std::vector<Rational>& v, ProductCheck& out) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  auto val = [&](int var) { return v[static_cast<std::size_t>(var)]; };
  auto check = [&](const Rational& lhs, const Rational& rhs, std::uint64_t& counter) {
    ++counter;
    if (lhs == Rational(1)) ++out.ones;
    if (lhs != rhs) ++out.broken;
  };
  for (int vv = 0; vv < d.vnfs; ++vv)
    for (int u = 0; u < d.vnfis; ++u)
      for (int c = 0; c < d.clouds; ++c) check(val(r.yvuc(vv, u, c)), val(r.x(vv, u)) * val(r.u(u, c)), out.yvuc);
  for (int u = 0; u < d.vnfis; ++u)
    for (int c = 0; c < d.clouds; ++c)
      for (int f = 0; f < d.flavors; ++f) check(val(r.cucf(u, c, f)), val(r.u(u, c)) * val(r.phi(u, f)), out.cucf);
  for (std::size_t k = 0; k < d.pairs.size(); ++k)
    for (int c1 = 0; c1 < d.clouds; ++c1)
      for (int c2 = 0; c2 < d.clouds; ++c2)
        if (c1 != c2)
          check(val(r.ypair(static_cast<int>(k), c1, c2)),
                val(r.yc(d.pairs[k].first, c1)) * val(r.yc(d.pairs[k].second, c2)), out.ypair);
}

bool all_rows_hold(const IlpModel& m, std::vector<Rational>& v) {
  fill_hops(m, v);
  for (const auto& row : m.constraints)
    if (!satisfied(row, v)) return false;
  return true;
}

std::vector<int> boolean_vars(const IlpModel& m) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(m.vars.size()); ++i)
    if (!m.vars.info(i).continuous) out.push_back(i);
  return out;
}

// Every one of the 2^n points.
void enumerate_all(const IlpModel& m, ProductCheck& out) {
  const auto vars = boolean_vars(m);
  std::vector<Rational> v(m.vars.size(), Rational(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
    for (std::size_t i = 0; i < vars.size(); ++i) v[static_cast<std::size_t>(vars[i])] = Rational((mask >> i) & 1);
    ++out.points;
    if (!all_rows_hold(m, v)) continue;
    ++out.feasible;
    check_products(m, v, out);
  }
}

// Every feasible point, by depth-first search that drops a branch once a row
// over booleans alone can no longer be satisfied.
void enumerate_feasible(const IlpModel& m, ProductCheck& out) {
  const auto vars = boolean_vars(m);
  std::vector<const LinearConstraint*> rows;
  for (const auto& row : m.constraints) {
    bool pure = true;
    for (const auto& t : row.terms) pure = pure && !m.vars.info(t.var).continuous;
    if (pure) rows.push_back(&row);
  }
  std::vector<int> assigned(m.vars.size(), -1);
  std::vector<Rational> v(m.vars.size(), Rational(0));
  auto viable = [&](const LinearConstraint& row) {
    Rational lo(0), hi(0);
    for (const auto& t : row.terms) {
      const int a = assigned[static_cast<std::size_t>(t.var)];
      if (a >= 0) {
        lo += t.coeff * Rational(a);
        hi += t.coeff * Rational(a);
      } else if (t.coeff.sign() > 0) {
        hi += t.coeff;
      } else {
        lo += t.coeff;
      }
    }
    switch (row.sense) {
      case Sense::LessEqual: return lo <= row.rhs;
      case Sense::GreaterEqual: return hi >= row.rhs;
      case Sense::Equal: return lo <= row.rhs && hi >= row.rhs;
    }
    return false;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    for (const auto* row : rows)
      if (!viable(*row)) return;
    if (i == vars.size()) {
      ++out.points;
      for (std::size_t k = 0; k < vars.size(); ++k)
        v[static_cast<std::size_t>(vars[k])] = Rational(assigned[static_cast<std::size_t>(vars[k])]);
      if (!all_rows_hold(m, v)) return;
      ++out.feasible;
      check_products(m, v, out);
      return;
    }
    for (int b : {0, 1}) {
      assigned[static_cast<std::size_t>(vars[i])] = b;
      dfs(i + 1);
    }
    assigned[static_cast<std::size_t>(vars[i])] = -1;
  };
  dfs(0);
}

Scenario small_instance(int clouds, int flavors, int chain, int sfcs, int security) {
  std::ostringstream os;
  os << R"({"topology": {"clouds": [)";
  for (int c = 0; c < clouds; ++c)
    os << (c ? "," : "") << R"({"id": "c)" << c << R"(", "capacity": {"cpu": )" << 4 + 2 * c << "}}";
  os << R"(], "access_nodes": ["ran"], "iot_domains": ["iot"], "links": [)";
  bool first = true;
  for (int a = 0; a < clouds; ++a)
    for (int b = a + 1; b < clouds; ++b) {
      os << (first ? "" : ",") << R"({"a": "c)" << a << R"(", "b": "c)" << b << R"(", "delay_ms": )" << 1 + a + b
         << R"(, "bandwidth_mbps": 100, "security_level": )" << 3 + a + 2 * b << "}";
      first = false;
    }
  os << R"(]}, "sfcs": [)";
  for (int q = 0; q < sfcs; ++q) {
    os << (q ? "," : "") << R"({"id": "s)" << q << R"(", "traffic_mbps": 1, "max_delay_ms": 4, "min_security": )"
       << security << R"(, "users": ["ran"], "iot_domains": ["iot"], "vnfs": [)";
    for (int i = 0; i < chain; ++i) os << (i ? "," : "") << R"({"id": "s)" << q << "v" << i << R"(", "type": "t)" << i << R"("})";
    os << "]}";
  }
  os << R"(], "flavors": [)";
  for (int f = 0; f < flavors; ++f)
    os << (f ? "," : "") << R"({"id": "f)" << f << R"(", "demand": {"cpu": )" << 2 + 2 * f << R"(}, "price": )" << 3 - f
       << "}";
  os << "]}";
  return normalize_types(load_bundle(os.str()));
}

void criterion_linearization() {
  const auto t0 = Clock::now();
  ProductCheck all, dfs;
  int small_models = 0;
  std::size_t largest = 0;
  // Every instance shape of at most 16 booleans, with and without symmetry breaking.
  for (int clouds = 1; clouds <= 3; ++clouds)
    for (int flavors = 1; flavors <= 3; ++flavors)
      for (bool sb : {true, false}) {
        BuildOptions o;
        o.symmetry_breaking = sb;
        const IlpModel m = build_model(small_instance(clouds, flavors, 1, 1, 1), o);
        const std::size_t n = boolean_vars(m).size();
        if (n > 16) continue;
        largest = std::max(largest, n);
        ++small_models;
        enumerate_all(m, all);
      }
  // Chain pairs need more booleans than that; their feasible sets are
  // enumerated exhaustively by pruned search instead.
  for (int clouds = 2; clouds <= 3; ++clouds)
    for (int security : {1, 6}) {
      const IlpModel m = build_model(small_instance(clouds, 1, 2, 1, security));
      enumerate_feasible(m, dfs);
    }
  const double secs = seconds_since(t0);
  const bool pass = all.broken == 0 && dfs.broken == 0 && all.feasible > 0 && dfs.ypair > 0 && dfs.ones > 0 &&
                    all.yvuc > 0 && all.cucf > 0 && secs < 120;
  report(6, pass,
         std::to_string(small_models) + " models with <= 16 booleans (max " + std::to_string(largest) + "), " +
             std::to_string(all.points) + " points, " + std::to_string(all.feasible) + " feasible, " +
             std::to_string(all.yvuc + all.cucf) + " product checks; chain models: " + std::to_string(dfs.feasible) +
             " feasible points, " + std::to_string(dfs.yvuc + dfs.cucf + dfs.ypair) + " product checks (" +
             std::to_string(dfs.ypair) + " Ypair); " + std::to_string(all.broken + dfs.broken) + " broken, " +
             fixed(secs, 1) + " s");
}

void criterion_hard_guarantees() {
  std::size_t hops = 0, bad_security = 0, bad_delay = 0;
  std::string first;
  for (const auto& s : g_solved) {
    const auto& topo = s.scenario->topology();
    std::map<std::string, int> cloud_of;
    for (const auto& v : s.placement.vnfs) cloud_of[v.vnf_id] = *topo.cloud_index(v.cloud_id);
    for (const auto& sfc : s.scenario->sfcs()) {
      Rational total(0);
      for (std::size_t i = 0; i + 1 < sfc.vnfs.size(); ++i) {
        const int a = cloud_of.at(sfc.vnfs[i].id), b = cloud_of.at(sfc.vnfs[i + 1].id);
        if (a == b) continue;
        ++hops;
        const auto& link = topo.cloud_link(a, b);
        if (link.unreachable || link.security_level < sfc.min_security) {
          ++bad_security;
          if (first.empty()) first = " (first in " + s.where + ")";
        }
        total += link.delay_ms;
      }
      if (total > sfc.max_delay_ms) {
        ++bad_delay;
        if (first.empty()) first = " (first in " + s.where + ")";
      }
    }
  }
  report(7, !g_solved.empty() && bad_security == 0 && bad_delay == 0,
         std::to_string(g_solved.size()) + " solutions, " + std::to_string(hops) + " inter-cloud hops, " +
             std::to_string(bad_security) + " below security, " + std::to_string(bad_delay) + " over delay" + first);
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

void criterion_determinism(const std::string& cli, const fs::path& work) {
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path bundle = work / "bundle.json";
  const std::string q = "'";
  bool ok = run(q + cli + q + " gen --clouds 6 --sfc-count 3 --seed 21 --bundle " + q + bundle.string() + q +
                " > /dev/null") == 0;
  std::vector<std::pair<std::string, std::string>> files;
  for (int round = 0; round < 2; ++round) {
    const fs::path dir = work / ("run" + std::to_string(round));
    fs::create_directories(dir);
    const std::string solve = q + cli + q + " solve --bundle " + q + bundle.string() + q;
    ok = ok && run(solve + " --out " + q + (dir / "solution.json").string() + q + " --dump-lp " + q +
                   (dir / "model.lp").string() + q + " > /dev/null") == 0;
    ok = ok && run(solve + " --json > " + q + (dir / "solve.json").string() + q) == 0;
    ok = ok && run(q + cli + q + " sweep --axis sfcs --points 1,2,3 --reps 3 --seed 7 --clouds 5 --jobs " +
                   std::to_string(round + 1) + " --out " + q + (dir / "sweep").string() + q + " > /dev/null") == 0;
  }
  int compared = 0, differing = 0;
  for (const char* name : {"solution.json", "model.lp", "solve.json", "sweep/sfcs_rows.csv", "sweep/sfcs_summary.csv"}) {
    const std::string a = read_all(work / "run0" / name), b = read_all(work / "run1" / name);
    ++compared;
    if (a.empty() || a != b) ++differing;
  }
  report(8, ok && differing == 0,
         std::to_string(compared) + " machine outputs compared across reruns, " + std::to_string(differing) +
             " differ" + (ok ? "" : ", a CLI run failed"));
}

void criterion_performance() {
  int optimal = 0, within_gap = 0, total = 0;
  double worst = 0;
  std::string gaps;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenConfig g;
    g.seed = seed;
    g.n_clouds = 10;
    g.n_sfcs = 4;
    g.chain_len = {4, 4};
    g.n_flavors = 3;
    const IlpModel m = build_model(generate(g));
    const auto t0 = Clock::now();
    const SolveResult r = solve_bnb(m, {std::numeric_limits<std::uint64_t>::max(), 60'000.0});
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    ++total;
    if (r.status == SolveStatus::Optimal && secs <= 60.0) {
      ++optimal;
    } else if (r.has_solution() && r.lower_bound && *r.lower_bound <= *r.objective) {
      ++within_gap;
      gaps += " seed " + std::to_string(seed) + " gap " + (*r.objective - *r.lower_bound).decimal();
    }
  }
  report(9, optimal + within_gap == total,
         std::to_string(optimal) + "/" + std::to_string(total) + " instances (10 clouds, 4x4 VNFs, 3 flavors) proven optimal, slowest " +
             fixed(worst, 2) + " s" + gaps);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <sfc-placer> <work-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argv[2];
  try {
    criterion_oracle_equivalence();
    criterion_validator_soundness();
    criterion_edges_trend();
    criterion_sfcs_trend();
    criterion_tag_coverage();
    criterion_linearization();
    criterion_hard_guarantees();
    criterion_determinism(cli, work);
    criterion_performance();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed") << std::endl;
  return g_failures == 0 ? 0 : 1;
}
