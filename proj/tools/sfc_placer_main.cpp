#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfcplace/assignment.hpp"
#include "sfcplace/ilp.hpp"
#include "sfcplace/lp_format.hpp"
#include "sfcplace/model.hpp"
#include "sfcplace/oracle.hpp"
#include "sfcplace/placement.hpp"
#include "sfcplace/scenario_io.hpp"
#include "sfcplace/scenarios.hpp"
#include "sfcplace/solver.hpp"

namespace fs = std::filesystem;
using namespace sfcplace;

namespace {

enum Exit { kOk = 0, kInfeasible = 1, kTimeout = 2, kInputError = 3, kInternal = 4 };

struct ScenarioArgs {
  std::string topology;
  std::string sfcs;
  std::string flavors;
  std::string bundle;
  bool bandwidth = false;
  bool endpoints = false;
  bool no_symmetry_breaking = false;

  void add(CLI::App& cmd) {
    cmd.add_option("--topology", topology, "Topology JSON file");
    cmd.add_option("--sfcs", sfcs, "SFC request JSON file");
    cmd.add_option("--flavors", flavors, "Flavor catalog JSON file");
    cmd.add_option("--bundle", bundle, "Single JSON file with topology, sfcs and flavors");
    cmd.add_flag("--bandwidth", bandwidth, "Enforce link bandwidth");
    cmd.add_flag("--endpoints", endpoints, "Count user and IoT endpoint hops in chain delay");
  }

  Scenario load() const {
    if (!bundle.empty()) {
      if (!topology.empty() || !sfcs.empty() || !flavors.empty())
        throw InputError("", "--bundle cannot be combined with --topology/--sfcs/--flavors");
      return normalize_types(load_bundle_file(bundle));
    }
    if (topology.empty() || sfcs.empty() || flavors.empty())
      throw InputError("", "need --topology, --sfcs and --flavors, or --bundle");
    return normalize_types(load_scenario_files(topology, sfcs, flavors));
  }

  BuildOptions build() const {
    BuildOptions b;
    b.bandwidth = bandwidth;
    b.endpoints = endpoints;
    b.symmetry_breaking = !no_symmetry_breaking;
    return b;
  }

  ValidationOptions validation() const {
    ValidationOptions v;
    v.bandwidth = bandwidth;
    v.endpoints = endpoints;
    return v;
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SFC_PLACER_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("SFC_PLACER_SEED", "not an unsigned integer");
  }
  return 1;
}

void write_or_throw(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_text_file(path, text);
}

// Capacity left on each cloud after the placement's VNFIs.
std::vector<ResourceVector> residual_capacity(const Scenario& s, const Placement& p) {
  const auto& clouds = s.topology().clouds();
  std::vector<ResourceVector> left;
  for (const auto& c : clouds) left.push_back(c.capacity);
  std::set<std::string> seen;
  for (const auto& v : p.vnfs) {
    if (!seen.insert(v.vnfi_id).second) continue;
    const auto c = s.topology().cloud_index(v.cloud_id);
    if (!c) continue;
    for (const auto& f : s.flavors().flavors) {
      if (f.id != v.flavor_id) continue;
      for (std::size_t k = 0; k < f.demand.size(); ++k) left[static_cast<std::size_t>(*c)][k] -= f.demand[k];
    }
  }
  return left;
}

const char* family_name(const std::string& tag) {
  static const std::map<std::string, const char*> names{
      {"eq33", "link security"},   {"eq32", "chain delay"},       {"eq24", "cloud capacity"},
      {"conflict", "VNF conflicts"}, {"ext-bandwidth", "link bandwidth"}, {"ext-endpoints", "endpoint delay"}};
  auto it = names.find(tag);
  return it == names.end() ? "" : it->second;
}

struct Diagnosis {
  std::string tag;
  std::size_t rows = 0;
  bool restores = false;
};

// Drops one constraint family at a time and reports which removals make
// the instance feasible.
std::vector<Diagnosis> diagnose(const IlpModel& model) {
  std::vector<Diagnosis> out;
  BnbOptions opts;
  opts.placement_bound = false;
  opts.greedy_incumbent = true;
  Budget budget{200'000, std::numeric_limits<double>::infinity()};
  for (const char* tag : {"eq33", "eq32", "eq24", "conflict", "ext-bandwidth", "ext-endpoints"}) {
    const std::size_t rows = model.count_tag(tag);
    if (rows == 0) continue;
    IlpModel relaxed = model;
    std::erase_if(relaxed.constraints, [&](const LinearConstraint& c) { return c.tag == tag; });
    const auto r = solve_bnb(relaxed, budget, opts);
    out.push_back({tag, rows, r.has_solution()});
  }
  return out;
}

int cmd_solve(const ScenarioArgs& in, const std::string& out_path, bool json, const std::string& dump_lp,
              const std::string& backend_spec, std::uint64_t max_nodes, double time_limit_s, bool no_tiebreak,
              bool timing) {
  const Scenario scenario = in.load();
  const IlpModel model = build_model(scenario, in.build());
  if (!dump_lp.empty()) write_or_throw(dump_lp, to_lp_string(model));

  BnbOptions opts;
  opts.delay_tiebreak = !no_tiebreak;
  Budget budget;
  budget.max_nodes = max_nodes == 0 ? std::numeric_limits<std::uint64_t>::max() : max_nodes;
  if (time_limit_s > 0) budget.max_wall_ms = time_limit_s * 1000.0;
  opts.tiebreak_budget = budget;
  auto backend = make_backend(backend_spec, opts);
  const SolveResult r = backend->solve(model, budget);

  std::optional<Placement> placement;
  std::vector<Violation> violations;
  if (r.has_solution()) {
    placement = decode_placement(model, r.assignment);
    violations = validate_solution(scenario, *placement, in.validation());
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "internal error: solution fails validation (" << to_string(violations.front().kind) << " "
          << violations.front().subject << ": " << violations.front().detail << ")";
      throw IntegrityError(msg.str());
    }
    if (!out_path.empty()) write_or_throw(out_path, placement_to_json(*placement).dump(2) + "\n");
  }
  std::vector<Diagnosis> diagnosis;
  if (r.status == SolveStatus::Infeasible) diagnosis = diagnose(model);

  const auto& kinds = scenario.topology().resource_kinds();
  std::vector<ResourceVector> residual;
  if (placement) residual = residual_capacity(scenario, *placement);

  if (json) {
    ordered_json doc;
    doc["status"] = to_string(r.status);
    doc["backend"] = backend->name();
    doc["objective"] = r.objective ? rational_to_json(*r.objective) : ordered_json(nullptr);
    doc["lower_bound"] = r.lower_bound ? rational_to_json(*r.lower_bound) : ordered_json(nullptr);
    doc["nodes_explored"] = r.stats.nodes_explored;
    if (timing) doc["wall_ms"] = r.stats.wall_ms;
    doc["placement"] = placement ? placement_to_json(*placement) : ordered_json(nullptr);
    ordered_json res = ordered_json::object();
    for (std::size_t c = 0; c < residual.size(); ++c) {
      ordered_json one = ordered_json::object();
      for (std::size_t k = 0; k < kinds.size(); ++k) one[kinds[k]] = residual[c][k];
      res[scenario.topology().clouds()[c].id] = std::move(one);
    }
    doc["residual_capacity"] = std::move(res);
    ordered_json diag = ordered_json::array();
    for (const auto& d : diagnosis)
      diag.push_back({{"tag", d.tag}, {"rows", d.rows}, {"dropping_restores_feasibility", d.restores}});
    doc["diagnosis"] = std::move(diag);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "status: " << to_string(r.status) << " (" << backend->name() << ", " << r.stats.nodes_explored
              << " nodes)\n";
    if (r.objective) std::cout << "cost: " << r.objective->decimal() << "\n";
    if (r.status == SolveStatus::TimedOut && r.lower_bound)
      std::cout << "lower bound: " << r.lower_bound->decimal() << "\n";
    if (placement) {
      for (const auto& s : placement->sfcs)
        std::cout << "  " << s.sfc_id << ": delay " << s.total_delay_ms.decimal() << " ms, weakest hop security "
                  << s.min_link_security_used << "\n";
      std::map<std::string, std::vector<std::string>> by_vnfi;
      std::map<std::string, std::string> where;
      for (const auto& v : placement->vnfs) {
        by_vnfi[v.vnfi_id].push_back(v.vnf_id);
        where[v.vnfi_id] = v.cloud_id + "/" + v.flavor_id;
      }
      for (const auto& [u, vs] : by_vnfi) {
        std::cout << "  " << u << " @ " << where[u] << ":";
        for (const auto& v : vs) std::cout << " " << v;
        std::cout << "\n";
      }
      std::cout << "residual capacity:\n";
      for (std::size_t c = 0; c < residual.size(); ++c) {
        std::cout << "  " << scenario.topology().clouds()[c].id;
        for (std::size_t k = 0; k < kinds.size(); ++k) std::cout << " " << kinds[k] << "=" << residual[c][k];
        std::cout << "\n";
      }
    }
    if (r.status == SolveStatus::Infeasible) {
      std::cout << "no placement satisfies all constraints\n";
      bool any = false;
      for (const auto& d : diagnosis) {
        if (!d.restores) continue;
        any = true;
        std::cout << "  dropping the " << d.tag << " constraints (" << family_name(d.tag) << ", " << d.rows
                  << " rows) makes the instance feasible\n";
      }
      if (!any) std::cout << "  no single constraint family explains the infeasibility\n";
    }
  }
  switch (r.status) {
    case SolveStatus::Optimal: return kOk;
    case SolveStatus::Infeasible: return kInfeasible;
    case SolveStatus::TimedOut: return kTimeout;
  }
  return kInternal;
}

int cmd_validate(const ScenarioArgs& in, const std::string& solution, bool json) {
  const Scenario scenario = in.load();
  Placement p;
  try {
    p = placement_from_json(ordered_json::parse(read_text_file(solution)));
  } catch (const ordered_json::exception& e) {
    throw InputError(solution, e.what());
  }
  std::vector<Violation> vs;
  try {
    vs = validate_solution(scenario, p, in.validation());
  } catch (const StructuralError& e) {
    throw InputError(solution, e.what());
  }
  if (json) {
    ordered_json doc;
    doc["valid"] = vs.empty();
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) arr.push_back({{"kind", to_string(v.kind)}, {"subject", v.subject}, {"detail", v.detail}});
    doc["violations"] = std::move(arr);
    std::cout << doc.dump(2) << "\n";
  } else if (vs.empty()) {
    std::cout << "valid: no violations\n";
  } else {
    std::cout << vs.size() << " violation" << (vs.size() == 1 ? "" : "s") << ":\n";
    for (const auto& v : vs) std::cout << "  [" << to_string(v.kind) << "] " << v.subject << ": " << v.detail << "\n";
  }
  return vs.empty() ? kOk : kInfeasible;
}

struct GenArgs {
  GenConfig cfg;
  std::optional<std::uint64_t> seed;
  std::int64_t chain_min = 2;
  std::int64_t chain_max = 4;

  void add(CLI::App& cmd, bool with_counts) {
    if (with_counts) {
      cmd.add_option("--clouds", cfg.n_clouds, "Number of clouds")->capture_default_str();
      cmd.add_option("--sfc-count", cfg.n_sfcs, "Number of SFCs")->capture_default_str();
    }
    cmd.add_option("--chain-min", chain_min, "Shortest chain")->capture_default_str();
    cmd.add_option("--chain-max", chain_max, "Longest chain")->capture_default_str();
    cmd.add_option("--types", cfg.n_types, "Number of VNF types")->capture_default_str();
    cmd.add_option("--flavor-count", cfg.n_flavors, "Number of flavors")->capture_default_str();
    cmd.add_option("--security-levels", cfg.security_levels, "Link security levels")->capture_default_str();
    cmd.add_option("--conflict-prob", cfg.conflict_prob, "Conflict probability per same-type pair")
        ->capture_default_str();
    cmd.add_option("--seed", seed, "Seed (default: $SFC_PLACER_SEED, else 1)");
  }

  GenConfig config() {
    GenConfig g = cfg;
    g.chain_len = {chain_min, chain_max};
    g.seed = seed ? *seed : default_seed();
    return g;
  }
};

int cmd_gen(GenArgs& args, const std::string& out_dir, const std::string& bundle, bool json) {
  const Scenario s = generate(args.config());
  if (!out_dir.empty()) save_scenario_files(s, out_dir);
  const std::string doc = bundle_to_json(s).dump(2) + "\n";
  if (!bundle.empty()) write_or_throw(bundle, doc);
  if (json) {
    std::cout << doc;
  } else {
    std::cout << "generated " << s.topology().cloud_count() << " clouds, " << s.sfcs().size() << " SFCs, "
              << s.vnf_count() << " VNFs, " << s.flavors().flavors.size() << " flavors\n";
    if (!out_dir.empty()) std::cout << "wrote topology.json, sfcs.json, flavors.json to " << out_dir << "\n";
    if (!bundle.empty()) std::cout << "wrote " << bundle << "\n";
  }
  return kOk;
}

std::vector<int> parse_points(const std::string& text) {
  std::vector<int> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      pts.push_back(v);
    } catch (const std::exception&) {
      throw InputError("--points", "expected positive integers separated by commas, got '" + item + "'");
    }
  }
  if (pts.empty()) throw InputError("--points", "empty list");
  return pts;
}

int cmd_sweep(GenArgs& args, const std::string& axis, const std::string& points, int reps, bool nested,
              int jobs, const std::string& out_dir, std::uint64_t max_nodes, bool timing, bool json,
              std::optional<int> clouds, std::optional<int> sfc_count) {
  SweepConfig sc;
  sc.axis = axis == "edges" ? Axis::Edges : Axis::Sfcs;
  sc.points = parse_points(points);
  sc.repetitions = reps;
  sc.nested = nested;
  sc.jobs = jobs;
  sc.base = args.config();
  sc.base.n_sfcs = sfc_count.value_or(4);
  sc.base.n_clouds = clouds.value_or(10);
  sc.budget.max_nodes = max_nodes;
  if (reps < 2) throw InputError("--reps", "need at least 2 repetitions");

  const SweepResult r = run_sweep(sc);
  for (const auto& row : r.rows)
    if (row.violations != 0)
      throw IntegrityError("internal error: sweep solution at " + std::to_string(row.axis_value) + "/" +
                           std::to_string(row.rep) + " fails validation");
  const fs::path dir = out_dir;
  const std::string stem = std::string(to_string(sc.axis));
  write_or_throw(dir / (stem + "_rows.csv"), sweep_rows_csv(r, timing));
  write_or_throw(dir / (stem + "_summary.csv"), sweep_summary_csv(r));

  int timeouts = 0;
  for (const auto& p : r.points) timeouts += p.timed_out;
  if (json) {
    ordered_json doc;
    doc["axis"] = stem;
    doc["nested"] = nested;
    doc["repetitions"] = reps;
    ordered_json pts = ordered_json::array();
    for (const auto& p : r.points)
      pts.push_back({{"axis_value", p.axis_value},
                     {"n", p.cost.n},
                     {"infeasible", p.infeasible},
                     {"timed_out", p.timed_out},
                     {"mean_cost", p.cost.mean},
                     {"ci95_cost", p.cost.ci95},
                     {"mean_delay_ms", p.delay.mean},
                     {"ci95_delay_ms", p.delay.ci95}});
    doc["points"] = std::move(pts);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << stem << " sweep, " << reps << " repetitions" << (nested ? ", nested" : "") << "\n";
    std::cout << "  value   n  infeas  timeout  mean cost (ci95)  mean delay ms (ci95)\n";
    for (const auto& p : r.points) {
      char line[160];
      std::snprintf(line, sizeof line, "  %5d %3zu %7d %8d  %8.3f (%.3f)  %8.3f (%.3f)\n", p.axis_value, p.cost.n,
                    p.infeasible, p.timed_out, p.cost.mean, p.cost.ci95, p.delay.mean, p.delay.ci95);
      std::cout << line;
    }
    std::cout << "wrote " << (dir / (stem + "_rows.csv")).string() << " and "
              << (dir / (stem + "_summary.csv")).string() << "\n";
  }
  return timeouts > 0 ? kTimeout : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SFC placement over edge clouds"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve a scenario to optimality");
  ScenarioArgs solve_in;
  solve_in.add(*solve);
  solve->add_flag("--no-symmetry-breaking", solve_in.no_symmetry_breaking, "Disable VNFI symmetry breaking");
  std::string solve_out, dump_lp, backend = "bnb";
  bool solve_json = false, no_tiebreak = false, solve_timing = false;
  std::uint64_t solve_nodes = 20'000'000;
  double time_limit = 0;
  solve->add_option("--out", solve_out, "Write the placement JSON here");
  solve->add_option("--dump-lp", dump_lp, "Write the model in LP format");
  solve->add_option("--backend", backend, "bnb or external:<cmd>")->capture_default_str();
  solve->add_option("--max-nodes", solve_nodes, "Node budget, 0 for none")->capture_default_str();
  solve->add_option("--time-limit", time_limit, "Wall-clock budget in seconds, 0 for none")->capture_default_str();
  solve->add_flag("--no-tiebreak", no_tiebreak, "Skip the lowest-delay search among cost optima");
  solve->add_flag("--json", solve_json, "Print one JSON document instead of the summary");
  solve->add_flag("--timing", solve_timing, "Include wall time in --json output");

  auto* validate = app.add_subcommand("validate", "Check a placement against a scenario");
  ScenarioArgs val_in;
  val_in.add(*validate);
  std::string solution;
  bool val_json = false;
  validate->add_option("--solution", solution, "Placement JSON")->required();
  validate->add_flag("--json", val_json, "Print one JSON document");

  auto* gen = app.add_subcommand("gen", "Generate a random scenario");
  GenArgs gen_args;
  gen_args.add(*gen, true);
  std::string gen_out, gen_bundle;
  bool gen_json = false;
  gen->add_option("--out", gen_out, "Directory for topology.json, sfcs.json, flavors.json");
  gen->add_option("--bundle", gen_bundle, "Write a single bundle file");
  gen->add_flag("--json", gen_json, "Print the bundle to stdout");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  GenArgs sweep_args;
  sweep_args.add(*sweep, false);
  std::string axis = "edges", points, sweep_out = "sweep-out";
  int reps = 10, jobs = 1;
  bool nested = false, sweep_timing = false, sweep_json = false;
  std::uint64_t sweep_nodes = 2'000'000;
  std::optional<int> sweep_clouds, sweep_sfcs;
  sweep->add_option("--axis", axis, "edges or sfcs")->check(CLI::IsMember({"edges", "sfcs"}))->capture_default_str();
  sweep->add_option("--points", points, "Comma-separated axis values")->required();
  sweep->add_option("--reps", reps, "Repetitions per point")->capture_default_str();
  sweep->add_option("--clouds", sweep_clouds, "Clouds when sweeping SFCs (default 10)");
  sweep->add_option("--sfc-count", sweep_sfcs, "SFCs when sweeping edges (default 4)");
  sweep->add_flag("--nested", nested, "Each larger instance extends the smaller one");
  sweep->add_option("--jobs", jobs, "Parallel solves")->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output directory")->capture_default_str();
  sweep->add_option("--max-nodes", sweep_nodes, "Node budget per solve")->capture_default_str();
  sweep->add_flag("--timing", sweep_timing, "Fill the wall_ms column");
  sweep->add_flag("--json", sweep_json, "Print the summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve)
      return cmd_solve(solve_in, solve_out, solve_json, dump_lp, backend, solve_nodes, time_limit, no_tiebreak,
                       solve_timing);
    if (*validate) return cmd_validate(val_in, solution, val_json);
    if (*gen) return cmd_gen(gen_args, gen_out, gen_bundle, gen_json);
    if (*sweep)
      return cmd_sweep(sweep_args, axis, points, reps, nested, jobs, sweep_out, sweep_nodes, sweep_timing,
                       sweep_json, sweep_clouds, sweep_sfcs);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const IntegrityError& e) {
    std::cerr << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
