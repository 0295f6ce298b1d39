#include "sfcplace/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "sfcplace/assignment.hpp"
#include "sfcplace/oracle.hpp"

namespace sfcplace {
namespace {

enum Stream : std::uint32_t { kCloud = 1, kEndpoint, kLink, kEndpointLink, kFlavor, kSfc, kConflict };

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt, Stream tag, std::uint32_t a = 0,
                       std::uint32_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32),
                    static_cast<std::uint32_t>(tag), a, b};
  return std::mt19937_64(seq);
}

std::int64_t draw(std::mt19937_64& rng, IntRange r) {
  return std::uniform_int_distribution<std::int64_t>(r.lo, r.hi)(rng);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

Rational distance_delay(const GenConfig& cfg, Point a, Point b) {
  const double dx = static_cast<double>(a.x - b.x), dy = static_cast<double>(a.y - b.y);
  const double ms = cfg.delay_base_ms + std::sqrt(dx * dx + dy * dy) * cfg.delay_per_unit_ms;
  return Rational(static_cast<std::int64_t>(std::llround(ms * 10.0)), 10);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void check_range(IntRange r, const char* what) {
  if (r.lo > r.hi) throw std::invalid_argument(std::string("empty range for ") + what);
}

}  // namespace

const char* to_string(Axis axis) { return axis == Axis::Edges ? "edges" : "sfcs"; }

Scenario generate(const GenConfig& cfg) {
  if (cfg.n_clouds < 1 || cfg.n_sfcs < 0 || cfg.n_types < 1 || cfg.n_flavors < 1 || cfg.security_levels < 1)
    throw std::invalid_argument("generator config needs at least one cloud, type and flavor");
  check_range(cfg.chain_len, "chain_len");
  check_range(cfg.bandwidth_mbps, "bandwidth_mbps");
  check_range(cfg.cloud_cpu, "cloud_cpu");
  check_range(cfg.flavor_cpu, "flavor_cpu");
  check_range(cfg.flavor_price, "flavor_price");
  check_range(cfg.traffic_mbps, "traffic_mbps");
  check_range(cfg.min_security, "min_security");
  check_range(cfg.hop_delay_budget_ms, "hop_delay_budget_ms");
  if (cfg.chain_len.lo < 1) throw std::invalid_argument("chains need at least one VNF");
  if (cfg.min_security.lo < 1 || cfg.min_security.hi > cfg.security_levels)
    throw std::invalid_argument("min_security outside [1, security_levels]");

  const IntRange grid{0, cfg.area};
  std::vector<CloudNode> clouds;
  std::vector<Point> pos;
  for (int c = 0; c < cfg.n_clouds; ++c) {
    auto rng = stream(cfg.seed, cfg.topology_salt, kCloud, static_cast<std::uint32_t>(c));
    Point p{draw(rng, grid), draw(rng, grid)};
    const auto cpu = draw(rng, cfg.cloud_cpu);
    const auto ram = 2 * cpu + draw(rng, {0, 4});
    const auto storage = 10 * cpu + draw(rng, {0, 20});
    clouds.push_back({"c" + std::to_string(c), {cpu, ram, storage}});
    pos.push_back(p);
  }
  std::vector<Point> endpoints;
  for (std::uint32_t e = 0; e < 2; ++e) {
    auto rng = stream(cfg.seed, cfg.topology_salt, kEndpoint, e);
    endpoints.push_back({draw(rng, grid), draw(rng, grid)});
  }
  const std::vector<std::string> endpoint_ids{"ran0", "iot0"};

  std::vector<LinkSpec> links;
  for (int a = 0; a < cfg.n_clouds; ++a) {
    for (int b = a + 1; b < cfg.n_clouds; ++b) {
      auto rng = stream(cfg.seed, cfg.topology_salt, kLink, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
      LinkProps props;
      props.security_level = static_cast<int>(draw(rng, {1, cfg.security_levels}));
      props.bandwidth_mbps = draw(rng, cfg.bandwidth_mbps);
      props.delay_ms = distance_delay(cfg, pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
      links.push_back({clouds[static_cast<std::size_t>(a)].id, clouds[static_cast<std::size_t>(b)].id, props});
    }
  }
  for (std::uint32_t e = 0; e < 2; ++e) {
    for (int c = 0; c < cfg.n_clouds; ++c) {
      auto rng = stream(cfg.seed, cfg.topology_salt, kEndpointLink, e, static_cast<std::uint32_t>(c));
      LinkProps props;
      props.security_level = static_cast<int>(draw(rng, {1, cfg.security_levels}));
      props.bandwidth_mbps = draw(rng, cfg.bandwidth_mbps);
      props.delay_ms = distance_delay(cfg, endpoints[e], pos[static_cast<std::size_t>(c)]);
      links.push_back({endpoint_ids[e], clouds[static_cast<std::size_t>(c)].id, props});
    }
  }
  Topology topo({"cpu", "ram", "storage"}, std::move(clouds), {endpoint_ids[0]}, {endpoint_ids[1]},
                std::move(links), cfg.security_levels);

  // Flavors: larger ones are cheaper.
  FlavorCatalog catalog;
  {
    auto rng = stream(cfg.seed, 0, kFlavor);
    std::vector<std::int64_t> cpu, price;
    for (int f = 0; f < cfg.n_flavors; ++f) {
      cpu.push_back(draw(rng, cfg.flavor_cpu));
      price.push_back(draw(rng, cfg.flavor_price));
    }
    std::sort(cpu.rbegin(), cpu.rend());
    std::sort(price.begin(), price.end());
    for (std::size_t i = 1; i < price.size(); ++i) price[i] = std::max(price[i], price[i - 1] + 1);
    for (int f = 0; f < cfg.n_flavors; ++f) {
      const auto c = cpu[static_cast<std::size_t>(f)];
      catalog.flavors.push_back({"f" + std::to_string(f), {c, 2 * c, 10 * c}, Rational(price[static_cast<std::size_t>(f)])});
    }
  }

  std::vector<SfcRequest> sfcs;
  std::vector<std::pair<int, int>> where;  // (sfc, pos) per global VNF
  for (int q = 0; q < cfg.n_sfcs; ++q) {
    auto rng = stream(cfg.seed, cfg.workload_salt, kSfc, static_cast<std::uint32_t>(q));
    SfcRequest s;
    s.id = "sfc" + std::to_string(q);
    const auto len = draw(rng, cfg.chain_len);
    for (std::int64_t i = 0; i < len; ++i) {
      VnfSpec v;
      v.id = s.id + "-v" + std::to_string(i);
      v.type_label = "t" + std::to_string(draw(rng, {1, cfg.n_types}));
      s.vnfs.push_back(std::move(v));
      where.emplace_back(q, static_cast<int>(i));
    }
    s.traffic_mbps = draw(rng, cfg.traffic_mbps);
    s.min_security = static_cast<int>(draw(rng, cfg.min_security));
    std::int64_t budget = 0;
    for (std::int64_t i = 0; i + 1 < len; ++i) budget += draw(rng, cfg.hop_delay_budget_ms);
    s.max_delay_ms = std::max<std::int64_t>(budget, 1);
    s.users = {endpoint_ids[0]};
    s.iot_domains = {endpoint_ids[1]};
    s.bandwidth_demand_mbps = s.traffic_mbps;
    sfcs.push_back(std::move(s));
  }
  const std::int64_t threshold = std::llround(cfg.conflict_prob * 1'000'000.0);
  for (std::size_t a = 0; a < where.size(); ++a) {
    for (std::size_t b = a + 1; b < where.size(); ++b) {
      if (where[a].first == where[b].first) continue;
      auto& va = sfcs[static_cast<std::size_t>(where[a].first)].vnfs[static_cast<std::size_t>(where[a].second)];
      const auto& vb = sfcs[static_cast<std::size_t>(where[b].first)].vnfs[static_cast<std::size_t>(where[b].second)];
      if (va.type_label != vb.type_label) continue;
      auto rng = stream(cfg.seed, cfg.workload_salt, kConflict, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
      if (draw(rng, {0, 999'999}) < threshold) va.conflicts.push_back(vb.id);
    }
  }
  return normalize_types(Scenario(std::move(topo), std::move(sfcs), std::move(catalog)));
}

std::uint64_t instance_seed(const SweepConfig& config, int point_index, int rep) {
  if (config.identical_seeds) return config.base.seed;
  (void)point_index;
  return splitmix64(config.base.seed ^ splitmix64(static_cast<std::uint64_t>(rep) + 1));
}

GenConfig instance_config(const SweepConfig& config, int point_index, int rep) {
  GenConfig g = config.base;
  const int value = config.points.at(static_cast<std::size_t>(point_index));
  const auto salt = config.nested ? 0 : static_cast<std::uint64_t>(value);
  if (config.axis == Axis::Edges) {
    g.n_clouds = value;
    g.topology_salt = salt;
  } else {
    g.n_sfcs = value;
    g.workload_salt = salt;
  }
  g.seed = instance_seed(config, point_index, rep);
  return g;
}

SweepResult run_sweep(const SweepConfig& config, const SweepProgress& progress) {
  if (config.repetitions < 2) throw std::invalid_argument("sweep needs at least two repetitions");
  if (config.points.empty()) throw std::invalid_argument("sweep needs at least one point");
  SweepResult result;
  result.config = config;
  const int np = static_cast<int>(config.points.size());
  const int total = np * config.repetitions;
  result.rows.resize(static_cast<std::size_t>(total));

  ValidationOptions vopts;
  vopts.bandwidth = config.build.bandwidth;
  vopts.endpoints = config.build.endpoints;

  auto run_one = [&](int task) {
    const int pi = task / config.repetitions;
    const int rep = task % config.repetitions;
    const GenConfig g = instance_config(config, pi, rep);
    const Scenario s = generate(g);
    const IlpModel model = build_model(s, config.build);
    const SolveResult r = solve_bnb(model, config.budget, config.solver);
    SweepRow row;
    row.axis_value = config.points[static_cast<std::size_t>(pi)];
    row.rep = rep;
    row.seed = g.seed;
    row.status = r.status;
    row.nodes_explored = r.stats.nodes_explored;
    row.wall_ms = r.stats.wall_ms;
    if (r.has_solution()) {
      Placement p = decode_placement(model, r.assignment);
      row.cost = p.total_cost;
      Rational sum(0);
      for (const auto& q : p.sfcs) sum += q.total_delay_ms;
      row.mean_delay_ms = p.sfcs.empty() ? Rational(0) : sum / Rational(static_cast<std::int64_t>(p.sfcs.size()));
      row.violations = validate_solution(*model.scenario, p, vopts).size();
      row.placement = std::move(p);
    }
    return row;
  };

  std::atomic<int> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const int task = next++;
      if (task >= total) return;
      try {
        SweepRow row = run_one(task);
        std::lock_guard<std::mutex> lock(mu);
        if (progress) progress(row);
        result.rows[static_cast<std::size_t>(task)] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  const int jobs = std::max(1, std::min(config.jobs, total));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (int pi = 0; pi < np; ++pi) {
    SweepPoint pt;
    pt.axis_value = config.points[static_cast<std::size_t>(pi)];
    pt.repetitions = config.repetitions;
    std::vector<double> cost, delay;
    for (int rep = 0; rep < config.repetitions; ++rep) {
      const auto& row = result.rows[static_cast<std::size_t>(pi * config.repetitions + rep)];
      if (row.status == SolveStatus::Infeasible) ++pt.infeasible;
      if (row.status == SolveStatus::TimedOut) ++pt.timed_out;
      if (row.status != SolveStatus::Optimal) continue;
      cost.push_back(row.cost->to_double());
      delay.push_back(row.mean_delay_ms->to_double());
    }
    pt.cost = summarize(cost);
    pt.delay = summarize(delay);
    result.points.push_back(pt);
  }
  return result;
}

std::string sweep_rows_csv(const SweepResult& result, bool timing) {
  std::ostringstream os;
  os << "axis_value,rep,seed,status,cost,mean_delay_ms,nodes_explored,wall_ms\n";
  for (const auto& r : result.rows) {
    os << r.axis_value << ',' << r.rep << ',' << r.seed << ',' << to_string(r.status) << ','
       << (r.cost ? r.cost->decimal() : "") << ',' << (r.mean_delay_ms ? r.mean_delay_ms->decimal() : "") << ','
       << r.nodes_explored << ',';
    if (timing) os << fmt(r.wall_ms);
    os << '\n';
  }
  return os.str();
}

std::string sweep_summary_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "axis_value,n,infeasible,timed_out,mean_cost,ci95_cost,mean_delay_ms,ci95_delay_ms\n";
  for (const auto& p : result.points) {
    os << p.axis_value << ',' << p.cost.n << ',' << p.infeasible << ',' << p.timed_out << ',';
    if (p.cost.n > 0) {
      os << fmt(p.cost.mean) << ',' << fmt(p.cost.ci95) << ',' << fmt(p.delay.mean) << ',' << fmt(p.delay.ci95);
    } else {
      os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sfcplace
