#include "sfcplace/ilp.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sfcplace {
namespace {

void add(IlpModel& m, std::vector<Term> terms, Sense sense, Rational rhs, const char* tag) {
  m.constraints.push_back({std::move(terms), sense, rhs, tag});
}

// Exact maximum clique over at most 64 vertices.
int max_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int size, int best) {
  if (candidates == 0) return std::max(size, best);
  if (size + std::popcount(candidates) <= best) return best;
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) break;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(adj, candidates & adj[static_cast<std::size_t>(v)], size + 1, best);
  }
  return best;
}

int greedy_clique(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  int best = n > 0 ? 1 : 0;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> clique{start};
    for (std::size_t w = 0; w < n; ++w) {
      if (w == start) continue;
      bool ok = std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return adj[c][w]; });
      if (ok) clique.push_back(w);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

ModelLayout make_layout(const Scenario& s, const ModelDims& dims) {
  ModelLayout layout;
  std::vector<int> per_type(static_cast<std::size_t>(dims.types) + 1, 0);
  for (std::size_t v = 0; v < s.vnf_count(); ++v) ++per_type[static_cast<std::size_t>(s.vnf(v).type)];
  for (int t = 1; t <= dims.types; ++t)
    for (int k = 0; k < per_type[static_cast<std::size_t>(t)]; ++k) layout.vnfi_block_type.push_back(t);

  layout.min_vnfis_per_type.assign(static_cast<std::size_t>(dims.types) + 1, 0);
  for (int t = 1; t <= dims.types; ++t) {
    std::vector<int> members;
    for (std::size_t v = 0; v < s.vnf_count(); ++v)
      if (s.vnf(v).type == t) members.push_back(static_cast<int>(v));
    const std::size_t n = members.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto& vi = s.vnf(static_cast<std::size_t>(members[i]));
        const auto& vj = s.vnf(static_cast<std::size_t>(members[j]));
        const bool same_sfc = s.vnf_ref(static_cast<std::size_t>(members[i])).sfc ==
                              s.vnf_ref(static_cast<std::size_t>(members[j])).sfc;
        const bool conflict = std::binary_search(vi.conflicts.begin(), vi.conflicts.end(), vj.id);
        adj[i][j] = same_sfc || conflict;
      }
    }
    int bound = 0;
    if (n <= 64) {
      std::vector<std::uint64_t> masks(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (adj[i][j]) masks[i] |= std::uint64_t{1} << j;
      const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      bound = max_clique(masks, all, 0, 0);
    } else {
      bound = greedy_clique(adj);
    }
    layout.min_vnfis_per_type[static_cast<std::size_t>(t)] = bound;
  }
  return layout;
}

}  // namespace

const char* to_string(VarKind kind) {
  switch (kind) {
    case VarKind::X: return "X";
    case VarKind::B: return "B";
    case VarKind::Yc: return "Yc";
    case VarKind::A: return "A";
    case VarKind::U: return "U";
    case VarKind::Phi: return "Phi";
    case VarKind::Yvuc: return "Yvuc";
    case VarKind::Cucf: return "Cucf";
    case VarKind::Ypair: return "Ypair";
    case VarKind::Fhop: return "Fhop";
  }
  return "?";
}

const char* to_string(Sense sense) {
  switch (sense) {
    case Sense::LessEqual: return "<=";
    case Sense::Equal: return "=";
    case Sense::GreaterEqual: return ">=";
  }
  return "?";
}

VarRegistry::VarRegistry(ModelDims dims) : dims_(std::move(dims)) {
  const int n = dims_.vnfs, nv = dims_.vnfis, s = dims_.sfcs, c = dims_.clouds, f = dims_.flavors,
            t = dims_.types;
  auto push = [&](VarKind kind, int i, int j, int k, bool continuous = false) {
    info_.push_back({kind, {i, j, k}, continuous});
  };
  auto mark = [&](VarKind kind) { base_[static_cast<std::size_t>(kind)] = static_cast<int>(info_.size()); };

  mark(VarKind::X);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < nv; ++u) push(VarKind::X, v, u, -1);
  mark(VarKind::B);
  for (int q = 0; q < s; ++q)
    for (int u = 0; u < nv; ++u) push(VarKind::B, q, u, -1);
  mark(VarKind::Yc);
  for (int v = 0; v < n; ++v)
    for (int cc = 0; cc < c; ++cc) push(VarKind::Yc, v, cc, -1);
  mark(VarKind::A);
  for (int u = 0; u < nv; ++u)
    for (int tt = 1; tt <= t; ++tt) push(VarKind::A, u, tt, -1);
  mark(VarKind::U);
  for (int u = 0; u < nv; ++u)
    for (int cc = 0; cc < c; ++cc) push(VarKind::U, u, cc, -1);
  mark(VarKind::Phi);
  for (int u = 0; u < nv; ++u)
    for (int ff = 0; ff < f; ++ff) push(VarKind::Phi, u, ff, -1);
  mark(VarKind::Yvuc);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < nv; ++u)
      for (int cc = 0; cc < c; ++cc) push(VarKind::Yvuc, v, u, cc);
  mark(VarKind::Cucf);
  for (int u = 0; u < nv; ++u)
    for (int cc = 0; cc < c; ++cc)
      for (int ff = 0; ff < f; ++ff) push(VarKind::Cucf, u, cc, ff);
  mark(VarKind::Ypair);
  for (std::size_t k = 0; k < dims_.pairs.size(); ++k)
    for (int c1 = 0; c1 < c; ++c1)
      for (int c2 = 0; c2 < c; ++c2)
        if (c1 != c2) push(VarKind::Ypair, static_cast<int>(k), c1, c2);
  mark(VarKind::Fhop);
  for (std::size_t k = 0; k < dims_.pairs.size(); ++k) push(VarKind::Fhop, static_cast<int>(k), -1, -1, true);
  base_[10] = static_cast<int>(info_.size());

  for (std::size_t i = 0; i < info_.size(); ++i) by_name_.emplace(name(static_cast<int>(i)), static_cast<int>(i));
}

std::size_t VarRegistry::count(VarKind kind) const {
  const auto k = static_cast<std::size_t>(kind);
  return static_cast<std::size_t>(base_[k + 1] - base_[k]);
}

std::string VarRegistry::name(int var) const {
  const VarInfo& vi = info(var);
  std::string out = to_string(vi.kind);
  for (int i : vi.idx)
    if (i >= 0) out += "_" + std::to_string(i);
  return out;
}

int VarRegistry::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

std::size_t IlpModel::count_tag(const std::string& tag) const {
  return static_cast<std::size_t>(std::count_if(constraints.begin(), constraints.end(),
                                                 [&](const LinearConstraint& c) { return c.tag == tag; }));
}

std::vector<ChainPair> chain_pairs(const Scenario& scenario) {
  std::vector<ChainPair> pairs;
  for (std::size_t s = 0; s < scenario.sfcs().size(); ++s) {
    const int off = scenario.sfc_offset(static_cast<int>(s));
    const int len = static_cast<int>(scenario.sfcs()[s].vnfs.size());
    for (int p = 0; p + 1 < len; ++p) pairs.push_back({static_cast<int>(s), off + p, off + p + 1});
  }
  return pairs;
}

void emit_vnf_vnfi_constraints(IlpModel& m, const Scenario& s) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  const Rational big_m(d.types + 1);

  for (int v = 0; v < d.vnfs; ++v) {
    std::vector<Term> t;
    for (int u = 0; u < d.vnfis; ++u) t.push_back({1, r.x(v, u)});
    add(m, std::move(t), Sense::Equal, 1, "eq1");
  }
  for (int u = 0; u < d.vnfis; ++u) {
    for (int q = 0; q < d.sfcs; ++q) {
      std::vector<Term> t;
      const int off = s.sfc_offset(q);
      const int len = static_cast<int>(s.sfcs()[static_cast<std::size_t>(q)].vnfs.size());
      for (int v = off; v < off + len; ++v) t.push_back({1, r.x(v, u)});
      t.push_back({-1, r.b(q, u)});
      add(m, std::move(t), Sense::Equal, 0, "eq2");
    }
  }
  // pi_v <= pi + (2 - X - A) M   <=>   M X + M A <= 2M + pi - pi_v
  // pi <= pi_v + (2 - X - A) M   <=>   M X + M A <= 2M + pi_v - pi
  for (int v = 0; v < d.vnfs; ++v) {
    const int tv = s.vnf(static_cast<std::size_t>(v)).type;
    for (int u = 0; u < d.vnfis; ++u) {
      for (int t = 1; t <= d.types; ++t) {
        add(m, {{big_m, r.x(v, u)}, {big_m, r.a(u, t)}}, Sense::LessEqual, big_m * 2 + (t - tv), "eq5");
        add(m, {{big_m, r.x(v, u)}, {big_m, r.a(u, t)}}, Sense::LessEqual, big_m * 2 + (tv - t), "eq6");
      }
    }
  }
  for (int u = 0; u < d.vnfis; ++u) {
    std::vector<Term> t;
    for (int ty = 1; ty <= d.types; ++ty) t.push_back({1, r.a(u, ty)});
    for (int c = 0; c < d.clouds; ++c) t.push_back({-1, r.u(u, c)});
    add(m, std::move(t), Sense::Equal, 0, "eq7");
  }
  // Pairwise exclusion for conflicting VNFs, each unordered pair once.
  for (int v = 0; v < d.vnfs; ++v) {
    for (const auto& other : s.vnf(static_cast<std::size_t>(v)).conflicts) {
      const int w = *s.vnf_index(other);
      if (w <= v) continue;
      for (int u = 0; u < d.vnfis; ++u)
        add(m, {{1, r.x(v, u)}, {1, r.x(w, u)}}, Sense::LessEqual, 1, "conflict");
    }
  }
}

void emit_vnfi_cloud_constraints(IlpModel& m, const Scenario&) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  auto deployed = [&](int u) {
    std::vector<Term> t;
    for (int c = 0; c < d.clouds; ++c) t.push_back({1, r.u(u, c)});
    return t;
  };
  for (int u = 0; u < d.vnfis; ++u) {
    for (int v = 0; v < d.vnfs; ++v) {
      auto t = deployed(u);
      t.push_back({-1, r.x(v, u)});
      add(m, std::move(t), Sense::GreaterEqual, 0, "eq8");
    }
  }
  for (int u = 0; u < d.vnfis; ++u) {
    auto t = deployed(u);
    for (int v = 0; v < d.vnfs; ++v) t.push_back({-1, r.x(v, u)});
    add(m, std::move(t), Sense::LessEqual, 0, "eq9");
  }
  for (int u = 0; u < d.vnfis; ++u) add(m, deployed(u), Sense::LessEqual, 1, "eq10");

  for (int v = 0; v < d.vnfs; ++v) {
    for (int u = 0; u < d.vnfis; ++u) {
      for (int c = 0; c < d.clouds; ++c) {
        const int y = r.yvuc(v, u, c);
        add(m, {{1, y}, {-1, r.u(u, c)}}, Sense::LessEqual, 0, "eq13");
        add(m, {{1, y}, {-1, r.x(v, u)}}, Sense::LessEqual, 0, "eq14");
        add(m, {{1, y}, {-1, r.x(v, u)}, {-1, r.u(u, c)}}, Sense::GreaterEqual, -1, "eq15");
        add(m, {{1, r.yc(v, c)}, {-1, y}}, Sense::GreaterEqual, 0, "eq16");
      }
    }
  }
  for (int v = 0; v < d.vnfs; ++v) {
    for (int c = 0; c < d.clouds; ++c) {
      std::vector<Term> t{{1, r.yc(v, c)}};
      for (int u = 0; u < d.vnfis; ++u) t.push_back({-1, r.yvuc(v, u, c)});
      add(m, std::move(t), Sense::LessEqual, 0, "eq17");
    }
  }
  for (int v = 0; v < d.vnfs; ++v) {
    std::vector<Term> t;
    for (int c = 0; c < d.clouds; ++c) t.push_back({1, r.yc(v, c)});
    add(m, t, Sense::Equal, 1, "eq18");
    add(m, std::move(t), Sense::Equal, 1, "eq3");
  }
}

void emit_resource_constraints(IlpModel& m, const Scenario& s) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  for (int u = 0; u < d.vnfis; ++u) {
    std::vector<Term> t;
    for (int f = 0; f < d.flavors; ++f) t.push_back({1, r.phi(u, f)});
    for (int c = 0; c < d.clouds; ++c) t.push_back({-1, r.u(u, c)});
    add(m, std::move(t), Sense::Equal, 0, "eq19");
  }
  for (int u = 0; u < d.vnfis; ++u) {
    for (int c = 0; c < d.clouds; ++c) {
      for (int f = 0; f < d.flavors; ++f) {
        const int y = r.cucf(u, c, f);
        add(m, {{1, y}, {-1, r.u(u, c)}}, Sense::LessEqual, 0, "eq21");
        add(m, {{1, y}, {-1, r.phi(u, f)}}, Sense::LessEqual, 0, "eq22");
        add(m, {{1, y}, {-1, r.u(u, c)}, {-1, r.phi(u, f)}}, Sense::GreaterEqual, -1, "eq23");
      }
    }
  }
  const auto& kinds = s.topology().resource_kinds();
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    for (int c = 0; c < d.clouds; ++c) {
      std::vector<Term> t;
      for (int f = 0; f < d.flavors; ++f) {
        const auto demand = s.flavors().flavors[static_cast<std::size_t>(f)].demand[k];
        for (int u = 0; u < d.vnfis; ++u) t.push_back({demand, r.cucf(u, c, f)});
      }
      add(m, std::move(t), Sense::LessEqual, s.topology().clouds()[static_cast<std::size_t>(c)].capacity[k],
          "eq24");
    }
  }
}

void emit_delay_constraints(IlpModel& m, const Scenario& s) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  const auto& topo = s.topology();
  for (std::size_t k = 0; k < d.pairs.size(); ++k) {
    const auto& p = d.pairs[k];
    const int kk = static_cast<int>(k);
    for (int c1 = 0; c1 < d.clouds; ++c1) {
      for (int c2 = 0; c2 < d.clouds; ++c2) {
        if (c1 == c2) continue;
        const int y = r.ypair(kk, c1, c2);
        add(m, {{1, y}, {-1, r.yc(p.first, c1)}}, Sense::LessEqual, 0, "eq26");
        add(m, {{1, y}, {-1, r.yc(p.second, c2)}}, Sense::LessEqual, 0, "eq27");
        add(m, {{1, y}, {-1, r.yc(p.first, c1)}, {-1, r.yc(p.second, c2)}}, Sense::GreaterEqual, -1, "eq28");
      }
    }
    // Fhop = sum over c1 != c2 of W^L(c1, c2) * Ypair; same-cloud hops cost 0.
    std::vector<Term> t{{1, r.fhop(kk)}};
    for (int c1 = 0; c1 < d.clouds; ++c1)
      for (int c2 = 0; c2 < d.clouds; ++c2)
        if (c1 != c2) t.push_back({-topo.cloud_link(c1, c2).delay_ms, r.ypair(kk, c1, c2)});
    add(m, std::move(t), Sense::Equal, 0, "hopdef");
  }
  for (int q = 0; q < d.sfcs; ++q) {
    std::vector<Term> t;
    for (std::size_t k = 0; k < d.pairs.size(); ++k)
      if (d.pairs[k].sfc == q) t.push_back({1, r.fhop(static_cast<int>(k))});
    add(m, std::move(t), Sense::LessEqual, s.sfcs()[static_cast<std::size_t>(q)].max_delay_ms, "eq32");
  }
}

void emit_security_constraints(IlpModel& m, const Scenario& s) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  const auto& topo = s.topology();
  for (std::size_t k = 0; k < d.pairs.size(); ++k) {
    const int need = s.sfcs()[static_cast<std::size_t>(d.pairs[k].sfc)].min_security;
    for (int c1 = 0; c1 < d.clouds; ++c1)
      for (int c2 = 0; c2 < d.clouds; ++c2)
        if (c1 != c2)
          add(m, {{need, r.ypair(static_cast<int>(k), c1, c2)}}, Sense::LessEqual,
              topo.cloud_link(c1, c2).security_level, "eq33");
  }
}

void emit_extension_constraints(IlpModel& m, const Scenario& s) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  const auto& topo = s.topology();

  if (m.options.symmetry_breaking) {
    const auto& block = m.layout.vnfi_block_type;
    std::vector<int> block_start(static_cast<std::size_t>(d.types) + 2, 0);
    for (int u = d.vnfis - 1; u >= 0; --u) block_start[static_cast<std::size_t>(block[static_cast<std::size_t>(u)])] = u;
    // Each pool VNFI only takes its block's type.
    for (int u = 0; u < d.vnfis; ++u) {
      std::vector<Term> t;
      for (int ty = 1; ty <= d.types; ++ty)
        if (ty != block[static_cast<std::size_t>(u)]) t.push_back({1, r.a(u, ty)});
      if (!t.empty()) add(m, std::move(t), Sense::LessEqual, 0, "ext-symbreak");
    }
    // Open VNFIs form a prefix of their block.
    for (int u = 1; u < d.vnfis; ++u) {
      if (block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(u - 1)]) continue;
      std::vector<Term> t;
      for (int c = 0; c < d.clouds; ++c) t.push_back({1, r.u(u, c)});
      for (int c = 0; c < d.clouds; ++c) t.push_back({-1, r.u(u - 1, c)});
      add(m, std::move(t), Sense::LessEqual, 0, "ext-symbreak");
    }
    // The k-th VNF of a type may only use the first k+1 VNFIs of its block.
    std::vector<int> seen(static_cast<std::size_t>(d.types) + 1, 0);
    for (int v = 0; v < d.vnfs; ++v) {
      const int ty = s.vnf(static_cast<std::size_t>(v)).type;
      const int rank = seen[static_cast<std::size_t>(ty)]++;
      std::vector<Term> t;
      for (int u = 0; u < d.vnfis; ++u) {
        const bool in_block = block[static_cast<std::size_t>(u)] == ty;
        if (!in_block || u - block_start[static_cast<std::size_t>(ty)] > rank) t.push_back({1, r.x(v, u)});
      }
      if (!t.empty()) add(m, std::move(t), Sense::LessEqual, 0, "ext-symbreak");
    }
  }

  if (m.options.bandwidth) {
    for (int c1 = 0; c1 < d.clouds; ++c1) {
      for (int c2 = c1 + 1; c2 < d.clouds; ++c2) {
        std::vector<Term> t;
        for (std::size_t k = 0; k < d.pairs.size(); ++k) {
          const auto& traffic = s.sfcs()[static_cast<std::size_t>(d.pairs[k].sfc)].traffic_mbps;
          if (traffic.is_zero()) continue;
          t.push_back({traffic, r.ypair(static_cast<int>(k), c1, c2)});
          t.push_back({traffic, r.ypair(static_cast<int>(k), c2, c1)});
        }
        const auto& link = topo.cloud_link(c1, c2);
        add(m, std::move(t), Sense::LessEqual, link.unreachable ? Rational(0) : link.bandwidth_mbps,
            "ext-bandwidth");
      }
    }
  }

  if (m.options.endpoints) {
    // Worst endpoint delay from a set of nodes to cloud c; nullopt when any
    // endpoint cannot reach c.
    auto endpoint_delay = [&](const std::vector<std::string>& nodes, int c) -> std::optional<Rational> {
      Rational worst(0);
      const auto& cid = topo.clouds()[static_cast<std::size_t>(c)].id;
      for (const auto& n : nodes) {
        if (n == cid) continue;
        const LinkProps* l = topo.link(n, cid);
        if (l == nullptr || l->unreachable) return std::nullopt;
        worst = std::max(worst, l->delay_ms);
      }
      return worst;
    };
    for (int q = 0; q < d.sfcs; ++q) {
      const auto& sfc = s.sfcs()[static_cast<std::size_t>(q)];
      const int first = s.sfc_offset(q);
      const int last = first + static_cast<int>(sfc.vnfs.size()) - 1;
      std::vector<Term> t;
      for (std::size_t k = 0; k < d.pairs.size(); ++k)
        if (d.pairs[k].sfc == q) t.push_back({1, r.fhop(static_cast<int>(k))});
      for (int c = 0; c < d.clouds; ++c) {
        auto in = endpoint_delay(sfc.users, c);
        auto out = endpoint_delay(sfc.iot_domains, c);
        if (!in) add(m, {{1, r.yc(first, c)}}, Sense::LessEqual, 0, "ext-endpoints");
        if (!out) add(m, {{1, r.yc(last, c)}}, Sense::LessEqual, 0, "ext-endpoints");
        if (in && !in->is_zero()) t.push_back({*in, r.yc(first, c)});
        if (out && !out->is_zero()) t.push_back({*out, r.yc(last, c)});
      }
      add(m, std::move(t), Sense::LessEqual, sfc.max_delay_ms, "ext-endpoints");
    }
  }
}

void emit_objective(IlpModel& m, const Scenario& s) {
  const auto& r = m.vars;
  const auto& d = r.dims();
  m.objective.clear();
  for (int u = 0; u < d.vnfis; ++u)
    for (int f = 0; f < d.flavors; ++f)
      m.objective.push_back({s.flavors().flavors[static_cast<std::size_t>(f)].price, r.phi(u, f)});

  m.delay_objective.clear();
  for (std::size_t k = 0; k < d.pairs.size(); ++k) m.delay_objective.push_back({1, r.fhop(static_cast<int>(k))});
}

IlpModel build_model(const Scenario& input, const BuildOptions& options) {
  const Scenario scenario = input.normalized() ? input : normalize_types(input);
  IlpModel m;
  m.options = options;
  ModelDims dims;
  dims.vnfs = static_cast<int>(scenario.vnf_count());
  dims.vnfis = dims.vnfs;
  dims.sfcs = static_cast<int>(scenario.sfcs().size());
  dims.clouds = static_cast<int>(scenario.topology().cloud_count());
  dims.flavors = static_cast<int>(scenario.flavors().flavors.size());
  dims.types = scenario.type_count();
  dims.pairs = chain_pairs(scenario);
  m.vars = VarRegistry(dims);
  m.layout = make_layout(scenario, dims);
  m.scenario = std::make_shared<const Scenario>(scenario);

  emit_vnf_vnfi_constraints(m, scenario);
  emit_vnfi_cloud_constraints(m, scenario);
  emit_resource_constraints(m, scenario);
  emit_delay_constraints(m, scenario);
  emit_security_constraints(m, scenario);
  emit_extension_constraints(m, scenario);
  emit_objective(m, scenario);
  return m;
}

void check_integrity(const IlpModel& model) {
  const auto n = static_cast<int>(model.vars.size());
  auto check = [&](const std::vector<Term>& terms, const std::string& where) {
    for (const auto& t : terms)
      if (t.var < 0 || t.var >= n)
        throw IntegrityError(where + " references unregistered variable " + std::to_string(t.var));
  };
  for (std::size_t i = 0; i < model.constraints.size(); ++i)
    check(model.constraints[i].terms, "constraint " + std::to_string(i) + " (" + model.constraints[i].tag + ")");
  check(model.objective, "objective");
  check(model.delay_objective, "delay objective");
}

Rational evaluate(const std::vector<Term>& terms, const std::vector<Rational>& values) {
  Rational sum(0);
  for (const auto& t : terms) {
    const auto& v = values.at(static_cast<std::size_t>(t.var));
    if (!v.is_zero()) sum += t.coeff * v;
  }
  return sum;
}

bool satisfied(const LinearConstraint& row, const std::vector<Rational>& values) {
  const Rational lhs = evaluate(row.terms, values);
  switch (row.sense) {
    case Sense::LessEqual: return lhs <= row.rhs;
    case Sense::Equal: return lhs == row.rhs;
    case Sense::GreaterEqual: return lhs >= row.rhs;
  }
  return false;
}

const std::vector<std::string>& base_tags() {
  static const std::vector<std::string> tags{
      "eq1",  "eq2",  "eq3",  "eq5",  "eq6",  "eq7",  "eq8",  "eq9",  "eq10", "eq13", "eq14",
      "eq15", "eq16", "eq17", "eq18", "eq19", "eq21", "eq22", "eq23", "eq24", "eq26", "eq27",
      "eq28", "hopdef", "eq32", "eq33", "conflict"};
  return tags;
}

}  // namespace sfcplace
