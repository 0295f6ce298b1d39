#include "sfcplace/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sfcplace {
namespace {

struct Record {
  int vnf = -1;
  int cloud = -1;
  int flavor = -1;
};

int flavor_index(const Scenario& s, const std::string& id) {
  const auto& fl = s.flavors().flavors;
  for (std::size_t i = 0; i < fl.size(); ++i)
    if (fl[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<Record> resolve(const Scenario& s, const Placement& p) {
  std::vector<Record> out;
  for (const auto& va : p.vnfs) {
    Record r;
    auto v = s.vnf_index(va.vnf_id);
    if (!v) throw StructuralError("placement names unknown VNF '" + va.vnf_id + "'");
    auto c = s.topology().cloud_index(va.cloud_id);
    if (!c) throw StructuralError("placement names unknown cloud '" + va.cloud_id + "'");
    r.vnf = *v;
    r.cloud = *c;
    r.flavor = flavor_index(s, va.flavor_id);
    if (r.flavor < 0) throw StructuralError("placement names unknown flavor '" + va.flavor_id + "'");
    out.push_back(r);
  }
  return out;
}

bool conflicting(const Scenario& s, int a, int b) {
  const auto& ca = s.vnf(static_cast<std::size_t>(a)).conflicts;
  const auto& idb = s.vnf(static_cast<std::size_t>(b)).id;
  return std::find(ca.begin(), ca.end(), idb) != ca.end();
}

// Security of the hop between two clouds; 0 when the link is unusable.
int hop_security(const Topology& t, int c1, int c2) {
  if (c1 == c2) return t.max_security();
  const auto& l = t.cloud_link(c1, c2);
  return l.unreachable ? 0 : l.security_level;
}

std::optional<Rational> endpoint_delay(const Topology& t, const std::vector<std::string>& nodes, int c) {
  Rational worst(0);
  const auto& cid = t.clouds()[static_cast<std::size_t>(c)].id;
  for (const auto& n : nodes) {
    if (n == cid) continue;
    const LinkProps* l = t.link(n, cid);
    if (l == nullptr || l->unreachable) return std::nullopt;
    worst = std::max(worst, l->delay_ms);
  }
  return worst;
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::VnfAssignment: return "vnf-assignment";
    case ViolationKind::SfcSharing: return "sfc-sharing";
    case ViolationKind::TypeMix: return "type-mix";
    case ViolationKind::Conflict: return "conflict";
    case ViolationKind::VnfiInconsistent: return "vnfi-inconsistent";
    case ViolationKind::Capacity: return "capacity";
    case ViolationKind::Delay: return "delay";
    case ViolationKind::Security: return "security";
    case ViolationKind::Bandwidth: return "bandwidth";
    case ViolationKind::CostMismatch: return "cost-mismatch";
    case ViolationKind::DelayMismatch: return "delay-mismatch";
  }
  return "?";
}

const char* to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::MoveVnf: return "move-vnf";
    case MutationKind::SwapFlavor: return "swap-flavor";
    case MutationKind::InsecureHop: return "insecure-hop";
  }
  return "?";
}

std::vector<Violation> validate_solution(const Scenario& s, const Placement& p, const ValidationOptions& options) {
  const auto& topo = s.topology();
  const auto& flavors = s.flavors().flavors;
  const auto recs = resolve(s, p);
  std::vector<Violation> out;
  auto report = [&](ViolationKind k, std::string subject, std::string detail) {
    out.push_back({k, std::move(subject), std::move(detail)});
  };

  const std::size_t n = s.vnf_count();
  std::vector<int> seen(n, 0);
  std::vector<int> cloud_of(n, -1);
  for (const auto& r : recs) {
    if (seen[static_cast<std::size_t>(r.vnf)]++ == 0) cloud_of[static_cast<std::size_t>(r.vnf)] = r.cloud;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v] == 0) report(ViolationKind::VnfAssignment, s.vnf(v).id, "not placed");
    if (seen[v] > 1) report(ViolationKind::VnfAssignment, s.vnf(v).id, "placed " + std::to_string(seen[v]) + " times");
  }

  std::map<std::string, std::vector<std::size_t>> by_vnfi;
  for (std::size_t i = 0; i < recs.size(); ++i) by_vnfi[p.vnfs[i].vnfi_id].push_back(i);

  const std::size_t kinds = topo.resource_kinds().size();
  std::vector<ResourceVector> load(topo.cloud_count(), ResourceVector(kinds, 0));
  Rational cost(0);
  for (const auto& [id, members] : by_vnfi) {
    const Record& head = recs[members.front()];
    for (std::size_t i : members) {
      if (recs[i].cloud != head.cloud)
        report(ViolationKind::VnfiInconsistent, id, "hosted on more than one cloud");
      if (recs[i].flavor != head.flavor)
        report(ViolationKind::VnfiInconsistent, id, "uses more than one flavor");
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const int va = recs[members[a]].vnf, vb = recs[members[b]].vnf;
        if (va == vb) continue;
        const auto& sa = s.vnf(static_cast<std::size_t>(va));
        const auto& sb = s.vnf(static_cast<std::size_t>(vb));
        if (s.vnf_ref(static_cast<std::size_t>(va)).sfc == s.vnf_ref(static_cast<std::size_t>(vb)).sfc)
          report(ViolationKind::SfcSharing, id, sa.id + " and " + sb.id + " belong to the same SFC");
        if (sa.type_label != sb.type_label)
          report(ViolationKind::TypeMix, id, sa.id + " (" + sa.type_label + ") with " + sb.id + " (" + sb.type_label + ")");
        if (conflicting(s, va, vb)) report(ViolationKind::Conflict, id, sa.id + " conflicts with " + sb.id);
      }
    }
    const auto& f = flavors[static_cast<std::size_t>(head.flavor)];
    for (std::size_t k = 0; k < kinds; ++k) load[static_cast<std::size_t>(head.cloud)][k] += f.demand[k];
    cost += f.price;
  }
  for (std::size_t c = 0; c < topo.cloud_count(); ++c)
    for (std::size_t k = 0; k < kinds; ++k)
      if (load[c][k] > topo.clouds()[c].capacity[k])
        report(ViolationKind::Capacity, topo.clouds()[c].id,
               topo.resource_kinds()[k] + " load " + std::to_string(load[c][k]) + " exceeds capacity " +
                   std::to_string(topo.clouds()[c].capacity[k]));
  if (cost != p.total_cost)
    report(ViolationKind::CostMismatch, "total_cost", "reported " + p.total_cost.str() + ", flavors sum to " + cost.str());

  std::map<std::pair<int, int>, Rational> traffic;
  std::map<std::string, Rational> chain_delay;
  for (std::size_t q = 0; q < s.sfcs().size(); ++q) {
    const auto& sfc = s.sfcs()[q];
    const int off = s.sfc_offset(static_cast<int>(q));
    Rational delay(0);
    for (std::size_t i = 0; i + 1 < sfc.vnfs.size(); ++i) {
      const int c1 = cloud_of[static_cast<std::size_t>(off) + i];
      const int c2 = cloud_of[static_cast<std::size_t>(off) + i + 1];
      if (c1 < 0 || c2 < 0 || c1 == c2) continue;
      const auto& link = topo.cloud_link(c1, c2);
      delay += link.delay_ms;
      const int sec = hop_security(topo, c1, c2);
      if (sec < sfc.min_security)
        report(ViolationKind::Security, sfc.id,
               "hop " + sfc.vnfs[i].id + "->" + sfc.vnfs[i + 1].id + " crosses " + topo.clouds()[static_cast<std::size_t>(c1)].id +
                   "-" + topo.clouds()[static_cast<std::size_t>(c2)].id + " at level " + std::to_string(sec) +
                   " below " + std::to_string(sfc.min_security));
      traffic[{std::min(c1, c2), std::max(c1, c2)}] += sfc.traffic_mbps;
    }
    chain_delay[sfc.id] = delay;
    Rational total = delay;
    if (options.endpoints && !sfc.vnfs.empty()) {
      const int first = cloud_of[static_cast<std::size_t>(off)];
      const int last = cloud_of[static_cast<std::size_t>(off) + sfc.vnfs.size() - 1];
      if (first >= 0) {
        auto in = endpoint_delay(topo, sfc.users, first);
        if (!in) report(ViolationKind::Delay, sfc.id, "a user cannot reach the first VNF's cloud");
        else total += *in;
      }
      if (last >= 0) {
        auto eg = endpoint_delay(topo, sfc.iot_domains, last);
        if (!eg) report(ViolationKind::Delay, sfc.id, "the last VNF's cloud cannot reach an IoT domain");
        else total += *eg;
      }
    }
    if (total > sfc.max_delay_ms)
      report(ViolationKind::Delay, sfc.id, "delay " + total.decimal() + " ms exceeds " + sfc.max_delay_ms.decimal() + " ms");
  }
  if (options.bandwidth) {
    for (const auto& [pair, load_mbps] : traffic) {
      const auto& link = topo.cloud_link(pair.first, pair.second);
      const Rational cap = link.unreachable ? Rational(0) : link.bandwidth_mbps;
      if (load_mbps > cap)
        report(ViolationKind::Bandwidth,
               topo.clouds()[static_cast<std::size_t>(pair.first)].id + "-" + topo.clouds()[static_cast<std::size_t>(pair.second)].id,
               "traffic " + load_mbps.decimal() + " Mbps exceeds " + cap.decimal() + " Mbps");
    }
  }
  for (const auto& sum : p.sfcs) {
    auto it = chain_delay.find(sum.sfc_id);
    if (it == chain_delay.end()) throw StructuralError("placement names unknown SFC '" + sum.sfc_id + "'");
    if (it->second != sum.total_delay_ms)
      report(ViolationKind::DelayMismatch, sum.sfc_id,
             "reported " + sum.total_delay_ms.decimal() + " ms, topology gives " + it->second.decimal() + " ms");
  }
  return out;
}

BruteForceResult brute_force(const Scenario& s, const BruteForceLimits& limits, const ValidationOptions& options) {
  const auto& topo = s.topology();
  const auto& flavors = s.flavors().flavors;
  const int n = static_cast<int>(s.vnf_count());
  const int clouds = static_cast<int>(topo.cloud_count());
  const int nf = static_cast<int>(flavors.size());
  const std::uint64_t per_group = static_cast<std::uint64_t>(clouds) * static_cast<std::uint64_t>(nf);
  BruteForceResult result;

  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  auto compatible = [&](const std::vector<int>& g, int v) {
    const auto& sv = s.vnf(static_cast<std::size_t>(v));
    for (int w : g) {
      const auto& sw = s.vnf(static_cast<std::size_t>(w));
      if (sw.type_label != sv.type_label) return false;
      if (s.vnf_ref(static_cast<std::size_t>(w)).sfc == s.vnf_ref(static_cast<std::size_t>(v)).sfc) return false;
      if (conflicting(s, v, w)) return false;
    }
    return true;
  };
  // Restricted-growth enumeration of groupings; calls leaf() per grouping.
  std::function<bool(int, const std::function<bool()>&)> partitions = [&](int v, const std::function<bool()>& leaf) {
    if (v == n) return leaf();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!compatible(groups[g], v)) continue;
      groups[g].push_back(v);
      group_of[static_cast<std::size_t>(v)] = static_cast<int>(g);
      const bool go = partitions(v + 1, leaf);
      groups[g].pop_back();
      if (!go) return false;
    }
    groups.push_back({v});
    group_of[static_cast<std::size_t>(v)] = static_cast<int>(groups.size()) - 1;
    const bool go = partitions(v + 1, leaf);
    groups.pop_back();
    return go;
  };

  const std::uint64_t cap = limits.max_points;
  bool too_large = false;
  partitions(0, [&] {
    std::uint64_t points = 1;
    for (std::size_t k = 0; k < groups.size() && !too_large; ++k) {
      if (per_group != 0 && points > cap / per_group) too_large = true;
      points *= per_group;
    }
    if (too_large || result.space > cap - points) {
      too_large = true;
      return false;
    }
    result.space += points;
    return true;
  });
  if (too_large)
    throw SpaceTooLarge("search space exceeds " + std::to_string(cap) + " placements");
  if (n > 0 && per_group == 0) return result;

  std::vector<int> by_price(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) by_price[static_cast<std::size_t>(f)] = f;
  std::stable_sort(by_price.begin(), by_price.end(),
                   [&](int a, int b) { return flavors[static_cast<std::size_t>(a)].price < flavors[static_cast<std::size_t>(b)].price; });
  const Rational min_price = nf > 0 ? flavors[static_cast<std::size_t>(by_price.front())].price : Rational(0);

  const std::size_t kinds = topo.resource_kinds().size();
  std::optional<Rational> best;
  std::vector<int> g_cloud, g_flavor;
  std::vector<ResourceVector> resid;
  std::vector<Rational> delay(s.sfcs().size());

  // Chain hops between VNFs whose groups are both placed, checked as soon as
  // the later group gets its cloud. Delays are non-negative, so a partial
  // excess is final.
  auto hops_ok = [&](int g, std::vector<std::pair<int, Rational>>& added) {
    for (int v : groups[static_cast<std::size_t>(g)]) {
      const auto ref = s.vnf_ref(static_cast<std::size_t>(v));
      const auto& sfc = s.sfcs()[static_cast<std::size_t>(ref.sfc)];
      for (int w : {v - 1, v + 1}) {
        if (w < 0 || w >= n || s.vnf_ref(static_cast<std::size_t>(w)).sfc != ref.sfc) continue;
        const int gw = group_of[static_cast<std::size_t>(w)];
        if (gw > g || (gw == g && w < v)) continue;
        const int c1 = g_cloud[static_cast<std::size_t>(g)], c2 = g_cloud[static_cast<std::size_t>(gw)];
        if (c1 == c2) continue;
        if (hop_security(topo, c1, c2) < sfc.min_security) return false;
        const auto& d = topo.cloud_link(c1, c2).delay_ms;
        delay[static_cast<std::size_t>(ref.sfc)] += d;
        added.emplace_back(ref.sfc, d);
        if (!options.endpoints && delay[static_cast<std::size_t>(ref.sfc)] > sfc.max_delay_ms) return false;
      }
    }
    return true;
  };

  std::function<void(int, const Rational&)> place = [&](int g, const Rational& cost) {
    const int k = static_cast<int>(groups.size());
    if (best && cost + min_price * (k - g) >= *best) return;
    if (g == k) {
      Placement p;
      for (int v = 0; v < n; ++v) {
        const int gv = group_of[static_cast<std::size_t>(v)];
        p.vnfs.push_back({s.vnf(static_cast<std::size_t>(v)).id, "vnfi-" + std::to_string(gv),
                          topo.clouds()[static_cast<std::size_t>(g_cloud[static_cast<std::size_t>(gv)])].id,
                          flavors[static_cast<std::size_t>(g_flavor[static_cast<std::size_t>(gv)])].id, 0});
      }
      p.total_cost = cost;
      ++result.validated;
      if (!validate_solution(s, p, options).empty()) return;
      p.sfcs = summarize_sfcs(s, p);
      best = cost;
      result.placement = std::move(p);
      return;
    }
    for (int c = 0; c < clouds; ++c) {
      g_cloud[static_cast<std::size_t>(g)] = c;
      std::vector<std::pair<int, Rational>> added;
      const bool ok = hops_ok(g, added);
      if (ok) {
        for (int f : by_price) {
          const auto& fl = flavors[static_cast<std::size_t>(f)];
          auto& r = resid[static_cast<std::size_t>(c)];
          bool fits = true;
          for (std::size_t q = 0; q < kinds; ++q) fits = fits && fl.demand[q] <= r[q];
          if (!fits) continue;
          for (std::size_t q = 0; q < kinds; ++q) r[q] -= fl.demand[q];
          g_flavor[static_cast<std::size_t>(g)] = f;
          place(g + 1, cost + fl.price);
          for (std::size_t q = 0; q < kinds; ++q) r[q] += fl.demand[q];
        }
      }
      for (const auto& [q, d] : added) delay[static_cast<std::size_t>(q)] -= d;
    }
    g_cloud[static_cast<std::size_t>(g)] = -1;
  };

  partitions(0, [&] {
    const std::size_t k = groups.size();
    g_cloud.assign(k, -1);
    g_flavor.assign(k, -1);
    resid.clear();
    for (const auto& c : topo.clouds()) resid.push_back(c.capacity);
    std::fill(delay.begin(), delay.end(), Rational(0));
    place(0, Rational(0));
    return true;
  });

  if (best) {
    result.feasible = true;
    result.objective = best;
    // Report type codes consistent with the scenario's labels.
    std::map<std::string, int> code;
    for (auto& va : result.placement->vnfs) {
      const auto& label = s.vnf(static_cast<std::size_t>(*s.vnf_index(va.vnf_id))).type_label;
      va.type = code.try_emplace(label, static_cast<int>(code.size()) + 1).first->second;
    }
  }
  return result;
}

std::vector<Mutation> single_mutations(const Scenario& s, const Placement& p) {
  const auto& topo = s.topology();
  const auto& flavors = s.flavors().flavors;
  const auto recs = resolve(s, p);
  std::map<std::string, std::vector<std::size_t>> by_vnfi;
  for (std::size_t i = 0; i < recs.size(); ++i) by_vnfi[p.vnfs[i].vnfi_id].push_back(i);
  std::vector<Mutation> out;

  for (std::size_t i = 0; i < recs.size(); ++i) {
    const int v = recs[i].vnf;
    for (const auto& [id, members] : by_vnfi) {
      if (id == p.vnfs[i].vnfi_id) continue;
      bool clash = false;
      for (std::size_t j : members) {
        const int w = recs[j].vnf;
        clash = clash || s.vnf(static_cast<std::size_t>(w)).type_label != s.vnf(static_cast<std::size_t>(v)).type_label ||
                s.vnf_ref(static_cast<std::size_t>(w)).sfc == s.vnf_ref(static_cast<std::size_t>(v)).sfc ||
                conflicting(s, v, w);
      }
      if (!clash) continue;
      Mutation m{MutationKind::MoveVnf, "move " + p.vnfs[i].vnf_id + " onto " + id, p};
      const auto& host = p.vnfs[members.front()];
      m.placement.vnfs[i].vnfi_id = id;
      m.placement.vnfs[i].cloud_id = host.cloud_id;
      m.placement.vnfs[i].flavor_id = host.flavor_id;
      out.push_back(std::move(m));
      break;
    }
  }

  for (const auto& [id, members] : by_vnfi) {
    const auto& cur = flavors[static_cast<std::size_t>(recs[members.front()].flavor)];
    for (const auto& f : flavors) {
      if (f.price == cur.price) continue;
      Mutation m{MutationKind::SwapFlavor, "give " + id + " flavor " + f.id, p};
      for (std::size_t j : members) m.placement.vnfs[j].flavor_id = f.id;
      out.push_back(std::move(m));
      break;
    }
  }

  std::vector<int> cloud_of(s.vnf_count(), -1);
  for (const auto& r : recs) cloud_of[static_cast<std::size_t>(r.vnf)] = r.cloud;
  for (const auto& [id, members] : by_vnfi) {
    const int from = recs[members.front()].cloud;
    bool done = false;
    for (int c = 0; c < static_cast<int>(topo.cloud_count()) && !done; ++c) {
      if (c == from) continue;
      for (std::size_t j : members) {
        const int v = recs[j].vnf;
        const auto ref = s.vnf_ref(static_cast<std::size_t>(v));
        const auto& sfc = s.sfcs()[static_cast<std::size_t>(ref.sfc)];
        for (int w : {v - 1, v + 1}) {
          if (w < 0 || w >= static_cast<int>(s.vnf_count()) || s.vnf_ref(static_cast<std::size_t>(w)).sfc != ref.sfc) continue;
          const bool moves_too = std::any_of(members.begin(), members.end(), [&](std::size_t k) { return recs[k].vnf == w; });
          const int other = moves_too ? c : cloud_of[static_cast<std::size_t>(w)];
          if (other == c || hop_security(topo, c, other) >= sfc.min_security) continue;
          Mutation m{MutationKind::InsecureHop,
                     "move " + id + " to " + topo.clouds()[static_cast<std::size_t>(c)].id, p};
          for (std::size_t k : members) m.placement.vnfs[k].cloud_id = topo.clouds()[static_cast<std::size_t>(c)].id;
          out.push_back(std::move(m));
          done = true;
          break;
        }
        if (done) break;
      }
    }
  }
  return out;
}

}  // namespace sfcplace
