#include "sfcplace/assignment.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sfcplace {
namespace {

bool is_one(const std::vector<Rational>& a, int var) {
  return a.at(static_cast<std::size_t>(var)) == Rational(1);
}

std::string vnfi_name(int u) { return "vnfi-" + std::to_string(u); }

}  // namespace

Placement decode_placement(const IlpModel& model, const std::vector<Rational>& assignment) {
  const auto& r = model.vars;
  const auto& d = r.dims();
  const Scenario& s = *model.scenario;
  const auto& topo = s.topology();
  Placement p;
  std::vector<int> cloud_of(static_cast<std::size_t>(d.vnfs), -1);
  for (int v = 0; v < d.vnfs; ++v) {
    VnfAssignment va;
    va.vnf_id = s.vnf(static_cast<std::size_t>(v)).id;
    int u = -1;
    for (int k = 0; k < d.vnfis && u < 0; ++k)
      if (is_one(assignment, r.x(v, k))) u = k;
    if (u >= 0) {
      va.vnfi_id = vnfi_name(u);
      for (int c = 0; c < d.clouds; ++c)
        if (is_one(assignment, r.u(u, c))) {
          va.cloud_id = topo.clouds()[static_cast<std::size_t>(c)].id;
          cloud_of[static_cast<std::size_t>(v)] = c;
        }
      for (int f = 0; f < d.flavors; ++f)
        if (is_one(assignment, r.phi(u, f))) va.flavor_id = s.flavors().flavors[static_cast<std::size_t>(f)].id;
      for (int t = 1; t <= d.types; ++t)
        if (is_one(assignment, r.a(u, t))) va.type = t;
    }
    p.vnfs.push_back(std::move(va));
  }
  for (int q = 0; q < d.sfcs; ++q) {
    SfcSummary sum;
    sum.sfc_id = s.sfcs()[static_cast<std::size_t>(q)].id;
    sum.min_link_security_used = topo.max_security();
    for (std::size_t k = 0; k < d.pairs.size(); ++k) {
      const auto& pr = d.pairs[k];
      if (pr.sfc != q) continue;
      sum.total_delay_ms += assignment.at(static_cast<std::size_t>(r.fhop(static_cast<int>(k))));
      const int c1 = cloud_of[static_cast<std::size_t>(pr.first)];
      const int c2 = cloud_of[static_cast<std::size_t>(pr.second)];
      if (c1 >= 0 && c2 >= 0)
        sum.min_link_security_used = std::min(sum.min_link_security_used, topo.cloud_link(c1, c2).security_level);
    }
    p.sfcs.push_back(std::move(sum));
  }
  for (const auto& t : model.objective) p.total_cost += t.coeff * assignment.at(static_cast<std::size_t>(t.var));
  return p;
}

std::vector<Rational> encode_placement(const IlpModel& model, const Placement& placement) {
  const auto& r = model.vars;
  const auto& d = r.dims();
  const Scenario& s = *model.scenario;
  const auto& topo = s.topology();

  if (placement.vnfs.size() != s.vnf_count())
    throw std::invalid_argument("placement does not cover every VNF exactly once");

  struct Group {
    int min_vnf = 0;
    int type = 0;
    int cloud = -1;
    int flavor = -1;
    std::vector<int> members;
  };
  std::map<std::string, Group> groups;
  for (const auto& va : placement.vnfs) {
    auto v = s.vnf_index(va.vnf_id);
    if (!v) throw std::invalid_argument("unknown VNF '" + va.vnf_id + "'");
    auto c = topo.cloud_index(va.cloud_id);
    if (!c) throw std::invalid_argument("unknown cloud '" + va.cloud_id + "'");
    int f = -1;
    for (std::size_t i = 0; i < s.flavors().flavors.size(); ++i)
      if (s.flavors().flavors[i].id == va.flavor_id) f = static_cast<int>(i);
    if (f < 0) throw std::invalid_argument("unknown flavor '" + va.flavor_id + "'");
    auto [it, fresh] = groups.try_emplace(va.vnfi_id);
    Group& g = it->second;
    const int type = s.vnf(static_cast<std::size_t>(*v)).type;
    if (fresh) {
      g.min_vnf = *v;
      g.type = type;
      g.cloud = *c;
      g.flavor = f;
    } else if (g.type != type || g.cloud != *c || g.flavor != f) {
      throw std::invalid_argument("VNFI '" + va.vnfi_id + "' is inconsistent across its VNFs");
    }
    g.min_vnf = std::min(g.min_vnf, *v);
    g.members.push_back(*v);
  }

  const auto& block = model.layout.vnfi_block_type;
  std::vector<std::vector<const Group*>> by_type(static_cast<std::size_t>(d.types) + 1);
  for (const auto& [id, g] : groups) by_type[static_cast<std::size_t>(g.type)].push_back(&g);
  std::vector<int> pool_of_vnf(static_cast<std::size_t>(d.vnfs), -1);
  std::vector<int> cloud_of_u(static_cast<std::size_t>(d.vnfis), -1), flavor_of_u(static_cast<std::size_t>(d.vnfis), -1);
  std::vector<int> type_of_u(static_cast<std::size_t>(d.vnfis), 0);
  for (int t = 1; t <= d.types; ++t) {
    auto& list = by_type[static_cast<std::size_t>(t)];
    std::sort(list.begin(), list.end(), [](const Group* a, const Group* b) { return a->min_vnf < b->min_vnf; });
    const int start = static_cast<int>(std::find(block.begin(), block.end(), t) - block.begin());
    const int size = static_cast<int>(std::count(block.begin(), block.end(), t));
    if (static_cast<int>(list.size()) > size) throw std::invalid_argument("more VNFIs of a type than VNFs");
    for (std::size_t rank = 0; rank < list.size(); ++rank) {
      const int u = start + static_cast<int>(rank);
      cloud_of_u[static_cast<std::size_t>(u)] = list[rank]->cloud;
      flavor_of_u[static_cast<std::size_t>(u)] = list[rank]->flavor;
      type_of_u[static_cast<std::size_t>(u)] = t;
      for (int v : list[rank]->members) pool_of_vnf[static_cast<std::size_t>(v)] = u;
    }
  }

  std::vector<Rational> a(r.size(), Rational(0));
  auto set = [&](int var, Rational value = 1) { a[static_cast<std::size_t>(var)] = value; };
  for (int v = 0; v < d.vnfs; ++v) {
    const int u = pool_of_vnf[static_cast<std::size_t>(v)];
    const int c = cloud_of_u[static_cast<std::size_t>(u)];
    set(r.x(v, u));
    set(r.b(s.vnf_ref(static_cast<std::size_t>(v)).sfc, u));
    set(r.yc(v, c));
    set(r.yvuc(v, u, c));
  }
  for (int u = 0; u < d.vnfis; ++u) {
    const int c = cloud_of_u[static_cast<std::size_t>(u)];
    if (c < 0) continue;
    const int f = flavor_of_u[static_cast<std::size_t>(u)];
    set(r.a(u, type_of_u[static_cast<std::size_t>(u)]));
    set(r.u(u, c));
    set(r.phi(u, f));
    set(r.cucf(u, c, f));
  }
  for (std::size_t k = 0; k < d.pairs.size(); ++k) {
    const auto& pr = d.pairs[k];
    const int c1 = cloud_of_u[static_cast<std::size_t>(pool_of_vnf[static_cast<std::size_t>(pr.first)])];
    const int c2 = cloud_of_u[static_cast<std::size_t>(pool_of_vnf[static_cast<std::size_t>(pr.second)])];
    if (c1 != c2) {
      set(r.ypair(static_cast<int>(k), c1, c2));
      set(r.fhop(static_cast<int>(k)), topo.cloud_link(c1, c2).delay_ms);
    }
  }
  return a;
}

}  // namespace sfcplace
