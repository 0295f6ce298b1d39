#include "sfcplace/model.hpp"

#include <algorithm>
#include <set>

namespace sfcplace {
namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

Topology::Topology(std::vector<std::string> resource_kinds, std::vector<CloudNode> clouds,
                   std::vector<std::string> access_nodes, std::vector<std::string> iot_domains,
                   std::vector<LinkSpec> links, int max_security)
    : resource_kinds_(std::move(resource_kinds)),
      clouds_(std::move(clouds)),
      access_nodes_(std::move(access_nodes)),
      iot_domains_(std::move(iot_domains)),
      links_(std::move(links)),
      max_security_(max_security) {
  if (max_security_ < 1) throw InputError("topology.max_security_level", "must be >= 1");

  std::set<std::string> seen;
  auto claim = [&](const std::string& id, const std::string& path) {
    if (id.empty()) throw InputError(path, "empty id");
    if (!seen.insert(id).second) throw InputError(path, "duplicate node id '" + id + "'");
  };
  for (std::size_t i = 0; i < clouds_.size(); ++i) {
    const auto path = at("topology.clouds", i);
    claim(clouds_[i].id, path + ".id");
    if (clouds_[i].capacity.size() != resource_kinds_.size())
      throw InputError(path + ".capacity", "resource kinds differ from the catalog's");
    for (std::size_t r = 0; r < resource_kinds_.size(); ++r)
      if (clouds_[i].capacity[r] < 0)
        throw InputError(path + ".capacity." + resource_kinds_[r], "negative capacity");
    cloud_lookup_.emplace(clouds_[i].id, static_cast<int>(i));
  }
  for (std::size_t i = 0; i < access_nodes_.size(); ++i)
    claim(access_nodes_[i], at("topology.access_nodes", i));
  for (std::size_t i = 0; i < iot_domains_.size(); ++i)
    claim(iot_domains_[i], at("topology.iot_domains", i));

  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto path = at("topology.links", i);
    const auto& l = links_[i];
    if (!seen.count(l.a)) throw InputError(path + ".a", "dangling id '" + l.a + "'");
    if (!seen.count(l.b)) throw InputError(path + ".b", "dangling id '" + l.b + "'");
    if (l.a == l.b) throw InputError(path, "self link");
    if (l.props.delay_ms.sign() < 0) throw InputError(path + ".delay_ms", "negative delay");
    if (l.props.bandwidth_mbps.sign() < 0)
      throw InputError(path + ".bandwidth_mbps", "negative bandwidth");
    if (!l.props.unreachable &&
        (l.props.security_level < 1 || l.props.security_level > max_security_))
      throw InputError(path + ".security_level",
                       "must be in [1, " + std::to_string(max_security_) + "]");
    if (!link_lookup_.emplace(ordered(l.a, l.b), i).second)
      throw InputError(path, "duplicate link " + l.a + "-" + l.b);
  }

  const std::size_t n = clouds_.size();
  cloud_matrix_.assign(n * n, LinkProps{});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto& cell = cloud_matrix_[a * n + b];
      if (a == b) {
        cell.security_level = max_security_;
        cell.bandwidth_mbps = Rational(0);
        continue;
      }
      const LinkProps* l = link(clouds_[a].id, clouds_[b].id);
      if (l == nullptr)
        throw InputError("topology.links",
                         "no link between clouds '" + clouds_[a].id + "' and '" + clouds_[b].id +
                             "' (declare it, or mark it unreachable)");
      cell = *l;
      if (cell.unreachable) cell.security_level = 0;
    }
  }
}

std::optional<int> Topology::cloud_index(const std::string& id) const {
  auto it = cloud_lookup_.find(id);
  if (it == cloud_lookup_.end()) return std::nullopt;
  return it->second;
}

bool Topology::has_node(const std::string& id) const {
  return cloud_lookup_.count(id) ||
         std::find(access_nodes_.begin(), access_nodes_.end(), id) != access_nodes_.end() ||
         std::find(iot_domains_.begin(), iot_domains_.end(), id) != iot_domains_.end();
}

const LinkProps& Topology::cloud_link(int c1, int c2) const {
  return cloud_matrix_[static_cast<std::size_t>(c1) * clouds_.size() + static_cast<std::size_t>(c2)];
}

const LinkProps* Topology::link(const std::string& a, const std::string& b) const {
  auto it = link_lookup_.find(ordered(a, b));
  return it == link_lookup_.end() ? nullptr : &links_[it->second].props;
}

Scenario::Scenario(Topology topology, std::vector<SfcRequest> sfcs, FlavorCatalog flavors)
    : topology_(std::move(topology)), sfcs_(std::move(sfcs)), flavors_(std::move(flavors)) {
  const auto& kinds = topology_.resource_kinds();
  if (flavors_.flavors.empty()) throw InputError("flavors", "at least one flavor is required");
  std::set<std::string> flavor_ids;
  for (std::size_t i = 0; i < flavors_.flavors.size(); ++i) {
    const auto path = at("flavors", i);
    const auto& f = flavors_.flavors[i];
    if (f.id.empty()) throw InputError(path + ".id", "empty id");
    if (!flavor_ids.insert(f.id).second) throw InputError(path + ".id", "duplicate flavor id '" + f.id + "'");
    if (f.price.sign() < 0) throw InputError(path + ".price", "negative price");
    if (f.demand.size() != kinds.size())
      throw InputError(path + ".demand", "resource kinds differ from the topology's");
    for (std::size_t r = 0; r < kinds.size(); ++r)
      if (f.demand[r] < 0) throw InputError(path + ".demand." + kinds[r], "negative demand");
  }

  std::set<std::string> sfc_ids;
  for (std::size_t s = 0; s < sfcs_.size(); ++s) {
    const auto path = at("sfcs", s);
    auto& sfc = sfcs_[s];
    if (sfc.id.empty()) throw InputError(path + ".id", "empty id");
    if (!sfc_ids.insert(sfc.id).second) throw InputError(path + ".id", "duplicate sfc id '" + sfc.id + "'");
    if (sfc.vnfs.empty()) throw InputError(path + ".vnfs", "an SFC needs at least one VNF");
    if (sfc.max_delay_ms.sign() <= 0) throw InputError(path + ".max_delay_ms", "must be positive");
    if (sfc.traffic_mbps.sign() < 0) throw InputError(path + ".traffic_mbps", "negative traffic");
    if (sfc.bandwidth_demand_mbps.sign() < 0)
      throw InputError(path + ".bandwidth_mbps", "negative bandwidth");
    if (sfc.min_security < 1 || sfc.min_security > topology_.max_security())
      throw InputError(path + ".min_security",
                       "must be in [1, " + std::to_string(topology_.max_security()) + "]");
    for (std::size_t u = 0; u < sfc.users.size(); ++u)
      if (!topology_.has_node(sfc.users[u]))
        throw InputError(at(path + ".users", u), "dangling id '" + sfc.users[u] + "'");
    for (std::size_t u = 0; u < sfc.iot_domains.size(); ++u)
      if (!topology_.has_node(sfc.iot_domains[u]))
        throw InputError(at(path + ".iot_domains", u), "dangling id '" + sfc.iot_domains[u] + "'");
  }

  index();

  // Conflict references, then symmetric closure.
  std::vector<std::set<std::string>> closed(refs_.size());
  for (std::size_t i = 0; i < refs_.size(); ++i) {
    const auto& v = vnf(i);
    const auto path = at(at("sfcs", refs_[i].sfc) + ".vnfs", refs_[i].pos) + ".conflicts";
    for (std::size_t k = 0; k < v.conflicts.size(); ++k) {
      const auto& other = v.conflicts[k];
      auto j = vnf_index(other);
      if (!j) throw InputError(at(path, k), "dangling id '" + other + "'");
      if (other == v.id) throw InputError(at(path, k), "a VNF cannot conflict with itself");
      closed[i].insert(other);
      closed[static_cast<std::size_t>(*j)].insert(v.id);
    }
  }
  for (std::size_t i = 0; i < refs_.size(); ++i) {
    auto& v = sfcs_[refs_[i].sfc].vnfs[refs_[i].pos];
    v.conflicts.assign(closed[i].begin(), closed[i].end());
  }

  // Type codes survive only when they already form a dense encoding.
  int max_code = 0;
  bool coded = !refs_.empty();
  for (std::size_t i = 0; i < refs_.size(); ++i) {
    if (vnf(i).type <= 0) coded = false;
    max_code = std::max(max_code, vnf(i).type);
  }
  type_count_ = coded ? max_code : 0;
}

void Scenario::index() {
  refs_.clear();
  offsets_.clear();
  vnf_lookup_.clear();
  for (std::size_t s = 0; s < sfcs_.size(); ++s) {
    offsets_.push_back(static_cast<int>(refs_.size()));
    for (std::size_t p = 0; p < sfcs_[s].vnfs.size(); ++p) {
      const auto& v = sfcs_[s].vnfs[p];
      const auto path = at(at("sfcs", s) + ".vnfs", p) + ".id";
      if (v.id.empty()) throw InputError(path, "empty id");
      if (!vnf_lookup_.emplace(v.id, static_cast<int>(refs_.size())).second)
        throw InputError(path, "duplicate vnf id '" + v.id + "'");
      refs_.push_back({static_cast<int>(s), static_cast<int>(p)});
    }
  }
}

std::optional<int> Scenario::vnf_index(const std::string& id) const {
  auto it = vnf_lookup_.find(id);
  if (it == vnf_lookup_.end()) return std::nullopt;
  return it->second;
}

Scenario Scenario::with_type_codes(const std::vector<int>& codes, int type_count) const {
  Scenario out = *this;
  for (std::size_t i = 0; i < refs_.size(); ++i)
    out.sfcs_[refs_[i].sfc].vnfs[refs_[i].pos].type = codes.at(i);
  out.type_count_ = type_count;
  return out;
}

Scenario normalize_types(const Scenario& scenario) {
  std::unordered_map<std::string, int> codes;
  std::vector<int> dense(scenario.vnf_count());
  for (std::size_t i = 0; i < scenario.vnf_count(); ++i) {
    const auto& label = scenario.vnf(i).type_label;
    auto [it, inserted] = codes.emplace(label, static_cast<int>(codes.size()) + 1);
    dense[i] = it->second;
  }
  return scenario.with_type_codes(dense, static_cast<int>(codes.size()));
}

}  // namespace sfcplace
