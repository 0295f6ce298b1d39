#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sfcplace/rational.hpp"

namespace sfcplace {

inline constexpr int kDefaultMaxSecurity = 15;

// Malformed or inconsistent scenario input. The message starts with the
// field path of the offending value, e.g. "sfcs[0].vnfs[1].conflicts[0]".
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Units per resource kind, aligned with Topology::resource_kinds().
using ResourceVector = std::vector<std::int64_t>;

struct CloudNode {
  std::string id;
  ResourceVector capacity;
};

struct LinkProps {
  Rational delay_ms;
  Rational bandwidth_mbps;
  int security_level = 1;
  // A declared pair that cannot carry traffic. Treated as security level 0.
  bool unreachable = false;
};

struct LinkSpec {
  std::string a;
  std::string b;
  LinkProps props;
};

class Topology {
 public:
  Topology() = default;
  // Validates ids and link endpoints and precomputes the cloud-to-cloud
  // matrix. Every pair of distinct clouds needs a link entry (possibly
  // marked unreachable).
  Topology(std::vector<std::string> resource_kinds, std::vector<CloudNode> clouds,
           std::vector<std::string> access_nodes, std::vector<std::string> iot_domains,
           std::vector<LinkSpec> links, int max_security = kDefaultMaxSecurity);

  const std::vector<std::string>& resource_kinds() const { return resource_kinds_; }
  const std::vector<CloudNode>& clouds() const { return clouds_; }
  const std::vector<std::string>& access_nodes() const { return access_nodes_; }
  const std::vector<std::string>& iot_domains() const { return iot_domains_; }
  const std::vector<LinkSpec>& links() const { return links_; }
  int max_security() const { return max_security_; }

  std::size_t cloud_count() const { return clouds_.size(); }
  std::optional<int> cloud_index(const std::string& id) const;
  bool has_node(const std::string& id) const;

  // Link between two clouds by index. (c, c) is the intra-cloud hop: zero
  // delay, maximal security, unbounded bandwidth.
  const LinkProps& cloud_link(int c1, int c2) const;
  // Link between any two nodes by id; nullptr when no entry exists.
  const LinkProps* link(const std::string& a, const std::string& b) const;

 private:
  std::vector<std::string> resource_kinds_;
  std::vector<CloudNode> clouds_;
  std::vector<std::string> access_nodes_;
  std::vector<std::string> iot_domains_;
  std::vector<LinkSpec> links_;
  int max_security_ = kDefaultMaxSecurity;

  std::unordered_map<std::string, int> cloud_lookup_;
  std::map<std::pair<std::string, std::string>, std::size_t> link_lookup_;
  std::vector<LinkProps> cloud_matrix_;
};

struct VnfSpec {
  std::string id;
  // Label as given in the input ("firewall", "3", ...).
  std::string type_label;
  // Dense code in 1..type_count once normalize_types has run, 0 before.
  int type = 0;
  std::vector<std::string> conflicts;
};

struct SfcRequest {
  std::string id;
  std::vector<VnfSpec> vnfs;
  Rational traffic_mbps;
  Rational max_delay_ms;
  int min_security = 1;
  std::vector<std::string> users;
  // Egress endpoints; only read when endpoint delays are enabled.
  std::vector<std::string> iot_domains;
  Rational bandwidth_demand_mbps;
};

struct Flavor {
  std::string id;
  ResourceVector demand;
  Rational price;
};

struct FlavorCatalog {
  std::vector<Flavor> flavors;
};

// Position of a VNF inside the scenario: SFC index and chain position.
struct VnfRef {
  int sfc = 0;
  int pos = 0;
};

class Scenario {
 public:
  Scenario() = default;
  // Validates every cross-reference and applies the symmetric closure to
  // conflict sets. Throws InputError.
  Scenario(Topology topology, std::vector<SfcRequest> sfcs, FlavorCatalog flavors);

  const Topology& topology() const { return topology_; }
  const std::vector<SfcRequest>& sfcs() const { return sfcs_; }
  const FlavorCatalog& flavors() const { return flavors_; }

  // VNFs in global order: SFC by SFC, chain order within each SFC.
  std::size_t vnf_count() const { return refs_.size(); }
  const VnfRef& vnf_ref(std::size_t i) const { return refs_[i]; }
  const VnfSpec& vnf(std::size_t i) const { return sfcs_[refs_[i].sfc].vnfs[refs_[i].pos]; }
  std::optional<int> vnf_index(const std::string& id) const;
  // Global index of the first VNF of each SFC.
  int sfc_offset(int sfc) const { return offsets_[sfc]; }

  bool normalized() const { return type_count_ > 0 || refs_.empty(); }
  int type_count() const { return type_count_; }

  // Replaces type codes; used by normalize_types.
  Scenario with_type_codes(const std::vector<int>& codes, int type_count) const;

 private:
  void index();

  Topology topology_;
  std::vector<SfcRequest> sfcs_;
  FlavorCatalog flavors_;
  int type_count_ = 0;

  std::vector<VnfRef> refs_;
  std::vector<int> offsets_;
  std::unordered_map<std::string, int> vnf_lookup_;
};

// Re-encodes type labels as dense codes 1..|types| in order of first
// appearance. Equal labels get equal codes.
Scenario normalize_types(const Scenario& scenario);

}  // namespace sfcplace
