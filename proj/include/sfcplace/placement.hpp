#pragma once

#include <string>
#include <vector>

#include "sfcplace/model.hpp"
#include "sfcplace/rational.hpp"
#include "sfcplace/scenario_io.hpp"

namespace sfcplace {

struct VnfAssignment {
  std::string vnf_id;
  std::string vnfi_id;
  std::string cloud_id;
  std::string flavor_id;
  int type = 0;
};

struct SfcSummary {
  std::string sfc_id;
  Rational total_delay_ms;
  // Lowest security level over the hops the chain uses; intra-cloud hops
  // count as the topology maximum.
  int min_link_security_used = 0;
};

// A solved assignment in domain terms: VNF -> VNFI -> (cloud, flavor).
// VNFs appear in scenario order; the VNFI-to-VNF map is its inverse.
struct Placement {
  std::vector<VnfAssignment> vnfs;
  std::vector<SfcSummary> sfcs;
  Rational total_cost;
};

// Chain delay and weakest hop for every SFC, recomputed from the topology.
std::vector<SfcSummary> summarize_sfcs(const Scenario& scenario, const Placement& placement);

ordered_json placement_to_json(const Placement& placement);
Placement placement_from_json(const ordered_json& doc);

}  // namespace sfcplace
