#include "sfcplace/placement.hpp"

#include <algorithm>
#include <map>

namespace sfcplace {

std::vector<SfcSummary> summarize_sfcs(const Scenario& s, const Placement& placement) {
  const auto& topo = s.topology();
  std::map<std::string, int> cloud_of;
  for (const auto& va : placement.vnfs)
    if (auto c = topo.cloud_index(va.cloud_id)) cloud_of[va.vnf_id] = *c;
  std::vector<SfcSummary> out;
  for (const auto& sfc : s.sfcs()) {
    SfcSummary sum;
    sum.sfc_id = sfc.id;
    sum.min_link_security_used = topo.max_security();
    for (std::size_t p = 0; p + 1 < sfc.vnfs.size(); ++p) {
      auto a = cloud_of.find(sfc.vnfs[p].id);
      auto b = cloud_of.find(sfc.vnfs[p + 1].id);
      if (a == cloud_of.end() || b == cloud_of.end()) continue;
      const auto& link = topo.cloud_link(a->second, b->second);
      sum.total_delay_ms += link.delay_ms;
      sum.min_link_security_used = std::min(sum.min_link_security_used, link.security_level);
    }
    out.push_back(std::move(sum));
  }
  return out;
}

ordered_json placement_to_json(const Placement& p) {
  ordered_json out = ordered_json::object();
  out["total_cost"] = rational_to_json(p.total_cost);
  out["total_cost_exact"] = p.total_cost.str();
  ordered_json vnfs = ordered_json::array();
  for (const auto& v : p.vnfs)
    vnfs.push_back(ordered_json{{"vnf", v.vnf_id},
                                {"vnfi", v.vnfi_id},
                                {"cloud", v.cloud_id},
                                {"flavor", v.flavor_id},
                                {"type", v.type}});
  out["vnfs"] = std::move(vnfs);
  ordered_json sfcs = ordered_json::array();
  for (const auto& s : p.sfcs)
    sfcs.push_back(ordered_json{{"sfc", s.sfc_id},
                                {"total_delay_ms", rational_to_json(s.total_delay_ms)},
                                {"total_delay_ms_exact", s.total_delay_ms.str()},
                                {"min_link_security", s.min_link_security_used}});
  out["sfcs"] = std::move(sfcs);
  return out;
}

Placement placement_from_json(const ordered_json& doc) {
  auto number = [](const ordered_json& j, const char* key, const char* exact_key) {
    if (j.contains(exact_key) && j[exact_key].is_string()) return Rational::parse(j[exact_key].get<std::string>());
    const auto& v = j.at(key);
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    return Rational::from_double(v.get<double>());
  };
  try {
    Placement p;
    p.total_cost = number(doc, "total_cost", "total_cost_exact");
    for (const auto& v : doc.at("vnfs")) {
      VnfAssignment va;
      va.vnf_id = v.at("vnf").get<std::string>();
      va.vnfi_id = v.at("vnfi").get<std::string>();
      va.cloud_id = v.at("cloud").get<std::string>();
      va.flavor_id = v.at("flavor").get<std::string>();
      if (v.contains("type")) va.type = v["type"].get<int>();
      p.vnfs.push_back(std::move(va));
    }
    if (doc.contains("sfcs")) {
      for (const auto& s : doc["sfcs"]) {
        SfcSummary sum;
        sum.sfc_id = s.at("sfc").get<std::string>();
        sum.total_delay_ms = number(s, "total_delay_ms", "total_delay_ms_exact");
        if (s.contains("min_link_security")) sum.min_link_security_used = s["min_link_security"].get<int>();
        p.sfcs.push_back(std::move(sum));
      }
    }
    return p;
  } catch (const ordered_json::exception& e) {
    throw InputError("solution", e.what());
  }
}

}  // namespace sfcplace
