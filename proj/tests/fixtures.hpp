#pragma once

#include <string>

#include "sfcplace/model.hpp"
#include "sfcplace/scenario_io.hpp"
#include "sfcplace/scenarios.hpp"

namespace fixtures {

// One cloud, one single-VNF chain, two flavors that both fit.
inline const char* kOneVnf = R"({
  "topology": {
    "clouds": [{"id": "edge", "capacity": {"cpu": 8, "ram": 16, "storage": 100}}],
    "access_nodes": ["ran"], "iot_domains": ["iot"], "links": []
  },
  "sfcs": [{"id": "s", "traffic_mbps": 5, "max_delay_ms": 10, "min_security": 3,
            "users": ["ran"], "iot_domains": ["iot"],
            "vnfs": [{"id": "fw", "type": "firewall"}]}],
  "flavors": [
    {"id": "big", "demand": {"cpu": 4, "ram": 8, "storage": 40}, "price": 5},
    {"id": "small", "demand": {"cpu": 2, "ram": 4, "storage": 20}, "price": 3}
  ]
})";

// Two clouds that each hold one VNFI, joined by a link below the chain's
// security level.
inline const char* kInsecure = R"({
  "topology": {
    "clouds": [{"id": "c0", "capacity": {"cpu": 4, "ram": 8, "storage": 40}},
               {"id": "c1", "capacity": {"cpu": 4, "ram": 8, "storage": 40}}],
    "access_nodes": ["ran0"], "iot_domains": ["iot0"],
    "links": [{"a": "c0", "b": "c1", "delay_ms": 2, "bandwidth_mbps": 1000, "security_level": 2}]
  },
  "sfcs": [{"id": "sfc0", "traffic_mbps": 10, "max_delay_ms": 50, "min_security": 8,
            "users": ["ran0"], "iot_domains": ["iot0"],
            "vnfs": [{"id": "fw", "type": "firewall"}, {"id": "nat", "type": "nat"}]}],
  "flavors": [{"id": "small", "demand": {"cpu": 4, "ram": 8, "storage": 40}, "price": 3}]
})";

// Three clouds, two types, two flavors, a conflict and chains of length
// two and three.
inline const char* kFeatureComplete = R"({
  "topology": {
    "clouds": [{"id": "a", "capacity": {"cpu": 6, "ram": 12, "storage": 60}},
               {"id": "b", "capacity": {"cpu": 4, "ram": 8, "storage": 40}},
               {"id": "c", "capacity": {"cpu": 8, "ram": 16, "storage": 80}}],
    "access_nodes": ["ran"], "iot_domains": ["iot"],
    "links": [{"a": "a", "b": "b", "delay_ms": 1.5, "bandwidth_mbps": 100, "security_level": 9},
              {"a": "a", "b": "c", "delay_ms": 3, "bandwidth_mbps": 200, "security_level": 4},
              {"a": "b", "b": "c", "delay_ms": 2.5, "bandwidth_mbps": 150, "security_level": 12},
              {"a": "ran", "b": "a", "delay_ms": 1, "bandwidth_mbps": 500, "security_level": 15},
              {"a": "c", "b": "iot", "delay_ms": 1, "bandwidth_mbps": 500, "security_level": 15}]
  },
  "sfcs": [
    {"id": "video", "traffic_mbps": 40, "max_delay_ms": 6, "min_security": 5,
     "users": ["ran"], "iot_domains": ["iot"],
     "vnfs": [{"id": "v-fw", "type": "fw"}, {"id": "v-dpi", "type": "dpi"}, {"id": "v-fw2", "type": "fw"}]},
    {"id": "telemetry", "traffic_mbps": 10, "max_delay_ms": 4, "min_security": 3,
     "users": ["ran"], "iot_domains": ["iot"],
     "vnfs": [{"id": "t-fw", "type": "fw", "conflicts": ["v-fw"]}, {"id": "t-dpi", "type": "dpi"}]}
  ],
  "flavors": [
    {"id": "s", "demand": {"cpu": 2, "ram": 4, "storage": 20}, "price": 2},
    {"id": "m", "demand": {"cpu": 4, "ram": 8, "storage": 40}, "price": 3}
  ]
})";

inline sfcplace::Scenario load(const char* doc) { return sfcplace::normalize_types(sfcplace::load_bundle(doc)); }

// The small random instances used for oracle comparisons.
inline sfcplace::GenConfig tiny_config(std::uint64_t seed) {
  sfcplace::GenConfig g;
  g.seed = seed;
  g.n_clouds = 1 + static_cast<int>(seed % 3);
  g.n_sfcs = 1 + static_cast<int>(seed % 2);
  g.chain_len = {1, 3};
  g.n_types = 2;
  g.n_flavors = 2;
  g.conflict_prob = 0.3;
  return g;
}

}  // namespace fixtures
