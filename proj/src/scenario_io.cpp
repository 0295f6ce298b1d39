#include "sfcplace/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sfcplace {
namespace {

using json = ordered_json;

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

json parse_doc(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what, std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key, "missing field");
  return *it;
}

std::string get_id(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  throw InputError(path, "expected a string id");
}

Rational get_number(const json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned()) return Rational(static_cast<std::int64_t>(v.get<std::uint64_t>()));
      return Rational(v.get<std::int64_t>());
    }
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(path, e.what());
  }
  throw InputError(path, "expected a number");
}

std::int64_t get_integer(const json& v, const std::string& path) {
  Rational r = get_number(v, path);
  if (!r.is_integer()) throw InputError(path, "expected an integer");
  return r.num();
}

std::vector<std::string> get_ids(const json& obj, const char* key, const std::string& path,
                                 bool optional) {
  std::vector<std::string> out;
  if (optional && (!obj.is_object() || !obj.contains(key))) return out;
  const json& arr = require(obj, key, path);
  const auto p = path + "." + key;
  if (!arr.is_array()) throw InputError(p, "expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_id(arr[i], at(p, i)));
  return out;
}

ResourceVector get_resources(const json& obj, const std::string& path,
                             std::vector<std::string>& kinds) {
  if (!obj.is_object()) throw InputError(path, "expected an object of resource amounts");
  std::vector<std::string> keys;
  for (auto it = obj.begin(); it != obj.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  if (kinds.empty()) kinds = keys;
  if (keys != kinds) throw InputError(path, "resource kinds differ from other entries");
  ResourceVector out;
  for (const auto& k : kinds) {
    auto v = get_integer(obj.at(k), path + "." + k);
    if (v < 0) throw InputError(path + "." + k, "negative amount");
    out.push_back(v);
  }
  return out;
}

std::string type_label(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw InputError(path, "expected a type name or integer code");
}

}  // namespace

ordered_json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_double();
}

Scenario scenario_from_json(const json& topo, const json& sfcs_doc, const json& flavors_doc) {
  std::vector<std::string> kinds;

  // Flavors first so that an empty cloud list still fixes resource kinds.
  FlavorCatalog catalog;
  if (!flavors_doc.is_array()) throw InputError("flavors", "expected an array");
  for (std::size_t i = 0; i < flavors_doc.size(); ++i) {
    const auto path = at("flavors", i);
    const auto& f = flavors_doc[i];
    Flavor flavor;
    flavor.id = get_id(require(f, "id", path), path + ".id");
    flavor.price = get_number(require(f, "price", path), path + ".price");
    flavor.demand = get_resources(require(f, "demand", path), path + ".demand", kinds);
    catalog.flavors.push_back(std::move(flavor));
  }

  if (!topo.is_object()) throw InputError("topology", "expected an object");
  int max_security = kDefaultMaxSecurity;
  if (topo.contains("max_security_level"))
    max_security = static_cast<int>(get_integer(topo["max_security_level"], "topology.max_security_level"));

  std::vector<CloudNode> clouds;
  const json& clouds_doc = require(topo, "clouds", "topology");
  if (!clouds_doc.is_array()) throw InputError("topology.clouds", "expected an array");
  for (std::size_t i = 0; i < clouds_doc.size(); ++i) {
    const auto path = at("topology.clouds", i);
    CloudNode c;
    c.id = get_id(require(clouds_doc[i], "id", path), path + ".id");
    c.capacity = get_resources(require(clouds_doc[i], "capacity", path), path + ".capacity", kinds);
    clouds.push_back(std::move(c));
  }
  auto access = get_ids(topo, "access_nodes", "topology", true);
  auto iot = get_ids(topo, "iot_domains", "topology", true);

  std::vector<LinkSpec> links;
  if (topo.contains("links")) {
    const json& links_doc = topo["links"];
    if (!links_doc.is_array()) throw InputError("topology.links", "expected an array");
    for (std::size_t i = 0; i < links_doc.size(); ++i) {
      const auto path = at("topology.links", i);
      const auto& l = links_doc[i];
      LinkSpec spec;
      spec.a = get_id(require(l, "a", path), path + ".a");
      spec.b = get_id(require(l, "b", path), path + ".b");
      if (l.contains("unreachable")) {
        if (!l["unreachable"].is_boolean()) throw InputError(path + ".unreachable", "expected a boolean");
        spec.props.unreachable = l["unreachable"].get<bool>();
      }
      if (spec.props.unreachable) {
        spec.props.security_level = 0;
      } else {
        spec.props.delay_ms = get_number(require(l, "delay_ms", path), path + ".delay_ms");
        spec.props.bandwidth_mbps = get_number(require(l, "bandwidth_mbps", path), path + ".bandwidth_mbps");
        spec.props.security_level =
            static_cast<int>(get_integer(require(l, "security_level", path), path + ".security_level"));
      }
      links.push_back(std::move(spec));
    }
  }
  Topology topology(kinds, std::move(clouds), std::move(access), std::move(iot), std::move(links),
                    max_security);

  std::vector<SfcRequest> sfcs;
  if (!sfcs_doc.is_array()) throw InputError("sfcs", "expected an array");
  for (std::size_t s = 0; s < sfcs_doc.size(); ++s) {
    const auto path = at("sfcs", s);
    const auto& d = sfcs_doc[s];
    SfcRequest sfc;
    sfc.id = get_id(require(d, "id", path), path + ".id");
    sfc.traffic_mbps = get_number(require(d, "traffic_mbps", path), path + ".traffic_mbps");
    sfc.max_delay_ms = get_number(require(d, "max_delay_ms", path), path + ".max_delay_ms");
    sfc.min_security = static_cast<int>(get_integer(require(d, "min_security", path), path + ".min_security"));
    sfc.users = get_ids(d, "users", path, true);
    sfc.iot_domains = get_ids(d, "iot_domains", path, true);
    if (d.contains("bandwidth_mbps"))
      sfc.bandwidth_demand_mbps = get_number(d["bandwidth_mbps"], path + ".bandwidth_mbps");
    const json& vnfs = require(d, "vnfs", path);
    if (!vnfs.is_array()) throw InputError(path + ".vnfs", "expected an array");
    for (std::size_t p = 0; p < vnfs.size(); ++p) {
      const auto vpath = at(path + ".vnfs", p);
      VnfSpec v;
      v.id = get_id(require(vnfs[p], "id", vpath), vpath + ".id");
      v.type_label = type_label(require(vnfs[p], "type", vpath), vpath + ".type");
      v.conflicts = get_ids(vnfs[p], "conflicts", vpath, true);
      sfc.vnfs.push_back(std::move(v));
    }
    sfcs.push_back(std::move(sfc));
  }

  return Scenario(std::move(topology), std::move(sfcs), std::move(catalog));
}

Scenario load_scenario(std::string_view topology_doc, std::string_view sfcs_doc,
                       std::string_view flavors_doc) {
  return scenario_from_json(parse_doc(topology_doc, "topology"), parse_doc(sfcs_doc, "sfcs"),
                            parse_doc(flavors_doc, "flavors"));
}

Scenario load_bundle(std::string_view bundle_doc) {
  json doc = parse_doc(bundle_doc, "bundle");
  return scenario_from_json(require(doc, "topology", "bundle"), require(doc, "sfcs", "bundle"),
                            require(doc, "flavors", "bundle"));
}

Scenario load_scenario_files(const std::filesystem::path& topology, const std::filesystem::path& sfcs,
                             const std::filesystem::path& flavors) {
  return load_scenario(read_text_file(topology), read_text_file(sfcs), read_text_file(flavors));
}

Scenario load_bundle_file(const std::filesystem::path& bundle) {
  return load_bundle(read_text_file(bundle));
}

namespace {

json resources_to_json(const std::vector<std::string>& kinds, const ResourceVector& v) {
  json out = json::object();
  for (std::size_t r = 0; r < kinds.size(); ++r) out[kinds[r]] = v[r];
  return out;
}

}  // namespace

ordered_json topology_to_json(const Topology& topology) {
  json out = json::object();
  out["max_security_level"] = topology.max_security();
  json clouds = json::array();
  for (const auto& c : topology.clouds())
    clouds.push_back(json{{"id", c.id}, {"capacity", resources_to_json(topology.resource_kinds(), c.capacity)}});
  out["clouds"] = std::move(clouds);
  out["access_nodes"] = topology.access_nodes();
  out["iot_domains"] = topology.iot_domains();
  json links = json::array();
  for (const auto& l : topology.links()) {
    json entry{{"a", l.a}, {"b", l.b}};
    if (l.props.unreachable) {
      entry["unreachable"] = true;
    } else {
      entry["delay_ms"] = rational_to_json(l.props.delay_ms);
      entry["bandwidth_mbps"] = rational_to_json(l.props.bandwidth_mbps);
      entry["security_level"] = l.props.security_level;
    }
    links.push_back(std::move(entry));
  }
  out["links"] = std::move(links);
  return out;
}

ordered_json sfcs_to_json(const Scenario& scenario) {
  json out = json::array();
  for (const auto& sfc : scenario.sfcs()) {
    json entry = json::object();
    entry["id"] = sfc.id;
    entry["traffic_mbps"] = rational_to_json(sfc.traffic_mbps);
    entry["max_delay_ms"] = rational_to_json(sfc.max_delay_ms);
    entry["min_security"] = sfc.min_security;
    entry["bandwidth_mbps"] = rational_to_json(sfc.bandwidth_demand_mbps);
    entry["users"] = sfc.users;
    if (!sfc.iot_domains.empty()) entry["iot_domains"] = sfc.iot_domains;
    json vnfs = json::array();
    for (const auto& v : sfc.vnfs) {
      json vj = json::object();
      vj["id"] = v.id;
      vj["type"] = v.type_label;
      vj["conflicts"] = v.conflicts;
      vnfs.push_back(std::move(vj));
    }
    entry["vnfs"] = std::move(vnfs);
    out.push_back(std::move(entry));
  }
  return out;
}

ordered_json flavors_to_json(const FlavorCatalog& flavors, const std::vector<std::string>& kinds) {
  json out = json::array();
  for (const auto& f : flavors.flavors)
    out.push_back(json{{"id", f.id}, {"price", rational_to_json(f.price)}, {"demand", resources_to_json(kinds, f.demand)}});
  return out;
}

ordered_json bundle_to_json(const Scenario& scenario) {
  json out = json::object();
  out["topology"] = topology_to_json(scenario.topology());
  out["sfcs"] = sfcs_to_json(scenario);
  json flavors = flavors_to_json(scenario.flavors(), scenario.topology().resource_kinds());
  out["flavors"] = std::move(flavors);
  return out;
}

void save_scenario_files(const Scenario& scenario, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto bundle = bundle_to_json(scenario);
  write_text_file(dir / "topology.json", bundle["topology"].dump(2) + "\n");
  write_text_file(dir / "sfcs.json", bundle["sfcs"].dump(2) + "\n");
  write_text_file(dir / "flavors.json", bundle["flavors"].dump(2) + "\n");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace sfcplace
