#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <memory>

#include "sfcplace/assignment.hpp"
#include "sfcplace/ilp.hpp"
#include "sfcplace/lp_format.hpp"
#include "sfcplace/oracle.hpp"
#include "sfcplace/scenario_io.hpp"
#include "sfcplace/scenarios.hpp"
#include "sfcplace/solver.hpp"

namespace py = pybind11;
using namespace sfcplace;

namespace {

struct PyModel {
  std::shared_ptr<const IlpModel> model;
};

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : std::string(); }

py::dict solve_result(const IlpModel& model, const SolveResult& r) {
  py::dict out;
  out["status"] = to_string(r.status);
  out["objective"] = r.objective ? py::object(py::str(r.objective->str())) : py::none();
  out["lower_bound"] = r.lower_bound ? py::object(py::str(r.lower_bound->str())) : py::none();
  out["nodes_explored"] = r.stats.nodes_explored;
  out["wall_ms"] = r.stats.wall_ms;
  py::dict conflicts;
  for (const auto& [tag, n] : r.stats.conflicts_by_tag) conflicts[py::str(tag)] = n;
  out["conflicts_by_tag"] = conflicts;
  out["placement"] = r.has_solution() ? py::object(py::str(placement_to_json(decode_placement(model, r.assignment)).dump()))
                                      : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact SFC placement: scenarios, ILP model, branch and bound, oracle";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SpaceTooLarge>(m, "SpaceTooLarge", PyExc_RuntimeError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);

  py::class_<Scenario>(m, "Scenario")
      .def_static("from_bundle", [](const std::string& doc) { return normalize_types(load_bundle(doc)); })
      .def_static("from_files",
                  [](const std::string& t, const std::string& s, const std::string& f) {
                    return normalize_types(load_scenario_files(t, s, f));
                  })
      .def("to_bundle", [](const Scenario& s) { return bundle_to_json(s).dump(2); })
      .def_property_readonly("cloud_ids",
                             [](const Scenario& s) {
                               std::vector<std::string> ids;
                               for (const auto& c : s.topology().clouds()) ids.push_back(c.id);
                               return ids;
                             })
      .def_property_readonly("sfc_ids",
                             [](const Scenario& s) {
                               std::vector<std::string> ids;
                               for (const auto& q : s.sfcs()) ids.push_back(q.id);
                               return ids;
                             })
      .def_property_readonly("vnf_count", &Scenario::vnf_count)
      .def_property_readonly("type_count", &Scenario::type_count);

  m.def(
      "generate",
      [](std::uint64_t seed, int clouds, int sfcs, int chain_min, int chain_max, int types, int flavors,
         int security_levels, double conflict_prob) {
        GenConfig g;
        g.seed = seed;
        g.n_clouds = clouds;
        g.n_sfcs = sfcs;
        g.chain_len = {chain_min, chain_max};
        g.n_types = types;
        g.n_flavors = flavors;
        g.security_levels = security_levels;
        g.conflict_prob = conflict_prob;
        return generate(g);
      },
      py::arg("seed") = 1, py::arg("clouds") = 6, py::arg("sfcs") = 4, py::arg("chain_min") = 2,
      py::arg("chain_max") = 4, py::arg("types") = 3, py::arg("flavors") = 3, py::arg("security_levels") = 15,
      py::arg("conflict_prob") = 0.1);

  py::class_<PyModel>(m, "Model")
      .def(py::init([](const Scenario& s, bool bandwidth, bool endpoints, bool symmetry_breaking) {
             BuildOptions o;
             o.bandwidth = bandwidth;
             o.endpoints = endpoints;
             o.symmetry_breaking = symmetry_breaking;
             return PyModel{std::make_shared<const IlpModel>(build_model(s, o))};
           }),
           py::arg("scenario"), py::arg("bandwidth") = false, py::arg("endpoints") = false,
           py::arg("symmetry_breaking") = true)
      .def_property_readonly("num_vars", [](const PyModel& p) { return p.model->vars.size(); })
      .def_property_readonly("num_constraints", [](const PyModel& p) { return p.model->constraints.size(); })
      .def("count_tag", [](const PyModel& p, const std::string& tag) { return p.model->count_tag(tag); })
      .def("tag_counts",
           [](const PyModel& p) {
             std::map<std::string, std::size_t> counts;
             for (const auto& row : p.model->constraints) ++counts[row.tag];
             return counts;
           })
      .def("to_lp", [](const PyModel& p) { return to_lp_string(*p.model); });

  m.def("base_tags", &base_tags);

  m.def(
      "solve",
      [](const PyModel& p, std::uint64_t max_nodes, double time_limit_ms, const std::string& backend,
         bool delay_tiebreak) {
        Budget b;
        if (max_nodes > 0) b.max_nodes = max_nodes;
        if (time_limit_ms > 0) b.max_wall_ms = time_limit_ms;
        BnbOptions o;
        o.delay_tiebreak = delay_tiebreak;
        o.tiebreak_budget = b;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = make_backend(backend, o)->solve(*p.model, b);
        }
        return solve_result(*p.model, r);
      },
      py::arg("model"), py::arg("max_nodes") = 0, py::arg("time_limit_ms") = 0.0, py::arg("backend") = "bnb",
      py::arg("delay_tiebreak") = false);

  m.def(
      "validate",
      [](const Scenario& s, const std::string& placement, bool bandwidth, bool endpoints) {
        ValidationOptions o;
        o.bandwidth = bandwidth;
        o.endpoints = endpoints;
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        try {
          for (const auto& v : validate_solution(s, placement_from_json(ordered_json::parse(placement)), o))
            out.emplace_back(to_string(v.kind), v.subject, v.detail);
        } catch (const StructuralError& e) {
          throw InputError("placement", e.what());
        } catch (const ordered_json::exception& e) {
          throw InputError("placement", e.what());
        }
        return out;
      },
      py::arg("scenario"), py::arg("placement"), py::arg("bandwidth") = false, py::arg("endpoints") = false);

  m.def(
      "brute_force",
      [](const Scenario& s, std::uint64_t max_points) {
        BruteForceResult r;
        {
          py::gil_scoped_release release;
          r = brute_force(s, {max_points});
        }
        py::dict out;
        out["feasible"] = r.feasible;
        out["objective"] = r.objective ? py::object(py::str(r.objective->str())) : py::none();
        out["placement"] = r.placement ? py::object(py::str(placement_to_json(*r.placement).dump())) : py::none();
        out["space"] = r.space;
        return out;
      },
      py::arg("scenario"), py::arg("max_points") = 10'000'000);

  m.def(
      "sweep",
      [](const std::string& axis, const std::vector<int>& points, int reps, std::uint64_t seed, bool nested,
         int jobs, int clouds, int sfcs, std::uint64_t max_nodes) {
        SweepConfig c;
        if (axis != "edges" && axis != "sfcs") throw InputError("axis", "expected 'edges' or 'sfcs'");
        c.axis = axis == "edges" ? Axis::Edges : Axis::Sfcs;
        c.points = points;
        c.repetitions = reps;
        c.base.seed = seed;
        c.base.n_clouds = clouds;
        c.base.n_sfcs = sfcs;
        c.nested = nested;
        c.jobs = jobs;
        c.budget.max_nodes = max_nodes;
        SweepResult r;
        {
          py::gil_scoped_release release;
          r = run_sweep(c);
        }
        return py::make_tuple(sweep_rows_csv(r), sweep_summary_csv(r));
      },
      py::arg("axis"), py::arg("points"), py::arg("reps") = 10, py::arg("seed") = 1, py::arg("nested") = false,
      py::arg("jobs") = 1, py::arg("clouds") = 10, py::arg("sfcs") = 4, py::arg("max_nodes") = 2'000'000);
}
