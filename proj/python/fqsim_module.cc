// Copyright 2026 The fqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqs/experiment.h"

namespace py = pybind11;

namespace {

std::vector<fqs::cdouble> amplitudes(const fqs::Statevector &s) {
    auto a = s.amplitudes();
    return {a.begin(), a.end()};
}

fqs::TimeKind time_kind(const std::string &k) {
    if (k == "imaginary") {
        return fqs::TimeKind::Imaginary;
    }
    if (k == "real") {
        return fqs::TimeKind::Real;
    }
    throw fqs::ArgumentError("kind must be 'imaginary' or 'real'");
}

py::dict trajectory_dict(const fqs::Trajectory &t) {
    py::list rows;
    for (const auto &r : t.rows) {
        py::dict d;
        d["step"] = r.step;
        d["tau"] = r.tau;
        d["energy"] = r.energy;
        d["fidelity_exact"] = r.fidelity_exact;
        d["fidelity_ground"] = r.fidelity_ground;
        d["digest"] = r.digest;
        rows.append(d);
    }
    py::dict out;
    out["rows"] = rows;
    out["updates"] = t.stats.updates;
    out["violations"] = t.stats.violations;
    out["flat"] = t.stats.flat;
    out["measurements_per_update"] = t.stats.measurements_per_update;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fqsim core bindings";
    m.attr("__version__") = FQS_VERSION;

    auto base = py::register_exception<fqs::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<fqs::ContractViolation>(m, "ContractViolation", base.ptr());
    py::register_exception<fqs::ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<fqs::IndexError>(m, "SlotIndexError", PyExc_IndexError);

    py::class_<fqs::GateParam>(m, "GateParam")
        .def(py::init([](double theta, const fqs::Vec3 &axis) { return fqs::GateParam{theta, axis}; }),
             py::arg("theta"), py::arg("axis"))
        .def_readwrite("theta", &fqs::GateParam::theta)
        .def_readwrite("axis", &fqs::GateParam::axis)
        .def("__repr__", [](const fqs::GateParam &p) {
            return "GateParam(" + std::to_string(p.theta) + ", [" + std::to_string(p.axis.x()) + ", " +
                   std::to_string(p.axis.y()) + ", " + std::to_string(p.axis.z()) + "])";
        });

    m.def("rotation_matrix", py::overload_cast<const fqs::GateParam &>(&fqs::rotation_matrix));
    m.def("solve_1q_3p", [](double g0, const fqs::Vec3 &g) { return fqs::solve_1q_3p({g0, g}); },
          py::arg("g0"), py::arg("g"), "Maximizer of g0 cos(theta/2) + n.g sin(theta/2), or None when flat.");

    py::class_<fqs::Hamiltonian>(m, "Hamiltonian")
        .def_static("heisenberg_1d", &fqs::Hamiltonian::heisenberg_1d, py::arg("sites"), py::arg("coupling") = 1.0,
                    py::arg("field") = 1.0, py::arg("periodic") = true)
        .def_property_readonly("qubit_count", &fqs::Hamiltonian::qubit_count)
        .def_property_readonly("terms",
                               [](const fqs::Hamiltonian &h) {
                                   std::vector<std::pair<double, std::string>> out;
                                   for (const auto &t : h.terms()) {
                                       out.emplace_back(t.coefficient, t.label());
                                   }
                                   return out;
                               })
        .def("__len__", [](const fqs::Hamiltonian &h) { return h.terms().size(); })
        .def("__str__", &fqs::format_hamiltonian_text);
    m.def("parse_hamiltonian", &fqs::parse_hamiltonian_text, py::arg("text"));

    py::class_<fqs::Ansatz>(m, "Ansatz")
        .def_property_readonly("qubit_count", &fqs::Ansatz::qubit_count)
        .def_property_readonly("slot_count", &fqs::Ansatz::slot_count)
        .def("slot_kind", [](const fqs::Ansatz &a, size_t d) { return fqs::kind_name(a.slot(d).kind); })
        .def_property("params", &fqs::Ansatz::params, &fqs::Ansatz::set_params)
        .def("state", [](const fqs::Ansatz &a) { return amplitudes(a.state()); });
    m.def("make_preset",
          [](const std::string &name, size_t layers, size_t qubits, const std::string &init, uint64_t seed,
             double sigma) {
              fqs::InitSpec spec;
              spec.sigma = sigma;
              if (init.empty()) {
                  return fqs::make_preset(name, layers, qubits);
              }
              spec.policy = fqs::policy_from_name(init);
              return fqs::prepare_ansatz(name, layers, qubits, spec, seed);
          },
          py::arg("name"), py::arg("layers") = 2, py::arg("qubits") = 5, py::arg("init") = "", py::arg("seed") = 0,
          py::arg("sigma") = 0.05);
    m.def("preset_names", [] {
        std::vector<std::string> out;
        for (auto n : fqs::preset_names()) {
            out.emplace_back(n);
        }
        return out;
    });

    m.def("energy", [](const fqs::Hamiltonian &h, const fqs::Ansatz &a) { return fqs::energy(h, a.state()); });
    m.def("ground_energy", [](const fqs::Hamiltonian &h) { return fqs::ground(h).ground_energy; });
    m.def(
        "evolve",
        [](const fqs::Hamiltonian &h, fqs::Ansatz &a, double step, size_t steps, const std::string &kind,
           size_t sweeps_per_term) {
            fqs::EvolveOptions o;
            o.sweep.sweeps_per_term = sweeps_per_term;
            fqs::Trajectory t;
            {
                py::gil_scoped_release release;
                t = fqs::evolve(h, a, fqs::plan_with_step(h, step, steps, time_kind(kind)), o);
            }
            return trajectory_dict(t);
        },
        py::arg("hamiltonian"), py::arg("ansatz"), py::arg("step"), py::arg("steps"), py::arg("kind") = "imaginary",
        py::arg("sweeps_per_term") = 1, "Evolves the ansatz in place; returns checkpoint rows.");
    m.def(
        "run_experiment",
        [](const std::string &config_json, bool write) {
            auto c = fqs::config_from_json(nlohmann::json::parse(config_json));
            fqs::ExperimentResult r;
            {
                py::gil_scoped_release release;
                r = fqs::run_experiment(c, write);
            }
            py::list runs;
            for (const auto &t : r.runs) {
                runs.append(trajectory_dict(t));
            }
            py::dict out;
            out["runs"] = runs;
            out["metadata"] = r.metadata.dump();  // JSON text
            return out;
        },
        py::arg("config_json"), py::arg("write") = false);
}
