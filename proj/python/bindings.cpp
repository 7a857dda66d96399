// Copyright 2026 The Bananaworld Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bananaworld/banana_sim.hpp"
#include "bananaworld/cli.hpp"
#include "bananaworld/io.hpp"
#include "bananaworld/polytopes.hpp"
#include "bananaworld/quantum.hpp"

namespace py = pybind11;
using namespace bananaworld;
using io::Json;

namespace {

// Arrays cross the boundary as the library's JSON text; the Python package
// converts to and from dicts.

io::AnyArray parse(const std::string &text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return io::array_from_json(doc);
}

PolytopeKind polytope(const std::string &name) {
  if (name == "local") return PolytopeKind::Local;
  if (name == "no_signaling") return PolytopeKind::NoSignaling;
  throw ArgumentError("polytope must be 'local' or 'no_signaling'");
}

std::string table(int k) {
  switch (k) {
    case 1:
      return io::array_to_json(table1()).dump();
    case 2:
      return io::array_to_json(table2()).dump();
    case 3:
      return io::array_to_json(table3()).dump();
    case 4:
      return io::array_to_json(table4()).dump();
  }
  throw ArgumentError("table number must be 1..4");
}

std::string chsh_json(const std::string &array, int variant) {
  return std::visit([&](const auto &p) { return io::scalar_to_json(chsh(p, variant)).dump(); }, parse(array));
}

std::string membership_json(const std::string &array, const std::string &kind, double tolerance) {
  return std::visit(
      [&](const auto &p) {
        using T = typename std::decay_t<decltype(p)>::value_type;
        if constexpr (ScalarTraits<T>::kExact) {
          return io::membership_to_json(membership(p, polytope(kind))).dump();
        } else {
          return io::membership_to_json(membership(p, polytope(kind), tolerance)).dump();
        }
      },
      parse(array));
}

std::size_t vertex_set_dimension(const std::string &set) {
  std::vector<RationalArray> arrays;
  auto add = [&](VertexKind k) {
    for (const auto &v : enumerate_deterministic(k)) arrays.push_back(v.array<Rational>());
  };
  if (set == "all") {
    add(VertexKind::All);
  } else if (set == "local") {
    add(VertexKind::Local);
  } else if (set == "signaling") {
    add(VertexKind::Signaling);
  } else if (set == "no_signaling") {
    add(VertexKind::Local);
    for (const auto &b : pr_boxes()) arrays.push_back(b.array<Rational>());
  } else {
    throw ArgumentError("set must be all, local, signaling or no_signaling");
  }
  return affine_dimension(arrays);
}

std::size_t vertex_count(const std::string &kind) {
  if (kind == "pr") return pr_boxes().size();
  if (kind == "all") return enumerate_deterministic(VertexKind::All).size();
  if (kind == "local") return enumerate_deterministic(VertexKind::Local).size();
  if (kind == "signaling") return enumerate_deterministic(VertexKind::Signaling).size();
  throw ArgumentError("kind must be all, local, signaling or pr");
}

py::tuple run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the bananaworld package";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("version", &cli::version);
  m.def("table", &table, py::arg("k"), "Table k (1..4) as correlation-array JSON.");
  m.def("chsh", &chsh_json, py::arg("array"), py::arg("variant") = 0,
        "CHSH variant value; rationals come back as a JSON string \"num/den\".");
  m.def("chsh_max", [](const std::string &array) {
    return std::visit(
        [](const auto &p) {
          const auto best = chsh_max(p);
          return Json{{"value", io::scalar_to_json(best.value)}, {"variant", best.variant}}.dump();
        },
        parse(array));
  });
  m.def("membership", &membership_json, py::arg("array"), py::arg("polytope") = "local",
        py::arg("tolerance") = 1e-9);
  m.def("vertex_count", &vertex_count, py::arg("kind"));
  m.def("dimension", &vertex_set_dimension, py::arg("set"));
  m.def("tsirelson_chsh", [] {
    const auto s = quantum::tsirelson_settings();
    return chsh_max(quantum::born_array(quantum::bell_state(1), s.alice, s.bob)).value;
  });
  m.def("klyachko_quantum_sum", [] {
    return quantum::klyachko_sum(quantum::klyachko_frame(), quantum::StateVector({0.0, 0.0, 1.0})).sum;
  });
  m.def("noncontextual_max", [] { return quantum::noncontextual_max().maximum; });
  m.def("pbr_probabilities", [](bool first_plus, bool second_plus) {
    using quantum::PbrPreparation;
    const auto r = quantum::pbr_probabilities(first_plus ? PbrPreparation::Plus : PbrPreparation::Zero,
                                              second_plus ? PbrPreparation::Plus : PbrPreparation::Zero);
    return py::make_tuple(r.probabilities, r.blocked);
  });
  m.def(
      "sample_epr",
      [](std::uint64_t trials, std::uint64_t seed) {
        return io::empirical_to_json(sim::empirical_array(sim::epr_sampler(), trials, seed)).dump();
      },
      py::arg("trials"), py::arg("seed"));
  m.def("infer_peeling_from_clone", [](int j, int k) {
    if ((j != 0 && j != 1) || (k != 0 && k != 1)) throw ArgumentError("tastes must be 0 or 1");
    return std::string(1, setting_name(sim::infer_peeling_from_clone(outcome_from_bit(j), outcome_from_bit(k))));
  });
  m.def("run_cli", &run_cli, py::arg("args"), "Runs a CLI command; returns (exit_code, stdout, stderr).");
}
