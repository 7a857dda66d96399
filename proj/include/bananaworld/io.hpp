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

/**
 * @file io.hpp
 * @brief JSON and CSV formats.
 *
 * Correlation array JSON:
 *
 *   {"scenario": "2x2x2x2", "representation": "rational" | "float",
 *    "entries": [{"a": 0, "b": 0, "x": 0, "y": 0, "p": "1/2"}, ...]}
 *
 * with 16 entries in storage order, rationals as canonical "num/den"
 * strings and floats as JSON numbers. Settings are written with the fixed
 * bit encoding; the reader also accepts "Y"/"B". CSV uses the header
 * a,b,x,y,p and the same value spellings.
 */

#ifndef BANANAWORLD_IO_HPP
#define BANANAWORLD_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "bananaworld/banana_sim.hpp"
#include "bananaworld/correlation.hpp"
#include "bananaworld/polytopes.hpp"
#include "bananaworld/quantum.hpp"
#include "json.hpp"

namespace bananaworld::io {

using Json = nlohmann::ordered_json;

/// A correlation array in either representation.
using AnyArray = std::variant<RationalArray, FloatArray>;

inline constexpr std::string_view kScenario = "2x2x2x2";

Json scalar_to_json(const Rational &v);
Json scalar_to_json(double v);

Json array_to_json(const RationalArray &array);
Json array_to_json(const FloatArray &array);
Json array_to_json(const AnyArray &array);

/// Throws ParseError on a malformed document. Range and normalization are
/// not checked here; use validate().
AnyArray array_from_json(const Json &doc);

std::string array_to_csv(const RationalArray &array);
std::string array_to_csv(const FloatArray &array);
std::string array_to_csv(const AnyArray &array);

/// The representation is rational when every p parses as a rational,
/// float otherwise.
AnyArray array_from_csv(std::string_view text);

/// Reads a JSON (or, for a .csv extension, CSV) array file.
AnyArray load_array(const std::filesystem::path &path);

Json vertex_to_json(const DeterministicVertex &v);
Json pr_box_to_json(const PrBox &box);

template <Scalar T>
Json certificate_to_json(const SeparatingCertificate<T> &c) {
  Json coeffs = Json::array();
  for (const auto &v : c.coefficients) coeffs.push_back(scalar_to_json(v));
  Json out = {{"coefficients", coeffs},
              {"bound", scalar_to_json(c.bound)},
              {"value", scalar_to_json(c.value)},
              {"source", c.source}};
  if (c.chsh_variant) out["chsh_variant"] = *c.chsh_variant;
  return out;
}

/// In: {"status": "in", "weights": [[id, w], ...]};
/// Out: {"status": "out", "certificate": {...}}.
template <Scalar T>
Json membership_to_json(const MembershipResult<T> &r) {
  Json out = {{"status", to_string(r.status)}};
  if (r.status == MembershipStatus::In) {
    Json weights = Json::array();
    for (const auto &[id, w] : r.weights) weights.push_back(Json::array({id, scalar_to_json(w)}));
    out["weights"] = weights;
  } else if (r.status == MembershipStatus::Out) {
    out["certificate"] = certificate_to_json(*r.certificate);
  }
  out["infeasibility"] = scalar_to_json(r.infeasibility);
  return out;
}

/// Complex numbers as [re, im].
Json state_to_json(const quantum::StateVector &state);
Json frame_to_json(const quantum::KlyachkoFrame &frame);

/// Float correlation array JSON plus "counts", "trials" and "seed".
Json empirical_to_json(const sim::EmpiricalArray &e);

/// Deterministic model {"support": [[vertex_index, "num/den"], ...]}.
LhvModel<Rational> lhv_model_from_json(const Json &doc);

}  // namespace bananaworld::io

#endif  // BANANAWORLD_IO_HPP
