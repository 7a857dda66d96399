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

#include "bananaworld/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bananaworld/banana_sim.hpp"
#include "bananaworld/io.hpp"
#include "bananaworld/polytopes.hpp"
#include "bananaworld/quantum.hpp"

namespace bananaworld::cli {

namespace {

using io::Json;

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  double tolerance = 1e-9;
  std::string format = "json";
  std::string output;

  std::string array_path;
  std::vector<std::string> array_paths;
  std::string polytope = "local";
  std::string kind = "all";
  std::string set;
  std::string mode = "quantum";
  std::string source = "epr";
  std::string states = "Y0,Y0";
  std::string model_path;
  std::optional<int> clone_j;
  std::optional<int> clone_k;
};

/// What a command produced.
struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  bool stochastic = false;
  /// CSV rendering, when the command supports --format csv.
  std::optional<std::string> csv;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string context_name(int x, int y) {
  return std::string(1, setting_name(setting_from_bit(x))) + setting_name(setting_from_bit(y));
}

PolytopeKind parse_polytope(const std::string &name) {
  if (name == "local") return PolytopeKind::Local;
  if (name == "no_signaling" || name == "no-signaling") return PolytopeKind::NoSignaling;
  throw UsageError("--polytope must be local or no_signaling");
}

io::AnyArray load(const Options &o) {
  if (o.array_path.empty()) throw UsageError("--array is required");
  return io::load_array(o.array_path);
}

template <Scalar T>
T tolerance_for(const Options &o) {
  if constexpr (ScalarTraits<T>::kExact) {
    return T(0);
  } else {
    return o.tolerance;
  }
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const Options &o) {
  Outcome r;
  r.inputs = {{"array", o.array_path}, {"tolerance", o.tolerance}};
  std::visit(
      [&](const auto &array) {
        using T = typename std::decay_t<decltype(array)>::value_type;
        Json list = Json::array();
        for (const auto &v : validate(array, tolerance_for<T>(o))) {
          Json item = {{"kind", v.kind == ViolationKind::Normalization ? "normalization" : "out_of_range"},
                       {"context", context_name(v.x, v.y)},
                       {"magnitude", io::scalar_to_json(v.magnitude)},
                       {"message", v.describe()}};
          if (v.outcomes) item["outcomes"] = {v.outcomes->first, v.outcomes->second};
          list.push_back(item);
        }
        r.results = {{"representation", ScalarTraits<T>::kName}, {"valid", list.empty()}, {"violations", list}};
      },
      load(o));
  return r;
}

Outcome cmd_marginals(const Options &o) {
  Outcome r;
  r.inputs = {{"array", o.array_path}};
  std::ostringstream csv;
  csv << "party,outcome,x,y,p\n";
  std::visit(
      [&](const auto &array) {
        require_valid(array, tolerance_for<typename std::decay_t<decltype(array)>::value_type>(o));
        const auto m = marginals(array);
        Json alice = Json::array(), bob = Json::array();
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            for (int v = 0; v < 2; ++v) {
              alice.push_back({{"a", v}, {"x", x}, {"y", y}, {"p", io::scalar_to_json(m.alice_p(v, x, y))}});
              bob.push_back({{"b", v}, {"x", x}, {"y", y}, {"p", io::scalar_to_json(m.bob_p(v, x, y))}});
              for (const auto &[party, val] : {std::pair{"alice", m.alice_p(v, x, y)}, {"bob", m.bob_p(v, x, y)}}) {
                const Json pj = io::scalar_to_json(val);
                csv << party << ',' << v << ',' << x << ',' << y << ','
                    << (pj.is_string() ? pj.get<std::string>() : pj.dump()) << '\n';
              }
            }
        r.results = {{"alice", alice}, {"bob", bob}};
      },
      load(o));
  r.csv = csv.str();
  return r;
}

template <Scalar T>
Json chsh_report(const CorrelationArray<T> &array, std::string *csv) {
  static constexpr const char *kContexts[] = {"YY", "YB", "BY", "BB"};
  Json variants = Json::array();
  std::ostringstream out;
  out << "variant,minus_on,sign,value\n";
  for (int v = 0; v < kChshVariants; ++v) {
    const Json value = io::scalar_to_json(chsh(array, v));
    variants.push_back({{"variant", v},
                        {"minus_on", kContexts[chsh_minus_context(v)]},
                        {"sign", chsh_overall_sign(v)},
                        {"value", value}});
    out << v << ',' << kContexts[chsh_minus_context(v)] << ',' << chsh_overall_sign(v) << ','
        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  Json expectations = Json::object();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      expectations[context_name(x, y)] = io::scalar_to_json(expectation(array, setting_from_bit(x), setting_from_bit(y)));
  const auto best = chsh_max(array);
  if (csv) *csv = out.str();
  return {{"expectations", expectations},
          {"variants", variants},
          {"max", {{"value", io::scalar_to_json(best.value)}, {"variant", best.variant}}}};
}

Outcome cmd_chsh(const Options &o) {
  Outcome r;
  r.inputs = {{"array", o.array_path}};
  std::string csv;
  std::visit(
      [&](const auto &array) {
        require_valid(array, tolerance_for<typename std::decay_t<decltype(array)>::value_type>(o));
        r.results = chsh_report(array, &csv);
      },
      load(o));
  r.csv = csv;
  return r;
}

Outcome cmd_membership(const Options &o, bool decompose) {
  Outcome r;
  const PolytopeKind kind = parse_polytope(o.polytope);
  r.inputs = {{"array", o.array_path}, {"polytope", to_string(kind)}, {"tolerance", o.tolerance}};
  std::visit(
      [&](const auto &array) {
        using T = typename std::decay_t<decltype(array)>::value_type;
        const auto result = membership(array, kind, tolerance_for<T>(o));
        if (decompose && result.status != MembershipStatus::In) {
          throw NotDecomposableError(std::string("array is not in the ") + to_string(kind) + " polytope (" +
                                     to_string(result.status) + ")");
        }
        r.results = io::membership_to_json(result);
        r.results["representation"] = ScalarTraits<T>::kName;
      },
      load(o));
  return r;
}

Outcome cmd_vertices(const Options &o) {
  Outcome r;
  r.inputs = {{"kind", o.kind}};
  Json list = Json::array();
  std::ostringstream csv;
  if (o.kind == "pr") {
    csv << "id,alpha,beta,gamma\n";
    for (const auto &box : pr_boxes()) {
      Json j = io::pr_box_to_json(box);
      j["array"] = io::array_to_json(box.array<Rational>());
      list.push_back(j);
      csv << box.vertex_id() << ',' << box.alpha << ',' << box.beta << ',' << box.gamma << '\n';
    }
  } else {
    VertexKind kind;
    if (o.kind == "all")
      kind = VertexKind::All;
    else if (o.kind == "local")
      kind = VertexKind::Local;
    else if (o.kind == "signaling")
      kind = VertexKind::Signaling;
    else
      throw UsageError("--kind must be all, local, signaling or pr");
    csv << "index,local,alice,bob\n";
    for (const auto &v : enumerate_deterministic(kind)) {
      const Json j = io::vertex_to_json(v);
      list.push_back(j);
      csv << int(v.index()) << ',' << (v.is_local() ? 1 : 0) << ',' << j["alice"].get<std::string>() << ','
          << j["bob"].get<std::string>() << '\n';
    }
  }
  r.results = {{"count", list.size()}, {"vertices", list}};
  r.csv = csv.str();
  return r;
}

Outcome cmd_dimension(const Options &o) {
  Outcome r;
  if (!o.set.empty()) {
    r.inputs = {{"set", o.set}};
    std::vector<RationalArray> arrays;
    auto add_kind = [&](VertexKind k) {
      for (const auto &v : enumerate_deterministic(k)) arrays.push_back(v.array<Rational>());
    };
    if (o.set == "all")
      add_kind(VertexKind::All);
    else if (o.set == "local")
      add_kind(VertexKind::Local);
    else if (o.set == "signaling")
      add_kind(VertexKind::Signaling);
    else if (o.set == "no_signaling" || o.set == "no-signaling") {
      add_kind(VertexKind::Local);
      for (const auto &box : pr_boxes()) arrays.push_back(box.array<Rational>());
    } else {
      throw UsageError("--set must be all, local, signaling or no_signaling");
    }
    r.results = {{"points", arrays.size()}, {"dimension", affine_dimension(arrays)}};
    return r;
  }
  if (o.array_paths.empty()) throw UsageError("dimension needs --set or at least one --array");
  r.inputs = {{"arrays", o.array_paths}};
  std::vector<RationalArray> rationals;
  std::vector<FloatArray> floats;
  for (const auto &path : o.array_paths) {
    auto a = io::load_array(path);
    if (auto *ra = std::get_if<RationalArray>(&a))
      rationals.push_back(*ra);
    else
      floats.push_back(std::get<FloatArray>(a));
  }
  if (!rationals.empty() && !floats.empty()) throw ArgumentError("dimension needs arrays of one representation");
  const std::size_t dim =
      rationals.empty() ? affine_dimension(floats, o.tolerance) : affine_dimension(rationals);
  r.results = {{"points", o.array_paths.size()}, {"dimension", dim}};
  return r;
}

Outcome cmd_klyachko(const Options &o) {
  Outcome r;
  r.inputs = {{"mode", o.mode}};
  std::ostringstream csv;
  if (o.mode == "quantum") {
    const auto frame = quantum::klyachko_frame();
    const auto sum = quantum::klyachko_sum(frame, quantum::StateVector({0.0, 0.0, 1.0}));
    Json probs = Json::array();
    csv << "vertex,probability\n";
    for (int k = 0; k < 5; ++k) {
      probs.push_back(sum.probabilities[k]);
      csv << k << ',' << Json(sum.probabilities[k]).dump() << '\n';
    }
    r.results = {{"frame", io::frame_to_json(frame)},
                 {"state", io::state_to_json(quantum::StateVector({0.0, 0.0, 1.0}))},
                 {"probabilities", probs},
                 {"sum", sum.sum},
                 {"sqrt5", std::sqrt(5.0)},
                 {"classical_bound", 2}};
  } else if (o.mode == "classical-bruteforce") {
    const auto nc = quantum::noncontextual_max();
    r.results = {{"maximum", nc.maximum},
                 {"witness", nc.witness},
                 {"feasible_assignments", nc.feasible_assignments},
                 {"assignments_searched", 32}};
    csv << "maximum,feasible_assignments\n" << nc.maximum << ',' << nc.feasible_assignments << '\n';
  } else if (o.mode == "banana") {
    r.stochastic = true;
    r.inputs["trials"] = o.trials;
    const auto est = sim::estimate_klyachko_sum(o.trials, o.seed);
    Json probs = Json::array();
    csv << "vertex,probability\n";
    for (int k = 0; k < 5; ++k) {
      probs.push_back(est.probabilities[k]);
      csv << k << ',' << Json(est.probabilities[k]).dump() << '\n';
    }
    r.results = {{"exact_sum", format_rational(sim::klyachko_banana_sum())},
                 {"estimate", {{"probabilities", probs}, {"sum", est.sum}, {"trials_per_edge", est.trials_per_edge}}}};
  } else {
    throw UsageError("--mode must be quantum, classical-bruteforce or banana");
  }
  r.csv = csv.str();
  return r;
}

Outcome cmd_pbr(const Options &) {
  using quantum::PbrPreparation;
  Outcome r;
  Json basis = Json::array();
  for (const auto &b : quantum::pbr_basis()) basis.push_back(io::state_to_json(b));
  Json preps = Json::array();
  std::ostringstream csv;
  csv << "preparation,outcome,probability\n";
  for (auto p1 : {PbrPreparation::Zero, PbrPreparation::Plus})
    for (auto p2 : {PbrPreparation::Zero, PbrPreparation::Plus}) {
      const std::string name = std::string(p1 == PbrPreparation::Zero ? "0" : "+") +
                               (p2 == PbrPreparation::Zero ? "0" : "+");
      const auto res = quantum::pbr_probabilities(p1, p2);
      preps.push_back({{"preparation", name},
                       {"probabilities", res.probabilities},
                       {"blocked", res.blocked},
                       {"designated", quantum::pbr_designated_outcome(p1, p2)}});
      for (int i = 0; i < 4; ++i) csv << name << ',' << i << ',' << Json(res.probabilities[i]).dump() << '\n';
    }
  r.results = {{"basis", basis}, {"preparations", preps}};
  r.csv = csv.str();
  return r;
}

Json empirical_summary(const sim::EmpiricalArray &e) {
  const FloatArray p = e.probabilities();
  const auto best = chsh_max(p);
  return {{"array", io::empirical_to_json(e)},
          {"chsh_variant0", chsh(p, 0)},
          {"chsh_max", {{"value", best.value}, {"variant", best.variant}}},
          {"no_signaling_max_residual", no_signaling_check(p, 1.0).max_residual}};
}

Outcome cmd_sample(const Options &o) {
  Outcome r;
  r.stochastic = true;
  r.inputs = {{"source", o.source}, {"trials", o.trials}};
  if (o.source == "epr") {
    const auto e = sim::empirical_array(sim::epr_sampler(), o.trials, o.seed);
    r.results = empirical_summary(e);
    r.csv = io::array_to_csv(e.probabilities());
  } else if (o.source == "pure") {
    const auto comma = o.states.find(',');
    if (comma == std::string::npos) throw UsageError("--states must look like Y0,B1");
    const auto a = sim::parse_pure_state(o.states.substr(0, comma));
    const auto b = sim::parse_pure_state(o.states.substr(comma + 1));
    r.inputs["states"] = o.states;
    const auto e = sim::empirical_array(sim::pure_pair_sampler(a, b), o.trials, o.seed);
    r.results = empirical_summary(e);
    r.csv = io::array_to_csv(e.probabilities());
  } else if (o.source == "lhv") {
    LhvModel<Rational> model = [&] {
      if (o.model_path.empty()) {
        std::vector<std::pair<DeterministicVertex, Rational>> support;
        for (const auto &v : enumerate_deterministic(VertexKind::Local)) support.emplace_back(v, Rational(1, 16));
        return LhvModel<Rational>::deterministic(support);
      }
      std::ifstream in(o.model_path);
      if (!in) throw ParseError("cannot open model file '" + o.model_path + "'");
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("malformed model JSON: ") + ex.what());
      }
      return io::lhv_model_from_json(doc);
    }();
    r.inputs["model"] = o.model_path.empty() ? "uniform-local" : o.model_path;
    const auto e = sim::empirical_lhv_array(model, o.trials, o.seed);
    r.results = empirical_summary(e);
    r.csv = io::array_to_csv(e.probabilities());
  } else if (o.source == "klyachko") {
    const auto est = sim::estimate_klyachko_sum(o.trials, o.seed);
    std::ostringstream csv;
    csv << "vertex,probability\n";
    for (int k = 0; k < 5; ++k) csv << k << ',' << Json(est.probabilities[k]).dump() << '\n';
    r.results = {{"probabilities", est.probabilities}, {"sum", est.sum}, {"trials_per_edge", est.trials_per_edge}};
    r.csv = csv.str();
  } else {
    throw UsageError("--source must be epr, pure, klyachko or lhv");
  }
  return r;
}

Outcome cmd_tsirelson(const Options &o) {
  Outcome r;
  r.stochastic = true;
  r.inputs = {{"trials", o.trials}};
  const auto settings = quantum::tsirelson_settings();
  const FloatArray p = quantum::born_array(quantum::bell_state(1), settings.alice, settings.bob);
  std::string unused;
  const auto sweep = quantum::random_chsh_sweep(o.trials, o.seed);
  r.results = {{"state", "singlet"},
               {"angles",
                {{"alice", {settings.alice[0].angle, settings.alice[1].angle}},
                 {"bob", {settings.bob[0].angle, settings.bob[1].angle}}}},
               {"array", io::array_to_json(p)},
               {"chsh", chsh_report(p, &unused)},
               {"tsirelson_bound", quantum::kTsirelsonBound},
               {"sweep", {{"samples", sweep.samples}, {"maximum", sweep.maximum}}}};
  r.csv = io::array_to_csv(p);
  return r;
}

Outcome cmd_infer_clone(const Options &o) {
  Outcome r;
  auto taste = [](int v) {
    if (v != 0 && v != 1) throw UsageError("tastes must be 0 or 1");
    return outcome_from_bit(v);
  };
  if (o.clone_j.has_value() != o.clone_k.has_value()) throw UsageError("--j and --k must be given together");
  Json inferences = Json::array();
  std::ostringstream csv;
  csv << "j,k,alice_peeled\n";
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      if (o.clone_j && (*o.clone_j != j || *o.clone_k != k)) continue;
      const Setting s = sim::infer_peeling_from_clone(taste(j), taste(k));
      inferences.push_back({{"j", j}, {"k", k}, {"alice_peeled", std::string(1, setting_name(s))}});
      csv << j << ',' << k << ',' << setting_name(s) << '\n';
    }
  if (o.clone_j) {
    r.inputs = {{"j", *o.clone_j}, {"k", *o.clone_k}};
    if (inferences.empty()) taste(*o.clone_j), taste(*o.clone_k);
  }
  Json counterfactual = Json::array();
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      Json pairs = Json::array();
      for (const auto &[j, k] : sim::epr_counterfactual_assignments(setting_from_bit(x), outcome_from_bit(a)))
        pairs.push_back({bit(j), bit(k)});
      counterfactual.push_back(
          {{"alice_peeling", std::string(1, setting_name(setting_from_bit(x)))}, {"alice_taste", a}, {"assignments", pairs}});
    }
  r.results = {{"inferences", inferences}, {"counterfactual_assignments", counterfactual}};
  r.csv = csv.str();
  return r;
}

void add_common(CLI::App *sub, Options &o, bool stochastic) {
  sub->add_option("--tolerance", o.tolerance, "Float comparison tolerance")->capture_default_str();
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output", o.output, "Write the report to PATH instead of stdout");
  if (stochastic) {
    sub->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--trials", o.trials, "Trials per context (or per edge, or sweep samples)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

}  // namespace

const char *version() { return BANANAWORLD_VERSION; }

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Correlation polytopes, CHSH and Klyachko inequalities, and seeded banana simulators", "bananaworld"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  std::map<std::string, std::function<Outcome()>> handlers;
  auto command = [&](const std::string &name, const std::string &help, bool stochastic,
                     std::function<Outcome()> handler) {
    CLI::App *sub = app.add_subcommand(name, help);
    add_common(sub, o, stochastic);
    handlers[name] = std::move(handler);
    return sub;
  };

  command("validate", "Check range and normalization of an array", false, [&] { return cmd_validate(o); })
      ->add_option("--array", o.array_path, "Array file (JSON or .csv)")
      ->required();
  command("marginals", "Per-party marginal tables", false, [&] { return cmd_marginals(o); })
      ->add_option("--array", o.array_path, "Array file")
      ->required();
  command("chsh", "All 8 CHSH variants and their maximum", false, [&] { return cmd_chsh(o); })
      ->add_option("--array", o.array_path, "Array file")
      ->required();
  for (const char *name : {"membership", "decompose"}) {
    const bool decompose = std::string(name) == "decompose";
    auto *sub = command(name,
                        decompose ? "Convex decomposition into polytope vertices"
                                  : "Polytope membership with weights or a separating certificate",
                        false, [&, decompose] { return cmd_membership(o, decompose); });
    sub->add_option("--array", o.array_path, "Array file")->required();
    sub->add_option("--polytope", o.polytope, "local or no_signaling")->capture_default_str();
  }
  command("vertices", "Export a vertex catalog", false, [&] { return cmd_vertices(o); })
      ->add_option("--kind", o.kind, "all, local, signaling or pr")
      ->capture_default_str();
  {
    auto *sub = command("dimension", "Affine dimension of a vertex set or of array files", false,
                        [&] { return cmd_dimension(o); });
    sub->add_option("--set", o.set, "all, local, signaling or no_signaling");
    sub->add_option("--array", o.array_paths, "Array files");
  }
  command("klyachko", "Klyachko sums: quantum, classical-bruteforce or banana", true,
          [&] { return cmd_klyachko(o); })
      ->add_option("--mode", o.mode, "quantum, classical-bruteforce or banana")
      ->capture_default_str();
  command("pbr", "PBR basis and blocked outcomes", false, [&] { return cmd_pbr(o); });
  {
    auto *sub = command("sample", "Seeded empirical arrays from a banana source", true, [&] { return cmd_sample(o); });
    sub->add_option("--source", o.source, "epr, pure, klyachko or lhv")->capture_default_str();
    sub->add_option("--states", o.states, "Pure banana states for --source pure, e.g. Y0,B1")->capture_default_str();
    sub->add_option("--model", o.model_path, "LHV model JSON for --source lhv (default: uniform local)");
  }
  command("tsirelson", "Singlet CHSH at optimal settings plus a random sweep", true,
          [&] { return cmd_tsirelson(o); });
  {
    auto *sub = command("infer-clone", "Infer Alice's peeling from a cloned PR banana", false,
                        [&] { return cmd_infer_clone(o); });
    sub->add_option("--j", o.clone_j, "Taste of Bob's banana peeled Y");
    sub->add_option("--k", o.clone_k, "Taste of Bob's banana peeled B");
  }

  std::vector<const char *> argv{"bananaworld"};
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Json report;
  std::string text;
  try {
    Outcome result = handlers.at(name)();
    if (o.format == "csv") {
      if (!result.csv) throw UsageError("--format csv is not supported by '" + name + "'");
      text = *result.csv;
    } else {
      report = {{"command", name}, {"version", version()}, {"inputs", result.inputs}, {"results", result.results}};
      if (result.stochastic) report["seed"] = o.seed;
      text = report.dump(2) + "\n";
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    const Json error = {{"command", name},
                        {"version", version()},
                        {"error", {{"type", e.kind()}, {"message", e.what()}}}};
    out << error.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitDomainError;
    }
    file << text;
  }
  return kExitOk;
}

}  // namespace bananaworld::cli
