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

#include "bananaworld/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace bananaworld::io {

namespace {

int read_bit(const Json &v, const char *field) {
  if (v.is_number_integer()) {
    const auto i = v.get<long long>();
    if (i == 0 || i == 1) return static_cast<int>(i);
  } else if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "0" || s == "Y") return 0;
    if (s == "1" || s == "B") return 1;
  }
  throw ParseError(std::string("field '") + field + "' must be 0/1 (or Y/B for settings)");
}

int read_bit_text(std::string_view s, const char *field) {
  if (s == "0" || s == "Y") return 0;
  if (s == "1" || s == "B") return 1;
  throw ParseError(std::string("field '") + field + "' must be 0/1 (or Y/B for settings)");
}

double parse_double(std::string_view s) {
  std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception &) {
    throw ParseError("malformed number '" + str + "'");
  }
  while (used < str.size() && std::isspace(static_cast<unsigned char>(str[used]))) ++used;
  if (used != str.size()) throw ParseError("malformed number '" + str + "'");
  return v;
}

std::optional<Rational> try_rational(std::string_view s) {
  try {
    return parse_rational(s);
  } catch (const ParseError &) {
    return std::nullopt;
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

template <Scalar T>
Json array_json_impl(const CorrelationArray<T> &array) {
  Json entries = Json::array();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          entries.push_back({{"a", a}, {"b", b}, {"x", x}, {"y", y}, {"p", scalar_to_json(array(a, b, x, y))}});
  return Json{{"scenario", kScenario}, {"representation", ScalarTraits<T>::kName}, {"entries", entries}};
}

template <Scalar T>
std::string csv_impl(const CorrelationArray<T> &array) {
  std::ostringstream out;
  out << "a,b,x,y,p\n";
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Json v = scalar_to_json(array(a, b, x, y));
          out << a << ',' << b << ',' << x << ',' << y << ',' << (v.is_string() ? v.get<std::string>() : v.dump())
              << '\n';
        }
  return out.str();
}

}  // namespace

Json scalar_to_json(const Rational &v) { return format_rational(v); }
Json scalar_to_json(double v) { return v; }

Json array_to_json(const RationalArray &array) { return array_json_impl(array); }
Json array_to_json(const FloatArray &array) { return array_json_impl(array); }
Json array_to_json(const AnyArray &array) {
  return std::visit([](const auto &a) { return array_to_json(a); }, array);
}

AnyArray array_from_json(const Json &doc) {
  if (!doc.is_object()) throw ParseError("correlation array document must be a JSON object");
  if (doc.contains("scenario") && doc["scenario"] != kScenario) {
    throw ParseError("unsupported scenario (expected \"2x2x2x2\")");
  }
  if (!doc.contains("representation") || !doc["representation"].is_string()) {
    throw ParseError("missing \"representation\"");
  }
  const std::string rep = doc["representation"].get<std::string>();
  if (rep != "rational" && rep != "float") throw ParseError("representation must be \"rational\" or \"float\"");
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != 16) {
    throw ParseError("\"entries\" must be an array of 16 records");
  }
  std::array<bool, 16> seen{};
  RationalArray::Entries rat;
  FloatArray::Entries flt;
  rat.fill(Rational(0));
  flt.fill(0.0);
  for (const auto &rec : doc["entries"]) {
    if (!rec.is_object()) throw ParseError("entry must be an object");
    for (const char *f : {"a", "b", "x", "y", "p"}) {
      if (!rec.contains(f)) throw ParseError(std::string("entry is missing field '") + f + "'");
    }
    const std::size_t idx =
        entry_index(read_bit(rec["a"], "a"), read_bit(rec["b"], "b"), read_bit(rec["x"], "x"), read_bit(rec["y"], "y"));
    if (seen[idx]) throw ParseError("duplicate entry in correlation array");
    seen[idx] = true;
    const Json &p = rec["p"];
    if (rep == "rational") {
      if (p.is_string())
        rat[idx] = parse_rational(p.get<std::string>());
      else if (p.is_number_integer())
        rat[idx] = Rational(p.get<long long>());
      else
        throw ParseError("rational entry must be a \"num/den\" string");
    } else {
      if (p.is_number())
        flt[idx] = p.get<double>();
      else if (p.is_string())
        flt[idx] = parse_double(p.get<std::string>());
      else
        throw ParseError("float entry must be a number");
    }
  }
  if (rep == "rational") return RationalArray(rat);
  return FloatArray(flt);
}

std::string array_to_csv(const RationalArray &array) { return csv_impl(array); }
std::string array_to_csv(const FloatArray &array) { return csv_impl(array); }
std::string array_to_csv(const AnyArray &array) {
  return std::visit([](const auto &a) { return array_to_csv(a); }, array);
}

AnyArray array_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != "a,b,x,y,p") throw ParseError("CSV header must be a,b,x,y,p");
  std::array<bool, 16> seen{};
  std::array<std::string, 16> values;
  int rows = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::array<std::string, 5> cells;
    std::size_t start = 0;
    for (int c = 0; c < 5; ++c) {
      const std::size_t comma = line.find(',', start);
      if ((c < 4) == (comma == std::string::npos)) throw ParseError("CSV row must have 5 fields: " + line);
      cells[c] = trim(std::string_view(line).substr(start, c < 4 ? comma - start : std::string::npos));
      start = comma + 1;
    }
    const std::size_t idx = entry_index(read_bit_text(cells[0], "a"), read_bit_text(cells[1], "b"),
                                        read_bit_text(cells[2], "x"), read_bit_text(cells[3], "y"));
    if (seen[idx]) throw ParseError("duplicate entry in CSV");
    seen[idx] = true;
    values[idx] = cells[4];
    ++rows;
  }
  if (rows != 16) throw ParseError("CSV must have 16 data rows");
  bool all_rational = true;
  RationalArray::Entries rat;
  for (std::size_t i = 0; i < 16 && all_rational; ++i) {
    auto r = try_rational(values[i]);
    if (r)
      rat[i] = *r;
    else
      all_rational = false;
  }
  if (all_rational) return RationalArray(rat);
  FloatArray::Entries flt;
  for (std::size_t i = 0; i < 16; ++i) {
    auto r = try_rational(values[i]);
    flt[i] = r ? to_double(*r) : parse_double(values[i]);
  }
  return FloatArray(flt);
}

AnyArray load_array(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open array file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".csv") return array_from_csv(buf.str());
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const nlohmann::json::exception &e) {
    throw ParseError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return array_from_json(doc);
}

Json vertex_to_json(const DeterministicVertex &v) {
  std::string f, g;
  for (int c = 0; c < 4; ++c) {
    f += static_cast<char>('0' + v.alice_bit(c >> 1, c & 1));
    g += static_cast<char>('0' + v.bob_bit(c >> 1, c & 1));
  }
  return {{"index", v.index()}, {"local", v.is_local()}, {"alice", f}, {"bob", g}};
}

Json pr_box_to_json(const PrBox &box) {
  return {{"id", box.vertex_id()}, {"alpha", box.alpha}, {"beta", box.beta}, {"gamma", box.gamma}};
}

Json state_to_json(const quantum::StateVector &state) {
  Json amps = Json::array();
  for (const auto &c : state.amplitudes()) amps.push_back(Json::array({c.real(), c.imag()}));
  return {{"dimension", state.dim()}, {"amplitudes", amps}};
}

Json frame_to_json(const quantum::KlyachkoFrame &frame) {
  Json vecs = Json::array();
  for (const auto &v : frame.vectors) vecs.push_back(Json::array({v[0], v[1], v[2]}));
  return {{"geometry", {{"r", frame.r}, {"s", frame.s}, {"phi", frame.phi}}}, {"vectors", vecs}};
}

Json empirical_to_json(const sim::EmpiricalArray &e) {
  Json out = array_to_json(e.probabilities());
  Json counts = Json::array();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          counts.push_back({{"a", a}, {"b", b}, {"x", x}, {"y", y}, {"count", e.counts[entry_index(a, b, x, y)]}});
  out["counts"] = counts;
  out["trials"] = e.trials[0];
  out["seed"] = e.seed;
  return out;
}

LhvModel<Rational> lhv_model_from_json(const Json &doc) {
  if (!doc.is_object() || !doc.contains("support") || !doc["support"].is_array()) {
    throw ParseError("LHV model must be {\"support\": [[vertex_index, \"num/den\"], ...]}");
  }
  std::vector<std::pair<DeterministicVertex, Rational>> support;
  for (const auto &item : doc["support"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer()) {
      throw ParseError("support item must be [vertex_index, weight]");
    }
    const auto idx = item[0].get<long long>();
    if (idx < 0 || idx > 255) throw ParseError("vertex index must be in 0..255");
    Rational w = item[1].is_string() ? parse_rational(item[1].get<std::string>())
                                     : (item[1].is_number_integer() ? Rational(item[1].get<long long>())
                                                                    : throw ParseError("weight must be \"num/den\""));
    support.emplace_back(DeterministicVertex(static_cast<std::uint8_t>(idx)), w);
  }
  return LhvModel<Rational>::deterministic(support);
}

}  // namespace bananaworld::io
