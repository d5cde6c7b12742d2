// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "json.hpp"

namespace mixedvol {

namespace {

using Json = nlohmann::ordered_json;

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

int Element(const Json& j) {
  Require(j.is_number_integer(), "ground elements must be integers");
  const auto v = j.get<int64_t>();
  Require(v >= 1 && v <= kMaxElement,
          "ground element " + std::to_string(v) + " outside 1.." + std::to_string(kMaxElement));
  return static_cast<int>(v);
}

std::vector<int> ElementList(const Json& j, const std::string& what) {
  Require(j.is_array(), what + " must be an array of integers");
  std::vector<int> out;
  for (const Json& e : j) out.push_back(Element(e));
  return out;
}

std::vector<std::vector<int>> SetList(const Json& j, const std::string& what) {
  Require(j.is_array(), what + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const Json& s : j) out.push_back(ElementList(s, what + " entries"));
  return out;
}

// Type errors inside a well-formed JSON document are input errors too.
template <typename Fn>
auto Guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("unexpected JSON content: ") + e.what());
  }
}

Json ToJsonList(ElementSet s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(e); });
  return out;
}

}  // namespace

static Matroid ParseMatroidDocument(const Json& doc) {
  Require(doc.is_object(), "matroid document must be a JSON object");
  Require(doc.contains("ground_set"), "matroid document needs \"ground_set\"");
  const std::vector<int> ground = ElementList(doc.at("ground_set"), "\"ground_set\"");
  Require(std::set<int>(ground.begin(), ground.end()).size() == ground.size(),
          "\"ground_set\" repeats an element");
  const bool has_bases = doc.contains("bases");
  const bool has_flats = doc.contains("flats");
  Require(has_bases != has_flats, "matroid document needs exactly one of \"bases\" and \"flats\"");
  for (const auto& [key, value] : doc.items()) {
    Require(key == "ground_set" || key == "bases" || key == "flats",
            "unknown key \"" + key + "\" in matroid document");
  }
  if (has_bases) return Matroid::FromBases(ground, SetList(doc.at("bases"), "\"bases\""));
  const ElementSet e = ElementSet::Of(ground);
  std::vector<ElementSet> flats;
  for (const auto& f : SetList(doc.at("flats"), "\"flats\"")) {
    const ElementSet s = ElementSet::Of(f);
    Require(s.size() == static_cast<int>(f.size()), "a flat repeats an element");
    Require(s.subset_of(e), "flat {" + s.label() + "} is not a subset of the ground set");
    flats.push_back(s);
  }
  return Matroid::FromFlats(e, std::move(flats));
}

std::string MatroidToJson(const Matroid& m) {
  Json doc;
  doc["ground_set"] = ToJsonList(m.ground());
  Json bases = Json::array();
  for (ElementSet b : m.bases()) bases.push_back(ToJsonList(b));
  doc["bases"] = std::move(bases);
  return doc.dump() + "\n";
}

std::string PolyToJson(const VolPolynomial& vol) {
  Json doc;
  doc["degree"] = vol.degree;
  Json terms = Json::array();
  for (const auto& [mono, coeff] : vol.poly.sorted_terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : mono.factors()) exps[v.label()] = e;
    terms.push_back(Json{{"coeff", ToString(coeff)}, {"exponents", std::move(exps)}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

VarId ParseLabel(const std::string& label) {
  Require(!label.empty(), "empty variable label");
  ElementSet s;
  int last = -1;
  std::stringstream in(label);
  std::string part;
  while (std::getline(in, part, ',')) {
    Require(!part.empty() && part.size() <= 2 &&
                part.find_first_not_of("0123456789") == std::string::npos,
            "malformed variable label \"" + label + "\"");
    const int e = std::stoi(part);
    Require(e <= kMaxElement && e > last,
            "variable label \"" + label + "\" must list ascending elements in 0.." +
                std::to_string(kMaxElement));
    last = e;
    s = s.with(e);
  }
  Require(label.back() != ',', "malformed variable label \"" + label + "\"");
  return s;
}

static VolPolynomial ParsePolyDocument(const Json& doc) {
  Require(doc.is_object() && doc.contains("degree") && doc.contains("terms"),
          "polynomial document needs \"degree\" and \"terms\"");
  Require(doc.at("degree").is_number_integer(), "\"degree\" must be an integer");
  Require(doc.at("terms").is_array(), "\"terms\" must be an array");
  VolPolynomial vol;
  vol.degree = doc.at("degree").get<int>();
  vol.method = "file";
  for (const Json& t : doc.at("terms")) {
    Require(t.is_object() && t.contains("coeff") && t.contains("exponents"),
            "each term needs \"coeff\" and \"exponents\"");
    Require(t.at("coeff").is_string(), "\"coeff\" must be a string \"p/q\"");
    Require(t.at("exponents").is_object(), "\"exponents\" must be an object");
    std::vector<Monomial::Factor> factors;
    std::set<VarId> seen;
    for (const auto& [key, e] : t.at("exponents").items()) {
      Require(e.is_number_integer() && e.get<int64_t>() >= 1,
              "exponents must be positive integers");
      const VarId v = ParseLabel(key);
      Require(seen.insert(v).second, "variable repeated within a term");
      factors.emplace_back(v, e.get<uint32_t>());
    }
    const Monomial m(std::move(factors));
    Require(vol.poly.coefficient(m) == 0, "monomial listed twice");
    const Rational c = ParseRational(t.at("coeff").get<std::string>());
    Require(c != 0, "zero coefficients are not stored");
    vol.poly.add_term(m, c);
  }
  return vol;
}

Matroid ParseMatroidJson(const std::string& text) {
  return Guarded([&] { return ParseMatroidDocument(Parse(text)); });
}

VolPolynomial ParsePolyJson(const std::string& text) {
  return Guarded([&] { return ParsePolyDocument(Parse(text)); });
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(static_cast<bool>(out), "cannot write " + path);
  out << contents;
  out.flush();
  Require(static_cast<bool>(out), "cannot write " + path);
}

}  // namespace mixedvol
