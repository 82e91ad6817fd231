// Copyright 2026 The twisted-thue authors
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

#include "tthue/config.hpp"

#include "json.hpp"
#include "tthue/errors.hpp"

namespace tthue {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail_validation(const std::string& path, const std::string& what) {
  throw Error(errc::validation_error, path + ": " + what);
}

Rat rational_at(const json& j, const std::string& path) {
  if (!j.is_string())
    fail_validation(path, "rationals must be exact strings like \"3/4\" or \"2\"");
  return parse_exact_rational(j.get<std::string>());
}

Int integer_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Rat q = parse_exact_rational(j.get<std::string>());
    if (q.get_den() != 1) fail_validation(path, "expected an integer");
    return q.get_num();
  }
  fail_validation(path, "expected an integer or an integer string");
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(errc::parse_error, e.what());
  }
  if (!j.is_object()) throw Error(errc::parse_error, "top level must be an object");

  JobConfig cfg;
  if (!j.contains("field") || !j["field"].is_array())
    fail_validation("field", "required integer coefficient array");
  for (std::size_t i = 0; i < j["field"].size(); ++i)
    cfg.field.push_back(integer_at(j["field"][i], "field[" + std::to_string(i) + "]"));
  if (cfg.field.size() < 2) fail_validation("field", "needs at least two coefficients");
  std::size_t d = cfg.field.size() - 1;

  if (!j.contains("gammas") || !j["gammas"].is_array() || j["gammas"].empty())
    fail_validation("gammas", "required non-empty array of coordinate vectors");
  for (std::size_t g = 0; g < j["gammas"].size(); ++g) {
    const auto& row = j["gammas"][g];
    std::string path = "gammas[" + std::to_string(g) + "]";
    if (!row.is_array() || row.size() != d)
      fail_validation(path, "coordinate vector length must equal deg f = " + std::to_string(d));
    std::vector<Rat> coords;
    for (std::size_t i = 0; i < row.size(); ++i)
      coords.push_back(rational_at(row[i], path + "[" + std::to_string(i) + "]"));
    cfg.gammas.push_back(std::move(coords));
  }

  if (j.contains("units")) {
    if (!j["units"].is_array()) fail_validation("units", "must be an array");
    for (std::size_t g = 0; g < j["units"].size(); ++g) {
      const auto& row = j["units"][g];
      std::string path = "units[" + std::to_string(g) + "]";
      if (!row.is_array() || row.size() != d)
        fail_validation(path, "coordinate vector length must equal deg f = " + std::to_string(d));
      std::vector<Rat> coords;
      for (std::size_t i = 0; i < row.size(); ++i)
        coords.push_back(rational_at(row[i], path + "[" + std::to_string(i) + "]"));
      cfg.units.push_back(std::move(coords));
    }
  }

  if (j.contains("manual_valuations")) {
    const auto& mv = j["manual_valuations"];
    if (!mv.is_object()) fail_validation("manual_valuations", "must be an object keyed by prime");
    for (auto it = mv.begin(); it != mv.end(); ++it) {
      Int p(it.key(), 10);
      std::vector<ManualValuation> entries;
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const auto& e = it.value()[i];
        std::string path = "manual_valuations[" + it.key() + "][" + std::to_string(i) + "]";
        ManualValuation m;
        m.ideal_tag = e.value("ideal", "P" + std::to_string(i));
        m.e = e.value("e", 1ul);
        m.f_degree = e.value("f", 1ul);
        if (!e.contains("valuation")) fail_validation(path, "missing valuation");
        m.valuation = e["valuation"].get<long>();
        entries.push_back(std::move(m));
      }
      cfg.manual_valuations[p] = std::move(entries);
    }
  }

  if (j.contains("search")) {
    const auto& s = j["search"];
    if (!s.is_object()) fail_validation("search", "must be an object");
    if (s.contains("T")) cfg.search.T = s["T"].get<unsigned long>();
    if (s.contains("y_cap")) cfg.search.y_cap = integer_at(s["y_cap"], "search.y_cap");
    if (s.contains("report_trivial")) cfg.search.report_trivial = s["report_trivial"].get<bool>();
    if (s.contains("extend_negative")) cfg.search.extend_negative = s["extend_negative"].get<bool>();
    if (cfg.search.y_cap < 1) fail_validation("search.y_cap", "must be at least 1");
  }

  if (j.contains("precision")) {
    long p = j["precision"].get<long>();
    if (p < kPrecMin || p > kPrecCap)
      fail_validation("precision", "must lie in [" + std::to_string(kPrecMin) + ", " +
                                       std::to_string(kPrecCap) + "]");
    cfg.precision = p;
  }
  if (j.contains("t0")) cfg.t0 = j["t0"].get<unsigned long>();
  if (j.contains("kappa_override")) cfg.kappa_override = j["kappa_override"].get<double>();
  if (j.contains("assume_units_fundamental"))
    cfg.assume_units_fundamental = j["assume_units_fundamental"].get<bool>();
  return cfg;
}

std::string config_to_json(const JobConfig& cfg) {
  json j;
  j["field"] = json::array();
  for (const auto& c : cfg.field) j["field"].push_back(c.get_str());
  j["gammas"] = json::array();
  for (const auto& g : cfg.gammas) {
    json row = json::array();
    for (const auto& q : g) row.push_back(q.get_str());
    j["gammas"].push_back(row);
  }
  if (!cfg.units.empty()) {
    j["units"] = json::array();
    for (const auto& g : cfg.units) {
      json row = json::array();
      for (const auto& q : g) row.push_back(q.get_str());
      j["units"].push_back(row);
    }
  }
  if (!cfg.manual_valuations.empty()) {
    json mv = json::object();
    for (const auto& [p, entries] : cfg.manual_valuations) {
      json list = json::array();
      for (const auto& e : entries) {
        json o;
        o["ideal"] = e.ideal_tag;
        o["e"] = e.e;
        o["f"] = e.f_degree;
        o["valuation"] = e.valuation;
        list.push_back(o);
      }
      mv[p.get_str()] = list;
    }
    j["manual_valuations"] = mv;
  }
  json s;
  s["T"] = cfg.search.T;
  s["y_cap"] = cfg.search.y_cap.get_str();
  s["report_trivial"] = cfg.search.report_trivial;
  s["extend_negative"] = cfg.search.extend_negative;
  j["search"] = s;
  j["precision"] = static_cast<long>(cfg.precision);
  j["t0"] = cfg.t0;
  if (cfg.kappa_override) j["kappa_override"] = *cfg.kappa_override;
  j["assume_units_fundamental"] = cfg.assume_units_fundamental;
  return j.dump(2);
}

}  // namespace tthue
