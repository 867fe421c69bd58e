#pragma once

// JSON form of SuiteReport. Rationals travel as "p/q" strings, matrices as
// [["e11","e12"],["e21","e22"]].

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "biperiodic/identities.hpp"

namespace biperiodic {

using json = nlohmann::json;

inline json to_json_value(const Rational& r) { return r.to_string(); }

inline json to_json_value(const RatMat& m) {
  return json::array({json::array({m.e11.to_string(), m.e12.to_string()}),
                      json::array({m.e21.to_string(), m.e22.to_string()})});
}

inline json to_json_value(const CheckValue& v) {
  return std::visit([](const auto& x) { return to_json_value(x); }, v);
}

inline json to_json_value(const SeqParams& p) { return {{"a", p.a().to_string()}, {"b", p.b().to_string()}}; }

inline RatMat matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2) {
    throw std::invalid_argument("matrix must be a 2x2 array of strings");
  }
  auto r = [](const json& e) { return Rational::parse(e.get<std::string>()); };
  return {r(j[0][0]), r(j[0][1]), r(j[1][0]), r(j[1][1])};
}

inline CheckValue check_value_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return matrix_from_json(j);
}

inline SeqParams params_from_json(const json& j) {
  return {Rational::parse(j.at("a").get<std::string>()), Rational::parse(j.at("b").get<std::string>())};
}

inline json to_json(const SuiteReport& report) {
  json params = json::array();
  for (const auto& p : report.params) params.push_back(to_json_value(p));

  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"name", f.name},
                        {"indices", f.indices},
                        {"params", to_json_value(f.params)},
                        {"lhs", to_json_value(f.lhs)},
                        {"rhs", to_json_value(f.rhs)}});
  }

  json skipped = json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});

  json expected = json::array();
  for (const auto& e : report.expected_failures) {
    expected.push_back({{"name", e.name}, {"count", e.count}, {"reason", e.reason}});
  }

  return {{"suite", report.suite},
          {"params", params},
          {"checks_run", report.checks_run},
          {"failures", failures},
          {"skipped", skipped},
          {"expected_failures", expected}};
}

/// Inverse of to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on schema violations.
inline SuiteReport report_from_json(const json& j) {
  SuiteReport report;
  report.suite = j.at("suite").get<std::string>();
  for (const auto& p : j.at("params")) report.params.push_back(params_from_json(p));
  report.checks_run = j.at("checks_run").get<long>();
  for (const auto& f : j.at("failures")) {
    IdentityCheck c{f.at("name").get<std::string>(),
                    f.at("indices").get<std::vector<long>>(),
                    params_from_json(f.at("params")),
                    check_value_from_json(f.at("lhs")),
                    check_value_from_json(f.at("rhs")),
                    false,
                    ""};
    c.holds = c.lhs == c.rhs;
    report.failures.push_back(std::move(c));
  }
  for (const auto& s : j.at("skipped")) {
    report.skipped.push_back({s.at("name").get<std::string>(), s.at("reason").get<std::string>()});
  }
  if (j.contains("expected_failures")) {
    for (const auto& e : j.at("expected_failures")) {
      report.expected_failures.push_back(
          {e.at("name").get<std::string>(), e.at("count").get<long>(), e.at("reason").get<std::string>()});
    }
  }
  return report;
}

}  // namespace biperiodic
