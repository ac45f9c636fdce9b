#pragma once

// JSON emission. Field order is fixed:
//   {"cartan": {"type", "matrix"}, "word", "matrices": {V, W, S, T, C, P, X,
//    Ltilde, L}, "checks": {name: {"pass", ["witness"]}}, "conventions",
//    "pass"}

#include <string>
#include <vector>

#include <json.hpp>

#include "lusztig/tropical.hpp"
#include "lusztig/verify.hpp"

namespace lusztig {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

inline ordered_json to_json(const CartanSpec& cartan) {
  ordered_json j;
  j["type"] = cartan.label().empty() ? ordered_json(nullptr) : ordered_json(cartan.label());
  j["matrix"] = to_json(cartan.matrix());
  return j;
}

inline ordered_json to_json(const ConeReport& report) {
  ordered_json j;
  j["cartan"] = to_json(report.cartan);
  j["word"] = report.word;
  ordered_json mats = ordered_json::object();
  for (const auto& [name, m] : report.matrices) mats[name] = to_json(m);
  j["matrices"] = std::move(mats);
  ordered_json checks = ordered_json::object();
  for (const auto& [name, r] : report.checks) {
    ordered_json c;
    c["pass"] = r.pass;
    if (!r.pass) c["witness"] = r.witness;
    checks[name] = std::move(c);
  }
  j["checks"] = std::move(checks);
  ordered_json conv;
  conv["primary"] = report.conventions.primary;
  conv["transposed_cartan"] = report.conventions.transposed_cartan;
  conv["coincide"] = report.conventions.coincide;
  j["conventions"] = std::move(conv);
  j["pass"] = report.all_pass();
  return j;
}

inline ordered_json to_json(const TropicalForm& form) {
  ordered_json j;
  j["numerator"] = ordered_json(std::vector<IntVec>(form.num_exponents.begin(), form.num_exponents.end()));
  j["denominator"] = ordered_json(std::vector<IntVec>(form.den_exponents.begin(), form.den_exponents.end()));
  return j;
}

}  // namespace lusztig
