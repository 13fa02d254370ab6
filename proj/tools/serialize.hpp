#pragma once

// JSON and text formatting of exact and floating values for CLI output.

#include <nlohmann/json.hpp>

#include <charconv>
#include <string>

#include "qvbs/laurent.hpp"
#include "qvbs/ratq.hpp"
#include "qvbs/surd.hpp"

namespace qvbs::cli {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// {exponent: "rational"} in ascending exponent order.
inline json to_json(const LaurentQ& p) {
  json j = json::object();
  for (const auto& t : p.terms()) j[std::to_string(t.exp)] = t.coeff.get_str();
  return j;
}

inline json to_json(const RatQ& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline json to_json(const Surd& s) { return json{{"coeff", to_json(s.coeff())}, {"sqrt", s.radicand().str()}}; }

/// Exact rational value of r at a rational q0.
inline std::string exact_value(const RatQ& r, const mpq_class& q0) { return r.eval(q0).get_str(); }

}  // namespace qvbs::cli
