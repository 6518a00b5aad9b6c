#include "slnchar/json_io.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "slnchar/errors.hpp"

namespace slnchar::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInput(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::pair<Json, Json>> pairs(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::pair<Json, Json>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) malformed(std::string(what) + " entries must be pairs");
    out.emplace_back(item[0], item[1]);
  }
  return out;
}

}  // namespace

Json encode(const TorsionPoint& t) { return t.to_string(); }

Json encode(const Partition& p) { return p.parts(); }

Json encode(const FrobeniusOrbit& o) {
  Json out = Json::array();
  for (const auto& t : o.points()) out.push_back(encode(t));
  return out;
}

Json encode(const GLCharLabel& chi) {
  Json s = Json::array(), lambda = Json::array();
  for (std::size_t i = 0; i < chi.s.components.size(); ++i) {
    const auto& c = chi.s.components[i];
    s.push_back(Json::array({encode(c.orbit), c.multiplicity}));
    lambda.push_back(Json::array({encode(c.orbit), encode(chi.lambda.parts[i])}));
  }
  return {{"s", s}, {"lambda", lambda}};
}

Json encode(const SLCharLabel& chi) {
  Json out = encode(chi.gl_label());
  out["xi"] = encode(chi.xi);
  return out;
}

Json encode(const OuterAut& sigma) { return {{"field", sigma.field_exp}, {"graph", sigma.graph_bit}}; }

Json encode(const CyclicElt& x) { return {{"value", x.value}, {"mod", x.modulus}}; }

Json encode(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

// ---------------------------------------------------------------------------

TorsionPoint decode_point(const Json& j) {
  if (!j.is_string()) malformed("torsion point must be a \"num/den\" string");
  return TorsionPoint::parse(j.get<std::string>());
}

Partition decode_partition(const Json& j) {
  if (!j.is_array()) malformed("partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    std::int64_t v = as_int(x, "partition part");
    if (v <= 0 || v > kMaxDegree) malformed("partition part out of range");
    parts.push_back(static_cast<int>(v));
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) malformed("partition must be weakly decreasing");
  if (parts.empty()) malformed("partition must be non-empty");
  return Partition(parts);
}

FrobeniusOrbit decode_orbit(const Json& j, const GroupParams& params) {
  if (!j.is_array() || j.empty()) malformed("orbit must be a non-empty array of points");
  std::vector<TorsionPoint> pts;
  for (const auto& x : j) pts.push_back(decode_point(x));
  FrobeniusOrbit orbit;
  try {
    orbit = FrobeniusOrbit::of(pts.front(), params);
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  auto expected = orbit.points();
  std::sort(pts.begin(), pts.end(), [](const TorsionPoint& a, const TorsionPoint& b) { return a.num() < b.num(); });
  if (pts != expected) malformed("orbit is not closed under the twisted Frobenius");
  return orbit;
}

GLCharLabel decode_gl_label(const Json& j, const GroupParams& params) {
  std::vector<std::pair<FrobeniusOrbit, int>> s;
  for (const auto& [o, m] : pairs(field(j, "s"), "s")) {
    std::int64_t mult = as_int(m, "multiplicity");
    if (mult <= 0 || mult > kMaxDegree) malformed("multiplicity out of range");
    s.emplace_back(decode_orbit(o, params), static_cast<int>(mult));
  }
  std::vector<std::pair<FrobeniusOrbit, Partition>> lam;
  for (const auto& [o, p] : pairs(field(j, "lambda"), "lambda")) lam.emplace_back(decode_orbit(o, params), decode_partition(p));
  if (s.size() != lam.size()) malformed("s and lambda list different orbits");

  std::vector<std::tuple<FrobeniusOrbit, int, Partition>> rows;
  for (const auto& [o, m] : s) {
    auto it = std::find_if(lam.begin(), lam.end(), [&](const auto& x) { return x.first == o; });
    if (it == lam.end()) malformed("orbit in s has no partition");
    rows.emplace_back(o, m, it->second);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  GLCharLabel chi;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && std::get<0>(rows[i - 1]) == std::get<0>(rows[i])) malformed("orbit listed twice");
    chi.s.components.push_back({std::get<0>(rows[i]), std::get<1>(rows[i])});
    chi.lambda.parts.push_back(std::get<2>(rows[i]));
  }
  try {
    chi.validate(params);
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  return chi;
}

SLCharLabel decode_sl_label(const Json& j, const GroupParams& params) {
  GLCharLabel chi = canonical_pair(decode_gl_label(j, params), params);
  const Json& xi = field(j, "xi");
  std::int64_t value = as_int(field(xi, "value"), "xi.value");
  std::int64_t modulus = as_int(field(xi, "mod"), "xi.mod");
  std::int64_t a_lambda = lambda_stabilizer_order(chi, params);
  if (modulus != a_lambda)
    malformed("xi.mod is " + std::to_string(modulus) + " but a_lambda is " + std::to_string(a_lambda));
  if (value < 0 || value >= modulus) malformed("xi.value out of range");
  return {{chi.s}, chi.lambda, CyclicElt(value, modulus)};
}

OuterAut decode_outer_aut(const Json& j, const GroupParams& params) {
  std::int64_t k = as_int(field(j, "field"), "field");
  std::int64_t b = as_int(field(j, "graph"), "graph");
  if (b != 0 && b != 1) malformed("graph must be 0 or 1");
  return OuterAut::normalized(k, static_cast<int>(b), params);
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace slnchar::json_io
