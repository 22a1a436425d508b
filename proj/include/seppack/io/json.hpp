#pragma once

// JSON forms of certificates, packings and reports. Rationals travel as "p/q" strings (plain
// JSON integers are accepted on input), floats as JSON numbers. Needs nlohmann/json.

#include <string>
#include <vector>

#include <json.hpp>

#include "seppack/certificates.hpp"
#include "seppack/errors.hpp"
#include "seppack/planar/packing.hpp"
#include "seppack/report.hpp"

namespace seppack::io {

using Json = nlohmann::json;

inline Json to_json(const Scalar &s) {
  if (s.is_rational())
    return to_string(s.rational());
  return s.floating();
}

inline Scalar scalar_from_json(const Json &j) {
  if (j.is_string())
    return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer())
    return Scalar(Rational(Integer(j.dump())));
  if (j.is_number_float())
    return Scalar(j.get<double>());
  throw ParseError("expected a rational string or a number, got " + j.dump());
}

inline Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(Integer(j.dump()));
  throw ParseError("expected an exact rational (\"p/q\" string or integer), got " + j.dump());
}

inline Json to_json(std::span<const Scalar> xs) {
  Json arr = Json::array();
  for (const auto &x : xs)
    arr.push_back(to_json(x));
  return arr;
}

inline std::vector<Scalar> scalars_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("expected an array of numbers");
  std::vector<Scalar> out;
  for (const auto &x : j)
    out.push_back(scalar_from_json(x));
  return out;
}

inline Json parse_json_text(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Certificates

inline Json to_json(const SeparableCertificate &c) {
  Json pairs = Json::array();
  for (const auto &p : c.pairs())
    pairs.push_back({{"x", to_json(p.x.entries())}, {"phi", to_json(p.phi.coefficients())}});
  return {{"dimension", c.dimension()}, {"pairs", pairs}};
}

inline SeparableCertificate certificate_from_json(const Json &j) {
  try {
    const std::size_t d = j.at("dimension").get<std::size_t>();
    std::vector<CertificatePair> pairs;
    for (const auto &p : j.at("pairs"))
      pairs.push_back({Vec(scalars_from_json(p.at("x"))), Functional(scalars_from_json(p.at("phi")))});
    return SeparableCertificate(d, std::move(pairs));
  } catch (const Json::exception &e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Planar packings

inline Json to_json(const planar::Point &p) { return Json::array({to_string(p.x), to_string(p.y)}); }

inline planar::Point point_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("a point is a two-element array, got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Json to_json(const planar::SymmetricPolygon &K) {
  Json v = Json::array();
  for (const auto &p : K.vertices())
    v.push_back(to_json(p));
  return {{"vertices", v}};
}

inline planar::SymmetricPolygon body_from_json(const Json &j) {
  try {
    std::vector<planar::Point> vs;
    for (const auto &p : j.at("vertices"))
      vs.push_back(point_from_json(p));
    return planar::SymmetricPolygon(std::move(vs));
  } catch (const Json::exception &e) {
    throw ParseError(std::string("bad body JSON: ") + e.what());
  }
}

/// Unvalidated packing data, so callers can report overlaps themselves.
struct PackingData {
  planar::SymmetricPolygon body;
  std::vector<planar::Point> centers;
};

inline PackingData packing_data_from_json(const Json &j) {
  try {
    PackingData out{body_from_json(j.at("body")), {}};
    for (const auto &c : j.at("centers"))
      out.centers.push_back(point_from_json(c));
    return out;
  } catch (const Json::exception &e) {
    throw ParseError(std::string("bad packing JSON: ") + e.what());
  }
}

inline Json to_json(const planar::PlanarPacking &P) {
  Json cs = Json::array();
  for (const auto &c : P.centers())
    cs.push_back(to_json(c));
  return {{"body", to_json(P.body())}, {"centers", cs}};
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const VerificationReport &r) {
  Json v = Json::array();
  for (const auto &x : r.violations())
    v.push_back({{"i", x.i}, {"j", x.j}, {"condition", x.condition}, {"witness", x.witness}});
  return {{"accepted", r.accepted()}, {"verdict", r.verdict()}, {"violations", v}};
}

} // namespace seppack::io
