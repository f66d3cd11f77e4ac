// Copyright 2026 The symcontain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON wire format for certificates.
//
// Field names are fixed. Integers whose magnitude exceeds 2^53 - 1 are
// written as decimal strings; readers accept either form. Fields that are
// always strings on the wire ("s", trace "lhs"/"rhs") stay strings.

#ifndef SYMCONTAIN_CERTIFICATE_JSON_HPP
#define SYMCONTAIN_CERTIFICATE_JSON_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcontain/determinantal.hpp"
#include "symcontain/points.hpp"
#include "symcontain/star.hpp"

namespace symcontain {

using Json = nlohmann::ordered_json;

inline constexpr std::int64_t kMaxSafeJsonInteger = (std::int64_t{1} << 53) - 1;

inline Json json_int(std::int64_t v) {
  if (v > kMaxSafeJsonInteger || v < -kMaxSafeJsonInteger) return std::to_string(v);
  return v;
}

inline Json json_int(const BigInt& v) {
  if (v > kMaxSafeJsonInteger || v < -kMaxSafeJsonInteger) return v.str();
  return static_cast<std::int64_t>(v);
}

template <class Range>
Json json_int_array(const Range& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(json_int(static_cast<std::int64_t>(v)));
  return arr;
}

namespace detail {

inline BigInt read_big(const Json& j, const char* field) {
  const auto& v = j.at(field);
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
      throw invalid_input(std::string("field '") + field + "' is not a decimal integer");
    }
    return BigInt(s);
  }
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  throw invalid_input(std::string("field '") + field + "' is not an integer");
}

inline std::int64_t read_int(const Json& j, const char* field) {
  const BigInt v = read_big(j, field);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw invalid_input(std::string("field '") + field + "' out of range");
  }
  return static_cast<std::int64_t>(v);
}

inline std::vector<std::int64_t> read_int_array(const Json& j, const char* field) {
  std::vector<std::int64_t> out;
  for (const auto& v : j.at(field)) {
    Json wrap = {{"v", v}};
    out.push_back(read_int(wrap, "v"));
  }
  return out;
}

inline IndexSet read_index_array(const Json& j, const char* field) {
  IndexSet out;
  for (auto v : read_int_array(j, field)) {
    if (v < 0) throw invalid_input(std::string("negative index in '") + field + "'");
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

inline void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", std::string{}) != kind) {
    throw invalid_input(std::string("expected a '") + kind + "' certificate");
  }
}

}  // namespace detail

inline Json to_json(const StarCertificate& cert) {
  const auto& cfg = cert.config;
  Json j;
  j["kind"] = "star-containment";
  j["n"] = json_int(static_cast<std::int64_t>(cfg.n()));
  j["h"] = json_int(static_cast<std::int64_t>(cfg.h()));
  j["m"] = json_int(cert.m);
  j["r"] = json_int(cert.r);
  j["c"] = json_int(cert.c);
  j["degrees"] = json_int_array(cfg.degrees());
  j["input_exponents"] = json_int_array(cert.input.entries());
  j["base_vector"] = json_int_array(cert.base.entries());
  j["tight_subset"] = json_int_array(cert.tight_subset);
  j["leftover"] = json_int_array(cert.leftover.entries());
  j["leftover_degree"] = json_int(cert.leftover_degree);
  j["required_degree"] = json_int(cert.required_degree);
  j["verified"] = star_verify_certificate(cert);
  return j;
}

/// Ambient dimension is not part of the wire format; it is taken as n.
inline StarCertificate star_certificate_from_json(const Json& j) {
  detail::expect_kind(j, "star-containment");
  const auto n = detail::read_int(j, "n");
  const auto h = detail::read_int(j, "h");
  if (n < 1 || h < 1) throw invalid_input("n and h must be positive");
  StarConfig cfg(static_cast<std::size_t>(n), static_cast<std::size_t>(h), detail::read_int_array(j, "degrees"));
  return StarCertificate{cfg,
                         ExponentVector(detail::read_int_array(j, "input_exponents")),
                         detail::read_int(j, "m"),
                         detail::read_int(j, "r"),
                         detail::read_int(j, "c"),
                         ExponentVector(detail::read_int_array(j, "base_vector")),
                         detail::read_index_array(j, "tight_subset"),
                         ExponentVector(detail::read_int_array(j, "leftover")),
                         detail::read_int(j, "leftover_degree"),
                         detail::read_int(j, "required_degree")};
}

inline Json to_json(const DetCertificate& cert) {
  const auto& shape = cert.shape;
  Json js;
  js["flavor"] = std::string(flavor_name(shape.flavor()));
  js["p"] = json_int(shape.p());
  if (shape.flavor() == Flavor::generic) js["q"] = json_int(shape.q());
  js["t"] = json_int(shape.t());

  Json j;
  j["kind"] = "det-containment";
  j["shape"] = js;
  j["mode"] = std::string(mode_name(cert.mode));
  j["sizes"] = json_int_array(cert.sizes);
  j["m"] = json_int(cert.m);
  j["r"] = json_int(cert.r);
  if (cert.c) j["c"] = json_int(*cert.c);
  Json groups = Json::array();
  for (const auto& g : cert.groups) {
    Json jg;
    jg["members"] = json_int_array(g.members);
    if (g.shrink) {
      Json sh;
      sh["index"] = json_int(static_cast<std::int64_t>(g.shrink->index));
      sh["amount"] = json_int(g.shrink->amount);
      jg["shrink"] = sh;
    }
    groups.push_back(jg);
  }
  j["groups"] = groups;
  j["leftover"] = json_int_array(cert.leftover);
  j["madic_budget"] = json_int(cert.madic_budget);
  j["required_budget"] = json_int(cert.required_budget);
  j["verified"] = det_verify_certificate(cert);
  return j;
}

inline MatrixShape shape_from_json(const Json& js) {
  const auto flavor = parse_flavor(js.at("flavor").get<std::string>());
  const auto p = detail::read_int(js, "p");
  const auto t = detail::read_int(js, "t");
  switch (flavor) {
    case Flavor::generic: return MatrixShape::generic(p, detail::read_int(js, "q"), t);
    case Flavor::symmetric: return MatrixShape::symmetric(p, t);
    case Flavor::pfaffian: return MatrixShape::pfaffian(p, t);
  }
  throw invalid_input("unknown flavor");
}

inline DetCertificate det_certificate_from_json(const Json& j) {
  detail::expect_kind(j, "det-containment");
  DetCertificate cert{shape_from_json(j.at("shape")), parse_mode(j.at("mode").get<std::string>()), {}, 0, 0,
                      std::nullopt, {}, {}, 0, 0, DetConstruction::greedy};
  cert.sizes = detail::read_int_array(j, "sizes");
  cert.m = detail::read_int(j, "m");
  cert.r = detail::read_int(j, "r");
  if (j.contains("c")) cert.c = detail::read_int(j, "c");
  for (const auto& jg : j.at("groups")) {
    DetGroup g;
    g.members = detail::read_index_array(jg, "members");
    if (jg.contains("shrink")) {
      const auto& sh = jg.at("shrink");
      const auto idx = detail::read_int(sh, "index");
      if (idx < 0) throw invalid_input("negative shrink index");
      g.shrink = Shrink{static_cast<Index>(idx), detail::read_int(sh, "amount")};
    }
    cert.groups.push_back(std::move(g));
  }
  cert.leftover = detail::read_index_array(j, "leftover");
  cert.madic_budget = detail::read_int(j, "madic_budget");
  cert.required_budget = detail::read_int(j, "required_budget");
  return cert;
}

inline Json to_json(const GeneralPointsCertificate& cert) {
  Json j;
  j["kind"] = "general-points";
  j["N"] = json_int(static_cast<std::int64_t>(cert.N));
  j["m"] = json_int(static_cast<std::int64_t>(cert.m));
  j["s"] = cert.s.str();
  j["k"] = json_int(cert.k);
  j["w"] = json_int(static_cast<std::int64_t>(cert.w));
  j["reg_bound"] = json_int(cert.reg_bound);
  j["r_threshold"] = json_int(static_cast<std::int64_t>(cert.r_threshold));
  j["lemma24_ok"] = cert.binomial_ok;
  Json trace = Json::array();
  for (const auto& e : cert.trace) {
    Json je;
    je["name"] = e.name;
    je["lhs"] = e.lhs.str();
    je["rhs"] = e.rhs.str();
    je["holds"] = e.holds();
    trace.push_back(je);
  }
  j["trace"] = trace;
  j["granted"] = cert.granted;
  return j;
}

inline GeneralPointsCertificate general_points_certificate_from_json(const Json& j) {
  detail::expect_kind(j, "general-points");
  GeneralPointsCertificate cert;
  const auto N = detail::read_int(j, "N");
  const auto m = detail::read_int(j, "m");
  const auto w = detail::read_int(j, "w");
  const auto r = detail::read_int(j, "r_threshold");
  if (N < 1 || m < 1 || w < 0 || r < 0) throw invalid_input("N, m must be positive; w, r_threshold nonnegative");
  cert.N = static_cast<std::uint64_t>(N);
  cert.m = static_cast<std::uint64_t>(m);
  cert.s = detail::read_big(j, "s");
  cert.k = detail::read_big(j, "k");
  cert.w = static_cast<std::uint64_t>(w);
  cert.reg_bound = detail::read_big(j, "reg_bound");
  cert.r_threshold = static_cast<std::uint64_t>(r);
  cert.binomial_ok = j.at("lemma24_ok").get<bool>();
  for (const auto& je : j.at("trace")) {
    TraceEntry e{je.at("name").get<std::string>(), detail::read_big(je, "lhs"), detail::read_big(je, "rhs"), false};
    e.strict = strict_trace_entry(e.name);
    if (je.at("holds").get<bool>() != e.holds()) throw invalid_input("trace entry '" + e.name + "' misreports holds");
    cert.trace.push_back(std::move(e));
  }
  cert.granted = j.at("granted").get<bool>();
  if (cert.N >= 1 && cert.m >= 1) {
    cert.demailly_rhs = demailly_from_containment(cert.k * cert.m, cert.m, cert.N);
  }
  return cert;
}

/// Parses any certificate kind and re-verifies it from scratch. Malformed
/// documents verify as false.
inline bool verify_certificate_json(const Json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "star-containment") return star_verify_certificate(star_certificate_from_json(j));
    if (kind == "det-containment") return det_verify_certificate(det_certificate_from_json(j));
    if (kind == "general-points") return verify_general_points_certificate(general_points_certificate_from_json(j));
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace symcontain

#endif  // SYMCONTAIN_CERTIFICATE_JSON_HPP
