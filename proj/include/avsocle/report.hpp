#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "avsocle/diagrams.hpp"
#include "avsocle/ranges.hpp"
#include "avsocle/socle.hpp"
#include "avsocle/theta_orbits.hpp"
#include "avsocle/weyl.hpp"

namespace avsocle {

// All report JSON uses ordered objects (stable key order) and serializes
// rationals as exact strings, "p" for integers and "p/q" otherwise, so that
// parse-then-dump round trips are byte identical and floats never appear.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.to_string(); }

inline Json to_json(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(to_json(r));
  return arr;
}

inline Json to_json(const SignedPair& pair) {
  Json j = Json::object();
  j["m"] = pair.m_parts;
  j["n"] = pair.n_parts;
  return j;
}

inline Json to_json(const Constituent& con) {
  Json j = Json::object();
  j["pair"] = to_json(con.pair);
  j["h"] = to_json(con.h);
  j["diagram"] = con.diagram.to_string();
  return j;
}

inline Json to_json(const VermaEmbedding& verma) {
  Json j = Json::object();
  j["source_weight"] = to_json(verma.source_weight);
  j["target_weight"] = to_json(verma.target_weight);
  return j;
}

inline Json to_json(const RangeFlags& flags, const DFMParam& param) {
  Json j = Json::object();
  j["pair"] = to_json(param.pair);
  j["h"] = to_json(param.h);
  j["good"] = flags.good;
  j["weakly_fair"] = flags.weakly_fair;
  j["mediocre"] = flags.mediocre;
  const char* label = flags.good          ? "good"
                      : flags.weakly_fair ? "weakly_fair"
                      : flags.mediocre    ? "mediocre"
                                          : "outside";
  j["label"] = label;
  return j;
}

inline Json to_json(const std::vector<PairDiagram>& table) {
  Json arr = Json::array();
  for (const auto& pd : table) {
    Json j = Json::object();
    j["pair"] = to_json(pd.pair);
    j["diagram"] = pd.diagram.to_string();
    arr.push_back(std::move(j));
  }
  return arr;
}

inline Json to_json(const ComplexExtras& e) {
  Json j = Json::object();
  j["palindrome"] = e.palindrome;
  j["involution"] = e.involution;
  j["duflo"] = e.duflo;
  j["assumption_a"] = e.assumption_a;
  if (!e.isomorphic_to.empty()) j["isomorphic_to"] = e.isomorphic_to;
  return j;
}

inline Json to_json(const SpehExtras& e) {
  Json j = Json::object();
  j["d"] = e.d;
  j["d_star"] = e.d_star;
  j["c_prime"] = e.c_prime;
  Json speh = Json::array();
  for (const auto& f : e.speh) {
    Json s = Json::object();
    s["d"] = f.d;
    s["parameter"] = f.parameter;
    speh.push_back(std::move(s));
  }
  j["speh"] = std::move(speh);
  Json exps = Json::array();
  for (const auto& [a, b] : e.exponents) exps.push_back(Json::array({to_json(a), to_json(b)}));
  j["exponents"] = std::move(exps);
  j["sign_twist_exists"] = e.sign_twist_exists;
  j["structural"] = e.structural;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline Json to_json(const SocleReport& report) {
  Json j = Json::object();
  j["group"] = report.group;
  Json cons = Json::array();
  for (const auto& con : report.constituents) cons.push_back(to_json(con));
  for (const auto& label : report.labels) {
    Json l = Json::object();
    l["label"] = label;
    cons.push_back(std::move(l));
  }
  j["constituents"] = std::move(cons);
  j["gk_dim"] = report.gk_dim;
  if (report.verma_embedding) j["verma_embedding"] = to_json(*report.verma_embedding);
  if (std::holds_alternative<ComplexExtras>(report.extras))
    j["extras"] = to_json(std::get<ComplexExtras>(report.extras));
  else if (std::holds_alternative<SpehExtras>(report.extras))
    j["extras"] = to_json(std::get<SpehExtras>(report.extras));
  else
    j["extras"] = Json::object();
  return j;
}

}  // namespace avsocle
