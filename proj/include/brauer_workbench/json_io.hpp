#pragma once

// JSON encodings of every report. Field elements and arbitrary-precision values are decimal
// strings; degrees, indices, orders and symbol values are JSON integers.

#include <json.hpp>

#include "brauer_workbench/brauer.hpp"
#include "brauer_workbench/grouplat.hpp"
#include "brauer_workbench/lattice.hpp"
#include "brauer_workbench/procyclic.hpp"
#include "brauer_workbench/quaternion.hpp"

namespace bw::json_io {

using Json = nlohmann::json;

template <class Scalar>
Json to_json(const quat::ClassifyVerdict<Scalar>& v) {
  Json j;
  j["kind"] = quat::to_string(v.kind);
  if (v.kind == quat::Kind::Division) {
    Json obs = Json::array();
    for (const auto& [place, s] : v.obstruction) obs.push_back(Json::array({place.to_string(), s}));
    j["obstruction"] = obs;
  } else {
    j["witness"] = v.witness->coordinates();
  }
  return j;
}

Json to_json(const brauer::NormCokernelReport& r);
Json to_json(const brauer::SurjectivityReport& r);
Json to_json(const brauer::T7NormReport& r);
Json to_json(const brauer::SqrtCheck& r);
Json to_json(const procyclic::AntiClosureReport& r);
Json to_json(const lattice::TowerReport& r);
Json to_json(const lattice::FourthPowerReport& r);
Json to_json(const lattice::LatticeCheck& r);

// Inverse of to_json(TowerReport). Throws InvalidArgument on schema violations.
lattice::TowerReport tower_from_json(const Json& j);

// {name, order, table} or {name, degree, generators}.
grouplat::FiniteGroup group_from_json(const Json& j);

// Plain "key: value" rendering used for non-JSON output.
std::string to_table(const Json& j);

}  // namespace bw::json_io
