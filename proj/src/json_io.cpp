#include "brauer_workbench/json_io.hpp"

#include <sstream>

#include "brauer_workbench/errors.hpp"

namespace bw::json_io {

Json to_json(const brauer::NormCokernelReport& r) {
  return Json{{"extension", r.extension},
              {"image_generators", r.image_generators},
              {"image_order", r.image_order},
              {"cokernel_order", r.cokernel_order},
              {"cokernel_structure", r.cokernel_structure}};
}

Json to_json(const brauer::SurjectivityReport& r) {
  Json table = Json::array();
  for (auto [c, x] : r.preimages) table.push_back(Json::array({std::to_string(c), std::to_string(x)}));
  return Json{{"extension", r.extension}, {"surjective", r.surjective}, {"preimages", table}};
}

Json to_json(const brauer::T7NormReport& r) {
  Json levels = Json::array();
  for (const auto& lv : r.levels)
    levels.push_back(Json{{"n", lv.n},
                          {"extension", lv.extension},
                          {"image_order", lv.image_order},
                          {"cokernel_order", lv.cokernel_order},
                          {"surjective", lv.surjective}});
  return Json{{"q", r.q}, {"levels", levels}, {"all_surjective", r.all_surjective}};
}

Json to_json(const brauer::SqrtCheck& r) {
  auto text = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  return Json{{"alpha", Json::array({text(r.alpha.real()), text(r.alpha.imag())})}, {"residual", text(r.residual)}};
}

Json to_json(const procyclic::AntiClosureReport& r) {
  Json j{{"field", r.field}, {"is_trivial", r.is_trivial}, {"degree", r.degree}, {"reason", r.reason}};
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  if (r.generator_min_poly) j["generator_min_poly"] = *r.generator_min_poly;
  if (r.generator) j["generator"] = *r.generator;
  return j;
}

Json to_json(const lattice::TowerReport& r) {
  Json levels = Json::array();
  for (const auto& lv : r.levels)
    levels.push_back(Json{{"i", lv.i},
                          {"min_poly", lv.min_poly},
                          {"ambient", lv.ambient},
                          {"generator", lv.generator},
                          {"degree", lv.degree}});
  Json j{{"kind", r.kind},
         {"base", r.base},
         {"q", r.q},
         {"p", r.p},
         {"ambient_cap_bits", r.ambient_cap_bits},
         {"levels", levels}};
  if (r.alpha) j["alpha"] = *r.alpha;
  return j;
}

Json to_json(const lattice::FourthPowerReport& r) {
  Json table = Json::array();
  for (auto [a, x] : r.witnesses) table.push_back(Json::array({std::to_string(a), std::to_string(x)}));
  return Json{{"q", r.q}, {"all_fourth_powers", r.all_fourth_powers}, {"witnesses", table}};
}

Json to_json(const lattice::LatticeCheck& r) {
  Json j{{"linear", r.linear}, {"degrees_checked", r.degrees_checked}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

lattice::TowerReport tower_from_json(const Json& j) {
  lattice::TowerReport r;
  r.kind = field<std::string>(j, "kind");
  r.base = field<std::string>(j, "base");
  r.q = field<std::uint64_t>(j, "q");
  r.p = field<std::uint64_t>(j, "p");
  if (j.contains("ambient_cap_bits")) r.ambient_cap_bits = field<unsigned>(j, "ambient_cap_bits");
  if (j.contains("alpha")) r.alpha = field<std::string>(j, "alpha");
  const Json levels = field<Json>(j, "levels");
  if (!levels.is_array()) throw InvalidArgument("field 'levels' must be an array");
  for (const auto& l : levels) {
    lattice::TowerLevel lv;
    lv.i = field<unsigned>(l, "i");
    lv.min_poly = field<std::string>(l, "min_poly");
    lv.ambient = field<std::string>(l, "ambient");
    if (l.contains("generator")) lv.generator = field<std::string>(l, "generator");
    lv.degree = field<std::uint64_t>(l, "degree");
    r.levels.push_back(std::move(lv));
  }
  return r;
}

grouplat::FiniteGroup group_from_json(const Json& j) {
  const auto name = field<std::string>(j, "name");
  if (j.contains("table")) {
    auto table = field<std::vector<std::vector<std::size_t>>>(j, "table");
    if (j.contains("order") && field<std::size_t>(j, "order") != table.size())
      throw InvalidArgument("group '" + name + "': order does not match the table");
    return grouplat::FiniteGroup::from_table(name, std::move(table));
  }
  const auto degree = field<std::size_t>(j, "degree");
  const auto gens = field<std::vector<std::vector<std::size_t>>>(j, "generators");
  return grouplat::FiniteGroup::from_permutations(name, degree, gens);
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const std::string key = prefix.empty() ? k : prefix + "." + k;
      if (v.is_object()) {
        render(v, key, os);
      } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        for (std::size_t i = 0; i < v.size(); ++i) render(v[i], key + "[" + std::to_string(i) + "]", os);
      } else {
        os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << (prefix.empty() ? "" : prefix + ": ") << j.dump() << "\n";
  }
}

}  // namespace

std::string to_table(const Json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace bw::json_io
