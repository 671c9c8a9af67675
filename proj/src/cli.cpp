#include "brauer_workbench/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "brauer_workbench/brauer.hpp"
#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/field_descriptor.hpp"
#include "brauer_workbench/grouplat.hpp"
#include "brauer_workbench/json_io.hpp"
#include "brauer_workbench/lattice.hpp"
#include "brauer_workbench/procyclic.hpp"
#include "brauer_workbench/quaternion.hpp"

namespace bw::cli {

namespace {

using json_io::Json;

std::uint64_t parse_u64(const std::string& flag, const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidArgument(flag + ": expected a nonnegative integer, got '" + text + "'");
  return v;
}

double parse_double(const std::string& flag, const std::string& text) {
  try {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument(flag + ": expected a real number, got '" + text + "'");
  }
}

template <class F>
auto with_flag(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(flag + ": " + e.what());
  }
}

gf::FiniteField finite_field(const std::string& flag, const std::string& text, unsigned max_bits = gf::kDefaultMaxBits) {
  return with_flag(flag, [&] {
    auto d = parse_field_descriptor(text);
    const auto* ff = std::get_if<FiniteFieldDesc>(&d);
    if (!ff) throw InvalidArgument("expected a finite field GF(p) or GF(p^n), got '" + text + "'");
    return gf::FiniteField::make(ff->p, ff->n, max_bits);
  });
}

// Element index of F; a leading minus sign denotes an integer mapped into the prime field.
gf::Value field_element(const gf::FiniteField& F, const std::string& flag, const std::string& text) {
  if (!text.empty() && text[0] == '-') {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw InvalidArgument(flag + ": malformed integer '" + text + "'");
    return F.from_int(v);
  }
  const auto v = parse_u64(flag, text);
  if (!F.contains(v)) throw InvalidArgument(flag + ": " + text + " is not an element index of " + F.descriptor());
  return v;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

struct Globals {
  bool json = false;
  std::string seed_text;
  std::int64_t max_height = 10000;
  unsigned max_ambient = gf::kDefaultMaxBits;

  std::uint64_t seed() const {
    if (!seed_text.empty()) return parse_u64("--seed", seed_text);
    if (const char* env = std::getenv("BRAUER_WORKBENCH_SEED"); env && *env)
      return parse_u64("BRAUER_WORKBENCH_SEED", env);
    return gf::kDefaultSeed;
  }
};

struct QuatArgs {
  std::string base = "Q";
  std::string a;
  std::string b;
  std::string op;
  std::string u;
  std::string v;
};

Json quaternion_json(const std::vector<std::string>& coords) { return Json(coords); }

Json run_quat_classify(const QuatArgs& args, const Globals& g) {
  const auto desc = with_flag("--base", [&] { return parse_field_descriptor(args.base); });
  if (std::holds_alternative<RationalsDesc>(desc)) {
    const auto a = with_flag("-a", [&] { return num::BigRational::parse(args.a); });
    const auto b = with_flag("-b", [&] { return num::BigRational::parse(args.b); });
    quat::RationalAlgebra A(a, b);
    if (g.max_height < 1) throw InvalidArgument("--max-height must be positive");
    return json_io::to_json(quat::classify(A, quat::RationalClassifyOptions{g.max_height}));
  }
  const auto* ff = std::get_if<FiniteFieldDesc>(&desc);
  if (!ff) throw InvalidArgument("--base: quaternion algebras are supported over Q and GF(q) only");
  const auto F = with_flag("--base", [&] { return gf::FiniteField::make(ff->p, ff->n, 16); });
  quat::FiniteAlgebra A(F.element(field_element(F, "-a", args.a)), F.element(field_element(F, "-b", args.b)));
  return json_io::to_json(quat::classify(A));
}

template <class Scalar, class ParseScalar>
Json eval_in(const quat::QuaternionAlgebra<Scalar>& A, const QuatArgs& args, ParseScalar&& parse) {
  auto parse_q = [&](const std::string& flag, const std::string& text) {
    auto parts = split_commas(text);
    if (parts.size() != 4) throw InvalidArgument(flag + ": expected four coordinates t,x,y,z");
    return A.element(parse(flag, parts[0]), parse(flag, parts[1]), parse(flag, parts[2]), parse(flag, parts[3]));
  };
  if (args.u.empty()) throw InvalidArgument("--u: required");
  const auto u = parse_q("--u", args.u);
  if (args.op == "norm") return Json{{"norm", quat::ScalarTraits<Scalar>::text(u.norm())}};
  if (args.op == "conjugate") return Json{{"result", quaternion_json(u.conjugate().coordinates())}};
  if (args.op == "inverse") {
    try {
      return Json{{"result", quaternion_json(quat::inverse(u).coordinates())}};
    } catch (const quat::ZeroNormError<Scalar>& e) {
      throw ConstructionError(std::string(e.what()) + "; zero-divisor candidate (" + args.u + ")");
    }
  }
  if (args.op == "multiply") {
    if (args.v.empty()) throw InvalidArgument("--v: required for multiply");
    const auto v = parse_q("--v", args.v);
    return Json{{"result", quaternion_json((u * v).coordinates())}};
  }
  throw InvalidArgument("--op: expected multiply, norm, inverse or conjugate, got '" + args.op + "'");
}

Json run_quat_eval(const QuatArgs& args) {
  const auto desc = with_flag("--base", [&] { return parse_field_descriptor(args.base); });
  if (std::holds_alternative<RationalsDesc>(desc)) {
    auto parse = [](const std::string& flag, const std::string& t) {
      return with_flag(flag, [&] { return num::BigRational::parse(t); });
    };
    quat::RationalAlgebra A(parse("-a", args.a), parse("-b", args.b));
    return eval_in(A, args, parse);
  }
  const auto* ff = std::get_if<FiniteFieldDesc>(&desc);
  if (!ff) throw InvalidArgument("--base: quaternion algebras are supported over Q and GF(q) only");
  const auto F = with_flag("--base", [&] { return gf::FiniteField::make(ff->p, ff->n); });
  auto parse = [&F](const std::string& flag, const std::string& t) { return F.element(field_element(F, flag, t)); };
  quat::FiniteAlgebra A(parse("-a", args.a), parse("-b", args.b));
  return eval_in(A, args, parse);
}

struct TowerArgs {
  std::string kind;
  std::string q;
  std::string p;
  std::string depth = "1";
  std::string alpha;
  std::string report;
  std::string bound = "1";
};

Json run_tower_build(const TowerArgs& t, const Globals& g) {
  lattice::TowerOptions options;
  options.max_ambient_bits = g.max_ambient;
  options.factor.seed = g.seed();
  const auto depth = static_cast<unsigned>(parse_u64("--depth", t.depth));
  if (t.kind == "artin-schreier") {
    if (t.p.empty()) throw InvalidArgument("--p: required for an artin-schreier tower");
    return json_io::to_json(lattice::build_artin_schreier_tower(parse_u64("--p", t.p), depth, options));
  }
  if (t.kind == "kummer") {
    if (t.q.empty() || t.p.empty()) throw InvalidArgument("--q, --p: required for a kummer tower");
    std::optional<gf::Value> alpha;
    if (!t.alpha.empty()) alpha = parse_u64("--alpha", t.alpha);
    return json_io::to_json(
        lattice::build_kummer_tower(parse_u64("--q", t.q), parse_u64("--p", t.p), depth, options, alpha));
  }
  if (t.kind == "t7") {
    if (t.q.empty()) throw InvalidArgument("--q: required for a t7 tower");
    return json_io::to_json(lattice::build_t7_tower(parse_u64("--q", t.q), depth, options));
  }
  throw InvalidArgument("--kind: expected artin-schreier, kummer or t7, got '" + t.kind + "'");
}

Json read_json(const std::string& flag, const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidArgument(flag + ": cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(flag + ": invalid JSON: " + e.what());
  }
}

Json run_tower_verify(const TowerArgs& t) {
  if (t.report.empty()) throw InvalidArgument("--report: required");
  const Json j = read_json("--report", t.report);
  const auto report = with_flag("--report", [&] { return json_io::tower_from_json(j); });
  return json_io::to_json(lattice::verify_linear_lattice(report, parse_u64("--bound", t.bound)));
}

struct GroupArgs {
  std::string fixtures;
  std::string name;
  std::string cyclic;
};

Json group_json(const grouplat::FiniteGroup& G) {
  Json j{{"name", G.name()}, {"order", G.order()}};
  const auto lattice = grouplat::subgroups(G);
  j["subgroups"] = lattice.subgroups.size();
  Json maximal = Json::array();
  for (auto i : lattice.maximal) maximal.push_back(grouplat::subgroup_order(lattice.subgroups[i]));
  j["maximal_orders"] = maximal;
  const auto cyc = grouplat::is_cyclic(G);
  j["is_cyclic"] = cyc.cyclic;
  if (cyc.generator) j["generator"] = *cyc.generator;
  if (G.order() > 1) j["is_m_group"] = lattice.maximal.size() == 1;
  return j;
}

Json run_mgroup(const GroupArgs& a) {
  if (!a.cyclic.empty()) return group_json(grouplat::cyclic_group(parse_u64("--cyclic", a.cyclic)));
  if (a.fixtures.empty()) throw InvalidArgument("--fixtures or --cyclic: one is required");
  const Json j = read_json("--fixtures", a.fixtures);
  const Json list = j.is_array() ? j : j.contains("groups") ? j.at("groups") : Json::array({j});
  Json out = Json::array();
  for (const auto& entry : list) {
    auto G = with_flag("--fixtures", [&] { return json_io::group_from_json(entry); });
    if (!a.name.empty() && G.name() != a.name) continue;
    out.push_back(group_json(G));
  }
  if (out.empty()) throw InvalidArgument("--name: no fixture named '" + a.name + "'");
  return out.size() == 1 ? out[0] : out;
}

void emit(const Json& j, const Globals& g, std::ostream& out) {
  if (g.json)
    out << j.dump() << "\n";
  else
    out << json_io::to_table(j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with quaternion algebras, norm cokernels and towers over finite fields"};
  app.name("brauer-workbench");
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--seed", g.seed_text, "seed for randomized polynomial splitting (env BRAUER_WORKBENCH_SEED)");
  app.add_option("--max-height", g.max_height, "height bound for witness search over Q");
  app.add_option("--max-ambient", g.max_ambient, "ambient field size cap, in bits")->check(CLI::Range(1, 40));

  auto sub = [](CLI::App* parent, const char* name, const char* help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  QuatArgs qa;
  auto* quat_cmd = sub(&app, "quat", "quaternion algebras Q(a,b)");
  quat_cmd->require_subcommand(1);
  auto* q_classify = sub(quat_cmd, "classify", "division or split, with evidence");
  auto* q_eval = sub(quat_cmd, "eval", "multiply, norm, inverse or conjugate");
  for (auto* s : {q_classify, q_eval}) {
    s->add_option("--base", qa.base, "Q or GF(q)");
    s->add_option("-a", qa.a)->required();
    s->add_option("-b", qa.b)->required();
  }
  q_eval->add_option("--op", qa.op)->required();
  q_eval->add_option("--u", qa.u, "t,x,y,z");
  q_eval->add_option("--v", qa.v, "t,x,y,z");
  std::string p8_q, p8_m, p8_b;
  auto* q_p8 = sub(quat_cmd, "p8", "zero-norm element sqrt(-1)mb + k of Q(m^2 b, b) over GF(q)");
  q_p8->add_option("--q", p8_q)->required();
  q_p8->add_option("--m", p8_m)->required();
  q_p8->add_option("--b", p8_b)->required();

  std::string bL, bK, bp, bq;
  auto* br_cmd = sub(&app, "brauer", "relative Brauer groups as norm cokernels");
  br_cmd->require_subcommand(1);
  auto* br_cyclic = sub(br_cmd, "cyclic", "K*/N(L*) for finite fields");
  br_cyclic->add_option("--L", bL)->required();
  br_cyclic->add_option("--K", bK)->required();
  auto* br_real = sub(br_cmd, "realclosed", "R*/N(C*) in the sign model");
  auto* br_norm = sub(br_cmd, "norm-check", "surjectivity of GF(p^p)* -> GF(p)*");
  br_norm->add_option("--p", bp)->required();
  auto* br_t7 = sub(br_cmd, "t7", "norm surjectivity GF(q^2n) -> GF(q^n), q = 3 mod 4");
  br_t7->add_option("--q", bq)->required();

  TowerArgs ta;
  auto* tower_cmd = sub(&app, "tower", "towers over PC(q;p)");
  tower_cmd->require_subcommand(1);
  auto* t_build = sub(tower_cmd, "build", "artin-schreier, kummer or t7 tower");
  t_build->add_option("--kind", ta.kind)->required();
  t_build->add_option("--q", ta.q);
  t_build->add_option("--p", ta.p);
  t_build->add_option("--depth", ta.depth);
  t_build->add_option("--alpha", ta.alpha, "kummer seed element (default: smallest non-p-th power)");
  auto* t_verify = sub(tower_cmd, "verify", "bounded linear-lattice check of a tower report");
  t_verify->add_option("--report", ta.report, "tower JSON file, or - for stdin")->required();
  t_verify->add_option("--bound", ta.bound, "degree bound D");
  std::string fq;
  auto* t_fourth = sub(tower_cmd, "fourth-power", "every a in GF(q)* is a fourth power in GF(q^2)");
  t_fourth->add_option("--q", fq)->required();

  std::string ac_field;
  auto* ac = sub(&app, "anticlosure", "anti-closure of GF(q), PC(q;p) or RC");
  ac->add_option("--field", ac_field)->required();

  GroupArgs ga;
  auto* mg = sub(&app, "mgroup", "finite M-group test");
  mg->require_subcommand(1);
  auto* mg_check = sub(mg, "check", "subgroups, maximal subgroups, cyclicity");
  mg_check->add_option("--fixtures", ga.fixtures, "JSON file with one group or a list");
  mg_check->add_option("--name", ga.name, "select one fixture by name");
  mg_check->add_option("--cyclic", ga.cyclic, "use the cyclic group of this order");

  std::string fd_field, fd_poly;
  auto* fdeg = sub(&app, "factor-degrees", "degrees of the irreducible factors over PC(q;p)");
  fdeg->add_option("--field", fd_field)->required();
  fdeg->add_option("--poly", fd_poly, "c0,c1,... over GF(q)")->required();

  std::string sc, sd;
  auto* sqrt_cmd = sub(&app, "sqrt-check", "square root of c + di by the explicit formula");
  sqrt_cmd->add_option("--c", sc)->required();
  sqrt_cmd->add_option("--d", sd)->required();

  std::string nL, nK;
  auto* nimg = sub(&app, "norm-image", "image of the norm on L*");
  nimg->add_option("--L", nL)->required();
  nimg->add_option("--K", nK)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  try {
    Json result;
    if (q_classify->parsed()) {
      result = run_quat_classify(qa, g);
    } else if (q_eval->parsed()) {
      result = run_quat_eval(qa);
    } else if (q_p8->parsed()) {
      const auto F = with_flag("--q", [&] { return gf::FiniteField::of_order(parse_u64("--q", p8_q), 16); });
      auto u = quat::p8_witness(F, field_element(F, "--m", p8_m), field_element(F, "--b", p8_b));
      result = Json{{"algebra", Json::array({u.algebra().a().to_string(), u.algebra().b().to_string()})},
                    {"witness", u.coordinates()},
                    {"norm", u.norm().to_string()}};
    } else if (br_cyclic->parsed()) {
      result = json_io::to_json(brauer::relative_brauer_cyclic(finite_field("--L", bL), finite_field("--K", bK)));
    } else if (br_real->parsed()) {
      result = json_io::to_json(brauer::realclosed_brauer());
    } else if (br_norm->parsed()) {
      result = json_io::to_json(brauer::norm_surjective_degree_p(parse_u64("--p", bp)));
    } else if (br_t7->parsed()) {
      result = json_io::to_json(brauer::t7_norm_check(parse_u64("--q", bq)));
    } else if (t_build->parsed()) {
      result = run_tower_build(ta, g);
    } else if (t_verify->parsed()) {
      result = run_tower_verify(ta);
    } else if (t_fourth->parsed()) {
      result = json_io::to_json(lattice::fourth_power_check(parse_u64("--q", fq)));
    } else if (ac->parsed()) {
      result = json_io::to_json(
          procyclic::anticlosure(with_flag("--field", [&] { return parse_field_descriptor(ac_field); })));
    } else if (mg_check->parsed()) {
      result = run_mgroup(ga);
    } else if (fdeg->parsed()) {
      const auto desc = with_flag("--field", [&] { return parse_field_descriptor(fd_field); });
      const auto* pc = std::get_if<ProcyclicDesc>(&desc);
      if (!pc) throw InvalidArgument("--field: expected PC(q;p), got '" + fd_field + "'");
      procyclic::ProcyclicField K(pc->q, pc->p);
      const auto f = with_flag("--poly", [&] { return gf::Poly::parse(K.base_field(), fd_poly); });
      std::uint64_t bound = 1;
      for (int i = 0; i < f.degree() && bound <= (1ULL << 24); ++i) bound *= pc->q;
      if (bound > (1ULL << 24)) throw InvalidArgument("--poly: q^deg(f) exceeds 2^24");
      gf::FactorOptions fo;
      fo.seed = g.seed();
      result = Json{{"field", K.descriptor()},
                    {"poly", f.to_string()},
                    {"degrees", with_flag("--poly", [&] { return procyclic::factor_degrees_over_K(f, K, fo); })}};
    } else if (sqrt_cmd->parsed()) {
      result = json_io::to_json(brauer::sqrt_formula_check(parse_double("--c", sc), parse_double("--d", sd)));
    } else if (nimg->parsed()) {
      const auto L = finite_field("--L", nL);
      const auto K = finite_field("--K", nK);
      Json image = Json::array();
      for (auto v : gf::norm_image(L, K, 16)) image.push_back(std::to_string(v));
      result = Json{{"extension", L.descriptor() + "/" + K.descriptor()}, {"image", image}};
    } else {
      err << app.help();
      return kExitValidation;
    }
    emit(result, g, out);
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace bw::cli
