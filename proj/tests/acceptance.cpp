// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "brauer_workbench/brauer.hpp"
#include "brauer_workbench/cli.hpp"
#include "brauer_workbench/grouplat.hpp"
#include "brauer_workbench/json_io.hpp"
#include "brauer_workbench/lattice.hpp"
#include "brauer_workbench/procyclic.hpp"
#include "brauer_workbench/quaternion.hpp"
#include "oracles.hpp"

using namespace bw;
using json_io::Json;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

std::uint64_t p_part(std::uint64_t m, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; m % p == 0; m /= p) r *= p;
  return r;
}

oracle::Poly parse_coeffs(const std::string& text) {
  oracle::Poly out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

std::pair<std::int64_t, int> parse_ambient(const std::string& d) {
  const auto inner = d.substr(3, d.size() - 4);
  const auto caret = inner.find('^');
  if (caret == std::string::npos) return {std::stoll(inner), 1};
  return {std::stoll(inner.substr(0, caret)), std::stoi(inner.substr(caret + 1))};
}

// Schoolbook norm t^2 - a x^2 - b y^2 + ab z^2 over GF(q).
std::int64_t naive_norm(const oracle::NaiveField& N, std::int64_t a, std::int64_t b, const std::vector<std::string>& c) {
  const std::int64_t t = std::stoll(c[0]), x = std::stoll(c[1]), y = std::stoll(c[2]), z = std::stoll(c[3]);
  std::int64_t n = N.mul(t, t);
  n = N.sub(n, N.mul(a, N.mul(x, x)));
  n = N.sub(n, N.mul(b, N.mul(y, y)));
  n = N.add(n, N.mul(N.mul(a, b), N.mul(z, z)));
  return n;
}

Result criterion1() {
  Result r;
  const auto out = cli_out({"quat", "classify", "--base", "Q", "-a", "-1", "-b", "-1", "--json"});
  if (out != "{\"kind\":\"Division\",\"obstruction\":[[\"2\",-1],[\"inf\",-1]]}\n") r.fail("classify printed " + out);
  // the same obstruction from local solubility
  if (oracle::hilbert(-1, -1, 2) != -1 || oracle::hilbert(-1, -1, 0) != -1) r.fail("local oracle disagrees");
  for (std::int64_t p = 3; p < 50; ++p)
    if (oracle::is_prime(p) && oracle::hilbert(-1, -1, p) != 1) r.fail("unexpected odd obstruction");
  int code = 0;
  const Json rc = Json::parse(cli_out({"brauer", "realclosed", "--json"}, &code));
  if (code != 0 || rc.at("cokernel_order") != 2) r.fail("realclosed cokernel order is " + rc.at("cokernel_order").dump());
  if (r.pass) r.detail = "Q(-1,-1) Division at {2, inf}; |R*/N(C*)| = 2";
  return r;
}

Result criterion2() {
  Result r;
  std::size_t algebras = 0;
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const auto F = gf::FiniteField::of_order(q);
    const oracle::NaiveField N(static_cast<std::int64_t>(F.characteristic()), static_cast<int>(F.degree()));
    for (gf::Value a = 1; a < q; ++a)
      for (gf::Value b = 1; b < q; ++b) {
        const auto v = quat::classify(quat::FiniteAlgebra(F.element(a), F.element(b)));
        ++algebras;
        if (v.kind != quat::Kind::Split || !v.witness) {
          r.fail("GF(" + std::to_string(q) + ") Q(" + std::to_string(a) + "," + std::to_string(b) + ") not split");
          continue;
        }
        if (v.witness->is_zero() || !v.witness->norm().is_zero() ||
            naive_norm(N, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), v.witness->coordinates()) != 0)
          r.fail("bad witness over GF(" + std::to_string(q) + ")");
      }
  }
  if (r.pass) r.detail = std::to_string(algebras) + " algebras split with exact norm-zero witnesses";
  return r;
}

Result criterion3() {
  Result r;
  std::vector<std::int64_t> values;
  for (std::int64_t v = -20; v <= 20; ++v)
    if (oracle::squarefree(v)) values.push_back(v);
  std::size_t split = 0, division = 0;
  for (std::int64_t a : values)
    for (std::int64_t b : values) {
      const auto v = quat::classify(quat::RationalAlgebra(num::BigRational(a), num::BigRational(b)));
      const std::string tag = "Q(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (v.kind == quat::Kind::Split) {
        ++split;
        const auto c = v.witness->coordinates();
        const __int128 t = std::stoll(c[0]), x = std::stoll(c[1]), y = std::stoll(c[2]), z = std::stoll(c[3]);
        if ((t | x | y | z) == 0 || t * t - a * x * x - b * y * y + a * b * z * z != 0) r.fail(tag + " witness fails");
        continue;
      }
      ++division;
      if (v.obstruction.empty()) r.fail(tag + " Division without an obstruction");
      for (const auto& [place, s] : v.obstruction)
        if (s != -1 || oracle::hilbert(a, b, place.prime()) != -1) r.fail(tag + " obstruction not confirmed locally");
      if (a <= b && oracle::ternary_search(a, b, 10000)) r.fail(tag + " has a witness up to height 10^4");
    }
  if (r.pass)
    r.detail = std::to_string(split) + " split verified, " + std::to_string(division) +
               " division with local obstruction and no height-10^4 solution";
  return r;
}

Result criterion4() {
  Result r;
  std::size_t pairs = 0;
  for (std::uint64_t p = 2; p <= 4096; ++p) {
    if (!oracle::is_prime(static_cast<std::int64_t>(p))) continue;
    std::uint64_t l = p;
    for (unsigned n = 1; l <= 4096; ++n, l *= p)
      for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        const auto rep = brauer::relative_brauer_cyclic(gf::FiniteField::make(p, n), gf::FiniteField::make(p, d));
        ++pairs;
        if (rep.cokernel_order != 1) r.fail(rep.extension + " cokernel order " + std::to_string(rep.cokernel_order));
      }
  }
  for (std::uint64_t p : {2, 3, 5}) {
    if (!brauer::norm_surjective_degree_p(p).surjective) r.fail("GF(p^p)/GF(p) not surjective for p=" + std::to_string(p));
    // schoolbook: products of the p conjugates hit every nonzero residue
    const oracle::NaiveField N(static_cast<std::int64_t>(p), static_cast<int>(p));
    std::vector<char> hit(p, 0);
    for (std::int64_t x = 1; x < N.order(); ++x) {
      std::int64_t prod = 1, c = x;
      for (std::uint64_t i = 0; i < p; ++i) {
        prod = N.mul(prod, c);
        c = N.pow(c, p);
      }
      if (prod < static_cast<std::int64_t>(p)) hit[static_cast<std::size_t>(prod)] = 1;
    }
    if (std::count(hit.begin() + 1, hit.end(), 1) != static_cast<long>(p - 1)) r.fail("schoolbook norm not surjective");
  }
  if (r.pass) r.detail = std::to_string(pairs) + " pairs with trivial cokernel; GF(p^p)/GF(p) surjective for p=2,3,5";
  return r;
}

void check_tower(const lattice::TowerReport& t, const std::vector<std::uint64_t>& degrees, Result& r) {
  const std::string tag = t.kind + "(q=" + std::to_string(t.q) + ",p=" + std::to_string(t.p) + ")";
  if (t.levels.size() != degrees.size()) {
    r.fail(tag + " wrong depth");
    return;
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto& lv = t.levels[i];
    if (lv.degree != degrees[i]) r.fail(tag + " level " + std::to_string(i) + " degree " + std::to_string(lv.degree));
    const auto f = parse_coeffs(lv.min_poly);
    const auto q = static_cast<std::int64_t>(t.q);
    // brute-force factoring of the minimal polynomial over GF(q)
    const auto fd = oracle::factor_degrees_brute(f, q);
    if (fd.size() != 1 || static_cast<std::size_t>(fd[0]) != f.size() - 1) r.fail(tag + " min poly reducible");
    if (p_part(f.size() - 1, t.p) != degrees[i]) r.fail(tag + " min poly degree has the wrong p-part");
    const auto [l, m] = parse_ambient(lv.ambient);
    const oracle::NaiveField A(l, m);
    const auto g = std::stoll(lv.generator);
    std::int64_t acc = 0;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) acc = A.add(A.mul(acc, g), f[static_cast<std::size_t>(k)]);
    if (acc != 0) r.fail(tag + " generator is not a root of its min poly");
    if (static_cast<std::size_t>(oracle::orbit_length(A, g, t.q)) != f.size() - 1) r.fail(tag + " orbit length mismatch");
  }
  if (!lattice::verify_linear_lattice(t, degrees.back()).linear) r.fail(tag + " lattice check failed");
}

Result criterion5() {
  Result r;
  lattice::TowerOptions wide;
  wide.max_ambient_bits = 26;  // GF(7^9) has about 2^25.3 elements
  check_tower(lattice::build_artin_schreier_tower(2, 2), {1, 2, 4}, r);
  check_tower(lattice::build_artin_schreier_tower(3, 1), {1, 3}, r);
  check_tower(lattice::build_kummer_tower(7, 3, 2, wide), {1, 3, 9}, r);
  check_tower(lattice::build_t7_tower(3, 2), {1, 2, 4}, r);
  if (r.pass) r.detail = "AS(2;2): 1,2,4  AS(3;1): 1,3  Kummer(7,3;2): 1,3,9  t7(3;2): 1,2,4";
  return r;
}

Result criterion6() {
  Result r;
  for (std::uint64_t q : {3, 7, 11, 19}) {
    const auto rep = lattice::fourth_power_check(q);
    if (!rep.all_fourth_powers || rep.witnesses.size() != q - 1) r.fail("q=" + std::to_string(q) + " not all fourth powers");
    const oracle::NaiveField N(static_cast<std::int64_t>(q), 2);
    std::vector<char> hit(q, 0);
    for (std::int64_t x = 1; x < N.order(); ++x) {
      const auto y = N.pow(x, 4);
      if (y < static_cast<std::int64_t>(q)) hit[static_cast<std::size_t>(y)] = 1;
    }
    if (std::count(hit.begin() + 1, hit.end(), 1) != static_cast<long>(q - 1)) r.fail("schoolbook enumeration disagrees");
    for (auto [a, x] : rep.witnesses)
      if (N.pow(static_cast<std::int64_t>(x), 4) != static_cast<std::int64_t>(a)) r.fail("bad fourth root");
  }
  if (r.pass) r.detail = "every a in GF(q)* is a fourth power in GF(q^2) for q = 3, 7, 11, 19";
  return r;
}

Result criterion7() {
  Result r;
  const procyclic::ProcyclicField K(3, 2);
  const auto F = gf::FiniteField::of_order(3);
  std::vector<oracle::Poly> sample;
  std::mt19937_64 rng(20240601);
  while (sample.size() < 500) {
    const int d = 1 + static_cast<int>(rng() % 8);
    oracle::Poly c(static_cast<std::size_t>(d) + 1, 0);
    c.back() = 1;
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng() % 3);
    if (gf::is_squarefree(gf::Poly(F, std::vector<gf::Value>(c.begin(), c.end())))) sample.push_back(c);
  }
  std::size_t irreducibles = 0;
  for (int d = 1; d <= 6; ++d)
    for (const auto& c : oracle::monic_polys(3, d))
      if (oracle::irreducible_by_trial_division(c, 3)) {
        sample.push_back(c);
        ++irreducibles;
      }
  for (const auto& c : sample) {
    const gf::Poly f(F, std::vector<gf::Value>(c.begin(), c.end()));
    const auto degs = procyclic::factor_degrees_over_K(f, K);
    std::uint64_t sum = 0;
    for (auto e : degs) {
      if (e & (e - 1)) r.fail("non power of two for " + f.to_string());
      sum += e;
    }
    if (sum != c.size() - 1) r.fail("degrees do not sum to deg f for " + f.to_string());
    std::vector<std::uint64_t> want;
    for (int m : oracle::factor_degrees_brute(c, 3)) {
      const auto pp = p_part(static_cast<std::uint64_t>(m), 2);
      for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(m) / pp; ++i) want.push_back(pp);
    }
    std::sort(want.begin(), want.end());
    if (degs != want) r.fail("disagrees with brute-force factoring for " + f.to_string());
  }
  if (r.pass)
    r.detail = "500 seeded squarefree polynomials and " + std::to_string(irreducibles) +
               " irreducibles of degree <= 6: powers of 2 summing to deg f";
  return r;
}

Result criterion8() {
  Result r;
  std::ifstream in(std::string(BW_FIXTURE_DIR) + "/groups.json");
  if (!in) {
    r.fail("fixture file missing");
    return r;
  }
  const Json fixtures = Json::parse(in).at("groups");
  std::size_t m_groups = 0;
  for (const auto& entry : fixtures) {
    const auto G = json_io::group_from_json(entry);
    // cyclicity from element orders computed off the raw table
    bool cyclic = false;
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::size_t k = 1, x = g;
      while (x != G.identity()) {
        x = G.mul(x, g);
        ++k;
      }
      cyclic |= k == G.order();
    }
    std::size_t n = G.order(), p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    const bool prime_power = G.order() > 1 && n == 1;
    const bool m = grouplat::is_m_group(G);
    m_groups += m;
    if (m != (cyclic && prime_power)) r.fail(G.name() + " breaks the dichotomy");
  }
  if (r.pass)
    r.detail = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(m_groups) +
               " M-groups, all cyclic of prime-power order";
  return r;
}

Result criterion9() {
  Result r;
  std::mt19937_64 rng(9001);
  std::uniform_real_distribution<double> u(-1000.0, 1000.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double c = u(rng), d = u(rng);
    const auto s = brauer::sqrt_formula_check(c, d);
    const auto z = s.alpha * s.alpha - std::complex<double>(c, d);
    const double scale = 1 + std::abs(c) + std::abs(d);
    const double residual = std::abs(z);
    worst = std::max(worst, residual / scale);
    if (s.residual > 1e-9 * scale || residual > 1e-9 * scale) r.fail("residual too large at c=" + std::to_string(c));
  }
  if (r.pass) {
    std::ostringstream os;
    os << "1000 samples, worst scaled residual " << worst;
    r.detail = os.str();
  }
  return r;
}

Result criterion10() {
  Result r;
  std::size_t checked = 0;
  for (std::uint64_t q : {5, 13, 17}) {
    const auto F = gf::FiniteField::of_order(q);
    const oracle::NaiveField N(static_cast<std::int64_t>(q), 1);
    for (gf::Value m = 1; m < q; ++m)
      for (gf::Value b = 1; b < q; ++b) {
        const auto w = quat::p8_witness(F, m, b);
        const auto a = N.mul(N.mul(static_cast<std::int64_t>(m), static_cast<std::int64_t>(m)), static_cast<std::int64_t>(b));
        if (w.is_zero() || !w.norm().is_zero() || naive_norm(N, a, static_cast<std::int64_t>(b), w.coordinates()) != 0)
          r.fail("q=" + std::to_string(q) + " m=" + std::to_string(m) + " b=" + std::to_string(b));
        ++checked;
      }
  }
  if (r.pass) r.detail = std::to_string(checked) + " witnesses with norm exactly 0";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"Hamilton quaternions and real closed Brauer group", criterion1},
      {"Wedderburn splitting sweep", criterion2},
      {"classifier soundness over Q", criterion3},
      {"relative Brauer triviality", criterion4},
      {"tower degrees", criterion5},
      {"fourth powers", criterion6},
      {"irreducible-degree law", criterion7},
      {"M-group dichotomy", criterion8},
      {"square-root formula", criterion9},
      {"isotropic witness in Q(m^2 b, b)", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << r.detail << " ("
              << std::fixed << std::setprecision(2) << secs << "s)\n";
    std::cout.unsetf(std::ios::fixed);
  }
  return failures == 0 ? 0 : 1;
}
