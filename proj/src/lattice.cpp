#include "brauer_workbench/lattice.hpp"

#include <string>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"
#include "brauer_workbench/procyclic.hpp"

namespace bw::lattice {

namespace {

using gf::Embedding;
using gf::FiniteField;
using gf::Poly;
using gf::Value;

std::string pc_name(std::uint64_t q, std::uint64_t p) {
  return "PC(" + std::to_string(q) + ";" + std::to_string(p) + ")";
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

void require_cap(std::uint64_t q, std::uint64_t exponent, unsigned bits, const std::string& what) {
  const std::uint64_t cap = std::uint64_t{1} << bits;
  if (checked_pow(q, exponent, cap) > cap)
    throw InvalidArgument(what + ": q^" + std::to_string(exponent) + " exceeds the ambient cap 2^" +
                          std::to_string(bits));
}

// The current ambient field, the generator of the latest level, and GF(q) inside the ambient.
class TowerState {
 public:
  TowerState(std::uint64_t q, std::uint64_t p, const TowerOptions& options)
      : q_(q), p_(p), options_(options), base_(FiniteField::of_order(q, options.max_ambient_bits)),
        ambient_(base_), base_emb_(Embedding::identity(base_)), current_(1) {}

  const FiniteField& base() const { return base_; }
  const FiniteField& ambient() const { return ambient_; }
  Value current() const { return current_; }

  // Moves the state into GF(l^m) (a multiple of the current degree).
  void extend_to(unsigned m) {
    if (m == ambient_.degree()) return;
    FiniteField bigger = [&] {
      try {
        return FiniteField::make(ambient_.characteristic(), m, options_.max_ambient_bits);
      } catch (const InvalidArgument&) {
        throw BudgetExhausted("tower needs GF(" + std::to_string(ambient_.characteristic()) + "^" + std::to_string(m) +
                              "), beyond the ambient cap 2^" + std::to_string(options_.max_ambient_bits));
      }
    }();
    const Embedding up = Embedding::canonical(ambient_, bigger);
    current_ = up.map(current_);
    base_emb_ = up.after(base_emb_);
    ambient_ = bigger;
  }

  void set_current(Value v) { current_ = v; }

  // Replaces the generator by the smallest root of g (coefficients in the current ambient) in the
  // smallest extension of the ambient where g has a root.
  void adjoin_root(const std::vector<Value>& coeffs) {
    Poly g(ambient_, coeffs);
    auto rs = gf::roots(g, options_.factor);
    if (rs.empty()) {
      const auto fs = gf::factor(g, options_.factor);
      const unsigned e = static_cast<unsigned>(fs.front().poly.degree());
      const FiniteField old = ambient_;
      extend_to(ambient_.degree() * e);
      const Embedding up = Embedding::canonical(old, ambient_);
      std::vector<Value> lifted;
      lifted.reserve(coeffs.size());
      for (Value c : coeffs) lifted.push_back(up.map(c));
      rs = gf::roots(Poly(ambient_, lifted), options_.factor);
      if (rs.empty()) throw ConstructionError("defining polynomial has no root in " + ambient_.descriptor());
    }
    current_ = rs.front();
  }

  // Maps an element of GF(q) into the ambient.
  Value from_base(Value v) const { return base_emb_.map(v); }

  TowerLevel level(unsigned i) const {
    TowerLevel lv;
    lv.i = i;
    lv.min_poly = gf::minimal_polynomial(base_emb_, current_).to_string();
    lv.ambient = ambient_.descriptor();
    lv.generator = std::to_string(current_);
    const std::uint64_t over_q = gf::degree_over(ambient_, current_, q_);
    lv.degree = procyclic::split_level(over_q, p_).p_part;
    const std::uint64_t expected = checked_pow(p_, i, ~std::uint64_t{0} - 1);
    if (lv.degree != expected)
      throw ConstructionError("level " + std::to_string(i) + " generator has degree " + std::to_string(lv.degree) +
                              " over " + pc_name(q_, p_) + ", expected " + std::to_string(expected));
    return lv;
  }

 private:
  std::uint64_t q_;
  std::uint64_t p_;
  TowerOptions options_;
  FiniteField base_;
  FiniteField ambient_;
  Embedding base_emb_;
  Value current_;
};

TowerReport new_report(const char* kind, std::uint64_t q, std::uint64_t p, const TowerOptions& options) {
  TowerReport r;
  r.kind = kind;
  r.q = q;
  r.p = p;
  r.base = pc_name(q, p);
  r.ambient_cap_bits = options.max_ambient_bits;
  return r;
}

}  // namespace

TowerReport build_artin_schreier_tower(std::uint64_t p, unsigned depth, const TowerOptions& options) {
  if (!num::is_prime(p)) throw InvalidArgument("artin-schreier tower: p = " + std::to_string(p) + " is not prime");
  if (depth > kMaxArtinSchreierDepth)
    throw InvalidArgument("artin-schreier tower: depth " + std::to_string(depth) + " exceeds 3");
  require_cap(p, checked_pow(p, depth, 64), options.max_ambient_bits, "artin-schreier tower");
  TowerReport r = new_report("artin-schreier", p, p, options);
  TowerState s(p, p, options);
  s.set_current(1);
  r.levels.push_back(s.level(0));
  for (unsigned i = 1; i <= depth; ++i) {
    const auto& F = s.ambient();
    // T^p - T - alpha_{i-1}
    std::vector<Value> c(p + 1, 0);
    c[0] = F.neg(s.current());
    c[1] = F.neg(1);
    c[p] = 1;
    s.adjoin_root(c);
    r.levels.push_back(s.level(i));
  }
  return r;
}

TowerReport build_kummer_tower(std::uint64_t q, std::uint64_t p, unsigned depth, const TowerOptions& options,
                               std::optional<Value> alpha) {
  if (num::prime_power(q).first == 0) throw InvalidArgument("kummer tower: q = " + std::to_string(q) + " is not a prime power");
  if (!num::is_prime(p)) throw InvalidArgument("kummer tower: p = " + std::to_string(p) + " is not prime");
  if ((q - 1) % p != 0) throw InvalidArgument("kummer tower: p must divide q - 1");
  if (p == 2 && q % 4 != 1)
    throw InvalidArgument("kummer tower: p = 2 needs q = 1 mod 4; use the t7 tower for q = 3 mod 4");
  if (depth > 0) require_cap(q, checked_pow(p, depth, 64), options.max_ambient_bits, "kummer tower");
  TowerReport r = new_report("kummer", q, p, options);
  TowerState s(q, p, options);
  const auto& K = s.base();
  const std::uint64_t e = (q - 1) / p;
  if (alpha) {
    if (*alpha == 0 || !K.contains(*alpha) || K.pow(*alpha, e) == 1)
      throw InvalidArgument("kummer tower: alpha = " + std::to_string(*alpha) + " is not a non-p-th power in GF(" +
                            std::to_string(q) + ")*");
  } else {
    for (Value v = 1; v < q; ++v) {
      if (K.pow(v, e) != 1) {
        alpha = v;
        break;
      }
    }
  }
  r.alpha = std::to_string(*alpha);
  s.set_current(*alpha);
  r.levels.push_back(s.level(0));
  for (unsigned i = 1; i <= depth; ++i) {
    const auto& F = s.ambient();
    // T^p - beta_{i-1}
    std::vector<Value> c(p + 1, 0);
    c[0] = F.neg(s.current());
    c[p] = 1;
    s.adjoin_root(c);
    r.levels.push_back(s.level(i));
  }
  return r;
}

TowerReport build_t7_tower(std::uint64_t q, unsigned depth, const TowerOptions& options) {
  if (num::prime_power(q).first == 0) throw InvalidArgument("t7 tower: q = " + std::to_string(q) + " is not a prime power");
  if (q % 4 != 3) throw InvalidArgument("t7 tower requires q = 3 mod 4");
  if (depth > 0) require_cap(q, checked_pow(2, depth, 64), options.max_ambient_bits, "t7 tower");
  TowerReport r = new_report("t7", q, 2, options);
  TowerState s(q, 2, options);
  s.set_current(1);
  r.levels.push_back(s.level(0));
  if (depth == 0) return r;

  const auto& K = s.base();
  s.extend_to(2 * K.degree());
  const auto& L = s.ambient();
  const Embedding down = Embedding::canonical(K, L);
  std::optional<Value> alpha0;
  for (Value v = 1; v < L.order() && !alpha0; ++v) {
    auto n = down.preimage(L.pow(v, q + 1));
    if (n && !K.is_square(*n)) alpha0 = v;
  }
  if (!alpha0) throw ConstructionError("t7 tower: no element of GF(q^2) has non-square norm");
  r.alpha = std::to_string(*alpha0);
  s.set_current(*alpha0);
  r.levels.push_back(s.level(1));
  for (unsigned i = 2; i <= depth; ++i) {
    const auto& F = s.ambient();
    s.adjoin_root({F.neg(s.current()), 0, 1});
    r.levels.push_back(s.level(i));
  }
  return r;
}

FourthPowerReport fourth_power_check(std::uint64_t q) {
  auto [ell, k] = num::prime_power(q);
  if (ell == 0) throw InvalidArgument("fourth_power_check: " + std::to_string(q) + " is not a prime power");
  if (q % 4 != 3) throw InvalidArgument("fourth_power_check requires q = 3 mod 4");
  if (q * q > (1ULL << 16)) throw InvalidArgument("fourth_power_check requires q^2 <= 2^16");
  const auto K = FiniteField::make(ell, k);
  const auto L = FiniteField::make(ell, 2 * k);
  const Embedding emb = Embedding::canonical(K, L);
  constexpr Value kNone = ~Value{0};
  std::vector<Value> root4(L.order(), kNone);
  for (Value x = L.order() - 1; x >= 1; --x) root4[L.pow(x, 4)] = x;  // descending, so the smallest wins
  FourthPowerReport r;
  r.q = q;
  r.all_fourth_powers = true;
  for (Value a = 1; a < q; ++a) {
    const Value x = root4[emb.map(a)];
    if (x == kNone) {
      r.all_fourth_powers = false;
      continue;
    }
    r.witnesses.emplace_back(a, x);
  }
  return r;
}

LatticeCheck verify_linear_lattice(const TowerReport& report, std::uint64_t degree_bound) {
  if (degree_bound == 0) throw InvalidArgument("verify_linear_lattice: degree bound must be positive");
  if (num::prime_power(report.q).first == 0 || !num::is_prime(report.p))
    throw InvalidArgument("malformed tower report: bad q or p");
  if (report.base != pc_name(report.q, report.p))
    throw InvalidArgument("malformed tower report: base '" + report.base + "' does not match q and p");
  if (report.levels.empty()) throw InvalidArgument("malformed tower report: no levels");
  const auto F = FiniteField::of_order(report.q, 62);

  LatticeCheck out;
  std::vector<std::uint64_t> level_degrees;
  std::uint64_t expected = 1;
  for (std::size_t idx = 0; idx < report.levels.size(); ++idx) {
    const auto& lv = report.levels[idx];
    if (lv.i != idx) throw InvalidArgument("malformed tower report: level indices must be 0, 1, 2, ...");
    Poly f = Poly::parse(F, lv.min_poly);
    if (f.degree() < 1 || !f.is_monic())
      throw InvalidArgument("malformed tower report: level " + std::to_string(idx) + " min_poly is not monic");
    if (!gf::is_irreducible(f)) {
      out.failure = "level " + std::to_string(idx) + " minimal polynomial is reducible";
      return out;
    }
    // K(root) is the compositum of K with the splitting field GF(q^deg f).
    const std::uint64_t d = procyclic::split_level(static_cast<std::uint64_t>(f.degree()), report.p).p_part;
    if (d != lv.degree || d != expected) {
      out.failure = "level " + std::to_string(idx) + " has degree " + std::to_string(d) + " over K, expected " +
                    std::to_string(expected);
      return out;
    }
    level_degrees.push_back(d);
    expected *= report.p;
  }
  for (std::uint64_t e = 1; e <= degree_bound; e *= report.p) {
    out.degrees_checked.push_back(e);
    bool found = false;
    for (auto d : level_degrees) found = found || d == e;
    if (!found) {
      out.failure = "the degree-" + std::to_string(e) + " extension of K is not a tower level";
      return out;
    }
    if (e > degree_bound / report.p) break;
  }
  out.linear = true;
  return out;
}

}  // namespace bw::lattice
