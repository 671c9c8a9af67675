#include "brauer_workbench/procyclic.hpp"

#include <algorithm>
#include <numeric>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"

namespace bw::procyclic {

namespace {

gf::FiniteField checked_base(std::uint64_t q, std::uint64_t p) {
  if (num::prime_power(q).first == 0) throw InvalidArgument("PC(q;p): q = " + std::to_string(q) + " is not a prime power");
  if (!num::is_prime(p)) throw InvalidArgument("PC(q;p): p = " + std::to_string(p) + " is not prime");
  return gf::FiniteField::of_order(q);
}

}  // namespace

ProcyclicField::ProcyclicField(std::uint64_t q, std::uint64_t p) : q_(q), p_(p), base_(checked_base(q, p)) {}

std::string ProcyclicField::descriptor() const {
  return "PC(" + std::to_string(q_) + ";" + std::to_string(p_) + ")";
}

LevelSplit split_level(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw InvalidArgument("level must be positive");
  LevelSplit s{1, 0, m};
  while (s.coprime_part % p == 0) {
    s.coprime_part /= p;
    s.p_part *= p;
    ++s.p_exponent;
  }
  return s;
}

ProElement ProElement::from(const ProcyclicField& K, const gf::Element& x) {
  const auto& F = x.field();
  if (F.characteristic() != K.characteristic()) {
    throw InvalidArgument("characteristic mismatch: element of " + F.descriptor() + " vs " + K.descriptor());
  }
  const std::uint64_t level = gf::degree_over(F, x.value(), K.q());
  const unsigned k = K.base_field().degree();
  const auto level_degree = static_cast<unsigned>(level * k);
  const auto E = gf::FiniteField::make(K.characteristic(), level_degree, 62);
  std::optional<gf::Value> v;
  if (F.degree() % level_degree == 0) {
    v = gf::Embedding::canonical(E, F).preimage(x.value());
  } else {
    const unsigned common = std::lcm(F.degree(), level_degree);
    const auto G = gf::FiniteField::make(K.characteristic(), common, 62);
    const auto lifted = gf::Embedding::canonical(F, G).map(x.value());
    v = gf::Embedding::canonical(E, G).preimage(lifted);
  }
  if (!v) throw ConstructionError("element not found at its minimal level");
  return ProElement(level, split_level(level, K.p()), E.element(*v));
}

bool member_of_K(const gf::Element& x, const ProcyclicField& K) { return degree_over_K(x, K) == 1; }

std::uint64_t degree_over_K(const gf::Element& x, const ProcyclicField& K) {
  if (x.field().characteristic() != K.characteristic()) {
    throw InvalidArgument("characteristic mismatch: element of " + x.field().descriptor() + " vs " + K.descriptor());
  }
  return split_level(gf::degree_over(x.field(), x.value(), K.q()), K.p()).p_part;
}

std::uint64_t compositum_level(std::span<const ProElement> elements) {
  std::uint64_t level = 1;
  for (const auto& e : elements) level = std::lcm(level, e.level());
  return level;
}

AntiClosureReport anticlosure(const FieldDescriptor& K) {
  AntiClosureReport r;
  r.field = to_string(K);
  if (std::holds_alternative<RealClosedDesc>(K)) {
    r.is_trivial = false;
    r.degree = 2;
    r.reason = "proper";
    r.generator = "i";
    r.generator_min_poly = "1,0,1";
    return r;
  }
  if (const auto* ff = std::get_if<FiniteFieldDesc>(&K)) {
    // GF(q^2) and GF(q^3) meet in GF(q^gcd(2,3)) = GF(q).
    const auto base = gf::FiniteField::make(ff->p, ff->n);
    r.is_trivial = true;
    r.degree = 1;
    r.reason = "intersection";
    for (unsigned e : {2u, 3u}) {
      r.witnesses.push_back(gf::FiniteField::make(ff->p, base.degree() * e, 62).descriptor());
    }
    return r;
  }
  if (const auto* pc = std::get_if<ProcyclicDesc>(&K)) {
    ProcyclicField field(pc->q, pc->p);
    r.is_trivial = false;
    r.degree = pc->p;
    r.reason = "proper";
    r.generator_min_poly = gf::smallest_irreducible(field.base_field(), static_cast<unsigned>(pc->p)).to_string();
    return r;
  }
  throw InvalidArgument("anticlosure: field " + to_string(K) + " is outside {GF(q), PC(q;p), RC}");
}

std::vector<std::uint64_t> factor_degrees_over_K(const gf::Poly& f, const ProcyclicField& K,
                                                 const gf::FactorOptions& options) {
  if (!(f.field() == K.base_field())) {
    throw InvalidArgument("factor_degrees_over_K: polynomial over " + f.field().descriptor() + ", expected " +
                          K.base_field().descriptor());
  }
  if (f.degree() < 1) throw InvalidArgument("factor_degrees_over_K: polynomial must have degree >= 1");
  if (!f.is_monic()) throw InvalidArgument("factor_degrees_over_K: polynomial must be monic");
  if (!gf::is_squarefree(f)) throw InvalidArgument("factor_degrees_over_K: polynomial is not squarefree");
  std::vector<std::uint64_t> out;
  for (const auto& fac : gf::factor(f, options)) {
    auto s = split_level(static_cast<std::uint64_t>(fac.poly.degree()), K.p());
    for (std::uint64_t i = 0; i < s.coprime_part; ++i) out.push_back(s.p_part);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bw::procyclic
