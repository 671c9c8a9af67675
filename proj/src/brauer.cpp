#include "brauer_workbench/brauer.hpp"

#include <algorithm>
#include <cmath>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"

namespace bw::brauer {

namespace {

std::string extension_name(const gf::FiniteField& L, const gf::FiniteField& K) {
  return L.descriptor() + "/" + K.descriptor();
}

}  // namespace

NormCokernelReport relative_brauer_cyclic(const gf::FiniteField& L, const gf::FiniteField& K) {
  if (!gf::is_subfield(K, L))
    throw InvalidArgument(K.descriptor() + " is not a subfield of " + L.descriptor());
  const auto image = gf::norm_image(L, K, 16);
  const std::uint64_t units = K.order() - 1;
  NormCokernelReport r;
  r.extension = extension_name(L, K);
  r.image_order = image.size();
  r.cokernel_order = units / r.image_order;
  if (r.cokernel_order > 1) r.cokernel_structure.push_back(r.cokernel_order);
  // K* is cyclic, so N(L*) is generated by g^[K*:N(L*)] for a primitive g.
  const gf::Value gen = K.pow(K.primitive_element(), r.cokernel_order);
  r.image_generators.push_back(std::to_string(gen));
  return r;
}

SignClass::SignClass(int sign) : sign_(sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign class must be +1 or -1");
}

NormCokernelReport realclosed_brauer() {
  // Every norm a^2 + b^2 of a nonzero a + bi is positive.
  const SignClass norm_class(1);
  const std::vector<SignClass> classes{SignClass(1), SignClass(-1)};
  std::vector<SignClass> image{norm_class};
  NormCokernelReport r;
  r.extension = "C/R";
  r.image_generators = {norm_class.to_string()};
  r.image_order = image.size();
  r.cokernel_order = classes.size() / image.size();
  r.cokernel_structure = {r.cokernel_order};
  return r;
}

SurjectivityReport norm_surjective_degree_p(std::uint64_t p) {
  if (!num::is_prime(p)) throw InvalidArgument("norm_surjective_degree_p: " + std::to_string(p) + " is not prime");
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < p; ++i) {
    size *= p;
    if (size > (1ULL << 16)) throw InvalidArgument("norm_surjective_degree_p: p^p exceeds 2^16");
  }
  const auto L = gf::FiniteField::make(p, static_cast<unsigned>(p));
  const auto K = gf::FiniteField::make(p, 1);
  SurjectivityReport r;
  r.extension = extension_name(L, K);
  std::vector<gf::Value> first(p, 0);
  for (gf::Value x = 1; x < L.order(); ++x) {
    gf::Value c = gf::norm(L, K, x);
    if (first[c] == 0) first[c] = x;
  }
  for (gf::Value c = 1; c < p; ++c)
    if (first[c] != 0) r.preimages.emplace_back(c, first[c]);
  r.surjective = r.preimages.size() == p - 1;
  return r;
}

T7NormReport t7_norm_check(std::uint64_t q) {
  auto [ell, k] = num::prime_power(q);
  if (ell == 0) throw InvalidArgument("t7_norm_check: " + std::to_string(q) + " is not a prime power");
  if (q % 4 != 3) throw InvalidArgument("t7_norm_check requires q = 3 mod 4");
  if (q * q > (1ULL << 16)) throw InvalidArgument("t7_norm_check requires q^2 <= 2^16");
  T7NormReport report;
  report.q = q;
  report.all_surjective = true;
  for (unsigned n = 1;; n += 2) {
    const unsigned big = 2 * n * k;
    std::uint64_t size = 1;
    bool within = true;
    for (unsigned i = 0; i < big && within; ++i) {
      size *= ell;
      within = size <= kT7LevelBound || n == 1;
    }
    if (!within) break;
    const auto L = gf::FiniteField::make(ell, big);
    const auto K = gf::FiniteField::make(ell, n * k);
    const auto image = gf::norm_image(L, K, 16);
    T7Level lv{n, extension_name(L, K), image.size(), (K.order() - 1) / image.size(), false};
    lv.surjective = lv.cokernel_order == 1;
    report.all_surjective = report.all_surjective && lv.surjective;
    report.levels.push_back(std::move(lv));
  }
  return report;
}

SqrtCheck sqrt_formula_check(double c, double d) {
  if (c == 0.0 && d == 0.0) throw InvalidArgument("sqrt_formula_check: (c, d) = (0, 0) has no unique square root");
  if (!std::isfinite(c) || !std::isfinite(d)) throw InvalidArgument("sqrt_formula_check: non-finite input");
  const double r = std::hypot(c, d);
  const double re = std::sqrt(std::max(0.0, (c + r) / 2));
  double im = std::sqrt(std::max(0.0, (-c + r) / 2));
  if (d < 0) im = -im;
  const std::complex<double> alpha(re, im);
  const double residual = std::abs(alpha * alpha - std::complex<double>(c, d));
  return {alpha, residual};
}

}  // namespace bw::brauer
