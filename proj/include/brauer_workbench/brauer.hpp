#pragma once

// Relative Brauer groups of cyclic extensions, computed as the norm cokernel K*/N(L*),
// and the sign model of a real closed field.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brauer_workbench/finfield.hpp"

namespace bw::brauer {

struct NormCokernelReport {
  std::string extension;                        // "GF(9)/GF(3)", "C/R"
  std::vector<std::string> image_generators;    // generators of N(L*) inside K*
  std::uint64_t image_order = 0;
  std::uint64_t cokernel_order = 0;
  std::vector<std::uint64_t> cokernel_structure;  // cyclic factor orders; empty when trivial
};

// Exhaustive K*/N(L*) for finite fields K subset L with |L| <= 2^16.
NormCokernelReport relative_brauer_cyclic(const gf::FiniteField& L, const gf::FiniteField& K);

// Sign class of a nonzero real: +1 or -1. Multiplication is sign arithmetic.
class SignClass {
 public:
  explicit SignClass(int sign);
  int sign() const { return sign_; }
  friend SignClass operator*(SignClass a, SignClass b) { return SignClass(a.sign_ * b.sign_); }
  friend bool operator==(SignClass, SignClass) = default;
  std::string to_string() const { return sign_ > 0 ? "+1" : "-1"; }

 private:
  int sign_;
};

// Br(C/R) = R*/N(C*) in the sign model: the norms a^2 + b^2 are all in the class +1.
NormCokernelReport realclosed_brauer();

struct SurjectivityReport {
  std::string extension;
  bool surjective = false;
  // (c, smallest x in L* with N(x) = c) for each c in K* that is hit, ascending in c.
  std::vector<std::pair<gf::Value, gf::Value>> preimages;
};

// N: GF(p^p)* -> GF(p)*, for p^p <= 2^16.
SurjectivityReport norm_surjective_degree_p(std::uint64_t p);

struct T7Level {
  unsigned n;
  std::string extension;
  std::uint64_t image_order;
  std::uint64_t cokernel_order;
  bool surjective;
};

struct T7NormReport {
  std::uint64_t q;
  std::vector<T7Level> levels;
  bool all_surjective = false;
};

// Largest |GF(q^{2n})| examined by t7_norm_check beyond level n = 1.
inline constexpr std::uint64_t kT7LevelBound = 1ULL << 12;

// For q = 3 mod 4: N: GF(q^{2n})* -> GF(q^n)* at level n = 1 and every odd n >= 3 with
// q^{2n} <= kT7LevelBound.
T7NormReport t7_norm_check(std::uint64_t q);

struct SqrtCheck {
  std::complex<double> alpha;
  double residual;
};

// alpha = sqrt((c + r)/2) + i sqrt((-c + r)/2), r = |c + di|, with the sign of the imaginary
// part matching the sign of d; residual = |alpha^2 - (c + di)|.
SqrtCheck sqrt_formula_check(double c, double d);

}  // namespace bw::brauer
