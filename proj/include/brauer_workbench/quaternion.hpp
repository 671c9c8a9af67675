#pragma once

// Quaternion algebras Q(a,b) over Q and over GF(q), q odd.
//
// Basis 1, i, j, k with i^2 = a, j^2 = b, ij = -k, ji = k. Consequently
// k^2 = -ab, ik = -aj, ki = aj, jk = bi, kj = -bi, and the reduced norm is
// N(t + xi + yj + zk) = t^2 - a x^2 - b y^2 + ab z^2.
// Hamilton's quaternions with ijk = -1 are Q(-1,-1) under k -> -k.
//
// Q(a,b) is a division algebra iff its norm form is anisotropic; a split algebra
// is certified by a nonzero element of norm zero.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"
#include "brauer_workbench/finfield.hpp"

namespace bw::quat {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<num::BigRational> {
  static num::BigRational zero(const num::BigRational&) { return num::BigRational(0); }
  static num::BigRational one(const num::BigRational&) { return num::BigRational(1); }
  static std::string base(const num::BigRational&) { return "Q"; }
  static std::string text(const num::BigRational& v) { return v.to_string(); }
};

template <>
struct ScalarTraits<gf::Element> {
  static gf::Element zero(const gf::Element& like) { return like.field().element(0); }
  static gf::Element one(const gf::Element& like) { return like.field().element(1); }
  static std::string base(const gf::Element& like) { return like.field().descriptor(); }
  static std::string text(const gf::Element& v) { return v.to_string(); }
};

template <class Scalar>
class Quaternion;

template <class Scalar>
class QuaternionAlgebra {
 public:
  using Traits = ScalarTraits<Scalar>;

  QuaternionAlgebra(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() || b_.is_zero()) throw InvalidArgument("quaternion algebra Q(a,b) needs a, b nonzero");
    if constexpr (std::is_same_v<Scalar, gf::Element>) {
      if (!(a_.field() == b_.field())) throw InvalidArgument("Q(a,b): a and b lie in different fields");
      if (a_.field().characteristic() == 2) throw InvalidArgument("Q(a,b) requires characteristic != 2");
    }
  }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  Scalar zero() const { return Traits::zero(a_); }
  Scalar one() const { return Traits::one(a_); }
  std::string base() const { return Traits::base(a_); }

  Quaternion<Scalar> element(Scalar t, Scalar x, Scalar y, Scalar z) const;
  Quaternion<Scalar> unit() const { return element(one(), zero(), zero(), zero()); }

  friend bool operator==(const QuaternionAlgebra& u, const QuaternionAlgebra& v) {
    return u.a_ == v.a_ && u.b_ == v.b_;
  }

 private:
  Scalar a_;
  Scalar b_;
};

template <class Scalar>
class Quaternion {
 public:
  Quaternion(QuaternionAlgebra<Scalar> algebra, Scalar t, Scalar x, Scalar y, Scalar z)
      : algebra_(std::move(algebra)), t_(std::move(t)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  const QuaternionAlgebra<Scalar>& algebra() const { return algebra_; }
  const Scalar& t() const { return t_; }
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  const Scalar& z() const { return z_; }

  bool is_zero() const { return t_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero(); }

  Scalar norm() const {
    const Scalar& a = algebra_.a();
    const Scalar& b = algebra_.b();
    return t_ * t_ - a * x_ * x_ - b * y_ * y_ + a * b * z_ * z_;
  }

  Quaternion conjugate() const { return Quaternion(algebra_, t_, -x_, -y_, -z_); }

  friend Quaternion operator*(const Quaternion& u, const Quaternion& v) {
    check_same(u, v);
    const Scalar& a = u.algebra_.a();
    const Scalar& b = u.algebra_.b();
    Scalar t = u.t_ * v.t_ + a * u.x_ * v.x_ + b * u.y_ * v.y_ - a * b * u.z_ * v.z_;
    Scalar x = u.t_ * v.x_ + u.x_ * v.t_ + b * (u.y_ * v.z_ - u.z_ * v.y_);
    Scalar y = u.t_ * v.y_ + u.y_ * v.t_ - a * (u.x_ * v.z_ - u.z_ * v.x_);
    Scalar z = u.t_ * v.z_ + u.z_ * v.t_ - (u.x_ * v.y_ - u.y_ * v.x_);
    return Quaternion(u.algebra_, std::move(t), std::move(x), std::move(y), std::move(z));
  }

  friend Quaternion operator+(const Quaternion& u, const Quaternion& v) {
    check_same(u, v);
    return Quaternion(u.algebra_, u.t_ + v.t_, u.x_ + v.x_, u.y_ + v.y_, u.z_ + v.z_);
  }

  Quaternion scaled(const Scalar& c) const { return Quaternion(algebra_, t_ * c, x_ * c, y_ * c, z_ * c); }

  friend bool operator==(const Quaternion& u, const Quaternion& v) {
    return u.algebra_ == v.algebra_ && u.t_ == v.t_ && u.x_ == v.x_ && u.y_ == v.y_ && u.z_ == v.z_;
  }

  std::vector<std::string> coordinates() const {
    using T = ScalarTraits<Scalar>;
    return {T::text(t_), T::text(x_), T::text(y_), T::text(z_)};
  }

 private:
  static void check_same(const Quaternion& u, const Quaternion& v) {
    if (!(u.algebra_ == v.algebra_)) throw InvalidArgument("quaternions from different algebras");
  }

  QuaternionAlgebra<Scalar> algebra_;
  Scalar t_;
  Scalar x_;
  Scalar y_;
  Scalar z_;
};

template <class Scalar>
Quaternion<Scalar> QuaternionAlgebra<Scalar>::element(Scalar t, Scalar x, Scalar y, Scalar z) const {
  return Quaternion<Scalar>(*this, std::move(t), std::move(x), std::move(y), std::move(z));
}

// Raised by inverse() on an element of norm zero; that element is a zero-divisor candidate.
template <class Scalar>
class ZeroNormError : public std::domain_error {
 public:
  explicit ZeroNormError(Quaternion<Scalar> u)
      : std::domain_error("quaternion has zero norm and is not invertible"), candidate_(std::move(u)) {}
  const Quaternion<Scalar>& candidate() const { return candidate_; }

 private:
  Quaternion<Scalar> candidate_;
};

template <class Scalar>
Quaternion<Scalar> inverse(const Quaternion<Scalar>& u) {
  Scalar n = u.norm();
  if (n.is_zero()) throw ZeroNormError<Scalar>(u);
  Scalar inv = u.algebra().one() / n;
  return u.conjugate().scaled(inv);
}

using RationalAlgebra = QuaternionAlgebra<num::BigRational>;
using RationalQuaternion = Quaternion<num::BigRational>;
using FiniteAlgebra = QuaternionAlgebra<gf::Element>;
using FiniteQuaternion = Quaternion<gf::Element>;

enum class Kind { Division, Split };

inline const char* to_string(Kind k) { return k == Kind::Division ? "Division" : "Split"; }

template <class Scalar>
struct ClassifyVerdict {
  Kind kind;
  std::optional<Quaternion<Scalar>> witness;                  // iff Split
  std::vector<std::pair<num::Place, int>> obstruction;        // places with symbol -1 (over Q)
  std::vector<std::pair<num::Place, int>> symbols;            // every place examined (over Q)
};

struct RationalClassifyOptions {
  // Largest max-norm height of (X, Y, Z) tried when searching X^2 = aY^2 + bZ^2.
  std::int64_t max_height = 10000;
};

// Largest |a|, |b| after squarefree reduction accepted by classify over Q.
inline constexpr std::int64_t kClassifyBound = 1'000'000;

// Over Q: Division iff some Hilbert symbol (a,b)_v is -1 for v in {2, inf} and the odd
// primes dividing ab. A Split verdict always carries a witness of norm exactly 0, found by
// searching X^2 = aY^2 + bZ^2 in increasing height (lexicographic (X,Y,Z) within a height)
// on the squarefree representatives; BudgetExhausted if none is found up to max_height.
ClassifyVerdict<num::BigRational> classify(const RationalAlgebra& A, const RationalClassifyOptions& options = {});

enum class FiniteSearch { Auto, Plain, Structured };

// Over GF(q), q odd, q <= 2^16: always Split. The witness is the first nonzero (t,x,y,z) of
// norm zero in lexicographic order of (y, z, t, x), with elements in canonical index order.
// Plain scans all four coordinates; Structured solves t^2 - a x^2 = b y^2 - ab z^2 with a
// square-root table. Auto uses Plain for q <= 100.
ClassifyVerdict<gf::Element> classify(const FiniteAlgebra& A, FiniteSearch search = FiniteSearch::Auto);

// Smallest nonnegative ternary solution of X^2 = a Y^2 + b Z^2 with max(X,Y,Z) <= max_height,
// ordered by height and then lexicographically.
struct TernarySolution {
  std::int64_t x;
  std::int64_t y;
  std::int64_t z;
};
std::optional<TernarySolution> search_ternary(std::int64_t a, std::int64_t b, std::int64_t max_height);

// In Q(m^2 b, b) over GF(q) with -1 a square: the element sqrt(-1)*m*b + k, which is nonzero
// with norm zero. sqrt(-1) is the smallest square root in canonical order.
FiniteQuaternion p8_witness(const gf::FiniteField& F, gf::Value m, gf::Value b);

}  // namespace bw::quat
