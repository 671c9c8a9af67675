#pragma once

// Arithmetic in GF(p^n), univariate polynomials over a finite field, factorization,
// subfield embeddings and the relative norm.
//
// Elements of GF(p^n) are residues modulo a monic irreducible polynomial over GF(p).
// A residue c_0 + c_1 X + ... + c_{n-1} X^{n-1} is encoded by the integer
// sum c_i p^i; this integer is the canonical element order used everywhere a
// "smallest" element is chosen. Elements of the prime field are exactly the
// values below p.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bw::gf {

using Value = std::uint64_t;

inline constexpr unsigned kDefaultMaxBits = 24;
inline constexpr std::uint64_t kDefaultSeed = 0x6272617565720001ULL;

class Element;

class FiniteField {
 public:
  // GF(p^n) with the lexicographically smallest monic irreducible modulus
  // (coefficient list c_0, c_1, ... compared from c_0). Throws InvalidArgument if p is not
  // prime, n == 0, or p^n > 2^max_bits.
  static FiniteField make(std::uint64_t p, unsigned n, unsigned max_bits = kDefaultMaxBits);

  // GF(q) for a prime power q.
  static FiniteField of_order(std::uint64_t q, unsigned max_bits = kDefaultMaxBits);

  // Field with an explicit modulus (ascending coefficients over GF(p), monic). The modulus is
  // checked for irreducibility.
  static FiniteField with_modulus(std::uint64_t p, std::vector<Value> modulus);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  const std::vector<Value>& modulus() const;

  // "GF(p)" or "GF(p^n)".
  std::string descriptor() const;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  // Image of an integer in the prime field.
  Value from_int(std::int64_t k) const;

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;  // throws std::domain_error on zero
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t e) const;
  // a^(p^k)
  Value frobenius(Value a, unsigned k = 1) const;
  bool is_square(Value a) const;

  // Residue coefficients c_0..c_{n-1}.
  std::vector<Value> digits(Value a) const;
  Value from_digits(std::span<const Value> digits) const;

  // Smallest d >= 1 with a^(p^d) = a, i.e. the degree of a over the prime field.
  unsigned element_degree(Value a) const;

  // The multiplicative generator with the smallest index.
  Value primitive_element() const;

  Element element(Value v) const;
  bool contains(Value v) const { return v < order(); }

  // Non-null identity handle; equal fields compare equal by (p, n, modulus).
  friend bool operator==(const FiniteField& a, const FiniteField& b);

  struct Impl;

 private:
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// A field element tied to its field.
class Element {
 public:
  Element(FiniteField field, Value value);

  const FiniteField& field() const { return field_; }
  Value value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Element operator-() const { return {field_, field_.neg(value_)}; }
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  Element pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
  Element inverse() const { return {field_, field_.inv(value_)}; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  FiniteField field_;
  Value value_;
};

// Dense univariate polynomial over a finite field, ascending coefficients, no trailing zeros.
class Poly {
 public:
  explicit Poly(FiniteField field) : field_(std::move(field)) {}
  Poly(FiniteField field, std::vector<Value> coeffs);

  static Poly monomial(const FiniteField& field, std::size_t degree, Value coeff = 1);
  static Poly constant(const FiniteField& field, Value c);
  static Poly x(const FiniteField& field) { return monomial(field, 1); }

  // "c0,c1,..." with each c an element index of the field.
  static Poly parse(const FiniteField& field, std::string_view text);
  std::string to_string() const;

  const FiniteField& field() const { return field_; }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Value leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Value coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  Poly monic() const;
  Poly derivative() const;
  Value evaluate(Value x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Value c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
  }

  // Coefficient vectors compared from c_0; shorter-degree polynomials first.
  friend bool canonical_less(const Poly& a, const Poly& b);

 private:
  void trim();

  FiniteField field_;
  std::vector<Value> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);
bool is_squarefree(const Poly& f);

struct Factor {
  Poly poly;
  unsigned multiplicity;
};

struct FactorOptions {
  std::uint64_t seed = kDefaultSeed;
};

// Rabin's test. Throws InvalidArgument on the zero or a constant polynomial.
bool is_irreducible(const Poly& f);

// Complete factorization into monic irreducibles with multiplicities, sorted by
// (degree, canonical coefficient order). The product equals f divided by its leading
// coefficient. The seed drives equal-degree splitting only; the result does not depend on it.
std::vector<Factor> factor(const Poly& f, const FactorOptions& options = {});

// Distinct roots of f in its coefficient field, ascending.
std::vector<Value> roots(const Poly& f, const FactorOptions& options = {});

// Smallest monic irreducible of the given degree over the field, in canonical order.
Poly smallest_irreducible(const FiniteField& field, unsigned degree);

// Field homomorphism sub -> super, fixed by the image of the residue X of sub.
class Embedding {
 public:
  // The embedding sending X to the smallest root of sub's modulus in super.
  static Embedding canonical(const FiniteField& sub, const FiniteField& super);
  static Embedding identity(const FiniteField& field);
  // Throws InvalidArgument if `generator_image` is not a root of sub's modulus.
  Embedding(FiniteField sub, FiniteField super, Value generator_image);

  const FiniteField& sub() const { return sub_; }
  const FiniteField& super() const { return super_; }
  Value generator_image() const { return generator_image_; }

  Value map(Value x) const;
  // x in image(sub) -> its preimage; nullopt otherwise.
  std::optional<Value> preimage(Value y) const;

  // this o inner: inner.sub -> this.super. Requires inner.super == this.sub.
  Embedding after(const Embedding& inner) const;

 private:
  FiniteField sub_;
  FiniteField super_;
  Value generator_image_;
  std::vector<std::vector<Value>> basis_images_;   // images of X^j, as digit vectors of super
  std::vector<std::size_t> pivot_rows_;            // rows of the image matrix forming an invertible block
  std::vector<std::vector<Value>> left_inverse_;   // sub.degree() x sub.degree() inverse of that block
};

// True iff GF(sub) is (isomorphic to) a subfield of GF(super).
bool is_subfield(const FiniteField& sub, const FiniteField& super);

// N_{L/K}(x) as the product of the conjugates x^(|K|^i), i < [L:K], pulled back to K
// along the canonical embedding.
Value norm(const FiniteField& L, const FiniteField& K, Value x);

// Exact image of the norm on L*, ascending. Throws if |L| > 2^max_bits.
std::vector<Value> norm_image(const FiniteField& L, const FiniteField& K, unsigned max_bits = 16);

// Tr_{L/K}(x), pulled back to K.
Value trace(const FiniteField& L, const FiniteField& K, Value x);

// Minimal polynomial over `base.sub()` of an element x of `base.super()`.
Poly minimal_polynomial(const Embedding& base, Value x);

// Degree of x over the subfield of order q (q a power of the characteristic whose exponent
// need not divide the field degree); computed intrinsically from the degree over GF(p).
std::uint64_t degree_over(const FiniteField& field, Value x, std::uint64_t q);

}  // namespace bw::gf
