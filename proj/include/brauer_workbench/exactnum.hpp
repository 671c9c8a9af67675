#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bw::num {

using BigInt = mpz_class;

// Largest |numerator| and denominator accepted from external input.
inline constexpr std::int64_t kInputBound = 1'000'000'000'000;

// Rational number kept in lowest terms with a positive denominator at all times,
// so two values are equal iff their fields are equal.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(BigInt value) : num_(std::move(value)), den_(1) {}
  BigRational(BigInt num, BigInt den);

  // Accepts "n" or "n/d" with optional leading sign.
  static BigRational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  std::string to_string() const;

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

// Returns (prime, exponent) pairs in increasing prime order. Trial division; |n| <= 10^12.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// If n = prime^k with k >= 1, returns {prime, k}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

// Legendre symbol (a/p) for an odd prime p.
int legendre_symbol(const BigInt& a, const BigInt& p);

// A place of Q: a rational prime or the real place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(std::int64_t p);

  bool is_infinite() const { return prime_ == 0; }
  std::int64_t prime() const { return prime_; }

  // "2", "3", ... or "inf"
  std::string to_string() const;
  static Place parse(std::string_view text);

  friend bool operator==(const Place&, const Place&) = default;

 private:
  explicit Place(std::int64_t p) : prime_(p) {}
  std::int64_t prime_;
};

// Squarefree integer in the same square class of Q* as a.
BigInt squarefree_reduce(const BigRational& a);

// Square class representative together with the rational r such that a = r^2 * squarefree.
struct SquareClass {
  std::int64_t squarefree;
  BigRational root;
};
SquareClass square_class(const BigRational& a);

// Hilbert symbol (a,b)_v: +1 iff z^2 - a x^2 - b y^2 has a nontrivial zero over Q_v.
int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& place);

// Integer square root when n is a perfect square.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

}  // namespace bw::num
