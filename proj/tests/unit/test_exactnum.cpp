#include <doctest.h>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"
#include "oracles.hpp"

using bw::num::BigInt;
using bw::num::BigRational;
using bw::num::Place;

namespace {

std::vector<std::int64_t> squarefree_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v)
    if (oracle::squarefree(v)) out.push_back(v);
  return out;
}

Place place_of(std::int64_t p) { return p == 0 ? Place::infinity() : Place::prime(p); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(BigRational(BigInt(2), BigInt(4)) == BigRational(BigInt(1), BigInt(2)));
  const BigRational r(BigInt(-3), BigInt(-6));
  CHECK(r.numerator() == 1);
  CHECK(r.denominator() == 2);
  const BigRational z(BigInt(0), BigInt(5));
  CHECK(z.denominator() == 1);
  CHECK(BigRational(BigInt(3), BigInt(-9)).to_string() == "-1/3");
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), bw::InvalidArgument);
}

TEST_CASE("rational arithmetic") {
  const auto a = BigRational::parse("3/4");
  const auto b = BigRational::parse("-5/6");
  CHECK((a + b).to_string() == "-1/12");
  CHECK((a * b).to_string() == "-5/8");
  CHECK((a / b).to_string() == "-9/10");
  CHECK((a - a).is_zero());
  CHECK(b < a);
  CHECK_THROWS(a / BigRational(0));
}

TEST_CASE("rational parsing") {
  CHECK(BigRational::parse("-12").to_string() == "-12");
  CHECK(BigRational::parse("+10/4").to_string() == "5/2");
  for (const char* bad : {"", "1/", "/2", "1//2", "a", "1/0", "1.5", "--1", "1 /2"})
    CHECK_THROWS_AS(BigRational::parse(bad), bw::InvalidArgument);
  // large values parse; the factoring bound applies when a square class is needed
  CHECK(BigRational::parse("10000000000000").to_string() == "10000000000000");
  CHECK_THROWS_AS(bw::num::square_class(BigRational::parse("10000000000000")), bw::InvalidArgument);
}

TEST_CASE("primality and factorization agree with trial division") {
  for (std::int64_t n = 0; n < 3000; ++n) CHECK(bw::num::is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime(n));
  for (std::int64_t n = 2; n < 2000; ++n) {
    std::int64_t prod = 1;
    std::int64_t last = 1;
    for (auto [p, e] : bw::num::factorize(n)) {
      CHECK(oracle::is_prime(p));
      CHECK(p > last);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK(bw::num::prime_power(81) == std::pair<std::uint64_t, unsigned>{3, 4});
  CHECK(bw::num::prime_power(7) == std::pair<std::uint64_t, unsigned>{7, 1});
  CHECK(bw::num::prime_power(12) == std::pair<std::uint64_t, unsigned>{0, 0});
  CHECK(bw::num::prime_power(1) == std::pair<std::uint64_t, unsigned>{0, 0});
}

TEST_CASE("legendre symbol examples") {
  CHECK(bw::num::legendre_symbol(BigInt(2), BigInt(7)) == 1);
  CHECK(bw::num::legendre_symbol(BigInt(3), BigInt(7)) == -1);
  CHECK(bw::num::legendre_symbol(BigInt(-1), BigInt(5)) == 1);
  CHECK(bw::num::legendre_symbol(BigInt(14), BigInt(7)) == 0);
  CHECK_THROWS_AS(bw::num::legendre_symbol(BigInt(1), BigInt(9)), bw::InvalidArgument);
  CHECK_THROWS_AS(bw::num::legendre_symbol(BigInt(1), BigInt(2)), bw::InvalidArgument);
}

TEST_CASE("legendre symbol matches enumeration of squares") {
  for (std::int64_t p = 3; p <= 97; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::int64_t a = -2 * p; a <= 2 * p; ++a) {
      const int s = bw::num::legendre_symbol(BigInt(a), BigInt(p));
      CHECK(s == oracle::legendre(a, p));
      CHECK(s == bw::num::legendre_symbol(BigInt(a + p), BigInt(p)));
    }
  }
}

TEST_CASE("hilbert symbol examples") {
  const BigRational m1(-1);
  CHECK(bw::num::hilbert_symbol(m1, m1, Place::prime(2)) == -1);
  CHECK(bw::num::hilbert_symbol(m1, m1, Place::infinity()) == -1);
  CHECK(bw::num::hilbert_symbol(m1, m1, Place::prime(3)) == 1);
  CHECK(bw::num::hilbert_symbol(BigRational(2), BigRational(7), Place::prime(7)) == 1);
  CHECK(bw::num::hilbert_symbol(BigRational(3), BigRational(7), Place::prime(7)) == -1);
  CHECK_THROWS_AS(bw::num::hilbert_symbol(BigRational(0), m1, Place::prime(2)), bw::InvalidArgument);
}

TEST_CASE("local-solubility oracle is stable in the modulus exponent") {
  for (std::int64_t a : squarefree_range(-10, 10))
    for (std::int64_t b : squarefree_range(-10, 10)) {
      CHECK(oracle::primitive_solution_mod(a, b, 2, 5) == oracle::primitive_solution_mod(a, b, 2, 6));
      CHECK(oracle::primitive_solution_mod(a, b, 3, 2) == oracle::primitive_solution_mod(a, b, 3, 3));
    }
}

TEST_CASE("hilbert symbol matches local solubility") {
  const auto values = squarefree_range(-10, 10);
  for (std::int64_t p : {2, 3, 5, 7, 0})
    for (std::int64_t a : values)
      for (std::int64_t b : values) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(p);
        CHECK(bw::num::hilbert_symbol(BigRational(a), BigRational(b), place_of(p)) == oracle::hilbert(a, b, p));
      }
}

TEST_CASE("hilbert symbol is symmetric and bilinear") {
  const auto values = squarefree_range(-10, 10);
  for (std::int64_t p : {2, 3, 5, 7, 0}) {
    const Place v = place_of(p);
    for (std::int64_t a : values)
      for (std::int64_t b : values) {
        const int ab = bw::num::hilbert_symbol(BigRational(a), BigRational(b), v);
        CHECK(ab == bw::num::hilbert_symbol(BigRational(b), BigRational(a), v));
        for (std::int64_t c : {-1, 2, 3, 5}) {
          const int ac = bw::num::hilbert_symbol(BigRational(a), BigRational(c), v);
          CHECK(bw::num::hilbert_symbol(BigRational(a), BigRational(b * c), v) == ab * ac);
        }
      }
  }
}

TEST_CASE("hilbert symbol depends only on square classes") {
  const BigRational a = BigRational::parse("-4/9");
  const BigRational b = BigRational::parse("-25");
  for (std::int64_t p : {2, 3, 5, 0})
    CHECK(bw::num::hilbert_symbol(a, b, place_of(p)) == oracle::hilbert(-1, -1, p));
}

TEST_CASE("squarefree reduction") {
  CHECK(bw::num::squarefree_reduce(BigRational(12)) == 3);
  CHECK(bw::num::squarefree_reduce(BigRational(-1)) == -1);
  CHECK(bw::num::squarefree_reduce(BigRational::parse("9/2")) == 2);
  CHECK(bw::num::squarefree_reduce(BigRational::parse("-8/27")) == -6);
  CHECK_THROWS_AS(bw::num::squarefree_reduce(BigRational(0)), bw::InvalidArgument);
}

TEST_CASE("square class returns a root with a = root^2 * squarefree") {
  for (std::int64_t n = -60; n <= 60; ++n)
    for (std::int64_t d = 1; d <= 12; ++d) {
      if (n == 0) continue;
      const BigRational a{BigInt(n), BigInt(d)};
      const auto sc = bw::num::square_class(a);
      CHECK(oracle::squarefree(sc.squarefree));
      CHECK(sc.root * sc.root * BigRational(static_cast<long>(sc.squarefree)) == a);
    }
}

TEST_CASE("places") {
  CHECK(Place::infinity().to_string() == "inf");
  CHECK(Place::parse("7") == Place::prime(7));
  CHECK(Place::parse("inf").is_infinite());
  CHECK_THROWS_AS(Place::prime(9), bw::InvalidArgument);
  CHECK_THROWS_AS(Place::parse("x"), bw::InvalidArgument);
}
