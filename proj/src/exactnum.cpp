#include "brauer_workbench/exactnum.hpp"

#include <cctype>
#include <map>

#include "brauer_workbench/errors.hpp"

namespace bw::num {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidArgument("rational with zero denominator");
  canonicalize();
}

void BigRational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1 && g != 0) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k])))
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
  return BigRational(parse_int(text.substr(0, slash)), std::move(den));
}

BigRational BigRational::operator-() const {
  BigRational r = *this;
  r.num_ = -r.num_;
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigRational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  if (m > static_cast<std::uint64_t>(kInputBound))
    throw InvalidArgument("integer " + std::to_string(n) + " exceeds the 10^12 factoring bound");
  std::vector<std::pair<std::int64_t, int>> out;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(static_cast<std::int64_t>(p), e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) out.emplace_back(static_cast<std::int64_t>(m), 1);
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {n, 1};
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {0, 0};
  return {p, k};
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
  if (p < 3 || !is_prime(p))
    throw InvalidArgument("legendre_symbol: modulus " + p.get_str() + " is not an odd prime");
  // Binary Jacobi algorithm; for prime p this is the Legendre symbol.
  BigInt x = a % p;
  if (x < 0) x += p;
  BigInt n = p;
  int t = 1;
  while (x != 0) {
    while (mpz_even_p(x.get_mpz_t())) {
      x /= 2;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(x, n);
    if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
    x %= n;
  }
  return n == 1 ? t : 0;
}

Place Place::prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidArgument("place " + std::to_string(p) + " is not a prime");
  return Place(p);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : std::to_string(prime_); }

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  std::int64_t p = 0;
  if (text.empty() || text.size() > 18) throw InvalidArgument("malformed place '" + std::string(text) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidArgument("malformed place '" + std::string(text) + "'");
    p = p * 10 + (c - '0');
  }
  return prime(p);
}

SquareClass square_class(const BigRational& a) {
  if (a.is_zero()) throw InvalidArgument("square class of zero is undefined");
  const BigInt bound(static_cast<long>(kInputBound));
  if (abs(a.numerator()) > bound || a.denominator() > bound)
    throw InvalidArgument("rational " + a.to_string() + " exceeds the 10^12 input bound");
  std::map<std::int64_t, int> exponents;
  for (auto [p, e] : factorize(a.numerator().get_si())) exponents[p] += e;
  for (auto [p, e] : factorize(a.denominator().get_si())) exponents[p] += e;
  std::int64_t s = a.sign();
  BigInt root_num = 1;
  for (auto [p, e] : exponents) {
    if (e % 2) s *= p;
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e / 2));
    root_num *= pk;
  }
  // a = n/d = n*d / d^2 = s * (root_num / d)^2
  return SquareClass{s, BigRational(root_num, a.denominator())};
}

BigInt squarefree_reduce(const BigRational& a) { return BigInt(static_cast<long>(square_class(a).squarefree)); }

namespace {

int unit_eps(std::int64_t u) { return ((u % 4) + 4) % 4 == 3 ? 1 : 0; }
int unit_omega(std::int64_t u) {
  std::int64_t r = ((u % 8) + 8) % 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const BigRational& a, const BigRational& b, const Place& place) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("hilbert_symbol: arguments must be nonzero");
  std::int64_t sa = square_class(a).squarefree;
  std::int64_t sb = square_class(b).squarefree;
  if (place.is_infinite()) return (sa < 0 && sb < 0) ? -1 : 1;

  const std::int64_t p = place.prime();
  int alpha = 0;
  int beta = 0;
  std::int64_t u = sa;
  std::int64_t v = sb;
  if (u % p == 0) {
    u /= p;
    alpha = 1;
  }
  if (v % p == 0) {
    v /= p;
    beta = 1;
  }
  if (p == 2) {
    int e = unit_eps(u) * unit_eps(v) + alpha * unit_omega(v) + beta * unit_omega(u);
    return e % 2 ? -1 : 1;
  }
  int sign = (alpha * beta * (((p - 1) / 2) % 2)) % 2 ? -1 : 1;
  const BigInt bp(static_cast<long>(p));
  if (beta) sign *= legendre_symbol(BigInt(static_cast<long>(u)), bp);
  if (alpha) sign *= legendre_symbol(BigInt(static_cast<long>(v)), bp);
  return sign;
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root) *root = sqrt(n);
  return true;
}

}  // namespace bw::num
