#pragma once

// Brute-force reference computations. Nothing here calls into the library, so tests can compare
// the library against values obtained by enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool squarefree(std::int64_t n) {
  n = std::abs(n);
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return n != 0;
}

// (a/p) by enumerating the squares mod p.
inline int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod(a, p);
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

// Does z^2 = a x^2 + b y^2 have a solution mod p^k with (x, y, z) not all divisible by p?
inline bool primitive_solution_mod(std::int64_t a, std::int64_t b, std::int64_t p, int k) {
  std::int64_t m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  std::vector<char> any_root(m, 0), unit_root(m, 0);
  for (std::int64_t z = 0; z < m; ++z) {
    const std::int64_t s = z * z % m;
    any_root[s] = 1;
    if (z % p != 0) unit_root[s] = 1;
  }
  const std::int64_t am = mod(a, m), bm = mod(b, m);
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y) {
      const std::int64_t v = (am * (x * x % m) + bm * (y * y % m)) % m;
      const bool unit_xy = x % p != 0 || y % p != 0;
      if (unit_xy ? any_root[v] : unit_root[v]) return true;
    }
  return false;
}

// Hilbert symbol of squarefree integers at a prime from local solubility (mod 32 at 2, mod p^2
// otherwise), or at infinity (p = 0) from signs.
inline int hilbert(std::int64_t a, std::int64_t b, std::int64_t p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  return primitive_solution_mod(a, b, p, p == 2 ? 5 : 2) ? 1 : -1;
}

// Nonzero (X, Y, Z), |coordinates| <= height, with X^2 = a Y^2 + b Z^2. Signs do not matter, so
// only nonnegative triples are examined; for each Z the range of Y with 0 <= aY^2 + bZ^2 <= H^2
// is computed directly.
struct Triple {
  std::int64_t x, y, z;
};

inline bool exact_square(std::int64_t v, std::int64_t* root) {
  static const std::vector<char> qr64 = [] {
    std::vector<char> t(64, 0);
    for (int i = 0; i < 64; ++i) t[i * i % 64] = 1;
    return t;
  }();
  if (v < 0 || !qr64[v & 63]) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return false;
  *root = r;
  return true;
}

inline std::optional<Triple> ternary_search(std::int64_t a, std::int64_t b, std::int64_t height) {
  const std::int64_t H2 = height * height;
  for (std::int64_t z = 0; z <= height; ++z) {
    const std::int64_t bz = b * z * z;
    // need 0 <= a y^2 + bz <= H2
    std::int64_t lo = 0, hi = height;
    auto value = [&](std::int64_t y) { return a * y * y + bz; };
    if (a > 0) {
      if (bz < 0) {
        auto y0 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(-bz) / a));
        while (y0 > 0 && value(y0 - 1) >= 0) --y0;
        while (value(y0) < 0) ++y0;
        lo = y0;
      }
      if (bz > H2) continue;
      auto y1 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(H2 - bz) / a)) + 1;
      while (y1 >= 0 && value(y1) > H2) --y1;
      hi = std::min(hi, y1);
    } else {
      if (bz < 0) continue;
      auto y1 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bz) / -a)) + 1;
      while (y1 >= 0 && value(y1) < 0) --y1;
      hi = std::min(hi, y1);
      if (bz > H2) {
        auto y0 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bz - H2) / -a));
        while (y0 > 0 && value(y0 - 1) <= H2) --y0;
        while (value(y0) > H2) ++y0;
        lo = y0;
      }
    }
    for (std::int64_t y = lo; y <= hi; ++y) {
      if (y == 0 && z == 0) continue;
      std::int64_t x;
      if (exact_square(value(y), &x)) return Triple{x, y, z};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- polynomials over Z/p

using Poly = std::vector<std::int64_t>;  // ascending, trimmed

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly polymod(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  const std::int64_t inv_lead = [&] {
    for (std::int64_t x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return std::int64_t{0};
  }();
  while (a.size() >= m.size()) {
    const std::int64_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod(a[shift + i] - c * m[i], p);
    trim(a);
  }
  return a;
}

// Monic polynomials of the given degree over Z/p, in lexicographic order of (c_0, c_1, ...).
inline std::vector<Poly> monic_polys(std::int64_t p, int degree) {
  std::vector<Poly> out;
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::int64_t code = 0; code < count; ++code) {
    Poly f(degree + 1, 0);
    f[degree] = 1;
    // c_{degree-1} varies fastest
    std::int64_t c = code;
    for (int i = degree - 1; i >= 0; --i) {
      f[i] = c % p;
      c /= p;
    }
    out.push_back(f);
  }
  return out;
}

inline bool irreducible_by_trial_division(const Poly& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d)
    for (const auto& g : monic_polys(p, d))
      if (polymod(f, g, p).empty()) return false;
  return true;
}

inline Poly smallest_irreducible(std::int64_t p, int degree) {
  for (const auto& f : monic_polys(p, degree))
    if (irreducible_by_trial_division(f, p)) return f;
  return {};
}

// GF(p^n) by schoolbook arithmetic on digit vectors modulo the smallest irreducible.
class NaiveField {
 public:
  NaiveField(std::int64_t p, int n) : p_(p), n_(n), modulus_(smallest_irreducible(p, n)) {
    order_ = 1;
    for (int i = 0; i < n; ++i) order_ *= p;
  }
  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }

  Poly digits(std::int64_t v) const {
    Poly d(n_, 0);
    for (int i = 0; i < n_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }
  std::int64_t index(const Poly& d) const {
    std::int64_t v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p_ + d[i];
    return v;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < n_; ++i) da[i] = (da[i] + db[i]) % p_;
    return index(da);
  }
  std::int64_t neg(std::int64_t a) const {
    auto d = digits(a);
    for (auto& c : d) c = mod(-c, p_);
    return index(d);
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    auto da = digits(a), db = digits(b);
    Poly prod(2 * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    auto r = polymod(prod, modulus_, p_);
    r.resize(n_, 0);
    return index(r);
  }
  std::int64_t pow(std::int64_t a, std::uint64_t e) const {
    std::int64_t r = 1;
    for (; e; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

 private:
  std::int64_t p_;
  int n_;
  Poly modulus_;
  std::int64_t order_;
};

// Polynomials over a NaiveField, coefficients are element indices.
inline Poly field_polymod(Poly a, const Poly& m, const NaiveField& F) {
  trim(a);
  std::int64_t inv_lead = 0;
  for (std::int64_t x = 1; x < F.order(); ++x)
    if (F.mul(x, m.back()) == 1) inv_lead = x;
  while (a.size() >= m.size()) {
    const std::int64_t c = F.mul(a.back(), inv_lead);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

inline bool irreducible_over(const Poly& f, const NaiveField& F) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F.order();
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % F.order();
        c /= F.order();
      }
      if (field_polymod(f, g, F).empty()) return false;
    }
  }
  return true;
}

// Degree of x over GF(p) as the length of its Frobenius orbit.
inline int orbit_length(const NaiveField& F, std::int64_t x, std::uint64_t q) {
  int k = 1;
  for (std::int64_t y = F.pow(x, q); y != x; y = F.pow(y, q)) ++k;
  return k;
}

// Degrees of the irreducible factors over Z/p of a squarefree f, by repeatedly splitting off
// irreducible divisors of increasing degree found by trial division.
inline std::vector<int> factor_degrees_brute(Poly f, std::int64_t p) {
  std::vector<int> out;
  for (int d = 1; static_cast<int>(f.size()) - 1 >= d;) {
    bool split = false;
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(static_cast<int>(f.size()) - 1);
      break;
    }
    for (const auto& g : monic_polys(p, d)) {
      if (!irreducible_by_trial_division(g, p)) continue;
      if (polymod(f, g, p).empty()) {
        // f /= g
        Poly q(f.size() - g.size() + 1, 0);
        Poly r = f;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
          q[i] = r[i + g.size() - 1];
          for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = mod(r[i + j] - q[i] * g[j], p);
        }
        f = q;
        out.push_back(d);
        split = true;
        break;
      }
    }
    if (!split) ++d;
    if (f.size() == 1) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
