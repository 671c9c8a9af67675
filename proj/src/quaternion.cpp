#include "brauer_workbench/quaternion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>

namespace bw::quat {

namespace {

using num::BigInt;
using num::BigRational;

std::int64_t isqrt128(__int128 v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<__int128>(r) * r > v) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool exact_sqrt128(__int128 v, std::int64_t* root) {
  std::int64_t r = isqrt128(v);
  if (r < 0 || static_cast<__int128>(r) * r != v) return false;
  *root = r;
  return true;
}

// Smallest primitive integer vector proportional to v (v nonzero).
std::array<BigRational, 4> primitive(const std::array<BigRational, 4>& v) {
  BigInt l = 1;
  for (const auto& c : v) l = lcm(l, c.denominator());
  std::array<BigInt, 4> ints;
  BigInt g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ints[i] = v[i].numerator() * (l / v[i].denominator());
    g = gcd(g, ints[i]);
  }
  std::array<BigRational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = BigRational(BigInt(ints[i] / g));
  return out;
}

}  // namespace

std::optional<TernarySolution> search_ternary(std::int64_t a, std::int64_t b, std::int64_t max_height) {
  if (a == 0 || b == 0) throw InvalidArgument("ternary form needs nonzero coefficients");
  const __int128 A = a;
  const __int128 B = b;
  for (std::int64_t h = 1; h <= max_height; ++h) {
    const __int128 H = h;
    std::optional<TernarySolution> best;
    auto offer = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
      TernarySolution s{x, y, z};
      if (!best || std::tie(x, y, z) < std::tie(best->x, best->y, best->z)) best = s;
    };
    // Y = h, Z <= h, X < h
    for (std::int64_t z = 0; z <= h; ++z) {
      std::int64_t x;
      if (exact_sqrt128(A * H * H + B * z * z, &x) && x < h) offer(x, h, z);
    }
    // Z = h, Y < h, X < h
    for (std::int64_t y = 0; y < h; ++y) {
      std::int64_t x;
      if (exact_sqrt128(A * y * y + B * H * H, &x) && x < h) offer(x, y, h);
    }
    if (!best) {
      // X = h, Y, Z <= h
      for (std::int64_t y = 0; y <= h; ++y) {
        __int128 rem = H * H - A * y * y;
        if (rem % B != 0) continue;
        std::int64_t z;
        if (exact_sqrt128(rem / B, &z) && z <= h) offer(h, y, z);
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

ClassifyVerdict<BigRational> classify(const RationalAlgebra& A, const RationalClassifyOptions& options) {
  const num::SquareClass ca = num::square_class(A.a());
  const num::SquareClass cb = num::square_class(A.b());
  const std::int64_t a0 = ca.squarefree;
  const std::int64_t b0 = cb.squarefree;
  if (std::abs(a0) > kClassifyBound || std::abs(b0) > kClassifyBound)
    throw InvalidArgument("classify over Q: squarefree parts must satisfy |a|, |b| <= 10^6");

  std::vector<std::int64_t> odd;
  for (std::int64_t v : {a0, b0})
    for (auto [prime, e] : num::factorize(v))
      if (prime != 2) odd.push_back(prime);
  std::sort(odd.begin(), odd.end());
  odd.erase(std::unique(odd.begin(), odd.end()), odd.end());

  std::vector<num::Place> places{num::Place::prime(2)};
  for (std::int64_t prime : odd) places.push_back(num::Place::prime(prime));
  places.push_back(num::Place::infinity());

  ClassifyVerdict<BigRational> verdict{Kind::Split, std::nullopt, {}, {}};
  const BigRational ra(a0);
  const BigRational rb(b0);
  for (const auto& v : places) {
    int s = num::hilbert_symbol(ra, rb, v);
    verdict.symbols.emplace_back(v, s);
    if (s == -1) verdict.obstruction.emplace_back(v, s);
  }
  if (!verdict.obstruction.empty()) {
    verdict.kind = Kind::Division;
    return verdict;
  }

  TernarySolution sol{};
  if (a0 == 1) {
    sol = {1, 1, 0};
  } else if (b0 == 1) {
    sol = {1, 0, 1};
  } else {
    auto found = search_ternary(a0, b0, options.max_height);
    if (!found)
      throw BudgetExhausted("witness search exhausted: no solution of X^2 = " + std::to_string(a0) + "Y^2 + " +
                            std::to_string(b0) + "Z^2 up to height " + std::to_string(options.max_height));
    sol = *found;
  }
  // i0 = i / root_a and j0 = j / root_b, so X + Y i0 + Z j0 becomes X + (Y/root_a) i + (Z/root_b) j.
  auto coords = primitive({BigRational(sol.x), BigRational(sol.y) / ca.root, BigRational(sol.z) / cb.root,
                           BigRational(0)});
  RationalQuaternion w = A.element(coords[0], coords[1], coords[2], coords[3]);
  if (w.is_zero() || !w.norm().is_zero()) throw std::logic_error("classify: witness failed verification");
  verdict.witness = std::move(w);
  return verdict;
}

namespace {

struct Coords {
  gf::Value t, x, y, z;
};

std::optional<Coords> plain_search(const gf::FiniteField& F, gf::Value a, gf::Value b) {
  const gf::Value q = F.order();
  const gf::Value ab = F.mul(a, b);
  for (gf::Value y = 0; y < q; ++y) {
    const gf::Value by2 = F.mul(b, F.mul(y, y));
    for (gf::Value z = 0; z < q; ++z) {
      const gf::Value abz2 = F.mul(ab, F.mul(z, z));
      for (gf::Value t = 0; t < q; ++t) {
        const gf::Value t2 = F.mul(t, t);
        for (gf::Value x = 0; x < q; ++x) {
          if ((y | z | t | x) == 0) continue;
          gf::Value n = F.add(F.sub(F.sub(t2, F.mul(a, F.mul(x, x))), by2), abz2);
          if (n == 0) return Coords{t, x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Coords> structured_search(const gf::FiniteField& F, gf::Value a, gf::Value b) {
  const gf::Value q = F.order();
  constexpr gf::Value kNone = ~gf::Value{0};
  // smallest square root of every square
  std::vector<gf::Value> root(q, kNone);
  for (gf::Value x = 0; x < q; ++x) {
    gf::Value s = F.mul(x, x);
    if (root[s] == kNone) root[s] = x;
  }
  const gf::Value ab = F.mul(a, b);
  const gf::Value a_inv = F.inv(a);
  for (gf::Value y = 0; y < q; ++y) {
    const gf::Value by2 = F.mul(b, F.mul(y, y));
    for (gf::Value z = 0; z < q; ++z) {
      // t^2 - a x^2 = R
      const gf::Value r = F.sub(by2, F.mul(ab, F.mul(z, z)));
      for (gf::Value t = 0; t < q; ++t) {
        const gf::Value c = F.mul(F.sub(F.mul(t, t), r), a_inv);
        const gf::Value x = root[c];
        if (x == kNone) continue;
        if ((y | z | t | x) == 0) continue;  // x = 0 is the only root of 0
        return Coords{t, x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ClassifyVerdict<gf::Element> classify(const FiniteAlgebra& A, FiniteSearch search) {
  const gf::FiniteField& F = A.a().field();
  if (F.order() > (std::uint64_t{1} << 16)) throw InvalidArgument("classify over GF(q) requires q <= 2^16");
  if (search == FiniteSearch::Auto) search = F.order() <= 100 ? FiniteSearch::Plain : FiniteSearch::Structured;
  auto found = search == FiniteSearch::Plain ? plain_search(F, A.a().value(), A.b().value())
                                             : structured_search(F, A.a().value(), A.b().value());
  if (!found) throw std::logic_error("classify: no isotropic vector over a finite field");
  FiniteQuaternion w = A.element(F.element(found->t), F.element(found->x), F.element(found->y), F.element(found->z));
  if (w.is_zero() || !w.norm().is_zero()) throw std::logic_error("classify: witness failed verification");
  return ClassifyVerdict<gf::Element>{Kind::Split, std::move(w), {}, {}};
}

FiniteQuaternion p8_witness(const gf::FiniteField& F, gf::Value m, gf::Value b) {
  if (F.characteristic() == 2) throw InvalidArgument("p8_witness requires odd characteristic");
  if (!F.contains(m) || !F.contains(b)) throw InvalidArgument("p8_witness: m or b is not an element of the field");
  if (m == 0 || b == 0) throw InvalidArgument("p8_witness: m and b must be nonzero");
  const gf::Value minus_one = F.neg(1);
  std::optional<gf::Value> i;
  for (gf::Value v = 1; v < F.order(); ++v) {
    if (F.mul(v, v) == minus_one) {
      i = v;
      break;
    }
  }
  if (!i) throw InvalidArgument("p8_witness: -1 is not a square in " + F.descriptor());
  const gf::Value a = F.mul(F.mul(m, m), b);
  FiniteAlgebra A(F.element(a), F.element(b));
  FiniteQuaternion u = A.element(F.element(F.mul(F.mul(*i, m), b)), F.element(0), F.element(0), F.element(1));
  if (u.is_zero() || !u.norm().is_zero()) throw ConstructionError("p8 witness does not have norm zero");
  return u;
}

}  // namespace bw::quat
