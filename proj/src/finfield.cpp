#include "brauer_workbench/finfield.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"

namespace bw::gf {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr unsigned kMaxDegree = 62;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = mulmod64(result, a, p);
    a = mulmod64(a, a, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

struct FiniteField::Impl {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t order = 0;
  std::vector<Value> modulus;
  std::vector<std::uint64_t> p_pows;
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> exp_table;
  Value primitive = 0;

  bool has_tables() const { return !exp_table.empty(); }

  void to_digits(Value a, std::uint64_t* out) const {
    for (unsigned i = 0; i < n; ++i) {
      out[i] = a % p;
      a /= p;
    }
  }
  Value from_digit_array(const std::uint64_t* d) const {
    Value v = 0;
    for (unsigned i = n; i-- > 0;) v = v * p + d[i];
    return v;
  }

  Value add(Value a, Value b) const {
    if (n == 1) {
      Value s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Value out = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      out += s * p_pows[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  Value neg(Value a) const {
    if (n == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Value out = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t d = a % p;
      out += (d == 0 ? 0 : p - d) * p_pows[i];
      a /= p;
    }
    return out;
  }

  Value mul_slow(Value a, Value b) const {
    if (n == 1) return mulmod64(a, b, p);
    std::array<std::uint64_t, kMaxDegree> da{};
    std::array<std::uint64_t, kMaxDegree> db{};
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    to_digits(a, da.data());
    to_digits(b, db.data());
    for (unsigned i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        prod[i + j] = (prod[i + j] + mulmod64(da[i], db[j], p)) % p;
      }
    }
    for (unsigned i = 2 * n - 1; i-- > n;) {
      std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        std::uint64_t t = mulmod64(c, modulus[j], p);
        prod[i - n + j] = (prod[i - n + j] + p - t) % p;
      }
      prod[i] = 0;
    }
    return from_digit_array(prod.data());
  }

  Value mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) {
      std::uint64_t s = static_cast<std::uint64_t>(log_table[a]) + log_table[b];
      if (s >= order - 1) s -= order - 1;
      return exp_table[s];
    }
    return mul_slow(a, b);
  }

  Value pow(Value a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_tables()) {
      std::uint64_t k = mulmod64(log_table[a], e % (order - 1), order - 1);
      return exp_table[k];
    }
    Value result = 1;
    Value base = a;
    while (e) {
      if (e & 1) result = mul_slow(result, base);
      e >>= 1;
      if (e) base = mul_slow(base, base);
    }
    return result;
  }

  Value compute_primitive() const {
    if (order == 2) return 1;
    auto factors = prime_factors(order - 1);
    for (Value g = 1; g < order; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (pow(g, (order - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    throw ConstructionError("no primitive element found; modulus is not irreducible");
  }

  void build_tables() {
    if (order > kTableLimit) return;
    primitive = compute_primitive();
    std::vector<std::uint32_t> exp(order - 1);
    std::vector<std::uint32_t> log(order, 0);
    Value x = 1;
    for (std::uint64_t i = 0; i + 1 < order; ++i) {
      exp[i] = static_cast<std::uint32_t>(x);
      log[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, primitive);
    }
    exp_table = std::move(exp);
    log_table = std::move(log);
  }
};

namespace {

std::shared_ptr<FiniteField::Impl> new_impl(std::uint64_t p, std::vector<Value> modulus) {
  auto impl = std::make_shared<FiniteField::Impl>();
  impl->p = p;
  impl->n = static_cast<unsigned>(modulus.size() - 1);
  impl->modulus = std::move(modulus);
  impl->p_pows.resize(impl->n);
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < impl->n; ++i) {
    impl->p_pows[i] = pk;
    pk *= p;
  }
  impl->order = pk;
  return impl;
}

bool fits_bits(std::uint64_t p, unsigned n, unsigned max_bits, std::uint64_t* order) {
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << std::min(max_bits, 62u);
  for (unsigned i = 0; i < n; ++i) {
    acc *= p;
    if (acc > cap) return false;
  }
  *order = static_cast<std::uint64_t>(acc);
  return true;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FiniteField FiniteField::make(std::uint64_t p, unsigned n, unsigned max_bits) {
  if (!num::is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw InvalidArgument("characteristic " + std::to_string(p) + " too large");
  if (n == 0) throw InvalidArgument("extension degree must be positive");
  std::uint64_t order = 0;
  if (!fits_bits(p, n, max_bits, &order)) {
    throw InvalidArgument("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds the 2^" +
                          std::to_string(max_bits) + " field size bound");
  }

  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const Impl>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({p, n});
    if (it != cache.end()) return FiniteField(it->second);
  }

  std::vector<Value> modulus;
  if (n == 1) {
    modulus = {0, 1};
  } else {
    modulus = smallest_irreducible(make(p, 1, 62), n).coeffs();
  }
  auto impl = new_impl(p, std::move(modulus));
  impl->build_tables();

  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(std::make_pair(p, n), std::move(impl));
  return FiniteField(it->second);
}

FiniteField FiniteField::of_order(std::uint64_t q, unsigned max_bits) {
  auto [p, k] = num::prime_power(q);
  if (p == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make(p, k, max_bits);
}

FiniteField FiniteField::with_modulus(std::uint64_t p, std::vector<Value> modulus) {
  if (!num::is_prime(p) || p >= (1ULL << 31)) throw InvalidArgument("characteristic is not a usable prime");
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidArgument("modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  std::uint64_t order = 0;
  if (!fits_bits(p, static_cast<unsigned>(modulus.size() - 1), 62, &order))
    throw InvalidArgument("field too large");
  if (!is_irreducible(Poly(make(p, 1, 62), modulus))) throw InvalidArgument("modulus is not irreducible");
  auto impl = new_impl(p, std::move(modulus));
  impl->build_tables();
  return FiniteField(std::move(impl));
}

std::uint64_t FiniteField::characteristic() const { return impl_->p; }
unsigned FiniteField::degree() const { return impl_->n; }
std::uint64_t FiniteField::order() const { return impl_->order; }
const std::vector<Value>& FiniteField::modulus() const { return impl_->modulus; }

std::string FiniteField::descriptor() const {
  if (impl_->n == 1) return "GF(" + std::to_string(impl_->p) + ")";
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->n) + ")";
}

Value FiniteField::from_int(std::int64_t k) const {
  auto p = static_cast<std::int64_t>(impl_->p);
  return static_cast<Value>(((k % p) + p) % p);
}

Value FiniteField::add(Value a, Value b) const { return impl_->add(a, b); }
Value FiniteField::sub(Value a, Value b) const { return impl_->add(a, impl_->neg(b)); }
Value FiniteField::neg(Value a) const { return impl_->neg(a); }
Value FiniteField::mul(Value a, Value b) const { return impl_->mul(a, b); }
Value FiniteField::pow(Value a, std::uint64_t e) const { return impl_->pow(a, e); }

Value FiniteField::inv(Value a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + descriptor());
  if (impl_->has_tables()) {
    std::uint32_t l = impl_->log_table[a];
    return impl_->exp_table[l == 0 ? 0 : impl_->order - 1 - l];
  }
  return impl_->pow(a, impl_->order - 2);
}

Value FiniteField::frobenius(Value a, unsigned k) const {
  for (unsigned i = 0; i < k; ++i) a = impl_->pow(a, impl_->p);
  return a;
}

bool FiniteField::is_square(Value a) const {
  if (a == 0 || impl_->p == 2) return true;
  return impl_->pow(a, (impl_->order - 1) / 2) == 1;
}

std::vector<Value> FiniteField::digits(Value a) const {
  std::vector<Value> out(impl_->n);
  impl_->to_digits(a, out.data());
  return out;
}

Value FiniteField::from_digits(std::span<const Value> digits) const {
  Value v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (i >= impl_->n) {
      if (digits[i] != 0) throw InvalidArgument("residue has too many digits");
      continue;
    }
    v = v * impl_->p + digits[i] % impl_->p;
  }
  return v;
}

unsigned FiniteField::element_degree(Value a) const {
  unsigned d = 1;
  Value x = frobenius(a);
  while (x != a) {
    x = frobenius(x);
    ++d;
  }
  return d;
}

Value FiniteField::primitive_element() const {
  return impl_->has_tables() ? impl_->primitive : impl_->compute_primitive();
}

Element FiniteField::element(Value v) const { return Element(*this, v); }

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
}

// ---------------------------------------------------------------- Element

Element::Element(FiniteField field, Value value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) throw InvalidArgument("value " + std::to_string(value) + " not in " + field_.descriptor());
}

namespace {
void check_same(const FiniteField& a, const FiniteField& b) {
  if (!(a == b)) throw InvalidArgument("elements of different fields: " + a.descriptor() + " vs " + b.descriptor());
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}
Element operator-(const Element& a, const Element& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}
Element operator*(const Element& a, const Element& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}
Element operator/(const Element& a, const Element& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

// ---------------------------------------------------------------- Poly

Poly::Poly(FiniteField field, std::vector<Value> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_.contains(c)) throw InvalidArgument("coefficient " + std::to_string(c) + " not in " + field_.descriptor());
  }
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const FiniteField& field, std::size_t degree, Value coeff) {
  std::vector<Value> c(degree + 1, 0);
  c[degree] = coeff;
  return Poly(field, std::move(c));
}

Poly Poly::constant(const FiniteField& field, Value c) { return Poly(field, std::vector<Value>{c}); }

Poly Poly::parse(const FiniteField& field, std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty polynomial text");
  std::vector<Value> coeffs;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    bool negative = !token.empty() && token[0] == '-';
    auto digits = negative ? token.substr(1) : token;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw InvalidArgument("malformed polynomial coefficient '" + std::string(token) + "' in '" + std::string(text) + "'");
    if (negative) {
      coeffs.push_back(field.neg(field.from_int(static_cast<std::int64_t>(v % field.characteristic()))));
    } else {
      if (!field.contains(v))
        throw InvalidArgument("coefficient " + std::to_string(v) + " is not an element of " + field.descriptor());
      coeffs.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(field, std::move(coeffs));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(field_.inv(leading()));
}

Poly Poly::scaled(Value c) const {
  std::vector<Value> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Value> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_.mul(coeffs_[i], field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
  }
  return Poly(field_, std::move(out));
}

Value Poly::evaluate(Value x) const {
  Value acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same(a.field_, b.field_);
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same(a.field_, b.field_);
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& F = a.field_;
  std::vector<Value> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(F, std::move(out));
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs_ < b.coeffs_;
}

DivMod divmod(const Poly& a, const Poly& b) {
  check_same(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = a.field();
  std::vector<Value> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Poly(F), a};
  std::vector<Value> quot(rem.size() - db, 0);
  const Value lead_inv = F.inv(bc.back());
  for (std::size_t i = rem.size(); i-- > db;) {
    Value c = rem[i];
    if (c == 0) continue;
    Value q = F.mul(c, lead_inv);
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = F.sub(rem[i - db + j], F.mul(q, bc[j]));
    }
  }
  rem.resize(db);
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), 1) % modulus;
  Poly b = base % modulus;
  while (e) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e) b = (b * b) % modulus;
  }
  return result;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

void require_nonconstant(const Poly& f, const char* what) {
  if (f.is_zero()) throw InvalidArgument(std::string(what) + ": zero polynomial");
  if (f.degree() == 0) throw InvalidArgument(std::string(what) + ": constant polynomial");
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const auto& F = f.field();
  const std::uint64_t p = F.characteristic();
  std::vector<Value> out(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    out[i / p] = F.frobenius(f.coeffs()[i], F.degree() - 1);
  }
  return Poly(F, std::move(out));
}

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  std::vector<Factor> out;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<unsigned>(f.field().characteristic());
    for (auto& sub : squarefree_decomposition(pth_root(c).monic())) {
      out.push_back({sub.poly, sub.multiplicity * p});
    }
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const auto& F = f.field();
  const Poly X = Poly::x(F);
  Poly rest = f;
  Poly h = X % rest;
  unsigned d = 1;
  while (rest.degree() >= 2 * static_cast<int>(d)) {
    h = powmod(h, F.order(), rest);
    Poly g = gcd(h - X, rest);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
    ++d;
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
  return out;
}

void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g.monic());
    return;
  }
  const auto& F = g.field();
  const std::uint64_t Q = F.order();
  std::uniform_int_distribution<Value> coeff(0, Q - 1);
  while (true) {
    std::vector<Value> rc(static_cast<std::size_t>(g.degree()));
    for (auto& c : rc) c = coeff(rng);
    Poly r(F, std::move(rc));
    if (r.degree() <= 0) continue;
    Poly s(F);
    if (F.characteristic() == 2) {
      // Absolute trace r + r^2 + ... + r^(2^(kd-1)) splits g over characteristic 2.
      Poly t = r;
      s = r;
      const unsigned steps = F.degree() * d;
      for (unsigned i = 1; i < steps; ++i) {
        t = (t * t) % g;
        s = s + t;
      }
    } else {
      // r^((Q^d - 1)/2) = (r^(1 + Q + ... + Q^(d-1)))^((Q - 1)/2)
      Poly t = r;
      Poly acc = r;
      for (unsigned i = 1; i < d; ++i) {
        t = powmod(t, Q, g);
        acc = (acc * t) % g;
      }
      s = powmod(acc, (Q - 1) / 2, g) - Poly::constant(F, 1);
    }
    Poly h = gcd(s, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  require_nonconstant(f, "is_irreducible");
  const Poly g = f.monic();
  const auto d = static_cast<unsigned>(g.degree());
  if (d == 1) return true;
  const auto& F = g.field();
  const Poly X = Poly::x(F);
  // frob[k] = X^(Q^k) mod g
  std::vector<Poly> frob{X % g};
  for (unsigned k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), F.order(), g));
  if (!(frob[d] == X % g)) return false;
  for (auto r : prime_factors(d)) {
    if (gcd(frob[d / r] - X, g).degree() != 0) return false;
  }
  return true;
}

std::vector<Factor> factor(const Poly& f, const FactorOptions& options) {
  if (f.is_zero()) throw InvalidArgument("factor: zero polynomial");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(options.seed);
  std::map<std::vector<Value>, unsigned> merged;
  for (const auto& part : squarefree_decomposition(f.monic())) {
    for (const auto& [g, d] : distinct_degree(part.poly)) {
      std::vector<Poly> irreducibles;
      equal_degree(g, d, rng, irreducibles);
      for (auto& h : irreducibles) merged[h.coeffs()] += part.multiplicity;
    }
  }
  for (auto& [coeffs, mult] : merged) out.push_back({Poly(f.field(), coeffs), mult});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

std::vector<Value> roots(const Poly& f, const FactorOptions& options) {
  require_nonconstant(f, "roots");
  const auto& F = f.field();
  const Poly g = f.monic();
  const Poly X = Poly::x(F);
  std::vector<Value> out;
  if (g.coeff(0) == 0) out.push_back(0);
  Poly linear_part = gcd(powmod(X, F.order(), g) - X, g);
  if (linear_part.degree() <= 0) return out;
  std::mt19937_64 rng(options.seed);
  std::vector<Poly> linears;
  equal_degree(linear_part, 1, rng, linears);
  for (const auto& l : linears) {
    Value r = F.neg(l.coeff(0));
    if (r != 0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly smallest_irreducible(const FiniteField& field, unsigned degree) {
  if (degree == 0) throw InvalidArgument("irreducible polynomials have degree >= 1");
  if (degree == 1) return Poly::x(field);
  const Value q = field.order();
  std::vector<Value> c(degree + 1, 0);
  c[degree] = 1;
  c[0] = 1;  // constant term 0 means X divides it
  while (true) {
    Poly candidate(field, c);
    if (is_irreducible(candidate)) return candidate;
    // Lexicographic successor of (c_0, ..., c_{degree-1}); c_{degree-1} varies fastest.
    std::size_t i = degree;
    while (i-- > 0) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
    if (c[0] == 0) throw ConstructionError("no irreducible polynomial found");
  }
}

// ---------------------------------------------------------------- embeddings

bool is_subfield(const FiniteField& sub, const FiniteField& super) {
  return sub.characteristic() == super.characteristic() && super.degree() % sub.degree() == 0;
}

Embedding::Embedding(FiniteField sub, FiniteField super, Value generator_image)
    : sub_(std::move(sub)), super_(std::move(super)), generator_image_(generator_image) {
  if (!is_subfield(sub_, super_))
    throw InvalidArgument(sub_.descriptor() + " is not a subfield of " + super_.descriptor());
  if (!super_.contains(generator_image_)) throw InvalidArgument("generator image outside the target field");
  Poly mod(super_, sub_.modulus());
  if (mod.evaluate(generator_image_) != 0)
    throw InvalidArgument("generator image is not a root of the modulus of " + sub_.descriptor());

  const std::uint64_t p = super_.characteristic();
  const unsigned m = sub_.degree();
  const unsigned n = super_.degree();
  Value power = 1;
  for (unsigned j = 0; j < m; ++j) {
    basis_images_.push_back(super_.digits(power));
    power = super_.mul(power, generator_image_);
  }

  // Pick m rows of the n x m image matrix forming an invertible block.
  std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
  for (unsigned r = 0; r < n; ++r)
    for (unsigned j = 0; j < m; ++j) rows[r][j] = basis_images_[j][r];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto reduced = rows;
  for (unsigned col = 0; col < m; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (reduced[order[r]][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw ConstructionError("embedding images are linearly dependent");
    std::swap(order[col], order[pivot]);
    const auto& prow = reduced[order[col]];
    const Value pinv = inv_mod_prime(prow[col], p);
    for (std::size_t r = col + 1; r < n; ++r) {
      auto& row = reduced[order[r]];
      if (row[col] == 0) continue;
      Value f = mulmod64(row[col], pinv, p);
      for (unsigned j = col; j < m; ++j) row[j] = (row[j] + p - mulmod64(f, prow[j], p)) % p;
    }
  }
  pivot_rows_.assign(order.begin(), order.begin() + m);

  // Invert the selected m x m block by Gauss-Jordan.
  std::vector<std::vector<Value>> a(m, std::vector<Value>(2 * m, 0));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) a[i][j] = rows[pivot_rows_[i]][j];
    a[i][m + i] = 1;
  }
  for (unsigned col = 0; col < m; ++col) {
    unsigned piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw ConstructionError("singular embedding block");
    std::swap(a[col], a[piv]);
    const Value pinv = inv_mod_prime(a[col][col], p);
    for (auto& v : a[col]) v = mulmod64(v, pinv, p);
    for (unsigned r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Value f = a[r][col];
      for (unsigned j = 0; j < 2 * m; ++j) a[r][j] = (a[r][j] + p - mulmod64(f, a[col][j], p)) % p;
    }
  }
  left_inverse_.assign(m, std::vector<Value>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) left_inverse_[i][j] = a[i][m + j];
}

Embedding Embedding::identity(const FiniteField& field) {
  return Embedding(field, field, field.degree() == 1 ? 0 : field.characteristic());
}

Embedding Embedding::canonical(const FiniteField& sub, const FiniteField& super) {
  if (!is_subfield(sub, super))
    throw InvalidArgument(sub.descriptor() + " is not a subfield of " + super.descriptor());
  using Key = std::tuple<std::uint64_t, std::vector<Value>, std::vector<Value>>;
  static std::map<Key, Value> cache;
  static std::mutex mutex;
  Key key{sub.characteristic(), sub.modulus(), super.modulus()};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return Embedding(sub, super, it->second);
  }
  auto rs = roots(Poly(super, sub.modulus()));
  if (rs.empty()) throw ConstructionError("modulus of " + sub.descriptor() + " has no root in " + super.descriptor());
  std::lock_guard lock(mutex);
  cache.emplace(key, rs.front());
  return Embedding(sub, super, rs.front());
}

Value Embedding::map(Value x) const {
  const std::uint64_t p = super_.characteristic();
  const auto d = sub_.digits(x);
  std::vector<Value> acc(super_.degree(), 0);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] == 0) continue;
    for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = (acc[r] + mulmod64(d[j], basis_images_[j][r], p)) % p;
  }
  return super_.from_digits(acc);
}

std::optional<Value> Embedding::preimage(Value y) const {
  const std::uint64_t p = super_.characteristic();
  const auto d = super_.digits(y);
  const unsigned m = sub_.degree();
  std::vector<Value> c(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t s = 0;
    for (unsigned j = 0; j < m; ++j) s = (s + mulmod64(left_inverse_[i][j], d[pivot_rows_[j]], p)) % p;
    c[i] = s;
  }
  Value x = sub_.from_digits(c);
  if (map(x) != y) return std::nullopt;
  return x;
}

Embedding Embedding::after(const Embedding& inner) const {
  if (!(inner.super() == sub_)) throw InvalidArgument("cannot compose embeddings: field mismatch");
  return Embedding(inner.sub(), super_, map(inner.generator_image()));
}

// ---------------------------------------------------------------- norm and trace

namespace {

Value norm_with(const Embedding& emb, Value x) {
  const auto& L = emb.super();
  const auto& K = emb.sub();
  const unsigned d = L.degree() / K.degree();
  Value acc = x;
  Value conj = x;
  for (unsigned i = 1; i < d; ++i) {
    conj = L.frobenius(conj, K.degree());
    acc = L.mul(acc, conj);
  }
  auto back = emb.preimage(acc);
  if (!back) throw ConstructionError("norm left the subfield");
  return *back;
}

}  // namespace

Value norm(const FiniteField& L, const FiniteField& K, Value x) {
  if (!is_subfield(K, L)) {
    throw InvalidArgument("norm: " + K.descriptor() + " is not a subfield of " + L.descriptor() +
                          " (degree does not divide)");
  }
  return norm_with(Embedding::canonical(K, L), x);
}

std::vector<Value> norm_image(const FiniteField& L, const FiniteField& K, unsigned max_bits) {
  if (!is_subfield(K, L)) throw InvalidArgument("norm_image: " + K.descriptor() + " is not a subfield of " + L.descriptor());
  if (L.order() > (1ULL << max_bits))
    throw InvalidArgument("norm_image: " + L.descriptor() + " exceeds the 2^" + std::to_string(max_bits) + " bound");
  const auto emb = Embedding::canonical(K, L);
  std::vector<bool> hit(K.order(), false);
  for (Value x = 1; x < L.order(); ++x) hit[norm_with(emb, x)] = true;
  std::vector<Value> out;
  for (Value v = 0; v < K.order(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

Value trace(const FiniteField& L, const FiniteField& K, Value x) {
  if (!is_subfield(K, L)) throw InvalidArgument("trace: " + K.descriptor() + " is not a subfield of " + L.descriptor());
  const auto emb = Embedding::canonical(K, L);
  const unsigned d = L.degree() / K.degree();
  Value acc = x;
  Value conj = x;
  for (unsigned i = 1; i < d; ++i) {
    conj = L.frobenius(conj, K.degree());
    acc = L.add(acc, conj);
  }
  auto back = emb.preimage(acc);
  if (!back) throw ConstructionError("trace left the subfield");
  return *back;
}

Poly minimal_polynomial(const Embedding& base, Value x) {
  const auto& F = base.super();
  const unsigned k = base.sub().degree();
  Poly acc = Poly::constant(F, 1);
  Value conj = x;
  do {
    acc = acc * Poly(F, {F.neg(conj), 1});
    conj = F.frobenius(conj, k);
  } while (conj != x);
  std::vector<Value> out;
  for (auto c : acc.coeffs()) {
    auto back = base.preimage(c);
    if (!back) throw ConstructionError("minimal polynomial coefficient outside the base field");
    out.push_back(*back);
  }
  return Poly(base.sub(), std::move(out));
}

std::uint64_t degree_over(const FiniteField& field, Value x, std::uint64_t q) {
  auto [p, k] = num::prime_power(q);
  if (p != field.characteristic())
    throw InvalidArgument("characteristic mismatch: " + field.descriptor() + " vs GF(" + std::to_string(q) + ")");
  const std::uint64_t d0 = field.element_degree(x);
  return d0 / std::gcd(d0, static_cast<std::uint64_t>(k));
}

}  // namespace bw::gf
