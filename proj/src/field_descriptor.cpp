#include "brauer_workbench/field_descriptor.hpp"

#include <regex>

#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/exactnum.hpp"

namespace bw {

std::uint64_t FiniteFieldDesc::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= p;
  return q;
}

namespace {

std::uint64_t parse_u64(const std::string& s, std::string_view whole) {
  if (s.size() > 18) throw InvalidArgument("number too large in field descriptor '" + std::string(whole) + "'");
  return std::stoull(s);
}

}  // namespace

FieldDescriptor parse_field_descriptor(std::string_view text) {
  const std::string s(text);
  if (s == "Q") return RationalsDesc{};
  if (s == "RC") return RealClosedDesc{};

  static const std::regex gf(R"(GF\(([0-9]+)(?:\^([0-9]+))?\))");
  static const std::regex pc(R"(PC\(([0-9]+);([0-9]+)\))");
  std::smatch m;
  if (std::regex_match(s, m, gf)) {
    std::uint64_t base = parse_u64(m[1].str(), text);
    if (m[2].matched) {
      std::uint64_t n = parse_u64(m[2].str(), text);
      if (!num::is_prime(base)) throw InvalidArgument("field descriptor '" + s + "': " + m[1].str() + " is not prime");
      if (n == 0 || n > 62) throw InvalidArgument("field descriptor '" + s + "': bad extension degree");
      return FiniteFieldDesc{base, static_cast<unsigned>(n)};
    }
    auto [p, k] = num::prime_power(base);
    if (p == 0) throw InvalidArgument("field descriptor '" + s + "': " + m[1].str() + " is not a prime power");
    return FiniteFieldDesc{p, k};
  }
  if (std::regex_match(s, m, pc)) {
    std::uint64_t q = parse_u64(m[1].str(), text);
    std::uint64_t p = parse_u64(m[2].str(), text);
    if (num::prime_power(q).first == 0)
      throw InvalidArgument("field descriptor '" + s + "': " + m[1].str() + " is not a prime power");
    if (!num::is_prime(p)) throw InvalidArgument("field descriptor '" + s + "': " + m[2].str() + " is not prime");
    return ProcyclicDesc{q, p};
  }
  throw InvalidArgument("unknown field descriptor '" + s + "' (expected Q, GF(p), GF(p^n), PC(q;p) or RC)");
}

std::string to_string(const FieldDescriptor& desc) {
  struct Visitor {
    std::string operator()(const RationalsDesc&) const { return "Q"; }
    std::string operator()(const RealClosedDesc&) const { return "RC"; }
    std::string operator()(const FiniteFieldDesc& d) const {
      if (d.n == 1) return "GF(" + std::to_string(d.p) + ")";
      return "GF(" + std::to_string(d.p) + "^" + std::to_string(d.n) + ")";
    }
    std::string operator()(const ProcyclicDesc& d) const {
      return "PC(" + std::to_string(d.q) + ";" + std::to_string(d.p) + ")";
    }
  };
  return std::visit(Visitor{}, desc);
}

}  // namespace bw
