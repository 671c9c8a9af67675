#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace bw {

struct RationalsDesc {
  friend bool operator==(const RationalsDesc&, const RationalsDesc&) = default;
};

// GF(p^n); GF(q) with a prime power q is accepted on input.
struct FiniteFieldDesc {
  std::uint64_t p;
  unsigned n;
  std::uint64_t order() const;
  friend bool operator==(const FiniteFieldDesc&, const FiniteFieldDesc&) = default;
};

// Union of GF(q^n) over n coprime to the prime `p`.
struct ProcyclicDesc {
  std::uint64_t q;
  std::uint64_t p;
  friend bool operator==(const ProcyclicDesc&, const ProcyclicDesc&) = default;
};

// Real closed field, modeled by its square classes {+1, -1}.
struct RealClosedDesc {
  friend bool operator==(const RealClosedDesc&, const RealClosedDesc&) = default;
};

using FieldDescriptor = std::variant<RationalsDesc, FiniteFieldDesc, ProcyclicDesc, RealClosedDesc>;

// Grammar: Q | GF(p) | GF(p^n) | GF(q) | PC(q;p) | RC. Anything else throws InvalidArgument.
FieldDescriptor parse_field_descriptor(std::string_view text);

// Canonical text: Q, GF(p), GF(p^n), PC(q;p), RC.
std::string to_string(const FieldDescriptor& desc);

}  // namespace bw
