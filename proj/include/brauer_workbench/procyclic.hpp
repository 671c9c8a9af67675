#pragma once

// Computable model of the perfect field K = PC(q;p) whose absolute Galois group is Z_p:
// the union of GF(q^n) over n coprime to p, inside a fixed algebraic closure of GF(q).
// K is never materialized. An element of the closure lives in some GF(q^m); it belongs
// to K iff gcd(m, p) = 1, and its degree over K is the p-part of m.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauer_workbench/field_descriptor.hpp"
#include "brauer_workbench/finfield.hpp"

namespace bw::procyclic {

class ProcyclicField {
 public:
  // Throws InvalidArgument unless q is a prime power and p is prime.
  ProcyclicField(std::uint64_t q, std::uint64_t p);

  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  // GF(q)
  const gf::FiniteField& base_field() const { return base_; }
  std::string descriptor() const;

 private:
  std::uint64_t q_;
  std::uint64_t p_;
  gf::FiniteField base_;
};

// m = p^s * t with gcd(t, p) = 1.
struct LevelSplit {
  std::uint64_t p_part;
  unsigned p_exponent;
  std::uint64_t coprime_part;
};
LevelSplit split_level(std::uint64_t m, std::uint64_t p);

// An element of the closure stored at its minimal level GF(q^m).
class ProElement {
 public:
  // Throws InvalidArgument on characteristic mismatch.
  static ProElement from(const ProcyclicField& K, const gf::Element& x);

  // Degree over GF(q).
  std::uint64_t level() const { return level_; }
  LevelSplit split() const { return split_; }
  // The element as a member of GF(q^level).
  const gf::Element& value() const { return value_; }

 private:
  ProElement(std::uint64_t level, LevelSplit split, gf::Element value)
      : level_(level), split_(split), value_(std::move(value)) {}
  std::uint64_t level_;
  LevelSplit split_;
  gf::Element value_;
};

bool member_of_K(const gf::Element& x, const ProcyclicField& K);
// [K(x):K], always a power of p.
std::uint64_t degree_over_K(const gf::Element& x, const ProcyclicField& K);

// Level of the compositum of the inputs: the lcm of their levels.
std::uint64_t compositum_level(std::span<const ProElement> elements);

struct AntiClosureReport {
  std::string field;
  bool is_trivial = false;
  std::uint64_t degree = 1;
  // "intersection" when K' = K because two minimal extensions meet in K; "proper" otherwise.
  std::string reason;
  // For a trivial anti-closure: two minimal extensions of coprime degree.
  std::vector<std::string> witnesses;
  // Minimal polynomial over the base of a generator of K'/K ("c0,c1,...").
  std::optional<std::string> generator_min_poly;
  // "i" for RC; otherwise absent.
  std::optional<std::string> generator;
};

// K in {GF(q), PC(q;p), RC}; Q throws InvalidArgument.
AntiClosureReport anticlosure(const FieldDescriptor& K);

// Degrees of the factors of f over K, ascending. f must be monic, squarefree and defined over
// GF(q). Each GF(q)-irreducible factor of degree p^s * t contributes t factors of degree p^s.
std::vector<std::uint64_t> factor_degrees_over_K(const gf::Poly& f, const ProcyclicField& K,
                                                 const gf::FactorOptions& options = {});

}  // namespace bw::procyclic
