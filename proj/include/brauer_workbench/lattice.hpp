#pragma once

// Towers of p-power extensions of K = PC(q;p) and bounded checks of the linear-lattice
// property. Every level lives in a finite ambient field GF(l^m) reached by adjoining the
// smallest root of the defining polynomial in the smallest extension where it has one.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer_workbench/finfield.hpp"

namespace bw::lattice {

struct TowerLevel {
  unsigned i = 0;
  std::string min_poly;      // over GF(q), "c0,c1,..."
  std::string ambient;       // field holding the generator, "GF(l^m)"
  std::string generator;     // element index in the ambient field
  std::uint64_t degree = 1;  // [K(generator) : K]
};

struct TowerReport {
  std::string kind;  // "artin-schreier", "kummer", "t7"
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::string base;  // "PC(q;p)"
  std::optional<std::string> alpha;  // the seed element, when the construction picks one
  unsigned ambient_cap_bits = gf::kDefaultMaxBits;
  std::vector<TowerLevel> levels;
};

struct TowerOptions {
  unsigned max_ambient_bits = gf::kDefaultMaxBits;
  gf::FactorOptions factor;
};

inline constexpr unsigned kMaxArtinSchreierDepth = 3;

// K = PC(p;p), alpha_0 = 1, alpha_{i+1} a root of T^p - T - alpha_i. Throws
// ConstructionError if some T^p - T - alpha_i does not stay irreducible over K.
TowerReport build_artin_schreier_tower(std::uint64_t p, unsigned depth, const TowerOptions& options = {});

// K = PC(q;p) with p | q - 1 (q = 1 mod 4 when p = 2); level i adjoins beta_i with
// beta_i^p = beta_{i-1}, beta_0 = alpha. alpha defaults to the smallest non-p-th power in GF(q)*.
TowerReport build_kummer_tower(std::uint64_t q, std::uint64_t p, unsigned depth, const TowerOptions& options = {},
                               std::optional<gf::Value> alpha = std::nullopt);

// K = PC(q;2) with q = 3 mod 4. Level 1 is alpha_0, the smallest element of GF(q^2) whose
// norm to GF(q) is a non-square; level n + 1 adjoins a square root of the level-n generator.
TowerReport build_t7_tower(std::uint64_t q, unsigned depth, const TowerOptions& options = {});

struct FourthPowerReport {
  std::uint64_t q = 0;
  bool all_fourth_powers = false;
  // (a in GF(q)*, smallest x in GF(q^2) with x^4 = a), element indices.
  std::vector<std::pair<gf::Value, gf::Value>> witnesses;
};

FourthPowerReport fourth_power_check(std::uint64_t q);

struct LatticeCheck {
  bool linear = false;
  // p^s for each s with p^s <= degree_bound, each matched to a level.
  std::vector<std::uint64_t> degrees_checked;
  std::string failure;
};

// For every s with p^s <= degree_bound, the unique extension of K of degree p^s must be one of
// the tower levels: a level whose minimal polynomial over GF(q) is irreducible of degree with
// p-part p^s. Level degrees must be p^i. Throws InvalidArgument on a malformed report.
LatticeCheck verify_linear_lattice(const TowerReport& report, std::uint64_t degree_bound);

}  // namespace bw::lattice
