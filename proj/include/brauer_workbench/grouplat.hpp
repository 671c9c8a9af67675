#pragma once

// Finite groups given by Cayley tables, their subgroup lattices, and the M-group test
// (a group with exactly one maximal proper subgroup).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bw::grouplat {

inline constexpr std::size_t kMaxOrder = 64;

using Subgroup = std::uint64_t;  // bit i set iff element i belongs to the subgroup

class FiniteGroup {
 public:
  // Validates closure, identity, associativity and inverses. Throws InvalidArgument.
  static FiniteGroup from_table(std::string name, std::vector<std::vector<std::size_t>> table);

  // Closure of permutations of {0, ..., degree-1}. Elements are indexed in lexicographic order of
  // their images, so the identity is element 0; (a*b)(x) = a(b(x)).
  static FiniteGroup from_permutations(std::string name, std::size_t degree,
                                       const std::vector<std::vector<std::size_t>>& generators);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  // Smallest subgroup containing the elements of `generators`.
  Subgroup closure(Subgroup generators) const;
  Subgroup whole() const;

 private:
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table);
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

struct SubgroupLattice {
  // Ordered by size, then by mask.
  std::vector<Subgroup> subgroups;
  // (i, j) with subgroups[i] a proper subgroup of subgroups[j].
  std::vector<std::pair<std::size_t, std::size_t>> containment;
  // Indices of the maximal proper subgroups.
  std::vector<std::size_t> maximal;
};

SubgroupLattice subgroups(const FiniteGroup& G);

std::vector<std::size_t> elements_of(Subgroup h);
std::size_t subgroup_order(Subgroup h);

// Throws InvalidArgument for the trivial group.
bool is_m_group(const FiniteGroup& G);

struct CyclicCheck {
  bool cyclic = false;
  std::optional<std::size_t> generator;  // smallest element of order |G|
};
CyclicCheck is_cyclic(const FiniteGroup& G);

// Fixture groups built from generators: C_n, C_m x C_n, dihedral D_n of order 2n, S_3, A_4, Q_8.
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup symmetric3();
FiniteGroup alternating4();
FiniteGroup quaternion8();

}  // namespace bw::grouplat
