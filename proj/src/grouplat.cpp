#include "brauer_workbench/grouplat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "brauer_workbench/errors.hpp"

namespace bw::grouplat {

namespace {

using Table = std::vector<std::vector<std::size_t>>;
using Perm = std::vector<std::size_t>;

Subgroup bit(std::size_t i) { return Subgroup{1} << i; }

}  // namespace

FiniteGroup::FiniteGroup(std::string name, Table table) : name_(std::move(name)), table_(std::move(table)) {}

FiniteGroup FiniteGroup::from_table(std::string name, Table table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("group '" + name + "': empty Cayley table");
  if (n > kMaxOrder) throw InvalidArgument("group '" + name + "': order exceeds 64");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("group '" + name + "': Cayley table is not square");
    for (auto v : row)
      if (v >= n) throw InvalidArgument("group '" + name + "': table entry out of range");
  }
  FiniteGroup G(std::move(name), std::move(table));
  const auto& t = G.table_;
  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[c][x] == x && t[x][c] == x;
    if (ok) e = c;
  }
  if (!e) throw InvalidArgument("group '" + G.name_ + "': no identity element");
  G.identity_ = *e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw InvalidArgument("group '" + G.name_ + "': operation is not associative");
  G.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == *e && t[b][a] == *e) G.inverse_[a] = b;
    if (G.inverse_[a] == n) throw InvalidArgument("group '" + G.name_ + "': element without inverse");
  }
  return G;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, std::size_t degree, const std::vector<Perm>& generators) {
  if (degree == 0) throw InvalidArgument("group '" + name + "': permutation degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidArgument("group '" + name + "': generator has the wrong degree");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != i) throw InvalidArgument("group '" + name + "': generator is not a permutation");
  }
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
  };
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier)
      for (const auto& g : generators) {
        Perm c = compose(a, g);
        if (seen.insert(c).second) {
          if (seen.size() > kMaxOrder) throw InvalidArgument("group '" + name + "': order exceeds 64");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  Table t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return from_table(std::move(name), std::move(t));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

Subgroup FiniteGroup::whole() const { return order() == 64 ? ~Subgroup{0} : bit(order()) - 1; }

Subgroup FiniteGroup::closure(Subgroup generators) const {
  const auto gens = elements_of(generators);
  Subgroup h = bit(identity_);
  std::vector<std::size_t> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto a : frontier)
      for (auto g : gens) {
        const std::size_t c = mul(a, g);
        if (!(h & bit(c))) {
          h |= bit(c);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  return h;
}

std::vector<std::size_t> elements_of(Subgroup h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; h; ++i, h >>= 1)
    if (h & 1) out.push_back(i);
  return out;
}

std::size_t subgroup_order(Subgroup h) { return static_cast<std::size_t>(std::popcount(h)); }

SubgroupLattice subgroups(const FiniteGroup& G) {
  // Every subgroup is a join of cyclic subgroups, so joining with cyclic ones reaches a fixpoint.
  std::set<Subgroup> cyclic;
  for (std::size_t g = 0; g < G.order(); ++g) cyclic.insert(G.closure(bit(g)));
  std::set<Subgroup> all(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (auto h : frontier)
      for (auto c : cyclic) {
        if ((h & c) == c) continue;
        const Subgroup j = G.closure(h | c);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  SubgroupLattice L;
  L.subgroups.assign(all.begin(), all.end());
  std::sort(L.subgroups.begin(), L.subgroups.end(), [](Subgroup a, Subgroup b) {
    const auto oa = subgroup_order(a);
    const auto ob = subgroup_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  const std::size_t n = L.subgroups.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (L.subgroups[i] & L.subgroups[j]) == L.subgroups[i]) L.containment.emplace_back(i, j);
  const Subgroup whole = G.whole();
  for (std::size_t i = 0; i < n; ++i) {
    if (L.subgroups[i] == whole) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      const Subgroup k = L.subgroups[j];
      if (k != whole && k != L.subgroups[i] && (L.subgroups[i] & k) == L.subgroups[i]) maximal = false;
    }
    if (maximal) L.maximal.push_back(i);
  }
  return L;
}

bool is_m_group(const FiniteGroup& G) {
  if (G.order() == 1) throw InvalidArgument("is_m_group: the trivial group has no maximal subgroup");
  return subgroups(G).maximal.size() == 1;
}

CyclicCheck is_cyclic(const FiniteGroup& G) {
  for (std::size_t g = 0; g < G.order(); ++g)
    if (G.element_order(g) == G.order()) return {true, g};
  return {false, std::nullopt};
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0 || n > kMaxOrder) throw InvalidArgument("cyclic group order must be in [1, 64]");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table("C" + std::to_string(n), std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t n = A.order() * B.order();
  if (n > kMaxOrder) throw InvalidArgument("direct product exceeds order 64");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = A.mul(x / B.order(), y / B.order()) * B.order() + B.mul(x % B.order(), y % B.order());
  return FiniteGroup::from_table(A.name() + "x" + B.name(), std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3");
  Perm rot(n);
  Perm ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations("D" + std::to_string(n), n, {rot, ref});
}

FiniteGroup symmetric3() { return FiniteGroup::from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup alternating4() { return FiniteGroup::from_permutations("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

FiniteGroup quaternion8() {
  // i -> (1 2 3 4)(5 6 7 8), j -> (1 5 3 7)(2 8 4 6) in the regular representation.
  return FiniteGroup::from_permutations("Q8", 8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
}

}  // namespace bw::grouplat
