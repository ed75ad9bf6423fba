#include "burnside/lattice.hpp"

#include <algorithm>
#include <utility>

#include "burnside/errors.hpp"

namespace burnside {

long long SubgroupLattice::mu(int i, int j) const {
  if (!incidence_ready)
    throw ValidationError("Möbius matrix not computed; call compute_incidence first");
  return mobius[i][j];
}

int SubgroupLattice::index_of(const Bitset& m) const {
  int i = find(m);
  if (i < 0) throw ValidationError("member set is not a subgroup of this lattice");
  return i;
}

int SubgroupLattice::find(const Bitset& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

int SubgroupLattice::intersect(int i, int j) const {
  return index_of(subgroups[i].members & subgroups[j].members);
}

int SubgroupLattice::join(int i, int j) const {
  if (leq(i, j)) return j;
  if (leq(j, i)) return i;
  return index_of(closure_of(subgroups[i].members | subgroups[j].members));
}

Bitset SubgroupLattice::closure_of(const Bitset& seed) const {
  return closure_in_group(group, seed);
}

Bitset closure_in_group(const GroupTable& g, const Bitset& seed) {
  if (seed.universe_size() != g.order())
    throw ValidationError("seed bitset universe does not match the group order");
  Bitset result = seed;
  result.set(g.identity());
  std::vector<int> elems = result.indices();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      int p = g.mul(elems[i], elems[j]);
      if (!result.test(p)) {
        result.set(p);
        elems.push_back(p);
      }
      int q = g.mul(elems[j], elems[i]);
      if (!result.test(q)) {
        result.set(q);
        elems.push_back(q);
      }
    }
  }
  return result;
}

Bitset product_set(const GroupTable& g, const Bitset& a, const Bitset& b) {
  Bitset result(g.order());
  for (int x : a.indices())
    for (int y : b.indices()) result.set(g.mul(x, y));
  return result;
}

bool is_closed_subgroup(const GroupTable& g, const Bitset& members) {
  if (!members.any()) return false;
  std::vector<int> elems = members.indices();
  for (int x : elems)
    for (int y : elems)
      if (!members.test(g.mul(x, y))) return false;
  return members.test(g.identity());
}

namespace {

std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> ord(g.order());
  for (int x = 0; x < g.order(); ++x) ord[x] = element_order(g, x);
  return ord;
}

bool subgroup_is_normal(const GroupTable& g, const Bitset& members) {
  std::vector<int> elems = members.indices();
  for (int x = 0; x < g.order(); ++x) {
    if (members.test(x)) continue;  // conjugation by members fixes the set
    for (int s : elems)
      if (!members.test(g.conjugate(x, s))) return false;
  }
  return true;
}

}  // namespace

SubgroupLattice enumerate_subgroups(GroupTable g) {
  const int n = g.order();

  SubgroupLattice lattice{std::move(g), {}, {}, {}, {}, false, {}};
  const GroupTable& group = lattice.group;

  std::vector<Bitset> sets;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  auto add = [&](Bitset s) {
    if (seen.emplace(s, static_cast<int>(sets.size())).second) {
      sets.push_back(std::move(s));
      if (static_cast<int>(sets.size()) > kMaxSubgroups)
        throw SizeLimitError("subgroup count exceeds cap " + std::to_string(kMaxSubgroups));
    }
  };

  // Cyclic seeds.
  for (int x = 0; x < n; ++x) {
    Bitset s(n);
    int p = x;
    s.set(group.identity());
    while (p != group.identity()) {
      s.set(p);
      p = group.mul(p, x);
    }
    add(std::move(s));
  }

  // Close under pairwise join; new sets extend the loop until stable.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].subset_of(sets[i]) || sets[i].subset_of(sets[j])) continue;
      Bitset u = sets[i] | sets[j];
      // Closure under multiplication, growing a worklist.
      std::vector<int> elems = u.indices();
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
          int p = group.mul(elems[a], elems[b]);
          if (!u.test(p)) {
            u.set(p);
            elems.push_back(p);
          }
          int q = group.mul(elems[b], elems[a]);
          if (!u.test(q)) {
            u.set(q);
            elems.push_back(q);
          }
        }
      add(std::move(u));
    }
  }

  std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  std::vector<int> ord = element_orders(group);
  lattice.subgroups.reserve(sets.size());
  for (auto& s : sets) {
    Subgroup sub;
    sub.order = s.count();
    sub.normal = subgroup_is_normal(group, s);
    sub.cyclic = false;
    for (int x : s.indices())
      if (ord[x] == sub.order) {
        sub.cyclic = true;
        break;
      }
    sub.members = std::move(s);
    lattice.subgroups.push_back(std::move(sub));
  }
  for (int i = 0; i < lattice.size(); ++i)
    lattice.index.emplace(lattice.subgroups[i].members, i);
  return lattice;
}

void compute_incidence(SubgroupLattice& lattice) {
  const int k = lattice.size();
  lattice.up.assign(k, Bitset(k));
  lattice.down.assign(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      if (lattice.leq(i, j)) {
        lattice.up[i].set(j);
        lattice.down[j].set(i);
      }

  // μ(i,i) = 1 and, for i < j with i ≤ j in the lattice,
  // μ(i,j) = −Σ_{i ≤ k < j} μ(i,k): back-substitution on the unitriangular
  // zeta matrix in sorted order (a linear extension of inclusion).
  lattice.mobius.assign(k, std::vector<long long>(k, 0));
  for (int i = 0; i < k; ++i) {
    lattice.mobius[i][i] = 1;
    for (int j : lattice.up[i].indices()) {
      if (j == i) continue;
      long long acc = 0;
      for (int m : (lattice.up[i] & lattice.down[j]).indices())
        if (m != j) acc += lattice.mobius[i][m];
      lattice.mobius[i][j] = -acc;
    }
  }
  lattice.incidence_ready = true;
}

SubgroupLattice build_lattice(GroupTable g) {
  SubgroupLattice lattice = enumerate_subgroups(std::move(g));
  compute_incidence(lattice);
  return lattice;
}

SubgroupLattice lattice_from_members(GroupTable g, const std::vector<Bitset>& members) {
  const int n = g.order();
  SubgroupLattice lattice{std::move(g), {}, {}, {}, {}, false, {}};
  const GroupTable& group = lattice.group;

  std::vector<Bitset> sets = members;
  for (const Bitset& s : sets) {
    if (s.universe_size() != n)
      throw ValidationError("cached subgroup bitset has wrong universe size");
    if (!is_closed_subgroup(group, s))
      throw ValidationError("cached member set is not a subgroup");
  }
  std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (sets[i] == sets[i - 1]) throw ValidationError("duplicate subgroup in cache");

  std::unordered_map<Bitset, int, BitsetHash> pos;
  for (std::size_t i = 0; i < sets.size(); ++i)
    pos.emplace(sets[i], static_cast<int>(i));

  if (sets.empty() || sets.front().count() != 1 || sets.back().count() != n)
    throw ValidationError("cached lattice lacks the trivial subgroup or the full group");
  // Every subgroup is a join of cyclic subgroups, so seed presence plus the
  // pairwise join closure below makes the completeness check airtight.
  for (int x = 0; x < n; ++x)
    if (!pos.count(closure_in_group(group, Bitset::single(n, x))))
      throw ValidationError("cached lattice is missing a cyclic subgroup");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (!pos.count(sets[i] & sets[j]))
        throw ValidationError("cached lattice not closed under intersection");
      if (sets[j].subset_of(sets[i])) continue;
      Bitset u = sets[i] | sets[j];
      std::vector<int> elems = u.indices();
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
          int p = group.mul(elems[a], elems[b]);
          if (!u.test(p)) {
            u.set(p);
            elems.push_back(p);
          }
          int q = group.mul(elems[b], elems[a]);
          if (!u.test(q)) {
            u.set(q);
            elems.push_back(q);
          }
        }
      if (!pos.count(u)) throw ValidationError("cached lattice not closed under join");
    }

  std::vector<int> ord = element_orders(group);
  lattice.subgroups.reserve(sets.size());
  for (auto& s : sets) {
    Subgroup sub;
    sub.order = s.count();
    sub.normal = subgroup_is_normal(group, s);
    sub.cyclic = false;
    for (int x : s.indices())
      if (ord[x] == sub.order) {
        sub.cyclic = true;
        break;
      }
    sub.members = std::move(s);
    lattice.subgroups.push_back(std::move(sub));
  }
  for (int i = 0; i < lattice.size(); ++i)
    lattice.index.emplace(lattice.subgroups[i].members, i);
  compute_incidence(lattice);
  return lattice;
}

std::vector<int> normal_indices(const SubgroupLattice& lattice) {
  std::vector<int> result;
  for (int i = 0; i < lattice.size(); ++i)
    if (lattice.is_normal(i)) result.push_back(i);
  return result;
}

std::vector<int> minimal_normal_indices(const SubgroupLattice& lattice) {
  std::vector<int> nontrivial;
  for (int i = 1; i < lattice.size(); ++i)
    if (lattice.is_normal(i)) nontrivial.push_back(i);
  std::vector<int> result;
  for (int i : nontrivial) {
    bool minimal = true;
    for (int j : nontrivial)
      if (j != i && lattice.leq(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(i);
  }
  return result;
}

std::vector<int> maximal_indices(const SubgroupLattice& lattice) {
  const int full = lattice.full_index();
  std::vector<int> result;
  for (int i = 0; i < full; ++i) {
    bool maximal = true;
    for (int j = i + 1; j < full && maximal; ++j)
      maximal = !(j != i && lattice.leq(i, j));
    if (maximal) result.push_back(i);
  }
  return result;
}

std::vector<int> maximal_indices_containing(const SubgroupLattice& lattice, int n_index) {
  if (n_index == lattice.full_index())
    throw ValidationError("maximal subgroups containing N require N proper");
  std::vector<int> result;
  for (int m : maximal_indices(lattice))
    if (lattice.leq(n_index, m)) result.push_back(m);
  return result;
}

std::vector<int> cyclic_indices(const SubgroupLattice& lattice) {
  std::vector<int> result;
  for (int i = 0; i < lattice.size(); ++i)
    if (lattice.is_cyclic(i)) result.push_back(i);
  return result;
}

int normal_order_position(const SubgroupLattice& lattice, int n_index) {
  if (!lattice.is_normal(n_index))
    throw ValidationError("subgroup is not normal");
  int position = 1;  // 1-based among normal subgroups of the same order
  for (int i = 0; i < n_index; ++i)
    if (lattice.is_normal(i) && lattice.order(i) == lattice.order(n_index)) ++position;
  return position;
}

}  // namespace burnside
