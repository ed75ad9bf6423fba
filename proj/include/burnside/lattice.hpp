#pragma once

#include <unordered_map>
#include <vector>

#include "burnside/bitset.hpp"
#include "burnside/group.hpp"

namespace burnside {

// Guards the dense Möbius matrix and the quadratic join closure.
inline constexpr int kMaxSubgroups = 4000;

struct Subgroup {
  Bitset members;  // element indices of the parent group
  int order = 0;   // popcount of members
  bool normal = false;
  bool cyclic = false;
};

// The complete subgroup lattice of a finite group.
//
// Subgroups are sorted by (order, then bitset numeric value), so index 0 is
// the trivial subgroup and the last index is the whole group, and the sort is
// a linear extension of inclusion: zeta is upper-triangular with unit
// diagonal. The Möbius matrix is its exact integer inverse, computed by
// back-substitution; mu(i,j) = 0 whenever subgroup i is not contained in
// subgroup j.
//
// A fully built lattice is immutable in practice and safe for shared
// concurrent reads.
struct SubgroupLattice {
  GroupTable group;
  std::vector<Subgroup> subgroups;
  std::vector<Bitset> up;    // up[i]: indices j with members(i) ⊆ members(j)
  std::vector<Bitset> down;  // down[j]: indices i with members(i) ⊆ members(j)
  std::vector<std::vector<long long>> mobius;
  bool incidence_ready = false;
  std::unordered_map<Bitset, int, BitsetHash> index;

  int size() const { return static_cast<int>(subgroups.size()); }
  int order(int i) const { return subgroups[i].order; }
  const Bitset& members(int i) const { return subgroups[i].members; }
  bool is_normal(int i) const { return subgroups[i].normal; }
  bool is_cyclic(int i) const { return subgroups[i].cyclic; }
  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  bool leq(int i, int j) const {
    return subgroups[i].members.subset_of(subgroups[j].members);
  }
  int zeta(int i, int j) const { return leq(i, j) ? 1 : 0; }

  // Möbius value; requires compute_incidence. Throws ValidationError if the
  // matrices are not built yet.
  long long mu(int i, int j) const;

  // Index of the subgroup with exactly these members; index_of throws
  // ValidationError when absent, find returns -1.
  int index_of(const Bitset& m) const;
  int find(const Bitset& m) const;

  int intersect(int i, int j) const;  // bitset AND; always present
  int join(int i, int j) const;       // closure of the union

  // Subgroup generated by the elements of seed (as a member bitset).
  Bitset closure_of(const Bitset& seed) const;
};

// Product set {a·b : a ∈ A, b ∈ B} as an element bitset (not always a
// subgroup; callers that need one must check).
Bitset product_set(const GroupTable& g, const Bitset& a, const Bitset& b);

// Subgroup generated by the elements of seed (identity always included).
Bitset closure_in_group(const GroupTable& g, const Bitset& seed);

// True iff members is non-empty and closed under multiplication (which, for
// a finite group, makes it a subgroup containing the identity).
bool is_closed_subgroup(const GroupTable& g, const Bitset& members);

// Enumerates every subgroup: seeds with all cyclic subgroups ⟨x⟩, then closes
// the set under pairwise join until stable. Result is sorted canonically with
// normal/cyclic flags set; incidence matrices are left unset.
// Throws SizeLimitError past kMaxSubgroups.
SubgroupLattice enumerate_subgroups(GroupTable g);

// Fills up/down inclusion rows and the Möbius matrix.
void compute_incidence(SubgroupLattice& lattice);

// enumerate_subgroups + compute_incidence.
SubgroupLattice build_lattice(GroupTable g);

// Rebuilds a lattice from externally supplied member sets (the cache path).
// Validates that every set is a closed subgroup, that the collection is
// duplicate-free and closed under intersection and join (i.e. genuinely the
// full lattice), sorts canonically, and computes flags and incidence.
SubgroupLattice lattice_from_members(GroupTable g, const std::vector<Bitset>& members);

// All normal subgroups, ascending by lattice index (includes 1 and G).
std::vector<int> normal_indices(const SubgroupLattice& lattice);

// Non-trivial normal subgroups minimal under inclusion.
std::vector<int> minimal_normal_indices(const SubgroupLattice& lattice);

// Maximal proper subgroups.
std::vector<int> maximal_indices(const SubgroupLattice& lattice);

// Maximal proper subgroups H with N ≤ H (non-strict: when N is itself
// maximal the list contains N). Throws ValidationError when N = G.
std::vector<int> maximal_indices_containing(const SubgroupLattice& lattice, int n_index);

// All cyclic subgroups, including the trivial one, ascending by index.
std::vector<int> cyclic_indices(const SubgroupLattice& lattice);

// Position of a normal subgroup among the normal subgroups of the same order
// in canonical order, starting at 1. This is the `index` of the CLI N-selector
// and of TSV rows. Throws ValidationError when the subgroup is not normal.
int normal_order_position(const SubgroupLattice& lattice, int n_index);

}  // namespace burnside
