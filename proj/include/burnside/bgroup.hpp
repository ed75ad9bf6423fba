#pragma once

#include <utility>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/lattice.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// β(G) = G/N for N normal maximal with m_{G,N} ≠ 0. N = 1 always qualifies,
// so the scan never fails; when several maximal N exist the first in
// canonical order is chosen and all quotients are asserted isomorphic.
struct BetaResult {
  int chosen_n;
  GroupTable beta;
  std::vector<std::pair<int, Rational>> all_nonzero;  // (normal index, m_{G,N})
  std::vector<int> maximal_nonzero;  // maximal under inclusion; first = chosen_n
};

// True iff m_{G,N} = 0 for every minimal non-trivial normal N (the fast
// path); is_b_group_full checks every non-trivial normal N including G.
// The two must agree on every group.
bool is_b_group(const SubgroupLattice& lattice);
bool is_b_group_full(const SubgroupLattice& lattice);

BetaResult beta(const SubgroupLattice& lattice);

// G/N on left cosets; the canonical representative of a coset is its least
// element index. Throws ValidationError when N is not a normal subgroup.
GroupTable quotient_group(const GroupTable& g, const Bitset& normal_members);

// Exact isomorphism decision by backtracking over generator images, pruned
// by element-order multisets, conjugacy-class sizes, and per-order cyclic
// subgroup counts.
bool are_isomorphic(const GroupTable& a, const GroupTable& b);

bool is_nilpotent(const GroupTable& g);  // lower central series reaches 1
bool is_solvable(const GroupTable& g);   // derived series reaches 1

// O_p(G): the largest normal p-subgroup, as a lattice index (may be trivial
// or all of G). Throws ValidationError when p is not prime.
int o_p_subgroup(const SubgroupLattice& lattice, long long p);

// True iff G / O_p(G) is cyclic.
bool is_cyclic_mod_p(const SubgroupLattice& lattice, long long p);

}  // namespace burnside
