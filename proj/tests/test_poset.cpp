#include <algorithm>
#include <numeric>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/poset.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burnside;

namespace {

int index_of_order(const SubgroupLattice& lattice, int order) {
  for (int i = 0; i < lattice.size(); ++i)
    if (lattice.order(i) == order) return i;
  REQUIRE(false);
  return -1;
}

// Relabeled copy: element i of the permuted poset is element perm[i] of the
// original. Chain counts must be label-independent.
TPoset permuted(const TPoset& p, const std::vector<int>& perm) {
  const int k = p.size();
  std::vector<int> inv(k);
  for (int i = 0; i < k; ++i) inv[perm[i]] = i;
  TPoset out;
  out.c_index = p.c_index;
  out.h_index = p.h_index;
  out.elements.resize(k);
  out.strict_order.assign(k, Bitset(k));
  for (int i = 0; i < k; ++i) {
    out.elements[i] = p.elements[perm[i]];
    for (int j : p.strict_order[perm[i]].indices()) out.strict_order[i].set(inv[j]);
  }
  return out;
}

}  // namespace

TEST_CASE("empty poset: chi_tilde = -1") {
  // In C4 every proper subgroup containing C2 lies inside H = C2.
  SubgroupLattice c4 = build_lattice(build_group("cyclic:4"));
  int c2 = index_of_order(c4, 2);
  TPoset poset = build_t_poset(c4, c2, c2);
  CHECK(poset.size() == 0);
  EulerSummary summary = count_chains(poset);
  CHECK(summary.chain_counts.empty());
  CHECK(summary.chi == 0);
  CHECK(summary.chi_tilde == -1);
  CHECK_FALSE(is_cone(poset));
}

TEST_CASE("singleton poset: chi_tilde = 0") {
  // T_1(C6, C2) = {C3}.
  SubgroupLattice c6 = build_lattice(build_group("cyclic:6"));
  TPoset poset = build_t_poset(c6, c6.trivial_index(), index_of_order(c6, 2));
  REQUIRE(poset.size() == 1);
  CHECK(c6.order(poset.elements[0]) == 3);
  EulerSummary summary = count_chains(poset);
  CHECK(summary.chain_counts == std::vector<Int>{1});
  CHECK(summary.chi_tilde == 0);
  CHECK(is_cone(poset));
}

TEST_CASE("antichain of k points: chi_tilde = k-1") {
  // T_1(S3, A3) = the three reflection subgroups, pairwise incomparable.
  SubgroupLattice s3 = build_lattice(build_group("sym:3"));
  TPoset poset = build_t_poset(s3, s3.trivial_index(), index_of_order(s3, 3));
  REQUIRE(poset.size() == 3);
  EulerSummary summary = count_chains(poset);
  CHECK(summary.chain_counts == std::vector<Int>{3});
  CHECK(summary.chi_tilde == 2);
  CHECK_FALSE(is_cone(poset));

  // T_1(C2xC2, <a>) = the two other C2's.
  SubgroupLattice v4 = build_lattice(build_group("elab:2:2"));
  TPoset two = build_t_poset(v4, v4.trivial_index(), index_of_order(v4, 2));
  REQUIRE(two.size() == 2);
  CHECK(count_chains(two).chi_tilde == 1);
}

TEST_CASE("chain poset is a cone: chi_tilde = 0") {
  // T_1(C16, C2) = {C4 < C8}.
  SubgroupLattice c16 = build_lattice(build_group("cyclic:16"));
  TPoset poset = build_t_poset(c16, c16.trivial_index(), index_of_order(c16, 2));
  REQUIRE(poset.size() == 2);
  EulerSummary summary = count_chains(poset);
  CHECK(summary.chain_counts == std::vector<Int>{2, 1});
  CHECK(summary.chi == 1);
  CHECK(summary.chi_tilde == 0);
  CHECK(is_cone(poset));
}

TEST_CASE("chain counts match the DFS oracle") {
  struct Case {
    const char* spec;
    int c_order;
    int h_order;
  };
  for (const Case& c : {Case{"dihedral:8", 1, 4}, Case{"sym:4", 1, 12},
                        Case{"sym:4", 2, 8}, Case{"quaternion:8", 2, 4},
                        Case{"dihedral:12", 1, 6}, Case{"alt:4", 1, 4}}) {
    CAPTURE(c.spec);
    SubgroupLattice lattice = build_lattice(build_group(c.spec));
    // Try every (C, H) with the requested orders, C cyclic <= H proper.
    int tried = 0;
    for (int h = 0; h < lattice.size(); ++h) {
      if (lattice.order(h) != c.h_order || h == lattice.full_index()) continue;
      for (int cs : cyclic_indices(lattice)) {
        if (lattice.order(cs) != c.c_order || !lattice.leq(cs, h)) continue;
        TPoset poset = build_t_poset(lattice, cs, h);
        EulerSummary summary = count_chains(poset);
        CHECK(summary.chain_counts == oracle::chain_counts(poset));
        CHECK(summary.chi_tilde == oracle::chi_tilde(poset));
        ++tried;
      }
    }
    CHECK(tried > 0);
  }
}

TEST_CASE("chain counts are invariant under relabeling") {
  SubgroupLattice s4 = build_lattice(build_group("sym:4"));
  int a4 = index_of_order(s4, 12);
  TPoset poset = build_t_poset(s4, s4.trivial_index(), a4);
  REQUIRE(poset.size() > 3);
  EulerSummary original = count_chains(poset);

  std::vector<int> perm(poset.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  CHECK(count_chains(permuted(poset, perm)).chain_counts == original.chain_counts);

  std::rotate(perm.begin(), perm.begin() + 2, perm.end());
  CHECK(count_chains(permuted(poset, perm)).chain_counts == original.chain_counts);
}

TEST_CASE("poset construction preconditions") {
  SubgroupLattice d8 = build_lattice(build_group("dihedral:8"));
  int v4 = -1;
  for (int i = 0; i < d8.size(); ++i)
    if (d8.order(i) == 4 && !d8.is_cyclic(i)) v4 = i;
  REQUIRE(v4 >= 0);
  CHECK_THROWS_AS(build_t_poset(d8, v4, v4), ValidationError);  // C not cyclic
  CHECK_THROWS_AS(build_t_poset(d8, d8.trivial_index(), d8.full_index()),
                  ValidationError);  // H = G
  int r4 = -1;
  for (int i = 0; i < d8.size(); ++i)
    if (d8.order(i) == 4 && d8.is_cyclic(i)) r4 = i;
  int s2 = -1;
  for (int i = 0; i < d8.size(); ++i)
    if (d8.order(i) == 2 && !d8.leq(i, r4)) s2 = i;
  REQUIRE(s2 >= 0);
  CHECK_THROWS_AS(build_t_poset(d8, r4, s2), ValidationError);  // C not inside H
}

TEST_CASE("chi_tilde_for_all_cyclic covers every cyclic C <= H") {
  SubgroupLattice s4 = build_lattice(build_group("sym:4"));
  int d8 = -1;
  for (int i = 0; i < s4.size(); ++i)
    if (s4.order(i) == 8) d8 = i;
  REQUIRE(d8 >= 0);
  std::vector<CyclicTerm> terms = chi_tilde_for_all_cyclic(s4, d8);
  int expected = 0;
  for (int c : cyclic_indices(s4))
    if (s4.leq(c, d8)) ++expected;
  CHECK(static_cast<int>(terms.size()) == expected);
  for (const CyclicTerm& term : terms) {
    CHECK(term.phi == euler_phi(s4.order(term.c_index)));
    CHECK(term.signed_contribution == term.chi_tilde * term.phi);
  }
  CHECK_THROWS_AS(chi_tilde_for_all_cyclic(s4, s4.full_index()), ValidationError);
}
