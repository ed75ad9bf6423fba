#pragma once

#include <vector>

#include "burnside/bitset.hpp"
#include "burnside/lattice.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// The poset 𝔗_C(G,H) = {X : C ≤ X ⪇ G, X ≰ H}, ordered by strict inclusion.
// `elements` are lattice indices in canonical order; strict_order[i] holds j
// (as poset-local indices) iff elements[i] ⊊ elements[j].
struct TPoset {
  int c_index = -1;
  int h_index = -1;
  std::vector<int> elements;
  std::vector<Bitset> strict_order;

  int size() const { return static_cast<int>(elements.size()); }
};

// Chain counts of the order complex: chain_counts[i] = number of strictly
// increasing chains of i+1 elements (non-degenerate i-simplices), with
// trailing zero levels dropped. chi = Σ (−1)^i chain_counts[i] and
// chi_tilde = chi − 1; the empty poset gives chi = 0, chi_tilde = −1.
struct EulerSummary {
  std::vector<Int> chain_counts;
  Int chi = 0;
  Int chi_tilde = -1;
};

// One cyclic subgroup's contribution: phi = φ(|C|), chi_tilde = χ̃(𝔗_C(G,H)),
// signed_contribution = sign·chi_tilde·phi where the caller's context fixes
// sign = (−1)^{|σ|} (or +1 outside any inclusion–exclusion).
struct CyclicTerm {
  int c_index = -1;
  long long phi = 0;
  Int chi_tilde = 0;
  Int signed_contribution = 0;
};

// Requires C cyclic, C ≤ H, and H proper; throws ValidationError otherwise.
TPoset build_t_poset(const SubgroupLattice& lattice, int c_index, int h_index);

// Exact chain counting by dynamic programming over the comparability DAG.
EulerSummary count_chains(const TPoset& poset);

// True iff some element is comparable to every other (a cone point), which
// forces chi_tilde = 0. Sufficient condition only.
bool is_cone(const TPoset& poset);

// For every cyclic C ≤ H (including the trivial subgroup) the term with
// χ̃(𝔗_C(G,H)) and φ(|C|), sign +1. Σ χ̃·φ equals Σ_{X≤H} |X|μ(X,G).
// Throws ValidationError when H = G.
std::vector<CyclicTerm> chi_tilde_for_all_cyclic(const SubgroupLattice& lattice,
                                                 int h_index);

}  // namespace burnside
