#include "burnside/poset.hpp"

#include <utility>

#include "burnside/errors.hpp"

namespace burnside {

TPoset build_t_poset(const SubgroupLattice& lattice, int c_index, int h_index) {
  if (!lattice.is_cyclic(c_index))
    throw ValidationError("poset base C must be cyclic");
  if (h_index == lattice.full_index())
    throw ValidationError("poset bound H must be a proper subgroup");
  if (!lattice.leq(c_index, h_index))
    throw ValidationError("poset base C must be contained in H");

  TPoset poset;
  poset.c_index = c_index;
  poset.h_index = h_index;
  for (int x = 0; x < lattice.size(); ++x) {
    if (x == lattice.full_index()) continue;
    if (!lattice.leq(c_index, x)) continue;
    if (lattice.leq(x, h_index)) continue;
    poset.elements.push_back(x);
  }
  const int k = poset.size();
  poset.strict_order.assign(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && lattice.leq(poset.elements[i], poset.elements[j]))
        poset.strict_order[i].set(j);
  return poset;
}

EulerSummary count_chains(const TPoset& poset) {
  EulerSummary summary;
  const int k = poset.size();
  if (k == 0) return summary;  // chi = 0, chi_tilde = -1

  std::vector<std::vector<int>> preds(k);
  for (int i = 0; i < k; ++i)
    for (int j : poset.strict_order[i].indices()) preds[j].push_back(i);

  // ending_at[j] = number of strictly increasing chains of the current length
  // that end at j; lengthening a chain prepends all predecessors.
  std::vector<Int> ending_at(k, 1);
  Int chi = 0;
  int sign = 1;
  while (true) {
    Int level = 0;
    for (int j = 0; j < k; ++j) level += ending_at[j];
    if (level == 0) break;
    summary.chain_counts.push_back(level);
    chi += sign * level;
    sign = -sign;

    std::vector<Int> next(k, 0);
    for (int j = 0; j < k; ++j)
      for (int i : preds[j]) next[j] += ending_at[i];
    ending_at = std::move(next);
  }
  summary.chi = chi;
  summary.chi_tilde = chi - 1;
  return summary;
}

bool is_cone(const TPoset& poset) {
  const int k = poset.size();
  for (int i = 0; i < k; ++i) {
    bool apex = true;
    for (int j = 0; j < k && apex; ++j)
      apex = i == j || poset.strict_order[i].test(j) || poset.strict_order[j].test(i);
    if (apex) return true;
  }
  return false;
}

std::vector<CyclicTerm> chi_tilde_for_all_cyclic(const SubgroupLattice& lattice,
                                                 int h_index) {
  if (h_index == lattice.full_index())
    throw ValidationError("chi_tilde_for_all_cyclic requires H proper");
  std::vector<CyclicTerm> terms;
  for (int c : cyclic_indices(lattice)) {
    if (!lattice.leq(c, h_index)) continue;
    CyclicTerm term;
    term.c_index = c;
    term.phi = euler_phi(lattice.order(c));
    term.chi_tilde = count_chains(build_t_poset(lattice, c, h_index)).chi_tilde;
    term.signed_contribution = term.chi_tilde * term.phi;
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace burnside
