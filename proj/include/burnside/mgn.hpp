#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burnside/lattice.hpp"
#include "burnside/poset.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Inclusion–exclusion over σ ⊆ J enumerates 2^|J| subsets; refuse beyond this.
inline constexpr int kMaxCoverSize = 20;

// One non-empty σ ⊆ J with H_σ = ⋂_{i∈σ} H_i and the per-cyclic-subgroup
// χ̃·φ terms, each already signed by (−1)^{|σ|}.
struct SigmaTerm {
  std::vector<int> sigma;        // 0-based positions into the cover J
  int h_sigma = -1;              // lattice index of H_σ
  std::vector<CyclicTerm> terms;
};

// Aggregate result for one (G, N) pair. m_theorem carries the full per-(σ, C)
// breakdown; agreement is exact rational equality over the values present.
struct MgnReport {
  std::string group_name;
  std::string n_description;  // "order=K,index=J" selector form
  int n_index = -1;
  int n_order = 0;
  std::optional<Rational> m_direct;
  std::optional<Rational> m_theorem;
  std::optional<Rational> m_recursive;
  bool agreement = true;
  bool theorem_fallback = false;  // G cyclic: theorem column computed as direct
  std::vector<int> cover;         // J = maximal subgroups ⊇ N (lattice indices)
  std::vector<SigmaTerm> breakdown;

  void update_agreement();
};

// (1/|G|) Σ_{XN=G} |X| μ(X,G), with XN evaluated as the literal product set
// (asserted to be a subgroup). N may be any normal subgroup including 1 and G.
// Throws ValidationError when N is not normal or incidence is missing.
Rational m_direct(const SubgroupLattice& lattice, int n_index);

// m_direct with N = G; φ(|G|)/|G| for cyclic G, 0 otherwise.
Rational m_self(const SubgroupLattice& lattice);

// m′_{G,H} = (1/|G|) Σ_{X≤H} |X| μ(X,G) for a proper subgroup H (normality
// not required). M_prime_direct is the integer |G|·m′.
Rational m_prime_direct(const SubgroupLattice& lattice, int h_index);
Int M_prime_direct(const SubgroupLattice& lattice, int h_index);

// The same value by the Möbius-free recursion
//   M′_{Y,W} = −Σ_{C≤W cyclic} φ(|C|) − Σ_{Z⪇Y, Z≰W} M′_{Z, Z∩W},
// memoized on (Z, Z∩W) pairs; sub-lattices are the parent lattice filtered by
// containment, never re-enumerated.
Rational m_prime_recursive(const SubgroupLattice& lattice, int h_index);
Int M_prime_recursive(const SubgroupLattice& lattice, int h_index);

// m_{G,N} by nerve Euler characteristics with inclusion–exclusion over the
// maximal subgroups containing N:
//   m_{G,N} = (1/|G|) Σ_{∅≠σ⊆J} Σ_{C≤H_σ cyclic} (−1)^{|σ|} χ̃(𝔗_C(G,H_σ)) φ(|C|)
// for non-cyclic G. Cyclic G falls back to m_direct with theorem_fallback
// set. The report also carries m_direct as the cross-check.
// N must be normal and proper; |J| > kMaxCoverSize → SizeLimitError.
MgnReport m_main_theorem(const SubgroupLattice& lattice, int n_index);

// m_{G,N} assembled without the Möbius matrix: the closed form for m_{G,G}
// (φ(n)/n when G cyclic, else 0) plus (1/|G|) Σ_{∅≠σ⊆J} (−1)^{|σ|} M′_{G,H_σ}
// with every M′ computed by the recursion. N must be normal and proper.
Rational m_recursive(const SubgroupLattice& lattice, int n_index);

// The signed cover decomposition over non-empty σ ⊆ J; the alternating sum
// Σ_σ (−1)^{|σ|+1} M′_{G,H_σ} equals Σ_{XN≠G} |X|μ(X,G) = |G|(m_{G,G} − m_{G,N}).
struct IETerm {
  std::vector<int> sigma;
  int h_sigma = -1;
  Int m_prime_value;  // M′_{G,H_σ}
};
std::vector<IETerm> inclusion_exclusion_decomposition(const SubgroupLattice& lattice,
                                                      int n_index);

// J = maximal subgroups of G containing N (non-strict). N proper.
std::vector<int> maximal_cover(const SubgroupLattice& lattice, int n_index);

}  // namespace burnside
