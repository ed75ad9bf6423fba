#pragma once

// Independent re-derivations used to pin library results. Everything here is
// deliberately naive and follows a different algorithm (and traversal order)
// than the library: subset enumeration instead of join closure, top-down
// Möbius recursion instead of back-substitution, explicit chain DFS instead
// of the level DP.

#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/lattice.hpp"
#include "burnside/poset.hpp"
#include "burnside/rational.hpp"

namespace oracle {

inline long long phi(long long n) {
  long long c = 0;
  for (long long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

// Counts subgroups by enumerating, for every divisor d of |G|, all
// identity-containing subsets of size d and keeping the multiplication-closed
// ones. Only feasible for |G| <= 24.
inline int count_subgroups(const burnside::GroupTable& g) {
  const int n = g.order();
  if (n > 24) throw std::runtime_error("subset-closure oracle capped at order 24");
  const int e = g.identity();
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != e) others.push_back(i);
  const int m = static_cast<int>(others.size());

  int count = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (d == 1) {
      ++count;  // the trivial subgroup
      continue;
    }
    const int k = d - 1;  // non-identity members to choose
    std::uint32_t combo = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << m;
    while (combo < limit) {
      std::uint32_t full = std::uint32_t{1} << e;
      std::vector<int> elems = {e};
      std::uint32_t c = combo;
      while (c) {
        int bit = std::countr_zero(c);
        c &= c - 1;
        full |= std::uint32_t{1} << others[bit];
        elems.push_back(others[bit]);
      }
      bool closed = true;
      for (std::size_t i = 0; i < elems.size() && closed; ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
          if (!(full >> g.mul(elems[i], elems[j]) & 1)) {
            closed = false;
            break;
          }
      if (closed) ++count;
      // Gosper's hack: next subset of the same size.
      std::uint32_t low = combo & -combo;
      std::uint32_t ripple = combo + low;
      combo = (((ripple ^ combo) >> 2) / low) | ripple;
    }
  }
  return count;
}

// Möbius matrix by the top-down defining recursion
//   mu(Y,Y) = 1,  mu(X,Y) = -Σ_{X < Z <= Y} mu(Z,Y),
// using only the containment relation. (The library solves the transposed
// recursion over lower neighbours instead.)
inline std::vector<std::vector<long long>> mobius(const burnside::SubgroupLattice& L) {
  const int k = L.size();
  std::vector<std::vector<long long>> mu(k, std::vector<long long>(k, 0));
  for (int j = 0; j < k; ++j) {
    mu[j][j] = 1;
    for (int i = j - 1; i >= 0; --i) {
      if (!L.leq(i, j)) continue;
      long long s = 0;
      for (int z = i + 1; z <= j; ++z)
        if (L.leq(i, z) && L.leq(z, j)) s += mu[z][j];
      mu[i][j] = -s;
    }
  }
  return mu;
}

namespace detail {
inline void chain_dfs(const burnside::TPoset& p, int last, int len,
                      std::vector<burnside::Int>& out) {
  if (static_cast<int>(out.size()) < len) out.resize(len, 0);
  out[len - 1] += 1;
  for (int j : p.strict_order[last].indices()) chain_dfs(p, j, len + 1, out);
}
}  // namespace detail

// chain_counts[i] = number of strictly increasing chains of i+1 elements,
// found by explicit enumeration.
inline std::vector<burnside::Int> chain_counts(const burnside::TPoset& p) {
  std::vector<burnside::Int> out;
  for (int i = 0; i < p.size(); ++i) detail::chain_dfs(p, i, 1, out);
  return out;
}

inline burnside::Int chi_tilde(const burnside::TPoset& p) {
  burnside::Int chi = 0;
  int sign = 1;
  for (const burnside::Int& c : chain_counts(p)) {
    chi += sign * c;
    sign = -sign;
  }
  return chi - 1;
}

// m_{G,N} from the definition, with the Möbius values from the oracle above
// and X·N tested as a literal element-set product of full size.
inline burnside::Rational m_direct(const burnside::SubgroupLattice& L, int n_index) {
  auto mu = mobius(L);
  const burnside::GroupTable& g = L.group;
  const int full = L.full_index();
  burnside::Int acc = 0;
  for (int x = 0; x < L.size(); ++x) {
    std::set<int> prod;
    for (int a : L.members(x).indices())
      for (int b : L.members(n_index).indices()) prod.insert(g.mul(a, b));
    if (static_cast<int>(prod.size()) == g.order())
      acc += burnside::Int(L.order(x)) * mu[x][full];
  }
  return burnside::make_rational(acc, g.order());
}

}  // namespace oracle
