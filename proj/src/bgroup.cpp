#include "burnside/bgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "burnside/errors.hpp"
#include "burnside/mgn.hpp"

namespace burnside {

namespace {

bool prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool power_of(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

Bitset commutator_closure(const GroupTable& g, const Bitset& a, const Bitset& b) {
  Bitset seed(g.order());
  for (int x : a.indices())
    for (int y : b.indices()) {
      // [x,y] = x y x^-1 y^-1
      int c = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
      seed.set(c);
    }
  return closure_in_group(g, seed);
}

Bitset all_elements(const GroupTable& g) {
  Bitset b(g.order());
  for (int x = 0; x < g.order(); ++x) b.set(x);
  return b;
}

bool is_trivial(const GroupTable& g, const Bitset& members) {
  return members.count() == 1 && members.test(g.identity());
}

// Sorted multiset of element orders; the primary cheap invariant. Also
// determines per-order cyclic subgroup counts (#elements of order k / φ(k)).
std::vector<int> order_multiset(const GroupTable& g) {
  std::vector<int> orders(g.order());
  for (int x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<int> conjugacy_class_sizes(const GroupTable& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> sizes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    int size = 0;
    for (int t = 0; t < g.order(); ++t) {
      int y = g.conjugate(t, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Greedy generating sequence: each generator strictly enlarges the generated
// subgroup, so the sequence has at most log2|G| members.
std::vector<int> generating_sequence(const GroupTable& g) {
  std::vector<int> gens;
  Bitset have = Bitset::single(g.order(), g.identity());
  for (int x = 0; x < g.order(); ++x) {
    if (have.test(x)) continue;
    gens.push_back(x);
    have = closure_in_group(g, have | Bitset::single(g.order(), x));
    if (have.count() == g.order()) break;
  }
  return gens;
}

// Extends the partial generator assignment to a map on ⟨gens[0..k)⟩ by
// breadth-first products; detects conflicts and non-injectivity. Returns the
// number of mapped elements, or -1 on conflict.
int close_partial_map(const GroupTable& a, const GroupTable& b,
                      const std::vector<int>& gens, const std::vector<int>& images,
                      std::vector<int>& map_ab) {
  std::vector<char> used(b.order(), 0);
  std::fill(map_ab.begin(), map_ab.end(), -1);
  map_ab[a.identity()] = b.identity();
  used[b.identity()] = 1;
  std::vector<int> worklist{a.identity()};
  for (std::size_t w = 0; w < worklist.size(); ++w) {
    int x = worklist[w];
    for (std::size_t j = 0; j < images.size(); ++j) {
      int y = a.mul(x, gens[j]);
      int image = b.mul(map_ab[x], images[j]);
      if (map_ab[y] < 0) {
        if (used[image]) return -1;  // not injective
        map_ab[y] = image;
        used[image] = 1;
        worklist.push_back(y);
      } else if (map_ab[y] != image) {
        return -1;
      }
    }
  }
  return static_cast<int>(worklist.size());
}

bool extend_isomorphism(const GroupTable& a, const GroupTable& b,
                        const std::vector<int>& gens, std::vector<int>& images,
                        const std::vector<int>& orders_a, const std::vector<int>& orders_b,
                        std::vector<int>& map_ab) {
  if (images.size() == gens.size()) {
    if (close_partial_map(a, b, gens, images, map_ab) != a.order()) return false;
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (map_ab[a.mul(x, y)] != b.mul(map_ab[x], map_ab[y])) return false;
    return true;
  }
  const int g = gens[images.size()];
  for (int candidate = 0; candidate < b.order(); ++candidate) {
    if (orders_b[candidate] != orders_a[g]) continue;
    images.push_back(candidate);
    if (close_partial_map(a, b, gens, images, map_ab) > 0 &&
        extend_isomorphism(a, b, gens, images, orders_a, orders_b, map_ab))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool is_b_group(const SubgroupLattice& lattice) {
  for (int n : minimal_normal_indices(lattice))
    if (m_direct(lattice, n) != 0) return false;
  return true;
}

bool is_b_group_full(const SubgroupLattice& lattice) {
  for (int n : normal_indices(lattice)) {
    if (n == lattice.trivial_index()) continue;
    if (m_direct(lattice, n) != 0) return false;
  }
  return true;
}

BetaResult beta(const SubgroupLattice& lattice) {
  std::vector<std::pair<int, Rational>> nonzero;
  for (int n : normal_indices(lattice)) {
    Rational m = m_direct(lattice, n);
    if (m != 0) nonzero.emplace_back(n, std::move(m));
  }

  std::vector<int> maximal;
  for (const auto& [i, m] : nonzero) {
    bool is_max = true;
    for (const auto& [j, mj] : nonzero)
      if (j != i && lattice.leq(i, j)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(i);
  }

  const int chosen = maximal.front();
  GroupTable quotient = quotient_group(lattice.group, lattice.members(chosen));
  for (std::size_t k = 1; k < maximal.size(); ++k) {
    GroupTable other = quotient_group(lattice.group, lattice.members(maximal[k]));
    if (!are_isomorphic(quotient, other))
      throw ValidationError("maximal subgroups with m ≠ 0 gave non-isomorphic quotients");
  }
  return BetaResult{chosen, std::move(quotient), std::move(nonzero), std::move(maximal)};
}

GroupTable quotient_group(const GroupTable& g, const Bitset& normal_members) {
  if (!is_closed_subgroup(g, normal_members))
    throw ValidationError("quotient requires a subgroup");
  std::vector<int> n_elems = normal_members.indices();
  for (int x = 0; x < g.order(); ++x)
    for (int s : n_elems)
      if (!normal_members.test(g.conjugate(x, s)))
        throw ValidationError("quotient requires a normal subgroup");

  // Canonical representative of each left coset = least element index.
  std::vector<int> rep_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (rep_of[x] >= 0) continue;
    int rep = x;  // ascending scan: x is the least member of its coset
    for (int s : n_elems) rep_of[g.mul(x, s)] = rep;
    reps.push_back(rep);
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> coset_id(g.order(), -1);
  for (int i = 0; i < q; ++i) coset_id[reps[i]] = i;

  std::vector<std::uint16_t> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<std::size_t>(i) * q + j] =
          static_cast<std::uint16_t>(coset_id[rep_of[g.mul(reps[i], reps[j])]]);
  return GroupTable(q, std::move(mul),
                    g.name() + "/N" + std::to_string(normal_members.count()));
}

bool are_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  if (order_multiset(a) != order_multiset(b)) return false;
  if (conjugacy_class_sizes(a) != conjugacy_class_sizes(b)) return false;

  std::vector<int> orders_a(a.order()), orders_b(b.order());
  for (int x = 0; x < a.order(); ++x) orders_a[x] = element_order(a, x);
  for (int x = 0; x < b.order(); ++x) orders_b[x] = element_order(b, x);

  std::vector<int> gens = generating_sequence(a);
  std::vector<int> images;
  std::vector<int> map_ab(a.order(), -1);
  return extend_isomorphism(a, b, gens, images, orders_a, orders_b, map_ab);
}

bool is_nilpotent(const GroupTable& g) {
  Bitset whole = all_elements(g);
  Bitset gamma = whole;
  while (true) {
    Bitset next = commutator_closure(g, whole, gamma);
    if (next == gamma) return is_trivial(g, gamma);
    gamma = std::move(next);
    if (is_trivial(g, gamma)) return true;
  }
}

bool is_solvable(const GroupTable& g) {
  Bitset derived = all_elements(g);
  while (true) {
    Bitset next = commutator_closure(g, derived, derived);
    if (next == derived) return is_trivial(g, derived);
    derived = std::move(next);
    if (is_trivial(g, derived)) return true;
  }
}

int o_p_subgroup(const SubgroupLattice& lattice, long long p) {
  if (!prime(p)) throw ValidationError("O_p requires a prime p");
  int result = lattice.trivial_index();
  for (int n : normal_indices(lattice))
    if (power_of(lattice.order(n), p)) result = lattice.join(result, n);
  if (!power_of(lattice.order(result), p))
    throw ValidationError("join of normal p-subgroups is not a p-group");
  return result;
}

bool is_cyclic_mod_p(const SubgroupLattice& lattice, long long p) {
  int op = o_p_subgroup(lattice, p);
  return is_cyclic_group(quotient_group(lattice.group, lattice.members(op)));
}

}  // namespace burnside
