#include "burnside/mgn.hpp"

#include <bit>
#include <unordered_map>
#include <utility>

#include "burnside/errors.hpp"

namespace burnside {

void MgnReport::update_agreement() {
  agreement = true;
  const Rational* first = nullptr;
  for (const auto* v : {&m_direct, &m_theorem, &m_recursive}) {
    if (!v->has_value()) continue;
    if (first == nullptr)
      first = &v->value();
    else if (v->value() != *first)
      agreement = false;
  }
}

namespace {

void require_normal(const SubgroupLattice& lattice, int n_index) {
  if (n_index < 0 || n_index >= lattice.size())
    throw ValidationError("subgroup index out of range");
  if (!lattice.is_normal(n_index))
    throw ValidationError("N must be a normal subgroup");
}

void require_incidence(const SubgroupLattice& lattice) {
  if (!lattice.incidence_ready)
    throw ValidationError("lattice incidence matrices not computed");
}

void require_proper(const SubgroupLattice& lattice, int index, const char* what) {
  if (index < 0 || index >= lattice.size())
    throw ValidationError("subgroup index out of range");
  if (index == lattice.full_index())
    throw ValidationError(std::string(what) + " must be a proper subgroup");
}

// H_σ as an intersection of cover members; σ given as bitmask over J.
int intersect_sigma(const SubgroupLattice& lattice, const std::vector<int>& cover,
                    unsigned mask) {
  int h = -1;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (mask & (1u << i)) h = h < 0 ? cover[i] : lattice.intersect(h, cover[i]);
  return h;
}

std::vector<int> sigma_members(unsigned mask, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(static_cast<int>(i));
  return out;
}

Rational m_self_closed_form(const GroupTable& g) {
  if (is_cyclic_group(g)) return make_rational(euler_phi(g.order()), g.order());
  return Rational(0);
}

Int m_prime_rec(const SubgroupLattice& lattice, int y, int w,
                std::unordered_map<long long, Int>& memo) {
  const long long key = static_cast<long long>(y) * lattice.size() + w;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Int total = 0;
  for (int c : lattice.down[w].indices())
    if (lattice.is_cyclic(c)) total -= euler_phi(lattice.order(c));
  for (int z : lattice.down[y].indices()) {
    if (z == y || lattice.leq(z, w)) continue;
    total -= m_prime_rec(lattice, z, lattice.intersect(z, w), memo);
  }
  return memo.emplace(key, std::move(total)).first->second;
}

}  // namespace

std::vector<int> maximal_cover(const SubgroupLattice& lattice, int n_index) {
  require_proper(lattice, n_index, "N");
  return maximal_indices_containing(lattice, n_index);
}

Rational m_direct(const SubgroupLattice& lattice, int n_index) {
  require_normal(lattice, n_index);
  require_incidence(lattice);
  const int full = lattice.full_index();
  const Bitset& n_members = lattice.members(n_index);
  Int acc = 0;
  for (int x = 0; x < lattice.size(); ++x) {
    Bitset product = product_set(lattice.group, lattice.members(x), n_members);
    int p = lattice.find(product);
    if (p < 0)
      throw ValidationError("product set XN is not a subgroup; N is not normal");
    if (p == full) acc += Int(lattice.order(x)) * lattice.mu(x, full);
  }
  return make_rational(std::move(acc), lattice.group.order());
}

Rational m_self(const SubgroupLattice& lattice) {
  return m_direct(lattice, lattice.full_index());
}

Int M_prime_direct(const SubgroupLattice& lattice, int h_index) {
  require_proper(lattice, h_index, "H");
  require_incidence(lattice);
  const int full = lattice.full_index();
  Int acc = 0;
  for (int x : lattice.down[h_index].indices())
    acc += Int(lattice.order(x)) * lattice.mu(x, full);
  return acc;
}

Rational m_prime_direct(const SubgroupLattice& lattice, int h_index) {
  return make_rational(M_prime_direct(lattice, h_index), lattice.group.order());
}

Int M_prime_recursive(const SubgroupLattice& lattice, int h_index) {
  require_proper(lattice, h_index, "H");
  require_incidence(lattice);  // needs down-sets, not the Möbius matrix
  std::unordered_map<long long, Int> memo;
  return m_prime_rec(lattice, lattice.full_index(), h_index, memo);
}

Rational m_prime_recursive(const SubgroupLattice& lattice, int h_index) {
  return make_rational(M_prime_recursive(lattice, h_index), lattice.group.order());
}

MgnReport m_main_theorem(const SubgroupLattice& lattice, int n_index) {
  require_normal(lattice, n_index);
  require_proper(lattice, n_index, "N");

  MgnReport report;
  report.group_name = lattice.group.name();
  report.n_index = n_index;
  report.n_order = lattice.order(n_index);
  report.n_description = "order=" + std::to_string(report.n_order) +
                         ",index=" + std::to_string(normal_order_position(lattice, n_index));
  report.m_direct = m_direct(lattice, n_index);

  if (is_cyclic_group(lattice.group)) {
    report.theorem_fallback = true;
    report.m_theorem = report.m_direct;
    report.update_agreement();
    return report;
  }

  report.cover = maximal_cover(lattice, n_index);
  const std::size_t n = report.cover.size();
  if (n > kMaxCoverSize)
    throw SizeLimitError("maximal cover has " + std::to_string(n) +
                         " members; refusing 2^n subset enumeration");

  Int total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    SigmaTerm sigma_term;
    sigma_term.sigma = sigma_members(mask, n);
    sigma_term.h_sigma = intersect_sigma(lattice, report.cover, mask);
    const int sign = sigma_term.sigma.size() % 2 == 0 ? 1 : -1;
    for (int c : cyclic_indices(lattice)) {
      if (!lattice.leq(c, sigma_term.h_sigma)) continue;
      CyclicTerm term;
      term.c_index = c;
      term.phi = euler_phi(lattice.order(c));
      term.chi_tilde =
          count_chains(build_t_poset(lattice, c, sigma_term.h_sigma)).chi_tilde;
      term.signed_contribution = sign * term.chi_tilde * term.phi;
      total += term.signed_contribution;
      sigma_term.terms.push_back(std::move(term));
    }
    report.breakdown.push_back(std::move(sigma_term));
  }
  report.m_theorem = make_rational(std::move(total), lattice.group.order());
  report.update_agreement();
  return report;
}

Rational m_recursive(const SubgroupLattice& lattice, int n_index) {
  require_normal(lattice, n_index);
  require_proper(lattice, n_index, "N");
  require_incidence(lattice);  // needs down-sets, not the Möbius matrix

  std::vector<int> cover = maximal_cover(lattice, n_index);
  const std::size_t n = cover.size();
  if (n > kMaxCoverSize)
    throw SizeLimitError("maximal cover has " + std::to_string(n) +
                         " members; refusing 2^n subset enumeration");

  std::unordered_map<long long, Int> memo;
  Int acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int h = intersect_sigma(lattice, cover, mask);
    const int sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
    acc += sign * m_prime_rec(lattice, lattice.full_index(), h, memo);
  }
  return m_self_closed_form(lattice.group) +
         make_rational(std::move(acc), lattice.group.order());
}

std::vector<IETerm> inclusion_exclusion_decomposition(const SubgroupLattice& lattice,
                                                      int n_index) {
  require_normal(lattice, n_index);
  require_proper(lattice, n_index, "N");
  require_incidence(lattice);

  std::vector<int> cover = maximal_cover(lattice, n_index);
  const std::size_t n = cover.size();
  if (n > kMaxCoverSize)
    throw SizeLimitError("maximal cover has " + std::to_string(n) +
                         " members; refusing 2^n subset enumeration");

  std::vector<IETerm> terms;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    IETerm term;
    term.sigma = sigma_members(mask, n);
    term.h_sigma = intersect_sigma(lattice, cover, mask);
    term.m_prime_value = M_prime_direct(lattice, term.h_sigma);
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace burnside
