#include "burnside/verify.hpp"

#include <atomic>
#include <ostream>
#include <thread>

#include "burnside/bgroup.hpp"
#include "burnside/cache.hpp"
#include "burnside/errors.hpp"
#include "burnside/poset.hpp"

namespace burnside {

int VerifyResult::total_failures() const {
  int n = 0;
  for (const auto& g : groups) n += static_cast<int>(g.failures.size());
  return n;
}

namespace {

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void lattice_invariant_suite(const SubgroupLattice& lattice,
                             std::vector<std::string>& failures) {
  const int k = lattice.size();
  if (lattice.order(0) != 1 || lattice.order(k - 1) != lattice.group.order())
    failures.push_back("lattice ends are not the trivial subgroup and G");
  for (int i = 1; i < k; ++i) {
    const Subgroup& a = lattice.subgroups[i - 1];
    const Subgroup& b = lattice.subgroups[i];
    if (a.order > b.order || (a.order == b.order && !(a.members < b.members))) {
      failures.push_back("subgroups are not in canonical (order, bitset) order");
      break;
    }
  }

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long acc = 0;
      for (int m : lattice.up[i].indices()) acc += lattice.mu(m, j);
      if (acc != (i == j ? 1 : 0)) {
        failures.push_back("zeta·mobius is not the identity matrix");
        return;
      }
      if (!lattice.leq(i, j) && lattice.mu(i, j) != 0) {
        failures.push_back("Möbius zero pattern violated: mu != 0 off the order");
        return;
      }
    }

  for (int i = 0; i < k - 1; ++i) {
    long long acc = 0;
    for (int j : lattice.up[i].indices()) acc += lattice.mu(i, j);
    if (acc != 0) {
      failures.push_back("Σ_{X≤Y≤G} μ(X,Y) != 0 for a proper X");
      return;
    }
  }
}

void m_invariant_suite(const SubgroupLattice& lattice,
                       std::vector<std::string>& failures) {
  if (m_direct(lattice, lattice.trivial_index()) != 1)
    failures.push_back("m_{G,1} != 1");

  Rational self = m_self(lattice);
  if (is_cyclic_group(lattice.group)) {
    if (self != make_rational(euler_phi(lattice.group.order()), lattice.group.order()))
      failures.push_back("m_{G,G} != phi(n)/n for cyclic G");
  } else if (self != 0) {
    failures.push_back("m_{G,G} != 0 for non-cyclic G");
  }
}

void bgroup_invariant_suite(const SubgroupLattice& lattice,
                            const CatalogEntry& entry,
                            std::vector<std::string>& failures) {
  bool fast = is_b_group(lattice);
  if (fast != is_b_group_full(lattice))
    failures.push_back("minimal-normal B-group check disagrees with the full check");

  BetaResult result = beta(lattice);  // asserts pairwise quotient isomorphism
  if (!is_b_group(build_lattice(result.beta)))
    failures.push_back("beta(G) is not a B-group");

  if (auto it = entry.expected.find("is_b_group"); it != entry.expected.end()) {
    if (fast != (it->second == "true"))
      failures.push_back("pinned is_b_group=" + it->second + " does not match");
  }
  if (auto it = entry.expected.find("beta_order"); it != entry.expected.end()) {
    if (std::to_string(result.beta.order()) != it->second)
      failures.push_back("pinned beta_order=" + it->second + " got " +
                         std::to_string(result.beta.order()));
  }
}

// When |G:N| is prime and G is not cyclic, N is the only maximal subgroup
// over N; if additionally every χ̃(𝔗_C(G,N)) vanishes, m_{G,N} must be 0.
void chi_consequence_check(const SubgroupLattice& lattice, int n_index,
                           const Rational& direct_value,
                           std::vector<std::string>& failures) {
  long long index = lattice.group.order() / lattice.order(n_index);
  if (!is_prime_ll(index) || is_cyclic_group(lattice.group)) return;
  for (const CyclicTerm& term : chi_tilde_for_all_cyclic(lattice, n_index))
    if (term.chi_tilde != 0) return;
  if (direct_value != 0)
    failures.push_back("all χ̃ vanish for prime-index N but m_{G,N} != 0");
}

GroupVerifyResult process_entry(const CatalogEntry& entry, const VerifyOptions& options) {
  GroupVerifyResult result;
  result.name = entry.name;
  try {
    GroupTable g = build_group(entry.spec);
    result.order = g.order();
    if (g.order() > options.max_order) {
      result.skipped = true;
      return result;
    }
    SubgroupLattice lattice = obtain_lattice(std::move(g), options.cache_dir);

    lattice_invariant_suite(lattice, result.failures);
    m_invariant_suite(lattice, result.failures);
    bgroup_invariant_suite(lattice, entry, result.failures);

    for (int n : normal_indices(lattice)) {
      if (n == lattice.full_index()) continue;
      VerifyRow row;
      row.n_order = lattice.order(n);
      row.n_index = normal_order_position(lattice, n);
      std::string at = "N order=" + std::to_string(row.n_order) +
                       ",index=" + std::to_string(row.n_index);
      if (options.run_direct) row.m_direct = m_direct(lattice, n);
      // A refused cover (size cap) loses one method at one N, not the group.
      if (options.run_theorem) {
        try {
          MgnReport report = m_main_theorem(lattice, n);
          row.m_theorem = report.m_theorem;
          row.theorem_fallback = report.theorem_fallback;
        } catch (const SizeLimitError& e) {
          result.failures.push_back(at + ": theorem not computed: " + e.what());
        }
      }
      if (options.run_recursive) {
        try {
          row.m_recursive = m_recursive(lattice, n);
        } catch (const SizeLimitError& e) {
          result.failures.push_back(at + ": recursive not computed: " + e.what());
        }
      }

      const Rational* first = nullptr;
      for (const auto* v : {&row.m_direct, &row.m_theorem, &row.m_recursive}) {
        if (!v->has_value()) continue;
        if (first == nullptr)
          first = &v->value();
        else if (v->value() != *first)
          row.agree = false;
      }
      if (!row.agree)
        result.failures.push_back("methods disagree for N order=" +
                                  std::to_string(row.n_order) + ",index=" +
                                  std::to_string(row.n_index));
      if (row.m_direct)
        chi_consequence_check(lattice, n, *row.m_direct, result.failures);
      result.rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  return result;
}

std::string value_or_dash(const std::optional<Rational>& v) {
  return v ? to_fraction_string(*v) : "-";
}

}  // namespace

VerifyResult run_verify(const std::vector<CatalogEntry>& catalog,
                        const VerifyOptions& options) {
  VerifyResult result;
  result.groups.resize(catalog.size());

  int jobs = options.jobs < 1 ? 1 : options.jobs;
  if (jobs > static_cast<int>(catalog.size()))
    jobs = static_cast<int>(catalog.size() ? catalog.size() : 1);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= catalog.size()) break;
      result.groups[i] = process_entry(catalog[i], options);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

void write_tsv(const VerifyResult& result, std::ostream& out) {
  out << "group\torder\tN_order\tN_index\tm_direct\tm_theorem\tm_recursive\tagree\n";
  for (const auto& g : result.groups) {
    if (g.skipped) continue;
    for (const auto& row : g.rows) {
      out << g.name << '\t' << g.order << '\t' << row.n_order << '\t' << row.n_index
          << '\t' << value_or_dash(row.m_direct) << '\t' << value_or_dash(row.m_theorem)
          << '\t' << value_or_dash(row.m_recursive) << '\t'
          << (row.agree ? "true" : "false") << "\n";
    }
  }
}

void write_human(const VerifyResult& result, std::ostream& out) {
  int rows = 0, skipped = 0;
  for (const auto& g : result.groups) {
    if (g.skipped) {
      out << g.name << " (order " << g.order << "): skipped, above max order\n";
      ++skipped;
      continue;
    }
    out << g.name << " (order " << g.order << "): " << g.rows.size()
        << " normal subgroup pair(s)\n";
    for (const auto& row : g.rows) {
      out << "  N order=" << row.n_order << ",index=" << row.n_index
          << "  direct=" << value_or_dash(row.m_direct)
          << "  theorem=" << value_or_dash(row.m_theorem)
          << (row.theorem_fallback ? " [fallback=direct]" : "")
          << "  recursive=" << value_or_dash(row.m_recursive)
          << "  agree=" << (row.agree ? "true" : "false") << "\n";
      ++rows;
    }
    for (const auto& f : g.failures) out << "  FAILURE: " << f << "\n";
  }
  out << "groups=" << result.groups.size() << " skipped=" << skipped
      << " rows=" << rows << " failures=" << result.total_failures() << "\n";
}

}  // namespace burnside
