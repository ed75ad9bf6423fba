#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burnside/catalog.hpp"
#include "burnside/mgn.hpp"

namespace burnside {

struct VerifyOptions {
  int max_order = 48;  // groups above this are skipped entirely
  bool run_direct = true;
  bool run_theorem = true;
  bool run_recursive = true;
  std::string cache_dir;  // empty disables lattice caching
  int jobs = 1;
};

struct VerifyRow {
  int n_order = 0;
  int n_index = 0;  // position among normal subgroups of the same order
  std::optional<Rational> m_direct;
  std::optional<Rational> m_theorem;
  std::optional<Rational> m_recursive;
  bool agree = true;
  bool theorem_fallback = false;
};

struct GroupVerifyResult {
  std::string name;
  int order = 0;
  bool skipped = false;  // order above max_order
  std::vector<std::string> failures;  // invariant-suite and agreement failures
  std::vector<VerifyRow> rows;        // one per proper normal N, canonical order
};

struct VerifyResult {
  std::vector<GroupVerifyResult> groups;
  int total_failures() const;
};

// For every catalog group within max_order and every proper normal N
// (including the trivial subgroup): computes the requested methods, checks
// exact agreement, and runs the per-module invariant suites (zeta·mobius
// identity, Möbius zero pattern and row sums, canonical sort, m_{G,1} = 1,
// the m_{G,G} closed form, and the χ̃ consequence for prime-index N).
// Workers split the catalog by group; output order is the catalog order
// regardless of the worker count.
VerifyResult run_verify(const std::vector<CatalogEntry>& catalog,
                        const VerifyOptions& options);

// Fixed columns: group, order, N_order, N_index, m_direct, m_theorem,
// m_recursive, agree. Values of methods not run print as "-".
void write_tsv(const VerifyResult& result, std::ostream& out);

// Same content with per-group headers, fallback markers, and a summary line.
void write_human(const VerifyResult& result, std::ostream& out);

}  // namespace burnside
