#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burnside/bgroup.hpp"
#include "burnside/cache.hpp"
#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"
#include "burnside/mgn.hpp"
#include "burnside/options.hpp"
#include "burnside/poset.hpp"
#include "burnside/rational.hpp"
#include "burnside/verify.hpp"

namespace {

using namespace burnside;

std::string default_cache_dir() {
  const char* env = std::getenv("BURNSIDE_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

void add_cache_dir_option(CLI::App* cmd, std::string& cache_dir) {
  cmd->add_option("--cache-dir", cache_dir,
                  "Lattice cache directory (default: $BURNSIDE_CACHE_DIR; empty disables caching)");
}

std::string describe_n(const SubgroupLattice& lattice, int n) {
  return "order=" + std::to_string(lattice.order(n)) +
         ",index=" + std::to_string(normal_order_position(lattice, n));
}

// ---------------------------------------------------------------- lattice --

int cmd_lattice(const std::string& spec, const std::string& cache_dir) {
  SubgroupLattice lattice = obtain_lattice(build_group(spec), cache_dir);
  const int k = lattice.size();
  std::cout << "group " << lattice.group.name() << " order " << lattice.group.order()
            << ": " << k << (k == 1 ? " subgroup" : " subgroups") << "\n";

  std::map<long long, int> histogram;
  for (const Subgroup& s : lattice.subgroups) ++histogram[s.order];
  std::cout << "orders:";
  for (auto [order, count] : histogram) std::cout << "  " << order << " x" << count;
  std::cout << "\n";

  std::vector<char> maximal(k, 0);
  for (int m : maximal_indices(lattice)) maximal[m] = 1;
  for (int i = 0; i < k; ++i) {
    std::cout << "#" << i << " order=" << lattice.order(i);
    if (lattice.is_cyclic(i)) std::cout << " cyclic";
    if (lattice.is_normal(i)) std::cout << " normal";
    if (maximal[i]) std::cout << " maximal";
    std::cout << "\n";
  }
  if (!cache_dir.empty())
    std::cout << "cache: " << cache_dir << "/" << cache_file_name(lattice.group.name()) << "\n";
  return 0;
}

// -------------------------------------------------------------------- mgn --

MgnReport build_report(const SubgroupLattice& lattice, int n, const MethodSet& methods) {
  MgnReport report;
  if (n == lattice.full_index()) {
    // Only the defining sum applies to N = G; the theorem and the recursion
    // both presuppose a proper N.
    report.group_name = lattice.group.name();
    report.n_index = n;
    report.n_order = lattice.order(n);
    report.n_description = describe_n(lattice, n);
    if (methods.direct) report.m_direct = m_self(lattice);
    report.update_agreement();
    return report;
  }
  if (methods.theorem) {
    report = m_main_theorem(lattice, n);  // carries m_direct as the cross-check
  } else {
    report.group_name = lattice.group.name();
    report.n_index = n;
    report.n_order = lattice.order(n);
    report.n_description = describe_n(lattice, n);
  }
  if (methods.direct && !report.m_direct) report.m_direct = m_direct(lattice, n);
  if (methods.recursive) report.m_recursive = m_recursive(lattice, n);
  report.update_agreement();
  return report;
}

void print_breakdown(const SubgroupLattice& lattice, const MgnReport& report) {
  std::cout << "  cover J:";
  for (int h : report.cover) std::cout << " #" << h << "(order " << lattice.order(h) << ")";
  std::cout << "\n";
  for (const SigmaTerm& sigma : report.breakdown) {
    std::cout << "  sigma {";
    for (std::size_t i = 0; i < sigma.sigma.size(); ++i)
      std::cout << (i ? "," : "") << sigma.sigma[i];
    std::cout << "} H_sigma=#" << sigma.h_sigma << "(order "
              << lattice.order(sigma.h_sigma) << ")\n";
    for (const CyclicTerm& term : sigma.terms)
      std::cout << "    C=#" << term.c_index << " order=" << lattice.order(term.c_index)
                << " phi=" << term.phi << " chi_tilde=" << term.chi_tilde
                << " contribution=" << term.signed_contribution << "\n";
  }
}

void print_report_human(const SubgroupLattice& lattice, const MgnReport& report,
                        bool breakdown) {
  const std::optional<Rational>* first = nullptr;
  for (const auto* v : {&report.m_direct, &report.m_theorem, &report.m_recursive})
    if (v->has_value() && !first) first = v;
  std::cout << "N " << report.n_description << ": m = "
            << (first ? to_fraction_string(first->value()) : "-") << "\n";
  if (report.m_direct)
    std::cout << "  direct    = " << to_fraction_string(*report.m_direct) << "\n";
  if (report.m_theorem)
    std::cout << "  theorem   = " << to_fraction_string(*report.m_theorem)
              << (report.theorem_fallback ? " [fallback=direct]" : "") << "\n";
  if (report.m_recursive)
    std::cout << "  recursive = " << to_fraction_string(*report.m_recursive) << "\n";
  if (report.n_index == lattice.full_index())
    std::cout << "  (theorem/recursive not applicable: N = G)\n";
  std::cout << "  agreement = " << (report.agreement ? "true" : "false") << "\n";
  if (breakdown && !report.breakdown.empty()) print_breakdown(lattice, report);
}

std::string cell(const std::optional<Rational>& v) {
  return v ? to_fraction_string(*v) : "-";
}

int cmd_mgn(const std::string& spec, const std::string& selector_text,
            const std::string& methods_text, bool breakdown, const std::string& format,
            const std::string& cache_dir) {
  MethodSet methods = parse_methods(methods_text);
  NSelector selector = parse_n_selector(selector_text);
  SubgroupLattice lattice = obtain_lattice(build_group(spec), cache_dir);
  std::vector<int> targets = resolve_n_selector(lattice, selector);

  bool all_agree = true;
  if (format == "tsv")
    std::cout << "group\torder\tN_order\tN_index\tm_direct\tm_theorem\tm_recursive\tagree\n";
  else
    std::cout << "group " << lattice.group.name() << " order " << lattice.group.order()
              << "\n";
  for (int n : targets) {
    MgnReport report = build_report(lattice, n, methods);
    all_agree = all_agree && report.agreement;
    if (format == "tsv")
      std::cout << report.group_name << '\t' << lattice.group.order() << '\t'
                << report.n_order << '\t' << normal_order_position(lattice, n) << '\t'
                << cell(report.m_direct) << '\t' << cell(report.m_theorem) << '\t'
                << cell(report.m_recursive) << '\t'
                << (report.agreement ? "true" : "false") << "\n";
    else
      print_report_human(lattice, report, breakdown);
  }
  return all_agree ? 0 : 1;
}

// ----------------------------------------------------------- bgroup / beta --

std::string identify_group(const GroupTable& g) {
  if (g.order() == 1) return "trivial";
  for (const CatalogEntry& entry : default_catalog()) {
    GroupTable candidate = build_group(entry.spec);
    if (candidate.order() == g.order() && are_isomorphic(candidate, g))
      return entry.name;
  }
  return "order " + std::to_string(g.order());
}

void print_beta_details(const SubgroupLattice& lattice, const BetaResult& result) {
  std::cout << "chosen N: " << describe_n(lattice, result.chosen_n) << "\n";
  std::cout << "nonzero m rows:\n";
  for (const auto& [n, value] : result.all_nonzero)
    std::cout << "  N " << describe_n(lattice, n) << ": m = " << to_fraction_string(value)
              << "\n";
  std::cout << "maximal nonzero N:";
  for (int n : result.maximal_nonzero) std::cout << " {" << describe_n(lattice, n) << "}";
  std::cout << "\n";
}

int cmd_bgroup(const std::string& spec, const std::string& cache_dir) {
  SubgroupLattice lattice = obtain_lattice(build_group(spec), cache_dir);
  bool verdict = is_b_group(lattice);
  BetaResult result = beta(lattice);
  std::string ident = result.chosen_n == lattice.trivial_index()
                          ? "G"
                          : identify_group(result.beta);
  std::cout << "B-group: " << (verdict ? "yes" : "no") << "; beta = " << ident
            << " (order " << result.beta.order() << ")\n";
  print_beta_details(lattice, result);
  return 0;
}

int cmd_beta(const std::string& spec, const std::string& cache_dir) {
  SubgroupLattice lattice = obtain_lattice(build_group(spec), cache_dir);
  BetaResult result = beta(lattice);
  std::string ident = result.chosen_n == lattice.trivial_index()
                          ? "G"
                          : identify_group(result.beta);
  std::cout << "beta(" << lattice.group.name() << ") = " << ident << " (order "
            << result.beta.order() << ")\n";
  print_beta_details(lattice, result);
  return 0;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& catalog_path, const std::string& methods_text,
               int max_order, int jobs, const std::string& format,
               const std::string& cache_dir) {
  MethodSet methods = parse_methods(methods_text);
  std::vector<CatalogEntry> catalog =
      catalog_path.empty() ? default_catalog() : load_catalog_file(catalog_path);

  VerifyOptions options;
  options.max_order = max_order;
  options.run_direct = methods.direct;
  options.run_theorem = methods.theorem;
  options.run_recursive = methods.recursive;
  options.cache_dir = cache_dir;
  options.jobs = jobs;

  VerifyResult result = run_verify(catalog, options);
  if (format == "human") {
    write_human(result, std::cout);
  } else {
    write_tsv(result, std::cout);
    for (const auto& g : result.groups)
      for (const auto& f : g.failures) std::cerr << "FAIL " << g.name << ": " << f << "\n";
    std::cerr << "verify: " << result.total_failures() << " failure(s)\n";
  }
  return result.total_failures() == 0 ? 0 : 1;
}

// ------------------------------------------------------------------ cache --

int cmd_cache(const std::string& action, const std::string& spec,
              const std::string& cache_dir) {
  if (cache_dir.empty())
    throw ValidationError("no cache directory: pass --cache-dir or set BURNSIDE_CACHE_DIR");
  GroupTable g = build_group(spec);
  std::string path = cache_dir + "/" + cache_file_name(g.name());
  if (action == "path") {
    std::cout << path << "\n";
    return 0;
  }
  if (action == "write") {
    SubgroupLattice lattice = build_lattice(std::move(g));
    store_lattice(lattice, cache_dir);
    std::cout << "wrote " << path << " (" << lattice.size() << " subgroups)\n";
    return 0;
  }
  if (action == "check") {
    std::ifstream in(path);
    if (!in) throw ValidationError("no cache file at " + path);
    SubgroupLattice lattice = read_lattice_cache(in, std::move(g));
    std::cout << "ok " << path << " (" << lattice.size() << " subgroups)\n";
    return 0;
  }
  throw ParseError("unknown cache action '" + action + "' (want write|check|path)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Bouc invariants m_{G,N} of finite groups, computed three ways "
      "(direct Mobius sum, M' recursion, nerve Euler characteristics) with "
      "B-group detection and beta quotients."};
  app.require_subcommand(1);

  std::string spec, selector = "all", methods = "all", format = "human";
  std::string cache_dir = default_cache_dir(), catalog_path, cache_action;
  bool breakdown = false;
  int max_order = 48, jobs = 1;

  auto* lattice_cmd = app.add_subcommand(
      "lattice", "Enumerate the subgroup lattice: counts, order histogram, flags");
  lattice_cmd->add_option("spec", spec, "Group spec, e.g. sym:3, dihedral:8, product:cyclic:2,cyclic:4")
      ->required();
  add_cache_dir_option(lattice_cmd, cache_dir);

  auto* mgn_cmd = app.add_subcommand("mgn", "Compute m_{G,N} for selected normal subgroups");
  mgn_cmd->add_option("spec", spec, "Group spec")->required();
  mgn_cmd->add_option("--N", selector, kSelectorHelp)->capture_default_str();
  mgn_cmd->add_option("--methods", methods, "Comma list of direct|theorem|recursive, or all")
      ->capture_default_str();
  mgn_cmd->add_flag("--breakdown", breakdown, "Print per-sigma / per-C theorem terms");
  mgn_cmd->add_option("--format", format, "human or tsv")->capture_default_str();
  add_cache_dir_option(mgn_cmd, cache_dir);

  auto* bgroup_cmd = app.add_subcommand("bgroup", "B-group verdict and beta quotient");
  bgroup_cmd->add_option("spec", spec, "Group spec")->required();
  add_cache_dir_option(bgroup_cmd, cache_dir);

  auto* beta_cmd = app.add_subcommand("beta", "Identify beta(G) = G/N, N maximal with m != 0");
  beta_cmd->add_option("spec", spec, "Group spec")->required();
  add_cache_dir_option(beta_cmd, cache_dir);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check every method over a catalog; exit 0 iff no failures");
  verify_cmd->add_option("--catalog", catalog_path, "Catalog file (default: built-in catalog)");
  verify_cmd->add_option("--methods", methods, "Comma list of direct|theorem|recursive, or all")
      ->capture_default_str();
  verify_cmd->add_option("--max-order", max_order, "Skip groups larger than this")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--format", format, "tsv (default here) or human");
  add_cache_dir_option(verify_cmd, cache_dir);

  auto* cache_cmd = app.add_subcommand("cache", "Lattice cache maintenance");
  cache_cmd->add_option("action", cache_action, "write | check | path")->required();
  cache_cmd->add_option("spec", spec, "Group spec")->required();
  add_cache_dir_option(cache_cmd, cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps to the uniform error code.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (lattice_cmd->parsed()) return cmd_lattice(spec, cache_dir);
    if (mgn_cmd->parsed())
      return cmd_mgn(spec, selector, methods, breakdown, format, cache_dir);
    if (bgroup_cmd->parsed()) return cmd_bgroup(spec, cache_dir);
    if (beta_cmd->parsed()) return cmd_beta(spec, cache_dir);
    if (verify_cmd->parsed()) {
      if (verify_cmd->count("--format") == 0) format = "tsv";
      return cmd_verify(catalog_path, methods, max_order, jobs, format, cache_dir);
    }
    if (cache_cmd->parsed()) return cmd_cache(cache_action, spec, cache_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
