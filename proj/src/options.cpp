#include "burnside/options.hpp"

#include <stdexcept>

#include "burnside/errors.hpp"

namespace burnside {

const char* const kSelectorHelp =
    "Normal-subgroup selector: 'all' (every proper normal subgroup, including "
    "the trivial one), 'order=K' (all normal subgroups of order K; K equal to "
    "|G| selects N = G, where only the direct method applies), or "
    "'order=K,index=J' (J counts the normal subgroups of order K in canonical "
    "lattice order — ascending order, then ascending member bitmask — starting "
    "at 1).";

MethodSet parse_methods(const std::string& csv) {
  MethodSet m;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string token =
        csv.substr(start, comma == std::string::npos ? comma : comma - start);
    if (token == "all")
      m.direct = m.theorem = m.recursive = true;
    else if (token == "direct")
      m.direct = true;
    else if (token == "theorem")
      m.theorem = true;
    else if (token == "recursive")
      m.recursive = true;
    else
      throw ParseError("unknown method '" + token +
                       "' (want direct|theorem|recursive|all)");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!m.direct && !m.theorem && !m.recursive)
    throw ParseError("--methods selects nothing");
  return m;
}

NSelector parse_n_selector(const std::string& text) {
  NSelector sel;
  if (text == "all") {
    sel.all = true;
    return sel;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw ParseError("bad N selector token '" + token + "'. " + kSelectorHelp);
    std::string key = token.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(token.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("bad integer in N selector token '" + token + "'");
    }
    if (value <= 0) throw ParseError("N selector values must be positive");
    if (key == "order")
      sel.order = value;
    else if (key == "index")
      sel.index = value;
    else
      throw ParseError("unknown N selector key '" + key + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (sel.order < 0) throw ParseError("N selector needs order=K (or 'all')");
  return sel;
}

std::vector<int> resolve_n_selector(const SubgroupLattice& lattice, const NSelector& sel) {
  std::vector<int> picked;
  for (int n : normal_indices(lattice)) {
    if (sel.all) {
      if (n != lattice.full_index()) picked.push_back(n);
      continue;
    }
    if (lattice.order(n) != sel.order) continue;
    if (sel.index > 0 && normal_order_position(lattice, n) != sel.index) continue;
    picked.push_back(n);
  }
  if (picked.empty()) {
    if (sel.all) throw ValidationError("the trivial group has no proper normal subgroups");
    std::string msg = "no normal subgroup matches order=" + std::to_string(sel.order);
    if (sel.index > 0) msg += ",index=" + std::to_string(sel.index);
    throw ValidationError(msg);
  }
  return picked;
}

}  // namespace burnside
