#pragma once

#include <string>
#include <vector>

#include "burnside/lattice.hpp"

namespace burnside {

// Help text shared by the CLI and error messages.
extern const char* const kSelectorHelp;

struct MethodSet {
  bool direct = false;
  bool theorem = false;
  bool recursive = false;
};

// Comma-separated list of direct|theorem|recursive; "all" enables everything.
// Throws ParseError on unknown tokens or an empty selection.
MethodSet parse_methods(const std::string& csv);

struct NSelector {
  bool all = false;       // every proper normal subgroup, including the trivial one
  long long order = -1;   // required unless all
  long long index = -1;   // 1-based position among normals of the same order
};

// "all" | "order=K" | "order=K,index=J". Throws ParseError on anything else.
NSelector parse_n_selector(const std::string& text);

// Lattice indices matching the selector, ascending. `all` excludes G itself;
// an explicit order=|G| selects N = G. Throws ValidationError when nothing
// matches, naming the selector.
std::vector<int> resolve_n_selector(const SubgroupLattice& lattice, const NSelector& sel);

}  // namespace burnside
