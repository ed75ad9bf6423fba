#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace burnside {

struct CatalogEntry {
  std::string name;  // unique; defaults to the spec text
  std::string spec;
  // Optional regression pins, e.g. "is_b_group" -> "true"/"false",
  // "beta_order" -> "4".
  std::map<std::string, std::string> expected;
};

// The built-in sweep catalog: cyclic n ≤ 24, dihedral 6–24, S3, S4, A4, A5,
// Q8, elementary abelian 2^2 / 2^3 / 3^2, and the products C2×C4, C2×C6,
// C3×C3, S3×C2, D8×C2.
std::vector<CatalogEntry> default_catalog();

// Catalog file: one entry per line — a group spec, optionally followed by
// whitespace-separated `name=<unique-name>` and pin tokens `key=value`.
// '#' starts a comment; blank lines are skipped. Throws ParseError with the
// line number on malformed input or duplicate names.
std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& origin);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

}  // namespace burnside
