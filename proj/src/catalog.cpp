#include "burnside/catalog.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "burnside/errors.hpp"
#include "burnside/group.hpp"

namespace burnside {

namespace {

CatalogEntry pinned(std::string spec, std::map<std::string, std::string> expected) {
  CatalogEntry entry;
  entry.name = spec;
  entry.spec = std::move(spec);
  entry.expected = std::move(expected);
  return entry;
}

}  // namespace

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> entries;

  entries.push_back(pinned("cyclic:1", {{"is_b_group", "true"}, {"beta_order", "1"}}));
  for (int n = 2; n <= 24; ++n)
    entries.push_back(pinned("cyclic:" + std::to_string(n),
                             {{"is_b_group", "false"}, {"beta_order", "1"}}));
  for (int n = 6; n <= 24; n += 2) {
    CatalogEntry e;
    e.name = e.spec = "dihedral:" + std::to_string(n);
    if (n == 8) e.expected = {{"is_b_group", "false"}, {"beta_order", "4"}};
    entries.push_back(std::move(e));
  }
  entries.push_back(pinned("sym:3", {{"is_b_group", "true"}, {"beta_order", "6"}}));
  entries.push_back(pinned("sym:4", {}));
  entries.push_back(pinned("alt:4", {}));
  entries.push_back(pinned("alt:5", {{"is_b_group", "true"}, {"beta_order", "60"}}));
  entries.push_back(pinned("quaternion:8", {{"is_b_group", "false"}, {"beta_order", "4"}}));
  entries.push_back(pinned("elab:2:2", {{"is_b_group", "true"}, {"beta_order", "4"}}));
  entries.push_back(pinned("elab:2:3", {{"is_b_group", "false"}, {"beta_order", "4"}}));
  entries.push_back(pinned("elab:3:2", {{"is_b_group", "true"}, {"beta_order", "9"}}));
  entries.push_back(pinned("product:cyclic:2,cyclic:4", {}));
  entries.push_back(pinned("product:cyclic:2,cyclic:6", {}));
  entries.push_back(pinned("product:cyclic:3,cyclic:3",
                           {{"is_b_group", "true"}, {"beta_order", "9"}}));
  entries.push_back(pinned("product:sym:3,cyclic:2", {}));
  entries.push_back(pinned("product:dihedral:8,cyclic:2", {}));
  return entries;
}

std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& origin) {
  std::vector<CatalogEntry> entries;
  std::unordered_set<std::string> names;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string spec;
    if (!(tokens >> spec)) continue;

    CatalogEntry entry;
    entry.spec = spec;
    entry.name = spec;
    std::string token;
    while (tokens >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError(origin + ":" + std::to_string(line_number) +
                         ": expected key=value, got \"" + token + "\"");
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (key == "name")
        entry.name = value;
      else
        entry.expected[key] = value;
    }
    try {
      parse_group_spec(entry.spec);
    } catch (const ParseError& e) {
      throw ParseError(origin + ":" + std::to_string(line_number) + ": " + e.what());
    }
    if (!names.insert(entry.name).second)
      throw ParseError(origin + ":" + std::to_string(line_number) +
                       ": duplicate catalog name \"" + entry.name + "\"");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path);
  return parse_catalog(in, path);
}

}  // namespace burnside
