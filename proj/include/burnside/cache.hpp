#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "burnside/lattice.hpp"

namespace burnside {

// Deterministic cache file name for a group: sanitized display name plus a
// stable content hash of the name, with a .lattice suffix.
std::string cache_file_name(const std::string& group_name);

// Line-oriented text format:
//   group <name> order <n> subgroups <k>
//   <k lines of ascending member indices>
//   zeta
//   <k row-major 0/1 lines>
//   mobius
//   <k row-major integer lines>
void write_lattice_cache(const SubgroupLattice& lattice, std::ostream& out);

// Rebuilds the lattice from the member lines (revalidating subgroup closure,
// completeness, and canonical order) and recomputes both matrices; the file's
// zeta and mobius sections must match exactly or a ValidationError is thrown.
// The header must match the supplied group's name and order.
SubgroupLattice read_lattice_cache(std::istream& in, GroupTable g);

void store_lattice(const SubgroupLattice& lattice, const std::string& cache_dir);

// nullopt when no cache file exists; throws on a corrupt or mismatched file.
std::optional<SubgroupLattice> try_load_lattice(const GroupTable& g,
                                                const std::string& cache_dir);

// Load from cache_dir if possible, otherwise build and (when cache_dir is
// non-empty) store. Empty cache_dir disables caching entirely.
SubgroupLattice obtain_lattice(GroupTable g, const std::string& cache_dir);

}  // namespace burnside
