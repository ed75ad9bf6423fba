#include "burnside/cache.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 15];
    v >>= 4;
  }
  return out;
}

[[noreturn]] void corrupt(const std::string& what) {
  throw ValidationError("lattice cache: " + what);
}

}  // namespace

std::string cache_file_name(const std::string& group_name) {
  std::string safe;
  for (char c : group_name)
    safe += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (safe.size() > 80) safe.resize(80);
  return safe + "-" + hex16(fnv1a(group_name)) + ".lattice";
}

void write_lattice_cache(const SubgroupLattice& lattice, std::ostream& out) {
  const int k = lattice.size();
  out << "group " << lattice.group.name() << " order " << lattice.group.order()
      << " subgroups " << k << "\n";
  for (int i = 0; i < k; ++i) {
    bool first = true;
    for (int x : lattice.members(i).indices()) {
      if (!first) out << ' ';
      out << x;
      first = false;
    }
    out << "\n";
  }
  out << "zeta\n";
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out << (j ? " " : "") << lattice.zeta(i, j);
    out << "\n";
  }
  out << "mobius\n";
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out << (j ? " " : "") << lattice.mu(i, j);
    out << "\n";
  }
}

SubgroupLattice read_lattice_cache(std::istream& in, GroupTable g) {
  std::string header;
  if (!std::getline(in, header)) corrupt("missing header");
  if (header.rfind("group ", 0) != 0) corrupt("header must start with 'group '");
  auto sub_pos = header.rfind(" subgroups ");
  if (sub_pos == std::string::npos) corrupt("header lacks 'subgroups'");
  auto ord_pos = header.rfind(" order ", sub_pos);
  if (ord_pos == std::string::npos) corrupt("header lacks 'order'");
  std::string name = header.substr(6, ord_pos - 6);
  int order = 0, count = 0;
  try {
    order = std::stoi(header.substr(ord_pos + 7, sub_pos - (ord_pos + 7)));
    count = std::stoi(header.substr(sub_pos + 11));
  } catch (const std::exception&) {
    corrupt("header numbers unreadable");
  }
  if (name != g.name()) corrupt("cached group name \"" + name + "\" does not match");
  if (order != g.order()) corrupt("cached order does not match");
  if (count < 1 || count > kMaxSubgroups) corrupt("implausible subgroup count");

  std::vector<Bitset> members;
  members.reserve(count);
  std::string line;
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) corrupt("truncated member list");
    std::istringstream tokens(line);
    Bitset set(order);
    int previous = -1, x = 0;
    bool any = false;
    while (tokens >> x) {
      if (x <= previous) corrupt("member indices must be strictly ascending");
      if (x < 0 || x >= order) corrupt("member index out of range");
      set.set(x);
      previous = x;
      any = true;
    }
    if (!any) corrupt("empty member line");
    members.push_back(std::move(set));
  }

  SubgroupLattice lattice = lattice_from_members(std::move(g), members);
  for (int i = 0; i < lattice.size(); ++i)
    if (!(lattice.members(i) == members[i]))
      corrupt("member lines are not in canonical (order, bitset) order");

  if (!std::getline(in, line) || line != "zeta") corrupt("missing zeta section");
  for (int i = 0; i < lattice.size(); ++i) {
    if (!std::getline(in, line)) corrupt("truncated zeta section");
    std::istringstream tokens(line);
    for (int j = 0; j < lattice.size(); ++j) {
      int v = 0;
      if (!(tokens >> v)) corrupt("short zeta row");
      if (v != lattice.zeta(i, j)) corrupt("zeta entry mismatch");
    }
  }
  if (!std::getline(in, line) || line != "mobius") corrupt("missing mobius section");
  for (int i = 0; i < lattice.size(); ++i) {
    if (!std::getline(in, line)) corrupt("truncated mobius section");
    std::istringstream tokens(line);
    for (int j = 0; j < lattice.size(); ++j) {
      long long v = 0;
      if (!(tokens >> v)) corrupt("short mobius row");
      if (v != lattice.mu(i, j)) corrupt("mobius entry mismatch");
    }
  }
  return lattice;
}

void store_lattice(const SubgroupLattice& lattice, const std::string& cache_dir) {
  std::filesystem::create_directories(cache_dir);
  std::filesystem::path path =
      std::filesystem::path(cache_dir) / cache_file_name(lattice.group.name());
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write cache file " + path.string());
  write_lattice_cache(lattice, out);
}

std::optional<SubgroupLattice> try_load_lattice(const GroupTable& g,
                                                const std::string& cache_dir) {
  std::filesystem::path path =
      std::filesystem::path(cache_dir) / cache_file_name(g.name());
  std::ifstream in(path);
  if (!in) return std::nullopt;
  return read_lattice_cache(in, g);
}

SubgroupLattice obtain_lattice(GroupTable g, const std::string& cache_dir) {
  if (cache_dir.empty()) return build_lattice(std::move(g));
  if (auto cached = try_load_lattice(g, cache_dir)) return std::move(*cached);
  SubgroupLattice lattice = build_lattice(std::move(g));
  store_lattice(lattice, cache_dir);
  return lattice;
}

}  // namespace burnside
