#include "burnside/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <utility>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

std::string offset_msg(std::string_view text, std::size_t pos, const std::string& what) {
  return "group spec \"" + std::string(text) + "\": " + what + " at offset " +
         std::to_string(pos);
}

void check_cap(long long order, int cap, const std::string& what) {
  if (order > cap)
    throw SizeLimitError(what + ": order " + std::to_string(order) +
                         " exceeds cap " + std::to_string(cap));
  if (order > 65535)
    throw SizeLimitError(what + ": order " + std::to_string(order) +
                         " exceeds table index range");
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

GroupTable::GroupTable(int order, std::vector<std::uint16_t> mul, std::string name)
    : order_(order), mul_(std::move(mul)), name_(std::move(name)) {
  if (order_ < 1) throw ValidationError("group order must be positive");
  if (mul_.size() != static_cast<std::size_t>(order_) * order_)
    throw ValidationError("multiplication table has wrong shape");

  const int n = order_;
  auto at = [this](int a, int b) {
    return static_cast<int>(mul_[static_cast<std::size_t>(a) * order_ + b]);
  };

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = at(a, b);
      if (v < 0 || v >= n || seen[v])
        throw ValidationError("row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = at(a, b);
      if (seen[v])
        throw ValidationError("column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }

  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) id = e;
  }
  if (id < 0) throw ValidationError("table has no two-sided identity");
  identity_ = id;

  inv_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int y = 0; y < n; ++y)
      if (at(x, y) == id && at(y, x) == id) {
        found = y;
        break;
      }
    if (found < 0)
      throw ValidationError("element " + std::to_string(x) + " has no inverse");
    inv_[x] = static_cast<std::uint16_t>(found);
  }

  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw ValidationError("table is not associative");
  }
}

int element_order(const GroupTable& g, int x) {
  if (x < 0 || x >= g.order()) throw ValidationError("element index out of range");
  int k = 1;
  int p = x;
  while (p != g.identity()) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

bool is_cyclic_group(const GroupTable& g) {
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

long long euler_phi(long long n) {
  if (n < 1) throw ValidationError("euler_phi requires n >= 1");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// ---------------------------------------------------------------------------
// Builders

GroupTable build_from_generators(const std::vector<Permutation>& generators,
                                 std::string name, int order_cap) {
  std::size_t npoints = 0;
  for (const auto& p : generators) npoints = std::max(npoints, p.size());

  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& p : generators) {
    std::vector<char> hit(npoints, 0);
    Permutation q(npoints);
    for (std::size_t i = 0; i < npoints; ++i) {
      int img = i < p.size() ? p[i] : static_cast<int>(i);
      if (img < 0 || img >= static_cast<int>(npoints) || hit[img])
        throw ValidationError("generator is not a bijection on its point set");
      hit[img] = 1;
      q[i] = img;
    }
    gens.push_back(std::move(q));
  }

  Permutation identity(npoints);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<Permutation> elems{identity};
  std::map<Permutation, int> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation w = compose(elems[i], g);
      if (index.emplace(w, static_cast<int>(elems.size())).second) {
        if (static_cast<long long>(elems.size()) + 1 > order_cap)
          throw SizeLimitError("generated group exceeds order cap " +
                               std::to_string(order_cap));
        elems.push_back(std::move(w));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));

  if (name.empty()) name = "perm-group:" + std::to_string(n);
  return GroupTable(n, std::move(mul), std::move(name));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name) {
  long long n = static_cast<long long>(a.order()) * b.order();
  check_cap(n, 65535, "direct product");
  const int nb = b.order();
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int px = a.mul(x / nb, y / nb);
      int py = b.mul(x % nb, y % nb);
      mul[static_cast<std::size_t>(x) * n + y] =
          static_cast<std::uint16_t>(px * nb + py);
    }
  return GroupTable(static_cast<int>(n), std::move(mul), std::move(name));
}

namespace {

GroupTable build_cyclic(long long n, int cap) {
  if (n < 1) throw ValidationError("cyclic order must be >= 1");
  check_cap(n, cap, "cyclic");
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
  return GroupTable(static_cast<int>(n), std::move(mul), "cyclic:" + std::to_string(n));
}

// Elements: 0..m-1 are rotations r^k, m..2m-1 are reflections s*r^k, where
// m is half the group order and s*r*s = r^-1.
GroupTable build_dihedral(long long order, int cap) {
  if (order < 2 || order % 2 != 0)
    throw ValidationError("dihedral order must be even and >= 2");
  check_cap(order, cap, "dihedral");
  const long long m = order / 2;
  auto idx = [m](bool refl, long long k) {
    return static_cast<std::uint16_t>((refl ? m : 0) + ((k % m) + m) % m);
  };
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(order) * order);
  for (long long x = 0; x < order; ++x)
    for (long long y = 0; y < order; ++y) {
      bool rx = x >= m, ry = y >= m;
      long long a = x % m, b = y % m;
      std::uint16_t v;
      if (!rx && !ry) v = idx(false, a + b);        // r^a r^b
      else if (!rx && ry) v = idx(true, b - a);     // r^a (s r^b) = s r^(b-a)
      else if (rx && !ry) v = idx(true, a + b);     // (s r^a) r^b
      else v = idx(false, b - a);                   // (s r^a)(s r^b) = r^(b-a)
      mul[x * order + y] = v;
    }
  return GroupTable(static_cast<int>(order), std::move(mul),
                    "dihedral:" + std::to_string(order));
}

long long factorial_capped(long long n, long long cap) {
  long long f = 1;
  for (long long i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return f;
  }
  return f;
}

bool permutation_is_even(const Permutation& p) {
  int transpositions = 0;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Lexicographic enumeration keeps element indexing deterministic and puts the
// identity at index 0.
GroupTable build_permutations(long long npts, bool even_only, int cap,
                              const std::string& name) {
  if (npts < 1) throw ValidationError(name + " requires at least 1 point");
  long long order = factorial_capped(npts, 2LL * cap);
  if (even_only && npts >= 3) order /= 2;
  check_cap(order, cap, name);

  Permutation p(npts);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> elems;
  std::map<Permutation, int> index;
  do {
    if (even_only && !permutation_is_even(p)) continue;
    index.emplace(p, static_cast<int>(elems.size()));
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
  return GroupTable(n, std::move(mul), name);
}

// Index s*4+u: sign s in {0,1}, basis u in {1, i, j, k}.
GroupTable build_quaternion(long long order, int cap) {
  if (order != 8) throw ValidationError("only quaternion:8 is supported");
  check_cap(order, cap, "quaternion");
  // basis[u][v] -> (sign, basis) for u*v with u,v in {1,i,j,k}
  static constexpr int kBasis[4][4] = {
      {0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  // encoded as basis + 4*sign: i*i = -1 -> 4, i*j = k -> 3, j*i = -k -> 7, ...
  std::vector<std::uint16_t> mul(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int su = x / 4, u = x % 4;
      int sv = y / 4, v = y % 4;
      int enc = kBasis[u][v];
      int sw = (su + sv + enc / 4) % 2;
      mul[static_cast<std::size_t>(x) * 8 + y] =
          static_cast<std::uint16_t>(sw * 4 + enc % 4);
    }
  return GroupTable(8, std::move(mul), "quaternion:8");
}

GroupTable build_elementary_abelian(long long p, long long k, int cap) {
  if (!is_prime(p)) throw ValidationError("elab base must be prime");
  if (k < 1) throw ValidationError("elab exponent must be >= 1");
  long long order = 1;
  for (long long i = 0; i < k; ++i) {
    order *= p;
    check_cap(order, cap, "elab");
  }
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(order) * order);
  for (long long x = 0; x < order; ++x)
    for (long long y = 0; y < order; ++y) {
      long long z = 0, weight = 1, xa = x, ya = y;
      for (long long i = 0; i < k; ++i) {
        z += ((xa + ya) % p) * weight;
        xa /= p;
        ya /= p;
        weight *= p;
      }
      mul[x * order + y] = static_cast<std::uint16_t>(z);
    }
  return GroupTable(static_cast<int>(order), std::move(mul),
                    "elab:" + std::to_string(p) + ":" + std::to_string(k));
}

// --- spec grammar ----------------------------------------------------------

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(offset_msg(text, pos, std::string("expected ") + what));
  }

  long long parse_int() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(offset_msg(text, pos, "expected integer"));
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw ParseError(offset_msg(text, start, "integer too large"));
    }
    return v;
  }

  std::string parse_word() {
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(offset_msg(text, pos, "expected family name"));
    return std::string(text.substr(start, pos - start));
  }

  // "(1 2 3)(4 5)" -> permutation, 1-based points; cycles must be disjoint.
  Permutation parse_cycles() {
    std::vector<std::pair<int, int>> moves;  // (from, to), 0-based
    int maxpt = 0;
    bool saw_cycle = false;
    while (peek() == '(') {
      saw_cycle = true;
      ++pos;
      std::vector<int> cyc;
      while (true) {
        while (peek() == ' ') ++pos;
        if (eat(')')) break;
        long long pt = parse_int();
        if (pt < 1) throw ParseError(offset_msg(text, pos, "points are 1-based"));
        cyc.push_back(static_cast<int>(pt - 1));
        maxpt = std::max(maxpt, static_cast<int>(pt));
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        moves.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    if (!saw_cycle) throw ParseError(offset_msg(text, pos, "expected '(' starting a cycle"));
    Permutation p(maxpt);
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> moved(maxpt, 0);
    for (auto [from, to] : moves) {
      if (moved[from])
        throw ParseError(offset_msg(text, pos, "point repeated across cycles"));
      moved[from] = 1;
      p[from] = to;
    }
    return p;
  }

  GroupSpec parse_spec() {
    std::size_t start = pos;
    std::string word = parse_word();
    GroupSpec spec;
    if (word == "cyclic" || word == "dihedral" || word == "sym" || word == "alt" ||
        word == "quaternion") {
      expect(':', "':'");
      spec.a = parse_int();
      spec.kind = word == "cyclic"       ? GroupSpec::Kind::cyclic
                  : word == "dihedral"   ? GroupSpec::Kind::dihedral
                  : word == "sym"        ? GroupSpec::Kind::symmetric
                  : word == "alt"        ? GroupSpec::Kind::alternating
                                         : GroupSpec::Kind::quaternion;
    } else if (word == "elab") {
      expect(':', "':'");
      spec.a = parse_int();
      expect(':', "':'");
      spec.b = parse_int();
      spec.kind = GroupSpec::Kind::elementary_abelian;
    } else if (word == "product") {
      expect(':', "':'");
      spec.kind = GroupSpec::Kind::direct_product;
      spec.factors.push_back(parse_spec());
      expect(',', "',' between product factors");
      spec.factors.push_back(parse_spec());
    } else if (word == "perm") {
      expect(':', "':'");
      spec.kind = GroupSpec::Kind::permutation_generators;
      if (peek() == '(') {
        spec.generators.push_back(parse_cycles());
        while (eat(';')) spec.generators.push_back(parse_cycles());
      }
    } else {
      throw ParseError(offset_msg(text, start, "unknown family \"" + word + "\""));
    }
    spec.text = std::string(text.substr(start, pos - start));
    return spec;
  }
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  SpecParser parser{text};
  while (parser.peek() == ' ') ++parser.pos;
  GroupSpec spec = parser.parse_spec();
  while (parser.peek() == ' ') ++parser.pos;
  if (parser.pos != text.size())
    throw ParseError(offset_msg(text, parser.pos, "trailing input"));
  return spec;
}

GroupTable build_from_spec(const GroupSpec& spec, int order_cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return build_cyclic(spec.a, order_cap);
    case GroupSpec::Kind::dihedral:
      return build_dihedral(spec.a, order_cap);
    case GroupSpec::Kind::symmetric:
      return build_permutations(spec.a, false, order_cap, "sym:" + std::to_string(spec.a));
    case GroupSpec::Kind::alternating:
      return build_permutations(spec.a, true, order_cap, "alt:" + std::to_string(spec.a));
    case GroupSpec::Kind::quaternion:
      return build_quaternion(spec.a, order_cap);
    case GroupSpec::Kind::elementary_abelian:
      return build_elementary_abelian(spec.a, spec.b, order_cap);
    case GroupSpec::Kind::direct_product: {
      GroupTable a = build_from_spec(spec.factors[0], order_cap);
      GroupTable b = build_from_spec(spec.factors[1], order_cap);
      long long n = static_cast<long long>(a.order()) * b.order();
      check_cap(n, order_cap, "product");
      return direct_product(a, b, spec.text);
    }
    case GroupSpec::Kind::permutation_generators:
      return build_from_generators(spec.generators, spec.text, order_cap);
  }
  throw ValidationError("unreachable group spec kind");
}

GroupTable build_group(std::string_view spec_text, int order_cap) {
  return build_from_spec(parse_group_spec(spec_text), order_cap);
}

}  // namespace burnside
