#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

inline constexpr int kDefaultOrderCap = 5000;

// A permutation on {0..n-1}; p[i] is the image of point i.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& p, const Permutation& q);  // p after q

// A finite group as an explicit multiplication table.
//
// Construction validates the table: it must be a Latin square with a
// two-sided identity and two-sided inverses; associativity is verified
// exhaustively up to order 512 (tables produced by the builders below are
// associative by construction, so larger orders skip the cubic check).
// Instances are immutable and safe to share across threads.
class GroupTable {
 public:
  GroupTable(int order, std::vector<std::uint16_t> mul, std::string name);

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int x) const { return inv_[x]; }
  int identity() const { return identity_; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  const std::string& name() const { return name_; }

  bool same_table(const GroupTable& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::string name_;
};

// Parsed form of the CLI group-spec grammar:
//
//   cyclic:N                cyclic group of order N        (N >= 1)
//   dihedral:N              dihedral group of order N      (N even, >= 2)
//   sym:N                   symmetric group on N points
//   alt:N                   alternating group on N points
//   quaternion:8            the quaternion group
//   elab:P:K                elementary abelian group of order P^K (P prime)
//   product:<spec>,<spec>   direct product
//   perm:(a b ...)(c ...);(...)   group generated by the given permutations
//                           (1-based points, generators separated by ';')
struct GroupSpec {
  enum class Kind {
    cyclic,
    dihedral,
    symmetric,
    alternating,
    quaternion,
    elementary_abelian,
    direct_product,
    permutation_generators,
  };

  Kind kind = Kind::cyclic;
  long long a = 0;  // primary numeric parameter (order, points, or prime)
  long long b = 0;  // exponent for elab
  std::vector<GroupSpec> factors;        // direct_product (exactly two)
  std::vector<Permutation> generators;   // permutation_generators (0-based)
  std::string text;                      // canonical spec string

  bool is_cyclic_kind() const { return kind == Kind::cyclic; }
};

// Throws ParseError with the offending offset on malformed input.
GroupSpec parse_group_spec(std::string_view text);

GroupTable build_from_spec(const GroupSpec& spec, int order_cap = kDefaultOrderCap);
GroupTable build_group(std::string_view spec_text, int order_cap = kDefaultOrderCap);

// Breadth-first closure of the generators, starting from the identity.
// Element 0 is the identity and indexing is reproducible for a fixed
// generator list. Throws SizeLimitError past the cap, ValidationError on
// non-bijective input.
GroupTable build_from_generators(const std::vector<Permutation>& generators,
                                 std::string name = "",
                                 int order_cap = kDefaultOrderCap);

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name);

// Least k >= 1 with x^k = identity; divides the group order.
int element_order(const GroupTable& g, int x);

bool is_cyclic_group(const GroupTable& g);

// Count of 1 <= k <= n coprime to n. Throws ValidationError for n < 1.
long long euler_phi(long long n);

}  // namespace burnside
