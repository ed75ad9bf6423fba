#include <algorithm>
#include <map>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/lattice.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace burnside;

TEST_CASE("subgroup counts match the subset-closure oracle") {
  for (const char* spec :
       {"cyclic:1", "cyclic:2", "cyclic:8", "cyclic:12", "cyclic:16", "sym:3",
        "dihedral:8", "dihedral:12", "quaternion:8", "elab:2:3", "elab:3:2", "alt:4",
        "product:cyclic:2,cyclic:4", "product:cyclic:3,cyclic:3"}) {
    CAPTURE(spec);
    GroupTable g = build_group(spec);
    SubgroupLattice lattice = enumerate_subgroups(g);
    CHECK(lattice.size() == oracle::count_subgroups(g));
  }
}

TEST_CASE("classical subgroup counts") {
  auto count = [](const char* spec) { return enumerate_subgroups(build_group(spec)).size(); };
  CHECK(count("cyclic:1") == 1);
  CHECK(count("cyclic:12") == 6);   // one per divisor
  CHECK(count("sym:3") == 6);
  CHECK(count("elab:2:2") == 5);
  CHECK(count("dihedral:8") == 10);
  CHECK(count("quaternion:8") == 6);
  CHECK(count("elab:2:3") == 16);
  CHECK(count("alt:4") == 10);
  CHECK(count("sym:4") == 30);
  CHECK(count("dihedral:24") == 34);
  CHECK(count("alt:5") == 59);
}

TEST_CASE("canonical order and containment structure") {
  SubgroupLattice lattice = build_lattice(build_group("dihedral:8"));
  CHECK(lattice.trivial_index() == 0);
  CHECK(lattice.order(0) == 1);
  CHECK(lattice.full_index() == lattice.size() - 1);
  CHECK(lattice.order(lattice.full_index()) == 8);
  for (int i = 1; i < lattice.size(); ++i) {
    const Subgroup& a = lattice.subgroups[i - 1];
    const Subgroup& b = lattice.subgroups[i];
    CHECK((a.order < b.order || (a.order == b.order && a.members < b.members)));
  }
  // The sort is a linear extension: containment only points forward.
  for (int i = 0; i < lattice.size(); ++i)
    for (int j = 0; j < i; ++j) CHECK_FALSE((lattice.leq(i, j) && i != j));
  // up/down rows agree with subset_of on members.
  for (int i = 0; i < lattice.size(); ++i)
    for (int j = 0; j < lattice.size(); ++j) {
      CHECK(lattice.up[i].test(j) == lattice.leq(i, j));
      CHECK(lattice.down[j].test(i) == lattice.leq(i, j));
    }
}

TEST_CASE("Mobius matrix matches the top-down oracle") {
  for (const char* spec : {"cyclic:12", "sym:3", "dihedral:8", "quaternion:8",
                           "elab:2:3", "alt:4", "sym:4"}) {
    CAPTURE(spec);
    SubgroupLattice lattice = build_lattice(build_group(spec));
    auto expected = oracle::mobius(lattice);
    for (int i = 0; i < lattice.size(); ++i)
      for (int j = 0; j < lattice.size(); ++j) CHECK(lattice.mu(i, j) == expected[i][j]);
  }
}

TEST_CASE("classical Mobius values mu(1, G)") {
  auto mu_bottom_top = [](const char* spec) {
    SubgroupLattice lattice = build_lattice(build_group(spec));
    return lattice.mu(lattice.trivial_index(), lattice.full_index());
  };
  CHECK(mu_bottom_top("sym:3") == 3);
  CHECK(mu_bottom_top("elab:2:2") == 2);
  CHECK(mu_bottom_top("quaternion:8") == 0);
  CHECK(mu_bottom_top("cyclic:4") == 0);    // squarefree kernel: mu(n) on divisors
  CHECK(mu_bottom_top("cyclic:6") == 1);
  CHECK(mu_bottom_top("cyclic:30") == -1);
  CHECK(mu_bottom_top("alt:5") == -60);
}

TEST_CASE("zeta-Mobius inversion and zero pattern") {
  SubgroupLattice lattice = build_lattice(build_group("sym:4"));
  const int k = lattice.size();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long acc = 0;
      for (int z = 0; z < k; ++z) acc += lattice.zeta(i, z) * lattice.mu(z, j);
      CHECK(acc == (i == j ? 1 : 0));
      if (!lattice.leq(i, j)) CHECK(lattice.mu(i, j) == 0);
    }
}

TEST_CASE("normal, minimal-normal, maximal and cyclic queries") {
  SubgroupLattice s4 = build_lattice(build_group("sym:4"));
  std::vector<int> normals = normal_indices(s4);
  REQUIRE(normals.size() == 4);  // 1, V4, A4, S4
  CHECK(s4.order(normals[0]) == 1);
  CHECK(s4.order(normals[1]) == 4);
  CHECK(s4.order(normals[2]) == 12);
  CHECK(s4.order(normals[3]) == 24);

  std::vector<int> minimal = minimal_normal_indices(s4);
  REQUIRE(minimal.size() == 1);
  CHECK(s4.order(minimal[0]) == 4);  // V4

  CHECK(maximal_indices(s4).size() == 8);  // 4 x S3, 3 x D8, A4

  // Non-strict cover: A4 is itself maximal, so J(A4) = {A4}.
  int a4 = normals[2];
  std::vector<int> over_a4 = maximal_indices_containing(s4, a4);
  REQUIRE(over_a4.size() == 1);
  CHECK(over_a4[0] == a4);
  int v4 = normals[1];
  CHECK(maximal_indices_containing(s4, v4).size() == 4);  // 3 x D8 + A4
  CHECK_THROWS_AS(maximal_indices_containing(s4, s4.full_index()), ValidationError);

  int cyclic_count = 0;
  for (int c : cyclic_indices(s4)) {
    CHECK(s4.is_cyclic(c));
    ++cyclic_count;
  }
  CHECK(cyclic_count == 1 + 9 + 4 + 3);  // 1, <transpositions + double transps>, C3s, C4s

  // Normal-order positions number same-order normals from 1.
  CHECK(normal_order_position(s4, v4) == 1);
  SubgroupLattice v4l = build_lattice(build_group("elab:2:2"));
  std::vector<int> pos;
  for (int n : normal_indices(v4l))
    if (v4l.order(n) == 2) pos.push_back(normal_order_position(v4l, n));
  CHECK(pos == std::vector<int>{1, 2, 3});
}

TEST_CASE("intersect, join and closure agree with definitions") {
  SubgroupLattice lattice = build_lattice(build_group("dihedral:12"));
  for (int i = 0; i < lattice.size(); ++i)
    for (int j = 0; j < lattice.size(); ++j) {
      int meet = lattice.intersect(i, j);
      CHECK(lattice.members(meet) == (lattice.members(i) & lattice.members(j)));
      int join = lattice.join(i, j);
      CHECK(lattice.leq(i, join));
      CHECK(lattice.leq(j, join));
      // Minimality: every common upper bound contains the join.
      for (int z = 0; z < lattice.size(); ++z)
        if (lattice.leq(i, z) && lattice.leq(j, z)) CHECK(lattice.leq(join, z));
    }
  CHECK(lattice.closure_of(lattice.members(lattice.full_index())) ==
        lattice.members(lattice.full_index()));
}

TEST_CASE("product_set and closure helpers") {
  GroupTable s3 = build_group("sym:3");
  SubgroupLattice lattice = build_lattice(s3);
  // A3 times a reflection subgroup covers all of S3.
  int a3 = -1, c2 = -1;
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.order(i) == 3) a3 = i;
    if (lattice.order(i) == 2 && c2 < 0) c2 = i;
  }
  REQUIRE(a3 >= 0);
  REQUIRE(c2 >= 0);
  Bitset prod = product_set(s3, lattice.members(a3), lattice.members(c2));
  CHECK(prod.count() == 6);
  CHECK(is_closed_subgroup(s3, lattice.members(a3)));
  Bitset not_closed(6);
  not_closed.set(s3.identity());
  for (int x = 0; x < 6; ++x)
    if (x != s3.identity()) {
      not_closed.set(x);
      break;
    }
  // {e, x} is closed only if x is an involution; pick a 3-cycle instead.
  bool found_open = false;
  for (int x = 0; x < 6 && !found_open; ++x) {
    Bitset pair(6);
    pair.set(s3.identity());
    pair.set(x);
    if (x != s3.identity() && !is_closed_subgroup(s3, pair)) found_open = true;
  }
  CHECK(found_open);
}

TEST_CASE("lattice_from_members validates its input") {
  GroupTable d8 = build_group("dihedral:8");
  SubgroupLattice reference = build_lattice(d8);
  std::vector<Bitset> members;
  for (const Subgroup& s : reference.subgroups) members.push_back(s.members);

  SubgroupLattice rebuilt = lattice_from_members(build_group("dihedral:8"), members);
  CHECK(rebuilt.size() == reference.size());
  for (int i = 0; i < rebuilt.size(); ++i)
    for (int j = 0; j < rebuilt.size(); ++j)
      CHECK(rebuilt.mu(i, j) == reference.mu(i, j));

  // Dropping a subgroup breaks completeness.
  std::vector<Bitset> missing(members.begin(), members.end() - 2);
  missing.push_back(members.back());
  CHECK_THROWS_AS(lattice_from_members(build_group("dihedral:8"), missing),
                  ValidationError);

  // A non-closed member set is rejected.
  std::vector<Bitset> bad = members;
  Bitset open(8);
  open.set(d8.identity());
  for (int x = 0; x < 8; ++x)
    if (x != d8.identity() && !is_closed_subgroup(d8, Bitset::single(8, d8.identity()) | Bitset::single(8, x))) {
      open.set(x);
      break;
    }
  bad.push_back(open);
  CHECK_THROWS_AS(lattice_from_members(build_group("dihedral:8"), bad), ValidationError);

  // Duplicates are rejected.
  std::vector<Bitset> dup = members;
  dup.push_back(members[1]);
  CHECK_THROWS_AS(lattice_from_members(build_group("dihedral:8"), dup), ValidationError);

  // Dropping the join-irreducible <r> keeps the family pairwise meet/join
  // closed, so only the cyclic-seed check can catch it.
  std::vector<Bitset> no_r;
  for (const Subgroup& s : reference.subgroups)
    if (!(s.order == 4 && s.cyclic)) no_r.push_back(s.members);
  REQUIRE(no_r.size() == members.size() - 1);
  CHECK_THROWS_AS(lattice_from_members(build_group("dihedral:8"), no_r), ValidationError);
}

TEST_CASE("normal flags match conjugation") {
  for (const char* spec : {"sym:3", "dihedral:8", "alt:4", "quaternion:8"}) {
    CAPTURE(spec);
    SubgroupLattice lattice = build_lattice(build_group(spec));
    const GroupTable& g = lattice.group;
    for (int i = 0; i < lattice.size(); ++i) {
      bool invariant = true;
      for (int x = 0; x < g.order() && invariant; ++x)
        for (int s : lattice.members(i).indices())
          if (!lattice.members(i).test(g.conjugate(x, s))) {
            invariant = false;
            break;
          }
      CHECK(lattice.is_normal(i) == invariant);
    }
  }
}
