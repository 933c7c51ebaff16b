#include "doctest.h"

#include <algorithm>
#include <set>

#include "ecp/catalog.hpp"
#include "ecp/errors.hpp"
#include "ecp/lattice.hpp"
#include "subgroup_oracle.hpp"

using namespace ecp;

namespace {

void check_matches_oracle(const Group& g) {
  const auto oracle = ecp::testing::oracle_all_subgroups(g);
  const auto computed = all_subgroups(g);
  std::set<std::vector<Elem>> got;
  for (const Subgroup& s : computed) got.insert(s.members);
  CHECK(got.size() == computed.size()); // no duplicates
  CHECK(got == oracle);
}

} // namespace

TEST_CASE("all_subgroups matches the powerset oracle on every catalog group of order <= 24") {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.symbolic_only || entry.order > 24) continue;
    CAPTURE(entry.name);
    check_matches_oracle(entry.build());
  }
}

TEST_CASE("all_subgroups matches the powerset oracle at order 27") {
  check_matches_oracle(heisenberg(3));
  check_matches_oracle(elementary_abelian(3, 3));
}

TEST_CASE("cyclic_subgroups: trivial group and C6") {
  const Group t = cyclic(1);
  REQUIRE(cyclic_subgroups(t).size() == 1);
  CHECK(cyclic_subgroups(t)[0].members == std::vector<Elem>{0});

  const Group c6 = cyclic(6);
  CHECK(cyclic_subgroups(c6).size() == 4); // orders 1, 2, 3, 6
  CHECK(all_subgroups(c6).size() == 4);
}

TEST_CASE("cyclic_subgroups of S3: five of them, none of order 6") {
  const Group s3 = symmetric(3);
  const auto cyc = cyclic_subgroups(s3);
  REQUIRE(cyc.size() == 5);
  std::vector<std::size_t> orders;
  for (const Subgroup& s : cyc) orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3});
}

TEST_CASE("subgroup counts: S3=6, Q8=6, D4=10, S4=30, E(2^3)=16") {
  CHECK(all_subgroups(symmetric(3)).size() == 6);
  CHECK(all_subgroups(quaternion8()).size() == 6);
  CHECK(all_subgroups(dihedral(4)).size() == 10);
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(all_subgroups(elementary_abelian(2, 3)).size() == 16);
}

TEST_CASE("every produced subgroup satisfies the subgroup invariants") {
  for (const Group& g : {symmetric(4), dihedral(4), paper_81_10()}) {
    for (const Subgroup& s : all_subgroups(g)) {
      REQUIRE(!s.members.empty());
      CHECK(s.members.front() == 0);
      CHECK(std::is_sorted(s.members.begin(), s.members.end()));
      CHECK(g.order() % s.members.size() == 0); // Lagrange
      for (Elem a : s.members) {
        CHECK(s.contains(g.inv(a)));
        for (Elem b : s.members) CHECK(s.contains(g.mul(a, b)));
      }
      for (Elem gen : s.generators) CHECK(s.contains(gen));
      CHECK(subgroup_closure(g, s.generators).members == s.members);
    }
  }
}

TEST_CASE("conjugacy classes: abelian groups have singleton classes") {
  const Group c12 = cyclic(12);
  for (const SubgroupClass& cls : conjugacy_classes_of_subgroups(c12))
    CHECK(cls.conjugates.size() == 1);
}

TEST_CASE("conjugacy classes of S3: sizes 1,3,1,1 summing to the subgroup count") {
  const Group s3 = symmetric(3);
  const auto classes = conjugacy_classes_of_subgroups(s3);
  REQUIRE(classes.size() == 4);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const SubgroupClass& cls : classes) {
    sizes.push_back(cls.conjugates.size());
    total += cls.conjugates.size();
    CHECK(cls.representative.members == cls.conjugates.front().members);
    for (const Subgroup& c : cls.conjugates)
      CHECK(c.order() == cls.representative.order());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 3});
  CHECK(total == all_subgroups(s3).size());
}

TEST_CASE("class sizes always partition the subgroup list; orbit sizes divide |G|") {
  for (const Group& g : {symmetric(4), dihedral(4), quaternion8(), heisenberg(3)}) {
    std::size_t total = 0;
    for (const SubgroupClass& cls : conjugacy_classes_of_subgroups(g)) {
      total += cls.conjugates.size();
      CHECK(g.order() % cls.conjugates.size() == 0);
    }
    CHECK(total == all_subgroups(g).size());
  }
}

TEST_CASE("conjugates: normal subgroups sit alone; <(1,2)> in S3 has three") {
  const Group s3 = symmetric(3);
  const Subgroup a3 = derived_subgroup(s3);
  CHECK(conjugates(s3, a3).size() == 1);

  const Elem t = s3.find_permutation(parse_cycles("(1,2)", 3)).value();
  const Subgroup h = subgroup_closure(s3, std::vector<Elem>{t});
  const auto orbit = conjugates(s3, h);
  CHECK(orbit.size() == 3);
  CHECK(orbit.front().members == h.members);
  // orbit sizes divide the group order
  CHECK(s3.order() % orbit.size() == 0);
}

TEST_CASE("lattice budget is enforced with a clean error") {
  const Group m = Group::metacyclic(27, 9, 4);
  CHECK_THROWS_WITH_AS(all_subgroups(m, LatticeOptions{.max_group_order = 100}),
                       doctest::Contains("lattice budget exceeded"), BudgetError);
  CHECK_NOTHROW(all_subgroups(m));
}

TEST_CASE("frozen lattice sizes for the heavy catalog groups") {
  // frozen from an independent implementation of the same definitions
  CHECK(all_subgroups(Group::metacyclic(27, 9, 4)).size() == 36);
  CHECK(cyclic_subgroups(Group::metacyclic(27, 9, 4)).size() == 26);
  const Group g81 = paper_81_10();
  CHECK(all_subgroups(g81).size() == 23);
  CHECK(cyclic_subgroups(g81).size() == 17);
}

TEST_CASE("all_subgroups is deterministic across runs") {
  const Group g = dihedral(4);
  const auto first = all_subgroups(g);
  const auto second = all_subgroups(g);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].members == second[i].members);
}
