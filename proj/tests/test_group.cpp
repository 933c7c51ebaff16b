#include "doctest.h"

#include <numeric>
#include <random>

#include "ecp/catalog.hpp"
#include "ecp/errors.hpp"
#include "ecp/group.hpp"

using namespace ecp;

namespace {

// exhaustive identity/inverse laws plus sampled associativity
void check_group_axioms(const Group& g, std::uint32_t assoc_samples = 10000) {
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
    CHECK(g.mul(x, g.inv(x)) == 0);
    CHECK(g.mul(g.inv(x), x) == 0);
  }
  std::mt19937 rng(42);
  for (std::uint32_t i = 0; i < assoc_samples; ++i) {
    const Elem a = rng() % g.order(), b = rng() % g.order(), c = rng() % g.order();
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      REQUIRE(false);
    }
  }
}

} // namespace

TEST_CASE("enumeration from generators: cyclic group of order 3") {
  const Group g = Group::from_permutations({parse_cycles("(1,2,3)", 3)});
  CHECK(g.order() == 3);
  CHECK(g.identity() == 0);
  check_group_axioms(g);
}

TEST_CASE("enumeration cap raises a budget error") {
  CHECK_THROWS_WITH_AS(Group::from_permutations({parse_cycles("(1,2,3,4,5,6,7)", 7)}, "", 5),
                       doctest::Contains("order cap exceeded"), BudgetError);
}

TEST_CASE("the order-81 group enumerates to 81 elements, deterministically") {
  const Group g = paper_81_10();
  CHECK(g.order() == 81);
  // element 1 is the first generator, element 2 the second
  CHECK(g.generators() == std::vector<Elem>{1, 2});
  const Group h = paper_81_10();
  for (Elem x = 0; x < g.order(); ++x)
    CHECK(g.label(x) == h.label(x));
  check_group_axioms(g);
}

TEST_CASE("the order-128 group enumerates to 128 elements") {
  const Group g = paper_128_1760();
  CHECK(g.order() == 128);
  CHECK(p_group_prime(g) == 2);
  check_group_axioms(g);
}

TEST_CASE("metacyclic(27,9,4): order, relation, generator orders") {
  const Group g = Group::metacyclic(27, 9, 4);
  REQUIRE(g.order() == 243);
  const Elem a = g.generators()[0], b = g.generators()[1];
  CHECK(g.label(a) == "a");
  CHECK(g.label(b) == "b");
  CHECK(g.element_order(a) == 27);
  CHECK(g.element_order(b) == 9);
  // defining relation b^-1 a b = a^4
  CHECK(g.conjugate(a, b) == g.power(a, 4));
  // and its commutator form [a, b] = a^3
  CHECK(g.commutator(a, b) == g.power(a, 3));
  check_group_axioms(g);
}

TEST_CASE("metacyclic(27,9,4): worked products") {
  const Group g = Group::metacyclic(27, 9, 4);
  const Elem k = g.find_label("a^3b^2").value();
  CHECK(g.label(g.power(k, 2)) == "a^15b^4");
  const Elem u = g.find_label("a^15b^2").value();
  CHECK(g.label(g.mul(u, k)) == "b^4");
}

TEST_CASE("metacyclic parameter validation") {
  CHECK_THROWS_AS(Group::metacyclic(27, 9, 3), InvalidArgument);  // gcd(3,27) != 1
  CHECK_THROWS_AS(Group::metacyclic(27, 9, 2), InvalidArgument);  // 2^9 != 1 mod 27
  CHECK_THROWS_AS(Group::metacyclic(0, 9, 1), InvalidArgument);
  CHECK(Group::metacyclic(1, 1, 1).order() == 1);
}

TEST_CASE("direct products: order, identity, exponent lcm") {
  const Group c2 = cyclic(2), c3 = cyclic(3, "b");
  const Group g = Group::direct_product(c2, c3);
  CHECK(g.order() == 6);
  CHECK(g.exponent() == 6);
  CHECK(g.label(0) == "e");
  check_group_axioms(g);

  const Group m = Group::metacyclic(27, 9, 4);
  const Group big = Group::direct_product(m, m);
  CHECK(big.order() == 59049);
  CHECK(big.exponent() == std::lcm(m.exponent(), m.exponent()));
}

TEST_CASE("conjugation and commutator conventions") {
  const Group s3 = symmetric(3);
  for (Elem g = 0; g < s3.order(); ++g) {
    CHECK(s3.conjugate(g, 0) == g);
    CHECK(s3.commutator(g, g) == 0);
  }
  const Group c6 = cyclic(6);
  for (Elem g = 0; g < c6.order(); ++g)
    for (Elem x = 0; x < c6.order(); ++x) {
      CHECK(c6.conjugate(g, x) == g);
      CHECK(c6.commutator(g, x) == 0);
    }
}

TEST_CASE("subgroup_closure reproduces spans") {
  const Group s3 = symmetric(3);
  CHECK(subgroup_closure(s3, std::vector<Elem>{}).members == std::vector<Elem>{0});
  const Subgroup whole = subgroup_closure(s3, s3.generators());
  CHECK(whole.members.size() == 6);
}

TEST_CASE("center and derived subgroup") {
  const Group s3 = symmetric(3);
  CHECK(center(s3).order() == 1);
  CHECK(derived_subgroup(s3).order() == 3);

  const Group c6 = cyclic(6);
  CHECK(center(c6).order() == 6);
  CHECK(derived_subgroup(c6).order() == 1);

  // derived subgroup of metacyclic(27,9,4) is <a^3> of order 9
  const Group m = Group::metacyclic(27, 9, 4);
  const Subgroup d = derived_subgroup(m);
  CHECK(d.order() == 9);
  const Elem a3 = m.find_label("a^3").value();
  CHECK(d.contains(a3));
  CHECK(subgroup_closure(m, std::vector<Elem>{a3}).members == d.members);
  // normality: closed under conjugation by the generators
  for (Elem x : m.generators())
    for (Elem e : d.members) CHECK(d.contains(m.conjugate(e, x)));
}

TEST_CASE("derived subgroup agrees with the all-pairs commutator closure on small groups") {
  for (const Group& g : {symmetric(4), dihedral(4), quaternion8(), heisenberg(3)}) {
    std::vector<Elem> comms;
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
    CHECK(subgroup_closure(g, comms).members == derived_subgroup(g).members);
  }
}

TEST_CASE("agemo: contained in the subgroup, trivial at exponent p") {
  const Group h3 = heisenberg(3);
  const Subgroup whole{h3, [&] {
                         std::vector<Elem> m(h3.order());
                         std::iota(m.begin(), m.end(), 0u);
                         return m;
                       }(),
                       h3.generators()};
  CHECK(agemo(whole, 3).members == std::vector<Elem>{0}); // exponent 3
  const Group m = Group::metacyclic(27, 9, 4);
  const Subgroup d = derived_subgroup(m); // cyclic of order 9
  const Subgroup cubes = agemo(d, 3);
  CHECK(cubes.order() == 3);
  for (Elem e : cubes.members) CHECK(d.contains(e));
}

TEST_CASE("nilpotency via the ascending central series") {
  CHECK(is_nilpotent(cyclic(12)));
  CHECK(is_nilpotent(heisenberg(3)));
  CHECK(is_nilpotent(paper_81_10()));
  CHECK_FALSE(is_nilpotent(symmetric(3)));
  CHECK_FALSE(is_nilpotent(symmetric(4)));
}

TEST_CASE("p-group detection") {
  CHECK(p_group_prime(paper_81_10()) == 3);
  CHECK(p_group_prime(quaternion8()) == 2);
  CHECK_FALSE(p_group_prime(cyclic(6)).has_value());
  CHECK_FALSE(p_group_prime(cyclic(1)).has_value());
}

TEST_CASE("sylow decomposition") {
  const Group c6 = cyclic(6);
  auto sylows = sylow_decompose(c6);
  REQUIRE(sylows.size() == 2);
  CHECK(sylows[0].order() == 2);
  CHECK(sylows[1].order() == 3);

  const Group s4 = symmetric(4);
  sylows = sylow_decompose(s4);
  REQUIRE(sylows.size() == 2);
  CHECK(sylows[0].order() == 8);
  CHECK(sylows[1].order() == 3);

  const Group mixed = Group::direct_product(heisenberg(3), cyclic(2, "w"));
  sylows = sylow_decompose(mixed);
  REQUIRE(sylows.size() == 2);
  CHECK(sylows[0].order() == 2);
  CHECK(sylows[1].order() == 27);
}

TEST_CASE("big_omega counts prime divisors with multiplicity") {
  CHECK(big_omega(1) == 0);
  CHECK(big_omega(12) == 3);
  CHECK(big_omega(243) == 5);
  CHECK(big_omega(128) == 7);
}

TEST_CASE("element orders divide the group order (Lagrange for cyclic subgroups)") {
  for (const Group& g : {symmetric(4), paper_128_1760(), Group::metacyclic(27, 9, 4)})
    for (Elem x = 0; x < g.order(); ++x) CHECK(g.order() % g.element_order(x) == 0);
}

TEST_CASE("cross-group subgroups are rejected") {
  const Group a = symmetric(3);
  const Group b = symmetric(3); // equal but distinct group value
  const Subgroup h = trivial_subgroup(b);
  CHECK_THROWS_AS(require_same_group(a, h, "test"), InvalidArgument);
  CHECK_NOTHROW(require_same_group(b, h, "test"));
}

TEST_CASE("labels: identity prints e in structured groups, cycle form in permutation groups") {
  CHECK(Group::metacyclic(27, 9, 4).label(0) == "e");
  CHECK(symmetric(3).label(0) == "()");
  const Group q8 = quaternion8();
  CHECK(q8.label(0) == "1");
  std::vector<std::string> labels;
  for (Elem x = 0; x < q8.order(); ++x) labels.push_back(q8.label(x));
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"-1", "-i", "-j", "-k", "1", "i", "j", "k"});
}
