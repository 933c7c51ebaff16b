#include "doctest.h"

#include "ecp/catalog.hpp"
#include "ecp/conjperm.hpp"
#include "ecp/errors.hpp"
#include "ecp/symbolic.hpp"

using namespace ecp;

TEST_CASE("metacyclic normal-form arithmetic matches the enumerated group") {
  const MetacyclicParams p = MetacyclicParams::make(27, 9, 4);
  CHECK(p.s == 7); // 4 * 7 = 28 = 1 mod 27
  const Group g = Group::metacyclic(27, 9, 4);
  // spot-check the closed form against the enumerated table on all pairs
  auto to_value = [&](Elem e) { return MetaValue{e / 9, e % 9}; };
  auto to_index = [&](MetaValue v) { return static_cast<Elem>(v.i * 9 + v.j); };
  for (Elem x = 0; x < g.order(); x += 7) {
    for (Elem y = 0; y < g.order(); y += 5) {
      CHECK(to_index(mc_mul(p, to_value(x), to_value(y))) == g.mul(x, y));
    }
    CHECK(to_index(mc_inv(p, to_value(x))) == g.inv(x));
  }
}

TEST_CASE("big group: basic structure") {
  const BigGroup big = paper_big_group();
  CHECK(big.group.order() == 59049);
  CHECK(big.group.label(big.k) == "a^3b^2c^3d");
  CHECK(big.group.label(big.x) == "abcd");
  CHECK(big.group.element_order(big.k) == 9);
  // the defining relations hold symbolically
  CHECK(big.group.conjugate(big.a, big.b) == big.group.pow(big.a, 4));
  CHECK(big.group.conjugate(big.c, big.d) == big.group.pow(big.c, 4));
  // a,b commute with c,d (direct factors)
  CHECK(big.group.mul(big.a, big.c) == big.group.mul(big.c, big.a));
  CHECK(big.group.mul(big.b, big.d) == big.group.mul(big.d, big.b));
}

TEST_CASE("big group: c^9 is central") {
  const BigGroup big = paper_big_group();
  CHECK(big.group.commutes_with_generators(big.group.pow(big.c, 9)));
  CHECK_FALSE(big.group.commutes_with_generators(big.c));
  CHECK_FALSE(big.group.commutes_with_generators(big.k));
}

TEST_CASE("big group: <k> lists exactly the nine recorded members, in power order") {
  const BigGroup big = paper_big_group();
  const auto closure = symbolic_closure(big.group, std::vector<SymValue>{big.k});
  const auto expected = paper_big_group_k_labels();
  REQUIRE(closure.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    // the recorded labels parse to the closure members, element for element
    CHECK(big.group.parse(expected[i]) == closure[i]);
    CHECK(closure[i] == big.group.pow(big.k, static_cast<long long>(i)));
  }
  // canonical rendering round-trips through parse
  for (const auto& v : closure) CHECK(big.group.parse(big.group.label(v)) == v);
}

TEST_CASE("big group: <k^x> = <a^15 b^2 c^9 d> lists the nine recorded members") {
  const BigGroup big = paper_big_group();
  const SymValue kx = big.group.conjugate(big.k, big.x);
  CHECK(big.group.label(kx) == "a^15b^2c^9d");
  const auto closure = symbolic_closure(big.group, std::vector<SymValue>{kx});
  const auto expected = paper_big_group_kx_labels();
  REQUIRE(closure.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(big.group.parse(expected[i]) == closure[i]);
}

TEST_CASE("big group: the recorded spot product") {
  const BigGroup big = paper_big_group();
  const SymValue u = big.group.parse("a^21b^14c^21d^7");
  const SymValue v = big.group.parse("a^6b^8c^9d^4");
  CHECK(big.group.label(big.group.mul(u, v)) == "a^18b^4c^3d^2");
}

TEST_CASE("symbolic element words: parse errors and identity forms") {
  const BigGroup big = paper_big_group();
  CHECK(big.group.parse("e") == big.group.identity());
  CHECK(big.group.parse("a^27") == big.group.identity());
  CHECK(big.group.parse("b^10") == big.group.pow(big.b, 1));
  CHECK_THROWS_AS(big.group.parse("q^2"), ParseError);
  CHECK_THROWS_AS(big.group.parse("a^"), ParseError);
  CHECK_THROWS_AS(big.group.generator("z"), InvalidArgument);
}

TEST_CASE("symbolic closure of the four generators has the generators early") {
  const BigGroup big = paper_big_group();
  // <a, c> is the abelian 27x27 subgroup; closure discovers 729 values
  const auto closure = symbolic_closure(big.group, std::vector<SymValue>{big.a, big.c});
  CHECK(closure.size() == 729);
  CHECK(closure[0] == big.group.identity());
  CHECK(closure[1] == big.a);
  CHECK(closure[2] == big.c);
}
