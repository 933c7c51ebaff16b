#include "ecp/catalog.hpp"

#include <array>
#include <map>
#include <numeric>

#include "ecp/conjperm.hpp"
#include "ecp/errors.hpp"
#include "ecp/pgroup.hpp"

namespace ecp {

namespace {

// BFS enumeration of a small structured group given by value arithmetic;
// materializes the full multiplication table.
template <class V, class MulFn, class LabelFn>
Group enumerate_values(const std::vector<V>& gens, const V& identity, MulFn mul, LabelFn label_of,
                       std::string name) {
  std::vector<V> elems{identity};
  std::map<V, Elem> index{{identity, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const V x = elems[head];
    for (const V& g : gens) {
      V y = mul(x, g);
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  if (n > 4096) throw BudgetError("structured enumeration too large for a table (" +
                                  std::to_string(n) + ")");
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(mul(elems[i], elems[j]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const V& v : elems) labels.push_back(label_of(v));
  std::vector<Elem> gen_idx;
  for (const V& g : gens) gen_idx.push_back(index.at(g));
  return Group::from_table(std::move(table), std::move(gen_idx), std::move(labels),
                           std::move(name));
}

std::string power_label(const std::string& letter, std::uint64_t e) {
  if (e == 0) return "";
  if (e == 1) return letter;
  return letter + "^" + std::to_string(e);
}

} // namespace

Group cyclic(std::uint64_t n, const std::string& letter) {
  return Group::metacyclic(n, 1, 1, letter, "_", "C" + std::to_string(n));
}

Group elementary_abelian(std::uint64_t p, std::uint32_t rank) {
  static const char* letters = "abcdefgh";
  if (rank == 0 || rank > 8) throw InvalidArgument("elementary_abelian supports rank 1..8");
  const std::string name = "E(" + std::to_string(p) + "^" + std::to_string(rank) + ")";
  Group g = cyclic(p, std::string(1, letters[0]));
  for (std::uint32_t i = 1; i < rank; ++i)
    g = Group::direct_product(g, cyclic(p, std::string(1, letters[i])), kDefaultEnumerationCap,
                              i + 1 == rank ? name : "");
  return g;
}

Group dihedral(std::uint32_t n) {
  if (n < 3) throw InvalidArgument("dihedral(n) needs n >= 3");
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = i == 0 ? 0 : n - i;
  }
  return Group::from_permutations({Perm(std::move(rot)), Perm(std::move(refl))},
                                  "D" + std::to_string(n));
}

Group quaternion8() {
  // elements encoded (axis, sign): index = axis*2 + sign; axis 0 is scalar
  using Q = std::pair<int, int>;
  auto mul = [](Q x, Q y) {
    auto [ax, sx] = x;
    auto [ay, sy] = y;
    int sign = sx ^ sy;
    int axis;
    if (ax == 0) axis = ay;
    else if (ay == 0) axis = ax;
    else if (ax == ay) {
      axis = 0;
      sign ^= 1;
    } else {
      axis = 6 - ax - ay; // the remaining axis of {1,2,3}
      const bool forward = (ax == 1 && ay == 2) || (ax == 2 && ay == 3) || (ax == 3 && ay == 1);
      if (!forward) sign ^= 1;
    }
    return Q{axis, sign};
  };
  auto label = [](Q x) {
    static const char* axes = "1ijk";
    std::string s = x.second ? "-" : "";
    return s + axes[x.first];
  };
  return enumerate_values<Q>({{1, 0}, {2, 0}}, {0, 0}, mul, label, "Q8");
}

Group symmetric(std::uint32_t n) {
  if (n == 0 || n > 4) throw InvalidArgument("symmetric(n) supports n in 1..4");
  if (n == 1) return Group::from_permutations({Perm::identity(1)}, "S1");
  std::vector<Perm> gens{parse_cycles("(1,2)", n)};
  if (n > 2) {
    std::string big = "(1";
    for (std::uint32_t i = 2; i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    gens.push_back(parse_cycles(big, n));
  }
  return Group::from_permutations(std::move(gens), "S" + std::to_string(n));
}

Group heisenberg(std::uint64_t p) {
  if (p < 2 || p > 13) throw InvalidArgument("heisenberg(p) supports primes 2..13");
  using T = std::array<std::uint64_t, 3>;
  auto mul = [p](const T& u, const T& v) {
    return T{(u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p};
  };
  auto label = [p](const T& u) {
    // normal form x^i y^j z^k with k = u2 - u0*u1
    const std::uint64_t k = (u[2] + p * p - u[0] * u[1] % p) % p;
    std::string s = power_label("x", u[0]) + power_label("y", u[1]) + power_label("z", k);
    return s.empty() ? std::string("e") : s;
  };
  return enumerate_values<T>({{1, 0, 0}, {0, 1, 0}}, {0, 0, 0}, mul, label,
                             "Heis(" + std::to_string(p) + ")");
}

// -- paper groups -------------------------------------------------------------

namespace {

// Generator strings stored character-for-character as displayed (including
// one mid-cycle space, which the parser's comma-whitespace rule accepts).
const std::string kGen81A =
    "(1,2,6,5,9,18,15,24,37)(3,20,70,12,41,79,29,62,53)(4,23,57,14,44,17,31,8,36)"
    "(7,33,66,21,54,27,42,71,48)(10,58,78,26,73,51,47,80,68)(11,61,16,28,75,34,49,40,55)"
    "(13,63,56,30,22,72,50,43,35)(19,67,25,39,77,46,60,81,65)(32,64,38,52, 76,59,69,45,74)";
const std::string kGen81B =
    "(1,3,10,15,29,47,5,12,26)(2,7,19,24,42,60,9,21,39)(4,11,25,31,49,65,14,28,46)"
    "(6,16,32,37,55,69,18,34,52)(8,20,38,44,62,74,23,41,59)(13,27,45,50,66,76,30,48,64)"
    "(17,33,51,57,71,78,36,54,68)(22,40,58,63,75,80,43,61,73)(35,53,67,72,79,81,56,70,77)";
const std::string kDefect81 =
    "(1,5,15)(2,9,24)(3,12,29)(4,14,31)(6,18,37)(7,21,42)(8,23,44)(10,26,47)"
    "(11,28,49)(13,30,50)(16,34,55)(17,36,57)(19,39,60)(20,41,62)(22,43,63)"
    "(25,46,65)(27,48,66)(32,52,69)(33,54,71)(35,56,72)(38,59,74)(40,61,75)"
    "(45,64,76)(51,68,78)(53,70,79)(58,73,80)(67,77,81)";

const std::string kGen128A =
    "(2,3)(6,7)(9,12)(13,16)(17,32,20,29)(18,30,19,31)(21,25,24,28)(22,27,23,26)";
const std::string kGen128B =
    "(1,17)(2,18)(3,19)(4,20)(5,21)(6,22)(7,23)(8,24)"
    "(9,25)(10,26)(11,27)(12,28)(13,29)(14,30)(15,31)(16,32)";
const std::string kGen128C =
    "(1,2)(3,4)(5,7)(6,8)(9,10)(11,12)(13,15)(14,16)"
    "(17,18)(19,20)(21,23)(22,24)(25,26)(27,28)(29,31)(30,32)";
const std::string kGen128D =
    "(1,8,4,5)(2,7,3,6)(9,16,12,13)(10,15,11,14)"
    "(17,28,20,25)(18,27,19,26)(21,32,24,29)(22,31,23,30)";

} // namespace

const std::string& paper_81_10_generator_a() { return kGen81A; }
const std::string& paper_81_10_generator_b() { return kGen81B; }
const std::string& paper_81_10_regularity_defect() { return kDefect81; }

Group paper_81_10() {
  return Group::from_permutations({parse_cycles(kGen81A, 81), parse_cycles(kGen81B, 81)},
                                  "SmallGroup(81,10)");
}

Group paper_128_1760() {
  return Group::from_permutations({parse_cycles(kGen128A, 32), parse_cycles(kGen128B, 32),
                                   parse_cycles(kGen128C, 32), parse_cycles(kGen128D, 32)},
                                  "SmallGroup(128,1760)");
}

BigGroup paper_big_group() {
  const MetacyclicParams params = MetacyclicParams::make(27, 9, 4);
  SymbolicProduct group({params, params}, {{{"a", "b"}}, {{"c", "d"}}},
                        "metacyclic(27,9,4) x metacyclic(27,9,4)");
  BigGroup big{group,
               group.generator("a"),
               group.generator("b"),
               group.generator("c"),
               group.generator("d"),
               group.parse("a^3b^2c^3d"),
               group.parse("abcd")};
  return big;
}

std::vector<std::string> paper_big_group_k_labels() {
  return {"e",
          "a^3b^2c^3d",
          "a^15b^4c^24d^2",
          "a^9b^6c^9d^3",
          "a^12b^8c^12d^4",
          "a^24b^10c^6d^5",
          "a^18b^12c^18d^6",
          "a^21b^14c^21d^7",
          "a^6b^16c^15d^8"};
}

std::vector<std::string> paper_big_group_kx_labels() {
  return {"e",
          "a^15b^2c^9d",
          "a^21b^4c^18d^2",
          "a^18b^6c^0d^3",
          "a^6b^8c^9d^4",
          "a^12b^10c^18d^5",
          "a^9b^12c^0d^6",
          "a^24b^14c^9d^7",
          "a^3b^16c^18d^8"};
}

// -- catalog ------------------------------------------------------------------

std::string evaluate_property(const Group& g, const std::string& property) {
  auto boolean = [](bool b) { return std::string(b ? "true" : "false"); };
  if (property == "order") return std::to_string(g.order());
  if (property == "exponent") return std::to_string(g.exponent());
  if (property == "nilpotent") return boolean(is_nilpotent(g));
  if (property == "ecp") return boolean(is_ecp(g).holds);
  if (property == "ccp") return boolean(is_ccp(g).holds);
  if (property == "iwasawa") return boolean(all_subgroups_permutable(g));
  if (property == "regular") return boolean(is_regular(g).regular);
  if (property == "center_order") return std::to_string(center(g).order());
  if (property == "derived_order") return std::to_string(derived_subgroup(g).order());
  if (property == "derived_exponent") {
    const Subgroup d = derived_subgroup(g);
    std::uint64_t e = 1;
    for (Elem m : d.members) e = std::lcm(e, g.element_order(m));
    return std::to_string(e);
  }
  if (property == "subgroups") return std::to_string(all_subgroups(g).size());
  if (property == "cyclic_subgroups") return std::to_string(cyclic_subgroups(g).size());
  throw InvalidArgument("unknown golden property: " + property);
}

namespace {

GroupSpec permutation_export(const Group& g) {
  std::vector<std::string> gens;
  std::uint32_t degree = 1;
  for (Elem idx : g.generators()) {
    const Perm* p = g.permutation(idx);
    if (!p) throw InvalidArgument("group is not permutation-realized");
    degree = p->degree();
    gens.push_back(format_cycles(*p));
  }
  return GroupSpec::permutation_spec(degree, std::move(gens));
}

// Right-regular permutation representation: g acts as i -> i*g on indices,
// giving a faithful degree-|G| realization of any table group.
GroupSpec regular_export(const Group& g) {
  std::vector<std::string> gens;
  for (Elem gen : g.generators()) {
    std::vector<std::uint32_t> image(g.order());
    for (Elem i = 0; i < g.order(); ++i) image[i] = g.mul(i, gen);
    gens.push_back(format_cycles(Perm(std::move(image))));
  }
  return GroupSpec::permutation_spec(static_cast<std::uint32_t>(g.order()), std::move(gens));
}

GroupSpec cyclic_spec(std::uint64_t n) { return GroupSpec::metacyclic_spec(n, 1, 1); }

GroupSpec elementary_abelian_spec(std::uint64_t p, std::uint32_t rank) {
  std::vector<GroupSpec> factors(rank, cyclic_spec(p));
  if (rank == 1) return cyclic_spec(p);
  return GroupSpec::direct_product_spec(std::move(factors));
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;

  auto add = [&out](CatalogEntry entry) { out.push_back(std::move(entry)); };

  add({.name = "trivial",
       .summary = "the trivial group",
       .order = 1,
       .build = [] { return Group::from_permutations({Perm::identity(1)}, "trivial"); },
       .spec = [] { return GroupSpec::permutation_spec(1, {"()"}); },
       .golden = {{"order", "1", "definition"}, {"ecp", "true", "definition"}}});

  for (std::uint64_t n : {2ull, 3ull, 4ull, 6ull, 12ull}) {
    add({.name = "c" + std::to_string(n),
         .summary = "cyclic group of order " + std::to_string(n),
         .order = n,
         .build = [n] { return cyclic(n); },
         .spec = [n] { return cyclic_spec(n); },
         .golden = {{"order", std::to_string(n), "definition"},
                    {"exponent", std::to_string(n), "definition"},
                    {"ecp", "true", "definition"},
                    {"nilpotent", "true", "definition"}}});
  }

  struct ElemAb {
    std::uint64_t p;
    std::uint32_t rank;
  };
  for (ElemAb ea : {ElemAb{2, 3}, ElemAb{3, 2}, ElemAb{3, 3}, ElemAb{3, 4}}) {
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < ea.rank; ++i) order *= ea.p;
    add({.name = "elem-" + std::to_string(ea.p) + "-" + std::to_string(ea.rank),
         .summary = "elementary abelian group of order " + std::to_string(order),
         .order = order,
         .build = [ea] { return elementary_abelian(ea.p, ea.rank); },
         .spec = [ea] { return elementary_abelian_spec(ea.p, ea.rank); },
         .golden = {{"order", std::to_string(order), "definition"},
                    {"exponent", std::to_string(ea.p), "definition"},
                    {"ecp", "true", "definition"}}});
  }

  add({.name = "s3",
       .summary = "symmetric group on 3 points",
       .order = 6,
       .build = [] { return symmetric(3); },
       .spec = [] { return permutation_export(symmetric(3)); },
       .golden = {{"order", "6", "definition"},
                  {"nilpotent", "false", "computed"},
                  {"ecp", "false", "computed"},
                  {"ccp", "false", "computed"},
                  {"iwasawa", "false", "computed"},
                  {"subgroups", "6", "computed"},
                  {"cyclic_subgroups", "5", "computed"}}});

  add({.name = "s4",
       .summary = "symmetric group on 4 points",
       .order = 24,
       .build = [] { return symmetric(4); },
       .spec = [] { return permutation_export(symmetric(4)); },
       .golden = {{"order", "24", "definition"},
                  {"nilpotent", "false", "computed"},
                  {"ecp", "false", "computed"},
                  {"subgroups", "30", "computed"},
                  {"cyclic_subgroups", "17", "computed"}}});

  add({.name = "d4",
       .summary = "dihedral group of order 8",
       .order = 8,
       .build = [] { return dihedral(4); },
       .spec = [] { return permutation_export(dihedral(4)); },
       .golden = {{"order", "8", "definition"},
                  {"ecp", "true", "computed"},
                  {"ccp", "true", "computed"},
                  {"iwasawa", "false", "computed"},
                  {"regular", "false", "computed"},
                  {"subgroups", "10", "computed"},
                  {"center_order", "2", "computed"}}});

  add({.name = "q8",
       .summary = "quaternion group of order 8",
       .order = 8,
       .build = [] { return quaternion8(); },
       .spec = [] { return regular_export(quaternion8()); },
       .golden = {{"order", "8", "definition"},
                  {"ecp", "true", "computed"},
                  {"regular", "false", "computed"},
                  {"subgroups", "6", "computed"},
                  {"center_order", "2", "computed"}}});

  add({.name = "heis-3",
       .summary = "Heisenberg group of order 27 (exponent 3)",
       .order = 27,
       .build = [] { return heisenberg(3); },
       .spec = [] { return regular_export(heisenberg(3)); },
       .golden = {{"order", "27", "definition"},
                  {"exponent", "3", "computed"},
                  {"ecp", "true", "computed"},
                  {"regular", "true", "computed"},
                  {"subgroups", "19", "computed"},
                  {"cyclic_subgroups", "14", "computed"}}});

  add({.name = "heis-3-x-c3",
       .summary = "Heisenberg(3) x C3, order 81, exponent 3",
       .order = 81,
       .build = [] { return Group::direct_product(heisenberg(3), cyclic(3, "w")); },
       .spec =
           [] {
             return GroupSpec::direct_product_spec({regular_export(heisenberg(3)), cyclic_spec(3)});
           },
       .golden = {{"order", "81", "definition"},
                  {"exponent", "3", "computed"},
                  {"ecp", "true", "computed"}}});

  add({.name = "heis-3-x-c2",
       .summary = "Heisenberg(3) x C2, order 54 (mixed primes)",
       .order = 54,
       .build = [] { return Group::direct_product(heisenberg(3), cyclic(2, "w")); },
       .spec =
           [] {
             return GroupSpec::direct_product_spec({regular_export(heisenberg(3)), cyclic_spec(2)});
           },
       .golden = {{"order", "54", "definition"},
                  {"nilpotent", "true", "computed"},
                  {"ecp", "true", "computed"}}});

  add({.name = "heis-3-x-heis-3",
       .summary = "Heisenberg(3) x Heisenberg(3), order 729 (slow sweeps)",
       .slow = true,
       .order = 729,
       .build = [] { return Group::direct_product(heisenberg(3), heisenberg(3)); },
       .spec =
           [] {
             return GroupSpec::direct_product_spec(
                 {regular_export(heisenberg(3)), regular_export(heisenberg(3))});
           },
       .golden = {{"order", "729", "definition"},
                  {"exponent", "3", "computed"},
                  {"ecp", "true", "computed"}}});

  add({.name = "metacyclic-27-9-4",
       .summary = "metacyclic(27,9,4): a^27 = b^9 = 1, b^-1 a b = a^4 (order 243)",
       .order = 243,
       .build = [] { return Group::metacyclic(27, 9, 4); },
       .spec = [] { return GroupSpec::metacyclic_spec(27, 9, 4); },
       .golden = {{"order", "243", "definition"},
                  {"exponent", "27", "computed"},
                  {"iwasawa", "true", "published"},
                  {"ecp", "true", "published"},
                  {"regular", "true", "computed"},
                  {"derived_order", "9", "computed"},
                  {"center_order", "3", "computed"},
                  {"subgroups", "36", "computed"},
                  {"cyclic_subgroups", "26", "computed"}}});

  add({.name = "paper-81-10",
       .summary = "SmallGroup(81,10): an ECP 3-group that is not regular",
       .order = 81,
       .build = [] { return paper_81_10(); },
       .spec = [] { return GroupSpec::permutation_spec(81, {kGen81A, kGen81B}); },
       .golden = {{"order", "81", "published"},
                  {"exponent", "9", "computed"},
                  {"ecp", "true", "published"},
                  {"ccp", "true", "published"},
                  {"regular", "false", "published"},
                  {"derived_order", "9", "computed"},
                  {"derived_exponent", "3", "published"},
                  {"nilpotent", "true", "definition"},
                  {"subgroups", "23", "computed"},
                  {"cyclic_subgroups", "17", "computed"}}});

  add({.name = "paper-128-1760",
       .summary = "SmallGroup(128,1760): a CCP-group that is not an ECP-group",
       .order = 128,
       .build = [] { return paper_128_1760(); },
       .spec =
           [] {
             return GroupSpec::permutation_spec(32, {kGen128A, kGen128B, kGen128C, kGen128D});
           },
       .golden = {{"order", "128", "published"},
                  {"ccp", "true", "published"},
                  {"ecp", "false", "published"},
                  {"nilpotent", "true", "definition"},
                  {"subgroups", "684", "computed"},
                  {"cyclic_subgroups", "80", "computed"}}});

  add({.name = "paper-big-group",
       .summary = "metacyclic(27,9,4) x metacyclic(27,9,4), order 59049 (symbolic)",
       .symbolic_only = true,
       .order = 59049,
       .build = {},
       .spec =
           [] {
             return GroupSpec::direct_product_spec(
                 {GroupSpec::metacyclic_spec(27, 9, 4), GroupSpec::metacyclic_spec(27, 9, 4)});
           },
       .golden = {{"order", "59049", "definition"}}});

  return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

} // namespace ecp
