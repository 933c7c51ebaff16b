#include "ecp/group.hpp"

#include <algorithm>
#include <numeric>

#include "ecp/errors.hpp"

namespace ecp {

namespace detail {

std::string label_of(const GroupImpl& impl, Elem g) {
  if (!impl.labels.empty()) return impl.labels[g];
  if (!impl.perm_elements.empty()) return format_cycles(impl.perm_elements[g]);
  if (impl.label_fn) return impl.label_fn(g);
  return "#" + std::to_string(g);
}

} // namespace detail

Elem Group::power(Elem g, long long k) const {
  Elem base = k < 0 ? inv(g) : g;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                               : static_cast<unsigned long long>(k);
  Elem acc = 0;
  while (e != 0) {
    if (e & 1ull) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t Group::element_order(Elem g) const {
  std::uint64_t k = 1;
  Elem cur = g;
  while (cur != 0) {
    cur = mul(cur, g);
    ++k;
  }
  return k;
}

std::uint64_t Group::exponent() const {
  std::uint64_t e = 1;
  for (Elem g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
  return e;
}

const Perm* Group::permutation(Elem g) const {
  if (impl_->perm_elements.empty()) return nullptr;
  return &impl_->perm_elements[g];
}

std::optional<Elem> Group::find_permutation(const Perm& p) const {
  auto it = impl_->perm_index.find(p);
  if (it == impl_->perm_index.end()) return std::nullopt;
  return it->second;
}

std::optional<Elem> Group::find_label(const std::string& text) const {
  for (Elem g = 0; g < order(); ++g)
    if (label(g) == text) return g;
  return std::nullopt;
}

namespace {

// Computes the inverse table by scanning each row for the identity.
std::vector<Elem> inverses_from(const detail::GroupImpl& impl) {
  std::vector<Elem> inv(impl.order, 0);
  for (Elem a = 0; a < impl.order; ++a) {
    bool found = false;
    for (Elem b = 0; b < impl.order; ++b) {
      if (impl.mul(a, b) == 0) {
        if (impl.mul(b, a) != 0) throw InvalidArgument("one-sided inverse: not a group");
        inv[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("element without inverse: not a group");
  }
  return inv;
}

void build_table_if_small(detail::GroupImpl& impl) {
  if (impl.order > kMulTableLimit) return;
  std::vector<Elem> table(static_cast<std::size_t>(impl.order) * impl.order);
  for (Elem a = 0; a < impl.order; ++a)
    for (Elem b = 0; b < impl.order; ++b)
      table[static_cast<std::size_t>(a) * impl.order + b] = impl.mul_fn(a, b);
  impl.table = std::move(table);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1ull) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  // extended euclid; requires gcd(a, m) == 1
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidArgument("no modular inverse");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

} // namespace

Group Group::from_permutations(std::vector<Perm> gens, std::string name, std::size_t cap) {
  if (gens.empty()) throw InvalidArgument("at least one generator required");
  const std::uint32_t degree = gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != degree) throw InvalidArgument("generator degrees differ");

  auto impl = std::make_shared<detail::GroupImpl>();
  impl->name = std::move(name);
  impl->perm_elements.push_back(Perm::identity(degree));
  impl->perm_index.emplace(impl->perm_elements.back(), 0);
  for (std::size_t head = 0; head < impl->perm_elements.size(); ++head) {
    const Perm x = impl->perm_elements[head]; // copy: vector may reallocate
    for (const Perm& g : gens) {
      Perm y = compose(x, g);
      if (impl->perm_index.contains(y)) continue;
      if (impl->perm_elements.size() >= cap)
        throw BudgetError("order cap exceeded (" + std::to_string(cap) + ") while enumerating" +
                          (impl->name.empty() ? "" : " " + impl->name));
      impl->perm_index.emplace(y, static_cast<Elem>(impl->perm_elements.size()));
      impl->perm_elements.push_back(std::move(y));
    }
  }

  impl->order = static_cast<std::uint32_t>(impl->perm_elements.size());
  for (const Perm& g : gens) impl->generators.push_back(impl->perm_index.at(g));
  // mul through the index: compose the stored permutations
  auto* raw = impl.get();
  impl->mul_fn = [raw](Elem a, Elem b) {
    return raw->perm_index.at(compose(raw->perm_elements[a], raw->perm_elements[b]));
  };
  build_table_if_small(*impl);
  impl->inverse.resize(impl->order);
  for (Elem g = 0; g < impl->order; ++g)
    impl->inverse[g] = impl->perm_index.at(inverse(impl->perm_elements[g]));
  return Group(std::move(impl));
}

Group Group::metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t r,
                        std::string letter_a, std::string letter_b, std::string name) {
  if (m < 1 || n < 1) throw InvalidArgument("metacyclic parameters require m, n >= 1");
  r %= m;
  if (std::gcd(r, m) != 1) throw InvalidArgument("metacyclic twist r must be coprime to m");
  if (mod_pow(r, n, m) != 1 % m)
    throw InvalidArgument("metacyclic relation requires r^n = 1 (mod m)");
  if (m * n > kDefaultEnumerationCap)
    throw BudgetError("order cap exceeded for metacyclic(" + std::to_string(m) + "," +
                      std::to_string(n) + "," + std::to_string(r) + ")");

  const std::uint64_t s = m == 1 ? 0 : mod_inverse(r, m);
  auto impl = std::make_shared<detail::GroupImpl>();
  impl->name = name.empty() ? "metacyclic(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                  std::to_string(r) + ")"
                            : std::move(name);
  impl->order = static_cast<std::uint32_t>(m * n);

  // s^j mod m for 0 <= j < n
  auto s_pow = std::make_shared<std::vector<std::uint64_t>>(n, 1 % std::max<std::uint64_t>(m, 1));
  for (std::uint64_t j = 1; j < n; ++j) (*s_pow)[j] = (*s_pow)[j - 1] * s % m;

  impl->mul_fn = [m, n, s_pow](Elem a, Elem b) {
    const std::uint64_t i1 = a / n, j1 = a % n;
    const std::uint64_t i2 = b / n, j2 = b % n;
    const std::uint64_t i = (i1 + i2 * (*s_pow)[j1]) % m;
    const std::uint64_t j = (j1 + j2) % n;
    return static_cast<Elem>(i * n + j);
  };
  impl->labels.reserve(impl->order);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      std::string lab;
      if (i != 0) lab += letter_a + (i == 1 ? "" : "^" + std::to_string(i));
      if (j != 0) lab += letter_b + (j == 1 ? "" : "^" + std::to_string(j));
      impl->labels.push_back(lab.empty() ? "e" : std::move(lab));
    }
  }
  if (m > 1) impl->generators.push_back(static_cast<Elem>(n)); // a = (1,0)
  if (n > 1) impl->generators.push_back(1);                    // b = (0,1)
  if (impl->generators.empty()) impl->generators.push_back(0);

  build_table_if_small(*impl);
  impl->inverse.resize(impl->order);
  for (Elem g = 0; g < impl->order; ++g) {
    const std::uint64_t i = g / n, j = g % n;
    // (i,j)^{-1} = (-i * r^j mod m, -j mod n): s^{-1} = r
    const std::uint64_t jr = (n - j) % n;
    const std::uint64_t ir = m == 1 ? 0 : (m - i * mod_pow(r, j, m) % m) % m;
    impl->inverse[g] = static_cast<Elem>(ir * n + jr);
  }
  return Group(std::move(impl));
}

Group Group::direct_product(const Group& g1, const Group& g2, std::size_t cap, std::string name) {
  const std::uint64_t order = static_cast<std::uint64_t>(g1.order()) * g2.order();
  if (order > cap)
    throw BudgetError("order cap exceeded (" + std::to_string(cap) + ") for direct product of " +
                      std::to_string(g1.order()) + " x " + std::to_string(g2.order()));

  auto impl = std::make_shared<detail::GroupImpl>();
  impl->name = name.empty() ? (g1.name().empty() ? "?" : g1.name()) + " x " +
                                  (g2.name().empty() ? "?" : g2.name())
                            : std::move(name);
  impl->order = static_cast<std::uint32_t>(order);
  const std::uint32_t o2 = static_cast<std::uint32_t>(g2.order());
  impl->mul_fn = [g1, g2, o2](Elem a, Elem b) {
    const Elem a1 = a / o2, a2 = a % o2;
    const Elem b1 = b / o2, b2 = b % o2;
    return g1.mul(a1, b1) * o2 + g2.mul(a2, b2);
  };
  impl->label_fn = [g1, g2, o2](Elem g) {
    std::string l1 = g1.label(g / o2);
    std::string l2 = g2.label(g % o2);
    if (l1 == "e" || (g / o2) == 0) l1.clear();
    if (l2 == "e" || (g % o2) == 0) l2.clear();
    std::string out = l1 + l2;
    return out.empty() ? std::string("e") : out;
  };
  for (Elem g : g1.generators()) impl->generators.push_back(g * o2);
  for (Elem g : g2.generators()) impl->generators.push_back(g);
  build_table_if_small(*impl);
  impl->inverse.resize(impl->order);
  for (Elem g = 0; g < impl->order; ++g)
    impl->inverse[g] = g1.inv(g / o2) * o2 + g2.inv(g % o2);
  return Group(std::move(impl));
}

Group Group::from_table(std::vector<Elem> table, std::vector<Elem> generators,
                        std::vector<std::string> labels, std::string name) {
  const std::size_t order = labels.size();
  if (order == 0 || table.size() != order * order)
    throw InvalidArgument("table size must be order^2 with one label per element");
  for (Elem v : table)
    if (v >= order) throw InvalidArgument("table entry out of range");
  for (Elem g = 0; g < order; ++g)
    if (table[g] != g || table[static_cast<std::size_t>(g) * order] != g)
      throw InvalidArgument("element 0 must be a two-sided identity");

  auto impl = std::make_shared<detail::GroupImpl>();
  impl->name = std::move(name);
  impl->order = static_cast<std::uint32_t>(order);
  impl->table = std::move(table);
  impl->labels = std::move(labels);
  impl->generators = std::move(generators);
  impl->mul_fn = [raw = impl.get()](Elem a, Elem b) {
    return raw->table[static_cast<std::size_t>(a) * raw->order + b];
  };
  impl->inverse = inverses_from(*impl);
  return Group(std::move(impl));
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

void require_same_group(const Group& g, const Subgroup& h, const char* where) {
  if (!h.parent.same_group(g))
    throw InvalidArgument(std::string(where) + ": subgroup belongs to a different group");
}

namespace {

std::vector<Elem> closure_members(const Group& g, std::span<const Elem> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> elems;
  elems.push_back(0);
  in[0] = true;
  for (Elem s : seed) {
    if (s >= g.order()) throw InvalidArgument("seed element out of range");
    if (!in[s]) {
      in[s] = true;
      elems.push_back(s);
    }
  }
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Elem x = elems[head];
    for (Elem s : seed) {
      const Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

} // namespace

Subgroup subgroup_closure(const Group& g, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  for (Elem s : seed)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  return Subgroup{g, closure_members(g, seed), std::move(gens)};
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup{g, {0}, {}}; }

Subgroup whole_group(const Group& g) {
  std::vector<Elem> members(g.order());
  std::iota(members.begin(), members.end(), 0u);
  return Subgroup{g, std::move(members), g.generators()};
}

Subgroup conjugate_subgroup(const Subgroup& h, Elem x) {
  const Group& g = h.parent;
  std::vector<Elem> members;
  members.reserve(h.members.size());
  for (Elem m : h.members) members.push_back(g.conjugate(m, x));
  std::sort(members.begin(), members.end());
  std::vector<Elem> gens;
  gens.reserve(h.generators.size());
  for (Elem m : h.generators) gens.push_back(g.conjugate(m, x));
  return Subgroup{g, std::move(members), std::move(gens)};
}

Subgroup normal_closure(const Group& g, std::span<const Elem> seed) {
  std::vector<Elem> seeds(seed.begin(), seed.end());
  Subgroup h = subgroup_closure(g, seeds);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem m : h.members) {
      for (Elem gen : g.generators()) {
        const Elem c = g.conjugate(m, gen);
        if (!h.contains(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) return h;
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    h = subgroup_closure(g, seeds);
  }
}

Subgroup center(const Group& g) {
  std::vector<Elem> members;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem gen : g.generators()) {
      if (g.mul(z, gen) != g.mul(gen, z)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(z);
  }
  std::vector<Elem> gens(members.begin() + 1, members.end());
  return Subgroup{g, std::move(members), std::move(gens)};
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<Elem> seeds;
  for (Elem a : g.generators())
    for (Elem b : g.generators())
      if (a != b) seeds.push_back(g.commutator(a, b));
  return normal_closure(g, seeds);
}

Subgroup agemo(const Subgroup& h, std::uint64_t p) {
  if (p < 2) throw InvalidArgument("agemo needs a prime p");
  const Group& g = h.parent;
  std::vector<Elem> seeds;
  seeds.reserve(h.members.size());
  for (Elem m : h.members) seeds.push_back(g.power(m, static_cast<long long>(p)));
  return subgroup_closure(g, seeds);
}

bool is_nilpotent(const Group& g) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::size_t size = 1;
  for (;;) {
    // next level of the ascending central series:
    // x with [x, gen] in current level for every generator
    std::vector<bool> next(g.order(), false);
    std::size_t next_size = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem gen : g.generators()) {
        if (!in[g.commutator(x, gen)]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        next[x] = true;
        ++next_size;
      }
    }
    if (next_size == g.order()) return true;
    if (next_size == size) return false; // series stalled below G
    in = std::move(next);
    size = next_size;
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t big_omega(std::uint64_t n) {
  std::uint64_t total = 0;
  for (auto [p, e] : factorize(n)) total += e;
  return total;
}

std::optional<std::uint64_t> p_group_prime(const Group& g) {
  const auto factors = factorize(g.order());
  if (factors.size() != 1) return std::nullopt;
  return factors.front().first;
}

namespace {

bool is_p_element(const Group& g, Elem x, std::uint64_t p) {
  std::uint64_t k = g.element_order(x);
  while (k % p == 0) k /= p;
  return k == 1;
}

std::vector<Elem> normalizer_members(const Group& g, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (Elem m : h.members) {
      if (!h.contains(g.conjugate(m, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(x);
  }
  return out;
}

} // namespace

std::vector<Subgroup> sylow_decompose(const Group& g) {
  const bool nilpotent = is_nilpotent(g);
  std::vector<Subgroup> out;
  for (auto [p, e] : factorize(g.order())) {
    std::uint64_t target = 1;
    for (std::uint64_t i = 0; i < e; ++i) target *= p;

    if (nilpotent) {
      // the unique Sylow p-subgroup is the set of p-elements
      std::vector<Elem> members;
      for (Elem x = 0; x < g.order(); ++x)
        if (is_p_element(g, x, p)) members.push_back(x);
      if (members.size() != target) throw Error("p-element set is not a Sylow subgroup");
      std::vector<Elem> gens(members.begin() + 1, members.end());
      out.push_back(Subgroup{g, std::move(members), std::move(gens)});
      continue;
    }

    Subgroup sylow = trivial_subgroup(g);
    while (sylow.members.size() < target) {
      // a p-element of the normalizer outside the current subgroup extends it
      bool extended = false;
      for (Elem x : normalizer_members(g, sylow)) {
        if (sylow.contains(x) || !is_p_element(g, x, p) || x == 0) continue;
        std::vector<Elem> seed = sylow.generators;
        seed.push_back(x);
        sylow = subgroup_closure(g, seed);
        extended = true;
        break;
      }
      if (!extended) throw Error("sylow extension stalled (not a group?)");
    }
    out.push_back(std::move(sylow));
  }
  return out;
}

} // namespace ecp
