#include "ecp/pgroup.hpp"

#include <algorithm>
#include <unordered_map>

#include "ecp/conjperm.hpp"
#include "ecp/errors.hpp"

namespace ecp {

Elem regularity_defect(const Group& g, Elem a, Elem b, std::uint64_t p) {
  const long long pe = static_cast<long long>(p);
  return g.mul(g.mul(g.power(g.mul(a, b), pe), g.power(a, -pe)), g.power(b, -pe));
}

namespace {

// Derived subgroup of <a, b>: normal closure of [a, b] inside the closure,
// conjugating by the two generators only.
std::vector<Elem> two_generated_derived(const Group& g, Elem a, Elem b) {
  std::vector<Elem> seeds{g.commutator(a, b)};
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  for (;;) {
    // close under multiplication by seeds
    for (Elem s : seeds) {
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Elem s : seeds) {
        const Elem y = g.mul(members[head], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    // conjugation-stable under a and b?
    std::vector<Elem> extra;
    for (Elem m : members) {
      for (Elem c : {g.conjugate(m, a), g.conjugate(m, b)}) {
        if (!in[c]) extra.push_back(c);
      }
    }
    if (extra.empty()) {
      std::sort(members.begin(), members.end());
      return members;
    }
    seeds.insert(seeds.end(), extra.begin(), extra.end());
  }
}

} // namespace

RegularityResult is_regular(const Group& g, RegularityMode mode) {
  const auto p_opt = p_group_prime(g);
  if (!p_opt) throw InvalidArgument("is_regular: not a p-group (order " +
                                    std::to_string(g.order()) + ")");
  const std::uint64_t p = *p_opt;

  // exponent(G') dividing p makes every agemo factor below trivial
  bool shortcut = false;
  if (mode == RegularityMode::automatic) {
    shortcut = true;
    for (Elem m : derived_subgroup(g).members) {
      if (m != 0 && g.element_order(m) != p) {
        shortcut = false;
        break;
      }
    }
  }

  // cache of agemo(derived(<a,b>)) member sets, keyed by <a,b> fingerprint
  std::unordered_map<std::uint64_t, std::vector<bool>> agemo_cache;

  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem defect = regularity_defect(g, a, b, p);
      if (defect == 0) continue;
      if (shortcut) return RegularityResult{false, std::make_pair(a, b)};

      const Elem seed[] = {a, b};
      const Subgroup h = subgroup_closure(g, seed);
      const std::uint64_t fp = detail::member_fingerprint(h.members);
      auto it = agemo_cache.find(fp);
      if (it == agemo_cache.end()) {
        const std::vector<Elem> derived = two_generated_derived(g, a, b);
        Subgroup derived_sub{g, derived, derived};
        const Subgroup omega = agemo(derived_sub, p);
        std::vector<bool> bits(g.order(), false);
        for (Elem m : omega.members) bits[m] = true;
        it = agemo_cache.emplace(fp, std::move(bits)).first;
      }
      if (!it->second[defect]) return RegularityResult{false, std::make_pair(a, b)};
    }
  }
  return RegularityResult{true, std::nullopt};
}

bool exponent3_identity_check(const Group& g) {
  if (g.exponent() != 3) throw InvalidArgument("exponent3_identity_check requires exponent 3");
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());

  // y z y = z^{-1} y^{-1} z^{-1}
  for (Elem y = 0; y < n; ++y) {
    for (Elem z = 0; z < n; ++z) {
      const Elem lhs = g.mul(g.mul(y, z), y);
      const Elem rhs = g.mul(g.mul(g.inv(z), g.inv(y)), g.inv(z));
      if (lhs != rhs) return false;
    }
  }

  // a b^x = (a^{-1} b a)^x (b a b^{-1})
  auto triple_holds = [&](Elem a, Elem b, Elem x) {
    const Elem lhs = g.mul(a, g.conjugate(b, x));
    const Elem t1 = g.conjugate(g.mul(g.mul(g.inv(a), b), a), x);
    const Elem t2 = g.mul(g.mul(b, a), g.inv(b));
    return lhs == g.mul(t1, t2);
  };

  if (g.order() <= 729) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem x = 0; x < n; ++x)
          if (!triple_holds(a, b, x)) return false;
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull; // fixed seed: deterministic sampling
    auto next = [&state, n]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<Elem>(state % n);
    };
    for (int i = 0; i < 100000; ++i)
      if (!triple_holds(next(), next(), next())) return false;
  }
  return true;
}

std::vector<Theorem1Line> theorem1_sweep(const std::vector<std::pair<std::string, Group>>& groups,
                                         const LatticeOptions& options) {
  std::vector<Theorem1Line> out;
  for (const auto& [name, g] : groups) {
    Theorem1Line line{name, g.order(), g.exponent() == 3, false};
    if (line.exponent_is_3) line.ecp = is_ecp(g, options).holds;
    out.push_back(std::move(line));
  }
  return out;
}

} // namespace ecp
