#include "ecp/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "ecp/errors.hpp"

namespace ecp {

namespace detail {

std::uint64_t member_fingerprint(const std::vector<Elem>& members) {
  std::uint64_t h = 1469598103934665603ull;
  for (Elem m : members) {
    h ^= m;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace detail

namespace {

// Deduplicating store of subgroups keyed by member-set fingerprint.
class SubgroupStore {
public:
  // returns the index, or SIZE_MAX if the subgroup was already present
  std::size_t insert(Subgroup sub) {
    const std::uint64_t fp = detail::member_fingerprint(sub.members);
    auto [it, fresh] = buckets_.try_emplace(fp);
    for (std::size_t idx : it->second)
      if (subs_[idx].members == sub.members) return kAlready;
    it->second.push_back(subs_.size());
    subs_.push_back(std::move(sub));
    return subs_.size() - 1;
  }

  bool contains(const std::vector<Elem>& members) const {
    auto it = buckets_.find(detail::member_fingerprint(members));
    if (it == buckets_.end()) return false;
    for (std::size_t idx : it->second)
      if (subs_[idx].members == members) return true;
    return false;
  }

  std::vector<Subgroup>& subgroups() { return subs_; }

  static constexpr std::size_t kAlready = static_cast<std::size_t>(-1);

private:
  std::vector<Subgroup> subs_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

void sort_canonically(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
}

bool subset_of(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<Subgroup> cyclic_subgroups(const Group& g) {
  SubgroupStore store;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem seed[] = {x};
    store.insert(subgroup_closure(g, seed));
  }
  std::vector<Subgroup> out = std::move(store.subgroups());
  sort_canonically(out);
  return out;
}

std::vector<Subgroup> all_subgroups(const Group& g, const LatticeOptions& options) {
  if (g.order() > options.max_group_order)
    throw BudgetError("lattice budget exceeded: group order " + std::to_string(g.order()) +
                      " > " + std::to_string(options.max_group_order));

  const std::vector<Subgroup> cyclic = cyclic_subgroups(g);
  SubgroupStore store;
  std::vector<std::size_t> queue;
  for (const Subgroup& c : cyclic) {
    const std::size_t idx = store.insert(c);
    if (idx != SubgroupStore::kAlready) queue.push_back(idx);
  }

  // join each known subgroup with each cyclic subgroup until fixpoint
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t sidx = queue[head];
    for (const Subgroup& c : cyclic) {
      {
        const Subgroup& s = store.subgroups()[sidx];
        if (subset_of(c.members, s.members)) continue;
      }
      std::vector<Elem> seed = store.subgroups()[sidx].generators;
      seed.insert(seed.end(), c.generators.begin(), c.generators.end());
      Subgroup join = subgroup_closure(g, seed);
      const std::size_t idx = store.insert(std::move(join));
      if (idx != SubgroupStore::kAlready) queue.push_back(idx);
    }
  }

  std::vector<Subgroup> out = std::move(store.subgroups());
  sort_canonically(out);
  return out;
}

std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h) {
  require_same_group(g, h, "conjugates");
  SubgroupStore store;
  std::vector<Subgroup> out;
  for (Elem x = 0; x < g.order(); ++x) {
    Subgroup k = conjugate_subgroup(h, x);
    if (store.insert(k) != SubgroupStore::kAlready) out.push_back(std::move(k));
  }
  return out;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const Group& g,
                                                          const LatticeOptions& options) {
  const std::vector<Subgroup> subs = all_subgroups(g, options);
  SubgroupStore seen;
  std::vector<SubgroupClass> classes;
  for (const Subgroup& s : subs) {
    if (seen.contains(s.members)) continue;
    SubgroupClass cls{s, conjugates(g, s)};
    for (const Subgroup& c : cls.conjugates) seen.insert(c);
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace ecp
