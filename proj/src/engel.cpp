#include "ecp/engel.hpp"

#include <algorithm>

#include "ecp/conjperm.hpp"
#include "ecp/errors.hpp"

namespace ecp {

Elem iterated_commutator(const Group& g, Elem x, Elem h, std::uint64_t i) {
  Elem cur = x;
  for (std::uint64_t k = 0; k < i; ++k) cur = g.commutator(cur, h);
  return cur;
}

namespace {

// Iterates the image of `scope` under y -> [y, h] until it collapses to the
// identity; the number of steps is the depth.
std::optional<std::uint64_t> depth_of_scope(const Group& g, std::span<const Elem> scope, Elem h,
                                            std::uint64_t cap) {
  std::vector<Elem> cur(scope.begin(), scope.end());
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  std::uint64_t depth = 0;
  while (!(cur.size() == 1 && cur.front() == 0)) {
    if (depth >= cap) return std::nullopt;
    std::vector<Elem> next;
    next.reserve(cur.size());
    for (Elem x : cur) next.push_back(g.commutator(x, h));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    ++depth;
  }
  return depth;
}

} // namespace

std::optional<std::uint64_t> left_engel_depth(const Group& g, Elem h,
                                              std::optional<std::uint64_t> cap) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return depth_of_scope(g, all, h, cap.value_or(g.order()));
}

std::optional<std::uint64_t> left_engel_depth_in(const Group& g, std::span<const Elem> scope,
                                                 Elem h, std::uint64_t cap) {
  return depth_of_scope(g, scope, h, cap);
}

namespace {

EngelReport check_pair(const Group& g, const Subgroup& h_sub, Elem h, std::uint64_t n) {
  EngelReport report;
  report.subgroup_order = h_sub.members.size();
  report.t = big_omega(report.subgroup_order);
  report.n = n;
  report.bound = report.n + report.t + 1;
  const auto depth_g = left_engel_depth(g, h, g.order());
  report.depth_in_g = depth_g.value_or(static_cast<std::uint64_t>(g.order()) + 1);
  report.holds = depth_g.has_value() && report.depth_in_g <= report.bound;
  return report;
}

} // namespace

EngelReport theorem4_check(const Group& g, const Subgroup& h_sub, Elem h) {
  require_same_group(g, h_sub, "theorem4_check");
  if (!h_sub.contains(h)) throw InvalidArgument("theorem4_check: element not in subgroup");
  if (!is_conjugate_permutable(g, h_sub).conjugate_permutable)
    throw InvalidArgument("theorem4_check: subgroup is not conjugate-permutable");
  const auto n = left_engel_depth_in(g, h_sub.members, h, h_sub.members.size());
  if (!n) throw InvalidArgument("theorem4_check: element has no finite Engel depth in subgroup");
  return check_pair(g, h_sub, h, *n);
}

EngelSweepStats theorem4_sweep(const Group& g, const LatticeOptions& options) {
  EngelSweepStats stats;
  for (const Subgroup& h_sub : all_subgroups(g, options)) {
    ++stats.subgroups;
    if (!is_conjugate_permutable(g, h_sub).conjugate_permutable) continue;
    ++stats.conjugate_permutable;
    for (Elem h : h_sub.members) {
      const auto n = left_engel_depth_in(g, h_sub.members, h, h_sub.members.size());
      if (!n) {
        ++stats.pairs_skipped_no_depth;
        continue;
      }
      const EngelReport report = check_pair(g, h_sub, h, *n);
      ++stats.pairs_checked;
      stats.max_depth_in_g = std::max(stats.max_depth_in_g, report.depth_in_g);
      if (!report.holds) ++stats.violations;
    }
  }
  return stats;
}

} // namespace ecp
