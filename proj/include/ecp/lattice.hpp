#pragma once

#include <cstddef>
#include <vector>

#include "ecp/group.hpp"

namespace ecp {

struct LatticeOptions {
  /// Whole-lattice operations refuse groups larger than this.
  std::size_t max_group_order = 2048;
};

/// One conjugacy class of subgroups: all distinct conjugates of the
/// representative, representative first, ordered by least conjugator index.
struct SubgroupClass {
  Subgroup representative;
  std::vector<Subgroup> conjugates;
};

/// Deduplicated <g> for every g, ordered by (order, members lexicographic).
std::vector<Subgroup> cyclic_subgroups(const Group& g);

/// Every subgroup exactly once, ordered by (order, members lexicographic).
/// Join-closure enumeration: repeatedly join known subgroups with cyclic
/// subgroups until fixpoint. Exceeding options.max_group_order raises
/// BudgetError("lattice budget exceeded ...").
std::vector<Subgroup> all_subgroups(const Group& g, const LatticeOptions& options = {});

/// Orbit of h under conjugation by all of g, h first, ordered by least
/// conjugator index.
std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h);

/// Partition of all_subgroups(g) into conjugation orbits. Classes are ordered
/// by their representative's position in the all_subgroups order; each
/// representative is the least subgroup of its class in that order.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const Group& g,
                                                          const LatticeOptions& options = {});

namespace detail {
/// 64-bit fingerprint of a sorted member list (hash; callers must resolve
/// collisions by full comparison).
std::uint64_t member_fingerprint(const std::vector<Elem>& members);
} // namespace detail

} // namespace ecp
