#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ecp/group.hpp"
#include "ecp/lattice.hpp"

namespace ecp {

/// [x,_0 h] = x; [x,_i h] = [[x,_{i-1} h], h].
Elem iterated_commutator(const Group& g, Elem x, Elem h, std::uint64_t i);

/// Least n with [x,_n h] = identity for every x in the group, or nothing if
/// no such n <= cap exists. cap defaults to |G|.
std::optional<std::uint64_t> left_engel_depth(const Group& g, Elem h,
                                              std::optional<std::uint64_t> cap = std::nullopt);

/// Same, with x ranging over `scope` only (scope must be closed under
/// y -> [y, h], e.g. the members of a subgroup containing h).
std::optional<std::uint64_t> left_engel_depth_in(const Group& g, std::span<const Elem> scope,
                                                 Elem h, std::uint64_t cap);

struct EngelReport {
  std::uint64_t subgroup_order = 0;
  std::uint64_t t = 0;          // big_omega(subgroup_order)
  std::uint64_t n = 0;          // Engel depth of h within H
  std::uint64_t depth_in_g = 0; // measured depth of h in G
  std::uint64_t bound = 0;      // n + t + 1
  bool holds = false;           // depth_in_g <= bound
};

/// Checks the (n + t + 1) bound for one conjugate-permutable subgroup H and
/// one h in H. Throws InvalidArgument when H is not conjugate-permutable or
/// h has no finite Engel depth in H.
EngelReport theorem4_check(const Group& g, const Subgroup& h_sub, Elem h);

struct EngelSweepStats {
  std::size_t subgroups = 0;
  std::size_t conjugate_permutable = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped_no_depth = 0;
  std::size_t violations = 0;
  std::uint64_t max_depth_in_g = 0;
  bool all_hold() const { return violations == 0; }
};

/// Runs theorem4_check over every conjugate-permutable subgroup H and every
/// h in H with finite Engel depth in H.
EngelSweepStats theorem4_sweep(const Group& g, const LatticeOptions& options = {});

} // namespace ecp
