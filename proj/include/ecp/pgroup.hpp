#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecp/group.hpp"
#include "ecp/lattice.hpp"

namespace ecp {

enum class RegularityMode {
  /// Use the shortcut when exponent(G') = p, full criterion otherwise.
  automatic,
  /// Always run the per-pair agemo membership test.
  full_criterion,
};

struct RegularityResult {
  bool regular = true;
  /// First failing pair (a, b), scanned a outer / b inner in index order.
  std::optional<std::pair<Elem, Elem>> witness;
};

/// Hall regularity for a p-group: for all a, b the element
/// (ab)^p a^{-p} b^{-p} lies in the agemo of the derived subgroup of <a, b>.
/// When exponent(derived_subgroup(G)) = p that agemo is trivial and the test
/// collapses to (ab)^p a^{-p} b^{-p} = identity. Throws InvalidArgument for
/// non-p-groups.
RegularityResult is_regular(const Group& g, RegularityMode mode = RegularityMode::automatic);

/// Element of the p-group g that the witness pair maps to; exposed so that
/// failed pairs can be replayed and displayed.
Elem regularity_defect(const Group& g, Elem a, Elem b, std::uint64_t p);

/// Both exponent-3 identities:
///   y z y = z^{-1} y^{-1} z^{-1}                   for every pair,
///   a b^x = (a^{-1} b a)^x (b a b^{-1})            for every triple.
/// Exhaustive up to order 729, deterministic sampling (>= 10^5 triples)
/// above. Requires exponent(g) = 3.
bool exponent3_identity_check(const Group& g);

struct Theorem1Line {
  std::string name;
  std::uint64_t order = 0;
  bool exponent_is_3 = false;
  bool ecp = false; // meaningful only when exponent_is_3
};

/// For every input of exponent 3, records whether it is an ECP-group.
std::vector<Theorem1Line> theorem1_sweep(const std::vector<std::pair<std::string, Group>>& groups,
                                         const LatticeOptions& options = {});

} // namespace ecp
