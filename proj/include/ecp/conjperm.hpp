#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ecp/group.hpp"
#include "ecp/lattice.hpp"
#include "ecp/symbolic.hpp"

namespace ecp {

/// Refutation witness for a failed permutability check: conjugating `subgroup`
/// by `conjugator` gives K = H^x with H·K != K·H, and `witness` lies in one
/// product set but not the other. Replaying the certificate reproduces the
/// failure from scratch.
struct Certificate {
  Subgroup subgroup;
  Elem conjugator = 0;
  Elem witness = 0;
  /// true: witness in H^x·H but not H·H^x; false: the other way around.
  bool witness_in_conjugated_product = true;
  /// |H·H^x| (equals |H^x·H| by the product formula).
  std::size_t product_size = 0;
};

struct ConjPermResult {
  bool conjugate_permutable = true;
  std::optional<Certificate> certificate;
};

struct ClassifyResult {
  bool holds = true;
  std::optional<Certificate> certificate;
  std::size_t classes_checked = 0;
  std::size_t subgroups_total = 0;
};

/// {a*b : a in A, b in B} as a sorted index set. Parents must match.
std::vector<Elem> set_product(const Subgroup& a, const Subgroup& b);

/// AB = BA as element sets (equivalently: AB is a subgroup).
bool permute_check(const Subgroup& a, const Subgroup& b);

/// H·H^x = H^x·H for every x in G. Conjugators are scanned in element-index
/// order (duplicate conjugates skipped); the first failure is certified with
/// the first witness found scanning products u*v, u in H^x, v in H, both in
/// sorted member order.
ConjPermResult is_conjugate_permutable(const Group& g, const Subgroup& h);

/// Re-runs the product computation behind a certificate; true when the
/// failure reproduces exactly.
bool replay_certificate(const Group& g, const Certificate& cert);

/// Every subgroup conjugate-permutable. Only class representatives are
/// tested (a subgroup is conjugate-permutable iff its conjugates are).
ClassifyResult is_ecp(const Group& g, const LatticeOptions& options = {});

/// Every cyclic subgroup conjugate-permutable.
ClassifyResult is_ccp(const Group& g, const LatticeOptions& options = {});

/// Every unordered pair of subgroups permutes (the Iwasawa property).
bool all_subgroups_permutable(const Group& g, const LatticeOptions& options = {});

// -- symbolic variants (groups too large to enumerate) ----------------------

using SymValue = SymbolicProduct::Value;

/// Sorted-unique {a*b : a in A, b in B} over structured values.
std::vector<SymValue> symbolic_set_product(const SymbolicProduct& g, std::span<const SymValue> a,
                                           std::span<const SymValue> b);

bool symbolic_permute_check(const SymbolicProduct& g, std::span<const SymValue> a,
                            std::span<const SymValue> b);

struct SymbolicCertificate {
  SymValue conjugator;
  SymValue witness;
  bool witness_in_conjugated_product = true;
  std::size_t product_size = 0;
};

/// Outcome of a conjugate-permutability refutation attempt against an
/// explicit conjugator list. Without the full group this can refute but
/// never affirm, so the positive verdict is only "not refuted".
struct SymbolicConjPermResult {
  bool refuted = false;
  std::optional<SymbolicCertificate> certificate;
  std::size_t conjugators_tested = 0;
};

/// Tests H·H^x = H^x·H for each supplied conjugator x only. `subgroup` is the
/// full member list of H in a fixed order (see symbolic_closure); witnesses
/// scan products u*v, u in H^x, v in H, in that member order.
SymbolicConjPermResult refute_conjugate_permutability(const SymbolicProduct& g,
                                                      std::span<const SymValue> subgroup,
                                                      std::span<const SymValue> conjugators);

} // namespace ecp
