#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecp/perm.hpp"

namespace ecp {

/// Index of an element within its Group's enumeration. Element 0 is always
/// the identity. Indices are only meaningful relative to one Group; mixing
/// groups is reported as an error by every operation that can detect it.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationCap = 200000;
/// Full multiplication tables are materialized up to this order; larger
/// groups multiply through the closed-form engine.
inline constexpr std::size_t kMulTableLimit = 2048;

namespace detail {

struct GroupImpl {
  std::string name;
  std::uint32_t order = 0;
  std::vector<Elem> generators;
  std::vector<Elem> table;                        // order*order, row-major; empty above kMulTableLimit
  std::function<Elem(Elem, Elem)> mul_fn;         // always valid
  std::vector<Elem> inverse;
  std::vector<std::string> labels;                // eager labels, may be empty
  std::function<std::string(Elem)> label_fn;      // lazy labels, may be empty
  std::vector<Perm> perm_elements;                // set for permutation-realized groups
  std::unordered_map<Perm, Elem, PermHash> perm_index;

  Elem mul(Elem a, Elem b) const {
    return table.empty() ? mul_fn(a, b) : table[static_cast<std::size_t>(a) * order + b];
  }
};

std::string label_of(const GroupImpl& impl, Elem g);

} // namespace detail

/// A fully materialized finite group: an indexed element list with product
/// and inverse, a generating set, and display labels. Immutable once built;
/// cheap to copy (shared representation). Two Group values denote the same
/// group exactly when they share a representation.
class Group {
public:
  Group() = default;

  std::size_t order() const { return impl_->order; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return impl_->mul(a, b); }
  Elem inv(Elem a) const { return impl_->inverse[a]; }
  /// x^{-1} g x
  Elem conjugate(Elem g, Elem x) const { return mul(mul(inv(x), g), x); }
  /// [a, b] = a^{-1} b^{-1} a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem g, long long k) const;
  std::uint64_t element_order(Elem g) const;
  /// lcm of all element orders.
  std::uint64_t exponent() const;

  const std::vector<Elem>& generators() const { return impl_->generators; }
  const std::string& name() const { return impl_->name; }
  std::string label(Elem g) const { return detail::label_of(*impl_, g); }

  /// True when both values share one underlying group.
  bool same_group(const Group& other) const { return impl_ == other.impl_; }
  bool valid() const { return impl_ != nullptr; }

  /// Permutation realizing element g, or nullptr for non-permutation groups.
  const Perm* permutation(Elem g) const;
  std::optional<Elem> find_permutation(const Perm& p) const;
  /// Linear scan over rendered labels.
  std::optional<Elem> find_label(const std::string& text) const;

  // -- builders ------------------------------------------------------------

  /// Breadth-first closure of the generators under right multiplication.
  /// Element 0 is the identity; enumeration order is deterministic (queue
  /// order, generators applied in the order given). Exceeding `cap` raises
  /// BudgetError("order cap exceeded ...").
  static Group from_permutations(std::vector<Perm> gens, std::string name = "",
                                 std::size_t cap = kDefaultEnumerationCap);

  /// <a, b | a^m = b^n = 1, b^{-1} a b = a^r>. Elements are normal forms
  /// a^i b^j indexed as i*n + j; the product rule uses s = r^{-1} mod m:
  ///   (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 s^j1) b^(j1 + j2).
  static Group metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t r,
                          std::string letter_a = "a", std::string letter_b = "b",
                          std::string name = "");

  /// Componentwise product on pairs, indexed row-major (i1 * |G2| + i2).
  /// Labels concatenate (identity parts dropped). An empty name derives one
  /// from the factor names.
  static Group direct_product(const Group& g1, const Group& g2,
                              std::size_t cap = kDefaultEnumerationCap, std::string name = "");

  /// Builds from an explicit multiplication table (row-major, order*order).
  /// Row/column 0 must realize a two-sided identity and every element needs
  /// an inverse. Used for small structured constructions.
  static Group from_table(std::vector<Elem> table, std::vector<Elem> generators,
                          std::vector<std::string> labels, std::string name);

private:
  explicit Group(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::GroupImpl> impl_;
};

/// An element-index set within a parent group, closed under product and
/// inverse. `members` is sorted ascending (so members[0] == 0, the identity);
/// `generators` is a subset of members that generates it.
struct Subgroup {
  Group parent;
  std::vector<Elem> members;
  std::vector<Elem> generators;

  std::size_t order() const { return members.size(); }
  bool contains(Elem g) const;
  bool same_members(const Subgroup& other) const { return members == other.members; }
};

/// Least subgroup containing `seed`; breadth-first closure.
Subgroup subgroup_closure(const Group& g, std::span<const Elem> seed);
Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);
/// x^{-1} H x as a Subgroup (members re-sorted, generators conjugated).
Subgroup conjugate_subgroup(const Subgroup& h, Elem x);
/// Least normal subgroup of g containing `seed`.
Subgroup normal_closure(const Group& g, std::span<const Elem> seed);

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
/// Agemo ℧_1(H): subgroup generated by the p-th powers of the members of H.
Subgroup agemo(const Subgroup& h, std::uint64_t p);

/// Ascending central series reaches the whole group.
bool is_nilpotent(const Group& g);
/// The prime p if |G| is a power of p (order 1 gives nothing).
std::optional<std::uint64_t> p_group_prime(const Group& g);
/// One Sylow p-subgroup per prime dividing |G|, in increasing prime order.
std::vector<Subgroup> sylow_decompose(const Group& g);

/// Number of prime divisors of n counted with multiplicity.
std::uint64_t big_omega(std::uint64_t n);
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

/// Throws InvalidArgument when h's parent is not `g` itself.
void require_same_group(const Group& g, const Subgroup& h, const char* where);

} // namespace ecp
