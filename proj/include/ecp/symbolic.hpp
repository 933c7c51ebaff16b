#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecp {

/// Parameters of <a, b | a^m = b^n = 1, b^{-1} a b = a^r>, with the derived
/// twist s = r^{-1} mod m baked in for the normal-form product rule.
struct MetacyclicParams {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t r = 1;
  std::uint64_t s = 0; // r^{-1} mod m

  static MetacyclicParams make(std::uint64_t m, std::uint64_t n, std::uint64_t r);
};

/// Normal form a^i b^j with 0 <= i < m, 0 <= j < n.
struct MetaValue {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  auto operator<=>(const MetaValue&) const = default;
};

MetaValue mc_mul(const MetacyclicParams& p, MetaValue x, MetaValue y);
MetaValue mc_inv(const MetacyclicParams& p, MetaValue x);

/// Direct product of metacyclic factors, evaluated symbolically: element
/// arithmetic on structured normal forms without materializing the element
/// list. Each factor owns a pair of display letters (a,b then c,d, ...).
class SymbolicProduct {
public:
  /// One normal form per factor.
  using Value = std::vector<MetaValue>;

  SymbolicProduct(std::vector<MetacyclicParams> factors,
                  std::vector<std::array<std::string, 2>> letters, std::string name = "");

  std::size_t factor_count() const { return factors_.size(); }
  const std::string& name() const { return name_; }
  std::uint64_t order() const;

  Value identity() const;
  Value mul(const Value& x, const Value& y) const;
  Value inv(const Value& x) const;
  Value pow(const Value& x, long long k) const;
  Value conjugate(const Value& g, const Value& x) const; // x^{-1} g x
  Value commutator(const Value& a, const Value& b) const;
  std::uint64_t element_order(const Value& x) const;

  /// Canonical label: per-letter powers with exponents reduced to canonical
  /// range, exponent-1 letters bare, exponent-0 letters omitted; identity "e".
  std::string label(const Value& x) const;

  /// Parses a word in the factor letters, e.g. "a^3b^2c^3d" or "abcd".
  /// Exponents may exceed the letter's order; they reduce mod that order.
  Value parse(std::string_view word) const;

  /// Generator value for a single letter at exponent 1.
  Value generator(std::string_view letter) const;
  std::vector<Value> generators() const;

  /// True when x commutes with every generator (so x is central).
  bool commutes_with_generators(const Value& x) const;

private:
  std::vector<MetacyclicParams> factors_;
  std::vector<std::array<std::string, 2>> letters_;
  std::string name_;
};

/// Closure of the seeds under multiplication, in discovery order (identity
/// first, then the seeds, then products layer by layer). For a single seed k
/// this is e, k, k^2, ... in power order.
std::vector<SymbolicProduct::Value> symbolic_closure(const SymbolicProduct& g,
                                                     std::span<const SymbolicProduct::Value> seeds);

} // namespace ecp
