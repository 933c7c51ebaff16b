#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecp {

/// Permutation of the points 1..degree.
///
/// Points are stored 0-based internally; every piece of text I/O (cycle
/// notation) is 1-based. The degree is part of the value: permutations of
/// different degrees are never equal and cannot be composed.
class Perm {
public:
  /// Builds from an image table: image[i] is where point i goes (0-based).
  explicit Perm(std::vector<std::uint32_t> image);

  static Perm identity(std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(image_.size()); }
  std::uint32_t apply(std::uint32_t point) const { return image_[point]; } // 0-based
  const std::vector<std::uint32_t>& image() const { return image_; }
  bool is_identity() const;

  bool operator==(const Perm&) const = default;

private:
  std::vector<std::uint32_t> image_;
};

/// "p then q": the result maps i to q(p(i)). Degrees must match.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// p^k for any integer k (k may be negative or zero).
Perm power(const Perm& p, long long k);
/// Least k >= 1 with p^k = identity; equals the lcm of the cycle lengths.
std::uint64_t element_order(const Perm& p);

/// Parses cycle notation against the grammar
///   perm := "()" | cycle+ ;  cycle := "(" int ("," int)+ ")"
/// Whitespace is accepted after commas on input and never emitted on output.
/// All points must lie in 1..degree and no point may repeat. Errors name the
/// 1-based position of the offending character.
Perm parse_cycles(std::string_view text, std::uint32_t degree);

/// Canonical disjoint-cycle string: cycles ordered by their smallest moved
/// point, each cycle starting at its smallest point; identity prints "()".
std::string format_cycles(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace ecp
