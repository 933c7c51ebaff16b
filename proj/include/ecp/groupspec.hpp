#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecp/group.hpp"

namespace ecp {

/// Serializable group description, the ingestion format. JSON documents with
/// exactly these fields (unknown fields are rejected):
///   { "kind": "permutation",    "permutation":    { "degree": int, "generators": [str...] } }
///   { "kind": "metacyclic",     "metacyclic":     { "m": int, "n": int, "r": int } }
///   { "kind": "direct_product", "direct_product": { "factors": [GroupSpec...] } }
struct GroupSpec {
  enum class Kind { permutation, metacyclic, direct_product };

  Kind kind = Kind::permutation;
  // permutation
  std::uint32_t degree = 0;
  std::vector<std::string> generators;
  // metacyclic
  std::uint64_t m = 0, n = 0, r = 0;
  // direct_product
  std::vector<GroupSpec> factors;

  static GroupSpec permutation_spec(std::uint32_t degree, std::vector<std::string> generators);
  static GroupSpec metacyclic_spec(std::uint64_t m, std::uint64_t n, std::uint64_t r);
  static GroupSpec direct_product_spec(std::vector<GroupSpec> factors);

  static GroupSpec from_json_text(const std::string& text);
  static GroupSpec load_file(const std::string& path);
  std::string to_json_text() const;

  /// Materializes the group. Metacyclic factors of a direct product receive
  /// consecutive letter pairs (a,b), (c,d), ... for display labels.
  Group build(std::string name = "", std::size_t cap = kDefaultEnumerationCap) const;
};

} // namespace ecp
