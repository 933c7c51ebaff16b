#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ecp/group.hpp"
#include "ecp/groupspec.hpp"
#include "ecp/symbolic.hpp"

namespace ecp {

/// One expected property of a catalog group, checked by the golden suite.
/// provenance: "published" (taken from the literature on the group),
/// "computed" (frozen from an independent computation), or "definition".
struct PropertyExpectation {
  std::string property;
  std::string expected;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  bool slow = false; // excluded from the default golden run
  bool symbolic_only = false;
  std::uint64_t order = 0;
  std::function<Group()> build; // unset for symbolic-only entries
  std::function<GroupSpec()> spec;
  std::vector<PropertyExpectation> golden;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);

// -- standard families --------------------------------------------------------

Group cyclic(std::uint64_t n, const std::string& letter = "a");
Group elementary_abelian(std::uint64_t p, std::uint32_t rank);
Group dihedral(std::uint32_t n); // order 2n, on n points
Group quaternion8();
Group symmetric(std::uint32_t n); // n <= 4
/// Unitriangular 3x3 group over Z_p: order p^3, exponent p for odd p.
Group heisenberg(std::uint64_t p);

// -- the recorded counterexample groups ----------------------------------------

/// SmallGroup(81,10): the ECP but non-regular 3-group, built from its two
/// order-9 generators on 81 points.
Group paper_81_10();
const std::string& paper_81_10_generator_a();
const std::string& paper_81_10_generator_b();
/// The displayed value of (ab)^3 a^{-3} b^{-3} in that group.
const std::string& paper_81_10_regularity_defect();

/// SmallGroup(128,1760): CCP but not ECP, on 32 points.
Group paper_128_1760();

/// metacyclic(27,9,4) x metacyclic(27,9,4) of order 59049, evaluated
/// symbolically, with the named elements of the direct-product counterexample.
struct BigGroup {
  SymbolicProduct group;
  SymbolicProduct::Value a, b, c, d;
  SymbolicProduct::Value k; // a^3 b^2 c^3 d, the non-conjugate-permutable <k>
  SymbolicProduct::Value x; // abcd, the refuting conjugator
};
BigGroup paper_big_group();

/// The 9 members of <k> and <k^x> as printed, in power order.
std::vector<std::string> paper_big_group_k_labels();
std::vector<std::string> paper_big_group_kx_labels();

/// Evaluates a golden property name ("order", "exponent", "ecp", ...) on a
/// built group and renders the result as a string.
std::string evaluate_property(const Group& g, const std::string& property);

} // namespace ecp
