#include "ecp/conjperm.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

std::vector<bool> product_bits(const Group& g, const std::vector<Elem>& a,
                               const std::vector<Elem>& b, std::size_t* count = nullptr) {
  std::vector<bool> bits(g.order(), false);
  std::size_t n = 0;
  for (Elem u : a) {
    for (Elem v : b) {
      const Elem y = g.mul(u, v);
      if (!bits[y]) {
        bits[y] = true;
        ++n;
      }
    }
  }
  if (count) *count = n;
  return bits;
}

// First product u*v (u from `outer`, v from `inner`, in list order) that is
// not in `bits`, or nullopt.
std::optional<Elem> first_escape(const Group& g, const std::vector<Elem>& outer,
                                 const std::vector<Elem>& inner, const std::vector<bool>& bits) {
  for (Elem u : outer)
    for (Elem v : inner)
      if (const Elem y = g.mul(u, v); !bits[y]) return y;
  return std::nullopt;
}

} // namespace

std::vector<Elem> set_product(const Subgroup& a, const Subgroup& b) {
  if (!a.parent.same_group(b.parent))
    throw InvalidArgument("set_product: subgroups of different groups");
  const Group& g = a.parent;
  std::vector<bool> bits = product_bits(g, a.members, b.members);
  std::vector<Elem> out;
  for (Elem y = 0; y < g.order(); ++y)
    if (bits[y]) out.push_back(y);
  return out;
}

bool permute_check(const Subgroup& a, const Subgroup& b) {
  if (!a.parent.same_group(b.parent))
    throw InvalidArgument("permute_check: subgroups of different groups");
  const Group& g = a.parent;
  // |AB| = |BA| always (product formula), so BA subset of AB suffices.
  const std::vector<bool> ab = product_bits(g, a.members, b.members);
  return !first_escape(g, b.members, a.members, ab).has_value();
}

ConjPermResult is_conjugate_permutable(const Group& g, const Subgroup& h) {
  require_same_group(g, h, "is_conjugate_permutable");
  std::unordered_set<std::uint64_t> seen;
  seen.insert(detail::member_fingerprint(h.members));
  for (Elem x = 0; x < g.order(); ++x) {
    Subgroup k = conjugate_subgroup(h, x);
    if (k.members == h.members) continue; // H^x = H permutes trivially
    if (!seen.insert(detail::member_fingerprint(k.members)).second) continue;
    std::size_t product_size = 0;
    const std::vector<bool> hk = product_bits(g, h.members, k.members, &product_size);
    if (auto y = first_escape(g, k.members, h.members, hk)) {
      return ConjPermResult{false, Certificate{h, x, *y, true, product_size}};
    }
  }
  return ConjPermResult{true, std::nullopt};
}

bool replay_certificate(const Group& g, const Certificate& cert) {
  require_same_group(g, cert.subgroup, "replay_certificate");
  const Subgroup k = conjugate_subgroup(cert.subgroup, cert.conjugator);
  std::size_t size_hk = 0, size_kh = 0;
  const std::vector<bool> hk = product_bits(g, cert.subgroup.members, k.members, &size_hk);
  const std::vector<bool> kh = product_bits(g, k.members, cert.subgroup.members, &size_kh);
  if (size_hk != cert.product_size || size_kh != cert.product_size) return false;
  const bool in_kh = kh[cert.witness];
  const bool in_hk = hk[cert.witness];
  return cert.witness_in_conjugated_product ? (in_kh && !in_hk) : (in_hk && !in_kh);
}

ClassifyResult is_ecp(const Group& g, const LatticeOptions& options) {
  const std::vector<SubgroupClass> classes = conjugacy_classes_of_subgroups(g, options);
  ClassifyResult result;
  for (const SubgroupClass& cls : classes) result.subgroups_total += cls.conjugates.size();
  for (const SubgroupClass& cls : classes) {
    ++result.classes_checked;
    ConjPermResult r = is_conjugate_permutable(g, cls.representative);
    if (!r.conjugate_permutable) {
      result.holds = false;
      result.certificate = std::move(r.certificate);
      return result;
    }
  }
  return result;
}

ClassifyResult is_ccp(const Group& g, const LatticeOptions& options) {
  if (g.order() > options.max_group_order)
    throw BudgetError("lattice budget exceeded: group order " + std::to_string(g.order()) +
                      " > " + std::to_string(options.max_group_order));
  const std::vector<Subgroup> cyclic = cyclic_subgroups(g);
  // classes among cyclic subgroups (conjugates of cyclic stay cyclic)
  std::unordered_set<std::uint64_t> seen;
  ClassifyResult result;
  result.subgroups_total = cyclic.size();
  for (const Subgroup& s : cyclic) {
    if (!seen.insert(detail::member_fingerprint(s.members)).second) continue;
    for (const Subgroup& c : conjugates(g, s))
      seen.insert(detail::member_fingerprint(c.members));
    ++result.classes_checked;
    ConjPermResult r = is_conjugate_permutable(g, s);
    if (!r.conjugate_permutable) {
      result.holds = false;
      result.certificate = std::move(r.certificate);
      return result;
    }
  }
  return result;
}

bool all_subgroups_permutable(const Group& g, const LatticeOptions& options) {
  const std::vector<Subgroup> subs = all_subgroups(g, options);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (!permute_check(subs[i], subs[j])) return false;
  return true;
}

// -- symbolic ----------------------------------------------------------------

std::vector<SymValue> symbolic_set_product(const SymbolicProduct& g, std::span<const SymValue> a,
                                           std::span<const SymValue> b) {
  std::set<SymValue> out;
  for (const SymValue& u : a)
    for (const SymValue& v : b) out.insert(g.mul(u, v));
  return std::vector<SymValue>(out.begin(), out.end());
}

bool symbolic_permute_check(const SymbolicProduct& g, std::span<const SymValue> a,
                            std::span<const SymValue> b) {
  return symbolic_set_product(g, a, b) == symbolic_set_product(g, b, a);
}

SymbolicConjPermResult refute_conjugate_permutability(const SymbolicProduct& g,
                                                      std::span<const SymValue> subgroup,
                                                      std::span<const SymValue> conjugators) {
  SymbolicConjPermResult result;
  for (const SymValue& x : conjugators) {
    ++result.conjugators_tested;
    std::vector<SymValue> conj;
    conj.reserve(subgroup.size());
    for (const SymValue& m : subgroup) conj.push_back(g.conjugate(m, x));

    std::set<SymValue> hk;
    for (const SymValue& u : subgroup)
      for (const SymValue& v : conj) hk.insert(g.mul(u, v));

    for (const SymValue& u : conj) {
      for (const SymValue& v : subgroup) {
        SymValue y = g.mul(u, v);
        if (!hk.contains(y)) {
          result.refuted = true;
          result.certificate = SymbolicCertificate{x, std::move(y), true, hk.size()};
          return result;
        }
      }
    }
  }
  return result;
}

} // namespace ecp
