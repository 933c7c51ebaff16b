#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecp/catalog.hpp"
#include "ecp/conjperm.hpp"
#include "ecp/engel.hpp"
#include "ecp/errors.hpp"
#include "ecp/groupspec.hpp"
#include "ecp/lattice.hpp"
#include "ecp/pgroup.hpp"

namespace py = pybind11;
using namespace ecp;

namespace {

py::dict certificate_dict(const Group& g, const Certificate& cert) {
  py::dict d;
  d["subgroup_order"] = cert.subgroup.members.size();
  d["conjugator"] = g.label(cert.conjugator);
  d["conjugator_index"] = cert.conjugator;
  d["witness"] = g.label(cert.witness);
  d["witness_index"] = cert.witness;
  d["witness_in_conjugated_product"] = cert.witness_in_conjugated_product;
  d["product_size"] = cert.product_size;
  d["replays"] = replay_certificate(g, cert);
  return d;
}

py::dict classify_dict(const Group& g, const ClassifyResult& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["classes_checked"] = r.classes_checked;
  d["subgroups_total"] = r.subgroups_total;
  if (r.certificate) d["certificate"] = certificate_dict(g, *r.certificate);
  return d;
}

// Label-string front end for the symbolic direct product, so python callers
// never handle structured values directly.
struct PyBigGroup {
  BigGroup big = paper_big_group();

  std::uint64_t order() const { return big.group.order(); }
  std::string mul(const std::string& x, const std::string& y) const {
    return big.group.label(big.group.mul(big.group.parse(x), big.group.parse(y)));
  }
  std::string inv(const std::string& x) const {
    return big.group.label(big.group.inv(big.group.parse(x)));
  }
  std::string conjugate(const std::string& g, const std::string& x) const {
    return big.group.label(big.group.conjugate(big.group.parse(g), big.group.parse(x)));
  }
  std::string pow(const std::string& x, long long k) const {
    return big.group.label(big.group.pow(big.group.parse(x), k));
  }
  std::uint64_t element_order(const std::string& x) const {
    return big.group.element_order(big.group.parse(x));
  }
  bool central(const std::string& x) const {
    return big.group.commutes_with_generators(big.group.parse(x));
  }
  std::vector<std::string> closure(const std::vector<std::string>& seeds) const {
    std::vector<SymValue> values;
    for (const std::string& s : seeds) values.push_back(big.group.parse(s));
    std::vector<std::string> out;
    for (const SymValue& v : symbolic_closure(big.group, values)) out.push_back(big.group.label(v));
    return out;
  }
  py::dict refute(const std::vector<std::string>& subgroup_gens,
                  const std::vector<std::string>& conjugators) const {
    std::vector<SymValue> seeds;
    for (const std::string& s : subgroup_gens) seeds.push_back(big.group.parse(s));
    const auto members = symbolic_closure(big.group, seeds);
    std::vector<SymValue> xs;
    for (const std::string& s : conjugators) xs.push_back(big.group.parse(s));
    const SymbolicConjPermResult r = refute_conjugate_permutability(big.group, members, xs);
    py::dict d;
    d["refuted"] = r.refuted;
    d["subgroup_order"] = members.size();
    d["conjugators_tested"] = r.conjugators_tested;
    if (r.certificate) {
      d["conjugator"] = big.group.label(r.certificate->conjugator);
      d["witness"] = big.group.label(r.certificate->witness);
      d["product_size"] = r.certificate->product_size;
    }
    return d;
  }
};

} // namespace

PYBIND11_MODULE(ecpgroups, m) {
  m.doc() = "conjugate-permutability toolkit for finite groups";

  // base first: translators run newest-first, so the subclasses must be
  // registered after their base to win
  auto base = py::register_exception<Error>(m, "EcpError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<BudgetError>(m, "BudgetError", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgumentError", base);

  py::class_<Perm>(m, "Perm")
      .def_static("parse", &parse_cycles, py::arg("text"), py::arg("degree"))
      .def_static("identity", &Perm::identity, py::arg("degree"))
      .def_property_readonly("degree", &Perm::degree)
      .def("format", &format_cycles)
      .def("order", &element_order)
      .def("inverse", [](const Perm& p) { return inverse(p); })
      .def("__mul__", &compose) // p * q applies p first, then q
      .def("__pow__", &power)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__repr__", [](const Perm& p) { return "Perm(" + format_cycles(p) + ")"; });

  py::class_<Subgroup>(m, "Subgroup")
      .def_property_readonly("members", [](const Subgroup& s) { return s.members; })
      .def_property_readonly("generators", [](const Subgroup& s) { return s.generators; })
      .def("__len__", [](const Subgroup& s) { return s.members.size(); })
      .def("__contains__", [](const Subgroup& s, Elem g) { return s.contains(g); });

  py::class_<Group>(m, "Group")
      .def_static(
          "from_permutations",
          [](const std::vector<Perm>& gens, const std::string& name, std::size_t cap) {
            return Group::from_permutations(gens, name, cap);
          },
          py::arg("generators"), py::arg("name") = "", py::arg("cap") = kDefaultEnumerationCap)
      .def_static("metacyclic", &Group::metacyclic, py::arg("m"), py::arg("n"), py::arg("r"),
                  py::arg("letter_a") = "a", py::arg("letter_b") = "b", py::arg("name") = "")
      .def_static("direct_product", &Group::direct_product, py::arg("g1"), py::arg("g2"),
                  py::arg("cap") = kDefaultEnumerationCap, py::arg("name") = "")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("name", &Group::name)
      .def_property_readonly("generators", &Group::generators)
      .def("exponent", &Group::exponent)
      .def("mul", &Group::mul)
      .def("inv", &Group::inv)
      .def("conjugate", &Group::conjugate, py::arg("g"), py::arg("x"))
      .def("commutator", &Group::commutator, py::arg("a"), py::arg("b"))
      .def("power", &Group::power)
      .def("element_order", &Group::element_order)
      .def("label", &Group::label)
      .def("find_label", &Group::find_label)
      .def("__len__", &Group::order)
      .def("__repr__",
           [](const Group& g) {
             return "Group(" + (g.name().empty() ? "?" : g.name()) + ", order " +
                    std::to_string(g.order()) + ")";
           });

  m.def("subgroup_closure",
        [](const Group& g, const std::vector<Elem>& seed) { return subgroup_closure(g, seed); });
  m.def("center", &center);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("agemo", &agemo, py::arg("subgroup"), py::arg("p"));
  m.def("is_nilpotent", &is_nilpotent);
  m.def("p_group_prime", &p_group_prime);
  m.def("sylow_orders", [](const Group& g) {
    std::vector<std::size_t> out;
    for (const Subgroup& s : sylow_decompose(g)) out.push_back(s.order());
    return out;
  });
  m.def("big_omega", &big_omega);

  m.def(
      "all_subgroups",
      [](const Group& g, std::size_t max_lattice) {
        return all_subgroups(g, LatticeOptions{max_lattice});
      },
      py::arg("group"), py::arg("max_lattice") = 2048);
  m.def("cyclic_subgroups", &cyclic_subgroups);
  m.def(
      "conjugacy_class_sizes",
      [](const Group& g, std::size_t max_lattice) {
        std::vector<std::size_t> out;
        for (const SubgroupClass& cls : conjugacy_classes_of_subgroups(g, LatticeOptions{max_lattice}))
          out.push_back(cls.conjugates.size());
        return out;
      },
      py::arg("group"), py::arg("max_lattice") = 2048);

  m.def("set_product", &set_product);
  m.def("permute_check", &permute_check);
  m.def("is_conjugate_permutable", [](const Group& g, const Subgroup& h) {
    const ConjPermResult r = is_conjugate_permutable(g, h);
    py::dict d;
    d["conjugate_permutable"] = r.conjugate_permutable;
    if (r.certificate) d["certificate"] = certificate_dict(g, *r.certificate);
    return d;
  });
  m.def(
      "is_ecp",
      [](const Group& g, std::size_t max_lattice) {
        return classify_dict(g, is_ecp(g, LatticeOptions{max_lattice}));
      },
      py::arg("group"), py::arg("max_lattice") = 2048);
  m.def(
      "is_ccp",
      [](const Group& g, std::size_t max_lattice) {
        return classify_dict(g, is_ccp(g, LatticeOptions{max_lattice}));
      },
      py::arg("group"), py::arg("max_lattice") = 2048);
  m.def(
      "all_subgroups_permutable",
      [](const Group& g, std::size_t max_lattice) {
        return all_subgroups_permutable(g, LatticeOptions{max_lattice});
      },
      py::arg("group"), py::arg("max_lattice") = 2048);

  m.def("is_regular", [](const Group& g) {
    const RegularityResult r = is_regular(g);
    py::dict d;
    d["regular"] = r.regular;
    if (r.witness) {
      d["witness"] = *r.witness;
      d["defect"] = g.label(regularity_defect(g, r.witness->first, r.witness->second,
                                              *p_group_prime(g)));
    }
    return d;
  });
  m.def("exponent3_identity_check", &exponent3_identity_check);

  m.def("iterated_commutator", &iterated_commutator);
  m.def(
      "left_engel_depth",
      [](const Group& g, Elem h) { return left_engel_depth(g, h); },
      py::arg("group"), py::arg("h"));
  m.def("theorem4_check", [](const Group& g, const Subgroup& h_sub, Elem h) {
    const EngelReport r = theorem4_check(g, h_sub, h);
    py::dict d;
    d["subgroup_order"] = r.subgroup_order;
    d["t"] = r.t;
    d["n"] = r.n;
    d["depth_in_g"] = r.depth_in_g;
    d["bound"] = r.bound;
    d["holds"] = r.holds;
    return d;
  });
  m.def(
      "theorem4_sweep",
      [](const Group& g, std::size_t max_lattice) {
        const EngelSweepStats s = theorem4_sweep(g, LatticeOptions{max_lattice});
        py::dict d;
        d["subgroups"] = s.subgroups;
        d["conjugate_permutable"] = s.conjugate_permutable;
        d["pairs_checked"] = s.pairs_checked;
        d["pairs_skipped_no_depth"] = s.pairs_skipped_no_depth;
        d["violations"] = s.violations;
        d["max_depth_in_g"] = s.max_depth_in_g;
        d["all_hold"] = s.all_hold();
        return d;
      },
      py::arg("group"), py::arg("max_lattice") = 2048);

  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const CatalogEntry& e : catalog()) out.push_back(e.name);
    return out;
  });
  m.def("build_group", [](const std::string& name) {
    const CatalogEntry* entry = find_catalog_entry(name);
    if (!entry) throw InvalidArgument("unknown catalog name: " + name);
    if (!entry->build) throw InvalidArgument(name + " is symbolic-only; use paper_big_group()");
    return entry->build();
  });
  m.def("group_spec_json", [](const std::string& name) {
    const CatalogEntry* entry = find_catalog_entry(name);
    if (!entry) throw InvalidArgument("unknown catalog name: " + name);
    return entry->spec().to_json_text();
  });
  m.def(
      "build_from_spec_json",
      [](const std::string& text, const std::string& name, std::size_t cap) {
        return GroupSpec::from_json_text(text).build(name, cap);
      },
      py::arg("text"), py::arg("name") = "", py::arg("cap") = kDefaultEnumerationCap);

  m.def("cyclic", &cyclic, py::arg("n"), py::arg("letter") = "a");
  m.def("elementary_abelian", &elementary_abelian);
  m.def("dihedral", &dihedral);
  m.def("quaternion8", &quaternion8);
  m.def("symmetric", &symmetric);
  m.def("heisenberg", &heisenberg);
  m.def("paper_81_10", &paper_81_10);
  m.def("paper_128_1760", &paper_128_1760);

  py::class_<PyBigGroup>(m, "BigGroup")
      .def_property_readonly("order", &PyBigGroup::order)
      .def("mul", &PyBigGroup::mul)
      .def("inv", &PyBigGroup::inv)
      .def("conjugate", &PyBigGroup::conjugate, py::arg("g"), py::arg("x"))
      .def("pow", &PyBigGroup::pow)
      .def("element_order", &PyBigGroup::element_order)
      .def("central", &PyBigGroup::central)
      .def("closure", &PyBigGroup::closure)
      .def("refute_conjugate_permutability", &PyBigGroup::refute, py::arg("subgroup_generators"),
           py::arg("conjugators"));
  m.def("paper_big_group", [] { return PyBigGroup{}; });
}
