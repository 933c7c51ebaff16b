// ecptool: decide conjugate-permutability properties of finite groups given
// as GroupSpec files or catalog names, with refutation certificates.
//
// Exit codes: 0 = every requested property holds (or nothing was refuted),
//             1 = a property was refuted (certificate emitted),
//             2 = error (unreadable input, budget exceeded, parse failure).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecp/catalog.hpp"
#include "ecp/conjperm.hpp"
#include "ecp/engel.hpp"
#include "ecp/errors.hpp"
#include "ecp/groupspec.hpp"
#include "ecp/lattice.hpp"
#include "ecp/pgroup.hpp"

using nlohmann::json;
using namespace ecp;

namespace {

struct Options {
  std::string format = "human";
  std::size_t max_order = kDefaultEnumerationCap;
  std::size_t max_lattice = 2048;
};

struct Report {
  std::string command;
  std::string source;
  std::string group_name;
  std::uint64_t order = 0;
  std::vector<std::pair<std::string, std::string>> properties;
  json certificates = json::array();
  std::vector<std::pair<std::string, double>> timings_ms;
  bool refuted = false;
};

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void print_report(const Report& report, const Options& opts) {
  if (opts.format == "structured") {
    json doc;
    doc["command"] = report.command;
    doc["source"] = report.source;
    doc["group"] = report.group_name;
    doc["order"] = report.order;
    json props = json::object();
    for (const auto& [k, v] : report.properties) props[k] = v;
    doc["properties"] = props;
    doc["certificates"] = report.certificates;
    json timings = json::object();
    for (const auto& [k, v] : report.timings_ms) timings[k] = v;
    doc["timings_ms"] = timings;
    doc["refuted"] = report.refuted;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "group: " << report.group_name << "  [" << report.source << "]\n";
  std::cout << "order: " << report.order << "\n";
  for (const auto& [k, v] : report.properties) std::cout << "  " << k << ": " << v << "\n";
  for (const json& cert : report.certificates) {
    std::cout << "certificate (" << cert.value("property", "") << "):\n";
    if (cert.contains("pair")) {
      std::cout << "  pair (a,b): " << cert["pair"][0].get<std::string>() << ", "
                << cert["pair"][1].get<std::string>() << "\n";
      std::cout << "  defect (ab)^p a^-p b^-p = " << cert.value("defect", "") << "\n";
      continue;
    }
    std::cout << "  subgroup: order " << cert["subgroup_order"].get<std::uint64_t>()
              << ", generators " << cert.value("subgroup_generators", "") << "\n";
    std::cout << "  conjugator x: " << cert.value("conjugator", "");
    if (cert.contains("conjugator_index"))
      std::cout << "  (index " << cert["conjugator_index"].get<std::uint64_t>() << ")";
    std::cout << "\n";
    std::cout << "  witness y:    " << cert.value("witness", "");
    if (cert.contains("witness_index"))
      std::cout << "  (index " << cert["witness_index"].get<std::uint64_t>() << ")";
    std::cout << "\n  " << cert.value("direction", "")
              << "; |H*H^x| = |H^x*H| = " << cert["product_size"].get<std::uint64_t>() << "\n";
    std::cout << "  replay: " << cert.value("replay", "") << "\n";
  }
  for (const auto& [k, v] : report.timings_ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  (%s: %.1f ms)", k.c_str(), v);
    std::cout << buf << "\n";
  }
}

json certificate_json(const Group& g, const Certificate& cert, const std::string& property) {
  json doc;
  doc["property"] = property;
  doc["subgroup_order"] = cert.subgroup.members.size();
  std::string gens = "[";
  for (std::size_t i = 0; i < cert.subgroup.generators.size(); ++i)
    gens += (i ? ", " : "") + g.label(cert.subgroup.generators[i]);
  doc["subgroup_generators"] = gens + "]";
  doc["conjugator"] = g.label(cert.conjugator);
  doc["conjugator_index"] = cert.conjugator;
  doc["witness"] = g.label(cert.witness);
  doc["witness_index"] = cert.witness;
  doc["direction"] = cert.witness_in_conjugated_product
                         ? "witness lies in H^x*H but not in H*H^x"
                         : "witness lies in H*H^x but not in H^x*H";
  doc["product_size"] = cert.product_size;
  doc["replay"] = replay_certificate(g, cert) ? "verified" : "FAILED";
  return doc;
}

// -- input resolution ---------------------------------------------------------

struct Input {
  std::string token;
  std::string source;
  const CatalogEntry* entry = nullptr;
  std::optional<GroupSpec> spec;

  bool symbolic() const { return entry && entry->symbolic_only; }

  Group build(const Options& opts) const {
    if (entry && entry->build) return entry->build();
    const GroupSpec s = spec ? *spec : entry->spec();
    return s.build(entry ? entry->name : token, opts.max_order);
  }
};

Input resolve_input(const std::string& token) {
  Input input;
  input.token = token;
  if (const CatalogEntry* entry = find_catalog_entry(token)) {
    input.entry = entry;
    input.source = "catalog:" + token;
    return input;
  }
  if (std::filesystem::exists(token)) {
    input.spec = GroupSpec::load_file(token);
    input.source = "file:" + token;
    return input;
  }
  throw InvalidArgument("input is neither a catalog name nor a readable file: " + token);
}

// Parses one element word against an enumerated group: cycle notation for
// permutation groups, display labels otherwise.
Elem parse_element(const Group& g, const std::string& word) {
  if (g.permutation(0) != nullptr) {
    const Perm p = parse_cycles(word, g.permutation(0)->degree());
    if (auto idx = g.find_permutation(p)) return *idx;
    throw InvalidArgument("permutation " + word + " is not an element of the group");
  }
  if (auto idx = g.find_label(word)) return *idx;
  throw InvalidArgument("no element labelled \"" + word + "\" in the group");
}

// -- subcommand bodies --------------------------------------------------------

int cmd_info(const Input& input, const Options& opts) {
  Timer timer;
  const Group g = input.build(opts);
  Report report{"info", input.source, g.name(), g.order(), {}, json::array(), {}, false};
  report.properties.emplace_back("exponent", std::to_string(g.exponent()));
  report.properties.emplace_back("center_order", std::to_string(center(g).order()));
  report.properties.emplace_back("derived_order", std::to_string(derived_subgroup(g).order()));
  report.properties.emplace_back("nilpotent", is_nilpotent(g) ? "true" : "false");
  if (auto p = p_group_prime(g)) report.properties.emplace_back("p_group", std::to_string(*p));
  std::string sylow;
  for (const Subgroup& s : sylow_decompose(g)) {
    if (!sylow.empty()) sylow += " * ";
    sylow += std::to_string(s.order());
  }
  report.properties.emplace_back("sylow_orders", sylow);
  report.timings_ms.emplace_back("info", timer.ms());
  print_report(report, opts);
  return 0;
}

int cmd_check(const Input& input, const Options& opts, std::vector<std::string> properties) {
  if (properties.empty()) properties = {"ecp", "ccp"};
  const Group g = input.build(opts);
  Report report{"check", input.source, g.name(), g.order(), {}, json::array(), {}, false};
  const LatticeOptions lattice_opts{opts.max_lattice};
  for (const std::string& prop : properties) {
    Timer timer;
    if (prop == "ecp" || prop == "ccp") {
      const ClassifyResult r = prop == "ecp" ? is_ecp(g, lattice_opts) : is_ccp(g, lattice_opts);
      report.properties.emplace_back(prop, r.holds ? "true" : "false");
      if (!r.holds) {
        report.refuted = true;
        if (r.certificate)
          report.certificates.push_back(certificate_json(g, *r.certificate, prop));
      }
    } else if (prop == "regular") {
      if (g.order() > opts.max_lattice)
        throw BudgetError("regularity scan is quadratic; group order " +
                          std::to_string(g.order()) + " exceeds --max-lattice " +
                          std::to_string(opts.max_lattice));
      const RegularityResult r = is_regular(g);
      report.properties.emplace_back(prop, r.regular ? "true" : "false");
      if (!r.regular) {
        report.refuted = true;
        json cert;
        cert["property"] = "regular";
        const auto [a, b] = *r.witness;
        cert["pair"] = json::array({g.label(a), g.label(b)});
        cert["defect"] = g.label(regularity_defect(g, a, b, *p_group_prime(g)));
        report.certificates.push_back(cert);
      }
    } else if (prop == "iwasawa") {
      const bool ok = all_subgroups_permutable(g, lattice_opts);
      report.properties.emplace_back(prop, ok ? "true" : "false");
      if (!ok) report.refuted = true;
    } else {
      throw InvalidArgument("unknown property \"" + prop +
                            "\" (expected ecp, ccp, regular, iwasawa)");
    }
    report.timings_ms.emplace_back(prop, timer.ms());
  }
  print_report(report, opts);
  return report.refuted ? 1 : 0;
}

int cmd_conjperm(const Input& input, const Options& opts, const std::vector<std::string>& subgroup,
                 const std::vector<std::string>& conjugators) {
  if (input.symbolic()) {
    const BigGroup big = paper_big_group();
    if (conjugators.empty())
      throw InvalidArgument(
          "symbolic groups need --conjugators: a whole-group scan requires enumerated mode");
    std::vector<SymValue> seeds;
    for (const std::string& w : subgroup) seeds.push_back(big.group.parse(w));
    const auto members = symbolic_closure(big.group, seeds);
    std::vector<SymValue> xs;
    for (const std::string& w : conjugators) xs.push_back(big.group.parse(w));
    Timer timer;
    const SymbolicConjPermResult r = refute_conjugate_permutability(big.group, members, xs);
    Report report{"conjperm", input.source,   big.group.name(), big.group.order(), {},
                  json::array(), {}, r.refuted};
    report.properties.emplace_back("subgroup_order", std::to_string(members.size()));
    report.properties.emplace_back("conjugators_tested", std::to_string(r.conjugators_tested));
    report.properties.emplace_back("conjugate_permutable",
                                   r.refuted ? "refuted" : "not refuted by supplied conjugators");
    if (r.certificate) {
      json cert;
      cert["property"] = "conjugate_permutable";
      cert["subgroup_order"] = members.size();
      std::string gens = "[";
      for (std::size_t i = 0; i < subgroup.size(); ++i) gens += (i ? ", " : "") + subgroup[i];
      cert["subgroup_generators"] = gens + "]";
      cert["conjugator"] = big.group.label(r.certificate->conjugator);
      cert["witness"] = big.group.label(r.certificate->witness);
      cert["direction"] = "witness lies in H^x*H but not in H*H^x";
      cert["product_size"] = r.certificate->product_size;
      std::vector<SymValue> conj;
      for (const SymValue& m : members)
        conj.push_back(big.group.conjugate(m, r.certificate->conjugator));
      const auto hk = symbolic_set_product(big.group, members, conj);
      const auto kh = symbolic_set_product(big.group, conj, members);
      const bool replays = std::binary_search(kh.begin(), kh.end(), r.certificate->witness) &&
                           !std::binary_search(hk.begin(), hk.end(), r.certificate->witness);
      cert["replay"] = replays ? "verified" : "FAILED";
      report.certificates.push_back(cert);
    }
    report.timings_ms.emplace_back("conjperm", timer.ms());
    print_report(report, opts);
    return r.refuted ? 1 : 0;
  }

  const Group g = input.build(opts);
  std::vector<Elem> seeds;
  for (const std::string& w : subgroup) seeds.push_back(parse_element(g, w));
  const Subgroup h = subgroup_closure(g, seeds);
  Report report{"conjperm", input.source, g.name(), g.order(), {}, json::array(), {}, false};
  report.properties.emplace_back("subgroup_order", std::to_string(h.order()));
  Timer timer;
  if (conjugators.empty()) {
    const ConjPermResult r = is_conjugate_permutable(g, h);
    report.properties.emplace_back("conjugate_permutable",
                                   r.conjugate_permutable ? "true" : "false");
    if (!r.conjugate_permutable) {
      report.refuted = true;
      report.certificates.push_back(certificate_json(g, *r.certificate, "conjugate_permutable"));
    }
  } else {
    // restricted scan: refute or report not-refuted, never "true"
    std::optional<Certificate> found;
    for (const std::string& w : conjugators) {
      const Elem x = parse_element(g, w);
      const Subgroup k = conjugate_subgroup(h, x);
      const auto hk = set_product(h, k);
      std::vector<bool> bits(g.order(), false);
      for (Elem e : hk) bits[e] = true;
      for (Elem u : k.members) {
        for (Elem v : h.members) {
          const Elem y = g.mul(u, v);
          if (!bits[y]) {
            found = Certificate{h, x, y, true, hk.size()};
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    report.properties.emplace_back("conjugators_tested", std::to_string(conjugators.size()));
    report.properties.emplace_back("conjugate_permutable",
                                   found ? "refuted" : "not refuted by supplied conjugators");
    if (found) {
      report.refuted = true;
      report.certificates.push_back(certificate_json(g, *found, "conjugate_permutable"));
    }
  }
  report.timings_ms.emplace_back("conjperm", timer.ms());
  print_report(report, opts);
  return report.refuted ? 1 : 0;
}

int cmd_engel(const Input& input, const Options& opts, const std::vector<std::string>& subgroup,
              const std::string& element) {
  const Group g = input.build(opts);
  Report report{"engel", input.source, g.name(), g.order(), {}, json::array(), {}, false};
  Timer timer;
  if (!subgroup.empty()) {
    std::vector<Elem> seeds;
    for (const std::string& w : subgroup) seeds.push_back(parse_element(g, w));
    const Subgroup h_sub = subgroup_closure(g, seeds);
    const Elem h = element.empty() ? (h_sub.generators.empty() ? 0 : h_sub.generators.front())
                                   : parse_element(g, element);
    const EngelReport r = theorem4_check(g, h_sub, h);
    report.properties.emplace_back("subgroup_order", std::to_string(r.subgroup_order));
    report.properties.emplace_back("element", g.label(h));
    report.properties.emplace_back("n", std::to_string(r.n));
    report.properties.emplace_back("t", std::to_string(r.t));
    report.properties.emplace_back("bound", std::to_string(r.bound));
    report.properties.emplace_back("depth_in_g", std::to_string(r.depth_in_g));
    report.properties.emplace_back("holds", r.holds ? "true" : "false");
    report.refuted = !r.holds;
  } else {
    const EngelSweepStats stats = theorem4_sweep(g, LatticeOptions{opts.max_lattice});
    report.properties.emplace_back("subgroups", std::to_string(stats.subgroups));
    report.properties.emplace_back("conjugate_permutable",
                                   std::to_string(stats.conjugate_permutable));
    report.properties.emplace_back("pairs_checked", std::to_string(stats.pairs_checked));
    report.properties.emplace_back("pairs_skipped_no_depth",
                                   std::to_string(stats.pairs_skipped_no_depth));
    report.properties.emplace_back("max_depth_in_g", std::to_string(stats.max_depth_in_g));
    report.properties.emplace_back("violations", std::to_string(stats.violations));
    report.properties.emplace_back("holds", stats.all_hold() ? "true" : "false");
    report.refuted = !stats.all_hold();
  }
  report.timings_ms.emplace_back("engel", timer.ms());
  print_report(report, opts);
  return report.refuted ? 1 : 0;
}

int cmd_lattice(const Input& input, const Options& opts) {
  const Group g = input.build(opts);
  Report report{"lattice", input.source, g.name(), g.order(), {}, json::array(), {}, false};
  Timer timer;
  const LatticeOptions lattice_opts{opts.max_lattice};
  const auto subs = all_subgroups(g, lattice_opts);
  const auto classes = conjugacy_classes_of_subgroups(g, lattice_opts);
  report.properties.emplace_back("subgroups", std::to_string(subs.size()));
  report.properties.emplace_back("cyclic_subgroups", std::to_string(cyclic_subgroups(g).size()));
  report.properties.emplace_back("conjugacy_classes", std::to_string(classes.size()));
  std::string by_order;
  std::size_t i = 0;
  while (i < subs.size()) {
    std::size_t j = i;
    while (j < subs.size() && subs[j].order() == subs[i].order()) ++j;
    if (!by_order.empty()) by_order += ", ";
    by_order += std::to_string(subs[i].order()) + ":" + std::to_string(j - i);
    i = j;
  }
  report.properties.emplace_back("subgroups_by_order", by_order);
  report.timings_ms.emplace_back("lattice", timer.ms());
  print_report(report, opts);
  return 0;
}

int cmd_catalog_list() {
  for (const CatalogEntry& entry : catalog()) {
    std::cout << entry.name << "  (order " << entry.order << ")" << (entry.slow ? "  [slow]" : "")
              << (entry.symbolic_only ? "  [symbolic]" : "") << "\n    " << entry.summary << "\n";
  }
  return 0;
}

int cmd_catalog_build(const std::string& name, const std::string& out_path) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (!entry) throw InvalidArgument("unknown catalog name: " + name);
  const std::string text = entry->spec().to_json_text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
  }
  return 0;
}

// Golden verification of the symbolic entry: the recorded subgroup element
// lists and the refutation with conjugator abcd.
bool verify_big_group(std::vector<std::string>& failures) {
  const BigGroup big = paper_big_group();
  if (big.group.order() != 59049) failures.push_back("paper-big-group: order != 59049");
  const auto k_closure = symbolic_closure(big.group, std::vector<SymValue>{big.k});
  const auto expected_k = paper_big_group_k_labels();
  if (k_closure.size() != 9) failures.push_back("paper-big-group: |<k>| != 9");
  for (std::size_t i = 0; i < k_closure.size() && i < expected_k.size(); ++i)
    if (big.group.parse(expected_k[i]) != k_closure[i])
      failures.push_back("paper-big-group: <k> member " + std::to_string(i) + " mismatch");
  const SymValue kx = big.group.conjugate(big.k, big.x);
  const auto kx_closure = symbolic_closure(big.group, std::vector<SymValue>{kx});
  const auto expected_kx = paper_big_group_kx_labels();
  for (std::size_t i = 0; i < kx_closure.size() && i < expected_kx.size(); ++i)
    if (big.group.parse(expected_kx[i]) != kx_closure[i])
      failures.push_back("paper-big-group: <k^x> member " + std::to_string(i) + " mismatch");
  const auto r = refute_conjugate_permutability(big.group, k_closure, std::vector<SymValue>{big.x});
  if (!r.refuted || !r.certificate || big.group.label(r.certificate->witness) != "b^4c^3d^2")
    failures.push_back("paper-big-group: refutation witness is not b^4c^3d^2");
  return failures.empty();
}

int cmd_catalog_verify(bool include_slow) {
  bool all_ok = true;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.slow && !include_slow) {
      std::cout << "SKIP " << entry.name << " (slow)\n";
      continue;
    }
    std::vector<std::string> failures;
    if (entry.symbolic_only) {
      verify_big_group(failures);
    } else {
      const Group g = entry.build();
      if (g.order() != entry.order)
        failures.push_back("order: expected " + std::to_string(entry.order) + ", got " +
                           std::to_string(g.order()));
      for (const PropertyExpectation& p : entry.golden) {
        const std::string got = evaluate_property(g, p.property);
        if (got != p.expected)
          failures.push_back(p.property + ": expected " + p.expected + ", got " + got + " [" +
                             p.provenance + "]");
      }
    }
    if (failures.empty()) {
      std::cout << "OK   " << entry.name << "\n";
    } else {
      all_ok = false;
      std::cout << "FAIL " << entry.name << "\n";
      for (const std::string& f : failures) std::cout << "     " << f << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group conjugate-permutability toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "output format: human | structured")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--max-order", opts.max_order, "enumeration cap")->capture_default_str();
  app.add_option("--max-lattice", opts.max_lattice, "lattice budget (max group order)")
      ->capture_default_str();

  std::string input_token;
  std::vector<std::string> properties;
  bool flag_ecp = false, flag_ccp = false, flag_regular = false, flag_iwasawa = false;
  std::vector<std::string> subgroup_words, conjugator_words;
  std::string element_word;
  std::string catalog_name, out_path;
  bool include_slow = false;

  CLI::App* info =
      app.add_subcommand("info", "order, exponent, center, derived, nilpotency, Sylow");
  info->add_option("input", input_token, "catalog name or GroupSpec file")->required();

  CLI::App* check = app.add_subcommand("check", "decide ecp / ccp / regular / iwasawa");
  check->add_option("input", input_token)->required();
  check->add_option("--properties", properties, "comma-separated property list")->delimiter(',');
  check->add_flag("--ecp", flag_ecp);
  check->add_flag("--ccp", flag_ccp);
  check->add_flag("--regular", flag_regular);
  check->add_flag("--iwasawa", flag_iwasawa);

  CLI::App* conjperm =
      app.add_subcommand("conjperm", "conjugate-permutability of one subgroup, with certificate");
  conjperm->add_option("input", input_token)->required();
  conjperm->add_option("--subgroup", subgroup_words, "subgroup generators (labels or cycles)")
      ->required();
  conjperm->add_option("--conjugators", conjugator_words, "conjugators to test (labels or cycles)");

  CLI::App* engel = app.add_subcommand("engel", "Engel depth bound sweep or single query");
  engel->add_option("input", input_token)->required();
  engel->add_option("--subgroup", subgroup_words, "subgroup generators");
  engel->add_option("--element", element_word, "element h of the subgroup");

  CLI::App* lattice = app.add_subcommand("lattice", "subgroup and conjugacy-class counts");
  lattice->add_option("input", input_token)->required();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in groups");
  CLI::App* cat_list = catalog_cmd->add_subcommand("list", "list catalog entries");
  CLI::App* cat_build = catalog_cmd->add_subcommand("build", "export a GroupSpec");
  cat_build->add_option("name", catalog_name)->required();
  cat_build->add_option("--out", out_path, "write to file instead of stdout");
  CLI::App* cat_verify = catalog_cmd->add_subcommand("verify", "run the golden suite");
  cat_verify->add_flag("--slow", include_slow, "include slow entries");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*info) return cmd_info(resolve_input(input_token), opts);
    if (*check) {
      if (flag_ecp) properties.push_back("ecp");
      if (flag_ccp) properties.push_back("ccp");
      if (flag_regular) properties.push_back("regular");
      if (flag_iwasawa) properties.push_back("iwasawa");
      return cmd_check(resolve_input(input_token), opts, properties);
    }
    if (*conjperm)
      return cmd_conjperm(resolve_input(input_token), opts, subgroup_words, conjugator_words);
    if (*engel) return cmd_engel(resolve_input(input_token), opts, subgroup_words, element_word);
    if (*lattice) return cmd_lattice(resolve_input(input_token), opts);
    if (*catalog_cmd) {
      if (*cat_list) return cmd_catalog_list();
      if (*cat_build) return cmd_catalog_build(catalog_name, out_path);
      if (*cat_verify) return cmd_catalog_verify(include_slow);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
