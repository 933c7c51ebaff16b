#include "ecp/groupspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ecp/errors.hpp"

namespace ecp {

using nlohmann::json;

namespace {

void require_fields(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw ParseError("group spec: " + where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* name : allowed)
      if (it.key() == name) known = true;
    if (!known) throw ParseError("group spec: unknown field \"" + it.key() + "\" in " + where);
  }
  for (const char* name : allowed)
    if (!obj.contains(name))
      throw ParseError("group spec: missing field \"" + std::string(name) + "\" in " + where);
}

std::uint64_t uint_field(const json& obj, const char* name, const std::string& where) {
  const json& v = obj.at(name);
  if (!v.is_number_unsigned())
    throw ParseError("group spec: field \"" + std::string(name) + "\" in " + where +
                     " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

GroupSpec parse_spec(const json& doc, const std::string& where);

GroupSpec parse_permutation(const json& body, const std::string& where) {
  require_fields(body, {"degree", "generators"}, where + ".permutation");
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::permutation;
  const std::uint64_t degree = uint_field(body, "degree", where + ".permutation");
  if (degree == 0 || degree > 100000)
    throw ParseError("group spec: degree out of range in " + where);
  spec.degree = static_cast<std::uint32_t>(degree);
  const json& gens = body.at("generators");
  if (!gens.is_array() || gens.empty())
    throw ParseError("group spec: generators must be a nonempty array in " + where);
  for (const json& s : gens) {
    if (!s.is_string()) throw ParseError("group spec: generators must be strings in " + where);
    spec.generators.push_back(s.get<std::string>());
    parse_cycles(spec.generators.back(), spec.degree); // validate now
  }
  return spec;
}

GroupSpec parse_metacyclic(const json& body, const std::string& where) {
  require_fields(body, {"m", "n", "r"}, where + ".metacyclic");
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::metacyclic;
  spec.m = uint_field(body, "m", where);
  spec.n = uint_field(body, "n", where);
  spec.r = uint_field(body, "r", where);
  return spec;
}

GroupSpec parse_direct_product(const json& body, const std::string& where) {
  require_fields(body, {"factors"}, where + ".direct_product");
  const json& factors = body.at("factors");
  if (!factors.is_array() || factors.size() < 2)
    throw ParseError("group spec: direct_product needs at least two factors in " + where);
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::direct_product;
  std::size_t i = 0;
  for (const json& f : factors) spec.factors.push_back(parse_spec(f, where + ".factors[" + std::to_string(i++) + "]"));
  return spec;
}

GroupSpec parse_spec(const json& doc, const std::string& where) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw ParseError("group spec: missing \"kind\" in " + where);
  const std::string kind = doc.at("kind").is_string() ? doc.at("kind").get<std::string>() : "";
  if (kind == "permutation") {
    require_fields(doc, {"kind", "permutation"}, where);
    return parse_permutation(doc.at("permutation"), where);
  }
  if (kind == "metacyclic") {
    require_fields(doc, {"kind", "metacyclic"}, where);
    return parse_metacyclic(doc.at("metacyclic"), where);
  }
  if (kind == "direct_product") {
    require_fields(doc, {"kind", "direct_product"}, where);
    return parse_direct_product(doc.at("direct_product"), where);
  }
  throw ParseError("group spec: unknown kind \"" + kind + "\" in " + where);
}

json spec_to_json(const GroupSpec& spec) {
  json doc;
  switch (spec.kind) {
    case GroupSpec::Kind::permutation:
      doc["kind"] = "permutation";
      doc["permutation"] = {{"degree", spec.degree}, {"generators", spec.generators}};
      break;
    case GroupSpec::Kind::metacyclic:
      doc["kind"] = "metacyclic";
      doc["metacyclic"] = {{"m", spec.m}, {"n", spec.n}, {"r", spec.r}};
      break;
    case GroupSpec::Kind::direct_product: {
      doc["kind"] = "direct_product";
      json factors = json::array();
      for (const GroupSpec& f : spec.factors) factors.push_back(spec_to_json(f));
      doc["direct_product"] = {{"factors", factors}};
      break;
    }
  }
  return doc;
}

// consecutive letter pairs for metacyclic factors: (a,b), (c,d), ...
const char* kLetters = "abcdefgh";

Group build_spec(const GroupSpec& spec, const std::string& name, std::size_t cap,
                 std::size_t& letter_cursor) {
  switch (spec.kind) {
    case GroupSpec::Kind::permutation: {
      std::vector<Perm> gens;
      for (const std::string& s : spec.generators) gens.push_back(parse_cycles(s, spec.degree));
      return Group::from_permutations(std::move(gens), name, cap);
    }
    case GroupSpec::Kind::metacyclic: {
      if (letter_cursor + 2 > 8) throw InvalidArgument("too many metacyclic factors to label");
      const std::string la(1, kLetters[letter_cursor]);
      const std::string lb(1, kLetters[letter_cursor + 1]);
      letter_cursor += 2;
      return Group::metacyclic(spec.m, spec.n, spec.r, la, lb, name);
    }
    case GroupSpec::Kind::direct_product: {
      Group acc = build_spec(spec.factors.front(), "", cap, letter_cursor);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        const bool last = i + 1 == spec.factors.size();
        acc = Group::direct_product(acc, build_spec(spec.factors[i], "", cap, letter_cursor), cap,
                                    last ? name : "");
      }
      return acc;
    }
  }
  throw InvalidArgument("unreachable spec kind");
}

} // namespace

GroupSpec GroupSpec::permutation_spec(std::uint32_t degree, std::vector<std::string> generators) {
  GroupSpec spec;
  spec.kind = Kind::permutation;
  spec.degree = degree;
  spec.generators = std::move(generators);
  return spec;
}

GroupSpec GroupSpec::metacyclic_spec(std::uint64_t m, std::uint64_t n, std::uint64_t r) {
  GroupSpec spec;
  spec.kind = Kind::metacyclic;
  spec.m = m;
  spec.n = n;
  spec.r = r;
  return spec;
}

GroupSpec GroupSpec::direct_product_spec(std::vector<GroupSpec> factors) {
  GroupSpec spec;
  spec.kind = Kind::direct_product;
  spec.factors = std::move(factors);
  return spec;
}

GroupSpec GroupSpec::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("group spec: invalid JSON: " + std::string(e.what()));
  }
  return parse_spec(doc, "document");
}

GroupSpec GroupSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read group spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string GroupSpec::to_json_text() const { return spec_to_json(*this).dump(2) + "\n"; }

Group GroupSpec::build(std::string name, std::size_t cap) const {
  std::size_t letter_cursor = 0;
  return build_spec(*this, name, cap, letter_cursor);
}

} // namespace ecp
