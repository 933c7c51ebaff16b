#include "ecp/perm.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw ParseError("cycle notation error at position " + std::to_string(pos + 1) + ": " + what);
}

} // namespace

Perm::Perm(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw InvalidArgument("permutation image is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("cannot compose permutations of degrees " +
                          std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<std::uint32_t> img(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) img[i] = q.apply(p.apply(i));
  return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<std::uint32_t> img(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) img[p.apply(i)] = i;
  return Perm(std::move(img));
}

Perm power(const Perm& p, long long k) {
  Perm base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                               : static_cast<unsigned long long>(k);
  Perm acc = Perm::identity(p.degree());
  while (e != 0) {
    if (e & 1ull) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Perm& p) {
  std::vector<bool> seen(p.degree(), false);
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p.apply(j);
      ++len;
    }
    const std::uint64_t g = std::gcd(order, len);
    if (order / g > std::numeric_limits<std::uint64_t>::max() / len)
      throw Error("element order overflows 64 bits");
    order = order / g * len;
  }
  return order;
}

Perm parse_cycles(std::string_view text, std::uint32_t degree) {
  if (text == "()") return Perm::identity(degree);
  if (text.empty()) parse_fail(0, "empty input");

  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto read_int = [&]() -> std::uint32_t {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > degree) parse_fail(start, "point out of range (degree " + std::to_string(degree) + ")");
      ++pos;
    }
    if (pos == start) parse_fail(pos, "expected a point number");
    if (value == 0) parse_fail(start, "points are 1-based; 0 is not a point");
    if (used[value - 1]) parse_fail(start, "point " + std::to_string(value) + " repeats");
    used[value - 1] = true;
    return static_cast<std::uint32_t>(value - 1);
  };

  while (pos < text.size()) {
    if (text[pos] != '(') parse_fail(pos, "expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    cycle.push_back(read_int());
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      cycle.push_back(read_int());
    }
    if (pos >= text.size() || text[pos] != ')')
      parse_fail(pos, "expected ',' or ')'");
    ++pos;
    if (cycle.size() < 2) parse_fail(pos - 1, "a cycle needs at least two points");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.apply(i) == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = p.apply(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.image()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace ecp
