#include "ecp/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1ull) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidArgument("no modular inverse");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

} // namespace

MetacyclicParams MetacyclicParams::make(std::uint64_t m, std::uint64_t n, std::uint64_t r) {
  if (m < 1 || n < 1) throw InvalidArgument("metacyclic parameters require m, n >= 1");
  r %= m;
  if (std::gcd(r, m) != 1) throw InvalidArgument("metacyclic twist r must be coprime to m");
  if (mod_pow(r, n, m) != 1 % m)
    throw InvalidArgument("metacyclic relation requires r^n = 1 (mod m)");
  return MetacyclicParams{m, n, r, m == 1 ? 0 : mod_inverse(r, m)};
}

MetaValue mc_mul(const MetacyclicParams& p, MetaValue x, MetaValue y) {
  // (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 s^j1) b^(j1 + j2)
  return MetaValue{(x.i + y.i * mod_pow(p.s, x.j, p.m)) % p.m, (x.j + y.j) % p.n};
}

MetaValue mc_inv(const MetacyclicParams& p, MetaValue x) {
  const std::uint64_t j = (p.n - x.j) % p.n;
  const std::uint64_t i = p.m == 1 ? 0 : (p.m - x.i * mod_pow(p.r, x.j, p.m) % p.m) % p.m;
  return MetaValue{i, j};
}

SymbolicProduct::SymbolicProduct(std::vector<MetacyclicParams> factors,
                                 std::vector<std::array<std::string, 2>> letters, std::string name)
    : factors_(std::move(factors)), letters_(std::move(letters)), name_(std::move(name)) {
  if (factors_.empty() || factors_.size() != letters_.size())
    throw InvalidArgument("symbolic product needs one letter pair per factor");
}

std::uint64_t SymbolicProduct::order() const {
  std::uint64_t o = 1;
  for (const auto& f : factors_) o *= f.m * f.n;
  return o;
}

SymbolicProduct::Value SymbolicProduct::identity() const {
  return Value(factors_.size(), MetaValue{});
}

SymbolicProduct::Value SymbolicProduct::mul(const Value& x, const Value& y) const {
  if (x.size() != factors_.size() || y.size() != factors_.size())
    throw InvalidArgument("symbolic value has wrong factor count");
  Value out(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) out[f] = mc_mul(factors_[f], x[f], y[f]);
  return out;
}

SymbolicProduct::Value SymbolicProduct::inv(const Value& x) const {
  Value out(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) out[f] = mc_inv(factors_[f], x[f]);
  return out;
}

SymbolicProduct::Value SymbolicProduct::pow(const Value& x, long long k) const {
  Value base = k < 0 ? inv(x) : x;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                               : static_cast<unsigned long long>(k);
  Value acc = identity();
  while (e != 0) {
    if (e & 1ull) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

SymbolicProduct::Value SymbolicProduct::conjugate(const Value& g, const Value& x) const {
  return mul(mul(inv(x), g), x);
}

SymbolicProduct::Value SymbolicProduct::commutator(const Value& a, const Value& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::uint64_t SymbolicProduct::element_order(const Value& x) const {
  std::uint64_t k = 1;
  Value cur = x;
  const Value id = identity();
  while (cur != id) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

std::string SymbolicProduct::label(const Value& x) const {
  if (x.size() != factors_.size()) throw InvalidArgument("symbolic value has wrong factor count");
  std::string out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto append = [&](const std::string& letter, std::uint64_t e) {
      if (e == 0) return;
      out += letter;
      if (e != 1) out += "^" + std::to_string(e);
    };
    append(letters_[f][0], x[f].i);
    append(letters_[f][1], x[f].j);
  }
  return out.empty() ? "e" : out;
}

SymbolicProduct::Value SymbolicProduct::generator(std::string_view letter) const {
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (letters_[f][0] == letter) {
      Value v = identity();
      v[f].i = 1 % factors_[f].m;
      return v;
    }
    if (letters_[f][1] == letter) {
      Value v = identity();
      v[f].j = 1 % factors_[f].n;
      return v;
    }
  }
  throw InvalidArgument("unknown generator letter '" + std::string(letter) + "'");
}

std::vector<SymbolicProduct::Value> SymbolicProduct::generators() const {
  std::vector<Value> out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (factors_[f].m > 1) out.push_back(generator(letters_[f][0]));
    if (factors_[f].n > 1) out.push_back(generator(letters_[f][1]));
  }
  return out;
}

bool SymbolicProduct::commutes_with_generators(const Value& x) const {
  for (const Value& g : generators())
    if (mul(x, g) != mul(g, x)) return false;
  return true;
}

SymbolicProduct::Value SymbolicProduct::parse(std::string_view word) const {
  if (word == "e" || word == "()") return identity();
  Value out = identity();
  std::size_t pos = 0;
  while (pos < word.size()) {
    // longest-match over all letters at this position
    std::size_t best_f = factors_.size();
    int best_part = -1;
    std::size_t best_len = 0;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      for (int part = 0; part < 2; ++part) {
        const std::string& letter = letters_[f][part];
        if (!letter.empty() && letter.size() > best_len && word.substr(pos, letter.size()) == letter) {
          best_f = f;
          best_part = part;
          best_len = letter.size();
        }
      }
    }
    if (best_part < 0)
      throw ParseError("element word error at position " + std::to_string(pos + 1) +
                       ": expected a generator letter");
    pos += best_len;
    std::uint64_t exp = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < word.size() && word[pos] >= '0' && word[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(word[pos] - '0');
        ++pos;
      }
      if (pos == start)
        throw ParseError("element word error at position " + std::to_string(start + 1) +
                         ": expected an exponent");
      exp = value;
    }
    Value g = generator(letters_[best_f][static_cast<std::size_t>(best_part)]);
    out = mul(out, pow(g, static_cast<long long>(exp)));
  }
  return out;
}

std::vector<SymbolicProduct::Value> symbolic_closure(const SymbolicProduct& g,
                                                     std::span<const SymbolicProduct::Value> seeds) {
  std::vector<SymbolicProduct::Value> elems;
  std::set<SymbolicProduct::Value> seen;
  elems.push_back(g.identity());
  seen.insert(elems.back());
  for (const auto& s : seeds) {
    if (seen.insert(s).second) elems.push_back(s);
  }
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const auto x = elems[head];
    for (const auto& s : seeds) {
      auto y = g.mul(x, s);
      if (seen.insert(y).second) elems.push_back(std::move(y));
    }
  }
  return elems;
}

} // namespace ecp
