// Copyright 2026 The totgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "totgraph/error.hpp"
#include "totgraph/ring.hpp"

namespace totgraph {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position,
                       std::vector<std::string> expected)
    : Error(message + " at position " + std::to_string(position) +
            (expected.empty() ? std::string{} : " (expected " + join_expected(expected) + ")")),
      position_(position),
      expected_(std::move(expected)) {}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> factor_prime_powers(std::uint64_t n,
                                               std::vector<std::uint32_t>* exps) {
  std::vector<std::uint32_t> primes;
  if (exps != nullptr) exps->clear();
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    primes.push_back(static_cast<std::uint32_t>(d));
    if (exps != nullptr) exps->push_back(e);
  }
  if (n > 1) {
    primes.push_back(static_cast<std::uint32_t>(n));
    if (exps != nullptr) exps->push_back(1);
  }
  return primes;
}

BlockDescriptor BlockDescriptor::integers(std::uint32_t p, std::uint32_t k) {
  return BlockDescriptor{BlockKind::IntegerModPrimePower, p, k, {}};
}

BlockDescriptor BlockDescriptor::galois(std::uint32_t p, std::uint32_t k) {
  return BlockDescriptor{BlockKind::GaloisField, p, k, {}};
}

BlockDescriptor BlockDescriptor::quotient(std::uint32_t p, std::uint32_t k, Poly modulus) {
  const auto q = static_cast<std::uint32_t>(ipow(p, k));
  return BlockDescriptor{BlockKind::PolyQuotient, p, k, poly_reduce_coefficients(modulus, q)};
}

std::uint32_t BlockDescriptor::base_modulus() const {
  if (kind == BlockKind::GaloisField) return p;
  return static_cast<std::uint32_t>(ipow(p, k));
}

std::uint32_t BlockDescriptor::degree() const {
  switch (kind) {
    case BlockKind::IntegerModPrimePower: return 1;
    case BlockKind::GaloisField: return k;
    case BlockKind::PolyQuotient: return static_cast<std::uint32_t>(std::max(poly_degree(modulus), 0));
  }
  return 1;
}

std::uint64_t BlockDescriptor::order() const { return ipow(base_modulus(), degree()); }

std::uint64_t BlockDescriptor::residue_size() const {
  switch (kind) {
    case BlockKind::IntegerModPrimePower: return p;
    case BlockKind::GaloisField: return ipow(p, k);
    case BlockKind::PolyQuotient: {
      auto e = prime_power_factor_degree(modulus, p);
      return e ? ipow(p, *e) : 0;
    }
  }
  return 0;
}

std::string BlockDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case BlockKind::IntegerModPrimePower: os << 'Z' << base_modulus(); break;
    case BlockKind::GaloisField: os << "GF(" << ipow(p, k) << ')'; break;
    case BlockKind::PolyQuotient:
      os << 'Z' << base_modulus() << "[x]/(" << poly_to_string(modulus) << ')';
      break;
  }
  return os.str();
}

bool block_less(const BlockDescriptor& a, const BlockDescriptor& b) {
  const auto ra = a.residue_size(), rb = b.residue_size();
  if (ra != rb) return ra < rb;
  const auto oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.p != b.p) return a.p < b.p;
  if (a.modulus.size() != b.modulus.size()) return a.modulus.size() < b.modulus.size();
  return std::lexicographical_compare(a.modulus.rbegin(), a.modulus.rend(),
                                      b.modulus.rbegin(), b.modulus.rend());
}

std::uint64_t RingDescriptor::order() const {
  std::uint64_t n = 1;
  for (const auto& b : blocks) n *= b.order();
  return n;
}

std::string RingDescriptor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += " x ";
    out += blocks[i].to_string();
  }
  return out;
}

void normalize(RingDescriptor& desc) {
  for (auto& b : desc.blocks) {
    if (b.kind == BlockKind::GaloisField && b.k == 1) b = BlockDescriptor::integers(b.p, 1);
  }
  std::stable_sort(desc.blocks.begin(), desc.blocks.end(), block_less);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  RingDescriptor parse() {
    RingDescriptor desc;
    desc.source_text = std::string(text_);
    parse_block(desc.blocks);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (text_[pos_] != 'x') fail("syntax error", {"'x'", "end of input"});
      ++pos_;
      parse_block(desc.blocks);
    }
    normalize(desc);
    return desc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw ParseError(msg, pos_, std::move(expected));
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail("syntax error", {std::string("'") + c + "'"});
    ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("syntax error", {"integer"});
    }
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large", {});
      ++pos_;
    }
    return v;
  }

  void parse_block(std::vector<BlockDescriptor>& out) {
    const char c = peek();
    if (c == 'Z') {
      ++pos_;
      const std::size_t arg_pos = pos_;
      const std::uint64_t n = parse_int();
      if (n < 2) throw ParseError("modulus must be at least 2", arg_pos);
      std::vector<std::uint32_t> exps;
      const auto primes = factor_prime_powers(n, &exps);
      if (peek() == '[') {
        if (primes.size() != 1) {
          throw ParseError("polynomial quotient base must be a prime power", arg_pos);
        }
        ++pos_;
        expect('x');
        expect(']');
        expect('/');
        expect('(');
        const std::size_t poly_pos = pos_;
        Poly f = parse_poly(static_cast<std::uint32_t>(n));
        expect(')');
        const int d = poly_degree(f);
        if (d < 1 || f[d] != 1) throw ParseError("polynomial not monic", poly_pos);
        out.push_back(BlockDescriptor::quotient(primes[0], exps[0], std::move(f)));
        return;
      }
      for (std::size_t i = 0; i < primes.size(); ++i) {
        out.push_back(BlockDescriptor::integers(primes[i], exps[i]));
      }
      return;
    }
    if (c == 'G') {
      ++pos_;
      expect('F');
      expect('(');
      skip_ws();
      const std::size_t arg_pos = pos_;
      const std::uint64_t q = parse_int();
      std::vector<std::uint32_t> exps;
      const auto primes = factor_prime_powers(q, &exps);
      if (q < 2 || primes.size() != 1) {
        throw ParseError("GF argument not a prime power", arg_pos);
      }
      expect(')');
      out.push_back(BlockDescriptor::galois(primes[0], exps[0]));
      return;
    }
    fail("syntax error", {"'Z'", "'GF('"});
  }

  // poly := term ('+' term)* ; term := INT ['*'] 'x' ['^' INT] | 'x' ['^' INT] | INT
  Poly parse_poly(std::uint32_t q) {
    std::map<std::uint64_t, std::uint64_t> terms;
    do {
      std::uint64_t coeff = 1;
      std::uint64_t power = 0;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = parse_int();
        if (peek() == '*') {
          ++pos_;
          if (peek() != 'x') fail("syntax error", {"'x'"});
        }
      } else if (c != 'x') {
        fail("syntax error", {"integer", "'x'"});
      }
      if (peek() == 'x') {
        ++pos_;
        power = 1;
        if (peek() == '^') {
          ++pos_;
          power = parse_int();
          if (power > 64) fail("exponent too large", {});
        }
      }
      terms[power] = (terms[power] + coeff % q) % q;
    } while (peek() == '+' && (++pos_, true));
    Poly f(terms.rbegin()->first + 1, 0);
    for (const auto& [pw, cf] : terms) f[pw] = static_cast<std::uint32_t>(cf);
    poly_trim(f);
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingDescriptor parse_ring_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace totgraph
