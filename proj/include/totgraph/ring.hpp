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

// Finite commutative rings presented as products of finite local rings.
//
// A ring is described by a list of blocks, each one of
//   Z<p^k>                 integers modulo a prime power
//   GF(p^k)                Galois field, realized as Z/p[x]/(g) with g the
//                          lexicographically smallest monic irreducible
//   Z<p^k>[x]/(f)          polynomial quotient over Z/p^k, f monic
// and every block must be a local ring. Elements of the product are
// enumerated as mixed-radix tuples of block elements (first block most
// significant). Inside a block with base modulus q and degree d, the
// element c_0 + c_1 x + ... + c_{d-1} x^{d-1} has index sum c_i q^i.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "totgraph/poly.hpp"

namespace totgraph {

using Element = std::uint32_t;

enum class BlockKind : std::uint8_t {
  IntegerModPrimePower = 0,
  GaloisField = 1,
  PolyQuotient = 2,
};

struct BlockDescriptor {
  BlockKind kind = BlockKind::IntegerModPrimePower;
  std::uint32_t p = 2;  // prime
  std::uint32_t k = 1;  // exponent >= 1
  // PolyQuotient only: monic modulus over Z/p^k, low degree first.
  Poly modulus;

  static BlockDescriptor integers(std::uint32_t p, std::uint32_t k);
  static BlockDescriptor galois(std::uint32_t p, std::uint32_t k);
  static BlockDescriptor quotient(std::uint32_t p, std::uint32_t k, Poly modulus);

  std::uint32_t base_modulus() const;  // p^k for Z and PolyQuotient, p for GF
  std::uint32_t degree() const;        // 1 for Z, k for GF, deg f otherwise
  std::uint64_t order() const;
  /// Size of the residue field; 0 when the block is not local.
  std::uint64_t residue_size() const;

  std::string to_string() const;
  friend bool operator==(const BlockDescriptor&, const BlockDescriptor&) = default;
};

/// Canonical block order: residue-field size, block order, kind tag,
/// modulus coefficients.
bool block_less(const BlockDescriptor& a, const BlockDescriptor& b);

struct RingDescriptor {
  std::vector<BlockDescriptor> blocks;
  std::string source_text;

  std::uint64_t order() const;
  /// Canonical spelling, e.g. "Z2 x Z3 x GF(4)".
  std::string to_string() const;
  bool operator==(const RingDescriptor& other) const { return blocks == other.blocks; }
};

/// Sorts blocks into canonical order and rewrites GF(p) as Zp.
void normalize(RingDescriptor& desc);

/// Parses `ring := block ("x" block)*`. Composite moduli in "Zn" are split
/// into prime-power blocks. Whitespace is ignored.
RingDescriptor parse_ring_spec(std::string_view text);

std::vector<std::uint32_t> factor_prime_powers(std::uint64_t n,
                                               std::vector<std::uint32_t>* exps);
bool is_prime(std::uint64_t n);

/// One realized local block: arithmetic on indices 0..order-1 plus its
/// residue map onto the canonical residue field.
class Block {
 public:
  static Block realize(const BlockDescriptor& desc);

  const BlockDescriptor& descriptor() const { return desc_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t base_modulus() const { return q_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t characteristic_prime() const { return desc_.p; }
  const Poly& modulus() const { return f_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t from_integer(long long c) const;

  bool is_unit(std::uint32_t a) const { return unit_[a] != 0; }
  const std::vector<std::uint32_t>& nonunits() const { return nonunits_; }
  bool is_field() const { return nonunits_.size() == 1; }

  std::uint32_t residue_order() const { return order_ / static_cast<std::uint32_t>(nonunits_.size()); }
  std::uint32_t residue_degree() const { return residue_degree_; }
  BlockDescriptor residue_descriptor() const;
  /// Index of the image of `a` in the canonical realization of the residue
  /// field (residue_descriptor()).
  std::uint32_t residue_of(std::uint32_t a) const { return residue_[a]; }

  Poly coefficients(std::uint32_t a) const;
  std::uint32_t index_of(const Poly& coeffs) const;
  std::string element_string(std::uint32_t a) const;

 private:
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  BlockDescriptor desc_;
  std::uint32_t q_ = 0;
  std::uint32_t d_ = 0;
  std::uint32_t order_ = 0;
  Poly f_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint8_t> unit_;
  std::vector<std::uint32_t> nonunits_;
  std::uint32_t residue_degree_ = 1;
  std::vector<std::uint32_t> residue_;
};

struct BuildOptions {
  std::uint64_t max_order = 4096;
};

enum class IdealTag : std::uint8_t { Maximal, Jacobson, Nilradical, Custom };

struct IdealSet {
  std::vector<Element> members;  // ascending element indices
  IdealTag tag = IdealTag::Custom;
  std::uint32_t residue_size = 0;  // maximal ideals only
  std::uint32_t residue_char = 0;  // maximal ideals only
  std::size_t block = 0;           // maximal ideals: owning block

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const;
};

class FiniteRing {
 public:
  static FiniteRing build(const RingDescriptor& desc, BuildOptions options = {});
  static FiniteRing build(std::string_view spec, BuildOptions options = {});

  FiniteRing(FiniteRing&&) noexcept;
  FiniteRing& operator=(FiniteRing&&) noexcept;
  ~FiniteRing();

  const RingDescriptor& descriptor() const { return desc_; }
  std::string name() const { return desc_.to_string(); }
  std::uint32_t order() const { return order_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  Element zero() const { return 0; }
  Element one() const { return order_ > 1 ? 1 : 0; }
  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element from_integer(long long c) const;

  std::span<const std::uint32_t> digits(Element a) const {
    return {digits_.data() + std::size_t{a} * blocks_.size(), blocks_.size()};
  }
  Element from_digits(std::span<const std::uint32_t> digits) const;

  /// Structural test: a has a non-unit coordinate.
  bool is_unit(Element a) const { return unit_[a] != 0; }
  /// Membership in Z(R) (nonunits; equal to the exhaustive scan result).
  bool is_zero_divisor(Element a) const { return unit_[a] == 0; }
  bool is_field() const { return blocks_.size() == 1 && blocks_[0].is_field(); }
  bool is_reduced() const;

  const std::vector<Element>& units() const { return units_; }
  const std::vector<Element>& nonunits() const { return nonunits_; }
  const std::vector<IdealSet>& maximal_ideals() const { return maximal_; }
  const IdealSet& jacobson_radical() const { return jacobson_; }

  std::uint32_t max_ideal_size() const;
  /// Smallest residue field (the first block in canonical order).
  std::uint32_t min_residue_size() const;
  std::uint32_t min_residue_char() const;
  bool all_residue_chars_odd() const;

  std::string label(Element a) const;

  // Lazily computed exhaustive scans; thread-safe, computed once.
  const std::vector<Element>& zero_divisor_scan() const;
  const std::vector<Element>& nilpotent_scan() const;

 private:
  FiniteRing();
  struct Cache;

  RingDescriptor desc_;
  std::vector<Block> blocks_;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> radix_;        // place value per block
  std::vector<std::uint32_t> digits_;       // order_ x blocks
  std::vector<Element> radix_to_element_;   // mixed-radix index -> element
  std::vector<std::uint8_t> unit_;
  std::vector<Element> units_;
  std::vector<Element> nonunits_;
  std::vector<IdealSet> maximal_;
  IdealSet jacobson_;
  std::unique_ptr<Cache> cache_;
};

/// {x : xy = 0 for some y != 0} by exhaustive product scan, cross-checked
/// against the union of the maximal ideals.
const std::vector<Element>& zero_divisors(const FiniteRing& ring);

/// Nilpotent elements (x^(2^t) = 0 for 2^t >= |R|), checked equal to the
/// Jacobson radical.
IdealSet nilradical(const FiniteRing& ring);
IdealSet jacobson(const FiniteRing& ring);

/// Sorted by size descending, ties by block position.
const std::vector<IdealSet>& maximal_ideals(const FiniteRing& ring);

std::vector<Element> regular_elements(const FiniteRing& ring);

/// True when `members` contains 0 and is closed under +, - and R-multiples.
bool is_ideal(const FiniteRing& ring, std::span<const Element> members);

/// Element pair for which an ideal axiom fails.
struct IdealWitness {
  Element a = 0;
  Element b = 0;
};
std::optional<IdealWitness> additive_closure_witness(const FiniteRing& ring,
                                                     std::span<const Element> members);

struct IdempotentComponent {
  Element idempotent = 0;
  std::vector<Element> members;  // eR, ascending
  std::size_t order() const { return members.size(); }
  bool local = false;
};

/// Decomposition by primitive idempotents found by exhaustive scan.
std::vector<IdempotentComponent> idempotent_decompose(const FiniteRing& ring);

struct Quotient {
  FiniteRing ring;
  std::vector<Element> projection;  // R element -> R/J(R) element
};

/// R/J(R) as the product of the residue fields, one per block.
Quotient quotient_by_jacobson(const FiniteRing& ring);

/// Exhaustive ring-axiom check over all triples (sampled above `exhaustive_limit`).
bool check_ring_axioms(const FiniteRing& ring, std::uint32_t exhaustive_limit = 32,
                       std::uint32_t samples = 20000, std::uint64_t seed = 1);

}  // namespace totgraph
