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

#include "totgraph/ring.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "totgraph/error.hpp"
#include "totgraph/kernels.hpp"

namespace totgraph {

namespace {

constexpr std::uint32_t kTableLimit = 1024;

}  // namespace

// ---------------------------------------------------------------------------
// Block

Poly Block::coefficients(std::uint32_t a) const {
  Poly c(d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a % q_;
    a /= q_;
  }
  poly_trim(c);
  return c;
}

std::uint32_t Block::index_of(const Poly& coeffs) const {
  const Poly r = poly_mod(coeffs, f_, q_);
  std::uint32_t idx = 0;
  for (std::size_t i = r.size(); i-- > 0;) idx = idx * q_ + r[i];
  return idx;
}

std::uint32_t Block::mul_slow(std::uint32_t a, std::uint32_t b) const {
  return index_of(poly_mul(coefficients(a), coefficients(b), q_));
}

std::uint32_t Block::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
  std::uint32_t idx = 0, place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    idx += ((a % q_ + b % q_) % q_) * place;
    a /= q_;
    b /= q_;
    place *= q_;
  }
  return idx;
}

std::uint32_t Block::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * order_ + b];
  return mul_slow(a, b);
}

std::uint32_t Block::from_integer(long long c) const {
  const auto q = static_cast<long long>(q_);
  return static_cast<std::uint32_t>(((c % q) + q) % q);
}

std::string Block::element_string(std::uint32_t a) const {
  if (d_ == 1) return std::to_string(a);
  return poly_to_string(coefficients(a), 'x');
}

BlockDescriptor Block::residue_descriptor() const {
  if (residue_degree_ == 1) return BlockDescriptor::integers(desc_.p, 1);
  return BlockDescriptor::galois(desc_.p, residue_degree_);
}

Block Block::realize(const BlockDescriptor& desc) {
  Block b;
  b.desc_ = desc;
  if (!is_prime(desc.p) || desc.k < 1) {
    throw RingError("block " + desc.to_string() + ": p must be prime and k >= 1");
  }
  b.q_ = desc.base_modulus();
  switch (desc.kind) {
    case BlockKind::IntegerModPrimePower: b.f_ = Poly{0, 1}; break;
    case BlockKind::GaloisField: b.f_ = find_irreducible(desc.p, desc.k); break;
    case BlockKind::PolyQuotient: b.f_ = desc.modulus; break;
  }
  const int deg = poly_degree(b.f_);
  if (deg < 1 || b.f_[deg] != 1) throw RingError("block " + desc.to_string() + ": modulus not monic");
  b.d_ = static_cast<std::uint32_t>(deg);
  const std::uint64_t order = desc.order();
  if (order < 2 || order > (std::uint64_t{1} << 20)) {
    throw RingError("block " + desc.to_string() + ": unsupported order " + std::to_string(order));
  }
  b.order_ = static_cast<std::uint32_t>(order);
  const std::uint32_t n = b.order_;

  if (n <= kTableLimit) {
    b.add_table_.resize(std::size_t{n} * n);
    b.mul_table_.resize(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        std::uint32_t idx = 0, place = 1, xs = x, ys = y;
        for (std::uint32_t i = 0; i < b.d_; ++i) {
          idx += ((xs % b.q_ + ys % b.q_) % b.q_) * place;
          xs /= b.q_;
          ys /= b.q_;
          place *= b.q_;
        }
        b.add_table_[std::size_t{x} * n + y] = static_cast<std::uint16_t>(idx);
        b.mul_table_[std::size_t{x} * n + y] = static_cast<std::uint16_t>(y < x ? b.mul_table_[std::size_t{y} * n + x] : b.mul_slow(x, y));
      }
    }
  }
  b.neg_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    Poly c = b.coefficients(x);
    for (auto& v : c) v = (b.q_ - v) % b.q_;
    b.neg_[x] = b.index_of(c);
  }

  // a is a unit of Z/p^k[x]/(f) iff its reduction mod p is coprime to f mod p.
  const Poly fbar = poly_reduce_coefficients(b.f_, desc.p);
  b.unit_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    const Poly g = poly_gcd_mod_p(b.coefficients(x), fbar, desc.p);
    if (poly_degree(g) == 0) {
      b.unit_[x] = 1;
    } else {
      b.nonunits_.push_back(x);
    }
  }

  const auto local_degree = prime_power_factor_degree(fbar, desc.p);
  if (!local_degree) {
    for (std::size_t i = 0; i < b.nonunits_.size(); ++i) {
      for (std::size_t j = i; j < b.nonunits_.size(); ++j) {
        const std::uint32_t s = b.add(b.nonunits_[i], b.nonunits_[j]);
        if (b.unit_[s]) {
          throw RingError("block not local: non-units not additively closed (" +
                          b.element_string(b.nonunits_[i]) + " + " +
                          b.element_string(b.nonunits_[j]) + " = " + b.element_string(s) +
                          " in " + desc.to_string() + ")");
        }
      }
    }
    throw std::logic_error("block " + desc.to_string() + ": reducible modulus but closed non-units");
  }
  if (b.nonunits_.size() <= 2048) {
    for (std::size_t i = 0; i < b.nonunits_.size(); ++i) {
      for (std::size_t j = i; j < b.nonunits_.size(); ++j) {
        if (b.unit_[b.add(b.nonunits_[i], b.nonunits_[j])]) {
          throw std::logic_error("block " + desc.to_string() + ": non-units not closed");
        }
      }
    }
  }
  if (std::uint64_t{n} * b.nonunits_.size() <= (1U << 20)) {
    for (std::uint32_t a : b.nonunits_) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (b.unit_[b.mul(a, x)]) {
          throw std::logic_error("block " + desc.to_string() + ": non-units not an ideal");
        }
      }
    }
  }
  b.residue_degree_ = *local_degree;

  // Residue map onto the canonical residue field K = Z/p[t]/(g): send x to
  // a root beta of f mod p in K (t itself when f mod p = g).
  const bool canonical_field =
      (desc.kind == BlockKind::IntegerModPrimePower && desc.k == 1) ||
      desc.kind == BlockKind::GaloisField;
  b.residue_.resize(n);
  if (canonical_field) {
    for (std::uint32_t x = 0; x < n; ++x) b.residue_[x] = x;
    return b;
  }
  const Block field = Block::realize(b.residue_descriptor());
  auto k_add = [&](std::uint32_t u, std::uint32_t v) { return field.add(u, v); };
  auto k_mul = [&](std::uint32_t u, std::uint32_t v) { return field.mul(u, v); };
  auto k_int = [&](std::uint32_t c) { return field.from_integer(c); };
  std::uint32_t beta = 0;
  if (fbar == field.modulus()) {
    beta = field.index_of(Poly{0, 1});
  } else {
    bool found = false;
    for (std::uint32_t cand = 0; cand < field.order() && !found; ++cand) {
      if (poly_evaluate(fbar, cand, k_add, k_mul, k_int) == 0) {
        beta = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("block " + desc.to_string() + ": no residue root");
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    const Poly c = poly_reduce_coefficients(b.coefficients(x), desc.p);
    b.residue_[x] = poly_evaluate(c, beta, k_add, k_mul, k_int);
    if ((b.residue_[x] == 0) != (b.unit_[x] == 0)) {
      throw std::logic_error("block " + desc.to_string() + ": residue map kernel mismatch");
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// FiniteRing

struct FiniteRing::Cache {
  std::once_flag zero_once;
  std::vector<Element> zero_scan;
  std::once_flag nil_once;
  std::vector<Element> nil_scan;
};

FiniteRing::FiniteRing() : cache_(std::make_unique<Cache>()) {}
FiniteRing::FiniteRing(FiniteRing&&) noexcept = default;
FiniteRing& FiniteRing::operator=(FiniteRing&&) noexcept = default;
FiniteRing::~FiniteRing() = default;

bool IdealSet::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

FiniteRing FiniteRing::build(std::string_view spec, BuildOptions options) {
  return build(parse_ring_spec(spec), options);
}

FiniteRing FiniteRing::build(const RingDescriptor& input, BuildOptions options) {
  if (input.blocks.empty()) throw RingError("ring descriptor has no blocks");
  RingDescriptor desc = input;
  normalize(desc);
  const std::uint64_t order = desc.order();
  if (order > options.max_order) {
    throw RingError("ring order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(options.max_order));
  }

  FiniteRing r;
  r.desc_ = std::move(desc);
  for (const auto& bd : r.desc_.blocks) r.blocks_.push_back(Block::realize(bd));
  r.order_ = static_cast<std::uint32_t>(order);

  const std::size_t nb = r.blocks_.size();
  r.radix_.assign(nb, 1);
  for (std::size_t i = nb - 1; i-- > 0;) r.radix_[i] = r.radix_[i + 1] * r.blocks_[i + 1].order();

  // Mixed-radix order with the all-ones tuple moved to index 1.
  std::uint32_t one_radix = 0;
  for (std::size_t i = 0; i < nb; ++i) one_radix += r.radix_[i];
  r.radix_to_element_.resize(r.order_);
  for (std::uint32_t i = 0; i < r.order_; ++i) r.radix_to_element_[i] = i;
  if (r.order_ > 1) std::swap(r.radix_to_element_[1], r.radix_to_element_[one_radix]);

  r.digits_.resize(std::size_t{r.order_} * nb);
  for (std::uint32_t rad = 0; rad < r.order_; ++rad) {
    const Element e = r.radix_to_element_[rad];
    std::uint32_t rest = rad;
    for (std::size_t i = 0; i < nb; ++i) {
      r.digits_[std::size_t{e} * nb + i] = rest / r.radix_[i];
      rest %= r.radix_[i];
    }
  }

  r.unit_.assign(r.order_, 1);
  for (Element e = 0; e < r.order_; ++e) {
    const auto d = r.digits(e);
    for (std::size_t i = 0; i < nb; ++i) {
      if (!r.blocks_[i].is_unit(d[i])) {
        r.unit_[e] = 0;
        break;
      }
    }
    (r.unit_[e] ? r.units_ : r.nonunits_).push_back(e);
  }

  for (std::size_t i = 0; i < nb; ++i) {
    IdealSet m;
    m.tag = IdealTag::Maximal;
    m.block = i;
    m.residue_size = r.blocks_[i].residue_order();
    m.residue_char = r.blocks_[i].characteristic_prime();
    for (Element e = 0; e < r.order_; ++e) {
      if (!r.blocks_[i].is_unit(r.digits(e)[i])) m.members.push_back(e);
    }
    r.maximal_.push_back(std::move(m));
  }
  std::stable_sort(r.maximal_.begin(), r.maximal_.end(),
                   [](const IdealSet& a, const IdealSet& b) { return a.size() > b.size(); });

  r.jacobson_.tag = IdealTag::Jacobson;
  for (Element e = 0; e < r.order_; ++e) {
    const auto d = r.digits(e);
    bool all = true;
    for (std::size_t i = 0; i < nb && all; ++i) all = !r.blocks_[i].is_unit(d[i]);
    if (all) r.jacobson_.members.push_back(e);
  }
  return r;
}

Element FiniteRing::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t rad = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) rad += d[i] * radix_[i];
  return radix_to_element_[rad];
}

Element FiniteRing::add(Element a, Element b) const {
  const auto da = digits(a), db = digits(b);
  std::uint32_t rad = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) rad += blocks_[i].add(da[i], db[i]) * radix_[i];
  return radix_to_element_[rad];
}

Element FiniteRing::mul(Element a, Element b) const {
  const auto da = digits(a), db = digits(b);
  std::uint32_t rad = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) rad += blocks_[i].mul(da[i], db[i]) * radix_[i];
  return radix_to_element_[rad];
}

Element FiniteRing::neg(Element a) const {
  const auto da = digits(a);
  std::uint32_t rad = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) rad += blocks_[i].neg(da[i]) * radix_[i];
  return radix_to_element_[rad];
}

Element FiniteRing::from_integer(long long c) const {
  std::uint32_t rad = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) rad += blocks_[i].from_integer(c) * radix_[i];
  return radix_to_element_[rad];
}

bool FiniteRing::is_reduced() const { return jacobson_.members.size() == 1; }

std::uint32_t FiniteRing::max_ideal_size() const {
  return static_cast<std::uint32_t>(maximal_.front().size());
}

std::uint32_t FiniteRing::min_residue_size() const { return blocks_.front().residue_order(); }
std::uint32_t FiniteRing::min_residue_char() const { return blocks_.front().characteristic_prime(); }

bool FiniteRing::all_residue_chars_odd() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return b.characteristic_prime() != 2; });
}

std::string FiniteRing::label(Element a) const {
  const auto d = digits(a);
  if (blocks_.size() == 1) return blocks_[0].element_string(d[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += ',';
    out += blocks_[i].element_string(d[i]);
  }
  return out + ")";
}

const std::vector<Element>& FiniteRing::zero_divisor_scan() const {
  std::call_once(cache_->zero_once, [this] {
    const auto flags = kernels::zero_divisor_flags_parallel(*this);
    for (Element e = 0; e < order_; ++e) {
      if (flags[e]) cache_->zero_scan.push_back(e);
    }
  });
  return cache_->zero_scan;
}

const std::vector<Element>& FiniteRing::nilpotent_scan() const {
  std::call_once(cache_->nil_once, [this] {
    const auto flags = kernels::nilpotent_flags_parallel(*this);
    for (Element e = 0; e < order_; ++e) {
      if (flags[e]) cache_->nil_scan.push_back(e);
    }
  });
  return cache_->nil_scan;
}

// ---------------------------------------------------------------------------
// Derived structure

const std::vector<Element>& zero_divisors(const FiniteRing& ring) {
  const auto& scan = ring.zero_divisor_scan();
  if (scan != ring.nonunits()) {
    throw std::logic_error("zero-divisor scan disagrees with the union of maximal ideals in " +
                           ring.name());
  }
  return scan;
}

IdealSet nilradical(const FiniteRing& ring) {
  IdealSet nil;
  nil.tag = IdealTag::Nilradical;
  nil.members = ring.nilpotent_scan();
  if (nil.members != ring.jacobson_radical().members) {
    throw std::logic_error("Nil(R) != J(R) in " + ring.name());
  }
  return nil;
}

IdealSet jacobson(const FiniteRing& ring) {
  if (ring.nilpotent_scan() != ring.jacobson_radical().members) {
    throw std::logic_error("Nil(R) != J(R) in " + ring.name());
  }
  return ring.jacobson_radical();
}

const std::vector<IdealSet>& maximal_ideals(const FiniteRing& ring) { return ring.maximal_ideals(); }

std::vector<Element> regular_elements(const FiniteRing& ring) { return ring.units(); }

std::optional<IdealWitness> additive_closure_witness(const FiniteRing& ring,
                                                     std::span<const Element> members) {
  std::vector<std::uint8_t> in(ring.order(), 0);
  for (Element m : members) in[m] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!in[ring.add(members[i], members[j])]) return IdealWitness{members[i], members[j]};
    }
  }
  return std::nullopt;
}

bool is_ideal(const FiniteRing& ring, std::span<const Element> members) {
  std::vector<std::uint8_t> in(ring.order(), 0);
  for (Element m : members) in[m] = 1;
  if (!in[0]) return false;
  if (additive_closure_witness(ring, members)) return false;
  for (Element m : members) {
    if (!in[ring.neg(m)]) return false;
    for (Element x = 0; x < ring.order(); ++x) {
      if (!in[ring.mul(m, x)]) return false;
    }
  }
  return true;
}

std::vector<IdempotentComponent> idempotent_decompose(const FiniteRing& ring) {
  if (ring.order() > 512) throw RingError("idempotent_decompose: ring order above 512");
  std::vector<Element> idem;
  for (Element e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) == e) idem.push_back(e);
  }
  std::vector<IdempotentComponent> out;
  for (Element e : idem) {
    if (e == 0) continue;
    const bool primitive = std::none_of(idem.begin(), idem.end(), [&](Element f) {
      return f != 0 && f != e && ring.mul(e, f) == f;
    });
    if (!primitive) continue;
    IdempotentComponent comp;
    comp.idempotent = e;
    for (Element x = 0; x < ring.order(); ++x) comp.members.push_back(ring.mul(e, x));
    std::sort(comp.members.begin(), comp.members.end());
    comp.members.erase(std::unique(comp.members.begin(), comp.members.end()), comp.members.end());

    // Local iff the non-units of eR (identity e) are closed under addition.
    std::vector<std::uint8_t> in(ring.order(), 0), unit(ring.order(), 0);
    for (Element x : comp.members) in[x] = 1;
    for (Element x : comp.members) {
      for (Element y : comp.members) {
        if (ring.mul(x, y) == e) {
          unit[x] = 1;
          break;
        }
      }
    }
    comp.local = true;
    for (Element x : comp.members) {
      if (unit[x]) continue;
      for (Element y : comp.members) {
        if (!unit[y] && unit[ring.add(x, y)]) {
          comp.local = false;
          break;
        }
      }
      if (!comp.local) break;
    }
    if (!comp.local) throw std::logic_error("component not local in " + ring.name());
    out.push_back(std::move(comp));
  }
  return out;
}

Quotient quotient_by_jacobson(const FiniteRing& ring) {
  RingDescriptor desc;
  for (std::size_t i = 0; i < ring.block_count(); ++i) {
    desc.blocks.push_back(ring.block(i).residue_descriptor());
  }
  desc.source_text = ring.name() + " / J";
  Quotient q{FiniteRing::build(desc, BuildOptions{ring.order()}), {}};
  q.projection.resize(ring.order());
  std::vector<std::uint32_t> d(ring.block_count());
  for (Element x = 0; x < ring.order(); ++x) {
    const auto dx = ring.digits(x);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ring.block(i).residue_of(dx[i]);
    q.projection[x] = q.ring.from_digits(d);
  }
  return q;
}

bool check_ring_axioms(const FiniteRing& R, std::uint32_t exhaustive_limit,
                       std::uint32_t samples, std::uint64_t seed) {
  const Element one = R.one();
  for (Element a = 0; a < R.order(); ++a) {
    if (R.add(a, 0) != a || R.mul(a, one) != a || R.add(a, R.neg(a)) != 0) return false;
  }
  auto triple_ok = [&](Element a, Element b, Element c) {
    return R.add(R.add(a, b), c) == R.add(a, R.add(b, c)) && R.add(a, b) == R.add(b, a) &&
           R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)) && R.mul(a, b) == R.mul(b, a) &&
           R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c));
  };
  if (R.order() <= exhaustive_limit) {
    for (Element a = 0; a < R.order(); ++a)
      for (Element b = 0; b < R.order(); ++b)
        for (Element c = 0; c < R.order(); ++c)
          if (!triple_ok(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, R.order() - 1);
  for (std::uint32_t i = 0; i < samples; ++i) {
    if (!triple_ok(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

}  // namespace totgraph
