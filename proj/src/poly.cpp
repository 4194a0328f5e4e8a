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

#include "totgraph/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace totgraph {

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Poly poly_reduce_coefficients(const Poly& a, std::uint32_t q) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] % q;
  poly_trim(out);
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, std::uint32_t q) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = 0;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out[i] = static_cast<std::uint32_t>(s % q);
  }
  poly_trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % q;
    }
  }
  Poly out(acc.begin(), acc.end());
  poly_trim(out);
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& f,
                                  std::uint32_t q) {
  const int df = poly_degree(f);
  if (df < 0 || f[df] % q != 1) {
    throw std::invalid_argument("poly_divmod: divisor must be monic");
  }
  Poly r = poly_reduce_coefficients(a, q);
  const int da = poly_degree(r);
  if (da < df) return {Poly{}, r};
  Poly quot(static_cast<std::size_t>(da - df + 1), 0);
  for (int i = da; i >= df; --i) {
    const std::uint32_t lead = r[i];
    if (lead == 0) continue;
    quot[i - df] = lead;
    for (int j = 0; j <= df; ++j) {
      const std::uint64_t sub = (std::uint64_t{lead} * f[j]) % q;
      r[i - df + j] = static_cast<std::uint32_t>((r[i - df + j] + q - sub) % q);
    }
  }
  poly_trim(r);
  poly_trim(quot);
  return {quot, r};
}

Poly poly_mod(const Poly& a, const Poly& f, std::uint32_t q) {
  return poly_divmod(a, f, q).second;
}

Poly monic_from_rank(std::uint32_t p, unsigned degree, std::uint64_t rank) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(rank % p);
    rank /= p;
  }
  return f;
}

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

bool divides(const Poly& h, const Poly& f, std::uint32_t p) {
  return poly_mod(f, h, p).empty();
}

}  // namespace

bool is_irreducible_mod_p(const Poly& f, std::uint32_t p) {
  const int d = poly_degree(f);
  if (d < 1) return false;
  for (unsigned j = 1; j <= static_cast<unsigned>(d) / 2; ++j) {
    const std::uint64_t count = ipow(p, j);
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      if (divides(monic_from_rank(p, j, rank), f, p)) return false;
    }
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    Poly f = monic_from_rank(p, k, rank);
    if (is_irreducible_mod_p(f, p)) return f;
  }
  // Irreducible polynomials of every degree exist over finite fields.
  throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

Poly smallest_monic_factor(const Poly& f, std::uint32_t p) {
  const int d = poly_degree(f);
  for (unsigned j = 1; j < static_cast<unsigned>(d); ++j) {
    const std::uint64_t count = ipow(p, j);
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      Poly h = monic_from_rank(p, j, rank);
      if (divides(h, f, p)) return h;
    }
  }
  return poly_reduce_coefficients(f, p);
}

std::optional<unsigned> prime_power_factor_degree(const Poly& f,
                                                 std::uint32_t p) {
  Poly g = poly_reduce_coefficients(f, p);
  if (poly_degree(g) < 1) return std::nullopt;
  const Poly h = smallest_monic_factor(g, p);
  while (poly_degree(g) > 0) {
    auto [quot, rem] = poly_divmod(g, h, p);
    if (!rem.empty()) return std::nullopt;
    g = std::move(quot);
  }
  return static_cast<unsigned>(poly_degree(h));
}

namespace {

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

Poly make_monic_mod_p(const Poly& a, std::uint32_t p) {
  const int d = poly_degree(a);
  if (d < 0) return {};
  const std::uint64_t inv = inverse_mod_p(a[d], p);
  Poly out(a.begin(), a.begin() + d + 1);
  for (auto& c : out) c = static_cast<std::uint32_t>(c * inv % p);
  return out;
}

}  // namespace

Poly poly_gcd_mod_p(Poly a, Poly b, std::uint32_t p) {
  a = poly_reduce_coefficients(a, p);
  b = poly_reduce_coefficients(b, p);
  while (!b.empty()) {
    Poly r = poly_mod(a, make_monic_mod_p(b, p), p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic_mod_p(a, p);
}

std::string poly_to_string(const Poly& a, char var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i];
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace totgraph
