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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace totgraph {

/// Dense univariate polynomial over Z/q, coefficients stored low degree
/// first. The zero polynomial is the empty vector; otherwise the last
/// coefficient is nonzero.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a);

/// -1 for the zero polynomial.
int poly_degree(const Poly& a);

Poly poly_reduce_coefficients(const Poly& a, std::uint32_t q);
Poly poly_add(const Poly& a, const Poly& b, std::uint32_t q);
Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t q);

/// Remainder of `a` modulo the monic polynomial `f`.
Poly poly_mod(const Poly& a, const Poly& f, std::uint32_t q);

/// Quotient and remainder of `a` by the monic `f`.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& f,
                                  std::uint32_t q);

/// Evaluates `f` at `x` using caller-supplied ring operations.
template <typename Add, typename Mul, typename FromInt>
std::uint32_t poly_evaluate(const Poly& f, std::uint32_t x, Add add, Mul mul,
                            FromInt from_int) {
  std::uint32_t acc = from_int(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = add(mul(acc, x), from_int(*it));
  }
  return acc;
}

/// The monic polynomial of degree `degree` whose coefficient tuple, read
/// from degree-1 down to the constant term, is the base-p expansion of
/// `rank`. Ranks 0..p^degree-1 enumerate monic polynomials in
/// lexicographic order.
Poly monic_from_rank(std::uint32_t p, unsigned degree, std::uint64_t rank);

/// Irreducibility over the prime field Z/p by trial division with every
/// monic polynomial of degree at most deg(f)/2.
bool is_irreducible_mod_p(const Poly& f, std::uint32_t p);

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// Z/p, comparing coefficients from degree k-1 down to the constant term.
Poly find_irreducible(std::uint32_t p, unsigned k);

/// For monic `f` over Z/p: if f = h^r with h monic irreducible, returns
/// deg(h) (the residue degree of Z/p[x]/(f)); otherwise nullopt.
std::optional<unsigned> prime_power_factor_degree(const Poly& f,
                                                 std::uint32_t p);

/// Monic gcd over the prime field Z/p (zero polynomial if both are zero).
Poly poly_gcd_mod_p(Poly a, Poly b, std::uint32_t p);

/// Smallest-degree monic factor of `f` over Z/p (that factor is irreducible).
Poly smallest_monic_factor(const Poly& f, std::uint32_t p);

std::string poly_to_string(const Poly& a, char var = 'x');

}  // namespace totgraph
