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


#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "totgraph/poly.hpp"

using namespace totgraph;

namespace {

// All monic polynomials of degree d over Z/p, enumerated directly.
std::vector<Poly> monics(std::uint32_t p, unsigned d) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t r = 0; r < count; ++r) {
    Poly f(d + 1, 0);
    f[d] = 1;
    std::uint64_t x = r;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    out.push_back(f);
  }
  return out;
}

// Reducible monic polynomials of degree d: products of lower-degree monics.
std::set<Poly> reducibles(std::uint32_t p, unsigned d) {
  std::set<Poly> out;
  for (unsigned a = 1; a < d; ++a) {
    for (const auto& f : monics(p, a)) {
      for (const auto& g : monics(p, d - a)) out.insert(poly_mul(f, g, p));
    }
  }
  return out;
}

// High-degree-first coefficient comparison.
bool lex_less(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

TEST_CASE("find_irreducible small cases", "[poly]") {
  CHECK(find_irreducible(2, 2) == Poly{1, 1, 1});
  CHECK(find_irreducible(2, 1) == Poly{0, 1});
  CHECK(find_irreducible(3, 2) == Poly{1, 0, 1});
}

TEST_CASE("find_irreducible is the smallest irreducible monic", "[poly]") {
  const std::vector<std::pair<std::uint32_t, unsigned>> cases = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}};
  for (const auto& [p, k] : cases) {
    const auto red = reducibles(p, k);
    Poly best;
    for (const auto& f : monics(p, k)) {
      if (red.count(f)) continue;
      if (best.empty() || lex_less(f, best)) best = f;
    }
    INFO("p=" << p << " k=" << k);
    CHECK(find_irreducible(p, k) == best);
  }
}

TEST_CASE("is_irreducible_mod_p matches product enumeration", "[poly]") {
  for (std::uint32_t p : {2U, 3U}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto red = reducibles(p, d);
      for (const auto& f : monics(p, d)) CHECK(is_irreducible_mod_p(f, p) == (red.count(f) == 0));
    }
  }
}

TEST_CASE("polynomial arithmetic", "[poly]") {
  // (x + 1)^2 = x^2 + 1 over Z/2
  CHECK(poly_mul({1, 1}, {1, 1}, 2) == Poly{1, 0, 1});
  CHECK(poly_add({1, 1}, {1, 1}, 2).empty());
  CHECK(poly_degree({}) == -1);
  CHECK(poly_mod({0, 0, 1}, {1, 1, 1}, 2) == Poly{1, 1});
  const auto [q, r] = poly_divmod({2, 0, 0, 1}, {1, 1}, 3);
  CHECK(poly_add(poly_mul(q, {1, 1}, 3), r, 3) == Poly{2, 0, 0, 1});
  CHECK(poly_gcd_mod_p({1, 0, 1}, {1, 1}, 2) == Poly{1, 1});
  CHECK(poly_to_string({1, 0, 2}) == "2x^2+1");
}

TEST_CASE("prime power factor degree", "[poly]") {
  CHECK(prime_power_factor_degree({0, 0, 1}, 2) == 1U);     // x^2
  CHECK(prime_power_factor_degree({1, 1, 1}, 2) == 2U);     // irreducible
  CHECK_FALSE(prime_power_factor_degree({0, 1, 1}, 2));     // x(x+1)
  CHECK(smallest_monic_factor({0, 1, 1}, 2) == Poly{0, 1});
}
