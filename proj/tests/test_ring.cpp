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

#include "oracles.hpp"
#include "totgraph/error.hpp"
#include "totgraph/ring.hpp"

using namespace totgraph;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<std::string> block_names(const RingDescriptor& d) {
  std::vector<std::string> out;
  for (const auto& b : d.blocks) out.push_back(b.to_string());
  return out;
}

const char* const kSmallRings[] = {
    "Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12", "GF(4)", "GF(8)", "GF(9)", "Z2 x Z2", "Z2 x Z4",
    "Z3 x Z3", "Z2 x Z2 x Z3", "Z2[x]/(x^2)", "Z3[x]/(x^2)", "Z4 x GF(4)", "Z2[x]/(x^3)",
    "Z4[x]/(x^2+x+1)", "Z2 x Z3 x Z5", "Z25", "Z3 x Z3 x Z3", "Z4 x Z4 x Z4", "Z2[x]/(x^2) x Z5"};

}  // namespace

TEST_CASE("parse_ring_spec examples", "[ring][parse]") {
  CHECK(block_names(parse_ring_spec("Z6")) == std::vector<std::string>{"Z2", "Z3"});
  const auto gf4 = parse_ring_spec("GF(4)");
  REQUIRE(gf4.blocks.size() == 1);
  CHECK(gf4.blocks[0].kind == BlockKind::GaloisField);
  CHECK(gf4.blocks[0].p == 2);
  CHECK(gf4.blocks[0].k == 2);
  const auto d = parse_ring_spec("Z4 x GF(9)");
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0] == BlockDescriptor::integers(2, 2));
  CHECK(d.blocks[1] == BlockDescriptor::galois(3, 2));
  CHECK(parse_ring_spec("  Z4x  GF( 9 ) ") == d);
  CHECK(parse_ring_spec("Z2[x]/(x^2)").blocks.at(0).kind == BlockKind::PolyQuotient);
}

TEST_CASE("parse_ring_spec errors", "[ring][parse]") {
  CHECK_THROWS_WITH(parse_ring_spec("GF(6)"), ContainsSubstring("GF argument not a prime power"));
  CHECK_THROWS_WITH(parse_ring_spec("Z2[x]/(2x^2+1)"), ContainsSubstring("polynomial not monic"));
  CHECK_THROWS_AS(parse_ring_spec("Q7"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z4 x"), ParseError);
  try {
    parse_ring_spec("Z4 x ?");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("normalization is order independent", "[ring][parse]") {
  CHECK(parse_ring_spec("Z3 x Z2") == parse_ring_spec("Z2 x Z3"));
  CHECK(parse_ring_spec("Z12") == parse_ring_spec("Z3 x Z4"));
  CHECK(parse_ring_spec("GF(5)") == parse_ring_spec("Z5"));
}

TEST_CASE("build_ring examples", "[ring]") {
  const auto gf4 = FiniteRing::build("GF(4)");
  CHECK(gf4.order() == 4);
  for (Element x = 1; x < 4; ++x) CHECK(gf4.is_unit(x));
  const auto z4 = FiniteRing::build("Z4");
  CHECK(zero_divisors(z4) == oracle::integers(z4, {0, 2}));
  const auto d = FiniteRing::build("Z2[x]/(x^2)");
  CHECK(d.order() == 4);
  CHECK(d.block_count() == 1);
  CHECK(d.maximal_ideals().size() == 1);
  const auto nil = nilradical(d).members;
  REQUIRE(nil.size() == 2);
  CHECK(d.label(nil[1]) == "x");
}

TEST_CASE("build_ring rejects non-local quotients", "[ring]") {
  CHECK_THROWS_WITH(FiniteRing::build("Z2[x]/(x^2+x)"), ContainsSubstring("block not local"));
  CHECK_THROWS_AS(FiniteRing::build("Z3[x]/(x^2+2)"), RingError);
  CHECK_THROWS_WITH(FiniteRing::build("Z64 x Z128"), ContainsSubstring("exceeds cap"));
}

TEST_CASE("zero_divisors examples", "[ring]") {
  const auto z6 = FiniteRing::build("Z6");
  CHECK(zero_divisors(z6) == oracle::integers(z6, {0, 2, 3, 4}));
  CHECK(zero_divisors(FiniteRing::build("GF(8)")) == std::vector<Element>{0});
  const auto z4 = FiniteRing::build("Z4");
  CHECK(zero_divisors(z4) == oracle::integers(z4, {0, 2}));
}

TEST_CASE("nilradical and jacobson examples", "[ring]") {
  const auto z4 = FiniteRing::build("Z4");
  CHECK(nilradical(z4).members == oracle::integers(z4, {0, 2}));
  CHECK(jacobson(z4).members == nilradical(z4).members);
  CHECK(nilradical(FiniteRing::build("Z6")).members == std::vector<Element>{0});
  const auto r = FiniteRing::build("Z2 x Z4");
  const std::vector<std::uint32_t> d02 = {0, 2};
  CHECK(jacobson(r).members == std::vector<Element>{0, r.from_digits(d02)});
  CHECK(r.label(r.from_digits(d02)) == "(0,2)");
}

TEST_CASE("maximal_ideals examples", "[ring]") {
  const auto z6 = FiniteRing::build("Z6");
  const auto& m = maximal_ideals(z6);
  REQUIRE(m.size() == 2);
  CHECK(m[0].members == oracle::integers(z6, {0, 2, 4}));
  CHECK(m[1].members == oracle::integers(z6, {0, 3}));
  const auto z9 = FiniteRing::build("Z9");
  REQUIRE(maximal_ideals(z9).size() == 1);
  CHECK(maximal_ideals(z9)[0].members == oracle::integers(z9, {0, 3, 6}));
  const auto z33 = FiniteRing::build("Z3 x Z3");
  REQUIRE(maximal_ideals(z33).size() == 2);
  CHECK(maximal_ideals(z33)[0].size() == 3);
  CHECK(maximal_ideals(z33)[1].size() == 3);
}

TEST_CASE("maximal ideals agree with ideal enumeration", "[ring][oracle]") {
  for (const char* s : {"Z6", "Z4", "Z9", "Z12", "Z3 x Z3", "Z2 x Z2 x Z3", "Z2[x]/(x^2) x Z3", "GF(4) x Z2"}) {
    const auto r = FiniteRing::build(s);
    auto expect = oracle::maximal_ideals(r);
    std::vector<std::vector<Element>> got;
    for (const auto& m : r.maximal_ideals()) {
      got.push_back(m.members);
      CHECK(m.residue_size * m.size() == r.order());
      CHECK(is_ideal(r, m.members));
    }
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    INFO(s);
    CHECK(got == expect);
  }
}

TEST_CASE("idempotent_decompose examples", "[ring]") {
  auto orders = [](const char* s) {
    std::vector<std::size_t> out;
    for (const auto& c : idempotent_decompose(FiniteRing::build(s))) {
      CHECK(c.local);
      out.push_back(c.order());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(orders("Z6") == std::vector<std::size_t>{2, 3});
  CHECK(orders("Z4") == std::vector<std::size_t>{4});
  CHECK(orders("Z2 x Z2 x Z3") == std::vector<std::size_t>{2, 2, 3});
  const auto z6 = FiniteRing::build("Z6");
  CHECK(oracle::idempotents(z6) == oracle::integers(z6, {0, 1, 3, 4}));
}

TEST_CASE("quotient_by_jacobson examples", "[ring]") {
  const auto z4 = FiniteRing::build("Z4");
  const auto q4 = quotient_by_jacobson(z4);
  CHECK(q4.ring.order() == 2);
  CHECK(q4.ring.is_field());
  CHECK(q4.projection[z4.from_integer(0)] == 0);
  CHECK(q4.projection[z4.from_integer(2)] == 0);
  CHECK(q4.projection[z4.from_integer(1)] != 0);
  const auto q12 = quotient_by_jacobson(FiniteRing::build("Z12"));
  CHECK(q12.ring.name() == "Z2 x Z3");
  const auto z33 = FiniteRing::build("Z3 x Z3");
  const auto q33 = quotient_by_jacobson(z33);
  CHECK(q33.ring.name() == z33.name());
  for (Element x = 0; x < z33.order(); ++x) CHECK(q33.projection[x] == x);
}

TEST_CASE("derived sets agree with brute force", "[ring][oracle]") {
  for (const char* s : kSmallRings) {
    const auto r = FiniteRing::build(s);
    INFO(s);
    CHECK(zero_divisors(r) == oracle::zero_divisors(r));
    CHECK(nilradical(r).members == oracle::nilpotents(r));
    CHECK(r.units().size() + r.nonunits().size() == r.order());
    std::vector<std::size_t> comp, blocks;
    if (r.order() <= 512) {
      for (const auto& c : idempotent_decompose(r)) comp.push_back(c.order());
      for (std::size_t i = 0; i < r.block_count(); ++i) blocks.push_back(r.block(i).order());
      std::sort(comp.begin(), comp.end());
      std::sort(blocks.begin(), blocks.end());
      CHECK(comp == blocks);
    }
  }
}

TEST_CASE("element indexing", "[ring]") {
  for (const char* s : kSmallRings) {
    const auto r = FiniteRing::build(s);
    CHECK(r.one() == 1);
    for (Element x = 0; x < r.order(); ++x) {
      CHECK(r.mul(r.one(), x) == x);
      CHECK(r.add(r.zero(), x) == x);
      CHECK(r.from_digits(r.digits(x)) == x);
    }
  }
  CHECK(FiniteRing::build("Z6").from_integer(5) == FiniteRing::build("Z6").neg(1));
}

TEST_CASE("ring axioms", "[ring]") {
  for (const char* s : kSmallRings) CHECK(check_ring_axioms(FiniteRing::build(s)));
  CHECK(check_ring_axioms(FiniteRing::build("GF(64) x Z9")));
}

TEST_CASE("additive closure witness", "[ring]") {
  const auto z6 = FiniteRing::build("Z6");
  const auto w = additive_closure_witness(z6, zero_divisors(z6));
  REQUIRE(w);
  CHECK(z6.is_zero_divisor(w->a));
  CHECK(z6.is_zero_divisor(w->b));
  CHECK(z6.is_unit(z6.add(w->a, w->b)));
  CHECK_FALSE(is_ideal(z6, zero_divisors(z6)));
  CHECK_FALSE(additive_closure_witness(FiniteRing::build("Z8"), zero_divisors(FiniteRing::build("Z8"))));
}
