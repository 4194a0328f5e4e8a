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

#include "totgraph/error.hpp"
#include "totgraph/latin.hpp"

using namespace totgraph;

namespace {

const char* const kFields[] = {"Z2", "Z3", "GF(4)", "Z5", "Z7", "GF(8)", "GF(9)", "Z11", "Z13",
                               "GF(16)", "Z17", "Z19", "Z23", "GF(25)", "GF(27)"};

LatinSumArray with_entries(const FiniteRing& f1, const FiniteRing& f2, std::vector<std::vector<std::uint32_t>> e,
                           std::uint32_t alphabet) {
  LatinSumArray a;
  a.rows = full_labels(f1);
  a.cols = full_labels(f2);
  a.entries = std::move(e);
  a.alphabet_size = alphabet;
  return a;
}

// Independent check of both conditions straight from the field arithmetic.
bool latin_sum_oracle(const FiniteRing& f1, const FiniteRing& f2, const LatinSumArray& a) {
  for (std::size_t r1 = 0; r1 < a.row_count(); ++r1) {
    for (std::size_t c1 = 0; c1 < a.col_count(); ++c1) {
      for (std::size_t r2 = 0; r2 < a.row_count(); ++r2) {
        for (std::size_t c2 = 0; c2 < a.col_count(); ++c2) {
          if (r1 == r2 && c1 == c2) continue;
          const bool rows0 = f1.add(a.rows.elements[r1], a.rows.elements[r2]) == 0;
          const bool cols0 = f2.add(a.cols.elements[c1], a.cols.elements[c2]) == 0;
          if ((rows0 || cols0) && a.at(r1, c1) == a.at(r2, c2)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("is_latin_sum examples", "[latin]") {
  const auto z2 = FiniteRing::build("Z2");
  CHECK(is_latin_sum(with_entries(z2, z2, {{0, 1}, {1, 0}}, 2)).valid);
  const auto z3 = FiniteRing::build("Z3");
  const auto table = with_entries(z3, z3, {{0, 1, 2}, {1, 1, 2}, {3, 3, 0}}, 4);
  CHECK(is_latin_sum(table).valid);
  const auto flat = with_entries(z3, z3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 1);
  const auto chk = is_latin_sum(flat);
  CHECK_FALSE(chk.valid);
  REQUIRE(chk.violation);
  CHECK(violates(flat, chk.violation->first, chk.violation->second));
  // column-0 cells of the paired rows collide as well
  CHECK(violates(flat, Cell{1, 0}, Cell{2, 0}));
  CHECK(chk.violation->first == Cell{0, 0});
}

TEST_CASE("build_latin_sum examples", "[latin]") {
  const auto z2 = FiniteRing::build("Z2");
  const auto sq = build_latin_sum(z2, z2);
  CHECK(sq.alphabet_size == 2);
  CHECK(is_latin_rectangle(sq));
  const auto z7 = FiniteRing::build("Z7");
  const auto a27 = build_latin_sum(z2, z7);
  CHECK(a27.row_count() == 2);
  CHECK(a27.col_count() == 7);
  CHECK(a27.alphabet_size == 7);
  CHECK(is_latin_sum(a27).valid);
  const auto z3 = FiniteRing::build("Z3");
  const auto a33 = build_latin_sum(z3, z3);
  CHECK(a33.alphabet_size == 4);
  CHECK(a33.rows.names == std::vector<std::string>{"0", "1", "2"});
  std::vector<std::vector<int>> shown;
  for (const auto& row : a33.entries) {
    std::vector<int> s;
    for (auto e : row) s.push_back(a33.display.at(e));
    shown.push_back(s);
  }
  CHECK(shown == std::vector<std::vector<int>>{{0, 1, -1}, {1, 1, -1}, {2, 2, 0}});
  CHECK_THROWS_AS(build_latin_sum(z7, z3), Error);
}

TEST_CASE("build_latin_sum_reg examples", "[latin]") {
  const auto z2 = FiniteRing::build("Z2");
  const auto a = build_latin_sum_reg(z2, FiniteRing::build("Z3"));
  CHECK(a.row_count() == 1);
  CHECK(a.col_count() == 2);
  CHECK(a.at(0, 0) != a.at(0, 1));
  const auto gf4 = FiniteRing::build("GF(4)");
  const auto b = build_latin_sum_reg(gf4, gf4);
  CHECK(b.row_count() == 3);
  CHECK(b.col_count() == 3);
  CHECK(is_latin_rectangle(b));
  const auto c = build_latin_sum_reg(z2, FiniteRing::build("Z5"));
  CHECK(c.row_count() == 1);
  CHECK(std::set<std::uint32_t>(c.entries[0].begin(), c.entries[0].end()).size() == 4);
  CHECK(is_latin_sum(c).valid);
  CHECK_THROWS_AS(build_latin_sum_reg(FiniteRing::build("Z3"), FiniteRing::build("Z5")), HypothesisError);
}

TEST_CASE("all field pairs up to 27", "[latin]") {
  for (const char* s1 : kFields) {
    for (const char* s2 : kFields) {
      const auto f1 = FiniteRing::build(s1);
      const auto f2 = FiniteRing::build(s2);
      if (f1.order() > f2.order()) continue;
      INFO(s1 << " , " << s2);
      const auto a = build_latin_sum(f1, f2);
      CHECK(a.row_count() == f1.order());
      CHECK(a.col_count() == f2.order());
      CHECK(is_latin_sum(a).valid);
      CHECK(a.alphabet_size == (f1.order() == 3 && f2.order() == 3 ? 4U : f2.order()));
      for (const auto& row : a.entries) {
        for (auto e : row) CHECK(e < a.alphabet_size);
      }
      if (f2.order() <= 9) CHECK(latin_sum_oracle(f1, f2, a));
      if (f1.block(0).characteristic_prime() == 2 && f2.block(0).characteristic_prime() == 2) {
        CHECK(is_latin_rectangle(a));
      }
      if (f1.order() == f2.order()) CHECK(is_latin_sum(transpose(a)).valid);
      if (f1.block(0).characteristic_prime() == 2) {
        const auto r = build_latin_sum_reg(f1, f2);
        CHECK(r.row_count() == f1.order() - 1);
        CHECK(r.col_count() == f2.order() - 1);
        CHECK(r.alphabet_size == f2.order() - 1);
        CHECK(is_latin_sum(r).valid);
      }
    }
  }
}

TEST_CASE("capped odd arrays", "[latin]") {
  for (const char* s1 : kFields) {
    for (const char* s2 : kFields) {
      const auto f1 = FiniteRing::build(s1);
      const auto f2 = FiniteRing::build(s2);
      if (f1.order() > f2.order() || f1.block(0).characteristic_prime() == 2 ||
          f2.block(0).characteristic_prime() == 2 || f2.order() < 5) {
        continue;
      }
      INFO(s1 << " , " << s2);
      for (std::size_t cap : {static_cast<std::size_t>(f1.order()), static_cast<std::size_t>(f2.order())}) {
        const auto a = build_latin_sum_capped(f1, f2, cap);
        if (cap == f2.order()) REQUIRE(a.has_value());
        if (!a) continue;
        CHECK(is_latin_sum(*a).valid);
        CHECK(a->alphabet_size == f2.order());
        std::vector<std::size_t> count(a->alphabet_size, 0);
        for (const auto& row : a->entries) {
          for (auto e : row) ++count[e];
        }
        for (auto n : count) CHECK(n <= cap);
        if (f2.order() <= 9) CHECK(latin_sum_oracle(f1, f2, *a));
      }
    }
  }
  CHECK_THROWS_AS(build_latin_sum_capped(FiniteRing::build("Z3"), FiniteRing::build("Z3"), 9), HypothesisError);
  CHECK_THROWS_AS(build_latin_sum_capped(FiniteRing::build("GF(4)"), FiniteRing::build("Z5"), 9), HypothesisError);
}

TEST_CASE("labels pair negations", "[latin]") {
  const auto z7 = FiniteRing::build("Z7");
  const auto l = full_labels(z7);
  REQUIRE(l.size() == 7);
  CHECK(l.elements[0] == 0);
  for (std::size_t i = 1; i < 7; i += 2) CHECK(z7.add(l.elements[i], l.elements[i + 1]) == 0);
  for (std::size_t i = 0; i < 7; ++i) CHECK(z7.add(l.elements[i], l.elements[l.partner[i]]) == 0);
  const auto n = nonzero_labels(FiniteRing::build("GF(8)"));
  CHECK(n.size() == 7);
  CHECK(std::find(n.elements.begin(), n.elements.end(), 0U) == n.elements.end());
}

TEST_CASE("mixed case fixture and D-arrays", "[latin]") {
  const auto& fx = mixed_case_7x7();
  REQUIRE(fx.size() == 7);
  CHECK(fx[0] == std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(fx[1] == std::vector<std::uint32_t>{2, 1, 3, 4, 5, 6, 7});
  const auto d = check_d_conditions(fx);
  CHECK(d.d1);
  CHECK(d.d2);
  CHECK(d.d3);
  for (std::size_t m = 1; m <= 13; ++m) {
    for (std::size_t rows : {std::size_t{2}, std::size_t{4}, std::size_t{8}, std::size_t{16}}) {
      if (rows > 2 * m + 1) continue;
      const auto arr = build_d_array(rows, m, 2 * m + 1);
      const auto c = check_d_conditions(arr);
      INFO("rows " << rows << " m " << m);
      CHECK(c.d1);
      CHECK(c.d2);
      CHECK(c.d3);
    }
  }
  // D3 fails once a pair of columns shares a symbol
  DArray bad = fx;
  std::swap(bad[0][1], bad[0][3]);
  std::swap(bad[1][2], bad[1][3]);
  CHECK_FALSE(check_d_conditions(bad).d3);
}

TEST_CASE("fixture as a Latin-sum array over Z2-type rows", "[latin]") {
  // rows labelled by a characteristic-2 field: only condition (ii) applies
  const auto& fx = mixed_case_7x7();
  LatinSumArray a;
  a.rows = full_labels(FiniteRing::build("GF(8)"));
  a.rows.elements.resize(7);
  a.rows.names.resize(7);
  a.rows.partner.resize(7);
  for (std::size_t i = 0; i < 7; ++i) a.rows.partner[i] = i;
  a.cols = full_labels(FiniteRing::build("Z7"));
  for (const auto& row : fx) {
    std::vector<std::uint32_t> r;
    for (auto s : row) r.push_back(s - 1);
    a.entries.push_back(r);
  }
  a.alphabet_size = 7;
  CHECK(is_latin_sum(a).valid);
}
