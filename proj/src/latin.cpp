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

#include "totgraph/latin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "totgraph/error.hpp"

namespace totgraph {

std::size_t FieldLabels::position_of(Element e) const {
  const auto it = std::find(elements.begin(), elements.end(), e);
  if (it == elements.end()) throw HypothesisError("element " + std::to_string(e) + " not a label of " + field);
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

void require_field(const FiniteRing& f, const char* what) {
  if (!f.is_field()) throw HypothesisError(std::string(what) + " = " + f.name() + " is not a field");
}

FieldLabels labels_from(const FiniteRing& f, std::vector<Element> elements) {
  FieldLabels l;
  l.field = f.name();
  l.characteristic = f.block(0).characteristic_prime();
  l.elements = std::move(elements);
  for (Element e : l.elements) l.names.push_back(f.label(e));
  l.partner.assign(l.elements.size(), SIZE_MAX);
  for (std::size_t i = 0; i < l.elements.size(); ++i) {
    const Element n = f.neg(l.elements[i]);
    for (std::size_t j = 0; j < l.elements.size(); ++j) {
      if (l.elements[j] == n) l.partner[i] = j;
    }
  }
  return l;
}

// Signed presentation 0, 1, -1, 2, -2, ... to dense symbols.
std::uint32_t dense(int v) {
  if (v > 0) return static_cast<std::uint32_t>(2 * v - 1);
  return static_cast<std::uint32_t>(-2 * v);
}

int signed_of(std::uint32_t s) {
  if (s == 0) return 0;
  return (s % 2 == 1) ? static_cast<int>((s + 1) / 2) : -static_cast<int>(s / 2);
}

void check_built(const LatinSumArray& a) {
  const auto chk = is_latin_sum(a);
  if (!chk.valid) {
    throw std::logic_error("built array for " + a.rows.field + ", " + a.cols.field +
                           " is not Latin-sum");
  }
}

// Both fields odd. Column-0 entries for the row pair (x_i, -x_i).
std::pair<int, int> pair_column_zero(int i, int n) {
  if (n == 1) return {1, 2};
  if (n % 2 == 1 && i == n) return {n, -n};
  if (i % 2 == 1) return {i, i + 1};
  return {-(i - 1), -i};
}

LatinSumArray odd_odd(FieldLabels rows, FieldLabels cols) {
  const int n = static_cast<int>((rows.size() - 1) / 2);
  const int m = static_cast<int>((cols.size() - 1) / 2);
  std::vector<std::vector<int>> v(rows.size(), std::vector<int>(cols.size(), 0));
  for (int j = 1; j <= m; ++j) {
    v[0][2 * j - 1] = j;
    v[0][2 * j] = -j;
  }
  for (int i = 1; i <= n; ++i) {
    const auto [ca, cb] = pair_column_zero(i, n);
    auto& plus = v[2 * i - 1];
    auto& minus = v[2 * i];
    plus[0] = ca;
    minus[0] = cb;
    for (int j = 1; j <= m; ++j) {
      plus[2 * j - 1] = 1;
      plus[2 * j] = -1;
      minus[2 * j - 1] = 2;
      minus[2 * j] = (n % 2 == 1) ? 0 : -2;
    }
  }
  LatinSumArray a;
  a.rows = std::move(rows);
  a.cols = std::move(cols);
  a.alphabet_size = (n == 1 && m == 1) ? 4 : static_cast<std::uint32_t>(2 * m + 1);
  a.entries.assign(v.size(), std::vector<std::uint32_t>(v[0].size()));
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v[r].size(); ++c) a.entries[r][c] = dense(v[r][c]);
  for (std::uint32_t s = 0; s < a.alphabet_size; ++s) a.display.push_back(signed_of(s));
  return a;
}

// Symbol sets for the pair (yl, -yl), l = 1..m.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> pair_sets(std::size_t l,
                                                                          std::size_t m,
                                                                          std::size_t s) {
  auto wrap = [s](std::size_t v) { return static_cast<std::uint32_t>((v - 1) % s + 1); };
  if (m == 1) {
    if (s > 3) return {{1, 2}, {3, 4}};
    return {{1, 2}, {3}};
  }
  std::vector<std::uint32_t> a = (l == 1) ? std::vector<std::uint32_t>{1, 2}
                                          : std::vector<std::uint32_t>{wrap(2 * l - 2), wrap(2 * l)};
  std::vector<std::uint32_t> b{wrap(2 * l + 1), wrap(2 * l + 2)};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

// Kuhn augmenting path over slots.
bool augment(std::size_t slot, const std::vector<std::vector<std::uint32_t>>& options,
             std::vector<std::size_t>& owner, std::vector<char>& seen) {
  for (std::uint32_t sym : options[slot]) {
    if (seen[sym]) continue;
    seen[sym] = 1;
    if (owner[sym] == SIZE_MAX || augment(owner[sym], options, owner, seen)) {
      owner[sym] = slot;
      return true;
    }
  }
  return false;
}

// Capacitated bipartite assignment: cell -> symbol, symbol used at most cap[sym] times.
bool augment_capped(std::size_t cell, const std::vector<std::vector<std::uint32_t>>& options,
                    const std::vector<std::size_t>& cap, std::vector<std::vector<std::size_t>>& owners,
                    std::vector<char>& seen) {
  for (std::uint32_t sym : options[cell]) {
    if (seen[sym]) continue;
    seen[sym] = 1;
    if (owners[sym].size() < cap[sym]) {
      owners[sym].push_back(cell);
      return true;
    }
    for (auto& other : owners[sym]) {
      if (augment_capped(other, options, cap, owners, seen)) {
        other = cell;
        return true;
      }
    }
  }
  return false;
}

// Cells in row-major order; a symbol may not repeat across a partner row or
// a partner column, and is used at most `cap` times.
constexpr std::uint64_t kCappedSearchNodes = 200'000;

bool capped_search(LatinSumArray& a, std::size_t cap, std::uint64_t budget) {
  const std::size_t rows = a.rows.size();
  const std::size_t cols = a.cols.size();
  const std::size_t s = a.alphabet_size;
  std::vector<std::vector<std::uint32_t>> in_row(rows, std::vector<std::uint32_t>(s, 0));
  std::vector<std::vector<std::uint32_t>> in_col(cols, std::vector<std::uint32_t>(s, 0));
  std::vector<std::size_t> count(s, 0);
  std::vector<char> filled(rows * cols, 0);
  std::uint64_t nodes = 0;
  auto allowed = [&](std::size_t r, std::size_t c, std::uint32_t v) {
    return count[v] < cap && in_row[a.rows.partner[r]][v] == 0 && in_col[a.cols.partner[c]][v] == 0;
  };
  // Most constrained cell first, ties in row-major order.
  auto place = [&](auto&& self, std::size_t done) -> bool {
    if (done == rows * cols) return true;
    if (++nodes > budget) return false;
    std::size_t best = SIZE_MAX;
    std::size_t best_options = SIZE_MAX;
    for (std::size_t k = 0; k < rows * cols && best_options > 0; ++k) {
      if (filled[k]) continue;
      std::size_t options = 0;
      for (std::uint32_t v = 0; v < s; ++v) options += allowed(k / cols, k % cols, v) ? 1 : 0;
      if (options < best_options) {
        best = k;
        best_options = options;
      }
    }
    if (best_options == 0) return false;
    const std::size_t r = best / cols;
    const std::size_t c = best % cols;
    filled[best] = 1;
    for (std::uint32_t v = 0; v < s; ++v) {
      if (!allowed(r, c, v)) continue;
      a.entries[r][c] = v;
      ++in_row[r][v];
      ++in_col[c][v];
      ++count[v];
      if (self(self, done + 1)) return true;
      --in_row[r][v];
      --in_col[c][v];
      --count[v];
      if (nodes > budget) break;
    }
    filled[best] = 0;
    return false;
  };
  return place(place, 0);
}

}  // namespace

FieldLabels full_labels(const FiniteRing& field) {
  require_field(field, "field");
  std::vector<Element> els;
  if (field.block(0).characteristic_prime() == 2) {
    for (Element e = 0; e < field.order(); ++e) els.push_back(e);
  } else {
    els.push_back(0);
    for (Element e = 1; e < field.order(); ++e) {
      const Element n = field.neg(e);
      if (e < n) {
        els.push_back(e);
        els.push_back(n);
      }
    }
  }
  return labels_from(field, std::move(els));
}

FieldLabels nonzero_labels(const FiniteRing& field) {
  require_field(field, "field");
  std::vector<Element> els;
  for (Element e = 1; e < field.order(); ++e) els.push_back(e);
  return labels_from(field, std::move(els));
}

bool violates(const LatinSumArray& a, Cell x, Cell y) {
  if (x == y) return false;
  const bool constrained = a.rows.partner[x.row] == y.row || a.cols.partner[x.col] == y.col;
  return constrained && a.entries[x.row][x.col] == a.entries[y.row][y.col];
}

LatinCheck is_latin_sum(const LatinSumArray& a) {
  LatinCheck out;
  const std::size_t r = a.rows.size(), c = a.cols.size();
  if (a.entries.size() != r) {
    out.valid = false;
    return out;
  }
  for (const auto& row : a.entries) {
    if (row.size() != c) {
      out.valid = false;
      return out;
    }
    for (std::uint32_t s : row) {
      if (s >= a.alphabet_size) {
        out.valid = false;
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < r * c; ++i) {
    const Cell x{i / c, i % c};
    for (std::size_t j = i + 1; j < r * c; ++j) {
      const Cell y{j / c, j % c};
      if (violates(a, x, y)) {
        out.valid = false;
        out.violation = std::make_pair(x, y);
        return out;
      }
    }
  }
  return out;
}

bool is_latin_rectangle(const LatinSumArray& a) {
  for (const auto& row : a.entries) {
    if (std::set<std::uint32_t>(row.begin(), row.end()).size() != row.size()) return false;
  }
  for (std::size_t c = 0; c < a.col_count(); ++c) {
    std::set<std::uint32_t> col;
    for (const auto& row : a.entries) col.insert(row[c]);
    if (col.size() != a.row_count()) return false;
  }
  return true;
}

LatinSumArray transpose(const LatinSumArray& a) {
  LatinSumArray t;
  t.rows = a.cols;
  t.cols = a.rows;
  t.alphabet_size = a.alphabet_size;
  t.display = a.display;
  t.entries.assign(a.col_count(), std::vector<std::uint32_t>(a.row_count()));
  for (std::size_t r = 0; r < a.row_count(); ++r)
    for (std::size_t c = 0; c < a.col_count(); ++c) t.entries[c][r] = a.entries[r][c];
  return t;
}

DArray build_d_array(std::size_t rows, std::size_t m, std::size_t symbols) {
  const std::size_t cols = 2 * m + 1;
  if (m < 1 || symbols < std::max(rows, cols)) {
    throw HypothesisError("d-array needs m >= 1 and at least max(rows, 2m+1) symbols");
  }
  std::vector<std::vector<std::uint32_t>> sets(cols);
  for (std::size_t l = 1; l <= m; ++l) {
    auto [a, b] = pair_sets(l, m, symbols);
    sets[2 * l - 1] = std::move(a);
    sets[2 * l] = std::move(b);
  }
  DArray d(rows, std::vector<std::uint32_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto lead = static_cast<std::uint32_t>(i + 1);
    d[i][0] = lead;
    std::vector<std::vector<std::uint32_t>> options(cols);
    for (std::size_t slot = 1; slot < cols; ++slot) {
      for (std::uint32_t s : sets[slot]) {
        if (s != lead) options[slot].push_back(s);
      }
    }
    std::vector<std::size_t> owner(symbols + 1, SIZE_MAX);
    for (std::size_t slot = 1; slot < cols; ++slot) {
      std::vector<char> seen(symbols + 1, 0);
      if (!augment(slot, options, owner, seen)) {
        throw std::logic_error("d-array row " + std::to_string(i + 1) + " has no matching");
      }
    }
    for (std::uint32_t s = 1; s <= symbols; ++s) {
      if (owner[s] != SIZE_MAX) d[i][owner[s]] = s;
    }
  }
  return d;
}

DConditions check_d_conditions(const DArray& d) {
  DConditions out;
  out.d1 = std::all_of(d.begin(), d.end(), [](const std::vector<std::uint32_t>& row) {
    return std::set<std::uint32_t>(row.begin(), row.end()).size() == row.size();
  });
  std::set<std::uint32_t> first;
  for (const auto& row : d) first.insert(row.front());
  out.d2 = first.size() == d.size();
  out.d3 = true;
  const std::size_t cols = d.empty() ? 0 : d.front().size();
  for (std::size_t j = 1; j + 1 < cols; j += 2) {
    std::set<std::uint32_t> plus, minus;
    for (const auto& row : d) {
      plus.insert(row[j]);
      minus.insert(row[j + 1]);
    }
    for (std::uint32_t s : plus) {
      if (minus.count(s)) out.d3 = false;
    }
  }
  return out;
}

const DArray& mixed_case_7x7() {
  static const DArray square = {
      {1, 2, 3, 4, 5, 6, 7}, {2, 1, 3, 4, 5, 6, 7}, {3, 1, 4, 2, 5, 6, 7},
      {4, 1, 3, 2, 5, 6, 7}, {5, 1, 3, 2, 6, 4, 7}, {6, 1, 3, 2, 5, 4, 7},
      {7, 6, 3, 2, 5, 4, 1},
  };
  return square;
}

LatinSumArray build_latin_sum(const FiniteRing& f1, const FiniteRing& f2) {
  require_field(f1, "F1");
  require_field(f2, "F2");
  if (f1.order() > f2.order()) {
    throw HypothesisError("build_latin_sum needs |F1| <= |F2| (got " + f1.name() + ", " +
                          f2.name() + ")");
  }
  const std::uint32_t c1 = f1.block(0).characteristic_prime();
  const std::uint32_t c2 = f2.block(0).characteristic_prime();
  LatinSumArray a;
  if (c1 == 2 && c2 == 2) {
    a.rows = full_labels(f1);
    a.cols = full_labels(f2);
    a.alphabet_size = f2.order();
    a.entries.assign(f1.order(), std::vector<std::uint32_t>(f2.order()));
    for (std::uint32_t i = 0; i < f1.order(); ++i)
      for (std::uint32_t j = 0; j < f2.order(); ++j) a.entries[i][j] = (i + j) % f2.order();
  } else if (c1 != 2 && c2 != 2) {
    a = odd_odd(full_labels(f1), full_labels(f2));
  } else if (c1 == 2) {
    const std::size_t m = (f2.order() - 1) / 2;
    const DArray d = build_d_array(f1.order(), m, f2.order());
    a.rows = full_labels(f1);
    a.cols = full_labels(f2);
    a.alphabet_size = f2.order();
    a.entries.assign(d.size(), std::vector<std::uint32_t>(d.front().size()));
    for (std::size_t r = 0; r < d.size(); ++r)
      for (std::size_t c = 0; c < d[r].size(); ++c) a.entries[r][c] = d[r][c] - 1;
  } else {
    // F1 odd, F2 of characteristic 2: transpose a square built the other way.
    const std::size_t m = (f1.order() - 1) / 2;
    const DArray d = build_d_array(f2.order(), m, f2.order());
    LatinSumArray t;
    t.rows = full_labels(f2);
    t.cols = full_labels(f1);
    t.alphabet_size = f2.order();
    t.entries.assign(d.size(), std::vector<std::uint32_t>(d.front().size()));
    for (std::size_t r = 0; r < d.size(); ++r)
      for (std::size_t c = 0; c < d[r].size(); ++c) t.entries[r][c] = d[r][c] - 1;
    a = transpose(t);
  }
  check_built(a);
  return a;
}

std::optional<LatinSumArray> build_latin_sum_capped(const FiniteRing& f1, const FiniteRing& f2,
                                                    std::size_t cap) {
  require_field(f1, "F1");
  require_field(f2, "F2");
  if (f1.order() > f2.order() || f1.block(0).characteristic_prime() == 2 ||
      f2.block(0).characteristic_prime() == 2 || f2.order() < 5) {
    throw HypothesisError("build_latin_sum_capped needs odd fields with |F1| <= |F2|, |F2| >= 5 (got " +
                          f1.name() + ", " + f2.name() + ")");
  }
  const std::size_t n = (f1.order() - 1) / 2;
  const std::size_t m = (f2.order() - 1) / 2;
  const std::size_t s = f2.order();
  LatinSumArray a;
  a.rows = full_labels(f1);
  a.cols = full_labels(f2);
  a.alphabet_size = static_cast<std::uint32_t>(s);
  a.entries.assign(f1.order(), std::vector<std::uint32_t>(s));
  auto search = [&]() -> std::optional<LatinSumArray> {
    LatinSumArray b = a;
    if (!capped_search(b, cap, kCappedSearchNodes)) return std::nullopt;
    check_built(b);
    return b;
  };
  std::vector<std::size_t> used(s, 0);
  // Row 0: 0, then even symbols on yj and odd ones on -yj.
  for (std::size_t j = 1; j <= m; ++j) {
    a.entries[0][2 * j - 1] = static_cast<std::uint32_t>(2 * j);
    a.entries[0][2 * j] = static_cast<std::uint32_t>(2 * j - 1);
  }
  for (std::size_t c = 0; c < s; ++c) ++used[a.entries[0][c]];
  // Row xi draws from [i, i+m-1], row -xi from the rest.
  auto in_plus = [&](std::size_t i, std::uint32_t sym) { return sym >= i && sym < i + m; };
  std::vector<std::vector<std::uint32_t>> col0(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::uint32_t sym = 1; sym < s; ++sym) {
      (in_plus(i, sym) ? col0[2 * i - 2] : col0[2 * i - 1]).push_back(sym);
    }
  }
  std::vector<std::size_t> owner(s, SIZE_MAX);
  for (std::size_t slot = 0; slot < col0.size(); ++slot) {
    std::vector<char> seen(s, 0);
    if (!augment(slot, col0, owner, seen)) return search();
  }
  for (std::uint32_t sym = 0; sym < s; ++sym) {
    if (owner[sym] == SIZE_MAX) continue;
    a.entries[owner[sym] + 1][0] = sym;
    ++used[sym];
  }
  std::vector<std::size_t> room(s, 0);
  for (std::uint32_t sym = 0; sym < s; ++sym) {
    if (used[sym] > cap) return search();
    room[sym] = cap - used[sym];
  }
  std::vector<Cell> cells;
  std::vector<std::vector<std::uint32_t>> options;
  for (std::size_t r = 1; r < f1.order(); ++r) {
    const std::size_t i = (r + 1) / 2;
    const bool plus_row = r % 2 == 1;
    for (std::size_t c = 1; c < s; ++c) {
      const std::uint32_t parity = c % 2 == 1 ? 0 : 1;
      std::vector<std::uint32_t> opt;
      for (std::uint32_t sym = parity; sym < s; sym += 2) {
        if (in_plus(i, sym) == plus_row) opt.push_back(sym);
      }
      cells.push_back({r, c});
      options.push_back(std::move(opt));
    }
  }
  std::vector<std::vector<std::size_t>> owners(s);
  for (std::size_t cell = 0; cell < cells.size(); ++cell) {
    std::vector<char> seen(s, 0);
    if (!augment_capped(cell, options, room, owners, seen)) return search();
  }
  for (std::uint32_t sym = 0; sym < s; ++sym) {
    for (std::size_t cell : owners[sym]) a.entries[cells[cell].row][cells[cell].col] = sym;
  }
  check_built(a);
  return a;
}

LatinSumArray build_latin_sum_reg(const FiniteRing& f1, const FiniteRing& f2) {
  require_field(f1, "F1");
  require_field(f2, "F2");
  if (f1.block(0).characteristic_prime() != 2) {
    throw HypothesisError("build_latin_sum_reg needs char F1 = 2 (got " + f1.name() + ")");
  }
  if (f1.order() > f2.order()) {
    throw HypothesisError("build_latin_sum_reg needs |F1| <= |F2|");
  }
  LatinSumArray a;
  a.rows = nonzero_labels(f1);
  a.cols = nonzero_labels(f2);
  const std::uint32_t k = f2.order() - 1;
  a.alphabet_size = k;
  const bool even = f2.block(0).characteristic_prime() == 2;
  a.entries.assign(f1.order() - 1, std::vector<std::uint32_t>(k));
  for (std::uint32_t i = 0; i + 1 < f1.order(); ++i)
    for (std::uint32_t j = 0; j < k; ++j) a.entries[i][j] = even ? (i + j) % k : j;
  check_built(a);
  return a;
}

}  // namespace totgraph
