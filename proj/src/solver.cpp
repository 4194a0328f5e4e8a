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

#include "totgraph/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "totgraph/error.hpp"

namespace totgraph {

namespace {

using Clock = std::chrono::steady_clock;

class Meter {
 public:
  explicit Meter(Budget b) : budget_(b), start_(Clock::now()) {}

  // False once the budget is gone; sticky.
  bool tick() {
    if (out_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes) out_ = true;
    if ((nodes_ & 1023U) == 0 && seconds() > budget_.max_seconds) out_ = true;
    return !out_;
  }
  bool exhausted() const { return out_; }
  std::uint64_t nodes() const { return nodes_; }
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Budget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool out_ = false;
};

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

int lowest(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w] != 0) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w])));
  }
  return -1;
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

// Max clique on a graph renumbered so that index order is the search order.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter) {}

  void run(std::vector<Vertex> incumbent) {
    best_ = std::move(incumbent);
    Bits all(g_.words_per_row(), 0);
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<Vertex> current;
    if (g_.vertex_count() > 0) expand(current, all);
  }
  const std::vector<Vertex>& best() const { return best_; }

 private:
  void expand(std::vector<Vertex>& current, Bits p) {
    if (!meter_.tick()) return;
    std::vector<Vertex> order;
    std::vector<std::uint32_t> bound;
    Bits q = p;
    std::uint32_t color = 0;
    while (any(q)) {
      ++color;
      Bits avail = q;
      while (any(avail)) {
        const auto v = static_cast<Vertex>(lowest(avail));
        reset(q, v);
        reset(avail, v);
        const auto row = g_.row(v);
        for (std::size_t w = 0; w < avail.size(); ++w) avail[w] &= ~row[w];
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      Bits np = p;
      const auto row = g_.row(v);
      for (std::size_t w = 0; w < np.size(); ++w) np[w] &= row[w];
      if (!any(np)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(np));
      }
      current.pop_back();
      if (meter_.exhausted()) return;
      reset(p, v);
    }
  }

  const Graph& g_;
  Meter& meter_;
  std::vector<Vertex> best_;
};

enum class Outcome { Yes, No, Budget };

// k-colorability by DSATUR-ordered backtracking.
class ColorSearch {
 public:
  ColorSearch(const Graph& g, std::uint32_t k, Meter& meter)
      : g_(g), k_(k), meter_(meter), color_(g.vertex_count(), kNone),
        count_(g.vertex_count() * std::max<std::uint32_t>(k, 1), 0),
        sat_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj_.push_back(g.neighbors(v));
  }

  Outcome run(std::span<const Vertex> clique) {
    std::uint32_t used = 0;
    for (Vertex v : clique) {
      if (used >= k_) return Outcome::No;
      assign(v, used++);
    }
    remaining_ = g_.vertex_count() - clique.size();
    return search(used);
  }

  std::vector<std::uint32_t> colors() const { return color_; }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    for (Vertex u : adj_[v]) {
      if (count_[std::size_t{u} * k_ + c]++ == 0) ++sat_[u];
    }
  }
  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = kNone;
    for (Vertex u : adj_[v]) {
      if (--count_[std::size_t{u} * k_ + c] == 0) --sat_[u];
    }
  }

  Outcome search(std::uint32_t used) {
    if (remaining_ == 0) return Outcome::Yes;
    if (!meter_.tick()) return Outcome::Budget;
    Vertex pick = 0;
    std::uint32_t best = 0;
    bool found = false;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] != kNone) continue;
      if (!found || sat_[v] > best) {
        pick = v;
        best = sat_[v];
        found = true;
      }
    }
    if (best >= k_) return Outcome::No;
    const std::uint32_t limit = std::min(k_, used + 1);
    --remaining_;
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (count_[std::size_t{pick} * k_ + c] != 0) continue;
      assign(pick, c);
      const Outcome r = search(std::max(used, c + 1));
      if (r != Outcome::No) return r;
      unassign(pick);
    }
    ++remaining_;
    return Outcome::No;
  }

  const Graph& g_;
  std::uint32_t k_;
  Meter& meter_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> sat_;
  std::size_t remaining_ = 0;
};

double elapsed_ms(const Meter& m) { return m.seconds() * 1000.0; }

}  // namespace

std::optional<std::pair<Vertex, Vertex>> clique_violation(const Graph& g,
                                                          std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.vertex_count()) return std::make_pair(vs[i], vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[j] >= g.vertex_count() || !g.adjacent(vs[i], vs[j])) {
        return std::make_pair(vs[i], vs[j]);
      }
    }
  }
  return std::nullopt;
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) { return !clique_violation(g, vs); }

CliqueResult clique_number(const Graph& g, Budget budget, std::span<const Vertex> seed) {
  Meter meter(budget);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<Vertex>(i);
  const Graph h = g.permuted(order);

  std::vector<Vertex> incumbent;
  if (!seed.empty() && is_clique(g, seed)) {
    for (Vertex v : seed) incumbent.push_back(rank[v]);
  } else if (n > 0) {
    incumbent.push_back(0);
  }
  CliqueSearch search(h, meter);
  search.run(incumbent);

  CliqueResult out;
  for (Vertex v : search.best()) out.witness.vertices.push_back(order[v]);
  std::sort(out.witness.vertices.begin(), out.witness.vertices.end());
  out.exact = !meter.exhausted();
  out.nodes = meter.nodes();
  out.elapsed_ms = elapsed_ms(meter);
  if (!is_clique(g, out.witness.vertices)) throw std::logic_error("clique search returned a non-clique");
  return out;
}

Coloring dsatur_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> color(n, UINT32_MAX);
  std::vector<std::vector<char>> seen(n);
  std::vector<std::uint32_t> sat(n, 0);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != UINT32_MAX) continue;
      if (!found || sat[v] > sat[pick] || (sat[v] == sat[pick] && deg[v] > deg[pick])) {
        pick = v;
        found = true;
      }
    }
    std::uint32_t c = 0;
    while (c < seen[pick].size() && seen[pick][c]) ++c;
    color[pick] = c;
    for (Vertex u : g.neighbors(pick)) {
      if (seen[u].size() <= c) seen[u].resize(c + 1, 0);
      if (!seen[u][c]) {
        seen[u][c] = 1;
        ++sat[u];
      }
    }
  }
  std::vector<std::uint64_t> keys(color.begin(), color.end());
  return Coloring::from_keys(keys, Provenance::Solver);
}

ChromaticResult chromatic_number(const Graph& g, Budget budget, std::span<const Vertex> clique_seed,
                                 const Coloring* coloring_seed) {
  ChromaticResult out;
  const auto start = Clock::now();
  const CliqueResult omega = clique_number(g, budget, clique_seed);
  out.clique = omega.witness;
  out.nodes = omega.nodes;
  out.lower = static_cast<std::uint32_t>(omega.witness.size());

  out.coloring = dsatur_coloring(g);
  if (coloring_seed != nullptr && coloring_seed->colors.size() == g.vertex_count() &&
      coloring_seed->k < out.coloring.k && verify_coloring(g, *coloring_seed).proper) {
    out.coloring = *coloring_seed;
  }
  out.upper = out.coloring.k;

  for (std::uint32_t k = out.lower; k < out.upper; ++k) {
    Meter meter(budget);
    ColorSearch search(g, k, meter);
    const Outcome r = search.run(out.clique.vertices);
    out.nodes += meter.nodes();
    if (r == Outcome::Yes) {
      const auto colors = search.colors();
      std::vector<std::uint64_t> keys(colors.begin(), colors.end());
      out.coloring = Coloring::from_keys(keys, Provenance::Solver);
      out.upper = out.coloring.k;
      break;
    }
    if (r == Outcome::Budget) break;
    out.lower = k + 1;
  }
  if (!verify_coloring(g, out.coloring).proper) throw std::logic_error("solver coloring not proper");
  out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Certified: return "certified";
    case CertificateStatus::ChiOnly: return "chi_only";
    case CertificateStatus::OmegaOnly: return "omega_only";
    case CertificateStatus::Open: return "open";
  }
  return "?";
}

ChromaticCertificate certify(const Graph& g, const Coloring& c, const CliqueWitness& w) {
  const ColoringCheck check = verify_coloring(g, c);
  if (!check.proper) {
    throw CertificateError("coloring not proper: edge (" + std::to_string(check.violation->first) +
                           ", " + std::to_string(check.violation->second) + ") is monochromatic");
  }
  if (!c.is_dense()) throw CertificateError("coloring ids not dense");
  if (auto bad = clique_violation(g, w.vertices)) {
    throw CertificateError("clique invalid: " + std::to_string(bad->first) + " and " +
                           std::to_string(bad->second) + " not adjacent");
  }
  ChromaticCertificate cert;
  cert.coloring = c;
  cert.clique = w;
  cert.lower = static_cast<std::uint32_t>(w.size());
  cert.upper = c.k;
  if (cert.lower == cert.upper) {
    cert.status = CertificateStatus::Certified;
    cert.k = c.k;
  }
  return cert;
}

ChromaticCertificate certify(const Graph& g, const ChromaticResult& chi, const CliqueResult& omega) {
  CliqueWitness w = omega.witness.size() >= chi.clique.size() ? omega.witness : chi.clique;
  ChromaticCertificate cert = certify(g, chi.coloring, w);
  if (cert.status == CertificateStatus::Certified) return cert;
  if (chi.exact()) {
    cert.status = CertificateStatus::ChiOnly;
  } else if (omega.exact) {
    cert.status = CertificateStatus::OmegaOnly;
  }
  return cert;
}

}  // namespace totgraph
