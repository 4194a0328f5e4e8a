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

// Ring catalogs, theorem verification pipelines and their reports.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totgraph/coloring.hpp"
#include "totgraph/graph.hpp"
#include "totgraph/ring.hpp"
#include "totgraph/solver.hpp"

namespace totgraph {

struct RingCatalog {
  std::vector<BlockDescriptor> pool;
  std::uint64_t max_order = 0;
  std::vector<RingDescriptor> rings;
};

/// Z2, Z3, Z4, Z5, Z7, Z8, Z9, GF(4), GF(8), GF(9), Z2[x]/(x^2), Z3[x]/(x^2).
std::vector<BlockDescriptor> default_pool();
/// Comma-separated block specs, e.g. "Z2,Z3,GF(4)".
std::vector<BlockDescriptor> parse_pool(const std::string& text);
std::string pool_to_string(const std::vector<BlockDescriptor>& pool);

/// Every multiset of pool blocks with product order <= max_order, sorted by
/// (block count, block sequence) after canonicalization; duplicates dropped.
RingCatalog generate_catalog(const std::vector<BlockDescriptor>& pool, std::uint64_t max_order);

enum class Status : std::uint8_t { Pass, Fail, Exception, Open };
std::string to_string(Status s);
Status parse_status(const std::string& s);

struct VerifyOptions {
  std::vector<BlockDescriptor> pool = default_pool();
  std::uint64_t max_order = 64;
  std::uint64_t solver_cap = 32;
  Budget budget;
  bool parallel = true;
};

struct SolverValue {
  std::uint32_t chi = 0;
  std::uint32_t omega = 0;
  friend bool operator==(const SolverValue&, const SolverValue&) = default;
};

struct ReportRow {
  std::string ring;
  std::uint64_t order = 0;
  GraphKind kind = GraphKind::Total;
  /// "i", "ii", "z3z3", "exception" (total); "odd", "even" (reg);
  /// "excluded" (explorer).
  std::string branch;
  std::uint64_t predicted = 0;
  std::uint32_t constructed_k = 0;
  std::uint32_t omega = 0;
  std::optional<SolverValue> solver;
  Status status = Status::Open;
  std::string provenance;
  /// Witnesses as ring element indices.
  std::vector<std::vector<Element>> coloring_classes;
  std::vector<Element> clique;
  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t exception = 0;
  std::size_t open = 0;
  std::size_t fail = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct VerificationReport {
  std::string suite;  // "total", "reg" or "explore"
  std::vector<BlockDescriptor> pool;
  std::uint64_t max_order = 0;
  std::uint64_t solver_cap = 0;
  Budget budget;
  std::vector<ReportRow> rows;
  Summary summary;
};
bool operator==(const VerificationReport& a, const VerificationReport& b);

Summary summarize(const std::vector<ReportRow>& rows);

/// Hypothesis branch of the total-graph theorem: "i", "ii", "z3z3",
/// "exception" (odd-characteristic field) or "excluded".
std::string total_branch(const FiniteRing& ring);
/// "odd", "even" or "excluded".
std::string reg_branch(const FiniteRing& ring);

/// max |m| over Max(R), or 4 for Z3 x Z3.
std::uint64_t predicted_total(const FiniteRing& ring, GraphKind kind);
/// 2^|Max(R)| (odd) or |Reg(R)| / (|R/m| - 1) (even).
std::uint64_t predicted_reg(const FiniteRing& ring);

/// Clique witnesses, as vertices of the given graph kind.
CliqueWitness total_clique(const FiniteRing& ring, GraphKind kind);
CliqueWitness reg_clique(const FiniteRing& ring);

ReportRow verify_total_row(const FiniteRing& ring, GraphKind kind, const VerifyOptions& options);
ReportRow verify_reg_row(const FiniteRing& ring, const VerifyOptions& options);
ReportRow explore_row(const FiniteRing& ring, const VerifyOptions& options);

VerificationReport verify_total_theorem(const RingCatalog& catalog, const VerifyOptions& options);
VerificationReport verify_reg_theorems(const RingCatalog& catalog, const VerifyOptions& options);
VerificationReport explore_conjecture(const RingCatalog& catalog, const VerifyOptions& options);

// -- Serialization -----------------------------------------------------------

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);
std::string report_to_csv(const VerificationReport& report);

/// Rebuilds the ring and graph from the row alone and re-checks the stored
/// coloring classes (proper, constructed_k colors) and clique (size omega).
bool revalidate_row(const ReportRow& row);

}  // namespace totgraph
