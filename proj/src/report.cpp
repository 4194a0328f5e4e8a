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

#include <json.hpp>
#include <sstream>

#include "totgraph/error.hpp"
#include "totgraph/harness.hpp"

namespace totgraph {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kReportVersion = 1;

ojson row_to_json(const ReportRow& r) {
  ojson j;
  j["ring"] = r.ring;
  j["order"] = r.order;
  j["kind"] = to_string(r.kind);
  j["branch"] = r.branch;
  j["predicted"] = r.predicted;
  j["constructed_k"] = r.constructed_k;
  j["omega"] = r.omega;
  if (r.solver) {
    j["solver"] = {{"chi", r.solver->chi}, {"omega", r.solver->omega}};
  } else {
    j["solver"] = nullptr;
  }
  j["status"] = to_string(r.status);
  j["provenance"] = r.provenance;
  j["witnesses"] = {{"coloring_classes", r.coloring_classes}, {"clique", r.clique}};
  return j;
}

ReportRow row_from_json(const ojson& j) {
  ReportRow r;
  r.ring = j.at("ring").get<std::string>();
  r.order = j.at("order").get<std::uint64_t>();
  r.kind = parse_graph_kind(j.at("kind").get<std::string>());
  r.branch = j.at("branch").get<std::string>();
  r.predicted = j.at("predicted").get<std::uint64_t>();
  r.constructed_k = j.at("constructed_k").get<std::uint32_t>();
  r.omega = j.at("omega").get<std::uint32_t>();
  if (!j.at("solver").is_null()) {
    r.solver = SolverValue{j["solver"].at("chi").get<std::uint32_t>(),
                           j["solver"].at("omega").get<std::uint32_t>()};
  }
  r.status = parse_status(j.at("status").get<std::string>());
  r.provenance = j.value("provenance", std::string());
  const auto& w = j.at("witnesses");
  r.coloring_classes = w.at("coloring_classes").get<std::vector<std::vector<Element>>>();
  r.clique = w.at("clique").get<std::vector<Element>>();
  return r;
}

}  // namespace

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.suite == b.suite && a.pool == b.pool && a.max_order == b.max_order &&
         a.solver_cap == b.solver_cap && a.budget.max_nodes == b.budget.max_nodes &&
         a.budget.max_seconds == b.budget.max_seconds && a.rows == b.rows && a.summary == b.summary;
}

std::string report_to_json(const VerificationReport& rep) {
  ojson j;
  j["version"] = kReportVersion;
  j["suite"] = rep.suite;
  ojson pool = ojson::array();
  for (const auto& b : rep.pool) pool.push_back(b.to_string());
  j["config"] = {{"pool", pool},
                 {"max_order", rep.max_order},
                 {"solver_cap", rep.solver_cap},
                 {"budgets", {{"max_nodes", rep.budget.max_nodes}, {"max_seconds", rep.budget.max_seconds}}}};
  ojson rows = ojson::array();
  for (const auto& r : rep.rows) rows.push_back(row_to_json(r));
  j["rows"] = std::move(rows);
  j["summary"] = {{"pass", rep.summary.pass},
                  {"exception", rep.summary.exception},
                  {"open", rep.summary.open},
                  {"fail", rep.summary.fail}};
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report JSON: ") + e.what());
  }
  if (j.value("version", 0) != kReportVersion) throw Error("report JSON: unsupported version");
  VerificationReport rep;
  rep.suite = j.value("suite", std::string());
  const auto& cfg = j.at("config");
  std::string pool;
  for (const auto& b : cfg.at("pool")) {
    if (!pool.empty()) pool += ',';
    pool += b.get<std::string>();
  }
  rep.pool = parse_pool(pool);
  rep.max_order = cfg.at("max_order").get<std::uint64_t>();
  rep.solver_cap = cfg.at("solver_cap").get<std::uint64_t>();
  rep.budget.max_nodes = cfg.at("budgets").at("max_nodes").get<std::uint64_t>();
  rep.budget.max_seconds = cfg.at("budgets").at("max_seconds").get<double>();
  for (const auto& r : j.at("rows")) rep.rows.push_back(row_from_json(r));
  const auto& s = j.at("summary");
  rep.summary.pass = s.at("pass").get<std::size_t>();
  rep.summary.exception = s.at("exception").get<std::size_t>();
  rep.summary.open = s.at("open").get<std::size_t>();
  rep.summary.fail = s.at("fail").get<std::size_t>();
  return rep;
}

std::string report_to_csv(const VerificationReport& rep) {
  std::ostringstream out;
  out << "ring,order,kind,branch,predicted,constructed_k,omega,solver_chi,solver_omega,status\n";
  for (const auto& r : rep.rows) {
    out << '"' << r.ring << "\"," << r.order << ',' << to_string(r.kind) << ',' << r.branch << ','
        << r.predicted << ',' << r.constructed_k << ',' << r.omega << ',';
    if (r.solver) {
      out << r.solver->chi << ',' << r.solver->omega;
    } else {
      out << ',';
    }
    out << ',' << to_string(r.status) << '\n';
  }
  return out.str();
}

}  // namespace totgraph
