// Copyright 2026 The unikit Authors
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

#include "unikit/cli/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "unikit/error.hpp"

namespace unikit::cli {

using nlohmann::ordered_json;

ReportRecord make_report(const Scenario& s, const ClassificationResult& r) {
  return ReportRecord{kReportSchema, s.descriptor, s.family, s.kind, r};
}

namespace {

ordered_json oracle_json(const OracleEvidence& o, ExtensionKind kind) {
  ordered_json j;
  j["dim"] = o.dim;
  j["group"] = to_string(o.group.tag);
  j["converged"] = o.converged;
  j["rounds"] = o.rounds;
  j["seeds"] = o.seeds;
  j["bound"] = kind == ExtensionKind::kGate ? "lower" : "exact";
  return j;
}

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::kInvalidScenario, "report: " + msg); }

double residual_value(const ordered_json& v, const char* name) {
  if (!v.is_number()) bad(std::string(name) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x) || x < 0.0) bad(std::string(name) + " must be a non-negative finite real");
  return x;
}

}  // namespace

std::string to_json(const ReportRecord& r) {
  ordered_json j;
  j["schema"] = r.schema;
  j["sector"] = r.sector.to_string();
  j["family"] = to_string(r.family);
  j["extension"] = to_string(r.kind);
  j["verdict"] = to_string(r.result.verdict);
  const auto& e = r.result.evidence;
  ordered_json ev;
  ev["membership_residual"] = e.membership_residual;
  ev["residual"] = opt(e.residual);
  ev["form_type"] = e.form_type ? ordered_json(to_string(*e.form_type)) : ordered_json(nullptr);
  ev["normalizes"] = opt(e.normalizes);
  ev["automorphism_type"] = e.automorphism ? ordered_json(to_string(*e.automorphism)) : ordered_json(nullptr);
  ev["discrepancy_flags"] = e.discrepancy_flags;
  ev["reason"] = e.reason;
  j["evidence"] = ev;
  j["oracle"] = e.oracle ? oracle_json(*e.oracle, r.kind) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

ReportRecord report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  try {
    ReportRecord r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) bad("unsupported schema '" + r.schema + "'");
    r.sector = SectorDescriptor::parse(j.at("sector").get<std::string>());
    r.family = parse_family(j.at("family").get<std::string>());
    const auto ext = j.at("extension").get<std::string>();
    if (ext == "hamiltonian") {
      r.kind = ExtensionKind::kHamiltonian;
    } else if (ext == "gate") {
      r.kind = ExtensionKind::kGate;
    } else {
      bad("unknown extension '" + ext + "'");
    }
    r.result.verdict = parse_verdict(j.at("verdict").get<std::string>());
    const auto& ev = j.at("evidence");
    auto& e = r.result.evidence;
    e.membership_residual = residual_value(ev.at("membership_residual"), "membership_residual");
    if (!ev.at("residual").is_null()) e.residual = residual_value(ev.at("residual"), "residual");
    if (const auto& f = ev.at("form_type"); !f.is_null()) {
      const auto s = f.get<std::string>();
      if (s == "symmetric") {
        e.form_type = FormType::kSymmetric;
      } else if (s == "antisymmetric") {
        e.form_type = FormType::kAntisymmetric;
      } else {
        bad("unknown form_type '" + s + "'");
      }
    }
    if (!ev.at("normalizes").is_null()) e.normalizes = ev.at("normalizes").get<bool>();
    if (const auto& a = ev.at("automorphism_type"); !a.is_null()) {
      const auto s = a.get<std::string>();
      if (s == "inner") {
        e.automorphism = AutomorphismType::kInner;
      } else if (s == "outer") {
        e.automorphism = AutomorphismType::kOuter;
      } else {
        bad("unknown automorphism_type '" + s + "'");
      }
    }
    e.discrepancy_flags = ev.at("discrepancy_flags").get<std::vector<std::string>>();
    e.reason = ev.at("reason").get<std::string>();
    if (const auto& o = j.at("oracle"); !o.is_null()) {
      OracleEvidence oe;
      oe.dim = o.at("dim").get<std::size_t>();
      oe.group = GroupId{parse_group_tag(o.at("group").get<std::string>()), oe.dim};
      oe.converged = o.at("converged").get<bool>();
      oe.rounds = o.at("rounds").get<int>();
      oe.seeds = o.at("seeds").get<std::size_t>();
      e.oracle = oe;
    }
    return r;
  } catch (const ordered_json::exception& ex) {
    bad(ex.what());
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::kInvalidScenario) throw;
    bad(ex.what());
  }
}

std::string to_text(const ReportRecord& r) {
  std::ostringstream os;
  const auto& e = r.result.evidence;
  os << std::setprecision(6);
  os << "sector               " << r.sector.to_string() << " (dim " << sector_dim(r.sector) << ")\n";
  os << "family               " << to_string(r.family) << "\n";
  os << "extension            " << to_string(r.kind) << "\n";
  os << "verdict              " << to_string(r.result.verdict) << "\n";
  os << "reason               " << e.reason << "\n";
  os << "membership residual  " << e.membership_residual << "\n";
  if (e.normalizes) os << "normalizes           " << (*e.normalizes ? "yes" : "no") << "\n";
  if (e.automorphism) os << "automorphism         " << to_string(*e.automorphism) << "\n";
  if (e.residual) {
    os << (r.kind == ExtensionKind::kGate ? "eigenvector residual " : "annihilation residual") << " "
       << *e.residual << "\n";
  }
  if (e.form_type) os << "form type            " << to_string(*e.form_type) << "\n";
  if (e.oracle) {
    os << "oracle               dim " << e.oracle->dim << ", " << to_string(e.oracle->group.tag) << ", "
       << e.oracle->rounds << " rounds" << (r.kind == ExtensionKind::kGate ? " (lower bound)" : "") << "\n";
  }
  for (const auto& f : e.discrepancy_flags) os << "flag                 " << f << "\n";
  return os.str();
}

}  // namespace unikit::cli
