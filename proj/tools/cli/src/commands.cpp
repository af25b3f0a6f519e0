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

#include "unikit/cli/commands.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "unikit/cli/catalog.hpp"
#include "unikit/cli/report.hpp"
#include "unikit/cli/scenario_file.hpp"
#include "unikit/closure.hpp"
#include "unikit/invariants.hpp"

namespace unikit::cli {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return kExitNonHermitian;
    case ErrorCode::kNumericalAmbiguity:
    case ErrorCode::kOracleInconclusive: return kExitAmbiguous;
    case ErrorCode::kCrossValidationMismatch:
    case ErrorCode::kNotANormalizer: return kExitMismatch;
    default: return kExitInvalid;
  }
}

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

std::string state_label(const Occupation& occ) {
  std::string s;
  for (int v : occ) s += std::to_string(v);
  return s;
}

}  // namespace

int run_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioFile file = load_scenario(args.scenario);
    if (args.oracle) file.options.oracle = true;
    if (args.tolerance) {
      if (!(*args.tolerance > 0.0)) fail(ErrorCode::kInvalidScenario, "--tol must be positive");
      file.options.tolerance = *args.tolerance;
    }
    const Scenario s = build_scenario(file);
    const ReportRecord rec = make_report(s, classify(s));
    out << (args.json ? to_json(rec) : to_text(rec));
    return kExitOk;
  });
}

int run_repro(bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cases = catalog::repro_cases();
    bool all = true;
    ordered_json rows = ordered_json::array();
    if (!json) {
      out << std::left << std::setw(44) << "case" << std::setw(26) << "expected" << std::setw(26) << "computed"
          << "status\n";
    }
    for (const auto& c : cases) {
      const auto result = classify(c.scenario);
      const bool match = result.verdict == c.expected;
      all = all && match;
      if (json) {
        ordered_json row;
        row["label"] = c.label;
        row["expected"] = to_string(c.expected);
        row["computed"] = to_string(result.verdict);
        row["match"] = match;
        row["report"] = ordered_json::parse(to_json(make_report(c.scenario, result)));
        rows.push_back(row);
      } else {
        out << std::left << std::setw(44) << c.label << std::setw(26) << to_string(c.expected) << std::setw(26)
            << to_string(result.verdict) << (match ? "ok" : "MISMATCH") << "\n";
      }
    }
    if (json) {
      ordered_json j;
      j["schema"] = "unikit.repro/1";
      j["all_match"] = all;
      j["rows"] = rows;
      out << j.dump(2) << "\n";
    } else {
      out << (all ? "all cases match\n" : "some cases do not match\n");
    }
    return all ? kExitOk : kExitMismatch;
  });
}

int run_oracle_command(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioFile file = load_scenario(args.scenario);
    if (args.max_rounds) {
      if (*args.max_rounds < 1) fail(ErrorCode::kInvalidScenario, "--max-rounds must be >= 1");
      file.options.max_rounds = *args.max_rounds;
    }
    if (args.max_power) {
      if (*args.max_power < 0) fail(ErrorCode::kInvalidScenario, "--max-power must be >= 0");
      file.options.max_power = *args.max_power;
    }
    const Scenario s = build_scenario(file);
    const auto o = run_oracle(s);
    const bool gate = s.kind == ExtensionKind::kGate;
    if (args.json) {
      ordered_json j;
      j["schema"] = "unikit.oracle/1";
      j["sector"] = s.descriptor.to_string();
      j["family"] = to_string(s.family);
      j["extension"] = to_string(s.kind);
      j["dim"] = o.dim;
      j["group"] = to_string(o.group.tag);
      j["converged"] = o.converged;
      j["rounds"] = o.rounds;
      j["seeds"] = o.seeds;
      j["bound"] = gate ? "lower" : "exact";
      out << j.dump(2) << "\n";
    } else {
      out << "sector     " << s.descriptor.to_string() << " (dim " << sector_dim(s.descriptor) << ")\n"
          << "closure    dim " << o.dim << " after " << o.rounds << " rounds, "
          << (o.converged ? "converged" : "NOT converged") << "\n"
          << "group      " << (o.converged ? to_string(o.group.tag) : "inconclusive") << "\n";
      if (gate) {
        out << "note       gate seeds use powers up to " << s.options.max_power
            << "; the dimension is a lower bound\n";
      }
    }
    if (!o.converged) {
      err << "error [oracle_inconclusive]: closure did not converge within " << o.rounds << " rounds\n";
      return kExitAmbiguous;
    }
    return kExitOk;
  });
}

int run_invariants(const std::string& sector, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto desc = SectorDescriptor::parse(sector);
    const auto psi = invariant_vector(desc);
    const auto basis = lie_basis(family_for(desc.kind), desc);
    double worst = 0.0;
    for (const auto& g : basis.generators.elements()) worst = std::max(worst, annihilation_residual(g, psi));
    const SectorBasis states(desc);
    const auto n = static_cast<Eigen::Index>(states.size());
    if (json) {
      ordered_json j;
      j["schema"] = "unikit.invariants/1";
      j["sector"] = desc.to_string();
      j["dim"] = n;
      j["norm"] = psi.norm;
      j["form_type"] = to_string(psi.form_type);
      j["max_generator_residual"] = worst;
      ordered_json amps = ordered_json::array();
      for (Eigen::Index k = 0; k < psi.psi.size(); ++k) {
        if (std::abs(psi.psi(k)) == 0.0) continue;
        amps.push_back({state_label(states[static_cast<std::size_t>(k / n)]),
                        state_label(states[static_cast<std::size_t>(k % n)]), psi.psi(k).real(), psi.psi(k).imag()});
      }
      j["amplitudes"] = amps;
      out << j.dump(2) << "\n";
    } else {
      out << "sector     " << desc.to_string() << " (dim " << n << ")\n"
          << "norm       " << std::setprecision(12) << psi.norm << "\n"
          << "form type  " << to_string(psi.form_type) << "\n"
          << "max residual over " << basis.dim() << " generators: " << std::setprecision(3) << worst << "\n"
          << "amplitudes\n"
          << std::setprecision(10);
      for (Eigen::Index k = 0; k < psi.psi.size(); ++k) {
        if (std::abs(psi.psi(k)) == 0.0) continue;
        out << "  |" << state_label(states[static_cast<std::size_t>(k / n)]) << ">|"
            << state_label(states[static_cast<std::size_t>(k % n)]) << ">  " << psi.psi(k).real() << "\n";
      }
    }
    return kExitOk;
  });
}

int run_dims(const std::string& sector, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto desc = SectorDescriptor::parse(sector);
    const auto n = sector_dim(desc);
    const Family fam = family_for(desc.kind);
    const auto basis = lie_basis(fam, desc);
    const std::size_t su = n * n - 1;
    const std::size_t so = n * (n - 1) / 2;
    if (json) {
      ordered_json j;
      j["schema"] = "unikit.dims/1";
      j["sector"] = desc.to_string();
      j["dim"] = n;
      j["family"] = to_string(fam);
      j["family_raw_dim"] = basis.raw_dim;
      j["family_dim"] = basis.dim();
      j["so"] = so;
      j["usp"] = n % 2 == 0 ? ordered_json(n * (n + 1) / 2) : ordered_json(nullptr);
      j["su"] = su;
      out << j.dump(2) << "\n";
    } else {
      out << "sector        " << desc.to_string() << "\n"
          << "dim           " << n << "\n"
          << "family        " << to_string(fam) << " (raw " << basis.raw_dim << ", span " << basis.dim() << ")\n"
          << "so(n)         " << so << "\n"
          << "usp(n)        " << (n % 2 == 0 ? std::to_string(n * (n + 1) / 2) : std::string("-")) << "\n"
          << "su(n)         " << su << "\n";
    }
    return kExitOk;
  });
}

}  // namespace unikit::cli
