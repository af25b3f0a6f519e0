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

#include "unikit/cli/scenario_file.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "unikit/error.hpp"
#include "unikit/secondq.hpp"

namespace unikit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  fail(ErrorCode::kInvalidScenario, where + ": " + msg);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<int>();
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number()) bad(where, "expected a number");
  return v.get<double>();
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad(where, "unknown field '" + key + "'");
  }
}

SectorDescriptor parse_sector(const json& j) {
  check_keys(j, {"kind", "modes", "particles"}, "sector");
  const json& kind = require(j, "kind", "sector");
  if (!kind.is_string()) bad("sector.kind", "expected a string");
  SectorDescriptor d;
  const auto k = kind.get<std::string>();
  if (k == "bosonic") {
    d.kind = SectorKind::kBosonic;
  } else if (k == "fermionic") {
    d.kind = SectorKind::kFermionic;
  } else if (k == "fock_plus") {
    d.kind = SectorKind::kFockPlus;
  } else {
    bad("sector.kind", "unknown kind '" + k + "'");
  }
  d.modes = as_int(require(j, "modes", "sector"), "sector.modes");
  if (j.contains("particles")) d.particles = as_int(j.at("particles"), "sector.particles");
  try {
    d.validate();
  } catch (const Error& e) {
    bad("sector", e.what());
  }
  return d;
}

Complex parse_coeff(const json& c, const std::string& where) {
  if (c.is_number()) return {c.get<double>(), 0.0};
  if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
    return {c[0].get<double>(), c[1].get<double>()};
  }
  bad(where, "coefficient must be a number or [re, im]");
}

HamiltonianSpec parse_spec(const json& j) {
  check_keys(j, {"terms"}, "extension.spec");
  const json& terms = require(j, "terms", "extension.spec");
  if (!terms.is_array() || terms.empty()) bad("extension.spec.terms", "expected a non-empty array");
  HamiltonianSpec spec;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "extension.spec.terms[" + std::to_string(t) + "]";
    check_keys(terms[t], {"coeff", "factors"}, where);
    const Complex coeff = terms[t].contains("coeff") ? parse_coeff(terms[t]["coeff"], where + ".coeff")
                                                     : Complex(1.0, 0.0);
    const json& factors = require(terms[t], "factors", where);
    if (!factors.is_array() || factors.empty()) bad(where + ".factors", "expected a non-empty array");
    std::vector<FactorToken> parsed;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const std::string fw = where + ".factors[" + std::to_string(f) + "]";
      if (!factors[f].is_string()) bad(fw, "expected a string token");
      try {
        parsed.push_back(FactorToken::parse(factors[f].get<std::string>()));
      } catch (const Error& e) {
        fail(ErrorCode::kInvalidToken, fw + ": " + e.what());
      }
    }
    spec.add(coeff, std::move(parsed));
  }
  return spec;
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad("scenario", std::string("malformed JSON: ") + e.what());
  }
  check_keys(j, {"sector", "family", "extension", "options"}, "scenario");
  ScenarioFile out;
  out.sector = parse_sector(require(j, "sector", "scenario"));
  if (j.contains("family")) {
    if (!j["family"].is_string()) bad("family", "expected a string");
    try {
      if (parse_family(j["family"].get<std::string>()) != family_for(out.sector.kind)) {
        bad("family", "does not act on sector " + out.sector.to_string());
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidScenario) throw;
      bad("family", e.what());
    }
  }

  const json& ext = require(j, "extension", "scenario");
  check_keys(ext, {"type", "spec", "time", "matrix_file", "hermitize"}, "extension");
  const json& type = require(ext, "type", "extension");
  if (type == "hamiltonian") {
    out.kind = ExtensionKind::kHamiltonian;
  } else if (type == "gate") {
    out.kind = ExtensionKind::kGate;
  } else {
    bad("extension.type", "expected \"hamiltonian\" or \"gate\"");
  }
  if (ext.contains("spec")) out.spec = parse_spec(ext["spec"]);
  if (ext.contains("time")) out.time = as_real(ext["time"], "extension.time");
  if (ext.contains("matrix_file")) {
    if (!ext["matrix_file"].is_string()) bad("extension.matrix_file", "expected a path string");
    std::filesystem::path p = ext["matrix_file"].get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    out.matrix_file = p;
  }
  if (ext.contains("hermitize")) {
    if (!ext["hermitize"].is_boolean()) bad("extension.hermitize", "expected a boolean");
    out.hermitize = ext["hermitize"].get<bool>();
  }
  if (out.kind == ExtensionKind::kHamiltonian) {
    if (!out.spec) bad("extension", "hamiltonian extensions require 'spec'");
    if (out.matrix_file || out.time) bad("extension", "hamiltonian extensions take no 'matrix_file' or 'time'");
  } else {
    if (out.spec.has_value() == out.matrix_file.has_value()) {
      bad("extension", "gate extensions need exactly one of 'spec' or 'matrix_file'");
    }
    if (out.spec && !out.time) bad("extension", "gate given by 'spec' needs 'time'");
    if (out.matrix_file && out.time) bad("extension", "'time' only applies to gates given by 'spec'");
  }

  if (j.contains("options")) {
    const json& o = j["options"];
    check_keys(o, {"oracle", "tolerance", "max_power", "max_rounds"}, "options");
    if (o.contains("oracle")) {
      if (!o["oracle"].is_boolean()) bad("options.oracle", "expected a boolean");
      out.options.oracle = o["oracle"].get<bool>();
    }
    if (o.contains("tolerance")) {
      out.options.tolerance = as_real(o["tolerance"], "options.tolerance");
      if (!(out.options.tolerance > 0.0)) bad("options.tolerance", "must be positive");
    }
    if (o.contains("max_power")) {
      out.options.max_power = as_int(o["max_power"], "options.max_power");
      if (out.options.max_power < 0) bad("options.max_power", "must be >= 0");
    }
    if (o.contains("max_rounds")) {
      out.options.max_rounds = as_int(o["max_rounds"], "options.max_rounds");
      if (out.options.max_rounds < 1) bad("options.max_rounds", "must be >= 1");
    }
  }
  return out;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad(path.string(), "cannot open scenario file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path.parent_path());
}

Scenario build_scenario(const ScenarioFile& file) {
  Scenario s;
  s.descriptor = file.sector;
  s.family = family_for(file.sector.kind);
  s.kind = file.kind;
  s.options = file.options;
  if (file.matrix_file) {
    ComplexMatrix m = read_matrix_file(*file.matrix_file);
    if (m.rows() != static_cast<Eigen::Index>(sector_dim(file.sector))) {
      bad("extension.matrix_file", "matrix dimension " + std::to_string(m.rows()) +
                                       " does not match sector " + file.sector.to_string());
    }
    s.extension = std::move(m);
    return s;
  }
  Operator h = build_operator(*file.spec, file.sector, file.hermitize);
  if (file.kind == ExtensionKind::kGate) {
    s.extension = matexp(Complex(0.0, -*file.time) * h.matrix);
  } else {
    s.extension = std::move(h.matrix);
  }
  return s;
}

namespace {

double parse_double(std::string_view text, const std::string& where) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) bad(where, "malformed number '" + std::string(text) + "'");
  return v;
}

}  // namespace

ComplexMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word) || word != "dim") bad("matrix file", "expected header 'dim n'");
  long n = 0;
  if (!(in >> n) || n < 1 || n > 100000) bad("matrix file", "invalid dimension");
  ComplexMatrix m(n, n);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      const std::string where = "matrix file entry (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) + ")";
      if (!(in >> word)) bad(where, "missing entry");
      const auto comma = word.find(',');
      if (comma == std::string::npos) bad(where, "expected 're,im'");
      m(r, c) = Complex(parse_double(std::string_view(word).substr(0, comma), where),
                        parse_double(std::string_view(word).substr(comma + 1), where));
    }
  }
  if (in >> word) bad("matrix file", "trailing data after " + std::to_string(n) + " rows");
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad(path.string(), "cannot open matrix file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix_text(ss.str());
}

std::string format_matrix_text(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "dim " << m.rows() << '\n' << std::setprecision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c).real() << ',' << m(r, c).imag();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace unikit::cli
