// Copyright 2026 The umeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umeb/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "umeb/basis_file.h"
#include "umeb/construct.h"
#include "umeb/errors.h"

namespace umeb::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BasisSet load_base(const std::string& name) {
  if (name == "bravyi33") return bravyi33();
  return parse_basis(read_file(name));
}

int require(const std::optional<int>& v, const char* flag,
            const std::string& method) {
  if (!v) throw DomainError(method + " needs " + flag);
  return *v;
}

BasisSet build(const ConstructOptions& o) {
  const std::string& m = o.method;
  if (m == "weyl") return weyl_ub(require(o.d, "--d", m));
  if (m == "sv1b") {
    return shift_phase_sv1b(require(o.d, "--d", m), require(o.dprime, "--dprime", m));
  }
  if (m == "bravyi33") return bravyi33();
  if (m == "theorem2") {
    return theorem2_truncate(require(o.d, "--d", m),
                             require(o.dprime, "--dprime", m),
                             require(o.i, "--i", m));
  }
  if (!o.base) throw DomainError(m + " needs --base");
  const BasisSet base = load_base(*o.base);
  if (m == "theorem1") {
    return theorem1_scale({require(o.q, "--q", m), base, std::nullopt});
  }
  if (m == "example1") {
    const int p = o.p.value_or(static_cast<int>(base.dim_a));
    if (p != base.dim_a) {
      throw DomainError("example1: --p " + std::to_string(p) +
                        " does not match the " + std::to_string(base.dim_a) +
                        "x" + std::to_string(base.dim_b) + " base");
    }
    return example1_double(weyl_ub(p), base);
  }
  if (m == "prop2") {
    return prop2_compose(require(o.d, "--d", m), require(o.dprime, "--dprime", m),
                         base);
  }
  throw DomainError("unknown construction method '" + m + "'");
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedUMEB:
    case Verdict::kEvidenceUMEB:
    case Verdict::kCompleteBasis:
      return kExitOk;
    case Verdict::kExtendible: return kExitExtendible;
    case Verdict::kInconclusive: return kExitInconclusive;
    case Verdict::kFailedBasicChecks: return kExitFailedChecks;
  }
  return kExitInconclusive;
}

// Runs body and maps library exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

int cmd_construct(const ConstructOptions& opts, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const BasisSet b = build(opts);
    validate(b);
    write_output(opts.out, write_basis(b), out);
    return kExitOk;
  });
}

int cmd_certify(const CertifyOptions& opts, std::ostream& out,
                std::ostream& err) {
  std::string text;
  BasisSet b;
  try {
    text = read_file(opts.in);
    b = parse_basis(text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return guarded(err, [&] {
    SearchConfig cfg;
    cfg.restarts = opts.restarts;
    cfg.seed = opts.seed;
    cfg.witness_tolerance = opts.tol;
    validate(cfg);
    const CertificationReport report = certify(b, cfg);
    write_output(opts.out, write_report(report, {sha256_hex(text), cfg}), out);
    return exit_code(report.verdict);
  });
}

int cmd_spectra(const std::string& in, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BasisSet b = parse_basis(read_file(in));
    if (!b.is_square()) {
      throw DomainError("spectra needs a square basis file, got " +
                        std::to_string(b.dim_a) + "x" + std::to_string(b.dim_b));
    }
    const SpectralProfile pairs = pair_product_spectra(b);
    write_output(out_path, write_spectra(b, pairs, member_spectra(b)), out);
    return kExitOk;
  });
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const std::string text_a = read_file(path_a);
    const std::string text_b = read_file(path_b);
    const InequivalenceReport report =
        inequivalence_witness(parse_basis(text_a), parse_basis(text_b));
    write_output(out_path,
                 write_comparison(report, sha256_hex(text_a), sha256_hex(text_b)),
                 out);
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct and certify unextendible maximally entangled bases"};
  app.require_subcommand(1);

  ConstructOptions c;
  auto* construct = app.add_subcommand("construct", "Build a basis set file");
  construct->add_option("method", c.method, "Construction method")
      ->required()
      ->check(CLI::IsMember({"weyl", "sv1b", "bravyi33", "theorem1", "example1",
                             "theorem2", "prop2"}));
  construct->add_option("--d", c.d, "Local dimension d");
  construct->add_option("--dprime", c.dprime, "Second local dimension d'");
  construct->add_option("--i", c.i, "Number of truncated columns");
  construct->add_option("--q", c.q, "Block count");
  construct->add_option("--p", c.p, "Half dimension for example1");
  construct->add_option("--base", c.base, "bravyi33 or a basis file path");
  construct->add_option("--out", c.out, "Output path (default stdout)");

  CertifyOptions cert;
  auto* certify_cmd = app.add_subcommand("certify", "Certify a basis set file");
  certify_cmd->add_option("input", cert.in, "Basis file")->required();
  certify_cmd->add_option("--restarts", cert.restarts, "Random restarts")
      ->check(CLI::PositiveNumber);
  certify_cmd->add_option("--seed", cert.seed, "Search seed");
  certify_cmd->add_option("--tol", cert.tol, "Extension witness tolerance")
      ->check(CLI::PositiveNumber);
  certify_cmd->add_option("--out", cert.out, "Output path (default stdout)");

  std::string spectra_in, spectra_out;
  auto* spectra = app.add_subcommand("spectra", "Pair-product spectra");
  spectra->add_option("input", spectra_in, "Square basis file")->required();
  spectra->add_option("--out", spectra_out, "Output path (default stdout)");

  std::string cmp_a, cmp_b, cmp_out;
  auto* compare = app.add_subcommand("compare", "Spectral inequivalence test");
  compare->add_option("first", cmp_a, "Basis file")->required();
  compare->add_option("second", cmp_b, "Basis file")->required();
  compare->add_option("--out", cmp_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (*construct) return cmd_construct(c, out, err);
  if (*certify_cmd) return cmd_certify(cert, out, err);
  if (*spectra) return cmd_spectra(spectra_in, spectra_out, out, err);
  return cmd_compare(cmp_a, cmp_b, cmp_out, out, err);
}

}  // namespace umeb::cli
