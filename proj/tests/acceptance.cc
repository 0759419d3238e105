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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
//
//   acceptance <path to umeb binary> <output directory>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "test_util.h"
#include "umeb/basis_file.h"
#include "umeb/certify.h"
#include "umeb/construct.h"
#include "umeb/equiv.h"

namespace fs = std::filesystem;
using namespace umeb;

namespace {

struct Context {
  std::string cli;
  fs::path dir;
};

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed requirement; keeps the first few messages.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime limit
  std::function<Outcome(const Context&)> run;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void save(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

int invoke(const Context& ctx, const std::string& args) {
  const std::string cmd = shell_quote(ctx.cli) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double flatness(const BasisSet& b) {
  const double target = 1.0 / std::sqrt(static_cast<double>(b.dim_a));
  double worst = 0.0;
  for (const auto& m : b.members) {
    worst = std::max(worst, (singular_values(m).array() - target).abs().maxCoeff());
  }
  return worst;
}

std::string verdict_of(const CertificationReport& r) {
  return std::string(to_string(r.verdict));
}

Outcome small_truncation(const Context& ctx) {
  Outcome o;
  const std::string basis = (ctx.dir / "c1_theorem2_2_3_1.json").string();
  const std::string report = (ctx.dir / "c1_report.json").string();
  const int c1 = invoke(ctx, "construct theorem2 --d 2 --dprime 3 --i 1 --out " +
                                 shell_quote(basis));
  o.require(c1 == 0, "construct exit " + std::to_string(c1));
  const int c2 = invoke(ctx, "certify " + shell_quote(basis) + " --out " + shell_quote(report));
  o.require(c2 == 0, "certify exit " + std::to_string(c2));
  if (c1 != 0 || c2 != 0) return o;

  const BasisSet b = parse_basis(slurp(basis));
  o.require(b.size() == 4, "members " + std::to_string(b.size()));
  const double gram = gram_deviation(b.members);
  const double flat = flatness(b);
  o.require(gram < 1e-12, "Gram deviation " + num(gram));
  o.require(flat < 1e-12, "singular value deviation " + num(flat));

  const std::string rep = slurp(report);
  o.require(rep.find("\"verdict\": \"certifiedUMEB\"") != std::string::npos,
            "verdict is not certifiedUMEB");
  const auto cert = structural_certificate(complement(span_of(b)), b.dim_a);
  o.require(cert && cert->max_rank <= 1, "no rank <= 1 certificate");
  if (o.pass) {
    o.detail = "4 members, certifiedUMEB maxRank " + std::to_string(cert->max_rank) +
               ", Gram " + num(gram) + ", sv " + num(flat);
  }
  return o;
}

Outcome bravyi(const Context& ctx) {
  Outcome o;
  const BasisSet b = bravyi33();
  save(ctx.dir / "c2_bravyi33.json", write_basis(b));
  o.require(b.size() == 6, "members " + std::to_string(b.size()));
  const double gram = gram_deviation(b.members);
  o.require(gram < 1e-12, "Gram deviation " + num(gram));
  double unit = 0.0;
  for (const auto& m : b.members) unit = std::max(unit, unitarity_deviation(m, 3.0));
  o.require(unit < 1e-12, "unitarity deviation " + num(unit));

  const auto psi = bravyi_vectors();
  double overlap = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    for (std::size_t k = 0; k < psi.size(); ++k) {
      if (j == k) continue;
      overlap = std::max(overlap, std::abs(std::norm(psi[j].dot(psi[k])) - 0.2));
    }
  }
  o.require(overlap < 1e-12, "overlap deviation from 1/5 " + num(overlap));

  const SearchConfig cfg;
  const CertificationReport r = certify(b, cfg);
  save(ctx.dir / "c2_report.json", write_report(r, {sha256_hex(write_basis(b)), cfg}));
  o.require(r.verdict == Verdict::kEvidenceUMEB, "verdict " + verdict_of(r));
  const auto* ev = std::get_if<NumericalEvidence>(&r.unextendibility);
  o.require(ev && ev->restarts == 200, "no 200-restart numerical evidence");
  if (ev) o.require(ev->best_value < 0.999, "bestValue " + num(ev->best_value));
  if (o.pass) o.detail = "6 members, evidenceUMEB bestValue " + num(ev->best_value);
  return o;
}

Outcome theorem1(const Context& ctx) {
  Outcome o;
  const BasisSet base = bravyi33();
  const BasisSet same = theorem1_scale({1, base, std::nullopt});
  bool identical = same.size() == base.size();
  for (std::size_t i = 0; identical && i < base.size(); ++i) {
    identical = same.members[i] == base.members[i];
  }
  o.require(identical, "q=1 does not return the input");

  struct Want {
    int q;
    std::size_t members;
    int dim;
    std::size_t comp;
  };
  for (const Want w : {Want{2, 30, 6, 6}, Want{4, 132, 12, 12}}) {
    const BasisSet b = theorem1_scale({w.q, base, std::nullopt});
    save(ctx.dir / ("c3_theorem1_q" + std::to_string(w.q) + ".json"), write_basis(b));
    const std::string tag = "q=" + std::to_string(w.q) + " ";
    o.require(b.size() == w.members, tag + "members " + std::to_string(b.size()));
    o.require(b.dim_a == w.dim && b.dim_b == w.dim, tag + "wrong dims");
    const CheckResult orth = check_orthonormal(b, 1e-10);
    const CheckResult ent = check_max_entangled(b, 1e-10);
    o.require(orth.pass, tag + "Gram deviation " + num(orth.max_deviation));
    o.require(ent.pass, tag + "singular value deviation " + num(ent.max_deviation));
    const std::size_t comp = complement(span_of(b)).dim();
    o.require(comp == w.comp, tag + "complement dim " + std::to_string(comp));
  }
  if (o.pass) o.detail = "q=2: 30 in 6x6 (complement 6), q=4: 132 in 12x12 (complement 12), q=1 identity";
  return o;
}

Outcome example1(const Context& ctx) {
  Outcome o;
  const BasisSet b = example1_double(weyl_ub(3), bravyi33());
  save(ctx.dir / "c4_example1.json", write_basis(b));
  o.require(b.size() == 30, "members " + std::to_string(b.size()));
  o.require(b.dim_a == 6 && b.dim_b == 6, "wrong dims");
  const double gram = gram_deviation(b.members);
  o.require(gram < 1e-10, "Gram deviation " + num(gram));
  const std::size_t formula = 2 * 3 * 3 + 2 * bravyi33().size();
  const std::size_t t1 = theorem1_scale({2, bravyi33(), std::nullopt}).size();
  o.require(b.size() == formula && formula == t1,
            "counts disagree: " + std::to_string(b.size()) + " vs 2p^2+2m " +
                std::to_string(formula) + " vs q=2 scaling " + std::to_string(t1));
  if (o.pass) o.detail = "30 members, Gram " + num(gram) + ", matches 2p^2+2m and q=2 scaling";
  return o;
}

Outcome theorem2_sweep(const Context& ctx) {
  Outcome o;
  std::ostringstream log;
  int cases = 0;
  for (int d = 2; d <= 8; ++d) {
    for (int dp = d + 1; dp <= 8; ++dp) {
      const int top = dp >= 2 * d ? d - 1 : dp - d;
      for (int i = 1; i <= top; ++i) {
        ++cases;
        const BasisSet b = theorem2_truncate(d, dp, i);
        const CertificationReport r = certify(b);
        const auto* cert = std::get_if<StructuralRankCertificate>(&r.unextendibility);
        const int rank = cert ? cert->max_rank : -1;
        log << d << " " << dp << " " << i << " " << b.size() << " " << verdict_of(r)
            << " " << rank << "\n";
        const std::string tag = "(" + std::to_string(d) + "," + std::to_string(dp) +
                                "," + std::to_string(i) + ") ";
        o.require(r.verdict == Verdict::kCertifiedUMEB, tag + verdict_of(r));
        o.require(rank == i && rank < d, tag + "maxRank " + std::to_string(rank));
        o.require(b.size() == static_cast<std::size_t>(d * (dp - i)),
                  tag + "members " + std::to_string(b.size()));
      }
    }
  }
  save(ctx.dir / "c5_theorem2_sweep.txt", log.str());
  if (o.pass) o.detail = std::to_string(cases) + " admissible (d, d', i) certified with maxRank = i";
  return o;
}

Outcome prop2(const Context& ctx) {
  Outcome o;
  const BasisSet b = prop2_compose(3, 6, bravyi33());
  save(ctx.dir / "c6_prop2.json", write_basis(b));
  o.require(b.size() == 15, "members " + std::to_string(b.size()));
  const CheckResult orth = check_orthonormal(b, 1e-10);
  const CheckResult ent = check_max_entangled(b, 1e-10);
  o.require(orth.pass, "Gram deviation " + num(orth.max_deviation));
  o.require(ent.pass, "singular value deviation " + num(ent.max_deviation));
  const MatrixSubspace comp = complement(span_of(b));
  o.require(comp.dim() == 3, "complement dim " + std::to_string(comp.dim()));
  const SearchConfig cfg;
  const NumericOutcome n = numeric_unextendibility(comp, cfg);
  save(ctx.dir / "c6_report.json",
       write_report(certify(b, cfg), {sha256_hex(write_basis(b)), cfg}));
  o.require(n.evidence.best_value < 0.999, "bestValue " + num(n.evidence.best_value));
  if (o.pass) o.detail = "15 members, complement 3, bestValue " + num(n.evidence.best_value);
  return o;
}

// W * {I, e^{ia} n.sigma, e^{ib} m.sigma} / sqrt2 with n perpendicular to m,
// each member given a random global phase.
BasisSet random_two_qubit_triple(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Eigen::Vector3d n(g(rng), g(rng), g(rng));
  n.normalize();
  Eigen::Vector3d m(g(rng), g(rng), g(rng));
  m -= m.dot(n) * n;
  m.normalize();

  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  auto dot = [&](const Eigen::Vector3d& v) { return v(0) * x + v(1) * y + v(2) * z; };

  const ComplexMatrix w = umeb::testing::random_unitary(rng, 2);
  BasisSet b;
  b.dim_a = 2;
  b.dim_b = 2;
  b.claim = Claim::kNone;
  b.provenance = {"random-triple", {{"seed", std::to_string(seed)}}};
  const std::vector<ComplexMatrix> core{ComplexMatrix::Identity(2, 2), dot(n), dot(m)};
  for (std::size_t k = 0; k < core.size(); ++k) {
    b.members.push_back(std::polar(1.0, angle(rng)) * w * core[k] / std::sqrt(2.0));
    b.labels.push_back("t" + std::to_string(k));
  }
  return b;
}

Outcome two_qubit(const Context& ctx) {
  Outcome o;
  std::string log;
  int hits = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const BasisSet b = random_two_qubit_triple(1000 + t);
    SearchConfig cfg;
    cfg.seed = t;
    const CertificationReport r = certify(b, cfg);
    log += write_report(r, {sha256_hex(write_basis(b)), cfg});
    const std::string tag = "triple " + std::to_string(t) + " ";
    if (r.verdict != Verdict::kExtendible || !r.witness) {
      o.require(false, tag + verdict_of(r));
      continue;
    }
    const ComplexMatrix& w = *r.witness;
    double ortho = 0.0;
    for (const auto& m : b.members) ortho = std::max(ortho, std::abs(hs_inner(m, w)));
    const double sv =
        (singular_values(w).array() - 1.0 / std::sqrt(2.0)).abs().maxCoeff();
    o.require(ortho < 1e-9, tag + "orthogonality residual " + num(ortho));
    o.require(sv < 1e-9, tag + "singular value deviation " + num(sv));
    hits += ortho < 1e-9 && sv < 1e-9;
  }
  save(ctx.dir / "c7_two_qubit_reports.txt", log);
  if (o.pass) o.detail = std::to_string(hits) + "/50 triples extendible with valid witness";
  return o;
}

Outcome spectral(const Context& ctx) {
  Outcome o;
  const BasisSet b = theorem1_scale({4, bravyi33(), std::nullopt});
  const SpectralProfile prof = pair_product_spectra(b);
  save(ctx.dir / "c8_spectra.json", write_spectra(b, prof, member_spectra(b)));

  std::vector<bool> is_v(b.size(), false);
  for (std::size_t k = 0; k < b.size(); ++k) is_v[k] = b.labels[k].rfind("V[", 0) == 0;

  std::size_t v_pairs = 0;
  std::size_t hit = 0;
  std::map<std::string, std::size_t> seen;
  for (const auto& pair : prof.pairs) {
    if (!is_v[static_cast<std::size_t>(pair.i)] || !is_v[static_cast<std::size_t>(pair.j)]) continue;
    ++v_pairs;
    bool found = false;
    for (const auto& ord : pair.spectrum.orders) {
      if (ord.kind == OrderClass::Kind::kInfiniteByNiven) {
        ++seen[to_string(ord)];
        const double c = static_cast<double>(ord.numerator) / static_cast<double>(ord.denominator);
        found = found || std::abs(c + 7.0 / 8.0) < 1e-9;
      }
    }
    hit += found;
  }
  o.require(v_pairs == 24 * 24, "V-family pairs " + std::to_string(v_pairs));
  std::string classes;
  for (const auto& [k, v] : seen) classes += (classes.empty() ? "" : ", ") + k + " x" + std::to_string(v);
  o.require(hit == v_pairs, std::to_string(hit) + "/" + std::to_string(v_pairs) +
                                " V-family pairs show cos = -7/8; infinite classes seen: " +
                                (classes.empty() ? "none" : classes));
  if (o.pass) o.detail = std::to_string(hit) + "/" + std::to_string(v_pairs) + " V-family pairs show cos = -7/8";
  return o;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    files[e.path().filename().string()] = slurp(e.path());
  }
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <umeb binary> <output directory>\n";
    return 64;
  }
  const fs::path root(argv[2]);
  fs::remove_all(root);
  const Context first{argv[1], root / "run1"};
  const Context second{argv[1], root / "run2"};
  fs::create_directories(first.dir);
  fs::create_directories(second.dir);

  const std::vector<Criterion> criteria{
      {1, "2x3 truncation via CLI", 1.0, small_truncation},
      {2, "Bravyi 3x3 set", 30.0, bravyi},
      {3, "block scaling counts and properties", 120.0, theorem1},
      {4, "direct-sum doubling cross-check", 0.0, example1},
      {5, "truncation sweep with structural certificates", 60.0, theorem2_sweep},
      {6, "3x6 composition", 0.0, prop2},
      {7, "two-qubit extendibility control", 0.0, two_qubit},
      {8, "spectral order obstruction (cos = -7/8)", 0.0, spectral},
  };

  auto timed = [](const Criterion& c, const Context& ctx, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; runtime " + num(seconds) + " s over the " + num(c.limit_seconds) + " s limit";
    }
    return o;
  };

  int failed = 0;
  for (const auto& c : criteria) {
    double seconds = 0.0;
    const Outcome o = timed(c, first, seconds);
    failed += !o.pass;
    std::string limit = c.limit_seconds > 0 ? ", limit " + num(c.limit_seconds) + " s" : "";
    std::printf("%s criterion %d: %s [%.2f s%s] %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds, limit.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }

  // Criterion 9: regenerate every output with the same seeds and compare bytes.
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    double seconds = 0.0;
    timed(c, second, seconds);
  }
  const auto a = snapshot(first.dir);
  const auto b = snapshot(second.dir);
  Outcome det;
  det.require(!a.empty(), "no output files");
  det.require(a.size() == b.size(), "file sets differ");
  for (const auto& [name, bytes] : a) {
    const auto it = b.find(name);
    det.require(it != b.end() && it->second == bytes, name + " differs");
  }
  if (det.pass) det.detail = std::to_string(a.size()) + " output files byte-identical across two runs";
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failed += !det.pass;
  std::printf("%s criterion 9: determinism [%.2f s] %s\n", det.pass ? "PASS" : "FAIL",
              seconds, det.detail.c_str());
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
