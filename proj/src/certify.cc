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

#include "umeb/certify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "umeb/errors.h"

namespace umeb {

namespace {

constexpr double kColumnSupportThreshold = 1e-9;
constexpr int kPolishIterations = 500;
constexpr int kRefineIterations = 100;

struct MinimalTriple {
  double sigma = 0.0;
  ComplexVector u;
  ComplexVector v;
};

ComplexMatrix combine(const MatrixSubspace& comp, const ComplexVector& c) {
  ComplexMatrix x = ComplexMatrix::Zero(comp.rows, comp.cols);
  for (std::size_t j = 0; j < comp.dim(); ++j) {
    x += c(static_cast<Eigen::Index>(j)) * comp.basis[j];
  }
  return x;
}

ComplexVector coefficients(const MatrixSubspace& comp, const ComplexMatrix& x) {
  ComplexVector c(static_cast<Eigen::Index>(comp.dim()));
  for (std::size_t j = 0; j < comp.dim(); ++j) {
    c(static_cast<Eigen::Index>(j)) = hs_inner(comp.basis[j], x);
  }
  return c;
}

// Smallest of the dimA singular values with its vectors. Ties go to the
// lowest SVD index (a subgradient choice).
MinimalTriple minimal_triple(const ComplexMatrix& x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  const Eigen::Index last = s.size() - 1;
  Eigen::Index k = last;
  while (k > 0 && s(k - 1) <= s(last) + 1e-14) --k;
  return {s(k), svd.matrixU().col(k), svd.matrixV().col(k)};
}

struct RestartResult {
  double value = -1.0;
  ComplexVector coeffs;
  long long iterations = 0;
};

RestartResult ascend(const MatrixSubspace& comp, const SearchConfig& cfg,
                     std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(comp.dim());
  const double root_d = std::sqrt(static_cast<double>(comp.rows));
  std::normal_distribution<double> gauss;
  ComplexVector c(n);
  for (Eigen::Index j = 0; j < n; ++j) c(j) = Complex(gauss(rng), gauss(rng));
  c.normalize();

  RestartResult best{-1.0, c, 0};
  double step = cfg.initial_step;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    ++best.iterations;
    const MinimalTriple t = minimal_triple(combine(comp, c));
    const double f = root_d * t.sigma;
    if (f > best.value) {
      best.value = f;
      best.coeffs = c;
    }
    if (f >= 1.0 - 1e-13) break;
    ComplexVector g(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      g(j) = root_d * std::conj(t.u.dot(comp.basis[static_cast<std::size_t>(j)] * t.v));
    }
    // Tangent component on the sphere.
    g -= c.dot(g).real() * c;
    const double gnorm = g.norm();
    if (gnorm < 1e-14) break;
    c += (step / gnorm) * g;
    c.normalize();
    step *= cfg.step_decay;
  }
  return best;
}

// Alternating projections between the complement and the scaled
// singular-value-1 matrices, starting from coeffs. The distance between the
// two sets shrinks every step but sigma_min need not, so keep the best iterate.
RestartResult polish(const MatrixSubspace& comp, RestartResult start) {
  const double root_d = std::sqrt(static_cast<double>(comp.rows));
  ComplexVector c = start.coeffs;
  for (int it = 0; it < kPolishIterations; ++it) {
    if (start.value >= 1.0 - 1e-13) break;
    const ComplexMatrix x = combine(comp, c);
    Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const ComplexMatrix nearest =
        svd.matrixU() * svd.matrixV().adjoint() / root_d;
    ComplexVector next = coefficients(comp, nearest);
    const double norm = next.norm();
    if (norm < 1e-14) break;
    next /= norm;
    ++start.iterations;
    const double f = entanglement_objective(comp, next);
    if (f > start.value) {
      start.value = f;
      start.coeffs = next;
    }
    const double moved = (next - c).norm();
    c = std::move(next);
    if (moved < 1e-15) break;
  }
  return start;
}

// Levenberg-Marquardt on X X^dagger = I / dimA over the real and imaginary
// parts of the coefficients. Alternating projections crawl when the
// complement touches the maximally entangled set tangentially; this does not.
RestartResult refine(const MatrixSubspace& comp, RestartResult start) {
  const Eigen::Index d = comp.rows;
  const auto n = static_cast<Eigen::Index>(comp.dim());
  const ComplexMatrix target = ComplexMatrix::Identity(d, d) / static_cast<double>(d);

  auto residual = [&](const ComplexVector& c) {
    const ComplexMatrix x = combine(comp, c);
    const ComplexMatrix g = x * x.adjoint() - target;
    Eigen::VectorXd r(2 * d * d);
    for (Eigen::Index k = 0; k < d * d; ++k) {
      r(2 * k) = g(k).real();
      r(2 * k + 1) = g(k).imag();
    }
    return r;
  };

  ComplexVector c = start.coeffs;
  Eigen::VectorXd r = residual(c);
  double lambda = 1e-3;
  for (int it = 0; it < kRefineIterations && r.norm() > 1e-15; ++it) {
    ++start.iterations;
    const ComplexMatrix x = combine(comp, c);
    Eigen::MatrixXd jac(2 * d * d, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const ComplexMatrix& b = comp.basis[static_cast<std::size_t>(j)];
      const ComplexMatrix re = b * x.adjoint() + x * b.adjoint();
      const ComplexMatrix im = Complex(0.0, 1.0) * (b * x.adjoint() - x * b.adjoint());
      for (Eigen::Index k = 0; k < d * d; ++k) {
        jac(2 * k, 2 * j) = re(k).real();
        jac(2 * k + 1, 2 * j) = re(k).imag();
        jac(2 * k, 2 * j + 1) = im(k).real();
        jac(2 * k + 1, 2 * j + 1) = im(k).imag();
      }
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 20 && !improved; ++tries) {
      Eigen::MatrixXd lhs = jtj;
      lhs.diagonal().array() += lambda;
      const Eigen::VectorXd step = lhs.ldlt().solve(-jtr);
      ComplexVector next = c;
      for (Eigen::Index j = 0; j < n; ++j) {
        next(j) += Complex(step(2 * j), step(2 * j + 1));
      }
      const Eigen::VectorXd rn = residual(next);
      if (rn.norm() < r.norm()) {
        c = std::move(next);
        r = rn;
        lambda = std::max(lambda / 10.0, 1e-12);
        improved = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) break;
    const double norm = c.norm();
    if (norm < 1e-14) break;
    const double f = entanglement_objective(comp, c / norm);
    if (f > start.value) {
      start.value = f;
      start.coeffs = c / norm;
    }
  }
  return start;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedUMEB: return "certifiedUMEB";
    case Verdict::kEvidenceUMEB: return "evidenceUMEB";
    case Verdict::kExtendible: return "extendible";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kFailedBasicChecks: return "failedBasicChecks";
    case Verdict::kCompleteBasis: return "completeBasis";
  }
  return "inconclusive";
}

void validate(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw DomainError("search needs at least one restart");
  if (cfg.max_iterations < 1) {
    throw DomainError("search needs at least one iteration");
  }
  if (!(cfg.evidence_margin > 0.0)) {
    throw DomainError("evidence margin must be positive");
  }
  if (!(cfg.witness_tolerance > 0.0)) {
    throw DomainError("witness tolerance must be positive");
  }
}

CheckResult check_orthonormal(const BasisSet& b, double tol) {
  const double dev = gram_deviation(b.members);
  return {dev <= tol, dev};
}

CheckResult check_max_entangled(const BasisSet& b, double tol) {
  if (b.dim_a > b.dim_b) {
    throw DomainError("maximal entanglement check needs dimA <= dimB, got " +
                      std::to_string(b.dim_a) + "x" + std::to_string(b.dim_b));
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(b.dim_a));
  double worst = 0.0;
  for (const auto& m : b.members) {
    const RealVector s = singular_values(m);
    worst = std::max(worst, (s.array() - target).abs().maxCoeff());
  }
  return {worst <= tol, worst};
}

std::optional<StructuralRankCertificate> structural_certificate(
    const MatrixSubspace& comp, Eigen::Index dim_a) {
  int support = 0;
  for (Eigen::Index l = 0; l < comp.cols; ++l) {
    const bool used = std::any_of(
        comp.basis.begin(), comp.basis.end(), [l](const ComplexMatrix& m) {
          return m.col(l).cwiseAbs().maxCoeff() > kColumnSupportThreshold;
        });
    if (used) ++support;
  }
  if (support < dim_a) return StructuralRankCertificate{support};
  return std::nullopt;
}

double entanglement_objective(const MatrixSubspace& comp,
                              const ComplexVector& coeffs) {
  const RealVector s = singular_values(combine(comp, coeffs));
  return std::sqrt(static_cast<double>(comp.rows)) * s(s.size() - 1);
}

NumericOutcome numeric_unextendibility(const MatrixSubspace& comp,
                                       const SearchConfig& cfg) {
  validate(cfg);
  if (comp.dim() == 0) {
    throw DomainError(
        "candidate is a complete basis; unextendibility needs fewer than dd' "
        "members");
  }
  if (comp.rows > comp.cols) {
    throw DomainError("numeric search needs dimA <= dimB");
  }

  RestartResult best;
  long long iterations = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    RestartResult res = ascend(comp, cfg, rng);
    iterations += res.iterations;
    if (res.value > best.value) best = std::move(res);
  }
  const long long before_polish = best.iterations;
  best = refine(comp, polish(comp, std::move(best)));
  iterations += best.iterations - before_polish;

  NumericOutcome out;
  out.evidence = {std::clamp(best.value, 0.0, 1.0), cfg.restarts, iterations,
                  cfg.seed};
  if (best.value >= 1.0 - cfg.witness_tolerance) {
    ComplexMatrix w = combine(comp, best.coeffs);
    out.witness = w / hs_norm(w);
  }
  return out;
}

CertificationReport certify(const BasisSet& b, const SearchConfig& cfg) {
  CertificationReport report;
  report.orthonormality = check_orthonormal(b);
  if (b.dim_a <= b.dim_b) {
    report.entanglement = check_max_entangled(b);
  } else {
    report.entanglement = {false, std::numeric_limits<double>::infinity()};
  }
  if (!report.orthonormality.pass || !report.entanglement.pass) {
    report.verdict = Verdict::kFailedBasicChecks;
    return report;
  }

  const MatrixSubspace comp = complement(span_of(b));
  report.complement_dim = comp.dim();
  if (comp.dim() == 0) {
    report.unextendibility = NotApplicable{
        "candidate is a complete basis; unextendibility needs fewer than dd' "
        "members"};
    report.verdict = Verdict::kCompleteBasis;
    return report;
  }
  if (auto cert = structural_certificate(comp, b.dim_a)) {
    report.unextendibility = *cert;
    report.verdict = Verdict::kCertifiedUMEB;
    return report;
  }
  NumericOutcome numeric = numeric_unextendibility(comp, cfg);
  report.unextendibility = numeric.evidence;
  if (numeric.witness) {
    report.verdict = Verdict::kExtendible;
    report.witness = std::move(numeric.witness);
  } else if (numeric.evidence.best_value <= 1.0 - cfg.evidence_margin) {
    report.verdict = Verdict::kEvidenceUMEB;
  } else {
    report.verdict = Verdict::kInconclusive;
  }
  return report;
}

}  // namespace umeb
