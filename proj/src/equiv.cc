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

#include "umeb/equiv.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "umeb/errors.h"

namespace umeb {

namespace {

constexpr double kUnitaryTolerance = 1e-9;

struct Fraction {
  long long p = 0;
  long long q = 1;
};

// Best rational approximation of x with denominator <= max_q, from the
// continued-fraction convergents and the last semiconvergent.
Fraction best_rational(double x, long long max_q) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int step = 0; step < 64; ++step) {
    const double fl = std::floor(r);
    const auto a = static_cast<long long>(fl);
    const long long q2 = a * q1 + q0;
    if (q2 > max_q) {
      const long long k = (max_q - q0) / q1;
      const Fraction semi{k * p1 + p0, k * q1 + q0};
      const Fraction conv{p1, q1};
      const double es = std::abs(x - static_cast<double>(semi.p) / semi.q);
      const double ec = std::abs(x - static_cast<double>(conv.p) / conv.q);
      return es < ec ? semi : conv;
    }
    const long long p2 = a * p1 + p0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = r - fl;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return {p1, q1};
}

void require_square_unitary(const BasisSet& b, const char* op) {
  if (!b.is_square()) {
    throw PreconditionError(std::string(op) + ": basis set is " +
                            std::to_string(b.dim_a) + "x" +
                            std::to_string(b.dim_b) + ", not square");
  }
  const auto d = static_cast<double>(b.dim_a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (unitarity_deviation(b.members[i], d) > kUnitaryTolerance) {
      throw PreconditionError(std::string(op) + ": member " + b.labels[i] +
                              " is not proportional to a unitary");
    }
  }
}

}  // namespace

std::string to_string(const OrderClass& c) {
  switch (c.kind) {
    case OrderClass::Kind::kFinite:
      return "finite(" + std::to_string(c.order) + ")";
    case OrderClass::Kind::kInfiniteByNiven:
      return "infiniteByNiven(" + std::to_string(c.numerator) + "/" +
             std::to_string(c.denominator) + ")";
    case OrderClass::Kind::kUnresolved:
      return "unresolved";
  }
  return "unresolved";
}

OrderClass classify_order(double phase, const OrderLimits& limits) {
  for (int n = 1; n <= limits.max_order; ++n) {
    const double np = n * phase;
    if (std::abs(Complex(std::cos(np) - 1.0, std::sin(np))) <= limits.tol) {
      return {OrderClass::Kind::kFinite, n, 0, 0};
    }
  }
  const double c = std::cos(phase);
  const Fraction f = best_rational(c, limits.max_denominator);
  if (std::abs(c - static_cast<double>(f.p) / static_cast<double>(f.q)) >
      limits.tol) {
    return {};
  }
  // Niven: the only rational values of cos(r pi), r rational.
  const bool niven_value = f.p == 0 || (std::abs(f.p) == 1 && f.q == 2) ||
                           (std::abs(f.p) == 1 && f.q == 1);
  if (niven_value) return {};
  return {OrderClass::Kind::kInfiniteByNiven, 0, f.p, f.q};
}

PhaseSpectrum unitary_spectrum(const ComplexMatrix& u,
                               const OrderLimits& limits) {
  if (u.rows() != u.cols() || unitarity_deviation(u, 1.0) > kUnitaryTolerance) {
    throw PreconditionError("unitary_spectrum: input is not a unitary matrix");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, false);
  PhaseSpectrum out;
  const ComplexVector& ev = solver.eigenvalues();
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    double phase = std::arg(ev(k));
    // -pi and pi are the same eigenvalue; keep the interval half-open.
    if (phase <= -std::numbers::pi + kUnitaryTolerance) phase = std::numbers::pi;
    out.phases.push_back(phase);
  }
  std::sort(out.phases.begin(), out.phases.end());
  for (const double phase : out.phases) {
    out.orders.push_back(classify_order(phase, limits));
  }
  return out;
}

SpectralProfile pair_product_spectra(const BasisSet& b,
                                     const OrderLimits& limits) {
  require_square_unitary(b, "pair_product_spectra");
  const double scale = static_cast<double>(b.dim_a);
  SpectralProfile profile;
  profile.pairs.reserve(b.size() * b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const ComplexMatrix product = scale * (b.members[i] * b.members[j]);
      profile.pairs.push_back({static_cast<int>(i), static_cast<int>(j),
                               unitary_spectrum(product, limits)});
    }
  }
  return profile;
}

std::vector<PhaseSpectrum> member_spectra(const BasisSet& b,
                                          const OrderLimits& limits) {
  require_square_unitary(b, "member_spectra");
  const double scale = std::sqrt(static_cast<double>(b.dim_a));
  std::vector<PhaseSpectrum> out;
  for (const auto& m : b.members) {
    out.push_back(unitary_spectrum(scale * m, limits));
  }
  return out;
}

OrderSummary summarize(const SpectralProfile& profile) {
  OrderSummary s;
  for (const auto& pair : profile.pairs) {
    for (const auto& c : pair.spectrum.orders) {
      switch (c.kind) {
        case OrderClass::Kind::kFinite:
          ++s.finite;
          s.max_finite_order = std::max(s.max_finite_order, c.order);
          break;
        case OrderClass::Kind::kInfiniteByNiven:
          ++s.infinite;
          break;
        case OrderClass::Kind::kUnresolved:
          ++s.unresolved;
          break;
      }
    }
  }
  return s;
}

InequivalenceReport inequivalence_witness(const BasisSet& a, const BasisSet& b,
                                          const OrderLimits& limits) {
  if (!a.is_square() || !b.is_square() || a.dim_a != b.dim_a ||
      a.size() != b.size()) {
    throw DomainError("compare needs two square sets of equal shape and size, "
                      "got " + std::to_string(a.size()) + " members " +
                      std::to_string(a.dim_a) + "x" + std::to_string(a.dim_b) +
                      " and " + std::to_string(b.size()) + " members " +
                      std::to_string(b.dim_a) + "x" + std::to_string(b.dim_b));
  }
  InequivalenceReport report;
  report.a = summarize(pair_product_spectra(a, limits));
  report.b = summarize(pair_product_spectra(b, limits));
  report.inequivalent = (report.a.infinite > 0) != (report.b.infinite > 0);
  report.verdict = report.inequivalent
                       ? "inequivalent (spectral order obstruction)"
                       : "no obstruction found";
  return report;
}

}  // namespace umeb
