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

#include "umeb/hsmat.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "umeb/errors.h"

namespace umeb {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

// Subtracts the projection onto every basis element, in order.
void project_out(ComplexMatrix& r, const std::vector<ComplexMatrix>& basis) {
  for (const auto& q : basis) {
    r -= hs_inner(q, r) * q;
  }
}

}  // namespace

void validate_matrix(const ComplexMatrix& a) {
  if (a.rows() <= 0 || a.cols() <= 0) {
    throw DimensionError("matrix must have positive shape");
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DimensionError("matrix has a non-finite entry");
    }
  }
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  return (a.conjugate().cwiseProduct(b)).sum();
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hadamard");
  return a.cwiseProduct(b);
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

int schmidt_number(const StateVector& psi, double tol) {
  const RealVector s = singular_values(state_to_matrix(psi));
  return static_cast<int>((s.array() > tol).count());
}

ComplexMatrix state_to_matrix(const StateVector& psi) {
  if (psi.dim_a <= 0 || psi.dim_b <= 0 ||
      psi.amplitudes.size() != psi.dim_a * psi.dim_b) {
    throw DimensionError("state_to_matrix: amplitude count " +
                         std::to_string(psi.amplitudes.size()) +
                         " does not match " + std::to_string(psi.dim_a) + "x" +
                         std::to_string(psi.dim_b));
  }
  ComplexMatrix a(psi.dim_a, psi.dim_b);
  for (Eigen::Index k = 0; k < psi.dim_a; ++k) {
    for (Eigen::Index l = 0; l < psi.dim_b; ++l) {
      a(k, l) = psi.amplitudes(k * psi.dim_b + l);
    }
  }
  return a;
}

StateVector matrix_to_state(const ComplexMatrix& a) {
  StateVector psi{a.rows(), a.cols(), ComplexVector(a.size())};
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      psi.amplitudes(k * a.cols() + l) = a(k, l);
    }
  }
  return psi;
}

StateVector matrix_to_state(const ComplexMatrix& a, Eigen::Index dim_a,
                            Eigen::Index dim_b) {
  if (a.rows() != dim_a || a.cols() != dim_b) {
    throw DimensionError("matrix_to_state: matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected " +
                         std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
  return matrix_to_state(a);
}

Complex state_inner(const StateVector& psi, const StateVector& phi) {
  if (psi.amplitudes.size() != phi.amplitudes.size()) {
    throw DimensionError("state_inner: dimension mismatch");
  }
  return psi.amplitudes.dot(phi.amplitudes);
}

MatrixSubspace orthonormalize(std::span<const ComplexMatrix> mats,
                              Eigen::Index rows, Eigen::Index cols) {
  MatrixSubspace sub{rows, cols, {}};
  for (const auto& m : mats) {
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionError("orthonormalize: element shape differs from " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    }
    const double scale = hs_norm(m);
    if (scale <= kRankTolerance) continue;
    ComplexMatrix r = m / scale;
    // Two passes keep the basis orthonormal to machine precision.
    project_out(r, sub.basis);
    project_out(r, sub.basis);
    const double residual = hs_norm(r);
    if (residual <= kRankTolerance) continue;
    sub.basis.push_back(r / residual);
  }
  return sub;
}

MatrixSubspace complement(const MatrixSubspace& sub) {
  const Eigen::Index rows = sub.rows;
  const Eigen::Index cols = sub.cols;
  const Eigen::Index ambient = rows * cols;
  const auto wanted = static_cast<std::size_t>(ambient) - sub.dim();

  std::vector<ComplexMatrix> residuals;
  residuals.reserve(static_cast<std::size_t>(ambient));
  for (Eigen::Index k = 0; k < rows; ++k) {
    for (Eigen::Index l = 0; l < cols; ++l) {
      ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
      e(k, l) = 1.0;
      project_out(e, sub.basis);
      residuals.push_back(std::move(e));
    }
  }

  MatrixSubspace out{rows, cols, {}};
  std::vector<bool> used(residuals.size(), false);
  while (out.dim() < wanted) {
    std::size_t pivot = residuals.size();
    double best = kRankTolerance;
    for (std::size_t u = 0; u < residuals.size(); ++u) {
      if (used[u]) continue;
      const double n = hs_norm(residuals[u]);
      if (n > best) {
        best = n;
        pivot = u;
      }
    }
    if (pivot == residuals.size()) break;
    used[pivot] = true;
    ComplexMatrix q = residuals[pivot];
    project_out(q, sub.basis);
    project_out(q, out.basis);
    q /= hs_norm(q);
    for (std::size_t u = 0; u < residuals.size(); ++u) {
      if (!used[u]) residuals[u] -= hs_inner(q, residuals[u]) * q;
    }
    out.basis.push_back(std::move(q));
  }
  return out;
}

ComplexMatrix project(const MatrixSubspace& sub, const ComplexMatrix& a) {
  ComplexMatrix p = ComplexMatrix::Zero(sub.rows, sub.cols);
  for (const auto& q : sub.basis) p += hs_inner(q, a) * q;
  return p;
}

double projection_distance(const MatrixSubspace& a, const MatrixSubspace& b) {
  double worst = 0.0;
  for (const auto& q : a.basis) worst = std::max(worst, hs_norm(q - project(b, q)));
  for (const auto& q : b.basis) worst = std::max(worst, hs_norm(q - project(a, q)));
  return worst;
}

double gram_deviation(std::span<const ComplexMatrix> mats) {
  double worst = 0.0;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i; j < mats.size(); ++j) {
      const Complex g = hs_inner(mats[i], mats[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double unitarity_deviation(const ComplexMatrix& a, double scale) {
  if (a.rows() != a.cols()) {
    throw DimensionError("unitarity_deviation: matrix is not square");
  }
  const ComplexMatrix g = scale * a * a.adjoint() -
                          ComplexMatrix::Identity(a.rows(), a.cols());
  return g.cwiseAbs().maxCoeff();
}

ComplexMatrix cyclic_shift(Eigen::Index n) {
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) s(r, (r + 1) % n) = 1.0;
  return s;
}

ComplexMatrix phase_rows(Eigen::Index n, Eigen::Index j) {
  ComplexMatrix t(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Complex w = root_of_unity(n, j * c);
    for (Eigen::Index r = 0; r < n; ++r) t(r, c) = w;
  }
  return t;
}

Complex root_of_unity(Eigen::Index n, Eigen::Index k) {
  const Eigen::Index m = ((k % n) + n) % n;
  // Quarter turns are returned exactly so the generated members carry exact
  // zeros where the phase is real or imaginary.
  if ((4 * m) % n == 0) {
    switch ((4 * m) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

}  // namespace umeb
