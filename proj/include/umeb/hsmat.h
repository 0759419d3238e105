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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace umeb {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Projection residuals below this are treated as linear dependence.
inline constexpr double kRankTolerance = 1e-9;
/// Bound on |<A_i, A_j> - delta_ij| for a set to count as orthonormal.
inline constexpr double kOrthonormalTolerance = 1e-10;

/// Pure state of C^dimA (x) C^dimB. Amplitude of |k>|l'> sits at k * dimB + l.
struct StateVector {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
  ComplexVector amplitudes;
};

/// HS-orthonormal spanning list of a subspace of the rows x cols matrices.
struct MatrixSubspace {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<ComplexMatrix> basis;

  std::size_t dim() const { return basis.size(); }
  Eigen::Index ambient_dim() const { return rows * cols; }
};

/// Throws DimensionError on empty shape or non-finite entries.
void validate_matrix(const ComplexMatrix& a);

/// Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm(const ComplexMatrix& a);

/// Kronecker product; block (i, j) of the result is A(i, j) * B.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Entrywise product.
ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// min(rows, cols) singular values, descending.
RealVector singular_values(const ComplexMatrix& a);

/// Numerical rank of the coefficient matrix of psi.
int schmidt_number(const StateVector& psi, double tol = kRankTolerance);

ComplexMatrix state_to_matrix(const StateVector& psi);
StateVector matrix_to_state(const ComplexMatrix& a);
/// Same as matrix_to_state but checks a against the expected dimensions.
StateVector matrix_to_state(const ComplexMatrix& a, Eigen::Index dim_a,
                            Eigen::Index dim_b);
Complex state_inner(const StateVector& psi, const StateVector& phi);

/// Gram-Schmidt in HS geometry. Inputs whose residual after projection falls
/// below kRankTolerance are dropped. All inputs must be rows x cols.
MatrixSubspace orthonormalize(std::span<const ComplexMatrix> mats,
                              Eigen::Index rows, Eigen::Index cols);

/// Orthonormal basis of the HS-orthogonal complement of sub, grown from the
/// standard matrix units by largest-residual-first selection.
MatrixSubspace complement(const MatrixSubspace& sub);

/// Orthogonal projection of a onto sub.
ComplexMatrix project(const MatrixSubspace& sub, const ComplexMatrix& a);

/// Largest HS distance between a basis element of one subspace and its
/// projection onto the other, taken both ways. Zero iff the spans agree.
double projection_distance(const MatrixSubspace& a, const MatrixSubspace& b);

/// max |Tr(A_i^dagger A_j) - delta_ij| over the list.
double gram_deviation(std::span<const ComplexMatrix> mats);

/// ||scale * A * A^dagger - I|| in max-entry norm for square A.
double unitarity_deviation(const ComplexMatrix& a, double scale);

/// Cyclic shift with S(r, (r + 1) mod n) = 1.
ComplexMatrix cyclic_shift(Eigen::Index n);
/// n x n matrix with every row equal to (1, w^j, w^2j, ...), w = exp(2 pi i / n).
ComplexMatrix phase_rows(Eigen::Index n, Eigen::Index j);
/// exp(2 pi i * k / n).
Complex root_of_unity(Eigen::Index n, Eigen::Index k);

}  // namespace umeb
