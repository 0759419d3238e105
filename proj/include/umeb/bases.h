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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umeb/hsmat.h"

namespace umeb {

// What a basis set claims to be. Complete kinds (MEB, UB, SV1B) have
// dimA * dimB members; unextendible kinds strictly fewer.
enum class Claim { kMEB, kUMEB, kUB, kUUB, kSV1B, kUSV1B, kNone };

std::string_view to_string(Claim claim);
std::optional<Claim> parse_claim(std::string_view text);
bool is_complete_claim(Claim claim);
bool is_unextendible_claim(Claim claim);

struct Provenance {
  std::string construction;
  std::map<std::string, std::string> params;

  bool operator==(const Provenance&) const = default;
};

/// Ordered, labeled family of unit-HS-norm dimA x dimB matrices. Member i is
/// the coefficient matrix of the state sum_kl A(k, l) |k>|l'>.
struct BasisSet {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
  std::vector<ComplexMatrix> members;
  std::vector<std::string> labels;
  Provenance provenance;
  Claim claim = Claim::kNone;

  std::size_t size() const { return members.size(); }
  bool is_square() const { return dim_a == dim_b; }
};

/// Checks shapes, finiteness, unit norms (to kOrthonormalTolerance), label
/// count and the member count implied by the claim. Throws DimensionError or
/// ClaimError.
void validate(const BasisSet& b);

/// Orthonormal basis of the span of the members.
MatrixSubspace span_of(const BasisSet& b);

/// d^2 members W[m,n] = d^{-1/2} sum_k xi^{mk} |k><(k+n) mod d|, xi = e^{2 pi i/d}.
BasisSet weyl_ub(int d);

/// d*m members A[n,j] = d^{-1/2} sum_{k<d} xi_d^{nk} |k><(k+j) mod m|; every
/// member has all singular values 1/sqrt(d). Requires 1 <= d <= m.
BasisSet shift_phase_sv1b(int d, int m);

/// Six-member UMEB of C^3 (x) C^3 built from the reflections
/// U_j = I - (1 - e^{i theta}) |psi_j><psi_j| with cos(theta) = -7/8 and
/// sin(theta) > 0. Member j is U_j^T / sqrt(3), the matrix of (I (x) U_j)|Phi+>.
BasisSet bravyi33();

/// Golden-ratio vectors psi_1..psi_6 used by bravyi33, in order.
std::vector<ComplexVector> bravyi_vectors();
/// The unitaries U_1..U_6 used by bravyi33 (unscaled).
std::vector<ComplexMatrix> bravyi_unitaries();

/// Zero-pads every member on the right to dimA x new_dim_b. Claim becomes kNone.
BasisSet pad_columns(const BasisSet& b, int new_dim_b);

/// Places every member at (row_offset, col_offset) inside a zero
/// ambient_rows x ambient_cols matrix. Claim becomes kNone.
BasisSet embed_block(const BasisSet& b, int row_offset, int col_offset,
                     int ambient_rows, int ambient_cols);

}  // namespace umeb
