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

#include <optional>

#include "umeb/bases.h"

namespace umeb {

/// Inputs of the block-scaling construction: an N-member unextendible set in
/// d (x) d, the block count q, and optionally the complete unitary basis used
/// for the off-diagonal blocks (weyl_ub(d) when absent).
struct ScaleParams {
  int q = 1;
  BasisSet base;
  std::optional<BasisSet> ub;
};

/// UMEB of qd (x) qd with (qd)^2 - q(d^2 - N) members: the off-diagonal block
/// family q^{-1/2} (S_q^k o T_q(j)) (x) u_i for k in [1, q), j in [0, q), then
/// the diagonal family q^{-1/2} (I_q o T_q(j)) (x) v_i for j in [0, q). With
/// q = 1 the base is returned unchanged.
BasisSet theorem1_scale(const ScaleParams& p);

/// 2p^2 + 2m member UMEB of 2p (x) 2p from a complete p (x) p unitary basis
/// and an m-member unextendible one: (+-U_i (+) U_i)/sqrt2 and the antidiagonal
/// blocks [[0, +-V_i], [V_i, 0]]/sqrt2.
BasisSet example1_double(const BasisSet& ub, const BasisSet& uub);

/// Maximally entangled basis of the first d' - i columns of d (x) d', padded
/// back to d'. Admissible: d < d' and either d' >= 2d with 1 <= i < d, or
/// d' = d + r with 1 <= i <= r.
BasisSet theorem2_truncate(int d, int d_prime, int i);

/// shift_phase_sv1b(d, d' - d) on columns [0, d' - d) together with an
/// unextendible d (x) d set on columns [d' - d, d'). Requires d' >= 2d.
BasisSet prop2_compose(int d, int d_prime, const BasisSet& uub);

/// (+-U_i (+) U_i)/sqrt2 for a complete p (x) p unitary basis: a unitary basis
/// of the equal-block diagonal subspace of 2p x 2p. Claim is kNone.
BasisSet prop1_equal_blocks(const BasisSet& ub);

}  // namespace umeb
