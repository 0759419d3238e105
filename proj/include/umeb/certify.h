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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "umeb/bases.h"

namespace umeb {

struct CheckResult {
  bool pass = false;
  double max_deviation = 0.0;
};

// Every complement matrix is supported on max_rank < dimA columns, so none of
// them can have dimA nonzero singular values.
struct StructuralRankCertificate {
  int max_rank = 0;
};

struct NumericalEvidence {
  double best_value = 0.0;  // max of sqrt(dimA) * sigma_min over the unit sphere
  int restarts = 0;
  long long iterations = 0;
  std::uint64_t seed = 0;
};

struct NotApplicable {
  std::string reason;
};

using Unextendibility =
    std::variant<StructuralRankCertificate, NumericalEvidence, NotApplicable>;

enum class Verdict {
  kCertifiedUMEB,
  kEvidenceUMEB,
  kExtendible,
  kInconclusive,
  kFailedBasicChecks,
  kCompleteBasis,
};

std::string_view to_string(Verdict v);

struct SearchConfig {
  int restarts = 200;
  int max_iterations = 2000;
  double initial_step = 0.1;
  double step_decay = 0.995;
  std::uint64_t seed = 0;
  double evidence_margin = 1e-3;
  // bestValue >= 1 - witness_tolerance counts as an extension.
  double witness_tolerance = 1e-9;
};

/// Throws DomainError when restarts < 1 or evidence_margin <= 0.
void validate(const SearchConfig& cfg);

struct CertificationReport {
  CheckResult orthonormality;
  CheckResult entanglement;
  std::size_t complement_dim = 0;
  Unextendibility unextendibility = NotApplicable{"basic checks failed"};
  Verdict verdict = Verdict::kFailedBasicChecks;
  std::optional<ComplexMatrix> witness;
};

CheckResult check_orthonormal(const BasisSet& b,
                              double tol = kOrthonormalTolerance);

/// Largest |sigma - 1/sqrt(dimA)| over all members. Requires dimA <= dimB.
CheckResult check_max_entangled(const BasisSet& b,
                                double tol = kOrthonormalTolerance);

/// Column-support certificate: if the complement lives on fewer than dim_a
/// columns, no member of it is maximally entangled.
std::optional<StructuralRankCertificate> structural_certificate(
    const MatrixSubspace& comp, Eigen::Index dim_a);

/// sqrt(dimA) * sigma_min of sum_j c_j B_j for a unit coefficient vector c.
double entanglement_objective(const MatrixSubspace& comp,
                              const ComplexVector& coeffs);

struct NumericOutcome {
  NumericalEvidence evidence;
  std::optional<ComplexMatrix> witness;
};

/// Multi-start projected ascent of the entanglement objective over the unit
/// sphere of comp. A maximizer reaching 1 - witness_tolerance is returned as
/// a maximally entangled witness. Throws DomainError on an empty complement.
NumericOutcome numeric_unextendibility(const MatrixSubspace& comp,
                                       const SearchConfig& cfg);

CertificationReport certify(const BasisSet& b, const SearchConfig& cfg = {});

}  // namespace umeb
