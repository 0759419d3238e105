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

#include "umeb/bases.h"

#include <array>
#include <cmath>
#include <numbers>

#include "umeb/errors.h"

namespace umeb {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 7> kClaimNames{{
    {Claim::kMEB, "MEB"},
    {Claim::kUMEB, "UMEB"},
    {Claim::kUB, "UB"},
    {Claim::kUUB, "UUB"},
    {Claim::kSV1B, "SV1B"},
    {Claim::kUSV1B, "USV1B"},
    {Claim::kNone, "NONE"},
}};

std::string index_label(const char* prefix, int a, int b) {
  return std::string(prefix) + "[" + std::to_string(a) + "," +
         std::to_string(b) + "]";
}

}  // namespace

std::string_view to_string(Claim claim) {
  for (const auto& [c, name] : kClaimNames) {
    if (c == claim) return name;
  }
  return "NONE";
}

std::optional<Claim> parse_claim(std::string_view text) {
  for (const auto& [c, name] : kClaimNames) {
    if (name == text) return c;
  }
  return std::nullopt;
}

bool is_complete_claim(Claim claim) {
  return claim == Claim::kMEB || claim == Claim::kUB || claim == Claim::kSV1B;
}

bool is_unextendible_claim(Claim claim) {
  return claim == Claim::kUMEB || claim == Claim::kUUB ||
         claim == Claim::kUSV1B;
}

void validate(const BasisSet& b) {
  if (b.dim_a <= 0 || b.dim_b <= 0) {
    throw DimensionError("basis set dimensions must be positive");
  }
  if (b.labels.size() != b.members.size()) {
    throw DimensionError("basis set has " + std::to_string(b.labels.size()) +
                         " labels for " + std::to_string(b.members.size()) +
                         " members");
  }
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    const auto& m = b.members[i];
    if (m.rows() != b.dim_a || m.cols() != b.dim_b) {
      throw DimensionError("member " + b.labels[i] + " is not " +
                           std::to_string(b.dim_a) + "x" +
                           std::to_string(b.dim_b));
    }
    validate_matrix(m);
    if (std::abs(hs_norm(m) - 1.0) > kOrthonormalTolerance) {
      throw DimensionError("member " + b.labels[i] + " is not unit norm");
    }
  }
  const auto full = static_cast<std::size_t>(b.dim_a * b.dim_b);
  if (is_complete_claim(b.claim) && b.size() != full) {
    throw ClaimError(std::string(to_string(b.claim)) + " needs " +
                     std::to_string(full) + " members, found " +
                     std::to_string(b.size()));
  }
  if (is_unextendible_claim(b.claim) && b.size() >= full) {
    throw ClaimError(std::string(to_string(b.claim)) +
                     " needs fewer than dd' = " + std::to_string(full) +
                     " members, found " + std::to_string(b.size()));
  }
}

MatrixSubspace span_of(const BasisSet& b) {
  return orthonormalize(b.members, b.dim_a, b.dim_b);
}

BasisSet shift_phase_sv1b(int d, int m) {
  if (d < 1) throw DomainError("shift_phase_sv1b: d must be at least 1");
  if (d > m) {
    throw DomainError("shift_phase_sv1b: d = " + std::to_string(d) +
                      " exceeds m = " + std::to_string(m) +
                      "; maximal entanglement needs d <= m");
  }
  BasisSet out;
  out.dim_a = d;
  out.dim_b = m;
  out.claim = Claim::kSV1B;
  out.provenance = {"sv1b", {{"d", std::to_string(d)}, {"m", std::to_string(m)}}};
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int n = 0; n < d; ++n) {
    for (int j = 0; j < m; ++j) {
      ComplexMatrix a = ComplexMatrix::Zero(d, m);
      for (int k = 0; k < d; ++k) {
        a(k, (k + j) % m) = scale * root_of_unity(d, n * k);
      }
      out.members.push_back(std::move(a));
      out.labels.push_back(index_label("A", n, j));
    }
  }
  return out;
}

BasisSet weyl_ub(int d) {
  if (d < 1) throw DomainError("weyl_ub: d must be at least 1");
  BasisSet out = shift_phase_sv1b(d, d);
  out.claim = Claim::kUB;
  out.provenance = {"weyl", {{"d", std::to_string(d)}}};
  for (auto& label : out.labels) label[0] = 'W';
  return out;
}

std::vector<ComplexVector> bravyi_vectors() {
  const double b = (1.0 + std::sqrt(5.0)) / 2.0;
  const double a = std::sqrt(1.0 + b * b);
  // (|p'> + s b |q'>) / a for (p, q) in (0,1), (1,2), (2,0) and s = +, -.
  constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {1, 2}, {2, 0}}};
  std::vector<ComplexVector> out;
  for (const auto& [p, q] : kPairs) {
    for (const double sign : {1.0, -1.0}) {
      ComplexVector v = ComplexVector::Zero(3);
      v(p) = 1.0 / a;
      v(q) = sign * b / a;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<ComplexMatrix> bravyi_unitaries() {
  const double cos_theta = -7.0 / 8.0;
  const Complex phase(cos_theta, std::sqrt(1.0 - cos_theta * cos_theta));
  std::vector<ComplexMatrix> out;
  for (const auto& psi : bravyi_vectors()) {
    out.push_back(ComplexMatrix::Identity(3, 3) -
                  (1.0 - phase) * psi * psi.adjoint());
  }
  return out;
}

BasisSet bravyi33() {
  BasisSet out;
  out.dim_a = 3;
  out.dim_b = 3;
  out.claim = Claim::kUMEB;
  out.provenance = {"bravyi33", {}};
  const double scale = 1.0 / std::sqrt(3.0);
  int j = 1;
  for (const auto& u : bravyi_unitaries()) {
    out.members.push_back(scale * u.transpose());
    out.labels.push_back("u" + std::to_string(j++));
  }
  return out;
}

BasisSet pad_columns(const BasisSet& b, int new_dim_b) {
  if (new_dim_b < b.dim_b) {
    throw DomainError("pad_columns: cannot shrink " + std::to_string(b.dim_b) +
                      " columns to " + std::to_string(new_dim_b));
  }
  BasisSet out = embed_block(b, 0, 0, static_cast<int>(b.dim_a), new_dim_b);
  out.provenance = {"pad",
                    {{"base", b.provenance.construction},
                     {"cols", std::to_string(new_dim_b)}}};
  return out;
}

BasisSet embed_block(const BasisSet& b, int row_offset, int col_offset,
                     int ambient_rows, int ambient_cols) {
  if (row_offset < 0 || col_offset < 0 ||
      row_offset + b.dim_a > ambient_rows ||
      col_offset + b.dim_b > ambient_cols) {
    throw DomainError("embed_block: " + std::to_string(b.dim_a) + "x" +
                      std::to_string(b.dim_b) + " block at (" +
                      std::to_string(row_offset) + "," +
                      std::to_string(col_offset) + ") overflows " +
                      std::to_string(ambient_rows) + "x" +
                      std::to_string(ambient_cols));
  }
  BasisSet out;
  out.dim_a = ambient_rows;
  out.dim_b = ambient_cols;
  out.labels = b.labels;
  out.claim = Claim::kNone;
  out.provenance = {"embed",
                    {{"base", b.provenance.construction},
                     {"row_offset", std::to_string(row_offset)},
                     {"col_offset", std::to_string(col_offset)},
                     {"rows", std::to_string(ambient_rows)},
                     {"cols", std::to_string(ambient_cols)}}};
  for (const auto& m : b.members) {
    ComplexMatrix e = ComplexMatrix::Zero(ambient_rows, ambient_cols);
    e.block(row_offset, col_offset, b.dim_a, b.dim_b) = m;
    out.members.push_back(std::move(e));
  }
  return out;
}

}  // namespace umeb
