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

#include "umeb/construct.h"

#include <cmath>
#include <string>

#include "umeb/errors.h"

namespace umeb {

namespace {

// Every member must be scaled-unitary and the family HS-orthonormal.
void require_unitary_family(const BasisSet& b, const std::string& what) {
  if (!b.is_square()) {
    throw DomainError(what + " must be square, got " + std::to_string(b.dim_a) +
                      "x" + std::to_string(b.dim_b));
  }
  const double gram = gram_deviation(b.members);
  if (gram > kOrthonormalTolerance) {
    throw PreconditionError(what + " is not HS-orthonormal (Gram deviation " +
                            std::to_string(gram) + ")");
  }
  const auto d = static_cast<double>(b.dim_a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (unitarity_deviation(b.members[i], d) > kOrthonormalTolerance) {
      throw PreconditionError(what + " member " + b.labels[i] +
                              " is not proportional to a unitary");
    }
  }
}

void require_complete(const BasisSet& b, const std::string& what) {
  const auto full = static_cast<std::size_t>(b.dim_a * b.dim_b);
  if (b.size() != full) {
    throw PreconditionError(what + " must be a complete basis of " +
                            std::to_string(full) + " members, found " +
                            std::to_string(b.size()));
  }
}

void require_incomplete(const BasisSet& b, const std::string& what) {
  const auto full = static_cast<std::size_t>(b.dim_a * b.dim_b);
  if (b.size() >= full) {
    throw ClaimError(what + " has " + std::to_string(b.size()) +
                     " members; an unextendible set needs fewer than " +
                     std::to_string(full));
  }
}

void append(BasisSet& out, ComplexMatrix m, std::string label) {
  out.members.push_back(std::move(m));
  out.labels.push_back(std::move(label));
}

// Members (U (+) U)/sqrt2 and (-U (+) U)/sqrt2 for each unitary-basis member.
void append_equal_blocks(BasisSet& out, const BasisSet& ub) {
  const Eigen::Index p = ub.dim_a;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    for (const double sign : {1.0, -1.0}) {
      ComplexMatrix m = ComplexMatrix::Zero(2 * p, 2 * p);
      m.topLeftCorner(p, p) = sign * s * ub.members[i];
      m.bottomRightCorner(p, p) = s * ub.members[i];
      append(out, std::move(m),
             std::string(sign > 0 ? "+" : "-") + "diag" + ub.labels[i]);
    }
  }
}

}  // namespace

BasisSet theorem1_scale(const ScaleParams& p) {
  if (p.q < 1) throw DomainError("theorem1: q must be at least 1");
  const BasisSet& base = p.base;
  require_unitary_family(base, "theorem1 base");
  require_incomplete(base, "theorem1 base");
  if (p.q == 1) return base;

  const int d = static_cast<int>(base.dim_a);
  const BasisSet ub = p.ub ? *p.ub : weyl_ub(d);
  if (ub.dim_a != d) {
    throw DomainError("theorem1: unitary basis is " + std::to_string(ub.dim_a) +
                      "x" + std::to_string(ub.dim_b) + ", base is " +
                      std::to_string(d) + "x" + std::to_string(d));
  }
  require_unitary_family(ub, "theorem1 unitary basis");
  require_complete(ub, "theorem1 unitary basis");

  const int q = p.q;
  const double s = 1.0 / std::sqrt(static_cast<double>(q));
  BasisSet out;
  out.dim_a = q * d;
  out.dim_b = q * d;
  out.claim = Claim::kUMEB;
  out.provenance = {"theorem1",
                    {{"q", std::to_string(q)},
                     {"d", std::to_string(d)},
                     {"n", std::to_string(base.size())},
                     {"base", base.provenance.construction},
                     {"ub", ub.provenance.construction}}};

  const ComplexMatrix shift = cyclic_shift(q);
  ComplexMatrix shift_power = ComplexMatrix::Identity(q, q);
  for (int k = 1; k < q; ++k) {
    shift_power = shift_power * shift;
    for (int j = 0; j < q; ++j) {
      const ComplexMatrix outer = s * hadamard(shift_power, phase_rows(q, j));
      for (std::size_t i = 0; i < ub.size(); ++i) {
        append(out, kron(outer, ub.members[i]),
               "U[" + std::to_string(k) + "," + std::to_string(j) + "]" +
                   ub.labels[i]);
      }
    }
  }
  const ComplexMatrix identity = ComplexMatrix::Identity(q, q);
  for (int j = 0; j < q; ++j) {
    const ComplexMatrix outer = s * hadamard(identity, phase_rows(q, j));
    for (std::size_t i = 0; i < base.size(); ++i) {
      append(out, kron(outer, base.members[i]),
             "V[" + std::to_string(j) + "]" + base.labels[i]);
    }
  }
  return out;
}

BasisSet example1_double(const BasisSet& ub, const BasisSet& uub) {
  if (ub.dim_a != uub.dim_a || ub.dim_b != uub.dim_b) {
    throw DomainError("example1: unitary basis is " + std::to_string(ub.dim_a) +
                      "x" + std::to_string(ub.dim_b) +
                      " but unextendible set is " + std::to_string(uub.dim_a) +
                      "x" + std::to_string(uub.dim_b));
  }
  require_unitary_family(ub, "example1 unitary basis");
  require_complete(ub, "example1 unitary basis");
  require_unitary_family(uub, "example1 unextendible set");
  require_incomplete(uub, "example1 unextendible set");

  const Eigen::Index p = ub.dim_a;
  const double s = 1.0 / std::sqrt(2.0);
  BasisSet out;
  out.dim_a = 2 * p;
  out.dim_b = 2 * p;
  out.claim = Claim::kUMEB;
  out.provenance = {"example1",
                    {{"p", std::to_string(p)},
                     {"m", std::to_string(uub.size())},
                     {"ub", ub.provenance.construction},
                     {"base", uub.provenance.construction}}};
  append_equal_blocks(out, ub);
  for (std::size_t i = 0; i < uub.size(); ++i) {
    for (const double sign : {1.0, -1.0}) {
      ComplexMatrix m = ComplexMatrix::Zero(2 * p, 2 * p);
      m.topRightCorner(p, p) = sign * s * uub.members[i];
      m.bottomLeftCorner(p, p) = s * uub.members[i];
      append(out, std::move(m),
             std::string(sign > 0 ? "+" : "-") + "anti" + uub.labels[i]);
    }
  }
  return out;
}

BasisSet theorem2_truncate(int d, int d_prime, int i) {
  if (d < 1 || d >= d_prime) {
    throw DomainError("theorem2 requires 1 <= d < d', got d = " +
                      std::to_string(d) + ", d' = " + std::to_string(d_prime));
  }
  if (d_prime >= 2 * d) {
    if (i < 1 || i >= d) {
      throw DomainError("theorem2 case (i) (d' >= 2d) requires 1 <= i < d = " +
                        std::to_string(d) + ", got i = " + std::to_string(i));
    }
  } else {
    const int r = d_prime - d;
    if (i < 1 || i > r) {
      throw DomainError("theorem2 case (ii) (d' = d + r, r = " +
                        std::to_string(r) + ") requires 1 <= i <= r, got i = " +
                        std::to_string(i));
    }
  }
  BasisSet out = pad_columns(shift_phase_sv1b(d, d_prime - i), d_prime);
  out.claim = Claim::kUMEB;
  out.provenance = {"theorem2",
                    {{"d", std::to_string(d)},
                     {"dprime", std::to_string(d_prime)},
                     {"i", std::to_string(i)}}};
  return out;
}

BasisSet prop2_compose(int d, int d_prime, const BasisSet& uub) {
  if (d < 1 || d_prime < 2 * d) {
    throw DomainError("prop2 requires d' >= 2d, got d = " +
                      std::to_string(d) + ", d' = " + std::to_string(d_prime));
  }
  if (uub.dim_a != d || uub.dim_b != d) {
    throw PreconditionError("prop2: unextendible set must be " +
                            std::to_string(d) + "x" + std::to_string(d) +
                            ", got " + std::to_string(uub.dim_a) + "x" +
                            std::to_string(uub.dim_b));
  }
  if (uub.size() >= static_cast<std::size_t>(d * d)) {
    throw PreconditionError("prop2: unextendible set has " +
                            std::to_string(uub.size()) +
                            " members; it must have fewer than " +
                            std::to_string(d * d));
  }
  const double gram = gram_deviation(uub.members);
  if (gram > kOrthonormalTolerance) {
    throw PreconditionError("prop2: unextendible set is not HS-orthonormal");
  }

  const BasisSet left = pad_columns(shift_phase_sv1b(d, d_prime - d), d_prime);
  const BasisSet right = embed_block(uub, 0, d_prime - d, d, d_prime);
  BasisSet out;
  out.dim_a = d;
  out.dim_b = d_prime;
  out.claim = Claim::kUMEB;
  out.provenance = {"prop2",
                    {{"d", std::to_string(d)},
                     {"dprime", std::to_string(d_prime)},
                     {"base", uub.provenance.construction}}};
  for (const BasisSet* part : {&left, &right}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      append(out, part->members[i], part->labels[i]);
    }
  }
  return out;
}

BasisSet prop1_equal_blocks(const BasisSet& ub) {
  require_unitary_family(ub, "prop1 unitary basis");
  require_complete(ub, "prop1 unitary basis");
  BasisSet out;
  out.dim_a = 2 * ub.dim_a;
  out.dim_b = 2 * ub.dim_b;
  out.claim = Claim::kNone;
  out.provenance = {"prop1",
                    {{"p", std::to_string(ub.dim_a)},
                     {"ub", ub.provenance.construction}}};
  append_equal_blocks(out, ub);
  return out;
}

}  // namespace umeb
