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

#include <string>
#include <vector>

#include "umeb/bases.h"

namespace umeb {

struct OrderClass {
  enum class Kind { kFinite, kInfiniteByNiven, kUnresolved };
  Kind kind = Kind::kUnresolved;
  int order = 0;  // least n with e^{in theta} = 1, when finite
  // Recovered cos(theta) = numerator / denominator, when infinite.
  long long numerator = 0;
  long long denominator = 0;

  bool operator==(const OrderClass&) const = default;
};

std::string to_string(const OrderClass& c);

struct OrderLimits {
  int max_order = 1000;
  int max_denominator = 64;
  double tol = 1e-9;
};

/// Eigenphases in (-pi, pi] of one unitary, ascending, with their orders.
struct PhaseSpectrum {
  std::vector<double> phases;
  std::vector<OrderClass> orders;
};

struct PairSpectrum {
  int i = 0;
  int j = 0;
  PhaseSpectrum spectrum;
};

struct SpectralProfile {
  std::vector<PairSpectrum> pairs;  // ordered pairs, row-major in (i, j)
};

/// finite(n) for the least n <= max_order with |e^{in phase} - 1| <= tol;
/// otherwise infiniteByNiven when cos(phase) is within tol of a fraction p/q,
/// q <= max_denominator, outside {0, +-1/2, +-1} (a rational cosine of a
/// rational multiple of pi must lie in that set); otherwise unresolved.
OrderClass classify_order(double phase, const OrderLimits& limits = {});

/// Eigenphases of a unitary matrix, ascending in (-pi, pi].
PhaseSpectrum unitary_spectrum(const ComplexMatrix& u,
                               const OrderLimits& limits = {});

/// Spectra of (sqrt(d) A_i)(sqrt(d) A_j) for every ordered pair. Requires a
/// square set whose scaled members are unitary.
SpectralProfile pair_product_spectra(const BasisSet& b,
                                     const OrderLimits& limits = {});

/// Spectra of the scaled members sqrt(d) A_i themselves.
std::vector<PhaseSpectrum> member_spectra(const BasisSet& b,
                                          const OrderLimits& limits = {});

struct OrderSummary {
  std::size_t finite = 0;
  std::size_t infinite = 0;
  std::size_t unresolved = 0;
  int max_finite_order = 0;
};

OrderSummary summarize(const SpectralProfile& profile);

struct InequivalenceReport {
  bool inequivalent = false;
  std::string verdict;
  OrderSummary a;
  OrderSummary b;
};

/// Necessary spectral condition only: if exactly one of the sets has a pair
/// product with an infinite-order eigenvalue, they cannot be locally
/// equivalent. Otherwise "no obstruction found", which proves nothing.
InequivalenceReport inequivalence_witness(const BasisSet& a, const BasisSet& b,
                                          const OrderLimits& limits = {});

}  // namespace umeb
