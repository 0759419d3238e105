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

#include <stdexcept>
#include <string>
#include <string_view>

#include "umeb/bases.h"
#include "umeb/certify.h"
#include "umeb/equiv.h"

namespace umeb {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical JSON text. Reals use 17 significant digits with a lowercase
// exponent, negative zero is written as 0, non-finite values as null, and
// complex entries as [re, im] pairs.
std::string format_real(double x);

std::string write_basis(const BasisSet& b);
/// Throws ParseError on malformed JSON, a wrong format version, or matrices
/// that do not match the declared dims.
BasisSet parse_basis(std::string_view text);

struct ReportContext {
  std::string input_sha256;
  SearchConfig search;
};

std::string write_report(const CertificationReport& report,
                         const ReportContext& ctx);

std::string write_spectra(const BasisSet& b, const SpectralProfile& pairs,
                          const std::vector<PhaseSpectrum>& members);

std::string write_comparison(const InequivalenceReport& report,
                             const std::string& sha_a, const std::string& sha_b);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace umeb
