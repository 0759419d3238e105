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

namespace umeb {

// Operands whose shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the admissible range of a construction.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An input set that does not satisfy what a construction assumes of it
// (orthonormality, unitarity, completeness).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input set whose member count contradicts its claimed kind.
class ClaimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace umeb
