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
#include <iosfwd>
#include <optional>
#include <string>

namespace umeb::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitExtendible = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitParse = 64;
inline constexpr int kExitDomain = 65;

struct ConstructOptions {
  std::string method;  // weyl, sv1b, bravyi33, theorem1, example1, theorem2, prop2
  std::optional<int> d;
  std::optional<int> dprime;
  std::optional<int> i;
  std::optional<int> q;
  std::optional<int> p;
  std::optional<std::string> base;  // builtin name or basis file path
  std::string out;                  // empty: stdout
};

struct CertifyOptions {
  std::string in;
  int restarts = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out;
};

int cmd_construct(const ConstructOptions& opts, std::ostream& out,
                  std::ostream& err);
int cmd_certify(const CertifyOptions& opts, std::ostream& out,
                std::ostream& err);
int cmd_spectra(const std::string& in, const std::string& out_path,
                std::ostream& out, std::ostream& err);
int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& out_path, std::ostream& out,
                std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes to path via a temporary sibling and rename; empty path means out.
void write_output(const std::string& path, const std::string& text,
                  std::ostream& out);

}  // namespace umeb::cli
