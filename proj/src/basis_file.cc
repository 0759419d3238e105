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

#include "umeb/basis_file.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include "json.hpp"
#include <variant>

namespace umeb {

namespace {

using nlohmann::json;

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string complex_text(Complex z) {
  return "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]";
}

// Matrix as a list of rows, one row per line at the given indent.
std::string matrix_text(const ComplexMatrix& m, const std::string& indent) {
  std::string out = "[\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += indent + "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += complex_text(m(r, c));
    }
    out += r + 1 < m.rows() ? "],\n" : "]\n";
  }
  return out + indent + "]";
}

std::string real_list(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_real(xs[i]);
  }
  return out + "]";
}

std::string order_list(const std::vector<OrderClass>& orders) {
  std::string out = "[";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0) out += ", ";
    out += json_string(to_string(orders[i]));
  }
  return out + "]";
}

std::string summary_text(const OrderSummary& s) {
  return "{\"finite\": " + std::to_string(s.finite) +
         ", \"infiniteByNiven\": " + std::to_string(s.infinite) +
         ", \"unresolved\": " + std::to_string(s.unresolved) +
         ", \"maxFiniteOrder\": " + std::to_string(s.max_finite_order) + "}";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError("matrix entry must be an [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string write_basis(const BasisSet& b) {
  std::string out = "{\n";
  out += "  \"formatVersion\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"dims\": [" + std::to_string(b.dim_a) + ", " +
         std::to_string(b.dim_b) + "],\n";
  out += "  \"claim\": " + json_string(to_string(b.claim)) + ",\n";
  out += "  \"provenance\": {\n";
  out += "    \"construction\": " + json_string(b.provenance.construction) + ",\n";
  out += "    \"params\": {";
  bool first = true;
  for (const auto& [key, value] : b.provenance.params) {
    out += (first ? "" : ", ") + json_string(key) + ": " + json_string(value);
    first = false;
  }
  out += "}\n  },\n";
  out += "  \"members\": [";
  for (std::size_t i = 0; i < b.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\n      \"label\": " + json_string(b.labels[i]) + ",\n";
    out += "      \"matrix\": " + matrix_text(b.members[i], "      ") + "\n";
    out += "    }";
  }
  out += b.size() > 0 ? "\n  ]\n}\n" : "]\n}\n";
  return out;
}

BasisSet parse_basis(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("basis file must be a JSON object");
    if (j.at("formatVersion").get<int>() != kFormatVersion) {
      throw ParseError("unsupported formatVersion " +
                       j.at("formatVersion").dump());
    }
    const json& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 2) {
      throw ParseError("dims must be [dimA, dimB]");
    }
    BasisSet b;
    b.dim_a = dims[0].get<int>();
    b.dim_b = dims[1].get<int>();
    if (b.dim_a <= 0 || b.dim_b <= 0) {
      throw ParseError("dims must be positive");
    }
    const auto claim = parse_claim(j.at("claim").get<std::string>());
    if (!claim) throw ParseError("unknown claim " + j.at("claim").dump());
    b.claim = *claim;
    const json& prov = j.at("provenance");
    b.provenance.construction = prov.at("construction").get<std::string>();
    for (const auto& [key, value] : prov.at("params").items()) {
      b.provenance.params[key] = value.get<std::string>();
    }
    for (const json& member : j.at("members")) {
      b.labels.push_back(member.at("label").get<std::string>());
      const json& rows = member.at("matrix");
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(b.dim_a)) {
        throw ParseError("member " + b.labels.back() + " does not have " +
                         std::to_string(b.dim_a) + " rows");
      }
      ComplexMatrix m(b.dim_a, b.dim_b);
      for (Eigen::Index r = 0; r < b.dim_a; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(b.dim_b)) {
          throw ParseError("member " + b.labels.back() + " row " +
                           std::to_string(r) + " does not have " +
                           std::to_string(b.dim_b) + " entries");
        }
        for (Eigen::Index c = 0; c < b.dim_b; ++c) {
          m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
        }
      }
      b.members.push_back(std::move(m));
    }
    return b;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid basis file: ") + e.what());
  }
}

std::string write_report(const CertificationReport& report,
                         const ReportContext& ctx) {
  const SearchConfig& s = ctx.search;
  std::string out = "{\n";
  out += "  \"formatVersion\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"input\": {\"sha256\": " + json_string(ctx.input_sha256) + "},\n";
  out += "  \"search\": {\"restarts\": " + std::to_string(s.restarts) +
         ", \"maxIterations\": " + std::to_string(s.max_iterations) +
         ", \"initialStep\": " + format_real(s.initial_step) +
         ", \"stepDecay\": " + format_real(s.step_decay) +
         ", \"seed\": " + std::to_string(s.seed) +
         ", \"evidenceMargin\": " + format_real(s.evidence_margin) +
         ", \"witnessTolerance\": " + format_real(s.witness_tolerance) + "},\n";
  out += "  \"orthonormality\": {\"pass\": " +
         bool_text(report.orthonormality.pass) + ", \"maxGramDeviation\": " +
         format_real(report.orthonormality.max_deviation) + "},\n";
  out += "  \"entanglement\": {\"pass\": " +
         bool_text(report.entanglement.pass) +
         ", \"maxSingularValueDeviation\": " +
         format_real(report.entanglement.max_deviation) + "},\n";
  out += "  \"complementDim\": " + std::to_string(report.complement_dim) + ",\n";
  out += "  \"unextendibility\": ";
  std::visit(
      [&out](const auto& u) {
        using T = std::decay_t<decltype(u)>;
        if constexpr (std::is_same_v<T, StructuralRankCertificate>) {
          out += "{\"kind\": \"StructuralRankCertificate\", \"maxRank\": " +
                 std::to_string(u.max_rank) + "}";
        } else if constexpr (std::is_same_v<T, NumericalEvidence>) {
          out += "{\"kind\": \"NumericalEvidence\", \"bestValue\": " +
                 format_real(u.best_value) +
                 ", \"restarts\": " + std::to_string(u.restarts) +
                 ", \"iterations\": " + std::to_string(u.iterations) +
                 ", \"seed\": " + std::to_string(u.seed) + "}";
        } else {
          out += "{\"kind\": \"NotApplicable\", \"reason\": " + json_string(u.reason) +
                 "}";
        }
      },
      report.unextendibility);
  out += ",\n  \"verdict\": " + json_string(to_string(report.verdict));
  if (report.witness) {
    out += ",\n  \"witness\": " + matrix_text(*report.witness, "  ");
  }
  return out + "\n}\n";
}

std::string write_spectra(const BasisSet& b, const SpectralProfile& pairs,
                          const std::vector<PhaseSpectrum>& members) {
  std::string out = "{\n";
  out += "  \"formatVersion\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"dims\": [" + std::to_string(b.dim_a) + ", " +
         std::to_string(b.dim_b) + "],\n";
  out += "  \"memberCount\": " + std::to_string(b.size()) + ",\n";
  out += "  \"summary\": " + summary_text(summarize(pairs)) + ",\n";
  out += "  \"members\": [";
  for (std::size_t i = 0; i < members.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"member\": " + std::to_string(i) +
           ", \"label\": " + json_string(b.labels[i]) +
           ", \"phases\": " + real_list(members[i].phases) +
           ", \"orders\": " + order_list(members[i].orders) + "}";
  }
  out += members.empty() ? "],\n" : "\n  ],\n";
  out += "  \"pairs\": [";
  for (std::size_t k = 0; k < pairs.pairs.size(); ++k) {
    const auto& p = pairs.pairs[k];
    out += k == 0 ? "\n" : ",\n";
    out += "    {\"i\": " + std::to_string(p.i) + ", \"j\": " +
           std::to_string(p.j) + ", \"phases\": " +
           real_list(p.spectrum.phases) +
           ", \"orders\": " + order_list(p.spectrum.orders) + "}";
  }
  out += pairs.pairs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string write_comparison(const InequivalenceReport& report,
                             const std::string& sha_a,
                             const std::string& sha_b) {
  std::string out = "{\n";
  out += "  \"formatVersion\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"inputs\": [" + json_string(sha_a) + ", " + json_string(sha_b) + "],\n";
  out += "  \"inequivalent\": " + bool_text(report.inequivalent) + ",\n";
  out += "  \"verdict\": " + json_string(report.verdict) + ",\n";
  out += "  \"summaryA\": " + summary_text(report.a) + ",\n";
  out += "  \"summaryB\": " + summary_text(report.b) + "\n}\n";
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace umeb
