/*
   Copyright 2026 The qsl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsl/dynamics.hpp"
#include "qsl/state.hpp"

namespace qsl {

// Shared JSON matrix format used by states and Hamiltonians alike:
//   {"n": N, "re": [[...]], "im": [[...]]}   (row-major)
nlohmann::json matrix_to_json(const cmat& m);
cmat matrix_from_json(const nlohmann::json& j);

cmat load_matrix(const std::string& path);
DensityMatrix load_state(const std::string& path);    // validates invariants
cmat load_hermitian(const std::string& path);         // validates hermiticity
void save_matrix(const cmat& m, const std::string& path);

// BoundReport serialization.  JSON carries every field; absent bounds are
// null, degenerate denominators become the string "unbounded".  The CSV row
// uses the fixed column order
//   N,T,L,Theta,Phi,Q_L_denom,Q_Theta,Q_Phi,tL,tTheta,tPhi,tUnified
// with "nan" for absent entries and "inf" for unbounded ones.
nlohmann::json bound_report_to_json(const BoundReport& report);
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);

// Numbers in CSV output are fixed to 12 significant digits.
std::string format_sig12(double x);

// FNV-1a 64-bit hash, hex-encoded; used to stamp configs into sidecars.
std::string fnv1a_hex(const std::string& data);

// Writes `<path>` with one JSON object per line.
void write_json_lines(const std::vector<nlohmann::json>& rows,
                      const std::string& path);

// Minimal CSV writer with a fixed header; all numeric cells go through
// format_sig12.
class CsvWriter {
 public:
  CsvWriter(std::string path, std::vector<std::string> header);

  void add_row(const std::vector<std::string>& cells);
  void add_row_numeric(const std::vector<double>& cells);
  void write() const;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

// Run metadata written next to every experiment output:
//   {"command", "seed", "version", "config", "config_hash", "summary"}
// Re-running the command with the recorded config reproduces the outputs
// byte for byte.
void write_sidecar(const std::string& path, const std::string& command,
                   std::uint64_t seed, const nlohmann::json& config,
                   const nlohmann::json& summary);

// Bare-bones SVG scatter/line plot, enough to eyeball sweep results; no
// styling dependencies.
class SvgPlot {
 public:
  SvgPlot(int width = 640, int height = 480);

  void add_polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                    const std::string& color);
  void add_scatter(const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::string& color, double radius = 1.5);
  void set_labels(std::string x_label, std::string y_label);

  // `comment` is embedded as an XML comment (seed/config stamp).
  void write(const std::string& path, const std::string& comment = "") const;

 private:
  struct Series {
    bool line = false;
    std::vector<double> xs, ys;
    std::string color;
    double radius = 1.5;
  };
  int width_, height_;
  std::string x_label_, y_label_;
  std::vector<Series> series_;
};

}  // namespace qsl
