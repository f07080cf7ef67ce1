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

#include "qsl/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "qsl/version.hpp"

namespace qsl {

namespace {

using nlohmann::json;

json real_part_rows(const cmat& m, bool imaginary) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void fill_part(cmat& m, const json& rows, bool imaginary, const char* key) {
  const auto n = m.rows();
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
    throw ParseError(std::string("matrix JSON: \"") + key + "\" must be an array of " +
                     std::to_string(n) + " rows");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError(std::string("matrix JSON: \"") + key + "\" row " +
                       std::to_string(i) + " must have " + std::to_string(n) +
                       " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_number()) {
        throw ParseError(std::string("matrix JSON: \"") + key +
                         "\" entries must be numbers");
      }
      const double v = cell.get<double>();
      if (!std::isfinite(v)) {
        throw ParseError("matrix JSON: entries must be finite");
      }
      if (imaginary) {
        m(i, j).imag(v);
      } else {
        m(i, j).real(v);
      }
    }
  }
}

json bound_value_json(const BoundValue& b) {
  if (b.unbounded) {
    return json("unbounded");
  }
  return json(b.value);
}

std::string csv_bound(const std::optional<BoundValue>& b) {
  if (!b) return "nan";
  if (b->unbounded) return "inf";
  return format_sig12(b->value);
}

}  // namespace

json matrix_to_json(const cmat& m) {
  json j;
  j["n"] = m.rows();
  j["re"] = real_part_rows(m, false);
  j["im"] = real_part_rows(m, true);
  return j;
}

cmat matrix_from_json(const json& j) {
  if (!j.is_object()) {
    throw ParseError("matrix JSON: expected an object with n/re/im");
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("matrix JSON: missing integer field \"n\"");
  }
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 4096) {
    throw ParseError("matrix JSON: dimension n = " + std::to_string(n) +
                     " out of range");
  }
  if (!j.contains("re") || !j.contains("im")) {
    throw ParseError("matrix JSON: missing \"re\" or \"im\" field");
  }
  cmat m = cmat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  fill_part(m, j["re"], false, "re");
  fill_part(m, j["im"], true, "im");
  return m;
}

cmat load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

DensityMatrix load_state(const std::string& path) {
  return DensityMatrix::from_matrix(load_matrix(path));
}

cmat load_hermitian(const std::string& path) {
  cmat m = load_matrix(path);
  require_hermitian(m, path.c_str());
  return m;
}

void save_matrix(const cmat& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << matrix_to_json(m).dump() << "\n";
}

json bound_report_to_json(const BoundReport& report) {
  json j;
  j["n"] = report.dim;
  j["T"] = report.duration;
  j["L"] = report.bures_distance;
  j["Theta"] = report.theta_distance ? json(*report.theta_distance) : json();
  j["Phi"] = report.phi_distance ? json(*report.phi_distance) : json();
  j["E"] = report.averages.mean_e;
  j["DeltaE"] = report.averages.delta_e;
  j["Q_L_denom"] = report.bures_denominator;
  j["Q_Theta"] = report.averages.q_theta;
  j["Q_Phi"] = report.averages.q_phi;
  j["tL"] = bound_value_json(report.t_bures);
  j["tTheta"] = report.t_theta ? bound_value_json(*report.t_theta) : json();
  j["tPhi"] = report.t_phi ? bound_value_json(*report.t_phi) : json();
  j["tUnified"] = report.t_unified ? bound_value_json(*report.t_unified) : json();
  j["iso_spectral"] = report.pair_iso_spectral;
  return j;
}

std::string bound_report_csv_header() {
  return "N,T,L,Theta,Phi,Q_L_denom,Q_Theta,Q_Phi,tL,tTheta,tPhi,tUnified";
}

std::string bound_report_csv_row(const BoundReport& report) {
  std::ostringstream row;
  row << report.dim << ',' << format_sig12(report.duration) << ','
      << format_sig12(report.bures_distance) << ','
      << (report.theta_distance ? format_sig12(*report.theta_distance) : "nan")
      << ','
      << (report.phi_distance ? format_sig12(*report.phi_distance) : "nan")
      << ',' << format_sig12(report.bures_denominator) << ','
      << format_sig12(report.averages.q_theta) << ','
      << format_sig12(report.averages.q_phi) << ','
      << csv_bound(report.t_bures) << ',' << csv_bound(report.t_theta) << ','
      << csv_bound(report.t_phi) << ',' << csv_bound(report.t_unified);
  return row.str();
}

std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

void write_json_lines(const std::vector<json>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  for (const json& row : rows) {
    out << row.dump() << "\n";
  }
}

CsvWriter::CsvWriter(std::string path, std::vector<std::string> header)
    : path_(std::move(path)), header_(std::move(header)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  std::ostringstream row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row << ',';
    row << cells[i];
  }
  rows_.push_back(row.str());
}

void CsvWriter::add_row_numeric(const std::vector<double>& cells) {
  std::vector<std::string> formatted;
  formatted.reserve(cells.size());
  for (double c : cells) {
    formatted.push_back(format_sig12(c));
  }
  add_row(formatted);
}

void CsvWriter::write() const {
  std::ofstream out(path_);
  if (!out) {
    throw ParseError("cannot write file: " + path_);
  }
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i > 0) out << ',';
    out << header_[i];
  }
  out << "\n";
  for (const std::string& row : rows_) {
    out << row << "\n";
  }
}

void write_sidecar(const std::string& path, const std::string& command,
                   std::uint64_t seed, const json& config, const json& summary) {
  json j;
  j["command"] = command;
  j["seed"] = seed;
  j["version"] = kVersion;
  j["config"] = config;
  j["config_hash"] = fnv1a_hex(config.dump());
  j["summary"] = summary;
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// SVG

SvgPlot::SvgPlot(int width, int height) : width_(width), height_(height) {}

void SvgPlot::add_polyline(const std::vector<double>& xs,
                           const std::vector<double>& ys,
                           const std::string& color) {
  series_.push_back(Series{true, xs, ys, color, 0.0});
}

void SvgPlot::add_scatter(const std::vector<double>& xs,
                          const std::vector<double>& ys,
                          const std::string& color, double radius) {
  series_.push_back(Series{false, xs, ys, color, radius});
}

void SvgPlot::set_labels(std::string x_label, std::string y_label) {
  x_label_ = std::move(x_label);
  y_label_ = std::move(y_label);
}

void SvgPlot::write(const std::string& path, const std::string& comment) const {
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Series& s : series_) {
    for (double x : s.xs) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
    }
    for (double y : s.ys) {
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (series_.empty() || xmin > xmax) {
    xmin = 0.0;
    xmax = 1.0;
    ymin = 0.0;
    ymax = 1.0;
  }
  if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-300) ymax = ymin + 1.0;

  const double margin = 50.0;
  const double pw = width_ - 2 * margin;
  const double ph = height_ - 2 * margin;
  const auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * pw; };
  const auto py = [&](double y) {
    return height_ - margin - (y - ymin) / (ymax - ymin) * ph;
  };

  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
      << "\" height=\"" << height_ << "\">\n";
  if (!comment.empty()) {
    out << "<!-- " << comment << " -->\n";
  }
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << margin << "\" y1=\"" << height_ - margin << "\" x2=\""
      << width_ - margin << "\" y2=\"" << height_ - margin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height_ - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"" << height_ - margin + 30
      << "\" font-size=\"11\">" << format_sig12(xmin) << "</text>\n";
  out << "<text x=\"" << width_ - margin - 40 << "\" y=\"" << height_ - margin + 30
      << "\" font-size=\"11\">" << format_sig12(xmax) << "</text>\n";
  out << "<text x=\"5\" y=\"" << height_ - margin << "\" font-size=\"11\">"
      << format_sig12(ymin) << "</text>\n";
  out << "<text x=\"5\" y=\"" << margin << "\" font-size=\"11\">"
      << format_sig12(ymax) << "</text>\n";
  if (!x_label_.empty()) {
    out << "<text x=\"" << width_ / 2 << "\" y=\"" << height_ - 10
        << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label_
        << "</text>\n";
  }
  if (!y_label_.empty()) {
    out << "<text x=\"12\" y=\"" << height_ / 2
        << "\" font-size=\"12\" transform=\"rotate(-90 12 " << height_ / 2
        << ")\" text-anchor=\"middle\">" << y_label_ << "</text>\n";
  }
  for (const Series& s : series_) {
    if (s.line) {
      out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" points=\"";
      for (std::size_t i = 0; i < s.xs.size(); ++i) {
        out << px(s.xs[i]) << ',' << py(s.ys[i]) << ' ';
      }
      out << "\"/>\n";
    } else {
      for (std::size_t i = 0; i < s.xs.size(); ++i) {
        out << "<circle cx=\"" << px(s.xs[i]) << "\" cy=\"" << py(s.ys[i])
            << "\" r=\"" << s.radius << "\" fill=\"" << s.color << "\"/>\n";
      }
    }
  }
  out << "</svg>\n";
}

}  // namespace qsl
