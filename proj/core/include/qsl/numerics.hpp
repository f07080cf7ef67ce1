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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsl {

using complex = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;

// All numerical tolerances used across the library, adjustable through one
// global knob (see numerics()).  Values are absolute unless noted otherwise.
struct NumericsConfig {
  double hermiticity_tol = 1e-9;        // max entrywise |M - M^dag|
  double eig_residual_tol = 1e-10;      // relative to ||M||_F
  double psd_floor = 1e-10;             // eigenvalues >= -psd_floor are clipped to 0
  double sqrt_residual_tol = 1e-9;      // ||R^2 - M||_F
  double unitarity_tol = 1e-10;         // ||U^dag U - 1||_F
  double trace_tol = 1e-9;              // |tr - 1| for states, |sum - 1| for spectra
  double norm_tol = 1e-9;               // state-vector normalization
  double iso_spectral_tol = 1e-8;       // entrywise spectrum comparison
  double arccos_slack = 1e-6;           // tolerated overshoot of arccos arguments
  double degenerate_denominator = 1e-12; // below this a bound is flagged Unbounded
  double maximally_mixed_tol = 1e-12;   // tr[rho^2] - 1/N below this is an error
  double bound_validity_slack = 1e-6;   // bounds may exceed T by at most this
  double violation_threshold = 1e-9;    // tL - max(tTheta,tPhi) above this counts
};

// Mutable global configuration.  Set fields before running computations;
// reads are not synchronized.
NumericsConfig& numerics();

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};
class NotPSD : public Error {
 public:
  using Error::Error;
};
class NumericalFailure : public Error {
 public:
  using Error::Error;
};
class InvalidDimension : public Error {
 public:
  using Error::Error;
};
class NotAState : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class NotIsoSpectral : public Error {
 public:
  using Error::Error;
};
class MaximallyMixed : public Error {
 public:
  using Error::Error;
};
class NotNormalized : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class DegenerateData : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsl
