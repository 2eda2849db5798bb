// Copyright 2026 The qswitch Authors
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

#ifndef QSWITCH_QMAT_HPP
#define QSWITCH_QMAT_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qswitch {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

namespace tol {
inline constexpr double kHermitian = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kEigen = 1e-10;
}  // namespace tol

/// Raised when a matrix fails a density-matrix check.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Real eigenvalues in descending order.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
  double sum() const;
};

/// Unit-trace positive semidefinite matrix. The spectrum is computed once at
/// construction (it is needed for validation) and cached for entropy queries.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(const ComplexVector& amplitudes);
  static DensityMatrix basis_state(int dim, int index);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  const Spectrum& spectrum() const { return spectrum_; }

 private:
  ComplexMatrix m_;
  Spectrum spectrum_;
};

enum class Keep { A, B };

/// Kronecker product; the left factor indexes the slower-varying block.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one factor of a (dim_a * dim_b)-dimensional operator laid out as
/// A (x) B.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Keep keep);
DensityMatrix partial_trace(const DensityMatrix& m, int dim_a, int dim_b,
                            Keep keep);

Spectrum hermitian_spectrum(const ComplexMatrix& m);

/// Von Neumann entropy in bits. Eigenvalues in [-tol::kPsd, 0) are treated as
/// zero; anything more negative throws InvalidState.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_bits(const Spectrum& spectrum);
double entropy_bits(std::span<const double> probabilities);

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& m);

/// Largest deviation between two spectra compared as multisets (both sorted
/// descending). Returns +inf when the sizes differ.
double spectrum_deviation(const Spectrum& a, const Spectrum& b);

ComplexMatrix identity(int dim);
ComplexMatrix ket_bra(int dim, int row, int col);

}  // namespace qswitch

#endif  // QSWITCH_QMAT_HPP
