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

#include "qswitch/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace qswitch {

double Spectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

namespace {

Spectrum solve_hermitian(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  Spectrum out;
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            std::greater<>());
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw InvalidState("density matrix must be square and non-empty");
  }
  const double herm = hermiticity_defect(m_);
  if (herm > tol::kHermitian) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << herm << ")";
    throw InvalidState(msg.str());
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::kTrace) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << " + " << tr.imag()
        << "i, expected 1";
    throw InvalidState(msg.str());
  }
  spectrum_ = solve_hermitian(m_);
  if (spectrum_.eigenvalues.back() < -tol::kPsd) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue "
        << spectrum_.eigenvalues.back();
    throw InvalidState(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw InvalidState("pure state from the zero vector");
  }
  const ComplexVector v = amplitudes / norm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw DimensionMismatch("basis index out of range");
  }
  return DensityMatrix(ket_bra(dim, index, index));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw DimensionMismatch("dimension must be positive");
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b,
                            Keep keep) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    std::ostringstream msg;
    msg << "partial_trace: " << m.rows() << "x" << m.cols()
        << " operator does not factor as " << dim_a << " x " << dim_b;
    throw DimensionMismatch(msg.str());
  }
  if (keep == Keep::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int a2 = 0; a2 < dim_a; ++a2) {
        Complex acc{};
        for (int b = 0; b < dim_b; ++b) acc += m(a * dim_b + b, a2 * dim_b + b);
        out(a, a2) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& m, int dim_a, int dim_b,
                            Keep keep) {
  return DensityMatrix(partial_trace(m.matrix(), dim_a, dim_b, keep));
}

Spectrum hermitian_spectrum(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian_spectrum: matrix is not square");
  }
  const double herm = hermiticity_defect(m);
  if (herm > tol::kHermitian) {
    std::ostringstream msg;
    msg << "hermitian_spectrum: matrix is not Hermitian (defect " << herm
        << ")";
    throw InvalidState(msg.str());
  }
  return solve_hermitian(m);
}

double entropy_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double lambda : probabilities) {
    if (lambda < -tol::kPsd) {
      std::ostringstream msg;
      msg << "entropy of a spectrum with negative eigenvalue " << lambda;
      throw InvalidState(msg.str());
    }
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

double entropy_bits(const Spectrum& spectrum) {
  return entropy_bits(std::span<const double>(spectrum.eigenvalues));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(rho.spectrum());
}

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double spectrum_deviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> x = a.eigenvalues;
  std::vector<double> y = b.eigenvalues;
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  return worst;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix ket_bra(int dim, int row, int col) {
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  out(row, col) = 1.0;
  return out;
}

}  // namespace qswitch
