// Copyright 2026 The tcluster Authors
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

#ifndef TCLUSTER_SMALLDENSE_H
#define TCLUSTER_SMALLDENSE_H

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tcluster {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest Hilbert-space dimension handled by the dense routines.
inline constexpr int kMaxDenseDim = 64;

/// Tolerance on |A - A^dagger| when a matrix is declared Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;

/// Raised when the eigensolver fails; carries diagnostics about the input.
struct EigensolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A square complex matrix that is Hermitian by construction.
///
/// Construction checks Hermiticity entrywise (relative to the largest entry
/// magnitude, floored at 1) and then stores the exactly symmetrized matrix,
/// so downstream code can rely on A == A^dagger bit for bit.
class DenseHermitian {
   public:
    DenseHermitian() = default;
    explicit DenseHermitian(Matrix m);

    static DenseHermitian identity(int dim);
    static DenseHermitian zero(int dim);
    static DenseHermitian diagonal(const RealVector &values);
    static DenseHermitian projector(const Vector &state);

    int dim() const {
        return static_cast<int>(m_.rows());
    }
    const Matrix &matrix() const {
        return m_;
    }
    Complex operator()(int r, int c) const {
        return m_(r, c);
    }
    double trace() const;

    DenseHermitian operator+(const DenseHermitian &other) const;
    DenseHermitian operator-(const DenseHermitian &other) const;
    DenseHermitian operator*(double scale) const;
    DenseHermitian &operator+=(const DenseHermitian &other);

    /// U A U^dagger; U need not be unitary.
    DenseHermitian conjugated_by(const Matrix &u) const;

   private:
    Matrix m_;
};

inline DenseHermitian operator*(double scale, const DenseHermitian &a) {
    return a * scale;
}

/// Eigenpairs with eigenvalues ascending; columns of `vectors` are orthonormal.
struct Eigensystem {
    RealVector values;
    Matrix vectors;
};

Eigensystem eigensystem(const DenseHermitian &h);

/// Frobenius norm of (a - b).
double frobenius_distance(const Matrix &a, const Matrix &b);

/// Largest |A(r,c) - conj(A(c,r))|.
double hermiticity_residual(const Matrix &a);

Matrix kron(const Matrix &a, const Matrix &b);
DenseHermitian kron(const DenseHermitian &a, const DenseHermitian &b);

/// Returns exp(scale * h) = V exp(scale * Lambda) V^dagger.
DenseHermitian expm_hermitian(const DenseHermitian &h, double scale);

/// Returns the unitary exp(-i * angle * h).
Matrix unitary_exp(const DenseHermitian &h, double angle);

/// Angular momentum matrices in the |s, m> basis ordered m = s, s-1, ..., -s.
struct SpinOperators {
    double s;
    DenseHermitian x;
    DenseHermitian y;
    DenseHermitian z;

    int dim() const {
        return z.dim();
    }
    const DenseHermitian &component(int axis) const;
};

/// Requires 2s to be a positive integer and s <= 5/2.
SpinOperators spin_matrices(double s);

}  // namespace tcluster

#endif
