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

#include "tcluster/smalldense.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcluster {

namespace {

void check_dim(Eigen::Index dim, const char *what) {
    if (dim <= 0 || dim > kMaxDenseDim) {
        std::stringstream ss;
        ss << what << ": dimension " << dim << " outside [1, " << kMaxDenseDim << "]";
        throw std::invalid_argument(ss.str());
    }
}

}  // namespace

double hermiticity_residual(const Matrix &a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double frobenius_distance(const Matrix &a, const Matrix &b) {
    return (a - b).norm();
}

DenseHermitian::DenseHermitian(Matrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("DenseHermitian: matrix is not square");
    }
    check_dim(m.rows(), "DenseHermitian");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    double residual = hermiticity_residual(m);
    if (!(residual <= kHermitianTolerance * scale)) {
        std::stringstream ss;
        ss << "DenseHermitian: Hermiticity residual " << residual << " exceeds tolerance";
        throw std::invalid_argument(ss.str());
    }
    m_ = (m + m.adjoint()) * 0.5;
}

DenseHermitian DenseHermitian::identity(int dim) {
    check_dim(dim, "DenseHermitian::identity");
    return DenseHermitian(Matrix::Identity(dim, dim));
}

DenseHermitian DenseHermitian::zero(int dim) {
    check_dim(dim, "DenseHermitian::zero");
    return DenseHermitian(Matrix::Zero(dim, dim));
}

DenseHermitian DenseHermitian::diagonal(const RealVector &values) {
    return DenseHermitian(Matrix(values.cast<Complex>().asDiagonal()));
}

DenseHermitian DenseHermitian::projector(const Vector &state) {
    return DenseHermitian(state * state.adjoint());
}

double DenseHermitian::trace() const {
    return m_.trace().real();
}

DenseHermitian DenseHermitian::operator+(const DenseHermitian &other) const {
    return DenseHermitian(m_ + other.m_);
}

DenseHermitian DenseHermitian::operator-(const DenseHermitian &other) const {
    return DenseHermitian(m_ - other.m_);
}

DenseHermitian DenseHermitian::operator*(double scale) const {
    return DenseHermitian(m_ * scale);
}

DenseHermitian &DenseHermitian::operator+=(const DenseHermitian &other) {
    *this = *this + other;
    return *this;
}

DenseHermitian DenseHermitian::conjugated_by(const Matrix &u) const {
    if (u.cols() != m_.rows()) {
        throw std::invalid_argument("conjugated_by: dimension mismatch");
    }
    return DenseHermitian(u * m_ * u.adjoint());
}

Eigensystem eigensystem(const DenseHermitian &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        std::stringstream ss;
        ss << "eigensystem: solver did not converge (dim=" << h.dim()
           << ", frobenius norm=" << h.matrix().norm()
           << ", max entry=" << h.matrix().cwiseAbs().maxCoeff() << ")";
        throw EigensolverError(ss.str());
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Eigen::Index rows = a.rows() * b.rows();
    Eigen::Index cols = a.cols() * b.cols();
    if (rows > kMaxDenseDim || cols > kMaxDenseDim) {
        std::stringstream ss;
        ss << "kron: result " << rows << "x" << cols << " exceeds dimension " << kMaxDenseDim;
        throw std::invalid_argument(ss.str());
    }
    Matrix out(rows, cols);
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

DenseHermitian kron(const DenseHermitian &a, const DenseHermitian &b) {
    return DenseHermitian(kron(a.matrix(), b.matrix()));
}

DenseHermitian expm_hermitian(const DenseHermitian &h, double scale) {
    if (!std::isfinite(scale)) {
        throw std::invalid_argument("expm_hermitian: non-finite scale");
    }
    Eigensystem es = eigensystem(h);
    RealVector e = (es.values * scale).array().exp();
    return DenseHermitian(es.vectors * e.cast<Complex>().asDiagonal() * es.vectors.adjoint());
}

Matrix unitary_exp(const DenseHermitian &h, double angle) {
    Eigensystem es = eigensystem(h);
    Vector phases(es.values.size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        phases(k) = std::polar(1.0, -angle * es.values(k));
    }
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

const DenseHermitian &SpinOperators::component(int axis) const {
    switch (axis) {
        case 0:
            return x;
        case 1:
            return y;
        case 2:
            return z;
    }
    throw std::out_of_range("SpinOperators::component: axis must be 0, 1 or 2");
}

SpinOperators spin_matrices(double s) {
    double two_s = 2 * s;
    if (!std::isfinite(s) || two_s < 0.5 || std::abs(two_s - std::round(two_s)) > 1e-12) {
        throw std::invalid_argument("spin_matrices: s must be a positive half-integer");
    }
    if (two_s > 5 + 1e-12) {
        throw std::invalid_argument("spin_matrices: s above 5/2 is not supported");
    }
    int dim = static_cast<int>(std::lround(two_s)) + 1;
    s = (dim - 1) / 2.0;

    // Raising operator: S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, row index k holds m = s - k.
    Matrix raise = Matrix::Zero(dim, dim);
    for (int k = 1; k < dim; k++) {
        double m = s - k;
        raise(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    Matrix lower = raise.adjoint();
    Matrix sz = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; k++) {
        sz(k, k) = s - k;
    }
    return SpinOperators{
        s,
        DenseHermitian((raise + lower) * 0.5),
        DenseHermitian((raise - lower) * Complex(0, -0.5)),
        DenseHermitian(sz),
    };
}

}  // namespace tcluster
