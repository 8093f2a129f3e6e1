#include "gatewitness/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gatewitness/errors.hpp"

namespace gatewitness {

namespace {

constexpr double kHermitianTol = 1e-10;

void require_finite(const std::vector<Complex>& entries) {
    for (const Complex& e : entries) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw ArgumentError("matrix entry is not finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw ArgumentError("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw ArgumentError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw ArgumentError("entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::column(std::vector<Complex> entries) {
    const std::size_t n = entries.size();
    return ComplexMatrix(n, 1, std::move(entries));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw ArgumentError("dimension mismatch in matrix product");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ArgumentError("dimension mismatch in matrix sum");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ArgumentError("dimension mismatch in matrix difference");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix out = *this;
    for (Complex& e : out.entries_) e *= s;
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.square()) {
        throw ArgumentError("trace requires a square matrix");
    }
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex inner(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows()) {
        throw ArgumentError("inner product requires column vectors of equal length");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < u.rows(); ++i) s += std::conj(u(i, 0)) * v(i, 0);
    return s;
}

ComplexMatrix outer(const ComplexMatrix& v) {
    if (v.cols() != 1) {
        throw ArgumentError("outer product requires a column vector");
    }
    ComplexMatrix out(v.rows(), v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) {
        for (std::size_t j = 0; j < v.rows(); ++j) {
            out(i, j) = v(i, 0) * std::conj(v(j, 0));
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("dimension mismatch in matrix comparison");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
    if (!a.square()) {
        throw ArgumentError("hermiticity check requires a square matrix");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

double unitarity_defect(const ComplexMatrix& a) {
    if (!a.square()) {
        throw ArgumentError("unitarity check requires a square matrix");
    }
    return max_abs_diff(dagger(a) * a, ComplexMatrix::identity(a.rows()));
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a) {
    if (!a.square()) {
        throw PreconditionError("eigensystem requires a square matrix");
    }
    if (hermiticity_defect(a) > kHermitianTol) {
        throw PreconditionError("matrix is not Hermitian within 1e-10");
    }
    const std::size_t n = a.rows();
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw InternalError("Hermitian eigensolver failed to converge");
    }
    // Eigen reports ascending order; flip to descending.
    HermitianEigensystem sys;
    sys.values.resize(n);
    sys.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = n - 1 - k;
        sys.values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
        for (std::size_t i = 0; i < n; ++i) {
            sys.vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                      static_cast<Eigen::Index>(src));
        }
    }
    return sys;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    return hermitian_eigensystem(a).values;
}

}  // namespace gatewitness
