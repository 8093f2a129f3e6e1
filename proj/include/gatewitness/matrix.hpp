#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gatewitness {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. The universal carrier for states,
// unitaries, Kraus operators and Choi matrices; nothing in this project
// exceeds 32x32, so there is no sparse or blocked path.
class ComplexMatrix {
public:
    ComplexMatrix() = default;  // 0x0 placeholder, e.g. for containers
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix column(std::vector<Complex> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Complex& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const std::vector<Complex>& entries() const noexcept { return entries_; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex s) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(Complex s, const ComplexMatrix& m);

// Kronecker product: entry ((i*b.rows+k), (j*b.cols+l)) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

// Sum of diagonal entries; the matrix must be square.
Complex trace(const ComplexMatrix& a);

// u† v for column vectors of equal length.
Complex inner(const ComplexMatrix& u, const ComplexMatrix& v);

// v v† for a column vector.
ComplexMatrix outer(const ComplexMatrix& v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& a);  // max entry of |a - a†|
double unitarity_defect(const ComplexMatrix& a);    // max entry of |a†a - I|

// Real eigenvalues of a Hermitian matrix, sorted descending. The input must
// be Hermitian within 1e-10 (max |a - a†| entry).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

struct HermitianEigensystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k is the eigenvector for values[k]
};

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a);

}  // namespace gatewitness
