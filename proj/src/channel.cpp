#include "gatewitness/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "gatewitness/errors.hpp"
#include "gatewitness/rng.hpp"

namespace gatewitness {

namespace {

constexpr double kChannelTol = 1e-10;

// Kraus action without density-matrix validation; choi() feeds the
// non-Hermitian basis units |m><n| through the same map.
ComplexMatrix apply_raw(const std::vector<ComplexMatrix>& kraus,
                        const ComplexMatrix& op) {
    ComplexMatrix out(op.rows(), op.cols());
    for (const ComplexMatrix& k : kraus) {
        out = out + k * op * dagger(k);
    }
    return out;
}

}  // namespace

QuantumChannel::QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops)
    : dim_(dim), kraus_(std::move(kraus_ops)) {
    if (dim_ == 0) throw ArgumentError("channel dimension must be positive");
    if (kraus_.empty()) throw ArgumentError("channel needs at least one Kraus operator");
    for (const ComplexMatrix& k : kraus_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw ArgumentError("Kraus operator dimensions do not match channel");
        }
    }
    ComplexMatrix sum(dim_, dim_);
    for (const ComplexMatrix& k : kraus_) sum = sum + dagger(k) * k;
    if (max_abs_diff(sum, ComplexMatrix::identity(dim_)) > kChannelTol) {
        throw PreconditionError("Kraus set is not trace preserving within 1e-10");
    }
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw ArgumentError("state dimension does not match channel");
    }
    require_density_matrix(rho, dim_);
    return apply_raw(kraus_, rho);
}

void require_density_matrix(const ComplexMatrix& rho, std::size_t dim, double tol) {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw PreconditionError("density matrix has wrong dimensions");
    }
    if (hermiticity_defect(rho) > tol) {
        throw PreconditionError("density matrix is not Hermitian");
    }
    if (std::abs(trace(rho) - Complex{1.0, 0.0}) > tol) {
        throw PreconditionError("density matrix trace is not 1");
    }
    // Hermitize before the eigensolve so its 1e-10 gate does not trip on
    // inputs we accept at the looser 1e-9 tolerance.
    ComplexMatrix h = (rho + dagger(rho)) * Complex{0.5, 0.0};
    const auto eigs = hermitian_eigenvalues(h);
    if (eigs.back() < -tol) {
        throw PreconditionError("density matrix is not positive semidefinite");
    }
}

ComplexMatrix ideal_cnot() {
    return ComplexMatrix(4, 4,
                         {1, 0, 0, 0,
                          0, 1, 0, 0,
                          0, 0, 0, 1,
                          0, 0, 1, 0});
}

QuantumChannel unitary_channel(const ComplexMatrix& u) {
    if (!u.square()) throw PreconditionError("unitary channel requires a square matrix");
    if (unitarity_defect(u) > kChannelTol) {
        throw PreconditionError("matrix is not unitary within 1e-10");
    }
    return QuantumChannel(u.rows(), {u});
}

QuantumChannel depolarizing(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("depolarizing strength must be in [0, 1]");
    }
    const std::array<ComplexMatrix, 4> singles{identity2(), pauli(Axis::X),
                                               pauli(Axis::Y), pauli(Axis::Z)};
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(16);
    const double w_id = std::sqrt(1.0 - 15.0 * p / 16.0);
    const double w_pauli = std::sqrt(p / 16.0);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double w = (a == 0 && b == 0) ? w_id : w_pauli;
            if (w == 0.0) continue;
            kraus.push_back(Complex{w, 0.0} * kron(singles[a], singles[b]));
        }
    }
    return QuantumChannel(4, std::move(kraus));
}

QuantumChannel dephasing(double p, Qubit which, Axis axis) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("dephasing strength must be in [0, 1]");
    }
    const ComplexMatrix sigma = which == Qubit::Control
                                    ? kron(pauli(axis), identity2())
                                    : kron(identity2(), pauli(axis));
    std::vector<ComplexMatrix> kraus;
    const double keep = std::sqrt(1.0 - p / 2.0);
    if (keep > 0.0) kraus.push_back(Complex{keep, 0.0} * ComplexMatrix::identity(4));
    const double flip = std::sqrt(p / 2.0);
    if (flip > 0.0) kraus.push_back(Complex{flip, 0.0} * sigma);
    return QuantumChannel(4, std::move(kraus));
}

QuantumChannel coherent_overrotation(double theta) {
    const Complex lower{std::cos(-theta / 2.0), std::sin(-theta / 2.0)};
    ComplexMatrix rz(2, 2);
    rz(0, 0) = lower;
    rz(1, 1) = std::conj(lower);
    return unitary_channel(kron(rz, identity2()));
}

QuantumChannel random_channel(std::size_t dim, std::size_t kraus_rank,
                              std::uint64_t seed) {
    if (dim < 2) throw ArgumentError("channel dimension must be at least 2");
    if (kraus_rank < 1 || kraus_rank > dim * dim) {
        throw ArgumentError("kraus_rank must be in [1, dim^2]");
    }
    const std::size_t total_rows = kraus_rank * dim;
    SplitMix64 gen(seed);
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(total_rows));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < total_rows; ++i) {
            cols[j][i] = Complex{gen.next_gaussian(), gen.next_gaussian()};
        }
    }
    // Modified Gram-Schmidt turns the Gaussian columns into an isometry.
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex proj{0.0, 0.0};
            for (std::size_t i = 0; i < total_rows; ++i) {
                proj += std::conj(cols[k][i]) * cols[j][i];
            }
            for (std::size_t i = 0; i < total_rows; ++i) {
                cols[j][i] -= proj * cols[k][i];
            }
        }
        double norm2 = 0.0;
        for (const Complex& c : cols[j]) norm2 += std::norm(c);
        const double norm = std::sqrt(norm2);
        if (norm < 1e-12) {
            throw InternalError("random isometry columns degenerate");
        }
        for (Complex& c : cols[j]) c /= norm;
    }
    std::vector<ComplexMatrix> kraus(kraus_rank, ComplexMatrix(dim, dim));
    for (std::size_t r = 0; r < kraus_rank; ++r) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                kraus[r](i, j) = cols[j][r * dim + i];
            }
        }
    }
    return QuantumChannel(dim, std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
    if (second.dim() != first.dim()) {
        throw ArgumentError("channel dimensions do not match in composition");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(second.kraus().size() * first.kraus().size());
    for (const ComplexMatrix& b : second.kraus()) {
        for (const ComplexMatrix& a : first.kraus()) {
            kraus.push_back(b * a);
        }
    }
    return QuantumChannel(first.dim(), std::move(kraus));
}

ChoiMatrix::ChoiMatrix(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
    const std::size_t d2 = dim_ * dim_;
    if (matrix_.rows() != d2 || matrix_.cols() != d2) {
        throw ArgumentError("Choi matrix must be dim^2 x dim^2");
    }
    if (hermiticity_defect(matrix_) > 1e-10) {
        throw PreconditionError("Choi matrix is not Hermitian within 1e-10");
    }
    if (std::abs(trace(matrix_) - Complex{1.0, 0.0}) > 1e-10) {
        throw PreconditionError("Choi matrix trace is not 1 within 1e-10");
    }
    ComplexMatrix h = (matrix_ + dagger(matrix_)) * Complex{0.5, 0.0};
    if (hermitian_eigenvalues(h).back() < -1e-9) {
        throw PreconditionError("Choi matrix is not positive semidefinite");
    }
}

ChoiMatrix choi(const QuantumChannel& ch) {
    const std::size_t d = ch.dim();
    ComplexMatrix j(d * d, d * d);
    // J = (1/d) sum_i v_i v_i† with v_i = sum_m |m> (x) K_i|m>; component
    // (m*d + k) of v_i is K_i(k, m).
    for (const ComplexMatrix& k : ch.kraus()) {
        ComplexMatrix v(d * d, 1);
        for (std::size_t m = 0; m < d; ++m) {
            for (std::size_t r = 0; r < d; ++r) {
                v(m * d + r, 0) = k(r, m);
            }
        }
        j = j + outer(v);
    }
    j = j * Complex{1.0 / static_cast<double>(d), 0.0};
    return ChoiMatrix(d, std::move(j));
}

double process_fidelity(const QuantumChannel& actual, const ComplexMatrix& ideal) {
    if (ideal.rows() != actual.dim() || ideal.cols() != actual.dim()) {
        throw ArgumentError("ideal unitary dimension does not match channel");
    }
    if (unitarity_defect(ideal) > kChannelTol) {
        throw PreconditionError("ideal gate is not unitary within 1e-10");
    }
    const ChoiMatrix ja = choi(actual);
    const ChoiMatrix ji = choi(unitary_channel(ideal));
    const double f = trace(ji.matrix() * ja.matrix()).real();
    if (f < -1e-9 || f > 1.0 + 1e-9) {
        throw InternalError("process fidelity outside [0, 1]");
    }
    return std::min(1.0, std::max(0.0, f));
}

double process_fidelity_trace_form(const QuantumChannel& actual,
                                   const ComplexMatrix& ideal) {
    if (ideal.rows() != actual.dim() || ideal.cols() != actual.dim()) {
        throw ArgumentError("ideal unitary dimension does not match channel");
    }
    if (unitarity_defect(ideal) > kChannelTol) {
        throw PreconditionError("ideal gate is not unitary within 1e-10");
    }
    const ComplexMatrix u_dag = dagger(ideal);
    const double d = static_cast<double>(actual.dim());
    double sum = 0.0;
    for (const ComplexMatrix& k : actual.kraus()) {
        sum += std::norm(trace(u_dag * k));
    }
    const double f = sum / (d * d);
    if (f < -1e-9 || f > 1.0 + 1e-9) {
        throw InternalError("process fidelity outside [0, 1]");
    }
    return std::min(1.0, std::max(0.0, f));
}

}  // namespace gatewitness
