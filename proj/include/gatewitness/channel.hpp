#pragma once

#include <cstdint>
#include <vector>

#include "gatewitness/matrix.hpp"
#include "gatewitness/states.hpp"

namespace gatewitness {

// Completely positive trace-preserving map stored as a Kraus-operator set.
// Construction checks trace preservation (sum K†K = I within 1e-10); values
// are immutable afterwards.
class QuantumChannel {
public:
    QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus_ops);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

    // sum_i K_i rho K_i†. rho must be a density matrix: Hermitian, positive
    // semidefinite and unit trace, each within 1e-9.
    ComplexMatrix apply(const ComplexMatrix& rho) const;

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> kraus_;
};

// Throws PreconditionError unless rho is a dim x dim density matrix within
// tol (Hermiticity, minimum eigenvalue >= -tol, trace within tol of 1).
void require_density_matrix(const ComplexMatrix& rho, std::size_t dim,
                            double tol = 1e-9);

// The two-qubit controlled-NOT in the computational basis |control; target>:
// fixes |00>, |01>, swaps |10> and |11>.
ComplexMatrix ideal_cnot();

// Single-Kraus channel {u}; u must be unitary within 1e-10.
QuantumChannel unitary_channel(const ComplexMatrix& u);

enum class Qubit { Control, Target };

// Two-qubit depolarizing: rho -> (1-p) rho + p I/4. Kraus form: the identity
// weighted sqrt(1 - 15p/16) plus the 15 non-identity Pauli products weighted
// sqrt(p/16) each.
QuantumChannel depolarizing(double p);

// Dephasing along the given Pauli axis on one qubit:
// rho -> (1 - p/2) rho + (p/2) sigma rho sigma, identity on the other qubit.
QuantumChannel dephasing(double p, Qubit which, Axis axis);

// Coherent rotation exp(-i theta/2 Z) on the control qubit, as a standalone
// unitary channel; compose with a gate channel to model an over-rotated gate.
QuantumChannel coherent_overrotation(double theta);

// Seeded CPTP channel: a Gaussian (kraus_rank*dim) x dim matrix is drawn from
// a splitmix64 stream and column-orthonormalized into an isometry whose dim x
// dim blocks are the Kraus operators. Deterministic for a fixed seed.
QuantumChannel random_channel(std::size_t dim, std::size_t kraus_rank,
                              std::uint64_t seed);

// second ∘ first, Kraus set {B_j A_i}.
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

// Trace-one Choi matrix J = (1/dim) sum_mn |m><n| (x) ch(|m><n|).
// Construction validates Hermiticity (1e-10), positivity (min eigenvalue
// >= -1e-9) and unit trace (1e-10).
class ChoiMatrix {
public:
    ChoiMatrix(std::size_t dim, ComplexMatrix matrix);

    std::size_t dim() const noexcept { return dim_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

private:
    std::size_t dim_;
    ComplexMatrix matrix_;
};

ChoiMatrix choi(const QuantumChannel& ch);

// Process fidelity as the overlap tr(J_ideal J_actual) of trace-one Choi
// matrices. With this normalization a unitary-vs-unitary comparison gives
// |tr(U†V)|^2 / d^2.
double process_fidelity(const QuantumChannel& actual, const ComplexMatrix& ideal);

// The same quantity via sum_i |tr(U†K_i)|^2 / d^2, kept as an independent
// algebraic route for cross-checking.
double process_fidelity_trace_form(const QuantumChannel& actual,
                                   const ComplexMatrix& ideal);

}  // namespace gatewitness
