#include "gatewitness/states.hpp"

#include <cmath>
#include <string>

#include "gatewitness/errors.hpp"

namespace gatewitness {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr Complex kI{0.0, 1.0};

}  // namespace

char axis_label(Axis a) noexcept {
    switch (a) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        default: return 'z';
    }
}

Axis axis_from_label(char c) {
    switch (c) {
        case 'x': return Axis::X;
        case 'y': return Axis::Y;
        case 'z': return Axis::Z;
        default: throw ArgumentError(std::string("unknown axis label '") + c + "'");
    }
}

ComplexMatrix pauli(Axis a) {
    switch (a) {
        case Axis::X:
            return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
        case Axis::Y:
            return ComplexMatrix(2, 2, {0.0, -kI, kI, 0.0});
        default:
            return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
    }
}

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

QubitBasisState::QubitBasisState(Axis a, int i) : axis(a), index(i) {
    if (i != 0 && i != 1) {
        throw ArgumentError("qubit basis state index must be 0 or 1");
    }
}

ComplexMatrix pauli_eigenstate(const QubitBasisState& s) {
    const double sign = s.index == 0 ? 1.0 : -1.0;
    switch (s.axis) {
        case Axis::X:
            return ComplexMatrix::column({kInvSqrt2, sign * kInvSqrt2});
        case Axis::Y:
            return ComplexMatrix::column({kInvSqrt2, sign * kI * kInvSqrt2});
        default:
            return s.index == 0 ? ComplexMatrix::column({1.0, 0.0})
                                : ComplexMatrix::column({0.0, 1.0});
    }
}

ComplexMatrix product_state(const QubitBasisState& control,
                            const QubitBasisState& target) {
    return kron(pauli_eigenstate(control), pauli_eigenstate(target));
}

std::array<ComplexMatrix, 4> ProductBasis::states() const {
    std::array<ComplexMatrix, 4> out;
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            out[static_cast<std::size_t>(2 * c + t)] =
                product_state(QubitBasisState(control, c), QubitBasisState(target, t));
        }
    }
    return out;
}

std::string ProductBasis::label() const {
    return std::string{axis_label(control), axis_label(target)};
}

int ProductBasis::canonical_index() const noexcept {
    return 3 * static_cast<int>(control) + static_cast<int>(target);
}

ProductBasis ProductBasis::from_label(std::string_view label) {
    if (label.size() != 2) {
        throw ArgumentError("product basis label must be two characters, e.g. \"zz\"");
    }
    return ProductBasis{axis_from_label(label[0]), axis_from_label(label[1])};
}

bool mutually_unbiased(const ProductBasis& a, const ProductBasis& b) {
    const auto sa = a.states();
    const auto sb = b.states();
    for (const ComplexMatrix& u : sa) {
        for (const ComplexMatrix& v : sb) {
            const double overlap = std::norm(inner(u, v));
            if (std::abs(overlap - 0.25) > 1e-10) return false;
        }
    }
    return true;
}

ComplexMatrix bell_state(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus:
            return ComplexMatrix::column({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
        case BellKind::PhiMinus:
            return ComplexMatrix::column({kInvSqrt2, 0.0, 0.0, -kInvSqrt2});
        case BellKind::PsiPlus:
            return ComplexMatrix::column({0.0, kInvSqrt2, kInvSqrt2, 0.0});
        default:
            return ComplexMatrix::column({0.0, kInvSqrt2, -kInvSqrt2, 0.0});
    }
}

ComplexMatrix fourier_basis_state(int n_levels, int k) {
    if (n_levels < 2 || n_levels > 32) {
        throw ArgumentError("n_levels must be in [2, 32]");
    }
    if (k < 0 || k >= n_levels) {
        throw ArgumentError("basis index k must be in [0, n_levels)");
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(n_levels));
    std::vector<Complex> entries(static_cast<std::size_t>(n_levels));
    for (int n = 0; n < n_levels; ++n) {
        const double phase = -kTwoPi * static_cast<double>(k) * static_cast<double>(n) /
                             static_cast<double>(n_levels);
        entries[static_cast<std::size_t>(n)] =
            norm * Complex{std::cos(phase), std::sin(phase)};
    }
    return ComplexMatrix::column(std::move(entries));
}

}  // namespace gatewitness
