#include <doctest.h>

#include <cmath>

#include "gatewitness/errors.hpp"
#include "gatewitness/states.hpp"

using namespace gatewitness;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

TEST_CASE("pauli eigenstates match the frozen phase conventions") {
    CHECK(max_abs_diff(pauli_eigenstate({Axis::Z, 0}), ComplexMatrix::column({1.0, 0.0})) ==
          0.0);
    CHECK(max_abs_diff(pauli_eigenstate({Axis::X, 1}),
                       ComplexMatrix::column({kInvSqrt2, -kInvSqrt2})) == 0.0);
    CHECK(max_abs_diff(pauli_eigenstate({Axis::Y, 0}),
                       ComplexMatrix::column({kInvSqrt2, Complex{0.0, kInvSqrt2}})) == 0.0);
}

TEST_CASE("pauli eigenstates are eigenvectors with the right eigenvalue") {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        for (int idx : {0, 1}) {
            const ComplexMatrix v = pauli_eigenstate({a, idx});
            const double eig = idx == 0 ? 1.0 : -1.0;
            CHECK(max_abs_diff(pauli(a) * v, v * Complex{eig, 0.0}) < 1e-15);
        }
        const ComplexMatrix plus = pauli_eigenstate({a, 0});
        const ComplexMatrix minus = pauli_eigenstate({a, 1});
        CHECK(std::abs(inner(plus, minus)) < 1e-15);
        CHECK(std::abs(inner(plus, plus) - Complex{1.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("product states") {
    CHECK(max_abs_diff(product_state({Axis::Z, 0}, {Axis::Z, 1}),
                       ComplexMatrix::column({0.0, 1.0, 0.0, 0.0})) == 0.0);
    CHECK(max_abs_diff(product_state({Axis::X, 0}, {Axis::Z, 0}),
                       ComplexMatrix::column({kInvSqrt2, 0.0, kInvSqrt2, 0.0})) < 1e-15);
    CHECK(max_abs_diff(product_state({Axis::X, 1}, {Axis::X, 1}),
                       ComplexMatrix::column({0.5, -0.5, -0.5, 0.5})) < 1e-15);
}

TEST_CASE("every product basis is orthonormal") {
    for (Axis c : {Axis::X, Axis::Y, Axis::Z}) {
        for (Axis t : {Axis::X, Axis::Y, Axis::Z}) {
            const auto states = ProductBasis{c, t}.states();
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    const Complex want = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                    CHECK(std::abs(inner(states[i], states[j]) - want) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("bell states") {
    CHECK(max_abs_diff(bell_state(BellKind::PhiPlus),
                       ComplexMatrix::column({kInvSqrt2, 0.0, 0.0, kInvSqrt2})) == 0.0);
    CHECK(max_abs_diff(bell_state(BellKind::PsiMinus),
                       ComplexMatrix::column({0.0, kInvSqrt2, -kInvSqrt2, 0.0})) == 0.0);
    CHECK(std::abs(inner(bell_state(BellKind::PhiPlus), bell_state(BellKind::PsiPlus))) ==
          0.0);

    const BellKind kinds[] = {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus,
                              BellKind::PsiMinus};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Complex want = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            CHECK(std::abs(inner(bell_state(kinds[i]), bell_state(kinds[j])) - want) <
                  1e-15);
        }
    }
}

TEST_CASE("fourier basis: convention, orthonormality, unbiasedness") {
    // N=2, k=0 reduces to (1, 1)/sqrt(2)
    CHECK(max_abs_diff(fourier_basis_state(2, 0),
                       ComplexMatrix::column({kInvSqrt2, kInvSqrt2})) < 1e-15);
    CHECK(std::abs(inner(fourier_basis_state(2, 0), fourier_basis_state(2, 1))) < 1e-15);

    for (int n_levels : {2, 3, 5, 8, 17, 32}) {
        for (int k = 0; k < n_levels; ++k) {
            const ComplexMatrix vk = fourier_basis_state(n_levels, k);
            // squared overlap with every reference basis vector is 1/N
            for (int n = 0; n < n_levels; ++n) {
                CHECK(std::abs(std::norm(vk(static_cast<std::size_t>(n), 0)) -
                               1.0 / n_levels) < 1e-12);
            }
            for (int k2 = 0; k2 <= k; ++k2) {
                const Complex want = k == k2 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                CHECK(std::abs(inner(vk, fourier_basis_state(n_levels, k2)) - want) <
                      1e-12);
            }
        }
    }
}

TEST_CASE("fourier basis: argument validation") {
    CHECK_THROWS_AS(fourier_basis_state(2, 2), ArgumentError);
    CHECK_THROWS_AS(fourier_basis_state(2, -1), ArgumentError);
    CHECK_THROWS_AS(fourier_basis_state(1, 0), ArgumentError);
    CHECK_THROWS_AS(fourier_basis_state(33, 0), ArgumentError);
}

TEST_CASE("axis labels and basis labels round-trip") {
    CHECK(axis_label(Axis::X) == 'x');
    CHECK(axis_from_label('z') == Axis::Z);
    CHECK_THROWS_AS(axis_from_label('q'), ArgumentError);

    const ProductBasis zx{Axis::Z, Axis::X};
    CHECK(zx.label() == "zx");
    CHECK(ProductBasis::from_label("zx") == zx);
    CHECK(zx.canonical_index() == 6);
    CHECK_THROWS_AS(ProductBasis::from_label("zzz"), ArgumentError);

    CHECK_THROWS_AS(QubitBasisState(Axis::X, 2), ArgumentError);
}

TEST_CASE("mutual unbiasedness of product bases") {
    CHECK(mutually_unbiased({Axis::Z, Axis::Z}, {Axis::X, Axis::X}));
    CHECK(mutually_unbiased({Axis::X, Axis::Y}, {Axis::Y, Axis::X}));
    CHECK_FALSE(mutually_unbiased({Axis::Z, Axis::Z}, {Axis::Z, Axis::Y}));
    CHECK_FALSE(mutually_unbiased({Axis::Z, Axis::Z}, {Axis::X, Axis::Z}));
    CHECK_FALSE(mutually_unbiased({Axis::Z, Axis::Z}, {Axis::Z, Axis::Z}));
}
