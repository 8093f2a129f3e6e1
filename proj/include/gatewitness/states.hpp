#pragma once

#include <array>
#include <string>
#include <string_view>

#include "gatewitness/matrix.hpp"

namespace gatewitness {

enum class Axis { X, Y, Z };

char axis_label(Axis a) noexcept;           // 'x' / 'y' / 'z'
Axis axis_from_label(char c);               // inverse; ArgumentError otherwise

ComplexMatrix pauli(Axis a);
ComplexMatrix identity2();

struct QubitBasisState {
    QubitBasisState(Axis a, int i);
    Axis axis;
    int index;  // 0 = +1 eigenstate, 1 = -1 eigenstate
};

// Normalized eigenvector of the named Pauli with eigenvalue +1 (index 0) or
// -1 (index 1). Phase conventions are frozen project-wide:
//   |0x> = (|0>+|1>)/sqrt2   |1x> = (|0>-|1>)/sqrt2
//   |0y> = (|0>+i|1>)/sqrt2  |1y> = (|0>-i|1>)/sqrt2
ComplexMatrix pauli_eigenstate(const QubitBasisState& s);

// |control; target>: the control qubit is the left (first) tensor factor.
ComplexMatrix product_state(const QubitBasisState& control,
                            const QubitBasisState& target);

// A two-qubit product basis: all four eigenstate pairs of (control axis,
// target axis).
struct ProductBasis {
    Axis control;
    Axis target;

    // The four basis vectors in index order (c,t) = 00, 01, 10, 11.
    std::array<ComplexMatrix, 4> states() const;
    std::string label() const;                      // e.g. "zx"
    int canonical_index() const noexcept;           // 0..8, (control, target) with x<y<z
    static ProductBasis from_label(std::string_view label);

    bool operator==(const ProductBasis&) const = default;
};

// True when all 16 pairwise squared overlaps between the two bases equal 1/4
// (within 1e-10), i.e. the bases are mutually unbiased. For product bases
// this holds exactly when both the control and the target axes differ.
bool mutually_unbiased(const ProductBasis& a, const ProductBasis& b);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

ComplexMatrix bell_state(BellKind kind);

// k-th state of the basis Fourier-conjugate to the reference basis {|n>} of
// an N-level system: component n equals exp(-i 2 pi k n / N) / sqrt(N).
// Every squared overlap with the reference basis is 1/N.
ComplexMatrix fourier_basis_state(int n_levels, int k);

}  // namespace gatewitness
