#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gatewitness/channel.hpp"
#include "gatewitness/matrix.hpp"
#include "gatewitness/states.hpp"

namespace gatewitness {

// What a gate does to one product input basis: leave it alone, act as a
// controlled-NOT (control value preserved), act as a reverse controlled-NOT
// (target value preserved), or map every basis state to a maximally
// entangled output.
enum class OpClass { Identity, Cnot, ReverseCnot, Entangle };

std::string_view op_class_name(OpClass c) noexcept;  // "identity", "cnot", ...

// One characteristic observable operation: a product input basis together
// with the ideal gate's images of its four states (in input order) and the
// derived class.
struct CharacteristicOp {
    ProductBasis input_basis;
    std::array<ComplexMatrix, 4> expected_outputs;
    OpClass op_class;

    // "F_zz->zz" for local classes, "F_xz->ent" for entangling ones.
    std::string fidelity_name() const;
    // "product:zz" or "bell".
    std::string measurement_label() const;
};

// A named classical fidelity. std_error is present exactly when shots is.
struct FidelityRecord {
    std::string name;
    double value = 0.0;
    ProductBasis input_basis{Axis::Z, Axis::Z};
    std::string measurement;
    std::optional<std::uint64_t> shots;
    std::optional<double> std_error;
};

// Classifies the (orthonormal) ideal images of a product basis. Throws
// PreconditionError when the image set mixes entangled and product states or
// matches none of the four patterns.
OpClass classify(const std::array<ComplexMatrix, 4>& outputs,
                 const ProductBasis& input_basis);

// The nine characteristic operations of a two-qubit unitary, one per
// (control axis, target axis) pair in canonical order xx, xy, xz, yx, ...
// Classes are derived from the computed outputs, never assumed.
std::vector<CharacteristicOp> enumerate_characteristic_ops(const ComplexMatrix& gate);

// Average probability of the correct outcome when the channel's output is
// measured in the op's expected-output basis, over the four inputs. Exact;
// no shot noise.
FidelityRecord classical_fidelity(const QuantumChannel& ch, const CharacteristicOp& op);

// The accepted-outcome sets of a two-outcome-per-input parity test: for each
// input, the two product outcomes along meas_axes whose joint parity matches
// the ideal output's definite parity.
struct CorrelationSpec {
    ProductBasis input_basis{Axis::Z, Axis::Z};
    std::pair<Axis, Axis> meas_axes{Axis::Z, Axis::Z};
    std::array<int, 4> accepted_parity{};  // +1 or -1 per input
    std::string name;                      // "F_xz->zz"
    std::string measurement;               // "parity:zz"

    // Outcome (i, j) of the measurement basis is accepted for input n when
    // (-1)^(i+j) equals accepted_parity[n].
    bool accepts(int input, int outcome) const noexcept;
    // The four measurement-basis vectors in outcome order 00, 01, 10, 11.
    std::array<ComplexMatrix, 4> measurement_states() const;
};

// Derives the accepted-outcome sets from the ideal gate. Throws
// PreconditionError when some ideal output has indefinite parity along
// meas_axes (the axis pair does not test this operation).
CorrelationSpec make_correlation_spec(const ProductBasis& input_basis,
                                      std::pair<Axis, Axis> meas_axes,
                                      const ComplexMatrix& ideal_gate);

// Average probability that local measurements along meas_axes land in the
// accepted parity class of the ideal output, over the four inputs.
FidelityRecord correlation_fidelity(const QuantumChannel& ch,
                                    const ProductBasis& input_basis,
                                    std::pair<Axis, Axis> meas_axes,
                                    const ComplexMatrix& ideal_gate);

// Average fidelity of the ideal maximally entangled outputs, measured in the
// Bell-like expected-output basis. Requires op_class == Entangle.
FidelityRecord entanglement_fidelity_bell(const QuantumChannel& ch,
                                          const CharacteristicOp& op);

// The same quantity reconstructed from three local parity tests,
// (F_1 + F_2 + F_3 - 1) / 2, over the three axis pairs along which every
// ideal output has definite parity ((x,x),(y,y),(z,z) when the outputs are
// Bell states; frame-rotated pairs for the other entangling bases).
FidelityRecord entanglement_fidelity_local(const QuantumChannel& ch,
                                           const CharacteristicOp& op,
                                           const ComplexMatrix& ideal_gate);

}  // namespace gatewitness
