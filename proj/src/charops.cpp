#include "gatewitness/charops.hpp"

#include <algorithm>
#include <cmath>

#include "gatewitness/errors.hpp"

namespace gatewitness {

namespace {

constexpr double kOrthoTol = 1e-10;
constexpr double kMaxEntTol = 1e-10;
constexpr double kPhaseMatchTol = 1e-9;  // |overlap| >= 1 - tol means "equal up to phase"

// Reduced state of the control qubit of a pure two-qubit state.
ComplexMatrix reduced_control(const ComplexMatrix& v) {
    ComplexMatrix red(2, 2);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            Complex s{0.0, 0.0};
            for (std::size_t t = 0; t < 2; ++t) {
                s += v(2 * a + t, 0) * std::conj(v(2 * b + t, 0));
            }
            red(a, b) = s;
        }
    }
    return red;
}

bool maximally_entangled(const ComplexMatrix& v) {
    ComplexMatrix half = ComplexMatrix::identity(2) * Complex{0.5, 0.0};
    return max_abs_diff(reduced_control(v), half) <= kMaxEntTol;
}

double clamp_probability(double v, const char* what) {
    if (v < -1e-10 || v > 1.0 + 1e-10) {
        throw InternalError(std::string(what) + " outside [0, 1]");
    }
    return std::min(1.0, std::max(0.0, v));
}

// <f| ch(|psi><psi|) |f>
double output_fidelity(const QuantumChannel& ch, const ComplexMatrix& input,
                       const ComplexMatrix& target) {
    const ComplexMatrix out = ch.apply(outer(input));
    return (dagger(target) * out * target)(0, 0).real();
}

void require_orthonormal(const std::array<ComplexMatrix, 4>& vs, double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (vs[i].cols() != 1 || vs[i].rows() != 4) {
            throw ArgumentError("expected 4-component column vectors");
        }
        for (std::size_t j = 0; j < 4; ++j) {
            const Complex g = inner(vs[i], vs[j]);
            const Complex want = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(g - want) > tol) {
                throw PreconditionError("output set is not orthonormal");
            }
        }
    }
}

}  // namespace

std::string_view op_class_name(OpClass c) noexcept {
    switch (c) {
        case OpClass::Identity: return "identity";
        case OpClass::Cnot: return "cnot";
        case OpClass::ReverseCnot: return "reverse-cnot";
        default: return "entangle";
    }
}

std::string CharacteristicOp::fidelity_name() const {
    const std::string in = input_basis.label();
    return "F_" + in + "->" + (op_class == OpClass::Entangle ? "ent" : in);
}

std::string CharacteristicOp::measurement_label() const {
    return op_class == OpClass::Entangle ? "bell" : "product:" + input_basis.label();
}

OpClass classify(const std::array<ComplexMatrix, 4>& outputs,
                 const ProductBasis& input_basis) {
    require_orthonormal(outputs, kOrthoTol);

    int entangled = 0;
    for (const ComplexMatrix& v : outputs) {
        if (maximally_entangled(v)) ++entangled;
    }
    if (entangled == 4) return OpClass::Entangle;
    if (entangled != 0) {
        throw PreconditionError(
            "gate maps the " + input_basis.label() +
            " basis to a mix of entangled and non-entangled states");
    }

    // All outputs should now be product states of the input basis; find the
    // induced permutation of (control, target) indices.
    const auto basis_states = input_basis.states();
    std::array<int, 4> perm{-1, -1, -1, -1};
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4; ++m) {
            if (std::abs(inner(basis_states[static_cast<std::size_t>(m)],
                               outputs[static_cast<std::size_t>(n)])) >=
                1.0 - kPhaseMatchTol) {
                perm[static_cast<std::size_t>(n)] = m;
                break;
            }
        }
        if (perm[static_cast<std::size_t>(n)] < 0) {
            throw PreconditionError("gate image of the " + input_basis.label() +
                                    " basis is not a basis permutation");
        }
    }

    bool is_identity = true;
    bool control_preserved = true;
    bool target_preserved = true;
    for (int n = 0; n < 4; ++n) {
        const int m = perm[static_cast<std::size_t>(n)];
        if (m != n) is_identity = false;
        if ((m >> 1) != (n >> 1)) control_preserved = false;
        if ((m & 1) != (n & 1)) target_preserved = false;
    }
    if (is_identity) return OpClass::Identity;
    if (control_preserved) return OpClass::Cnot;
    if (target_preserved) return OpClass::ReverseCnot;
    throw PreconditionError("gate permutes the " + input_basis.label() +
                            " basis without preserving either qubit");
}

std::vector<CharacteristicOp> enumerate_characteristic_ops(const ComplexMatrix& gate) {
    if (gate.rows() != 4 || gate.cols() != 4) {
        throw ArgumentError("characteristic operations need a 4x4 gate");
    }
    if (unitarity_defect(gate) > 1e-10) {
        throw PreconditionError("gate is not unitary within 1e-10");
    }
    std::vector<CharacteristicOp> ops;
    ops.reserve(9);
    for (Axis c : {Axis::X, Axis::Y, Axis::Z}) {
        for (Axis t : {Axis::X, Axis::Y, Axis::Z}) {
            const ProductBasis basis{c, t};
            const auto inputs = basis.states();
            std::array<ComplexMatrix, 4> outputs;
            for (std::size_t n = 0; n < 4; ++n) outputs[n] = gate * inputs[n];
            const OpClass cls = classify(outputs, basis);
            ops.push_back(CharacteristicOp{basis, std::move(outputs), cls});
        }
    }
    return ops;
}

FidelityRecord classical_fidelity(const QuantumChannel& ch, const CharacteristicOp& op) {
    require_orthonormal(op.expected_outputs, kOrthoTol);
    const auto inputs = op.input_basis.states();
    double sum = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        sum += output_fidelity(ch, inputs[n], op.expected_outputs[n]);
    }
    FidelityRecord rec;
    rec.name = op.fidelity_name();
    rec.value = clamp_probability(sum / 4.0, "classical fidelity");
    rec.input_basis = op.input_basis;
    rec.measurement = op.measurement_label();
    return rec;
}

bool CorrelationSpec::accepts(int input, int outcome) const noexcept {
    const int parity = ((outcome >> 1) + (outcome & 1)) % 2 == 0 ? 1 : -1;
    return parity == accepted_parity[static_cast<std::size_t>(input)];
}

std::array<ComplexMatrix, 4> CorrelationSpec::measurement_states() const {
    return ProductBasis{meas_axes.first, meas_axes.second}.states();
}

CorrelationSpec make_correlation_spec(const ProductBasis& input_basis,
                                      std::pair<Axis, Axis> meas_axes,
                                      const ComplexMatrix& ideal_gate) {
    if (ideal_gate.rows() != 4 || ideal_gate.cols() != 4 ||
        unitarity_defect(ideal_gate) > 1e-10) {
        throw PreconditionError("ideal gate must be a 4x4 unitary");
    }
    const ComplexMatrix observable =
        kron(pauli(meas_axes.first), pauli(meas_axes.second));
    CorrelationSpec spec;
    spec.input_basis = input_basis;
    spec.meas_axes = meas_axes;
    const auto inputs = input_basis.states();
    for (std::size_t n = 0; n < 4; ++n) {
        const ComplexMatrix out = ideal_gate * inputs[n];
        const double expectation = (dagger(out) * observable * out)(0, 0).real();
        if (std::abs(expectation) < 1.0 - kPhaseMatchTol) {
            throw PreconditionError(
                "ideal output has indefinite parity along the requested axes");
        }
        spec.accepted_parity[n] = expectation > 0.0 ? 1 : -1;
    }
    const std::string axes{axis_label(meas_axes.first), axis_label(meas_axes.second)};
    spec.name = "F_" + input_basis.label() + "->" + axes;
    spec.measurement = "parity:" + axes;
    return spec;
}

FidelityRecord correlation_fidelity(const QuantumChannel& ch,
                                    const ProductBasis& input_basis,
                                    std::pair<Axis, Axis> meas_axes,
                                    const ComplexMatrix& ideal_gate) {
    const CorrelationSpec spec = make_correlation_spec(input_basis, meas_axes, ideal_gate);
    const auto inputs = input_basis.states();
    const auto meas = spec.measurement_states();
    double sum = 0.0;
    for (int n = 0; n < 4; ++n) {
        const ComplexMatrix out = ch.apply(outer(inputs[static_cast<std::size_t>(n)]));
        for (int m = 0; m < 4; ++m) {
            if (!spec.accepts(n, m)) continue;
            const ComplexMatrix& b = meas[static_cast<std::size_t>(m)];
            sum += (dagger(b) * out * b)(0, 0).real();
        }
    }
    FidelityRecord rec;
    rec.name = spec.name;
    rec.value = clamp_probability(sum / 4.0, "correlation fidelity");
    rec.input_basis = input_basis;
    rec.measurement = spec.measurement;
    return rec;
}

FidelityRecord entanglement_fidelity_bell(const QuantumChannel& ch,
                                          const CharacteristicOp& op) {
    if (op.op_class != OpClass::Entangle) {
        throw ArgumentError("Bell-basis fidelity requires an entangling operation");
    }
    return classical_fidelity(ch, op);
}

FidelityRecord entanglement_fidelity_local(const QuantumChannel& ch,
                                           const CharacteristicOp& op,
                                           const ComplexMatrix& ideal_gate) {
    if (op.op_class != OpClass::Entangle) {
        throw ArgumentError("local reconstruction requires an entangling operation");
    }
    // The three axis pairs along which every ideal output has definite
    // parity. When the outputs are the Bell states these are (x,x), (y,y),
    // (z,z); the other entangling bases produce Bell states only up to a
    // local frame rotation, which permutes the pairs (e.g. xx, yz, zy).
    std::vector<std::pair<Axis, Axis>> pairs;
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
            const ComplexMatrix observable = kron(pauli(a), pauli(b));
            bool definite = true;
            for (const ComplexMatrix& out : op.expected_outputs) {
                const double e = (dagger(out) * observable * out)(0, 0).real();
                if (std::abs(e) < 1.0 - kPhaseMatchTol) {
                    definite = false;
                    break;
                }
            }
            if (definite) pairs.emplace_back(a, b);
        }
    }
    if (pairs.size() != 3) {
        throw PreconditionError("the " + op.input_basis.label() +
                                " outputs do not define three parity tests");
    }
    double sum = 0.0;
    std::string axes;
    for (const auto& [a, b] : pairs) {
        sum += correlation_fidelity(ch, op.input_basis, {a, b}, ideal_gate).value;
        if (!axes.empty()) axes += '+';
        axes += axis_label(a);
        axes += axis_label(b);
    }
    FidelityRecord rec;
    rec.name = op.fidelity_name();
    rec.value = clamp_probability((sum - 1.0) / 2.0, "local entanglement fidelity");
    rec.input_basis = op.input_basis;
    rec.measurement = "parity:" + axes;
    return rec;
}

}  // namespace gatewitness
