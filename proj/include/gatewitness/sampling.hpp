#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "gatewitness/channel.hpp"
#include "gatewitness/charops.hpp"

namespace gatewitness {

// How many shots to fire per input state and which seed drives them.
struct ShotPlan {
    std::uint64_t shots_per_input = 0;
    std::uint64_t seed = 0;
};

// Shot counts per (input state, measurement outcome). Outcomes are indexed
// over the measurement basis: for a characteristic op that is its
// expected-output basis (outcome n is "correct" for input n); for a parity
// test it is the product basis of the measurement axes in order 00,01,10,11.
struct CountTable {
    std::string op_name;
    std::uint64_t shots_per_input = 0;
    std::uint64_t seed = 0;
    std::array<std::array<std::uint64_t, 4>, 4> counts{};  // [input][outcome]

    bool operator==(const CountTable&) const = default;
};

// Substream key for one measurement of one characteristic operation. The
// generator stream for input i of that measurement is seeded with
// derive_stream(plan.seed, op_key, i), so any evaluation order (or parallel
// evaluation) produces identical counts.
//   op_key = 16 * canonical basis index + measurement code
//   measurement code 0               = expected-output basis
//   measurement code 1 + 3*a + b     = product measurement along axes (a, b)
std::uint64_t sampling_op_key(const ProductBasis& basis);
std::uint64_t sampling_op_key(const ProductBasis& basis, std::pair<Axis, Axis> meas_axes);

// Samples every input of the op's measurement. Outcome probabilities are
// computed analytically, then shots are drawn from the categorical
// distribution; deterministic given the plan.
CountTable sample_op(const QuantumChannel& ch, const CharacteristicOp& op,
                     const ShotPlan& plan);

// Same, for a single input row; sample_op is the loop over the four inputs.
std::array<std::uint64_t, 4> sample_input(const QuantumChannel& ch,
                                          const CharacteristicOp& op,
                                          const ShotPlan& plan, int input);

// Parity-test sampling in the product basis of spec.meas_axes.
CountTable sample_correlation(const QuantumChannel& ch, const CorrelationSpec& spec,
                              const ShotPlan& plan);

// Plugs empirical frequencies into the same accepted-outcome average as the
// analytic fidelity; std_error is the plug-in binomial estimate
// sqrt(sum_n p_n (1 - p_n) / shots) / 4 over the four independent inputs.
FidelityRecord estimate_fidelity(const CountTable& counts, const CharacteristicOp& op);
FidelityRecord estimate_fidelity(const CountTable& counts, const CorrelationSpec& spec);

// {"op": name, "inputs": [{"index": i, "counts": [c0,c1,c2,c3]}, ...],
//  "shots_per_input": n, "seed": s}
nlohmann::ordered_json count_table_to_json(const CountTable& counts);

}  // namespace gatewitness
