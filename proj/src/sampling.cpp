#include "gatewitness/sampling.hpp"

#include <cmath>

#include "gatewitness/errors.hpp"
#include "gatewitness/rng.hpp"

namespace gatewitness {

namespace {

void require_plan(const ShotPlan& plan) {
    if (plan.shots_per_input < 1) {
        throw ArgumentError("shots_per_input must be at least 1");
    }
}

std::array<double, 4> outcome_probabilities(const QuantumChannel& ch,
                                            const ComplexMatrix& input,
                                            const std::array<ComplexMatrix, 4>& basis) {
    const ComplexMatrix out = ch.apply(outer(input));
    std::array<double, 4> p{};
    double total = 0.0;
    for (std::size_t m = 0; m < 4; ++m) {
        p[m] = (dagger(basis[m]) * out * basis[m])(0, 0).real();
        total += p[m];
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw InternalError("outcome probabilities do not sum to 1");
    }
    return p;
}

std::array<std::uint64_t, 4> draw_counts(const std::array<double, 4>& p,
                                         std::uint64_t shots, std::uint64_t stream_seed) {
    SplitMix64 gen(stream_seed);
    std::array<std::uint64_t, 4> counts{};
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = gen.next_double();
        double cum = 0.0;
        std::size_t outcome = 3;  // catch-all for u beyond accumulated rounding
        for (std::size_t m = 0; m < 4; ++m) {
            cum += p[m];
            if (u < cum) {
                outcome = m;
                break;
            }
        }
        ++counts[outcome];
    }
    return counts;
}

double binomial_std_error(const std::array<double, 4>& p_hat, std::uint64_t shots) {
    double var = 0.0;
    for (double p : p_hat) var += p * (1.0 - p) / static_cast<double>(shots);
    return std::sqrt(var) / 4.0;
}

}  // namespace

std::uint64_t sampling_op_key(const ProductBasis& basis) {
    return static_cast<std::uint64_t>(basis.canonical_index()) * 16u;
}

std::uint64_t sampling_op_key(const ProductBasis& basis,
                              std::pair<Axis, Axis> meas_axes) {
    const auto code = 1u + 3u * static_cast<std::uint64_t>(meas_axes.first) +
                      static_cast<std::uint64_t>(meas_axes.second);
    return static_cast<std::uint64_t>(basis.canonical_index()) * 16u + code;
}

std::array<std::uint64_t, 4> sample_input(const QuantumChannel& ch,
                                          const CharacteristicOp& op,
                                          const ShotPlan& plan, int input) {
    require_plan(plan);
    if (input < 0 || input > 3) throw ArgumentError("input index must be in [0, 3]");
    const auto inputs = op.input_basis.states();
    const auto p = outcome_probabilities(ch, inputs[static_cast<std::size_t>(input)],
                                         op.expected_outputs);
    const std::uint64_t stream =
        derive_stream(plan.seed, sampling_op_key(op.input_basis),
                      static_cast<std::uint64_t>(input));
    return draw_counts(p, plan.shots_per_input, stream);
}

CountTable sample_op(const QuantumChannel& ch, const CharacteristicOp& op,
                     const ShotPlan& plan) {
    require_plan(plan);
    CountTable table;
    table.op_name = op.fidelity_name();
    table.shots_per_input = plan.shots_per_input;
    table.seed = plan.seed;
    for (int n = 0; n < 4; ++n) {
        table.counts[static_cast<std::size_t>(n)] = sample_input(ch, op, plan, n);
    }
    return table;
}

CountTable sample_correlation(const QuantumChannel& ch, const CorrelationSpec& spec,
                              const ShotPlan& plan) {
    require_plan(plan);
    const auto inputs = spec.input_basis.states();
    const auto meas = spec.measurement_states();
    CountTable table;
    table.op_name = spec.name;
    table.shots_per_input = plan.shots_per_input;
    table.seed = plan.seed;
    for (int n = 0; n < 4; ++n) {
        const auto p = outcome_probabilities(ch, inputs[static_cast<std::size_t>(n)], meas);
        const std::uint64_t stream =
            derive_stream(plan.seed, sampling_op_key(spec.input_basis, spec.meas_axes),
                          static_cast<std::uint64_t>(n));
        table.counts[static_cast<std::size_t>(n)] =
            draw_counts(p, plan.shots_per_input, stream);
    }
    return table;
}

FidelityRecord estimate_fidelity(const CountTable& counts, const CharacteristicOp& op) {
    if (counts.shots_per_input < 1) throw ArgumentError("count table has no shots");
    std::array<double, 4> p_hat{};
    double sum = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        std::uint64_t total = 0;
        for (std::uint64_t c : counts.counts[n]) total += c;
        if (total != counts.shots_per_input) {
            throw InternalError("count table row does not sum to shots_per_input");
        }
        p_hat[n] = static_cast<double>(counts.counts[n][n]) /
                   static_cast<double>(counts.shots_per_input);
        sum += p_hat[n];
    }
    FidelityRecord rec;
    rec.name = op.fidelity_name();
    rec.value = sum / 4.0;
    rec.input_basis = op.input_basis;
    rec.measurement = op.measurement_label();
    rec.shots = counts.shots_per_input;
    rec.std_error = binomial_std_error(p_hat, counts.shots_per_input);
    return rec;
}

FidelityRecord estimate_fidelity(const CountTable& counts, const CorrelationSpec& spec) {
    if (counts.shots_per_input < 1) throw ArgumentError("count table has no shots");
    std::array<double, 4> p_hat{};
    double sum = 0.0;
    for (int n = 0; n < 4; ++n) {
        std::uint64_t total = 0;
        std::uint64_t accepted = 0;
        for (int m = 0; m < 4; ++m) {
            const std::uint64_t c =
                counts.counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            total += c;
            if (spec.accepts(n, m)) accepted += c;
        }
        if (total != counts.shots_per_input) {
            throw InternalError("count table row does not sum to shots_per_input");
        }
        p_hat[static_cast<std::size_t>(n)] =
            static_cast<double>(accepted) / static_cast<double>(counts.shots_per_input);
        sum += p_hat[static_cast<std::size_t>(n)];
    }
    FidelityRecord rec;
    rec.name = spec.name;
    rec.value = sum / 4.0;
    rec.input_basis = spec.input_basis;
    rec.measurement = spec.measurement;
    rec.shots = counts.shots_per_input;
    rec.std_error = binomial_std_error(p_hat, counts.shots_per_input);
    return rec;
}

nlohmann::ordered_json count_table_to_json(const CountTable& counts) {
    nlohmann::ordered_json j;
    j["op"] = counts.op_name;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < 4; ++n) {
        nlohmann::ordered_json row;
        row["index"] = n;
        row["counts"] = counts.counts[n];
        inputs.push_back(std::move(row));
    }
    j["inputs"] = std::move(inputs);
    j["shots_per_input"] = counts.shots_per_input;
    j["seed"] = counts.seed;
    return j;
}

}  // namespace gatewitness
