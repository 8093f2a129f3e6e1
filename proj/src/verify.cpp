#include "gatewitness/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gatewitness/bounds.hpp"
#include "gatewitness/channel.hpp"
#include "gatewitness/charops.hpp"
#include "gatewitness/errors.hpp"
#include "gatewitness/rng.hpp"

namespace gatewitness {

namespace {

class CheckTracker {
public:
    CheckTracker(std::string name, double tolerance)
        : check_{std::move(name), tolerance, 0, 0,
                 std::numeric_limits<double>::infinity(), 0} {}

    void record(double margin, std::uint64_t seed) {
        ++check_.samples;
        if (margin < check_.worst_margin) {
            check_.worst_margin = margin;
            check_.worst_seed = seed;
        }
        if (margin < -check_.tolerance) ++check_.violations;
    }

    VerifyCheck finish() const {
        VerifyCheck c = check_;
        if (c.samples == 0) c.worst_margin = 0.0;
        return c;
    }

private:
    VerifyCheck check_;
};

}  // namespace

std::uint64_t VerifySummary::total_violations() const {
    std::uint64_t n = 0;
    for (const VerifyCheck& c : checks) n += c.violations;
    return n;
}

VerifySummary verify_bounds_campaign(std::uint64_t n_channels, std::uint64_t seed,
                                     std::uint64_t kraus_rank) {
    if (n_channels < 1) throw ArgumentError("need at least one channel");
    if (kraus_rank > 16) throw ArgumentError("kraus_rank must be in [0, 16]");

    const ComplexMatrix cnot = ideal_cnot();
    const QuantumChannel cnot_channel = unitary_channel(cnot);
    const std::vector<CharacteristicOp> ops = enumerate_characteristic_ops(cnot);

    CheckTracker routes("process_fidelity_routes_agree", 1e-10);
    CheckTracker local_bell("local_equals_bell_fidelity", 1e-10);
    CheckTracker pair_lower("pair_bound_lower", 1e-9);
    CheckTracker pair_upper("pair_bound_upper", 1e-9);
    CheckTracker four_lower("four_bound_lower", 1e-9);
    CheckTracker four_upper("four_bound_upper", 1e-9);
    CheckTracker propagation("classical_fidelity_propagation", 1e-9);
    CheckTracker ent_lower("ent_fidelity_lower_bound", 1e-9);
    CheckTracker conc_fid("concurrence_vs_bell_fidelity", 1e-9);
    CheckTracker capability("capability_vs_min_concurrence", 1e-9);

    for (std::uint64_t i = 0; i < n_channels; ++i) {
        const std::uint64_t channel_seed = derive_stream(seed, i);
        const std::size_t rank = kraus_rank == 0
                                     ? static_cast<std::size_t>(i % 16) + 1
                                     : static_cast<std::size_t>(kraus_rank);
        const QuantumChannel ch =
            compose(random_channel(4, rank, channel_seed), cnot_channel);

        // All nine classical fidelities (Bell-basis fidelity for the
        // entangling operations; same averaging formula).
        std::array<double, 9> fid{};
        for (const CharacteristicOp& op : ops) {
            fid[static_cast<std::size_t>(op.input_basis.canonical_index())] =
                classical_fidelity(ch, op).value;
        }
        const auto fid_of = [&fid](Axis c, Axis t) {
            return fid[static_cast<std::size_t>(ProductBasis{c, t}.canonical_index())];
        };
        const double f_xx = fid_of(Axis::X, Axis::X);
        const double f_yx = fid_of(Axis::Y, Axis::X);
        const double f_zy = fid_of(Axis::Z, Axis::Y);
        const double f_zz = fid_of(Axis::Z, Axis::Z);

        const double f_choi = process_fidelity(ch, cnot);
        const double f_trace = process_fidelity_trace_form(ch, cnot);
        routes.record(-std::abs(f_choi - f_trace), channel_seed);

        const ProcessBounds pair = process_bounds_pair(f_zz, f_xx);
        pair_lower.record(f_choi - pair.lower, channel_seed);
        pair_upper.record(pair.upper - f_choi, channel_seed);

        const ProcessBounds four = process_bounds_four(f_zz, f_xx, f_zy, f_yx);
        four_lower.record(f_choi - four.lower, channel_seed);
        four_upper.record(four.upper - f_choi, channel_seed);

        const double propagation_bound = classical_fidelity_lower_bound(f_zz, f_xx);
        for (double f : fid) propagation.record(f - propagation_bound, channel_seed);

        const double ent_bound = ent_fidelity_lower_bound(f_zz, f_xx, f_zy, f_yx);
        const double cap_bound = gate_entanglement_capability(f_zz, f_xx, f_zy, f_yx);
        double min_concurrence = std::numeric_limits<double>::infinity();
        for (const CharacteristicOp& op : ops) {
            if (op.op_class != OpClass::Entangle) continue;
            const double f_bell = entanglement_fidelity_bell(ch, op).value;
            const double f_local = entanglement_fidelity_local(ch, op, cnot).value;
            local_bell.record(-std::abs(f_local - f_bell), channel_seed);
            ent_lower.record(f_bell - ent_bound, channel_seed);
            const auto inputs = op.input_basis.states();
            for (std::size_t n = 0; n < 4; ++n) {
                const ComplexMatrix out = ch.apply(outer(inputs[n]));
                const double f_state =
                    (dagger(op.expected_outputs[n]) * out * op.expected_outputs[n])(0, 0)
                        .real();
                const double c = wootters_concurrence(out);
                conc_fid.record(c - (2.0 * f_state - 1.0), channel_seed);
                min_concurrence = std::min(min_concurrence, c);
            }
        }
        if (cap_bound >= 0.0) {
            capability.record(min_concurrence - cap_bound, channel_seed);
        }
    }

    VerifySummary summary;
    summary.channels = n_channels;
    summary.base_seed = seed;
    summary.kraus_rank = kraus_rank;
    summary.checks = {routes.finish(),     local_bell.finish(), pair_lower.finish(),
                      pair_upper.finish(), four_lower.finish(), four_upper.finish(),
                      propagation.finish(), ent_lower.finish(), conc_fid.finish(),
                      capability.finish()};
    return summary;
}

nlohmann::ordered_json verify_to_json(const VerifySummary& summary) {
    nlohmann::ordered_json j;
    j["schema"] = "gate-witness/verify-v1";
    j["channels"] = summary.channels;
    j["seed"] = summary.base_seed;
    j["kraus_rank"] = summary.kraus_rank;
    j["total_violations"] = summary.total_violations();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const VerifyCheck& c : summary.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["tolerance"] = c.tolerance;
        e["samples"] = c.samples;
        e["violations"] = c.violations;
        e["worst_margin"] = c.worst_margin;
        e["worst_seed"] = c.worst_seed;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string render_verify_summary(const VerifySummary& summary) {
    std::ostringstream out;
    out << "verified " << summary.channels << " random channels (seed "
        << summary.base_seed << ", kraus rank ";
    if (summary.kraus_rank == 0) {
        out << "cycling 1..16";
    } else {
        out << summary.kraus_rank;
    }
    out << ")\n\n";
    out << "  check                            samples   violations  worst margin\n";
    for (const VerifyCheck& c : summary.checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-31s  %8llu  %10llu  %+.3e\n",
                      c.name.c_str(), static_cast<unsigned long long>(c.samples),
                      static_cast<unsigned long long>(c.violations), c.worst_margin);
        out << line;
        if (c.violations > 0) {
            char detail[96];
            std::snprintf(detail, sizeof(detail), "      worst offending seed: %llu\n",
                          static_cast<unsigned long long>(c.worst_seed));
            out << detail;
        }
    }
    out << "\ntotal violations: " << summary.total_violations() << "\n";
    return out.str();
}

}  // namespace gatewitness
