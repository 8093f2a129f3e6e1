#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gatewitness/channel.hpp"
#include "gatewitness/matrix.hpp"
#include "gatewitness/sampling.hpp"

namespace gatewitness {

using Json = nlohmann::ordered_json;

// Noise model attached after the ideal gate. "ideal" means no noise at all.
struct NoiseSpec {
    enum class Type { Ideal, Depolarizing, Dephasing, Overrotation, Random };

    Type type = Type::Ideal;
    double p = 0.0;                 // depolarizing, dephasing
    Qubit qubit = Qubit::Control;   // dephasing
    Axis axis = Axis::Z;            // dephasing
    double theta = 0.0;             // overrotation
    std::size_t kraus_rank = 1;     // random
    std::uint64_t seed = 0;         // random

    static NoiseSpec from_json(const Json& j);
    Json to_json() const;

    // The noise channel alone; nullopt for the ideal spec.
    std::optional<QuantumChannel> channel() const;

    // Name of the sweepable numeric parameter ("p" or "theta"), if any.
    std::optional<std::string> sweep_parameter() const;
    // Copy of this spec with the sweep parameter replaced.
    NoiseSpec with_parameter(double value) const;
};

// One evaluation scenario: gate, noise, evaluation mode, optional shot plan,
// fidelity selection and output path. Parsing validates everything up front
// and rejects unknown keys.
struct ScenarioConfig {
    enum class Mode { Analytic, Sampled };

    ComplexMatrix gate;              // 4x4 unitary
    std::string gate_name;           // "cnot" or "custom"
    NoiseSpec noise;
    Mode mode = Mode::Analytic;
    ShotPlan plan;                   // used when mode == Sampled
    std::vector<std::string> fidelities;  // basis labels; empty means all nine
    std::optional<std::string> output_path;

    static ScenarioConfig from_json(const Json& j);
    static ScenarioConfig from_text(const std::string& text);

    // Noise composed after the gate (gate-then-noise).
    QuantumChannel build_channel() const;
};

}  // namespace gatewitness
