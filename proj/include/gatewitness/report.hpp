#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gatewitness/bounds.hpp"
#include "gatewitness/charops.hpp"
#include "gatewitness/config.hpp"

namespace gatewitness {

// Everything one scenario evaluation produces: the requested fidelity
// records, the four-fidelity process bounds, entanglement bounds, and (in
// analytic mode) the exact oracle values they must bracket.
struct BoundsReport {
    std::string gate_name;
    NoiseSpec noise;
    ScenarioConfig::Mode mode = ScenarioConfig::Mode::Analytic;

    std::vector<FidelityRecord> fidelities;
    ProcessBounds process_bounds;
    // Propagated shot noise on the bounds (sampled mode only).
    std::optional<double> bounds_std_error_lower;
    std::optional<double> bounds_std_error_upper;

    double ent_fidelity_lower = 0.0;
    double concurrence_lower = 0.0;

    // Oracle values, analytic mode only.
    std::optional<double> process_fidelity_exact;
    // Wootters concurrence of every entangling-op output, entangling ops in
    // canonical basis order, four inputs each.
    std::optional<std::vector<double>> concurrence_exact_per_input;

    std::optional<ShotPlan> plan;  // sampled mode only
};

BoundsReport build_report(const ScenarioConfig& cfg);

Json report_to_json(const BoundsReport& report);
BoundsReport report_from_json(const Json& j);

// Aligned plain-text rendering for humans.
std::string render_report_table(const BoundsReport& report);

// 3x3 grid of op-class labels indexed [control axis][target axis] with axes
// ordered x, y, z; cells whose images fit no class read "other".
std::array<std::array<std::string, 3>, 3> classification_table(const ComplexMatrix& gate);
std::string render_classification_table(
    const std::array<std::array<std::string, 3>, 3>& table);

// Evaluates the scenario across a grid of noise-parameter values.
struct SweepResult {
    std::string parameter;        // "p" or "theta"
    std::vector<double> values;   // ascending
    std::vector<BoundsReport> rows;
    // First grid value whose capability bound is <= 0, if any.
    std::optional<double> capability_zero_crossing;
};

SweepResult run_sweep(const ScenarioConfig& base, double lo, double hi, int steps);
Json sweep_to_json(const SweepResult& sweep);
std::string render_sweep_table(const SweepResult& sweep);

}  // namespace gatewitness
