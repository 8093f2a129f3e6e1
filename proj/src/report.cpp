#include "gatewitness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "gatewitness/errors.hpp"
#include "gatewitness/sampling.hpp"

namespace gatewitness {

namespace {

const std::array<const char*, 9> kCanonicalBases = {"xx", "xy", "xz", "yx", "yy",
                                                    "yz", "zx", "zy", "zz"};

struct EvaluatedOp {
    CharacteristicOp op;
    FidelityRecord record;
};

FidelityRecord evaluate_op(const QuantumChannel& ch, const CharacteristicOp& op,
                           const ScenarioConfig& cfg) {
    if (cfg.mode == ScenarioConfig::Mode::Sampled) {
        return estimate_fidelity(sample_op(ch, op, cfg.plan), op);
    }
    return op.op_class == OpClass::Entangle ? entanglement_fidelity_bell(ch, op)
                                            : classical_fidelity(ch, op);
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

}  // namespace

BoundsReport build_report(const ScenarioConfig& cfg) {
    const QuantumChannel ch = cfg.build_channel();
    const std::vector<CharacteristicOp> ops = enumerate_characteristic_ops(cfg.gate);

    // The four local fidelities feeding every bound are always evaluated;
    // the report body lists the requested subset (default: all nine).
    const std::vector<std::string> bound_bases = {"zz", "xx", "zy", "yx"};
    std::vector<std::string> wanted = cfg.fidelities;
    if (wanted.empty()) {
        wanted.assign(kCanonicalBases.begin(), kCanonicalBases.end());
    }

    std::map<std::string, EvaluatedOp> evaluated;
    auto evaluate = [&](const std::string& label) {
        if (evaluated.contains(label)) return;
        const int idx = ProductBasis::from_label(label).canonical_index();
        const CharacteristicOp& op = ops[static_cast<std::size_t>(idx)];
        evaluated.emplace(label, EvaluatedOp{op, evaluate_op(ch, op, cfg)});
    };
    for (const std::string& label : bound_bases) evaluate(label);
    for (const std::string& label : wanted) evaluate(label);

    BoundsReport report;
    report.gate_name = cfg.gate_name;
    report.noise = cfg.noise;
    report.mode = cfg.mode;
    for (const char* label : kCanonicalBases) {
        if (std::find(wanted.begin(), wanted.end(), label) != wanted.end()) {
            report.fidelities.push_back(evaluated.at(label).record);
        }
    }

    const FidelityRecord& f_zz = evaluated.at("zz").record;
    const FidelityRecord& f_xx = evaluated.at("xx").record;
    const FidelityRecord& f_zy = evaluated.at("zy").record;
    const FidelityRecord& f_yx = evaluated.at("yx").record;

    report.process_bounds =
        process_bounds_four(f_zz.value, f_xx.value, f_zy.value, f_yx.value);
    report.process_bounds.inputs_used = {f_zz.name, f_xx.name, f_zy.name, f_yx.name};
    report.ent_fidelity_lower =
        ent_fidelity_lower_bound(f_zz.value, f_xx.value, f_zy.value, f_yx.value);
    report.concurrence_lower =
        gate_entanglement_capability(f_zz.value, f_xx.value, f_zy.value, f_yx.value);

    if (cfg.mode == ScenarioConfig::Mode::Sampled) {
        report.plan = cfg.plan;
        // lower = max(zz, zy) + max(xx, yx) - 1: the two argmax errors add in
        // quadrature; upper = min of the four: the argmin error carries over.
        const FidelityRecord& amax1 = f_zz.value >= f_zy.value ? f_zz : f_zy;
        const FidelityRecord& amax2 = f_xx.value >= f_yx.value ? f_xx : f_yx;
        const double s1 = amax1.std_error.value_or(0.0);
        const double s2 = amax2.std_error.value_or(0.0);
        report.bounds_std_error_lower = std::sqrt(s1 * s1 + s2 * s2);
        const FidelityRecord* amin = &f_zz;
        for (const FidelityRecord* r : {&f_xx, &f_zy, &f_yx}) {
            if (r->value < amin->value) amin = r;
        }
        report.bounds_std_error_upper = amin->std_error.value_or(0.0);
    } else {
        report.process_fidelity_exact = process_fidelity(ch, cfg.gate);
        if (*report.process_fidelity_exact < report.process_bounds.lower - 1e-9 ||
            *report.process_fidelity_exact > report.process_bounds.upper + 1e-9) {
            throw InternalError("process-fidelity oracle escaped its bounds");
        }
        std::vector<double> concurrences;
        for (const CharacteristicOp& op : ops) {
            if (op.op_class != OpClass::Entangle) continue;
            for (const ComplexMatrix& input : op.input_basis.states()) {
                concurrences.push_back(wootters_concurrence(ch.apply(outer(input))));
            }
        }
        report.concurrence_exact_per_input = std::move(concurrences);
    }
    return report;
}

Json report_to_json(const BoundsReport& report) {
    Json j;
    j["schema"] = "gate-witness/report-v1";
    j["gate"] = report.gate_name;
    j["noise"] = report.noise.to_json();
    j["mode"] = report.mode == ScenarioConfig::Mode::Sampled ? "sampled" : "analytic";
    Json fids = Json::array();
    for (const FidelityRecord& r : report.fidelities) {
        Json f;
        f["name"] = r.name;
        f["value"] = r.value;
        f["input_basis"] = r.input_basis.label();
        f["measurement"] = r.measurement;
        if (r.shots) f["shots"] = *r.shots;
        if (r.std_error) f["std_error"] = *r.std_error;
        fids.push_back(std::move(f));
    }
    j["fidelities"] = std::move(fids);
    Json pb;
    pb["lower"] = report.process_bounds.lower;
    pb["upper"] = report.process_bounds.upper;
    pb["inputs_used"] = report.process_bounds.inputs_used;
    pb["vacuous"] = report.process_bounds.vacuous();
    if (report.bounds_std_error_lower) pb["std_error_lower"] = *report.bounds_std_error_lower;
    if (report.bounds_std_error_upper) pb["std_error_upper"] = *report.bounds_std_error_upper;
    j["process_bounds"] = std::move(pb);
    j["ent_fidelity_lower"] = report.ent_fidelity_lower;
    j["concurrence_lower"] = report.concurrence_lower;
    j["process_fidelity_exact"] =
        report.process_fidelity_exact ? Json(*report.process_fidelity_exact) : Json(nullptr);
    j["concurrence_exact_per_input"] = report.concurrence_exact_per_input
                                           ? Json(*report.concurrence_exact_per_input)
                                           : Json(nullptr);
    if (report.plan) {
        Json s;
        s["shots_per_input"] = report.plan->shots_per_input;
        s["seed"] = report.plan->seed;
        j["sampling"] = std::move(s);
    } else {
        j["sampling"] = nullptr;
    }
    return j;
}

BoundsReport report_from_json(const Json& j) {
    try {
        if (j.at("schema").get<std::string>() != "gate-witness/report-v1") {
            throw ArgumentError("unsupported report schema");
        }
        BoundsReport report;
        report.gate_name = j.at("gate").get<std::string>();
        report.noise = NoiseSpec::from_json(j.at("noise"));
        report.mode = j.at("mode").get<std::string>() == "sampled"
                          ? ScenarioConfig::Mode::Sampled
                          : ScenarioConfig::Mode::Analytic;
        for (const Json& f : j.at("fidelities")) {
            FidelityRecord r;
            r.name = f.at("name").get<std::string>();
            r.value = f.at("value").get<double>();
            r.input_basis = ProductBasis::from_label(f.at("input_basis").get<std::string>());
            r.measurement = f.at("measurement").get<std::string>();
            if (f.contains("shots")) r.shots = f.at("shots").get<std::uint64_t>();
            if (f.contains("std_error")) r.std_error = f.at("std_error").get<double>();
            if (r.shots.has_value() != r.std_error.has_value()) {
                throw ArgumentError("fidelity record must carry shots and std_error together");
            }
            if (!(r.value >= 0.0 && r.value <= 1.0)) {
                throw ArgumentError("fidelity value outside [0, 1]");
            }
            report.fidelities.push_back(std::move(r));
        }
        const Json& pb = j.at("process_bounds");
        report.process_bounds.lower = pb.at("lower").get<double>();
        report.process_bounds.upper = pb.at("upper").get<double>();
        report.process_bounds.inputs_used =
            pb.at("inputs_used").get<std::vector<std::string>>();
        if (pb.contains("std_error_lower")) {
            report.bounds_std_error_lower = pb.at("std_error_lower").get<double>();
        }
        if (pb.contains("std_error_upper")) {
            report.bounds_std_error_upper = pb.at("std_error_upper").get<double>();
        }
        report.ent_fidelity_lower = j.at("ent_fidelity_lower").get<double>();
        report.concurrence_lower = j.at("concurrence_lower").get<double>();
        if (!j.at("process_fidelity_exact").is_null()) {
            report.process_fidelity_exact = j.at("process_fidelity_exact").get<double>();
        }
        if (!j.at("concurrence_exact_per_input").is_null()) {
            report.concurrence_exact_per_input =
                j.at("concurrence_exact_per_input").get<std::vector<double>>();
        }
        if (!j.at("sampling").is_null()) {
            ShotPlan plan;
            plan.shots_per_input = j.at("sampling").at("shots_per_input").get<std::uint64_t>();
            plan.seed = j.at("sampling").at("seed").get<std::uint64_t>();
            report.plan = plan;
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("malformed report JSON: ") + e.what());
    }
}

std::string render_report_table(const BoundsReport& report) {
    std::ostringstream out;
    out << "gate: " << report.gate_name << "   noise: " << report.noise.to_json().dump()
        << "   mode: "
        << (report.mode == ScenarioConfig::Mode::Sampled ? "sampled" : "analytic")
        << "\n\n";
    out << "  name        measurement       value            std_error\n";
    for (const FidelityRecord& r : report.fidelities) {
        char line[128];
        std::snprintf(line, sizeof(line), "  %-10s  %-16s  %.12f  %s\n", r.name.c_str(),
                      r.measurement.c_str(), r.value,
                      r.std_error ? format_real(*r.std_error).c_str() : "-");
        out << line;
    }
    out << "\nprocess fidelity bounds: [" << format_real(report.process_bounds.lower)
        << ", " << format_real(report.process_bounds.upper) << "]";
    if (report.process_bounds.vacuous()) out << "  (lower bound vacuous)";
    if (report.bounds_std_error_lower) {
        out << "  std_error [" << format_real(*report.bounds_std_error_lower) << ", "
            << format_real(*report.bounds_std_error_upper) << "]";
    }
    out << "\n";
    if (report.process_fidelity_exact) {
        out << "process fidelity exact:  " << format_real(*report.process_fidelity_exact)
            << "\n";
    }
    out << "entanglement fidelity lower bound: " << format_real(report.ent_fidelity_lower)
        << "\n";
    out << "entanglement capability (concurrence lower bound): "
        << format_real(report.concurrence_lower) << "\n";
    if (report.concurrence_exact_per_input && !report.concurrence_exact_per_input->empty()) {
        const auto& c = *report.concurrence_exact_per_input;
        out << "exact output concurrences (entangling ops, four inputs each):\n";
        for (std::size_t i = 0; i < c.size(); i += 4) {
            out << " ";
            for (std::size_t k = i; k < std::min(i + 4, c.size()); ++k) {
                out << " " << format_real(c[k]);
            }
            out << "\n";
        }
    }
    return out.str();
}

std::array<std::array<std::string, 3>, 3> classification_table(const ComplexMatrix& gate) {
    if (gate.rows() != 4 || gate.cols() != 4 || unitarity_defect(gate) > 1e-10) {
        throw PreconditionError("classification table requires a 4x4 unitary");
    }
    std::array<std::array<std::string, 3>, 3> table;
    for (Axis c : {Axis::X, Axis::Y, Axis::Z}) {
        for (Axis t : {Axis::X, Axis::Y, Axis::Z}) {
            const ProductBasis basis{c, t};
            const auto inputs = basis.states();
            std::array<ComplexMatrix, 4> outputs;
            for (std::size_t n = 0; n < 4; ++n) outputs[n] = gate * inputs[n];
            std::string cell;
            try {
                cell = std::string(op_class_name(classify(outputs, basis)));
            } catch (const PreconditionError&) {
                cell = "other";
            }
            table[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)] = cell;
        }
    }
    return table;
}

std::string render_classification_table(
    const std::array<std::array<std::string, 3>, 3>& table) {
    std::ostringstream out;
    out << "            target x      target y      target z\n";
    const std::array<const char*, 3> rows = {"control x", "control y", "control z"};
    for (std::size_t c = 0; c < 3; ++c) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-10s  %-12s  %-12s  %-12s\n", rows[c],
                      table[c][0].c_str(), table[c][1].c_str(), table[c][2].c_str());
        out << line;
    }
    return out.str();
}

SweepResult run_sweep(const ScenarioConfig& base, double lo, double hi, int steps) {
    const std::optional<std::string> param = base.noise.sweep_parameter();
    if (!param) {
        throw ArgumentError("noise model \"" + base.noise.to_json().at("type").get<std::string>() +
                            "\" has no sweepable numeric parameter");
    }
    if (steps < 2) throw ArgumentError("sweep needs at least 2 grid points");
    if (!(lo < hi)) throw ArgumentError("sweep range must satisfy lo < hi");

    SweepResult sweep;
    sweep.parameter = *param;
    for (int i = 0; i < steps; ++i) {
        const double v =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
        ScenarioConfig cfg = base;
        cfg.noise = base.noise.with_parameter(v);
        cfg.fidelities.clear();  // rows always carry all nine fidelities
        sweep.values.push_back(v);
        sweep.rows.push_back(build_report(cfg));
        if (!sweep.capability_zero_crossing && sweep.rows.back().concurrence_lower <= 0.0) {
            sweep.capability_zero_crossing = v;
        }
    }
    return sweep;
}

Json sweep_to_json(const SweepResult& sweep) {
    Json j;
    j["schema"] = "gate-witness/sweep-v1";
    j["parameter"] = sweep.parameter;
    Json rows = Json::array();
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        Json row;
        row["value"] = sweep.values[i];
        row["report"] = report_to_json(sweep.rows[i]);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["capability_zero_crossing"] = sweep.capability_zero_crossing
                                        ? Json(*sweep.capability_zero_crossing)
                                        : Json(nullptr);
    return j;
}

std::string render_sweep_table(const SweepResult& sweep) {
    std::ostringstream out;
    out << "  " << sweep.parameter
        << "           F_lower          F_upper          F_exact          ent_lower   "
           "     capability\n";
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        const BoundsReport& r = sweep.rows[i];
        char line[192];
        std::snprintf(line, sizeof(line), "  %-10.6f  %.12f  %.12f  %-15s  %.12f  %.12f\n",
                      sweep.values[i], r.process_bounds.lower, r.process_bounds.upper,
                      r.process_fidelity_exact ? format_real(*r.process_fidelity_exact).c_str()
                                               : "-",
                      r.ent_fidelity_lower, r.concurrence_lower);
        out << line;
    }
    if (sweep.capability_zero_crossing) {
        out << "capability bound reaches zero at " << sweep.parameter << " = "
            << format_real(*sweep.capability_zero_crossing) << "\n";
    } else {
        out << "capability bound stays positive across the sweep\n";
    }
    return out.str();
}

}  // namespace gatewitness
