#include "gatewitness/config.hpp"

#include <algorithm>
#include <set>

#include "gatewitness/errors.hpp"

namespace gatewitness {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        if (!allowed.contains(item.key())) {
            throw ArgumentError("unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

// Reals may be JSON numbers or decimal strings ("0.1").
double parse_real(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) {
        throw ArgumentError("missing \"" + key + "\" in " + where);
    }
    const Json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t consumed = 0;
        double out = 0.0;
        try {
            out = std::stod(s, &consumed);
        } catch (const std::exception&) {
            throw ArgumentError("\"" + key + "\" in " + where + " is not a real number");
        }
        if (consumed != s.size()) {
            throw ArgumentError("\"" + key + "\" in " + where + " is not a real number");
        }
        return out;
    }
    throw ArgumentError("\"" + key + "\" in " + where +
                        " must be a number or a decimal string");
}

std::uint64_t parse_u64(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ArgumentError("\"" + key + "\" in " + where +
                            " must be a nonnegative integer");
    }
    if (j.at(key).is_number_integer() && j.at(key).get<std::int64_t>() < 0) {
        throw ArgumentError("\"" + key + "\" in " + where + " must be nonnegative");
    }
    return j.at(key).get<std::uint64_t>();
}

ComplexMatrix parse_gate(const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "cnot") return ideal_cnot();
        throw ArgumentError("unknown gate name \"" + name +
                            "\" (use \"cnot\" or a 16-entry matrix)");
    }
    if (!j.is_array() || j.size() != 16) {
        throw ArgumentError("explicit gate must be an array of 16 [re, im] pairs");
    }
    std::vector<Complex> entries;
    entries.reserve(16);
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ArgumentError("gate entries must be [re, im] pairs");
        }
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    ComplexMatrix gate(4, 4, std::move(entries));
    if (unitarity_defect(gate) > 1e-10) {
        throw ArgumentError("gate matrix is not unitary within 1e-10");
    }
    return gate;
}

}  // namespace

NoiseSpec NoiseSpec::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw ArgumentError("noise spec must be an object with a \"type\" string");
    }
    const std::string type = j.at("type").get<std::string>();
    NoiseSpec spec;
    if (type == "ideal") {
        reject_unknown_keys(j, {"type"}, "ideal noise spec");
        spec.type = Type::Ideal;
    } else if (type == "depolarizing") {
        reject_unknown_keys(j, {"type", "p"}, "depolarizing noise spec");
        spec.type = Type::Depolarizing;
        spec.p = parse_real(j, "p", "depolarizing noise spec");
    } else if (type == "dephasing") {
        reject_unknown_keys(j, {"type", "p", "qubit", "axis"}, "dephasing noise spec");
        spec.type = Type::Dephasing;
        spec.p = parse_real(j, "p", "dephasing noise spec");
        if (!j.contains("qubit") || !j.at("qubit").is_string()) {
            throw ArgumentError("dephasing noise spec needs \"qubit\": \"control\"|\"target\"");
        }
        const std::string q = j.at("qubit").get<std::string>();
        if (q == "control") {
            spec.qubit = Qubit::Control;
        } else if (q == "target") {
            spec.qubit = Qubit::Target;
        } else {
            throw ArgumentError("dephasing qubit must be \"control\" or \"target\"");
        }
        if (!j.contains("axis") || !j.at("axis").is_string() ||
            j.at("axis").get<std::string>().size() != 1) {
            throw ArgumentError("dephasing noise spec needs \"axis\": \"x\"|\"y\"|\"z\"");
        }
        spec.axis = axis_from_label(j.at("axis").get<std::string>()[0]);
    } else if (type == "overrotation") {
        reject_unknown_keys(j, {"type", "theta"}, "overrotation noise spec");
        spec.type = Type::Overrotation;
        spec.theta = parse_real(j, "theta", "overrotation noise spec");
    } else if (type == "random") {
        reject_unknown_keys(j, {"type", "kraus_rank", "seed"}, "random noise spec");
        spec.type = Type::Random;
        const std::uint64_t rank = parse_u64(j, "kraus_rank", "random noise spec");
        if (rank < 1 || rank > 16) {
            throw ArgumentError("random noise kraus_rank must be in [1, 16]");
        }
        spec.kraus_rank = static_cast<std::size_t>(rank);
        spec.seed = j.contains("seed") ? parse_u64(j, "seed", "random noise spec") : 0;
    } else {
        throw ArgumentError("unknown noise type \"" + type + "\"");
    }
    return spec;
}

Json NoiseSpec::to_json() const {
    Json j;
    switch (type) {
        case Type::Ideal:
            j["type"] = "ideal";
            break;
        case Type::Depolarizing:
            j["type"] = "depolarizing";
            j["p"] = p;
            break;
        case Type::Dephasing:
            j["type"] = "dephasing";
            j["p"] = p;
            j["qubit"] = qubit == Qubit::Control ? "control" : "target";
            j["axis"] = std::string{axis_label(axis)};
            break;
        case Type::Overrotation:
            j["type"] = "overrotation";
            j["theta"] = theta;
            break;
        case Type::Random:
            j["type"] = "random";
            j["kraus_rank"] = kraus_rank;
            j["seed"] = seed;
            break;
    }
    return j;
}

std::optional<QuantumChannel> NoiseSpec::channel() const {
    switch (type) {
        case Type::Ideal:
            return std::nullopt;
        case Type::Depolarizing:
            return depolarizing(p);
        case Type::Dephasing:
            return dephasing(p, qubit, axis);
        case Type::Overrotation:
            return coherent_overrotation(theta);
        case Type::Random:
            return random_channel(4, kraus_rank, seed);
    }
    return std::nullopt;
}

std::optional<std::string> NoiseSpec::sweep_parameter() const {
    switch (type) {
        case Type::Depolarizing:
        case Type::Dephasing:
            return "p";
        case Type::Overrotation:
            return "theta";
        default:
            return std::nullopt;
    }
}

NoiseSpec NoiseSpec::with_parameter(double value) const {
    NoiseSpec out = *this;
    if (type == Type::Overrotation) {
        out.theta = value;
    } else if (type == Type::Depolarizing || type == Type::Dephasing) {
        out.p = value;
    } else {
        throw ArgumentError("noise model has no sweepable numeric parameter");
    }
    return out;
}

ScenarioConfig ScenarioConfig::from_json(const Json& j) {
    if (!j.is_object()) throw ArgumentError("config must be a JSON object");
    reject_unknown_keys(
        j, {"gate", "noise", "mode", "shots", "seed", "fidelities", "output"}, "config");
    if (!j.contains("gate")) throw ArgumentError("config is missing \"gate\"");

    ScenarioConfig cfg;
    cfg.gate = parse_gate(j.at("gate"));
    cfg.gate_name = j.at("gate").is_string() ? j.at("gate").get<std::string>() : "custom";
    if (j.contains("noise")) cfg.noise = NoiseSpec::from_json(j.at("noise"));

    if (j.contains("mode")) {
        const Json& m = j.at("mode");
        if (!m.is_string() ||
            (m.get<std::string>() != "analytic" && m.get<std::string>() != "sampled")) {
            throw ArgumentError("mode must be \"analytic\" or \"sampled\"");
        }
        cfg.mode = m.get<std::string>() == "sampled" ? Mode::Sampled : Mode::Analytic;
    }

    if (cfg.mode == Mode::Sampled) {
        cfg.plan.shots_per_input = parse_u64(j, "shots", "config");
        if (cfg.plan.shots_per_input < 1) {
            throw ArgumentError("\"shots\" must be at least 1");
        }
        cfg.plan.seed = j.contains("seed") ? parse_u64(j, "seed", "config") : 0;
    } else {
        if (j.contains("shots") || j.contains("seed")) {
            throw ArgumentError("\"shots\"/\"seed\" are only valid in sampled mode");
        }
    }

    if (j.contains("fidelities")) {
        const Json& f = j.at("fidelities");
        if (f.is_string() && f.get<std::string>() == "all") {
            // default: leave empty
        } else if (f.is_array()) {
            for (const Json& e : f) {
                if (!e.is_string()) {
                    throw ArgumentError("fidelity selection entries must be basis labels");
                }
                const std::string label = e.get<std::string>();
                ProductBasis::from_label(label);  // validates
                if (std::find(cfg.fidelities.begin(), cfg.fidelities.end(), label) ==
                    cfg.fidelities.end()) {
                    cfg.fidelities.push_back(label);
                }
            }
            if (cfg.fidelities.empty()) {
                throw ArgumentError("fidelity selection must not be empty");
            }
        } else {
            throw ArgumentError("fidelities must be \"all\" or an array of basis labels");
        }
    }

    if (j.contains("output")) {
        if (!j.at("output").is_string()) {
            throw ArgumentError("output must be a path string");
        }
        cfg.output_path = j.at("output").get<std::string>();
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
    }
    return from_json(j);
}

QuantumChannel ScenarioConfig::build_channel() const {
    const QuantumChannel gate_channel = unitary_channel(gate);
    const std::optional<QuantumChannel> n = noise.channel();
    return n ? compose(*n, gate_channel) : gate_channel;
}

}  // namespace gatewitness
