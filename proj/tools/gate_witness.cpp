// gate_witness: evaluate a simulated two-qubit gate through its
// characteristic observable operations and report classical fidelities,
// process-fidelity bounds and entanglement-capability bounds.
//
// Subcommands: report, sweep, verify-bounds, table.
// Exit codes: 0 success, 1 usage/config error, 2 invariant or verification
// failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gatewitness/config.hpp"
#include "gatewitness/errors.hpp"
#include "gatewitness/report.hpp"
#include "gatewitness/verify.hpp"

namespace {

using namespace gatewitness;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("GATE_WITNESS_LOG");
        if (env == nullptr) return 1;
        const std::string v(env);
        if (v == "error") return 0;
        if (v == "warn") return 1;
        if (v == "info") return 2;
        if (v == "debug") return 3;
        return 1;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[gate_witness] " << msg << "\n";
}

std::string read_config_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read config file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write output file \"" + path + "\"");
    out << content;
}

struct CommonFlags {
    std::string config_path;
    std::string out_path;
};

// Overrides from the command line are applied after parsing the config.
struct ReportOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
};

ScenarioConfig load_scenario(const CommonFlags& flags, const ReportOverrides& over) {
    ScenarioConfig cfg = ScenarioConfig::from_text(read_config_text(flags.config_path));
    if (over.shots) {
        if (cfg.mode != ScenarioConfig::Mode::Sampled) {
            throw ArgumentError("--shots requires a sampled-mode config");
        }
        cfg.plan.shots_per_input = *over.shots;
        if (cfg.plan.shots_per_input < 1) throw ArgumentError("--shots must be >= 1");
    }
    if (over.seed) {
        if (cfg.mode != ScenarioConfig::Mode::Sampled) {
            throw ArgumentError("--seed requires a sampled-mode config");
        }
        cfg.plan.seed = *over.seed;
    }
    if (!flags.out_path.empty()) cfg.output_path = flags.out_path;
    return cfg;
}

int cmd_report(const CommonFlags& flags, const ReportOverrides& over) {
    const ScenarioConfig cfg = load_scenario(flags, over);
    log_info("evaluating scenario");
    const BoundsReport report = build_report(cfg);
    const std::string json_text = report_to_json(report).dump(2) + "\n";
    if (cfg.output_path) {
        write_file(*cfg.output_path, json_text);
        std::cout << render_report_table(report);
        log_info("report written to " + *cfg.output_path);
    } else {
        std::cout << json_text;
    }
    return kExitOk;
}

// "--param-range LO:HI:STEPS"
void parse_range(const std::string& text, double& lo, double& hi, int& steps) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw ArgumentError("--param-range must look like LO:HI:STEPS");
    }
    try {
        std::size_t used = 0;
        lo = std::stod(text.substr(0, first), &used);
        if (used != first) throw std::invalid_argument("lo");
        const std::string hi_text = text.substr(first + 1, second - first - 1);
        hi = std::stod(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument("hi");
        const std::string steps_text = text.substr(second + 1);
        steps = std::stoi(steps_text, &used);
        if (used != steps_text.size()) throw std::invalid_argument("steps");
    } catch (const std::exception&) {
        throw ArgumentError("--param-range must contain two reals and an integer");
    }
}

int cmd_sweep(const CommonFlags& flags, const std::string& range) {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
    parse_range(range, lo, hi, steps);
    const ScenarioConfig cfg = load_scenario(flags, {});
    log_info("sweeping " + std::to_string(steps) + " grid points");
    const SweepResult sweep = run_sweep(cfg, lo, hi, steps);
    const std::string json_text = sweep_to_json(sweep).dump(2) + "\n";
    if (cfg.output_path) {
        write_file(*cfg.output_path, json_text);
        std::cout << render_sweep_table(sweep);
    } else {
        std::cout << json_text;
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t channels, std::uint64_t seed, std::uint64_t rank,
               const std::string& out_path) {
    log_info("running bound verification campaign");
    const VerifySummary summary = verify_bounds_campaign(channels, seed, rank);
    if (!out_path.empty()) {
        write_file(out_path, verify_to_json(summary).dump(2) + "\n");
    }
    std::cout << render_verify_summary(summary);
    return summary.total_violations() == 0 ? kExitOk : kExitVerification;
}

int cmd_table(const CommonFlags& flags) {
    const ScenarioConfig cfg = load_scenario(flags, {});
    const auto table = classification_table(cfg.gate);
    std::cout << render_classification_table(table);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-operation tests for simulated two-qubit gates"};
    app.require_subcommand(1);

    CommonFlags report_flags;
    ReportOverrides overrides;
    std::uint64_t seed_flag = 0;
    std::uint64_t shots_flag = 0;
    auto* report = app.add_subcommand("report", "evaluate one scenario");
    report->add_option("--config", report_flags.config_path, "scenario JSON (path or -)")
        ->required();
    report->add_option("--out", report_flags.out_path, "write the JSON report here");
    auto* seed_opt = report->add_option("--seed", seed_flag, "override the sampling seed");
    auto* shots_opt =
        report->add_option("--shots", shots_flag, "override shots per input");

    CommonFlags sweep_flags;
    std::string range;
    auto* sweep = app.add_subcommand("sweep", "evaluate across a noise-parameter grid");
    sweep->add_option("--config", sweep_flags.config_path, "scenario JSON (path or -)")
        ->required();
    sweep->add_option("--out", sweep_flags.out_path, "write the JSON sweep here");
    sweep->add_option("--param-range", range, "LO:HI:STEPS over the noise parameter")
        ->required();

    std::uint64_t channels = 1000;
    std::uint64_t verify_seed = 7;
    std::uint64_t rank = 4;
    std::string verify_out;
    auto* verify = app.add_subcommand(
        "verify-bounds", "check every bound against exact oracles on random channels");
    verify->add_option("--channels", channels, "number of random channels");
    verify->add_option("--seed", verify_seed, "campaign seed");
    verify->add_option("--rank", rank, "Kraus rank (0 cycles ranks 1..16)");
    verify->add_option("--out", verify_out, "write the JSON summary here");

    CommonFlags table_flags;
    auto* table = app.add_subcommand("table", "classify all nine input bases");
    table->add_option("--config", table_flags.config_path, "scenario JSON (path or -)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version land here too and must keep exit code 0
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*report) {
            if (*seed_opt) overrides.seed = seed_flag;
            if (*shots_opt) overrides.shots = shots_flag;
            return cmd_report(report_flags, overrides);
        }
        if (*sweep) return cmd_sweep(sweep_flags, range);
        if (*verify) return cmd_verify(channels, verify_seed, rank, verify_out);
        if (*table) return cmd_table(table_flags);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
