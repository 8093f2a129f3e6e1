// Acceptance suite: every release criterion runs once and prints a single
// PASS/FAIL line; the binary exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gatewitness/bounds.hpp"
#include "gatewitness/channel.hpp"
#include "gatewitness/charops.hpp"
#include "gatewitness/report.hpp"
#include "gatewitness/rng.hpp"
#include "gatewitness/sampling.hpp"
#include "gatewitness/verify.hpp"

namespace {

using namespace gatewitness;
namespace fs = std::filesystem;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

const VerifyCheck& check_named(const VerifySummary& summary, const std::string& name) {
    for (const VerifyCheck& c : summary.checks) {
        if (c.name == name) return c;
    }
    throw Failure("campaign check missing: " + name);
}

void require_clean(const VerifySummary& summary, const std::string& name) {
    const VerifyCheck& c = check_named(summary, name);
    require(c.violations == 0, name + " has " + std::to_string(c.violations) +
                                   " violations (worst margin " + fmt(c.worst_margin) + ")");
}

// ---- criteria ----

std::string criterion_table(const ComplexMatrix& cnot) {
    const auto table = classification_table(cnot);
    const std::size_t x = 0, y = 1, z = 2;
    require(table[z][x] == "identity", "zx cell is not identity");
    require(table[z][z] == "cnot" && table[z][y] == "cnot", "zz/zy cells are not cnot");
    require(table[x][x] == "reverse-cnot" && table[y][x] == "reverse-cnot",
            "xx/yx cells are not reverse-cnot");
    for (const auto& [c, t] : {std::pair{x, z}, {x, y}, {y, z}, {y, y}}) {
        require(table[c][t] == "entangle", "entangling cell misclassified");
    }
    return "all 9 cells match";
}

std::string criterion_bell_outputs(const std::vector<CharacteristicOp>& ops) {
    const CharacteristicOp& xz =
        ops[static_cast<std::size_t>(ProductBasis{Axis::X, Axis::Z}.canonical_index())];
    const BellKind expected[] = {BellKind::PhiPlus, BellKind::PsiPlus, BellKind::PhiMinus,
                                 BellKind::PsiMinus};
    double worst = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        worst = std::max(worst,
                         max_abs_diff(xz.expected_outputs[n], bell_state(expected[n])));
    }
    require(worst <= 1e-12, "XZ outputs deviate from the Bell basis by " + fmt(worst));
    return "max entrywise deviation " + fmt(worst);
}

std::string criterion_local_decomposition(const VerifySummary& campaign) {
    require_clean(campaign, "local_equals_bell_fidelity");
    const VerifyCheck& c = check_named(campaign, "local_equals_bell_fidelity");
    return std::to_string(c.samples) + " comparisons, worst |diff| " +
           fmt(-c.worst_margin);
}

std::string criterion_bound_soundness(const VerifySummary& campaign) {
    for (const char* name : {"pair_bound_lower", "pair_bound_upper", "four_bound_lower",
                             "four_bound_upper", "classical_fidelity_propagation",
                             "ent_fidelity_lower_bound"}) {
        require_clean(campaign, name);
    }
    return "0 violations across " + std::to_string(campaign.channels) + " channels";
}

std::string criterion_concurrence_chain(const VerifySummary& campaign) {
    require_clean(campaign, "concurrence_vs_bell_fidelity");
    require_clean(campaign, "capability_vs_min_concurrence");

    // Werner tightness: the concurrence bound is exact for q >= 1/3
    const ComplexMatrix phi = bell_state(BellKind::PhiPlus);
    double worst = 0.0;
    for (double q : {1.0 / 3.0, 0.4, 0.5, 0.6, 0.75, 0.9, 1.0}) {
        const ComplexMatrix rho =
            outer(phi) * Complex{q, 0.0} +
            ComplexMatrix::identity(4) * Complex{(1.0 - q) / 4.0, 0.0};
        const double fidelity = (dagger(phi) * rho * phi)(0, 0).real();
        const double bound = concurrence_lower_from_fidelity(fidelity);
        const double exact = wootters_concurrence(rho);
        worst = std::max(worst, std::abs(exact - bound));
    }
    require(worst <= 1e-10, "Werner tightness off by " + fmt(worst));
    return "chain sound; Werner bound tight to " + fmt(worst);
}

std::string criterion_threshold_sweep() {
    const ScenarioConfig base = ScenarioConfig::from_text(
        R"({"gate": "cnot", "noise": {"type": "depolarizing", "p": 0.0}})");
    const SweepResult sweep = run_sweep(base, 0.0, 0.4, 41);
    double worst = 0.0;
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
        worst = std::max(worst, std::abs(sweep.rows[i].concurrence_lower -
                                         (1.0 - 3.0 * sweep.values[i])));
    }
    require(worst <= 1e-12, "capability deviates from 1-3p by " + fmt(worst));
    require(sweep.capability_zero_crossing.has_value(), "no zero crossing found");
    require(std::abs(*sweep.capability_zero_crossing - 1.0 / 3.0) <= 0.01 + 1e-12,
            "crossing not within one grid step of 1/3");

    const BoundsReport& at_p30 = sweep.rows[30];
    require(std::abs(sweep.values[30] - 0.30) < 1e-12, "grid point 30 is not p=0.30");
    require(at_p30.concurrence_exact_per_input.has_value(), "missing concurrence oracle");
    double min_c = 1.0;
    for (double c : *at_p30.concurrence_exact_per_input) min_c = std::min(min_c, c);
    require(min_c > 0.0, "some entangling output is not entangled at p=0.30");
    require(min_c >= at_p30.concurrence_lower - 1e-9, "oracle concurrence below bound");
    return "capability = 1-3p to " + fmt(worst) + ", crossing at " +
           fmt(*sweep.capability_zero_crossing) + ", min concurrence at p=0.30 " +
           fmt(min_c);
}

std::string criterion_complementarity(const ComplexMatrix& cnot,
                                      const std::vector<CharacteristicOp>& ops) {
    const QuantumChannel cnot_channel = unitary_channel(cnot);
    const CharacteristicOp& zz =
        ops[static_cast<std::size_t>(ProductBasis{Axis::Z, Axis::Z}.canonical_index())];
    const CharacteristicOp& xx =
        ops[static_cast<std::size_t>(ProductBasis{Axis::X, Axis::X}.canonical_index())];

    double previous = 2.0;
    for (int i = 0; i <= 100; ++i) {
        const double theta = M_PI * static_cast<double>(i) / 100.0;
        const QuantumChannel ch = compose(coherent_overrotation(theta), cnot_channel);
        const double f_zz = classical_fidelity(ch, zz).value;
        const double f_xx = classical_fidelity(ch, xx).value;
        require(std::abs(f_zz - 1.0) <= 1e-12, "F_zz->zz is not blind to the phase error");
        require(std::abs(f_xx - (1.0 + std::cos(theta)) / 2.0) <= 1e-12,
                "F_xx->xx does not follow (1+cos)/2");
        require(f_xx < previous, "F_xx->xx is not strictly decreasing");
        previous = f_xx;

        const ProcessBounds pair = process_bounds_pair(f_zz, f_xx, zz.input_basis,
                                                       xx.input_basis);
        const double oracle = process_fidelity(ch, cnot);
        require(pair.lower <= oracle + 1e-9 && oracle <= pair.upper + 1e-9,
                "pair bound does not bracket the oracle");
        require(oracle <= std::min(f_zz, f_xx) + 1e-12, "oracle above min(F_zz, F_xx)");
    }
    return "phase error invisible to F_zz, monotone in F_xx, bounds bracket the oracle";
}

std::string criterion_sampling() {
    const ComplexMatrix cnot = ideal_cnot();
    const auto ops = enumerate_characteristic_ops(cnot);
    const std::uint64_t shot_levels[] = {1000, 10000, 100000, 1000000};
    int cells = 0;
    int misses = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const QuantumChannel ch =
            compose(random_channel(4, (i % 8) + 1, derive_stream(1009, i)),
                    unitary_channel(cnot));
        const CharacteristicOp& op = ops[i % 9];
        const double analytic = classical_fidelity(ch, op).value;
        for (std::size_t level = 0; level < 4; ++level) {
            const ShotPlan plan{shot_levels[level], derive_stream(2027, i, level)};
            const FidelityRecord est = estimate_fidelity(sample_op(ch, op, plan), op);
            ++cells;
            const double se = est.std_error.value_or(0.0);
            if (std::abs(est.value - analytic) > 5.0 * se) ++misses;
        }
    }
    require(misses <= cells / 100,
            std::to_string(misses) + " of " + std::to_string(cells) + " cells beyond 5 sigma");

    // byte-identical reports across two separate runs of the CLI
    const fs::path dir = fs::temp_directory_path() / "gate_witness_acceptance";
    fs::create_directories(dir);
    const fs::path cfg = dir / "sampled.json";
    {
        std::ofstream out(cfg);
        out << R"({"gate": "cnot", "noise": {"type": "depolarizing", "p": 0.2},
                   "mode": "sampled", "shots": 50000, "seed": 42})";
    }
    auto run_once = [&](const fs::path& out_path) {
        const std::string cmd = std::string(GATE_WITNESS_BIN) + " report --config " +
                                cfg.string() + " --out " + out_path.string() +
                                " > /dev/null 2>&1";
        require(std::system(cmd.c_str()) == 0, "CLI report run failed");
        std::ifstream in(out_path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string first = run_once(dir / "r1.json");
    const std::string second = run_once(dir / "r2.json");
    require(!first.empty() && first == second, "reports differ between runs");

    return std::to_string(cells - misses) + "/" + std::to_string(cells) +
           " cells within 5 sigma; reports byte-identical";
}

std::string criterion_oracle_crosscheck(const VerifySummary& campaign,
                                        const ComplexMatrix& cnot,
                                        const std::vector<CharacteristicOp>& ops) {
    require_clean(campaign, "process_fidelity_routes_agree");
    const CharacteristicOp& zz =
        ops[static_cast<std::size_t>(ProductBasis{Axis::Z, Axis::Z}.canonical_index())];
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double p = static_cast<double>(i) / 10.0;
        const QuantumChannel ch = compose(depolarizing(p), unitary_channel(cnot));
        worst = std::max(worst, std::abs(classical_fidelity(ch, zz).value -
                                         (1.0 - 3.0 * p / 4.0)));
        worst = std::max(worst,
                         std::abs(process_fidelity(ch, cnot) - (1.0 - 15.0 * p / 16.0)));
        worst = std::max(worst, std::abs(process_fidelity_trace_form(ch, cnot) -
                                         (1.0 - 15.0 * p / 16.0)));
    }
    require(worst <= 1e-12, "closed forms deviate by " + fmt(worst));
    const VerifyCheck& routes = check_named(campaign, "process_fidelity_routes_agree");
    return "routes agree (worst |diff| " + fmt(-routes.worst_margin) +
           "); closed forms match to " + fmt(worst);
}

}  // namespace

int main() {
    const ComplexMatrix cnot = ideal_cnot();
    const std::vector<CharacteristicOp> ops = enumerate_characteristic_ops(cnot);

    std::cout << "running random-channel campaign (1000 channels, ranks 1..16)..."
              << std::endl;
    const VerifySummary campaign = verify_bounds_campaign(1000, 7, 0);

    struct Criterion {
        int id;
        std::string name;
        std::function<std::string()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "characteristic-operation table", [&] { return criterion_table(cnot); }},
        {2, "Bell-basis outputs of the XZ operation",
         [&] { return criterion_bell_outputs(ops); }},
        {3, "local decomposition equals Bell fidelity",
         [&] { return criterion_local_decomposition(campaign); }},
        {4, "process/propagation/entanglement bound soundness",
         [&] { return criterion_bound_soundness(campaign); }},
        {5, "concurrence chain and Werner tightness",
         [&] { return criterion_concurrence_chain(campaign); }},
        {6, "3/4 threshold under depolarizing noise",
         [&] { return criterion_threshold_sweep(); }},
        {7, "complementarity of amplitude and phase tests",
         [&] { return criterion_complementarity(cnot, ops); }},
        {8, "sampling convergence and determinism", [&] { return criterion_sampling(); }},
        {9, "oracle cross-checks",
         [&] { return criterion_oracle_crosscheck(campaign, cnot, ops); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string verdict;
        std::string detail;
        try {
            detail = c.body();
            verdict = "PASS";
        } catch (const std::exception& e) {
            detail = e.what();
            verdict = "FAIL";
            ++failures;
        }
        std::printf("[%s] criterion %d: %s — %s\n", verdict.c_str(), c.id, c.name.c_str(),
                    detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
