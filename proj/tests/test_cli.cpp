// End-to-end tests of the gate_witness binary: exit codes, JSON outputs,
// determinism. The binary path comes in through GATE_WITNESS_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "gate_witness_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

CmdResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out_path = work_dir() / ("stdout_" + std::to_string(counter) + ".txt");
    const fs::path err_path = work_dir() / ("stderr_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(GATE_WITNESS_BIN) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int raw = std::system(cmd.c_str());
    CmdResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

}  // namespace

TEST_CASE("table: CNOT classification grid") {
    const fs::path cfg = write_file("cnot.json", R"({"gate": "cnot"})");
    const CmdResult r = run("table --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("identity") != std::string::npos);
    CHECK(r.out.find("reverse-cnot") != std::string::npos);
    CHECK(r.out.find("entangle") != std::string::npos);
    // row for control z: identity under target x, then cnot, cnot
    std::istringstream lines(r.out);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
        if (line.find("control z") != std::string::npos) {
            found = true;
            CHECK(line.find("identity") != std::string::npos);
            CHECK(line.find("identity") < line.find("cnot"));
        }
    }
    CHECK(found);
}

TEST_CASE("table: SWAP renders other in every cell") {
    const fs::path cfg = write_file("swap.json",
                                    R"({"gate": [[1,0],[0,0],[0,0],[0,0],
                                                 [0,0],[0,0],[1,0],[0,0],
                                                 [0,0],[1,0],[0,0],[0,0],
                                                 [0,0],[0,0],[0,0],[1,0]]})");
    const CmdResult r = run("table --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = r.out.find("other", pos)) != std::string::npos) {
        ++count;
        pos += 5;
    }
    CHECK(count == 9);
}

TEST_CASE("report: analytic JSON on stdout when no output path is set") {
    const fs::path cfg = write_file(
        "dep.json", R"({"gate": "cnot", "noise": {"type": "depolarizing", "p": 0.1}})");
    const CmdResult r = run("report --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("schema") == "gate-witness/report-v1");
    CHECK(j.at("fidelities").size() == 9);
    for (const Json& f : j.at("fidelities")) {
        CHECK(std::abs(f.at("value").get<double>() - 0.925) < 1e-12);
    }
    CHECK(std::abs(j.at("process_fidelity_exact").get<double>() - 0.90625) < 1e-12);
    CHECK(std::abs(j.at("process_bounds").at("lower").get<double>() - 0.85) < 1e-12);
    CHECK(std::abs(j.at("process_bounds").at("upper").get<double>() - 0.925) < 1e-12);
}

TEST_CASE("report: --out writes JSON and prints the table") {
    const fs::path cfg = write_file("ideal.json", R"({"gate": "cnot"})");
    const fs::path out = work_dir() / "ideal_report.json";
    const CmdResult r =
        run("report --config " + cfg.string() + " --out " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("process fidelity bounds") != std::string::npos);
    const Json j = Json::parse(slurp(out));
    CHECK(j.at("concurrence_lower").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("report: config on stdin") {
    const fs::path cfg = write_file("stdin.json", R"({"gate": "cnot"})");
    const fs::path out_path = work_dir() / "stdin_stdout.txt";
    const std::string cmd = std::string(GATE_WITNESS_BIN) + " report --config - < " +
                            cfg.string() + " > " + out_path.string() + " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(raw));
    REQUIRE(WEXITSTATUS(raw) == 0);
    const Json j = Json::parse(slurp(out_path));
    CHECK(j.at("gate") == "cnot");
}

TEST_CASE("report: bad configs exit 1 with a message") {
    const fs::path bad = write_file("bad.json", R"({"gate": "cnot", "bogus": true})");
    const CmdResult r = run("report --config " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("bogus") != std::string::npos);

    const CmdResult missing = run("report --config /nonexistent/config.json");
    CHECK(missing.exit_code == 1);

    // usage errors from the parser itself also map to exit 1
    const CmdResult no_sub = run("");
    CHECK(no_sub.exit_code == 1);
    const CmdResult no_cfg = run("report");
    CHECK(no_cfg.exit_code == 1);
    const CmdResult help = run("--help");
    CHECK(help.exit_code == 0);
}

TEST_CASE("report: sampled runs are byte-identical for a fixed seed") {
    const fs::path cfg = write_file(
        "sampled.json",
        R"({"gate": "cnot", "noise": {"type": "depolarizing", "p": 0.2},
            "mode": "sampled", "shots": 20000, "seed": 42})");
    const fs::path out1 = work_dir() / "sampled_1.json";
    const fs::path out2 = work_dir() / "sampled_2.json";
    REQUIRE(run("report --config " + cfg.string() + " --out " + out1.string()).exit_code ==
            0);
    REQUIRE(run("report --config " + cfg.string() + " --out " + out2.string()).exit_code ==
            0);
    const std::string a = slurp(out1);
    const std::string b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);

    const Json j = Json::parse(a);
    CHECK(j.at("fidelities")[0].contains("std_error"));
    CHECK(j.at("process_bounds").contains("std_error_lower"));

    // a different seed must change the counts
    const fs::path out3 = work_dir() / "sampled_3.json";
    REQUIRE(run("report --config " + cfg.string() + " --seed 43 --out " + out3.string())
                .exit_code == 0);
    CHECK(slurp(out3) != a);
}

TEST_CASE("sweep: depolarizing capability line and zero crossing") {
    const fs::path cfg = write_file(
        "sweep.json", R"({"gate": "cnot", "noise": {"type": "depolarizing", "p": 0}})");
    const fs::path out = work_dir() / "sweep.json.out";
    const CmdResult r = run("sweep --config " + cfg.string() +
                            " --param-range 0:0.4:41 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(slurp(out));
    CHECK(j.at("parameter") == "p");
    REQUIRE(j.at("rows").size() == 41);
    for (const Json& row : j.at("rows")) {
        const double p = row.at("value").get<double>();
        const double cap = row.at("report").at("concurrence_lower").get<double>();
        CHECK(std::abs(cap - (1.0 - 3.0 * p)) < 1e-12);
    }
    const double crossing = j.at("capability_zero_crossing").get<double>();
    CHECK(std::abs(crossing - 1.0 / 3.0) <= 0.01 + 1e-12);

    const CmdResult single =
        run("sweep --config " + cfg.string() + " --param-range 0:0.4:1");
    CHECK(single.exit_code == 1);

    const CmdResult garbled =
        run("sweep --config " + cfg.string() + " --param-range 0to1");
    CHECK(garbled.exit_code == 1);
}

TEST_CASE("verify-bounds: clean run exits 0, zero channels exits 1") {
    const CmdResult r = run("verify-bounds --channels 20 --seed 7 --rank 0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("total violations: 0") != std::string::npos);

    // a single random unitary: bounds must contain its exact overlap
    const CmdResult one = run("verify-bounds --channels 1 --seed 3 --rank 1");
    CHECK(one.exit_code == 0);

    const CmdResult zero = run("verify-bounds --channels 0");
    CHECK(zero.exit_code == 1);

    const fs::path out = work_dir() / "verify.json";
    const CmdResult with_out =
        run("verify-bounds --channels 5 --seed 1 --rank 2 --out " + out.string());
    REQUIRE(with_out.exit_code == 0);
    const Json j = Json::parse(slurp(out));
    CHECK(j.at("total_violations") == 0);
    CHECK(j.at("checks").size() == 10);
}
