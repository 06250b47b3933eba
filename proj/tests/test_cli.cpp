// End-to-end tests of the command-line binary: spawn it, capture exit code
// and streams, and hold the documented output contract stable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "ptsync/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "ptsync_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = scratch_dir();
    const fs::path out = dir / ("out_" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err_" + std::to_string(counter) + ".txt");
    ++counter;

    std::string cmd;
    if (!env_prefix.empty()) {
        cmd += env_prefix + " ";
    }
    cmd += std::string("\"") + PTSYNC_CLI_PATH + "\" " + args + " > \"" + out.string() +
           "\" 2> \"" + err.string() + "\"";

    const int raw = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return res;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

int count_lines(const std::string& s) {
    int n = 0;
    for (const char ch : s) {
        if (ch == '\n') {
            ++n;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("cli: help and usage errors") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("simulate --help").code == 0);

    const RunResult none = run_cli("");
    CHECK(none.code == 1);
    CHECK(!none.err.empty());

    const RunResult bad_flag = run_cli("simulate --no-such-flag");
    CHECK(bad_flag.code == 1);
    CHECK(count_lines(bad_flag.err) == 1);  // single-line diagnostic

    CHECK(run_cli("simulate --method nonsense").code == 1);
    CHECK(run_cli("simulate --samples 0").code == 1);
    CHECK(run_cli("simulate --t1=-5 --method numeric").code == 1);
}

TEST_CASE("cli: simulate output schema and determinism") {
    const std::string args = "simulate --nu0 0.5 --nu1 1 --omega 3 -R 0.5 "
                             "--t1 10 --samples 40";
    const RunResult a = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(first_line(a.out) == "t,re_c1,im_c1,re_c2,im_c2,p1,p2,p,dev");
    CHECK(count_lines(a.out) == 42);  // header + 41 grid points

    // Byte-identical across runs.
    const RunResult b = run_cli(args);
    CHECK(a.out == b.out);

    // Method variants: no dev column outside "both".
    const RunResult ana = run_cli(args + " --method analytic");
    REQUIRE(ana.code == 0);
    CHECK(first_line(ana.out) == "t,re_c1,im_c1,re_c2,im_c2,p1,p2,p");
    const RunResult num = run_cli(args + " --method numeric");
    REQUIRE(num.code == 0);
    CHECK(first_line(num.out) == "t,re_c1,im_c1,re_c2,im_c2,p1,p2,p");

    // The deviation column stays tiny at the default step.
    std::istringstream rows(a.out.substr(a.out.find('\n') + 1));
    std::string line;
    while (std::getline(rows, line)) {
        const double dev = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(dev < 1e-8);
    }
}

TEST_CASE("cli: JSON output parses and echoes the configuration") {
    const RunResult r = run_cli("simulate --t1 5 --samples 10 --format json");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    const ptsync::io::JsonDocument doc = ptsync::io::read_table_json(is);
    REQUIRE(!doc.config.empty());
    CHECK(doc.config.front() ==
          std::pair<std::string, std::string>{"command", "simulate"});
    CHECK(doc.table.columns.front() == "t");
    CHECK(doc.table.rows.size() == 11);
    CHECK(doc.table.rows.back()[0] == 5.0);
}

TEST_CASE("cli: output file matches stdout bytes") {
    const fs::path target = scratch_dir() / "sim.csv";
    const RunResult to_stdout = run_cli("simulate --t1 3 --samples 5");
    const RunResult to_file =
        run_cli("simulate --t1 3 --samples 5 -o \"" + target.string() + "\"");
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(target) == to_stdout.out);
    fs::remove(target);
}

TEST_CASE("cli: pulse runs accept infinite endpoints") {
    const RunResult r = run_cli(
        "simulate --family sech2 --amplitude 0.5 -R 1 --t0=-inf --t1=inf "
        "--samples 8 --method numeric");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string header, first;
    std::getline(is, header);
    std::getline(is, first);
    CHECK(first.substr(0, first.find(',')) == "-20");  // default truncation horizon
    std::string line, last;
    while (std::getline(is, line)) {
        if (!line.empty()) {
            last = line;
        }
    }
    CHECK(last.substr(0, last.find(',')) == "20");

    // The cosine family rejects infinite endpoints.
    CHECK(run_cli("simulate --t1=inf --method numeric").code == 1);
}

TEST_CASE("cli: scan commands emit their documented headers") {
    const RunResult flq = run_cli("floquet-scan --points 4 --r-min 0.1 --r-max 1.9");
    REQUIRE(flq.code == 0);
    CHECK(first_line(flq.out) ==
          "r,re_eps1_num,im_eps1_num,re_eps2_num,im_eps2_num,"
          "re_eps1_ana,im_eps1_ana,re_eps2_ana,im_eps2_ana,defective");
    CHECK(count_lines(flq.out) == 5);

    const RunResult cdt =
        run_cli("cdt-scan --vary omega --lo 1 --hi 20 --points 3 -R 0.5 --periods 4");
    REQUIRE(cdt.code == 0);
    CHECK(first_line(cdt.out) == "omega,localization");
    CHECK(count_lines(cdt.out) == 4);

    const RunResult cpi = run_cli("cpi-curve --points 5");
    REQUIRE(cpi.code == 0);
    CHECK(first_line(cpi.out) == "r,a,branch,n");
    CHECK(count_lines(cpi.out) == 6);

    const RunResult s2f = run_cli("sech2-final --a-min 0.5 -R 1");
    REQUIRE(s2f.code == 0);
    CHECK(s2f.out == "a,r,p1_inf,p2_inf\n0.5,1,1,0\n");

    // nu0 != 0 violates the suppression-study precondition -> usage error.
    CHECK(run_cli("cdt-scan --nu0 0.5 --points 2").code == 1);
}

TEST_CASE("cli: numerical failures exit with their own code") {
    // Constant super-critical drive grows without bound; the adaptive
    // controller stops it at the acceptance ceiling and that surfaces as the
    // numerical-failure exit code.
    const RunResult r = run_cli(
        "simulate --nu0 5 --nu1 0 --omega 1 -R 2 --adaptive --t1 200 "
        "--samples 10 --method numeric");
    CHECK(r.code == 3);
    CHECK(count_lines(r.err) == 1);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("cli: config file supplies defaults, flags take precedence") {
    const fs::path cfg = scratch_dir() / "run.ini";
    std::ofstream(cfg) << "simulate.samples=5\nsimulate.t1=2\n";

    const RunResult from_cfg =
        run_cli("--config \"" + cfg.string() + "\" simulate --method numeric");
    REQUIRE(from_cfg.code == 0);
    CHECK(count_lines(from_cfg.out) == 7);  // header + 6 rows

    const RunResult overridden = run_cli(
        "--config \"" + cfg.string() + "\" simulate --method numeric --samples 3");
    REQUIRE(overridden.code == 0);
    CHECK(count_lines(overridden.out) == 5);  // flag wins over config
    fs::remove(cfg);
}

TEST_CASE("cli: kernel override environment variable") {
    const std::string args = "floquet-scan --points 6 --r-min 0.1 --r-max 1.9";
    const RunResult def = run_cli(args);
    REQUIRE(def.code == 0);

    const RunResult scalar = run_cli(args, "PTSYNC_KERNEL=scalar");
    REQUIRE(scalar.code == 0);
    CHECK(scalar.out == def.out);  // kernels are arithmetic clones

    const RunResult bogus = run_cli(args, "PTSYNC_KERNEL=bogus");
    CHECK(bogus.code == 1);
    CHECK(count_lines(bogus.err) == 1);
}

TEST_CASE("cli: verify selection, reporting and exit codes") {
    const RunResult list = run_cli("verify --list");
    REQUIRE(list.code == 0);
    CHECK(count_lines(list.out) >= 15);

    const RunResult one = run_cli("verify --checks unimodularity");
    CHECK(one.code == 0);
    CHECK(one.out.find("PASS") != std::string::npos);
    CHECK(one.out.find("unimodularity") != std::string::npos);

    const RunResult empty = run_cli("verify --checks \"\"");
    CHECK(empty.code == 0);
    CHECK(count_lines(empty.out) == 1);  // header only, an empty table
    CHECK(empty.out.find("PASS") == std::string::npos);

    CHECK(run_cli("verify --checks no-such-check").code == 1);

    // A deliberately coarse step breaks the integrator-vs-closed-form check.
    const RunResult coarse = run_cli("verify --checks rk4-vs-analytic --dt 0.5");
    CHECK(coarse.code == 2);
    CHECK(coarse.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: full verify suite passes at defaults") {
    const RunResult all = run_cli("verify");
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);
    CHECK(all.out.find("0 failed") != std::string::npos);
}
