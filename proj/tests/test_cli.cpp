#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string bin() {
    const char* b = std::getenv("ICOTRACE_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string src() {
    const char* s = std::getenv("ICOTRACE_SRC");
    REQUIRE(s != nullptr);
    return s;
}

int run(const std::string& args) {
    std::string cmd = bin() + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("chartab diffs clean against the shipped fixtures") {
    std::string fx = src() + "/data/fixtures";
    std::string out = "cli_out_chartab";
    CHECK(run("chartab --fixture " + fx + " --out " + out) == 0);
    for (const char* g : {"a4tilde", "q8", "sl2z7"}) {
        std::string cfg = out + std::string("/cfg_") + g + ".cfg";
        std::ofstream(cfg) << "[run]\ngroup = " << g << "\n";
        CHECK(run(std::string("chartab --config ") + cfg + " --fixture " + fx + " --out " + out) ==
              0);
    }
    // unknown group name: configuration error
    std::string bad = out + "/bad.cfg";
    std::ofstream(bad) << "[run]\ngroup = mystery\n";
    CHECK(run("chartab --config " + bad + " --fixture " + fx + " --out " + out) == 2);
}

TEST_CASE("bundled scenarios run with the documented exit codes") {
    std::string sc = src() + "/data/scenarios";
    std::string out = "cli_out_scen";
    CHECK(run("trace-identity --config " + sc + "/thm2_a.cfg --out " + out) == 0);
    CHECK(run("trace-identity --config " + sc + "/thm2_b.cfg --out " + out) == 0);
    CHECK(run("trace-identity --config " + sc + "/thm3_n2.cfg --out " + out) == 0);
    CHECK(run("trace-identity --config " + sc + "/thm3_n3_hecke.cfg --out " + out) == 0);
    CHECK(run("trace-identity --config " + sc + "/thm1_sl2z7.cfg --out " + out) == 0);
    CHECK(run("trace-identity --config " + sc + "/thm2_hecke.cfg --out " + out) == 0);
    CHECK(run("satake --config " + sc + "/satake.cfg --out " + out) == 0);
    CHECK(run("smoothsum --config " + sc + "/smoothsum_zeta.cfg --out " + out) == 0);
    // misconfigured tower: exit 2 with hypothesis diagnostics
    CHECK(run("trace-identity --config " + sc + "/bad_tower.cfg --out " + out) == 2);
    // branch and fibers with defaults
    CHECK(run("branch --out " + out) == 0);
    CHECK(run("fibers --out " + out) == 0);
    // branch with explicit queries, and the empty report case
    std::string qcfg = out + "/branch_q.cfg";
    std::ofstream(qcfg) << "[branch]\nqueries = sym:2:theta2 tensor:theta2:theta2' "
                           "restrict:theta2:q8 twist:theta3\n";
    CHECK(run("branch --config " + qcfg + " --out " + out) == 0);
    std::string ecfg = out + "/branch_empty.cfg";
    std::ofstream(ecfg) << "[branch]\nbattery = 0\n";
    CHECK(run("branch --config " + ecfg + " --out " + out) == 0);
    std::string badq = out + "/branch_bad.cfg";
    std::ofstream(badq) << "[branch]\nbattery = 0\nqueries = frobnicate:theta2\n";
    CHECK(run("branch --config " + badq + " --out " + out) == 2);
}

TEST_CASE("reports are byte-identical for a fixed config") {
    std::string sc = src() + "/data/scenarios";
    CHECK(run("trace-identity --config " + sc + "/thm2_a.cfg --out cli_det_a") == 0);
    CHECK(run("trace-identity --config " + sc + "/thm2_a.cfg --out cli_det_b") == 0);
    CHECK(slurp("cli_det_a/trace-identity.tsv") == slurp("cli_det_b/trace-identity.tsv"));
    CHECK(slurp("cli_det_a/trace-identity.json") == slurp("cli_det_b/trace-identity.json"));
}

TEST_CASE("json mirror carries the tables") {
    std::string sc = src() + "/data/scenarios";
    CHECK(run("trace-identity --config " + sc + "/thm2_a.cfg --out cli_json") == 0);
    std::string j = slurp("cli_json/trace-identity.json");
    CHECK(j.find("\"command\": \"trace-identity\"") != std::string::npos);
    CHECK(j.find("\"pass\": true") != std::string::npos);
    CHECK(j.find("theta2") != std::string::npos);
}
