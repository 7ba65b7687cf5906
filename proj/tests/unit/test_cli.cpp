#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "fixtures.hpp"

// End-to-end checks of the command-line surface. Every command is a thin
// composition of library calls, so these mainly pin output format and exit
// codes.
namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(CENTRO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) { return centro::testfix::fixture_path(name); }

} // namespace

TEST_CASE("analyze pins the worked example byte-exactly") {
    CliResult r = run_cli("analyze " + fixture("figure3_matrix.txt") + " --K alt:6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "field: Q\n"
                   "order: 6\n"
                   "k-spec: alt:6\n"
                   "classification: pseudo-centrosymmetric\n"
                   "determinant: 10\n"
                   "certificate-x: -3\n"
                   "certificate-y: 1\n"
                   "certificate-sign: +1\n"
                   "integral-certificate: 10 = 3^2 + 1^2\n");
}

TEST_CASE("analyze is deterministic") {
    std::string args = "analyze " + fixture("figure3_matrix.txt") + " --K alt:6 --verify-oracle";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("oracle: AGREE\n") != std::string::npos);
}

TEST_CASE("analyze --complementary reports the subset formula") {
    CliResult r = run_cli("analyze " + fixture("figure3_matrix.txt") + " --K alt:6 --complementary");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("complementary-x: -3\n") != std::string::npos);
    CHECK(r.out.find("complementary-y: 1\n") != std::string::npos);
    CHECK(r.out.find("complementary-det: 10\n") != std::string::npos);
}

TEST_CASE("analyze exit codes") {
    // order mismatch / non-commuting input
    CliResult neither = run_cli("analyze " + fixture("e11_matrix.txt") + " --K alt:4");
    CHECK(neither.exit_code == 2);
    CHECK(neither.out.find("classification: neither\n") != std::string::npos);

    CliResult missing = run_cli("analyze /nonexistent.txt --K alt:4");
    CHECK(missing.exit_code == 1);

    CliResult badk = run_cli("analyze " + fixture("figure3_matrix.txt") + " --K alt:five");
    CHECK(badk.exit_code == 1);
}

TEST_CASE("json output is a single object") {
    CliResult r = run_cli("--json analyze " + fixture("figure3_matrix.txt") + " --K alt:6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"determinant\": \"10\"") != std::string::npos);
    CHECK(r.out.front() == '{');
}

TEST_CASE("sos command") {
    CliResult r = run_cli("sos 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "10 = 3^2 + 1^2\n");

    CliResult infeasible = run_cli("sos 12");
    CHECK(infeasible.exit_code == 2);
    CHECK(infeasible.out ==
          "12 is not a sum of two squares: prime 3 (4k+3) has odd exponent 1\n");

    CliResult all = run_cli("sos 25 --all");
    CHECK(all.exit_code == 0);
    CHECK(all.out == "25 = 5^2 + 0^2\n25 = 4^2 + 3^2\n");

    CHECK(run_cli("sos -4").exit_code == 1);
    CHECK(run_cli("sos abc").exit_code == 1);
}

TEST_CASE("region generation and symmetry check") {
    CliResult ad1 = run_cli("region gen aztec-diamond 1");
    CHECK(ad1.exit_code == 0);
    CHECK(ad1.out == "row 1: -1..1\nrow -1: -1..1\n");

    CliResult ap3 = run_cli("region gen aztec-pillow 3");
    CHECK(ap3.exit_code == 0);
    CHECK(ap3.out == "row 3: 1..3\nrow 1: -5..5\nrow -1: -5..5\nrow -3: -3..-1\n");

    CliResult gp = run_cli("region gen pillow --steps 3 --band \"1:-5..5;-1:-5..5\"");
    CHECK(gp.exit_code == 0);
    CHECK(gp.out == ap3.out);

    CliResult sym = run_cli("region check-sym " + fixture("figure3_region.txt"));
    CHECK(sym.exit_code == 0);
    CHECK(sym.out == "cells: 12\nrotationally-symmetric: yes\n");

    CliResult bad = run_cli("region gen pillow --steps 2 --band \"1:-5..5;-1:-5..5\"");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("odd length") != std::string::npos);
}

TEST_CASE("tile count with certificate and oracle") {
    std::string ad2 = fixture("aztec_diamond_2.txt");
    CliResult r = run_cli("tile count " + ad2 + " --certificate --verify-oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "cells: 12\n"
                   "count: 8\n"
                   "certificate-x: 2\n"
                   "certificate-y: 2\n"
                   "certificate: 8 = 2^2 + 2^2\n"
                   "oracle-count: 8\n"
                   "oracle: AGREE\n");

    CliResult ad1 = run_cli("tile count " + fixture("aztec_diamond_1.txt") + " --certificate");
    CHECK(ad1.exit_code == 0);
    CHECK(ad1.out.find("count: 2\n") != std::string::npos);
    CHECK(ad1.out.find("certificate: 2 = 1^2 + 1^2\n") != std::string::npos);

    CliResult asym = run_cli("tile count " + fixture("asymmetric_region.txt") + " --certificate");
    CHECK(asym.exit_code == 2);
    CHECK(asym.out.find("rotationally symmetric") != std::string::npos);

    CliResult plain = run_cli("tile count " + fixture("asymmetric_region.txt"));
    CHECK(plain.exit_code == 0);
}

TEST_CASE("match commands") {
    std::string graph = fixture("figure3_graph.txt");
    CliResult count = run_cli("match count " + graph + " --verify-oracle");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "vertices: 12\ncount: 10\noracle-count: 10\noracle: AGREE\n");

    CliResult certify = run_cli("match certify " + graph);
    CHECK(certify.exit_code == 0);
    CHECK(certify.out.find("count: 10\n") != std::string::npos);
    CHECK(certify.out.find("certificate: 10 = 3^2 + 1^2\n") != std::string::npos);
    CHECK(certify.out.find("white-1: ") != std::string::npos);
    CHECK(certify.out.find("black-6: ") != std::string::npos);

    CliResult checksym = run_cli("match check-sym " + graph);
    CHECK(checksym.exit_code == 0);
    CHECK(checksym.out == "vertices: 12\ntwo-even-symmetric: yes\n");

    CliResult badparse = run_cli("match count " + fixture("broken_graph.txt"));
    CHECK(badparse.exit_code == 1);
    CHECK(badparse.out.find("line 2") != std::string::npos);
}

TEST_CASE("CENTRO_GUARD_K overrides the complementary-formula guard") {
    std::string args = "analyze " + fixture("figure3_matrix.txt") + " --K alt:6 --complementary";
    CliResult shrunk = run_cli(args, "CENTRO_GUARD_K=2 ");
    CHECK(shrunk.exit_code == 1); // k = 3 > 2, guard trips
    CHECK(shrunk.out.find("guard") != std::string::npos);
    CliResult raised = run_cli(args, "CENTRO_GUARD_K=16 ");
    CHECK(raised.exit_code == 0);
}
