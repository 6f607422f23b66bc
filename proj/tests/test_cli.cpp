#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "atgrid/graph.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(ATGRID_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/atgrid_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

nlohmann::json strip_wall(nlohmann::json j) {
    j.erase("wall_ms");
    return j;
}

}  // namespace

TEST_CASE("at-torus human output and exit codes") {
    const RunResult ok = run_cli("at-torus 3 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("AT(T_{3,4}) = 3") != std::string::npos);
    CHECK(ok.out.find("36") != std::string::npos);

    const RunResult odd = run_cli("at-torus 3 3");
    CHECK(odd.exit_code == 0);
    CHECK(odd.out.find("= 4") != std::string::npos);
    CHECK(odd.out.find("witness") != std::string::npos);

    CHECK(run_cli("at-torus 2 5").exit_code == 2);
    CHECK(run_cli("at-torus 3").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("at-torus JSON payload round-trips and is deterministic") {
    const RunResult first = run_cli("at-torus 3 4 --json");
    REQUIRE(first.exit_code == 0);
    const nlohmann::json payload = nlohmann::json::parse(first.out);
    CHECK(payload["result"]["at"] == 3);
    CHECK(payload["result"]["trace"]["a"] == 36);
    CHECK(payload["result"]["trace"]["b"] == 0);
    CHECK(payload["result"]["sigma"] == -1);
    CHECK(payload["result"]["conclusion"] == "AT=3");
    CHECK(payload["result"]["antihermitian"] == true);
    // round-trip through the parser
    CHECK(nlohmann::json::parse(payload.dump()) == payload);

    const RunResult second = run_cli("at-torus 3 4 --json");
    CHECK(strip_wall(nlohmann::json::parse(first.out)) ==
          strip_wall(nlohmann::json::parse(second.out)));
}

TEST_CASE("trace command") {
    const RunResult r = run_cli("trace --m 3 --k 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("36") != std::string::npos);
    CHECK(r.out.find("antihermitian yes") != std::string::npos);
    CHECK(run_cli("trace --m 3 --k 0").exit_code == 2);
}

TEST_CASE("graph file commands") {
    const std::string c4 = write_temp("c4.txt", atgrid::serialize_edge_list(atgrid::make_cycle(4)));

    const RunResult coeff = run_cli("coeff " + c4 + " --exponents 1,1,1,1");
    CHECK(coeff.exit_code == 0);
    CHECK(coeff.out.find("-2") != std::string::npos);

    const RunResult at = run_cli("at " + c4);
    CHECK(at.exit_code == 0);
    CHECK(at.out.find("AT = 2") != std::string::npos);

    const RunResult expand = run_cli("expand " + c4 + " --cap 1");
    CHECK(expand.exit_code == 0);
    CHECK(expand.out == "{\"exponents\":[1,1,1,1],\"coefficient\":-2}\n");
    // every line of an expansion parses as JSON
    const RunResult full = run_cli("expand " + c4);
    std::size_t start = 0;
    int lines = 0;
    while (start < full.out.size()) {
        const std::size_t end = full.out.find('\n', start);
        const nlohmann::json line = nlohmann::json::parse(full.out.substr(start, end - start));
        CHECK(line.contains("exponents"));
        CHECK(line.contains("coefficient"));
        start = end + 1;
        ++lines;
    }
    CHECK(lines > 1);

    const RunResult choosable = run_cli("choosable " + c4 + " --k 2");
    CHECK(choosable.exit_code == 0);
    CHECK(choosable.out.find("choosable") != std::string::npos);

    CHECK(run_cli("coeff /nonexistent.txt --exponents 1").exit_code == 2);
    const std::string loop = write_temp("loop.txt", "2 1\n0 0\n");
    CHECK(run_cli("coeff " + loop + " --exponents 1,0").exit_code == 2);
}

TEST_CASE("circ command verifies orientations") {
    const std::string orient = write_temp("c4_cyclic.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    const RunResult r = run_cli("circ " + orient + " --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("even = 2") != std::string::npos);
    CHECK(r.out.find("odd = 0") != std::string::npos);
    CHECK(r.out.find("MATCHES") != std::string::npos);

    const RunResult json_run = run_cli("circ " + orient + " --json");
    const nlohmann::json payload = nlohmann::json::parse(json_run.out);
    CHECK(payload["result"]["even"] == 2);
    CHECK(payload["result"]["sign"] == -1);
    CHECK(payload["result"]["indegrees"] == nlohmann::json::array({1, 1, 1, 1}));
}

TEST_CASE("gen emits parseable graphs") {
    const RunResult torus = run_cli("gen torus 3 4");
    CHECK(torus.exit_code == 0);
    const atgrid::Graph g = atgrid::parse_edge_list(torus.out);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 24);
    CHECK(run_cli("gen cycle 2").exit_code == 2);
    CHECK(run_cli("gen nonsense 3").exit_code == 2);
}

TEST_CASE("selftest usage") {
    CHECK(run_cli("selftest nonsense").exit_code == 2);
}

TEST_CASE("choosable refuses torus sweeps at default guards") {
    const std::string t33 = write_temp("t33.txt", atgrid::serialize_edge_list(atgrid::make_torus({3, 3})));
    const RunResult r = run_cli("choosable " + t33 + " --k 3");
    CHECK(r.exit_code == 2);
}
