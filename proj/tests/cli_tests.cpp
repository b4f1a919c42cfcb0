#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ford/sequences.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const char* binary = FORD_CLI_PATH) {
    std::string cmd = std::string(binary) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("extract command") {
    RunResult r = run_cli("extract --m 32");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("0/1, 1/32, 1/31", 0) == 0);
    CHECK(r.out.find("5/6, 1/1\n") == r.out.size() - 9);

    RunResult j = run_cli("extract --m 1 --format json");
    CHECK(j.status == 0);
    CHECK(j.out == "[{\"p\":0,\"q\":1},{\"p\":1,\"q\":1}]\n");

    CHECK(run_cli("extract --m 32 --b 2").status == 2);
    CHECK(run_cli("extract --m 32 --b 0/5").status == 2);
    CHECK(run_cli("extract").status == 1);
    CHECK(run_cli("extract --m 0").status == 1);
    CHECK(run_cli("extract --m 32 --b 1/2 --mode paper").status == 0);
}

TEST_CASE("extract json output round-trips") {
    for (ford::i64 m = 1; m <= 500; m += 29) {
        RunResult r = run_cli("extract --m " + std::to_string(m) + " --format json");
        REQUIRE(r.status == 0);
        CHECK(ford::sequences::from_json(r.out) ==
              ford::sequences::extract_origin(m).fractions);
    }
}

TEST_CASE("csv and json carry identical sequences") {
    for (ford::i64 m : {1, 6, 32, 360}) {
        RunResult json = run_cli("extract --m " + std::to_string(m) + " --format json");
        RunResult csv = run_cli("extract --m " + std::to_string(m) + " --format csv");
        REQUIRE(json.status == 0);
        REQUIRE(csv.status == 0);
        std::vector<ford::geometry::Fraction> from_csv;
        std::istringstream lines(csv.out);
        std::string line;
        std::getline(lines, line);
        CHECK(line == "p,q,value");
        while (std::getline(lines, line)) {
            auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
            from_csv.push_back(ford::geometry::make_fraction(
                std::stoll(line.substr(0, c1)), std::stoll(line.substr(c1 + 1, c2 - c1 - 1))));
        }
        CHECK(from_csv == ford::sequences::from_json(json.out));
    }
}

TEST_CASE("farey command") {
    RunResult r = run_cli("farey --n 3");
    CHECK(r.status == 0);
    CHECK(r.out == "0/1, 1/3, 1/2, 2/3, 1/1\n");
    CHECK(run_cli("farey --k 1/10").out == r.out);
    CHECK(run_cli("farey --n 0").status == 1);
    CHECK(run_cli("farey").status == 1);
    CHECK(run_cli("farey --n 3 --k 1/10").status == 1);
    CHECK(run_cli("farey --k 0/3").status == 2);
}

TEST_CASE("card command") {
    CHECK(run_cli("card --m 32").out == "48\n");
    CHECK(run_cli("card --m 6 --method mobius").out == "8\n");
    CHECK(run_cli("card --m 6 --method brute").out == "8\n");
    CHECK(run_cli("card --m 6 --method exact").out == "8\n");
    CHECK(run_cli("card").status == 1);

    // the sieve-limit override must not change any result
    RunResult env = run_cli("card --m 100", ("FORD_SIEVE_LIMIT=10 " + std::string(FORD_CLI_PATH)).c_str());
    RunResult plain = run_cli("card --m 100");
    CHECK(env.status == 0);
    CHECK(env.out == plain.out);
}

TEST_CASE("jumps command") {
    RunResult r = run_cli("jumps --from 2 --to 6");
    CHECK(r.status == 0);
    CHECK(r.out == "m,omega,jump\n2,1,1\n3,1,1\n4,1,1\n5,1,1\n6,2,2\n");
    CHECK(run_cli("jumps --from 10 --to 2").status == 1);
    CHECK(run_cli("jumps --from 2").status == 1);
}

TEST_CASE("report command") {
    RunResult r = run_cli("report --from 1000 --to 10000 --step 100");
    CHECK(r.status == 0);
    CHECK(r.out.find("# best=a3") != std::string::npos);

    RunResult one = run_cli("report --from 32 --to 32");
    CHECK(one.status == 0);
    CHECK(one.out.find("32,48,") != std::string::npos);

    CHECK(run_cli("report --from 10 --to 2").status == 1);
    CHECK(run_cli("report --from 1 --to 5").status == 1);
}

TEST_CASE("render command") {
    std::string d = "/tmp/ford_render_test";
    std::remove((d + "_a.svg").c_str());
    std::remove((d + "_b.svg").c_str());
    CHECK(run_cli("render --kind line --m 32 --out " + d + "_a.svg").status == 0);
    CHECK(run_cli("render --kind line --m 32 --out " + d + "_b.svg").status == 0);
    std::string a = slurp(d + "_a.svg");
    CHECK(a == slurp(d + "_b.svg"));  // byte-identical across invocations
    std::size_t touched = 0, pos = 0;
    while ((pos = a.find("class=\"touched\"", pos)) != std::string::npos) {
        ++touched;
        pos += 10;
    }
    CHECK(touched == 48);

    CHECK(run_cli("render --kind lattice --m 32 --out " + d + "_c.svg").status == 0);
    CHECK(run_cli("render --kind circles --m 12 --out " + d + "_d.svg").status == 0);
    CHECK(run_cli("render --kind line --m 32 --out /nonexistent-dir/x.svg").status == 2);
    CHECK(run_cli("render --kind line").status == 1);
    CHECK(run_cli("render --kind blob --m 3").status == 1);
}

TEST_CASE("verify command") {
    CHECK(run_cli("verify --max-m 100").status == 0);
    CHECK(run_cli("verify --max-m 1").status == 0);
}

TEST_CASE("verify detects an injected jump fault") {
    RunResult r = run_cli("verify --max-m 50", FORD_CLI_FAULTY_PATH);
    CHECK(r.status == 2);
}
