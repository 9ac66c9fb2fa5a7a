// Drives the installed CLI binary end to end, checking output documents and
// the exit-code contract (0 pass, 1 domain/verify failure, 2 bad input).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command_line) {
    const std::string full = std::string(TABKIT_CLI_PATH) + " " + command_line + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("insert prints the outcome document") {
    const RunResult r =
        run("insert '{\"rows\":[[10,9,6],[8,5,3],[7,4,2],[4,2,1],[1]]}' 8 --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"trace\":[\"DR\",\"DR\",\"IR2\",\"D\",\"T2\"]") != std::string::npos);
    CHECK(r.output.find("\"cell\":{\"col\":1,\"row\":5}") != std::string::npos);
    CHECK(r.output.find("\"alpha\":0") != std::string::npos);
}

TEST_CASE("insert into the empty tableau") {
    const RunResult r = run("insert '{\"rows\":[]}' 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("{\"rows\":[[1]]}") != std::string::npos);
    CHECK(r.output.find("\"col\":1,\"row\":1") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run("insert 'not json' 3").exit_code == 2);
    CHECK(run("insert '{\"rows\":[[1,2]]}' 3").exit_code == 2);
    CHECK(run("rsk '{\"a\":[1,2],\"i\":[1,2]}'").exit_code == 2);
}

TEST_CASE("domain errors exit 1") {
    CHECK(run("reverse '{\"rows\":[[2,1]]}' 1 1 0").exit_code == 1);
    CHECK(run("reverse '{\"rows\":[[1]]}' 1 1 5").exit_code == 1);
    CHECK(run("insert '{\"rows\":[[1]]}' 0").exit_code == 1);
}

TEST_CASE("reverse reproduces the worked example") {
    const RunResult r =
        run("reverse '{\"rows\":[[10,9,8],[8,6,3],[7,5,2],[4,2,1],[1]]}' 5 1 0 --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"m\":8") != std::string::npos);
    CHECK(r.output.find("\"trace\":[\"NR\",\"D\",\"IR\",\"DR\",\"DR\"]") != std::string::npos);
    CHECK(r.output.find("{\"rows\":[[10,9,6],[8,5,3],[7,4,2],[4,2,1],[1]]}") !=
          std::string::npos);

    const RunResult last = run("reverse '{\"rows\":[[1]]}' 1 1 1");
    CHECK(last.exit_code == 0);
    CHECK(last.output.find("\"m\":1") != std::string::npos);
    CHECK(last.output.find("{\"rows\":[]}") != std::string::npos);
}

TEST_CASE("rsk, unrsk, and the pipe round trip") {
    const RunResult forward = run("rsk '{\"a\":[2,4,1,3,1],\"i\":[3,3,2,2,1]}'");
    CHECK(forward.exit_code == 0);
    CHECK(forward.output.find("{\"rows\":[[4,2],[3,1],[1]]}") != std::string::npos);

    const RunResult round =
        run("rsk '{\"a\":[2,4,1,3,1],\"i\":[3,3,2,2,1]}' | " TABKIT_CLI_PATH " unrsk -");
    CHECK(round.exit_code == 0);
    CHECK(round.output.find("{\"a\":[2,4,1,3,1],\"i\":[3,3,2,2,1]}") != std::string::npos);

    const RunResult empty = run("rsk '{\"a\":[],\"i\":[]}'");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("{\"P\":{\"rows\":[]},\"Q\":{\"rows\":[]}}") != std::string::npos);

    const RunResult inc =
        run("rsk --increasing '{\"a\":[1,2,4,1,3,5,2,4],\"i\":[3,3,3,2,2,2,1,1]}' | "
            TABKIT_CLI_PATH " unrsk --increasing -");
    CHECK(inc.exit_code == 0);
    CHECK(inc.output.find("{\"a\":[1,2,4,1,3,5,2,4],\"i\":[3,3,3,2,2,2,1,1]}") !=
          std::string::npos);
}

TEST_CASE("bumping path subcommand") {
    const RunResult r = run("path '{\"rows\":[[8,7,6],[5,4,2],[3,2],[1]]}' 3 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("{\"col\":2,\"row\":3,\"value\":2}") != std::string::npos);
}

TEST_CASE("verify suites succeed and verify-expansion emits a report") {
    CHECK(run("verify --suite examples").exit_code == 0);
    CHECK(run("verify --suite roundtrip").exit_code == 0);
    CHECK(run("verify --suite expansion --sn 4 --vars 3 --max-deg 6").exit_code == 0);

    const RunResult r = run("verify-expansion --w 321 --vars 3 --max-deg 5 --identity G");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"equal\":true") != std::string::npos);

    const RunResult f = run("verify-expansion --w 3214 --vars 3 --max-deg 6 --identity F");
    CHECK(f.exit_code == 0);
}

TEST_CASE("suite output is deterministic for a fixed seed") {
    const RunResult one = run("verify --suite roundtrip --seed 99 --pairs 200");
    const RunResult two = run("verify --suite roundtrip --seed 99 --pairs 200");
    CHECK(one.exit_code == 0);
    CHECK(one.output == two.output);
}

TEST_CASE("enumerate streams JSON lines") {
    const RunResult r = run("enumerate --what hecke-words --w 321 --max-len 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[1,2,1]\n[2,1,2]\n");

    const RunResult svt = run("enumerate --what svt --shape 1 --vars 2 --max-weight 2");
    CHECK(svt.exit_code == 0);
    CHECK(svt.output.find("{\"rows\":[[[1,2]]]}") != std::string::npos);
}

TEST_CASE("eg-check runs the corpus sweep") {
    CHECK(run("eg-check --max-entry 4 --max-rows 3 --max-cols 3").exit_code == 0);
}

TEST_CASE("--out writes the document to a file") {
    char name_template[] = "/tmp/tabkit-out-XXXXXX";
    const int fd = mkstemp(name_template);
    REQUIRE(fd >= 0);
    close(fd);
    const RunResult r =
        run(std::string("insert '{\"rows\":[]}' 2 --out ") + name_template);
    CHECK(r.exit_code == 0);
    std::ifstream in(name_template);
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    CHECK(contents.find("{\"rows\":[[2]]}") != std::string::npos);
    std::remove(name_template);
}

TEST_CASE("expansion sweeps run in parallel and merge deterministically") {
    const RunResult serial = run("verify --suite expansion --sn 3 --vars 2 --max-deg 4");
    const RunResult parallel =
        run("verify --suite expansion --sn 3 --vars 2 --max-deg 4 --jobs 2");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("verification failures exit 1") {
    // An unknown suite is a caller mistake, not a verification failure.
    CHECK(run("verify --suite nonsense").exit_code == 2);
}
