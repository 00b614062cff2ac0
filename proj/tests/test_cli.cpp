// End-to-end checks of the command-line tool. Output arrives through pipes,
// so the tool must stay in TSV mode on its own.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <permtab/verify.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(PERMTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data_file(const std::string& name) { return std::string(PERMTAB_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/permtab_cli_test_" + name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

std::size_t count_lines_with_prefix(const std::string& text, const std::string& prefix) {
    std::size_t count = 0, start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (text.compare(start, prefix.size(), prefix) == 0) ++count;
        start = end + 1;
    }
    return count;
}

}  // namespace

TEST_CASE("enumerate streams records and a total") {
    const auto r = run("enumerate 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("total\t6") != std::string::npos);
    CHECK(count_lines_with_prefix(r.out, "3\t") == 0);   // records use the tableau format
    CHECK(count_lines_with_prefix(r.out, "3") == 6);     // each record starts with its length line

    CHECK(run("enumerate 0").out == "0\n\n\ntotal\t1\n");
    CHECK(run("enumerate 13").exit_code == 1);
    CHECK(run("enumerate -- -1").exit_code != 0);
}

TEST_CASE("stats reports the derived quantities as TSV") {
    const auto r = run("stats " + temp_file("inv2.txt", permtab::golden::inv_two));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n\t5\n") != std::string::npos);
    CHECK(r.out.find("shape\t2,2,1\n") != std::string::npos);
    CHECK(r.out.find("rows\t1,2,4\n") != std::string::npos);
    CHECK(r.out.find("columns\t3,5\n") != std::string::npos);
    CHECK(r.out.find("unrestricted\t1,2\n") != std::string::npos);
    CHECK(r.out.find("black\t2\t3\n") != std::string::npos);
    CHECK(r.out.find("black\t1\t5\n") != std::string::npos);
    CHECK(r.out.find("white\t4\t5\n") != std::string::npos);
    CHECK(r.out.find("w\t3\t2\n") != std::string::npos);
    CHECK(r.out.find("w\t5\t0\n") != std::string::npos);
    CHECK(r.out.find("inv\t2\n") != std::string::npos);
    CHECK(r.out.find("xi\t4,5,1,3,2\n") != std::string::npos);
    CHECK(r.out.find("f3-21\t2\n") != std::string::npos);
    CHECK(r.out.find("lbell\t0\n") != std::string::npos);
}

TEST_CASE("stats accepts the dot-form file as input") {
    const auto r = run("stats " + data_file("paths_example_alt.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n\t12\n") != std::string::npos);
    CHECK(r.out.find("inv\t15\n") != std::string::npos);
    CHECK(r.out.find("xi\t3,6,5,12,7,9,10,8,4,11,2,1\n") != std::string::npos);
}

TEST_CASE("stats rejects fillings that break an axiom") {
    const auto r = run("stats " + temp_file("bad.txt", "2\n1\n0\n"));
    CHECK(r.exit_code == 1);
    CHECK(run("stats /no/such/file").exit_code == 1);
}

TEST_CASE("xi and inv print bare values") {
    const auto path = data_file("inv2_example.txt");
    CHECK(run("xi " + path).out == "4,5,1,3,2\n");
    CHECK(run("inv " + path).out == "2\n");
    CHECK(run("inv " + data_file("length11_empty_row.txt")).out == "7\n");
}

TEST_CASE("pattern counting from the command line") {
    CHECK(run("pattern 3-21 4,5,1,3,2").out == "2\n");
    CHECK(run("pattern 32-1 1,2,3").out == "0\n");
    CHECK(run("pattern 32-1 3,2,1").out == "1\n");
    CHECK(run("pattern 32-1 4,5,1,3,2 --rc").out == "f\t0\nf_rc\t2\n");
    CHECK(run("pattern 32-1 bogus").exit_code == 1);
    CHECK(run("pattern 3--2--1-- 1,2,3").exit_code == 1);
}

TEST_CASE("distribution prints the histogram with a total") {
    CHECK(run("distribution 3 inv").out == "0\t5\n1\t1\ntotal\t6\n");
    CHECK(run("distribution 3 pattern:32-1").out == "0\t5\n1\t1\ntotal\t6\n");
    CHECK(run("distribution 3").out == "0\t5\n1\t1\ntotal\t6\n");  // inv is the default
    CHECK(run("distribution 9 inv").exit_code == 1);
    CHECK(run("distribution 3 median").exit_code == 1);
}

TEST_CASE("verify emits one TSV row per check and exits by pass/fail") {
    const auto r = run("verify 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count\t3\tPASS") != std::string::npos);
    CHECK(r.out.find("theorem\t3\tPASS") != std::string::npos);
    CHECK(r.out.find("golden\t0\tPASS") != std::string::npos);
    CHECK(count_lines_with_prefix(r.out, "lemma-") == 3);

    const auto sub = run("verify 2 bell roundtrip");
    CHECK(sub.exit_code == 0);
    CHECK(count_lines_with_prefix(sub.out, "bell") == 1);
    CHECK(count_lines_with_prefix(sub.out, "count") == 0);

    CHECK(run("verify 9").exit_code == 1);
    CHECK(run("verify 3 nonsense").exit_code == 1);
}

TEST_CASE("stdin is accepted wherever a file is expected") {
    const std::string cmd = std::string("printf '3\\n2\\n11\\n' | ") + PERMTAB_CLI_PATH + " inv -";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[64] = {};
    const std::size_t got = fread(buf, 1, sizeof buf - 1, pipe);
    const int status = pclose(pipe);
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(std::string(buf, got) == "1\n");
}
