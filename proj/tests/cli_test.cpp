// Drives the installed CLI binary end to end.  The binary path arrives via
// the DOUBLED_BIN environment variable set by ctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doubled/graph.hpp"
#include "doubled/patterns.hpp"

using namespace doubled;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    const char* bin = std::getenv("DOUBLED_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    if (!stdin_data.empty()) {
        const std::string tmp = "/tmp/doubled_cli_test_in.txt";
        std::ofstream f(tmp);
        f << stdin_data;
        f.close();
        cmd += " < " + tmp;
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string g6(PatternName n, bool comp = false) {
    return graph6_encode(PatternCatalog::instance().graph({n, comp}));
}

} // namespace

TEST_CASE("recognize members and non-members with exit codes") {
    const auto member = run("recognize --class doubled \"Cl\"");
    CHECK(member.exit_code == 0);
    CHECK(member.out.find("\"result\":\"member\"") != std::string::npos);
    CHECK(member.out.find("\"certificate\"") != std::string::npos);

    const auto non = run("recognize --class doubled \"" + g6(PatternName::C5) + "\"");
    CHECK(non.exit_code == 2);
    CHECK(non.out.find("\"result\":\"non-member\"") != std::string::npos);
    CHECK(non.out.find("\"kind\":\"C5\"") != std::string::npos);

    const auto split = run("recognize --class split \"" + g6(PatternName::K23) + "\"");
    CHECK(split.exit_code == 2);
    CHECK(split.out.find("\"kind\":\"C4\"") != std::string::npos);
}

TEST_CASE("recognize reads stdin and preserves order") {
    const std::string lines = g6(PatternName::C5) + "\n" + "Cl" + "\n" + g6(PatternName::Watch) + "\n";
    const auto r = run("recognize --class doubled --input -", lines);
    CHECK(r.exit_code == 2);
    // three output lines in input order
    std::size_t first = r.out.find("non-member");
    std::size_t second = r.out.find("\"member\"");
    std::size_t third = r.out.find("watch");
    CHECK(first != std::string::npos);
    CHECK(second != std::string::npos);
    CHECK(third != std::string::npos);
    CHECK(first < second);
    CHECK(second < third);

    // parallel mode emits byte-identical output
    const auto r4 = run("recognize --class doubled --jobs 4 --input -", lines);
    CHECK(r4.exit_code == r.exit_code);
    CHECK(r4.out == r.out);
}

TEST_CASE("recognize rejects bad input with a line diagnostic") {
    const auto r = run("recognize --class doubled --input -", "Cl\n!!notgraph6\n");
    CHECK(r.exit_code == 1);
}

TEST_CASE("human and tsv formats") {
    const auto h = run("recognize --format human \"" + g6(PatternName::TV) + "\"");
    CHECK(h.exit_code == 2);
    CHECK(h.out.find("witness") != std::string::npos);
    CHECK(h.out.find("witness edges:") != std::string::npos);

    const auto t = run("recognize --format tsv \"Cl\"");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("member") != std::string::npos);
}

TEST_CASE("mine split obstructions") {
    const auto r = run("mine --class split --max-order 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("C4\t") != std::string::npos);
    CHECK(r.out.find("co-C4\t") != std::string::npos);
    CHECK(r.out.find("C5\t") != std::string::npos);
    CHECK(r.out.find("\"count\":3") != std::string::npos);

    // deterministic output
    const auto again = run("mine --class split --max-order 5");
    CHECK(again.out == r.out);
}

TEST_CASE("mine capacity guard") {
    const auto r = run("mine --class doubled --max-order 10");
    CHECK(r.exit_code == 1);
}

TEST_CASE("enumerate feeds the ingestion path") {
    const auto corpus = run("enumerate --max-order 6");
    CHECK(corpus.exit_code == 0);
    int lines = 0;
    for (char ch : corpus.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 209); // 1+1+2+4+11+34+156

    const std::string tmp = "/tmp/doubled_cli_test_corpus.g6";
    std::ofstream f(tmp);
    f << corpus.out;
    f.close();
    const auto mined = run("mine --class almost-split --max-order 6 --input " + tmp);
    const auto direct = run("mine --class almost-split --max-order 6");
    CHECK(mined.exit_code == 0);
    CHECK(mined.out == direct.out); // source independence, byte for byte
}

TEST_CASE("catalog export") {
    const auto r = run("catalog");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 28);
    CHECK(r.out.find("tent2\t") != std::string::npos);
    CHECK(r.out.find("co-tent2\t") != std::string::npos);
}

TEST_CASE("check-cert validates and rejects") {
    const std::string cert = R"({"A":[0,1],"B":[2,3],"matched_pairs":[[0,1]],"antimatched_pairs":[]})";
    const auto ok = run("check-cert \"Cl\" --cert -", cert);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("valid") == 0);

    const std::string bad = R"({"A":[0,2],"B":[1,3],"matched_pairs":[[0,2]],"antimatched_pairs":[[1,3]]})";
    const auto rej = run("check-cert \"Cl\" --cert -", bad);
    CHECK(rej.exit_code == 2);
    CHECK(rej.out.find("invalid:") == 0);
}

TEST_CASE("selfcheck fast mode passes and the fault hook trips it") {
    const auto ok = run("selfcheck");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("selfcheck OK") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto bad = run("selfcheck --corrupt-catalog");
    CHECK(bad.exit_code != 0);
    CHECK(bad.out.find("FAIL circus-reproduction") != std::string::npos);
}
