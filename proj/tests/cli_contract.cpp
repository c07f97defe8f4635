// Exit-code and report contract of the command-line tool, exercised by
// spawning the real binary (path in argv[1]).
//   0 = success, 1 = negative mathematical verdict, 2 = input/usage error

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string cli;
int failures = 0;

struct Run {
    int code = -1;
    std::string output;
};

Run run(const std::string& args) {
    const std::string command = cli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << command << "\n";
        std::exit(2);
    }
    Run r;
    std::array<char, 4096> buffer{};
    size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        r.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(const std::string& args, int code, const std::string& needle = "") {
    const Run r = run(args);
    bool ok = r.code == code;
    if (ok && !needle.empty() && r.output.find(needle) == std::string::npos) ok = false;
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: `" << args << "` -> exit " << r.code << " (want " << code << ")";
        if (!needle.empty()) std::cerr << ", looking for \"" << needle << "\"";
        std::cerr << "\n--- output ---\n" << r.output << "---\n";
    }
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "cli_contract_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <path-to-binary>\n";
        return 2;
    }
    cli = argv[1];

    // verdict commands: 0 on the positive outcome, 1 on the negative one
    expect("check corpus:E8", 0, "negative definite: yes");
    expect("check corpus:triangle", 1, "negative definite: no");
    expect("certify corpus:A2", 0, "Nash bijectivity certified");
    expect("certify corpus:genus1-star", 1, "not certified");
    expect("extremal corpus:A1", 1, "not extremal");
    expect("extremal corpus:A2", 0, "extremal");
    expect("extremal corpus:cycle3-w3", 1, "has loop");

    // informational commands succeed
    expect("minimalize corpus:nonmin-313", 0, "contract a2");
    expect("essentials corpus:nonmin-313", 0, "a1 a3");
    expect("trivial-arrows corpus:nonmin-313", 0, "2 trivial arrow(s)");
    expect("autos corpus:star-333", 0, "order 6");
    expect("loops corpus:cycle3-w3", 0, "1 simple loop(s)");
    expect("girth corpus:E8", 0, "infinite");
    expect("constraints corpus:A2", 0, "Forbidden");
    expect("corpus list", 0, "E8");
    expect("corpus show E8", 0, "\"vertices\"");

    // math preconditions on well-formed inputs exit 1
    expect("minimalize corpus:triangle", 1, "not negative definite");
    expect("loops corpus:double-edge-35", 1, "not simple");
    expect("indice-cover corpus:double-edge-35 --degree 3", 1, "not simple");

    // usage and parse errors exit 2
    expect("check no-such-file.json", 2, "cannot read");
    expect("corpus show no-such-entry", 2, "unknown corpus entry");
    expect("cover corpus:E8 --loop 0 --degree 2", 2, "out of range");
    expect("check", 2);
    expect("nonsense-command", 2);

    const std::string selfloop =
        write_temp("selfloop.json",
                   R"({"vertices":[{"id":"a","genus":0,"weight":-2}],"edges":[["a","a"]]})");
    expect("check " + selfloop, 2, "self-loop");
    const std::string dangling =
        write_temp("dangling.json",
                   R"({"vertices":[{"id":"a","genus":0,"weight":-2}],"edges":[["a","b"]]})");
    expect("check " + dangling, 2, "dangling");
    const std::string disconnected = write_temp(
        "disconnected.json",
        R"({"vertices":[{"id":"a","genus":0,"weight":-2},{"id":"b","genus":0,"weight":-2}],"edges":[]})");
    expect("check " + disconnected, 2, "disconnected");
    const std::string badgenus =
        write_temp("badgenus.json",
                   R"({"vertices":[{"id":"a","genus":-1,"weight":-2}],"edges":[]})");
    expect("check " + badgenus, 2, "negative genus");
    const std::string unknown_field =
        write_temp("unknown.json",
                   R"({"vertices":[{"id":"a","genus":0,"weight":-2}],"edges":[],"web":1})");
    expect("check " + unknown_field, 2, "unknown field");

    // identical invocations produce byte-identical machine reports
    {
        const Run a = run("constraints corpus:D4 --json");
        const Run b = run("constraints corpus:D4 --json");
        if (a.output != b.output || a.code != 0) {
            ++failures;
            std::cerr << "FAIL: --json output not reproducible\n";
        }
        if (a.output.find("\"input_digest\"") == std::string::npos ||
            a.output.find("\"version\"") == std::string::npos) {
            ++failures;
            std::cerr << "FAIL: report envelope fields missing\n";
        }
    }

    // covering pipeline: cover -> file -> fiber-product
    {
        const Run cov = run("cover corpus:triangle --loop 0 --degree 2 --json");
        if (cov.code != 0) {
            ++failures;
            std::cerr << "FAIL: cover pipeline\n" << cov.output;
        } else {
            // crude but sufficient: extract the "result" object by brace matching
            const auto at = cov.output.find("\"result\": ");
            std::string payload = cov.output.substr(at + 10);
            payload.erase(payload.rfind('}'));       // closing brace of the report
            payload.erase(0, payload.find('{'));
            const std::string file = write_temp("cover.json", payload);
            expect("fiber-product " + file + " " + file, 0, "degree 4");
        }
    }

    // compare modes
    expect("compare --mode subgraph corpus:A2 corpus:A3", 0, "embedding found");
    expect("compare --mode subgraph corpus:A3 corpus:A2", 2, "not an embedding");
    expect("compare --mode weights corpus:A2 corpus:A2", 0, "0 unit leaves");
    expect("compare --mode sideways corpus:A2 corpus:A2", 2);

    if (failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cout << "cli contract: " << failures << " failure(s)\n";
    return 1;
}
