// End-to-end checks of the command-line tool: exit codes, stream
// contents, and file outputs. argv[1] is the path to the built binary.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "domcover/domcover.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

int checks = 0;
int failures = 0;
std::string cli;
fs::path work;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << '\n';
        std::exit(2);
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

void expect_exit(const std::string& args, int code) {
    const auto res = run(args);
    expect(res.exit_code == code,
           args + " -> exit " + std::to_string(res.exit_code) + ", wanted " + std::to_string(code));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-domcover>\n";
        return 2;
    }
    cli = argv[1];
    work = fs::temp_directory_path() / ("domcover-cli-" + std::to_string(::getpid()));
    fs::create_directories(work);

    const auto qt7 = work / "qt7.tour";
    const auto cim = work / "cim.cdg";
    const auto cert = work / "cover.json";

    // paley -------------------------------------------------------------
    expect_exit("paley 7 -o " + q(qt7), 0);
    expect(slurp(qt7) == domcover::to_text(domcover::paley(7)), "paley file content");
    {
        const auto res = run("paley 7");
        expect(res.exit_code == 0 && res.out == domcover::to_text(domcover::paley(7)),
               "paley stdout matches the file output");
    }
    expect_exit("paley 5", 2);
    expect_exit("paley nine", 2);

    // gen ----------------------------------------------------------------
    expect_exit("gen cim -d 2 --sizes 1,1,1,1 -o " + q(cim), 0);
    expect(slurp(cim) == "4 2\nR B\nRBRR\nBRRR\nBBBR\nBBRB\n", "cim golden bytes");
    expect_exit("gen cim -d 2 --sizes 1,1 -o " + q(work / "x.cdg"), 2);
    expect_exit("gen threecolor -n 3 -o " + q(work / "t3.cdg"), 0);
    expect(slurp(work / "t3.cdg") == "3 3\nR B G\nGRR\nBGR\nBBG\n", "threecolor golden bytes");
    expect_exit("gen tourcolor " + q(qt7) + " -o " + q(work / "k7.cdg"), 0);
    {
        const auto k = domcover::colored_from_text(slurp(work / "k7.cdg"));
        expect(k == domcover::coloring_from_tournament(domcover::paley(7)), "tourcolor content");
    }

    // cover / verify ------------------------------------------------------
    expect_exit("cover -d 2 " + q(cim) + " -o " + q(cert), 0);
    {
        const auto j = json::parse(slurp(cert));
        expect(j["d"] == 2 && j["n"] == 4 && j["parts"].size() <= 8, "cover JSON sane");
    }
    expect_exit("verify " + q(cert) + " " + q(cim), 0);
    {
        auto j = json::parse(slurp(cert));
        j["parts"][0]["color"] = j["parts"][0]["color"] == "R" ? "B" : "R";
        spit(work / "broken.json", j.dump());
        const auto res = run("verify " + q(work / "broken.json") + " " + q(cim));
        expect(res.exit_code == 1, "corrupted part color fails verification");
        expect(json::parse(res.out)["valid"] == false, "verification diagnostic is JSON");
    }
    {
        auto j = json::parse(slurp(cert));
        j["n"] = 9;
        spit(work / "wrongn.json", j.dump());
        expect_exit("verify " + q(work / "wrongn.json") + " " + q(cim), 2);
    }
    expect_exit("cover -d 1 " + q(cim) + " -o " + q(work / "loops.json"), 0);
    expect(json::parse(slurp(work / "loops.json"))["parts"].size() == 2, "d=1 loop cover");
    expect_exit("cover -d 2 --samples 25 --seed 1", 0);
    expect_exit("cover -d 2", 2);  // no file, no samples
    expect_exit("cover -d 2 " + q(work / "missing.cdg"), 2);

    // mincover --------------------------------------------------------------
    {
        const auto res = run("mincover -d 2 " + q(cim));
        expect(res.exit_code == 0 && json::parse(res.out)["size"] == 4, "mincover cim = 4");
    }
    {
        const auto res = run("mincover -k 3 --reverse --star " + q(qt7));
        expect(res.exit_code == 0 && json::parse(res.out)["size"] == 3,
               "mincover star(reverse(qt7)) = 3");
    }
    expect_exit("mincover " + q(cim), 2);  // neither -d nor -k
    expect_exit("mincover -d 2 -k 3 " + q(cim), 2);
    expect_exit("mincover -d 2 --samples 10 --guard 8 --seed 3", 0);

    // check -------------------------------------------------------------
    expect_exit("check -k 2 " + q(qt7), 0);
    expect_exit("check -k 2 --mode dominated " + q(qt7), 0);
    {
        const auto res = run("check -k 3 --reverse --star " + q(qt7));
        expect(res.exit_code == 1, "star(reverse(qt7)) is not 3-dominating");
        const auto j = json::parse(res.out);
        expect(j["verdict"] == false && j["witness"].size() >= 1, "witness reported");
    }
    expect_exit("check -k 2 --mode sideways " + q(qt7), 2);
    expect_exit("check -k 3 --samples 40 --seed 2 " + q(qt7), 0);

    // paradox -----------------------------------------------------------
    {
        const auto res = run("paradox -d 2 " + q(qt7));
        expect(res.exit_code == 0, "qt7 perfectly 2-paradoxical");
        const auto j = json::parse(res.out);
        expect(j["perfect"] == true && j["dominating"]["verdict"] == true &&
                   j["dominated"]["verdict"] == true &&
                   j["no_dominating_subtournament"] == true &&
                   j["no_dominated_subtournament"] == true,
               "all four sub-verdicts reported true");
    }
    spit(work / "c3.tour", "3\n010\n001\n100\n");
    expect_exit("paradox -d 2 " + q(work / "c3.tour"), 1);

    // critical ----------------------------------------------------------
    {
        const auto res = run("critical -d 2 --mode dominated " + q(qt7));
        expect(res.exit_code == 0 && json::parse(res.out)["verdict"] == "critical",
               "qt7 critical 2-dominated");
    }
    expect_exit("critical -d 2 --mode dominating --reverse " + q(qt7), 0);
    expect_exit("critical -d 2 --mode dominated " + q(work / "c3.tour"), 2);  // lacks property

    // confined ----------------------------------------------------------
    expect_exit("confined -d 2 --sizes 1,1,1,1 " + q(cim), 0);
    spit(work / "red.cdg", "2 2\nR B\nRR\nRR\n");
    {
        const auto res = run("confined -d 2 --sizes 1,1 " + q(work / "red.cdg"));
        expect(res.exit_code == 1, "all-red coloring is not confined");
        expect(json::parse(res.out)["counterexample"]["vertices"].size() == 2,
               "straddling part reported");
    }
    expect_exit("confined -d 2 --sizes 1,1,1 " + q(cim), 2);  // sizes do not sum to n

    // bukh ----------------------------------------------------------------
    {
        const auto res = run("bukh -d 2 --m 2 --retries 2 --seed 1");
        expect(res.exit_code == 1, "n=6 attempts all fail");
        const auto j = json::parse(res.out);
        expect(j["success"] == false && j["attempts"].size() == 2, "failure report lists attempts");
    }
    {
        const auto out = work / "bukh.tour";
        const auto res = run("bukh -d 2 --m 8 --retries 64 --seed 1 -o " + q(out));
        const auto j = json::parse(res.out);
        if (res.exit_code == 0) {
            const auto t = domcover::tournament_from_text(slurp(out));
            expect(t.order() == 24, "bukh tournament written");
            expect(j["success"] == true, "success reported");
        } else {
            expect(res.exit_code == 1 && j["success"] == false, "failure reported coherently");
        }
    }
    expect_exit("bukh -d 1", 2);

    // misc ---------------------------------------------------------------
    spit(work / "empty.cdg", "0 2\nR B\n");
    expect_exit("cover -d 2 " + q(work / "empty.cdg"), 0);
    expect_exit("cover -d 2 " + q(work / "t3.cdg"), 2);  // covering needs 2 colors
    {
        const auto res = run("verify " + q(cert) + " " + q(cim) + " -d 3");
        expect(res.exit_code == 2, "-d disagreeing with the certificate");
    }
    {
        const std::string cmd = "DOMCOVER_GUARD=5 " + cli + " paradox -d 2 " + q(qt7) + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        const int status = pclose(pipe);
        expect(WIFEXITED(status) && WEXITSTATUS(status) == 2,
               "environment guard override trips the capacity check");
    }
    expect_exit("nonsense", 2);
    expect_exit("", 2);
    expect_exit("--help", 0);
    expect_exit("cover --help", 0);

    fs::remove_all(work);
    std::cout << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}
