#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CmdResult run_cli(const std::string& args) {
    const std::string errfile =
        "/tmp/tshape_cli_err_" + std::to_string(static_cast<long>(getpid())) + ".txt";
    const std::string cmd = std::string(TSHAPE_BIN) + " " + args + " 2>" + errfile;
    CmdResult res;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    const int rc = pclose(p);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.err = slurp(errfile);
    std::remove(errfile.c_str());
    return res;
}

}  // namespace

TEST_CASE("derive") {
    const CmdResult orbit = run_cli("derive \"+++-+--+\" --orbit");
    CHECK(orbit.exit_code == 0);
    CHECK(orbit.out == "+++-+--+\n+++-\n++\n");

    const CmdResult two = run_cli("derive \"+++-+--+\" --steps 2");
    CHECK(two.out == "++\n");

    const CmdResult zero = run_cli("derive \"++-+\" --steps 0");
    CHECK(zero.out == "++-+\n");

    const CmdResult runs_style = run_cli("derive \"+++-+--+\" --runs");
    CHECK(runs_style.out == "t^3 t^-1\n");

    CHECK(run_cli("derive \"++\" --orbit --steps 2").exit_code == 1);
}

TEST_CASE("classify") {
    const CmdResult json = run_cli("classify \"+-++--\" --json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"amenable\":true,\"cg_good\":false") != std::string::npos);

    const CmdResult human = run_cli("classify \"++-\"");
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("width=3\n") != std::string::npos);
    CHECK(human.out.find("one_clump=true\n") != std::string::npos);
    CHECK(human.out.find("known_good=amenable,cg-good,degree1-Klyachko\n") != std::string::npos);

    const CmdResult bad = run_cli("classify \"+*-\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.rfind("error: parse:", 0) == 0);
}

TEST_CASE("member") {
    const CmdResult yes = run_cli("member \"+---++\" \"+-\" --n 2");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "true\n");

    CHECK(run_cli("member \"++--\" \"+-\" --n 2").out == "false\n");
    CHECK(run_cli("member \"+---++\" \"+-\"").out == "true n=2\n");
    CHECK(run_cli("member \"++\" \"+++\"").out == "false\n");
}

TEST_CASE("peel and blowup round-trip through the spec file format") {
    const CmdResult peeled = run_cli("peel \"+--+\"");
    CHECK(peeled.exit_code == 0);
    CHECK(peeled.out == "base=+-\nm=1\ngap0=\ngap1=-+\n");

    const std::string spec_path =
        "/tmp/tshape_cli_spec_" + std::to_string(static_cast<long>(getpid())) + ".txt";
    {
        std::ofstream f(spec_path, std::ios::binary);
        f << peeled.out;
    }
    const CmdResult blown = run_cli("blowup \"+-\" --m 1 --blocks " + spec_path);
    CHECK(blown.exit_code == 0);
    CHECK(blown.out == "result=++--\n");

    const CmdResult mismatch = run_cli("blowup \"++\" --m 1 --blocks " + spec_path);
    CHECK(mismatch.exit_code == 2);
    std::remove(spec_path.c_str());

    const CmdResult alternating = run_cli("peel \"+-+-\"");
    CHECK(alternating.exit_code == 2);
    CHECK(alternating.err.rfind("error: derivative-empty:", 0) == 0);
}

TEST_CASE("seeded blowup is reproducible and self-consistent") {
    const CmdResult a = run_cli("blowup \"+-\" --m 1 --seed 7 --max-block-width 4");
    const CmdResult b = run_cli("blowup \"+-\" --m 1 --seed 7 --max-block-width 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("base=+-\n", 0) == 0);

    const CmdResult narrow = run_cli("blowup \"+-\" --m 2 --seed 1 --max-block-width 2");
    CHECK(narrow.exit_code == 2);
    CHECK(narrow.err.rfind("error: max-block-width:", 0) == 0);

    CHECK(run_cli("blowup \"+-\" --m 1").exit_code == 1);  // neither seed nor file
}

TEST_CASE("blocks listing") {
    const CmdResult b24 = run_cli("blocks --m 2 --width 4");
    CHECK(b24.exit_code == 0);
    CHECK(b24.out == "--++ m=2 full=true\n-+-+ m=2 full=false\n");

    CHECK(run_cli("blocks --m 2 --width 4 --full").out == "--++ m=2 full=true\n");
    CHECK(run_cli("blocks --m 2 --width 0").out == "0 m=2 full=false\n");
    CHECK(run_cli("blocks --m 2 --width 3").out.empty());
}

TEST_CASE("nf draws valid words deterministically") {
    const CmdResult a = run_cli("nf \"+-\" --m 1 --seed 3");
    const CmdResult b = run_cli("nf \"+-\" --m 1 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("base=+-\n", 0) == 0);
    CHECK(a.out.find("realize=") != std::string::npos);

    const CmdResult simp = run_cli("nf \"+-++--\" --m 2 --seed 5 --simplify");
    CHECK(simp.exit_code == 0);
    CHECK(simp.out.find(";lead=0;trail=0") != std::string::npos);
    CHECK(simp.out.find(";lead=1") == std::string::npos);

    CHECK(run_cli("nf \"+-\" --m 2 --seed 1 --max-block-width 2").exit_code == 2);
}

TEST_CASE("graph output") {
    const CmdResult csv = run_cli("graph \"+-\"");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "i,level\n0,0\n1,1\n2,0\n");

    const std::string svg_path =
        "/tmp/tshape_cli_svg_" + std::to_string(static_cast<long>(getpid())) + ".svg";
    const CmdResult svg = run_cli("graph \"+-\" --svg " + svg_path);
    CHECK(svg.exit_code == 0);
    const std::string content = slurp(svg_path);
    CHECK(content.find("<svg xmlns") != std::string::npos);
    CHECK(content.find("<polyline") != std::string::npos);
    CHECK(content.find("points=\"0,20 20,0 40,20\"") != std::string::npos);
    std::remove(svg_path.c_str());
}

TEST_CASE("witnesses") {
    CHECK(run_cli("witnesses --max-width 4").out == "++--\n");
    CHECK(run_cli("witnesses --max-width 3").out.empty());
    const CmdResult w6 = run_cli("witnesses --max-width 6 --predicate amenable_not_cg");
    CHECK(w6.out.find("++--+-\n") != std::string::npos);  // canonical of +-++--
    CHECK(run_cli("witnesses --max-width 4 --predicate bogus").exit_code == 1);
}

TEST_CASE("extract") {
    CHECK(run_cli("extract \"g1 t g2 t g3 t^-1\"").out == "++-\n");
    const CmdResult bad = run_cli("extract \"a t t^-1 b\"");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.rfind("error: not-cyclically-reduced:", 0) == 0);
}

TEST_CASE("census to stdout") {
    const CmdResult c = run_cli("census --max-width 3");
    CHECK(c.exit_code == 0);
    CHECK(c.out ==
          "width,total,power,one_clump,suitable,cg_good,amenable,amenable_not_cg,degree_pm1,"
          "unknown\n"
          "1,2,2,0,0,0,0,0,2,0\n"
          "2,3,2,0,0,0,1,0,0,0\n"
          "3,4,2,2,2,2,2,0,2,0\n");
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("census").exit_code == 1);  // missing --max-width
}
