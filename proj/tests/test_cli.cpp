// End-to-end runs of the command-line binary against the bundled instance
// files: exit codes, human-readable markers, and JSON round-tripping.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string inst(const std::string& name) {
    return std::string(INSTANCE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate: passing and failing instances") {
    RunResult ok = run_cli("validate " + inst("octagon_ab.json"));
    INFO(ok.out);
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "validation: PASS"));
    CHECK(contains(ok.out, "mode: acceptable"));
    CHECK(contains(ok.out, "map: V=1 E=4 F=1 chi=-2 genus=2"));

    RunResult bad = run_cli("validate " + inst("triangle_invalid.json"));
    INFO(bad.out);
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "validation: FAIL"));
    CHECK(contains(bad.out, "graph contains a cycle"));
}

TEST_CASE("validate: strongly acceptable instance reports its mode") {
    RunResult r = run_cli("validate " + inst("strong_bridge.json"));
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "validation: PASS"));
    CHECK(contains(r.out, "mode: strongly_acceptable"));
    CHECK(contains(r.out, "1 positive, 1 negative"));
}

TEST_CASE("validate: broken map surfaces as a prefixed violation") {
    const std::string path = write_temp(
        "twistfloer_badmap.json",
        R"({"genus": 1, "curves": [], "intersections": [],
            "map": {"darts": [1, 2, 3, 4], "alpha": [[1, 3], [2, 4]],
                    "sigma": [[1, 2, 3]]}})");
    RunResult r = run_cli("validate " + path);
    INFO(r.out);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "map: "));
}

TEST_CASE("certify: the bundled matrix family") {
    RunResult good = run_cli("certify " + inst("family_5_9.json"));
    INFO(good.out);
    CHECK(good.code == 0);
    CHECK(contains(good.out, "verdict: certified_pseudo_anosov"));
    CHECK(contains(good.out, "form convention: split"));
    CHECK(contains(good.out, "source: matrix"));
    CHECK(contains(good.out, "charpoly: z^4 + 14*z^3 + 46*z^2 + 14*z + 1"));
    CHECK(contains(good.out, "caveat:"));

    RunResult red = run_cli("certify " + inst("family_5_5.json"));
    INFO(red.out);
    CHECK(red.code == 0);
    CHECK(contains(red.out, "verdict: not_certified_reducible"));
}

TEST_CASE("certify: from a twist word") {
    RunResult r = run_cli("certify " + inst("chain3.json"));
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "source: word"));
    CHECK(contains(r.out, "verdict:"));
}

TEST_CASE("certify: exactly one action source is allowed") {
    RunResult neither = run_cli("certify " + inst("octagon_empty.json"));
    INFO(neither.out);
    CHECK(neither.code == 2);
    CHECK(contains(neither.out, "error:"));

    const std::string both = write_temp(
        "twistfloer_both.json",
        R"({"genus": 2,
            "curves": [{"name": "x", "class": [1, 0, 0, 0]}],
            "intersections": [],
            "word": ["+x"],
            "matrix": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]})");
    RunResult r = run_cli("certify " + both);
    INFO(r.out);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "exactly one"));
}

TEST_CASE("floer: closed surface, single curve, and strong pair") {
    RunResult empty = run_cli("floer " + inst("octagon_empty.json"));
    INFO(empty.out);
    CHECK(empty.code == 0);
    CHECK(contains(empty.out, "ranks: r0=1 r1=4 r2=1"));
    CHECK(contains(empty.out, "euler-lefschetz:"));
    CHECK(contains(empty.out, "-> pass"));

    RunResult single = run_cli("floer " + inst("octagon_a.json"));
    INFO(single.out);
    CHECK(single.code == 0);
    CHECK(contains(single.out, "ranks: r0=0 r1=3 r2=1"));
    CHECK(contains(single.out, "cellular ranks: r0=0 r1=3 r2=1"));
    CHECK(contains(single.out, "tier agreement: yes"));
    CHECK(contains(single.out, "H2 action trivial: yes"));
    CHECK(contains(single.out, "H1 certified trivial: b1"));

    RunResult strong = run_cli("floer " + inst("strong_bridge.json"));
    INFO(strong.out);
    CHECK(strong.code == 0);
    CHECK(contains(strong.out, "mode: strongly_acceptable"));
    CHECK(contains(strong.out, "ranks: r0=0 r1=2 r2=0"));
}

TEST_CASE("floer: chain without a map still checks the trace identity") {
    RunResult r = run_cli("floer " + inst("chain3.json"));
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "ranks: r0=0 r1=1 r2=1"));
    CHECK_FALSE(contains(r.out, "cellular ranks"));
    CHECK(contains(r.out, "-> pass"));
    CHECK(contains(r.out, "H1 possibly nontrivial: a2"));
}

TEST_CASE("floer: invalid systems exit with the verdict code") {
    RunResult r = run_cli("floer " + inst("triangle_invalid.json"));
    INFO(r.out);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "validation: FAIL"));
}

TEST_CASE("act: word action matrix and invariants") {
    RunResult r = run_cli("act " + inst("chain3.json"));
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "word: +x -y +z +x"));
    CHECK(contains(r.out, "matrix (4x4):"));
    CHECK(contains(r.out, "det: 1"));
    CHECK(contains(r.out, "symplectic: yes"));
}

TEST_CASE("conjugate: cyclic target arrangement verifies") {
    RunResult r = run_cli("conjugate --perm 2,3,1 " + inst("chain3.json"));
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "start: x y z"));
    CHECK(contains(r.out, "target: y z x"));
    CHECK(contains(r.out, "verified: yes"));

    RunResult missing = run_cli("conjugate " + inst("chain3.json"));
    CHECK(missing.code == 2);
    CHECK(contains(missing.out, "--perm"));
}

TEST_CASE("cut: Euler characteristic bookkeeping") {
    RunResult oct = run_cli("cut " + inst("octagon_a.json"));
    INFO(oct.out);
    CHECK(oct.code == 0);
    CHECK(contains(oct.out, "cut along: a"));
    CHECK(contains(oct.out, "chi(map)=-2 chi(K)=0 chi(cut)=-2 -> identity pass"));
    CHECK(contains(oct.out, "boundary circles: 2"));
    CHECK(contains(oct.out, "complement components: 1"));

    RunResult torus = run_cli("cut " + inst("torus.json"));
    INFO(torus.out);
    CHECK(torus.code == 0);
    CHECK(contains(torus.out, "chi(map)=0 chi(K)=0 chi(cut)=0 -> identity pass"));
    CHECK(contains(torus.out, "boundary circles: 2"));

    RunResult no_map = run_cli("cut " + inst("chain3.json"));
    CHECK(no_map.code == 2);
    CHECK(contains(no_map.out, "error:"));
}

TEST_CASE("json output round-trips byte for byte") {
    for (const std::string cmdline :
         {std::string("--json validate ") + inst("octagon_ab.json"),
          std::string("--json floer ") + inst("chain3.json"),
          std::string("--json certify ") + inst("family_5_9.json"),
          std::string("--json cut ") + inst("octagon_a.json")}) {
        RunResult first = run_cli(cmdline);
        INFO(cmdline << "\n" << first.out);
        REQUIRE(first.code == 0);

        const std::string echo = write_temp("twistfloer_roundtrip.json", first.out);
        // rerun the same command on the echoed document (report is ignored)
        const std::string verb = cmdline.substr(7, cmdline.find(' ', 7) - 7);
        RunResult second = run_cli("--json " + verb + " " + echo);
        CHECK(second.code == 0);
        CHECK(second.out == first.out);
    }
}

TEST_CASE("malformed input exits 2") {
    RunResult missing = run_cli("validate /nonexistent/nowhere.json");
    CHECK(missing.code == 2);
    CHECK(contains(missing.out, "error:"));

    const std::string garbage = write_temp("twistfloer_garbage.json", "{ not json !");
    RunResult bad = run_cli("validate " + garbage);
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "invalid JSON"));

    const std::string short_class = write_temp(
        "twistfloer_shortclass.json",
        R"({"genus": 2, "curves": [{"name": "x", "class": [1, 0]}], "intersections": []})");
    RunResult shrt = run_cli("validate " + short_class);
    CHECK(shrt.code == 2);
    CHECK(contains(shrt.out, "class length must be 4"));

    const std::string unknown_key = write_temp(
        "twistfloer_unknown.json",
        R"({"genus": 2, "curves": [], "intersections": [], "flavor": "mint"})");
    RunResult unk = run_cli("validate " + unknown_key);
    CHECK(unk.code == 2);
    CHECK(contains(unk.out, "unknown field"));
}
