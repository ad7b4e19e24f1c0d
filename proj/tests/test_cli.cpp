// End-to-end tests for the tilecount executable: golden output bytes, exit
// codes, and determinism.  The binary path and the fixture directory come in
// through compile definitions.

#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
    std::string out;  // captured stdout (stderr is discarded)
    int status;
};

CmdResult run(const std::string& args) {
    std::string cmd = std::string(TILECOUNT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {out, WIFEXITED(rc) ? WEXITSTATUS(rc) : -1};
}

}  // namespace

TEST_CASE("count prints each engine and the agreement verdict") {
    CmdResult r = run("count --family AD --n 2 --engine all");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "region: AD(2)\n"
          "cells: 12\n"
          "brute: 8\n"
          "kasteleyn: 8\n"
          "formula: 8\n"
          "agree: yes\n");

    CmdResult lgv = run("count --family QH --m 3 --n 4 --a 1,3 --engine lgv");
    CHECK(lgv.status == 0);
    CHECK(lgv.out == "region: QH(3,4,[1,3])\ncells: 16\nlgv: 3\n");

    CmdResult formula = run("count --family R --order 5 --engine formula");
    CHECK(formula.status == 0);
    CHECK(formula.out == "region: R(5)\ncells: 15\nformula: 0\n");
}

TEST_CASE("identity subcommand reports pass lines") {
    CmdResult eq9 = run("identity --name eq9 --n 2");
    CHECK(eq9.status == 0);
    CHECK(eq9.out == "eq9 n=2: even 80, odd 80, product 80: pass\n");

    CmdResult kr = run("identity --name krattenthaler --random 100 --nmax 5 --seed 7");
    CHECK(kr.status == 0);
    CHECK(kr.out == "krattenthaler: 100 instances, nmax 5, seed 7: 100 pass\n");

    CmdResult single = run("identity --name lem3-eq1 --k 1 --n 3 --a 2");
    CHECK(single.status == 0);
    CHECK(single.out ==
          "lem3-eq1: M(RE(1,3,[2])) = 2 * M(TO(1,3,[2]))\n"
          "lhs: 2\n"
          "rhs: 2\n"
          "pass\n");
}

TEST_CASE("verify summarises a sweep per family") {
    CmdResult r = run("verify --family RE --kmax 1 --nmax 3");
    CHECK(r.status == 0);
    CHECK(r.out == "RE: 10 cases, 10 pass\ntotal: 10 cases, 10 pass, 0 fail\n");
}

TEST_CASE("render draws the region") {
    CmdResult ascii = run("render --family AD --n 2 --format ascii");
    CHECK(ascii.status == 0);
    CHECK(ascii.out ==
          "  []  []\n"
          "[]  []  []\n"
          "  []  []\n"
          "[]  []  []\n"
          "  []  []\n");

    CmdResult svg = run("render --family AD --n 2");
    CHECK(svg.status == 0);
    CHECK(svg.out.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n", 0) == 0);
    CHECK(svg.out.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.out.find("</svg>\n") != std::string::npos);

    CmdResult tiled = run("render --family AD --n 2 --tiling");
    CHECK(tiled.status == 0);
    CHECK(tiled.out.find("<line") != std::string::npos);
}

TEST_CASE("rewrite replays a script against a graph file") {
    std::string files = std::string(TEST_DATA_DIR) + "/quartered_host.graph " +
                        TEST_DATA_DIR + "/quartered_pipeline.json";
    CmdResult r = run("rewrite " + files);
    CHECK(r.status == 0);
    CHECK(r.out ==
          "steps: 13\n"
          "factor: 2\n"
          "vertices: 16, edges: 18\n"
          "M(before): 2\n"
          "M(after): 1\n"
          "M(before) = factor * M(after): verified\n");
}

TEST_CASE("output is byte-for-byte deterministic") {
    const std::string cmd = "identity --name krattenthaler --random 50 --seed 3";
    CmdResult a = run(cmd);
    CmdResult b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    CmdResult v1 = run("verify --family QH --kmax 1 --nmax 3");
    CmdResult v2 = run("verify --family QH --kmax 1 --nmax 3");
    CHECK(v1.status == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("usage and input errors exit with code 2") {
    CHECK(run("count --family XX --n 2").status == 2);
    CHECK(run("count --family AR --m 2").status == 2);          // missing --n
    CHECK(run("count --family AD --n 2 --engine lgv").status == 2);
    CHECK(run("count --family AD --n 2 --engine warp").status == 2);
    CHECK(run("").status == 2);                                 // no subcommand
    CHECK(run("rewrite /nonexistent.graph /nonexistent.json").status == 2);
    CHECK(run("--help").status == 0);
}
