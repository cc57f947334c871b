// End-to-end checks of the command line tool. The binary path arrives as
// argv[1] from ctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int rc = pclose(p);
    r.status = WEXITSTATUS(rc);
    return r;
}

std::string tmpfile_with(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/cskein_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("matrix: builtins print the golden matrices") {
    auto r = run("matrix --surface sigma_0_4_twoB");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "0 0 0 0 1 -1\n0 0 0 0 1 -1\n0 0 0 0 -1 1\n0 0 0 0 -1 1\n"
          "-1 -1 1 1 0 0\n1 1 -1 -1 0 0\n");
    r = run("matrix --surface sigma_1_1");
    CHECK(r.status == 0);
    CHECK(r.out == "0 2 -2\n-2 0 2\n2 -2 0\n");
    // byte-identical across runs
    CHECK(run("matrix --surface sigma_0_5_CC").out ==
          run("matrix --surface sigma_0_5_CC").out);
}

TEST_CASE("matrix: missing file exits 2") {
    auto r = run("matrix --surface /nonexistent/file");
    CHECK(r.status == 2);
}

TEST_CASE("mutate: A2 seed word 1, involution, range error") {
    std::string seed = tmpfile_with("a2.seed", "m 2\nvars x1 x2\nmatrix\n0 1\n-1 0\n");
    auto r = run("mutate --seed " + seed + " --word 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("1*x1^-1*x2^1 + 1*x1^-1") != std::string::npos);
    auto r2 = run("mutate --seed " + seed + " --word 1,1");
    CHECK(r2.status == 0);
    CHECK(r2.out.find("1*x1^1\n1*x2^1") != std::string::npos);
    auto r3 = run("mutate --seed " + seed + " --word 9");
    CHECK(r3.status == 2);
}

TEST_CASE("laurent prints expansions") {
    auto r = run("laurent --surface sigma_1_1 --word 1,2");
    CHECK(r.status == 0);
    CHECK(r.out.find("e1^") != std::string::npos);
}

TEST_CASE("flipgraph emits nodes, edges and DOT") {
    std::string seed = tmpfile_with("a2b.seed", "m 2\nvars x1 x2\nmatrix\n0 1\n-1 0\n");
    std::string dot = "/tmp/cskein_test_graph.dot";
    auto r = run("flipgraph --seed " + seed + " --depth 6 --out " + dot);
    CHECK(r.status == 0);
    CHECK(r.out.find("nodes 5") == 0);
    std::ifstream d(dot);
    std::string dcontent((std::istreambuf_iterator<char>(d)),
                         std::istreambuf_iterator<char>());
    CHECK(dcontent.find("graph exchange") == 0);
    CHECK(dcontent.find("--") != std::string::npos);
}

TEST_CASE("upper: torus candidate true at depth 2, 1/x1 false at depth 1") {
    auto r = run("upper --surface sigma_1_1 --candidate \"(e1^2+e2^2+e3^2)/(e1*e2*e3)\""
                 " --depth 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("true\n") != std::string::npos);
    auto r2 = run("upper --surface sigma_1_1 --candidate \"1/e1\" --depth 1");
    CHECK(r2.status == 0);
    CHECK(r2.out.find("false\n") != std::string::npos);
}

TEST_CASE("verify-rho runs the identity suite") {
    auto r = run("verify-rho --surface sigma_0_4_twoB --depth 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("case10") != std::string::npos);
    CHECK(r.out.find("phi-rho on sigma_0_4_twoB") != std::string::npos);
}

TEST_CASE("grade prints degree vectors and inhomogeneous") {
    std::string expr = tmpfile_with("exprs.txt",
                                    "e5\n"
                                    "v0^1\n"
                                    "e5 + v0^1\n"
                                    "2*e0*v2^-1\n");
    auto r = run("grade --surface sigma_0_4_twoB --expr " + expr);
    CHECK(r.status == 0);
    CHECK(r.out == "[1, 1, 0, 0]\n[-2, 0, 0, 0]\ninhomogeneous\n[1, 0, 3, 0]\n");
}



// placed before main so doctest registers them
TEST_CASE("verify-rho writes the fixture audit") {
    auto r = run("verify-rho --surface sigma_1_1 --depth 1 --audit /tmp/cskein_audit.txt");
    CHECK(r.status == 0);
    std::ifstream a("/tmp/cskein_audit.txt");
    std::string content((std::istreambuf_iterator<char>(a)),
                        std::istreambuf_iterator<char>());
    CHECK(content.find("fixture case1") != std::string::npos);
    CHECK(content.find("corners") != std::string::npos);
    CHECK(content.find("word") != std::string::npos);
}

TEST_CASE("grade applies isotopy fixtures mod 2") {
    std::string fix = tmpfile_with("fix.txt",
                                   "forget 0\n"
                                   "identify g1 g2\n"
                                   "resolve v0^1 arc:a1:0:1 arc:a2:0:2 -> "
                                   "arc:g1:1:2 + arc:g2:1:2\n");
    std::string ex = tmpfile_with("m2.txt", "v0^1*arc:a1:0:1*arc:a2:0:2\n");
    auto r = run("grade --surface sigma_0_4_twoB --expr " + ex + " --mod2 " + fix);
    CHECK(r.status == 0);
    CHECK(r.out.find("mod2: 0") != std::string::npos);
}



TEST_CASE("laurent exits 1 when the expansion is not Laurent") {
    std::string seed = tmpfile_with("bad.seed",
                                    "m 2\nvars x1 x2\nmatrix\n0 1\n-1 0\n"
                                    "cluster\n1/(x2+1)\n1*x2^1\n");
    auto r = run("laurent --seed " + seed + " --word 2");
    CHECK(r.status == 1);
}

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
