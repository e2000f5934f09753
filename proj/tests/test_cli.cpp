#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kps/io.hpp"
#include "kps/target.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int code;
    std::string out;  // stdout + stderr
};

fs::path work_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("kpstool-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CmdResult run_tool(const std::string& args) {
    static int serial = 0;
    auto capture = work_dir() / ("cmd-out-" + std::to_string(serial++) + ".txt");
    std::string cmd = std::string(KPSTOOL_PATH) + " " + args + " > " +
                      capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(capture);
    std::stringstream buf;
    buf << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

}  // namespace

TEST_CASE("version and usage") {
    auto r = run_tool("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("kpstool 1.0.0") != std::string::npos);
}

TEST_CASE("validate") {
    auto r = run_tool("validate builtin:stanton");
    CHECK(r.code == 0);
    CHECK(r.out.find("BIBD(3,4,7,8,14)") != std::string::npos);
    CHECK(r.out.find("g-design g=2") != std::string::npos);

    CHECK(run_tool("validate " + path_of("missing.txt")).code == 2);

    kps::io::write_file(path_of("broken.txt"), "design v=3 b=1\n0 1 9\n");
    CHECK(run_tool("validate " + path_of("broken.txt")).code == 2);
}

TEST_CASE("search exit codes and round trip") {
    CHECK(run_tool("search 1 3 8").code == 2);               // non-integral parameters
    CHECK(run_tool("search 1 3 9 --budget 2").code == 3);    // budget exhausted

    auto found = run_tool("search 1 3 7 --out " + path_of("steiner7.txt"));
    CHECK(found.code == 0);
    CHECK(found.out.find("found BIBD(1,3,3,7,7)") != std::string::npos);
    CHECK(run_tool("validate " + path_of("steiner7.txt")).code == 0);
}

TEST_CASE("design-graph and check-srg") {
    auto dg = run_tool("design-graph builtin:affine:3 " + path_of("affine-graph.txt"));
    CHECK(dg.code == 0);
    CHECK(dg.out.find("nodes=12 edges=54") != std::string::npos);

    auto srg = run_tool("check-srg " + path_of("affine-graph.txt"));
    CHECK(srg.code == 0);
    CHECK(srg.out.find("srg(12,9,6,9)") != std::string::npos);

    kps::io::write_file(path_of("path.txt"), "graph n=3\n0 1\n1 2\n");
    auto bad = run_tool("check-srg " + path_of("path.txt"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("not strongly regular") != std::string::npos);
}

TEST_CASE("decompose") {
    auto pair = run_tool("decompose builtin:stanton");
    CHECK(pair.code == 0);
    CHECK(pair.out.find("cliques=28 verified") != std::string::npos);

    auto point = run_tool("decompose builtin:fano");
    CHECK(point.code == 0);
    CHECK(point.out.find("cliques=7 verified") != std::string::npos);

    CHECK(run_tool("decompose builtin:fano --mode pair").code == 1);
}

TEST_CASE("mar then metrics pipeline") {
    kps::io::write_file(path_of("matched.txt"),
                        kps::io::serialize(kps::matched_pairs_target(7)));

    auto mar = run_tool("mar " + path_of("matched.txt") +
                        " --guided builtin:stanton --c0 3 --x 1 --out-assignment " +
                        path_of("mar-kps.txt"));
    CHECK(mar.code == 0);
    CHECK(mar.out.find("keys=28 ring_max=6 ring_mean=6") != std::string::npos);
    CHECK(mar.out.find("bound(x=1)=11/14") != std::string::npos);

    auto metrics = run_tool("metrics " + path_of("mar-kps.txt") + " " +
                            path_of("matched.txt") + " --x 1");
    CHECK(metrics.code == 0);
    CHECK(metrics.out.find("dcc      1\n") != std::string::npos);
    CHECK(metrics.out.find("dicc     1\n") != std::string::npos);
    CHECK(metrics.out.find("ns       28") != std::string::npos);

    auto csv = run_tool("metrics " + path_of("mar-kps.txt") + " " +
                        path_of("matched.txt") + " --x 1 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("dcc,dicc,apl,so_max,so_mean,ns,nr@1") != std::string::npos);

    // byte-identical assignment across repeat runs
    auto again = run_tool("mar " + path_of("matched.txt") +
                          " --guided builtin:stanton --c0 3 --out-assignment " +
                          path_of("mar-kps-2.txt"));
    CHECK(again.code == 0);
    std::ifstream a(path_of("mar-kps.txt")), b(path_of("mar-kps-2.txt"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("extract-design from a graph file") {
    run_tool("design-graph builtin:fano " + path_of("fano-graph.txt"));
    auto r = run_tool("extract-design " + path_of("fano-graph.txt") + " -r 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("BIBD(1,3,3,7,7)") != std::string::npos);
}

TEST_CASE("scenario") {
    kps::io::write_file(path_of("scenario.cfg"),
                        "# two fano groups, affine baseline\n"
                        "s=2\nb0=5\ntau0=1\n"
                        "group_design=builtin:fano\n"
                        "central_design=builtin:fano\n"
                        "classical_design=builtin:affine:3\n"
                        "x=1\n");
    auto r = run_tool("scenario " + path_of("scenario.cfg"));
    CHECK(r.code == 0);
    CHECK(r.out.find("graph_based,") != std::string::npos);
    CHECK(r.out.find("classical,") != std::string::npos);
    CHECK(r.out.find("delta,") != std::string::npos);

    kps::io::write_file(path_of("bad.cfg"), "s=2\nb0=7\n");
    CHECK(run_tool("scenario " + path_of("bad.cfg")).code == 2);

    // classical design with too few blocks for s*b0 nodes
    kps::io::write_file(path_of("short.cfg"),
                        "s=2\nb0=7\ntau0=1\n"
                        "group_design=builtin:fano\n"
                        "central_design=builtin:fano\n"
                        "classical_design=builtin:affine:3\n");
    CHECK(run_tool("scenario " + path_of("short.cfg")).code == 1);
}
