#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ndl/graph.hpp"
#include "ndl/io.hpp"
#include "ndl/realization.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_tool(const std::string& args) {
    std::string cmd = std::string(NDLTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

class TempDir {
public:
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "ndltool_XXXXXX").string();
        REQUIRE(mkdtemp(tmpl.data()) != nullptr);
        path_ = tmpl;
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path path_;
};

const std::string kFigTableau = "[[2,2,1],[3,2],[3,2],[2,2],[3]]";

}  // namespace

TEST_CASE("cli: ndl command") {
    TempDir dir;
    std::string g6 = dir.file("g.g6", "Dr_\n");
    RunResult r = run_tool("ndl " + g6);
    CHECK(r.code == 0);
    CHECK(r.out == kFigTableau + "\n");

    // Same graph as an edge list on stdin.
    std::string edges = dir.file("g.edges", "5 5\n0 1\n0 2\n0 4\n1 3\n2 3\n");
    RunResult r2 = run_tool("ndl - < " + edges);
    CHECK(r2.code == 0);
    CHECK(r2.out == kFigTableau + "\n");

    // A different labeling canonicalizes to the same tableau.
    std::string moved = dir.file("h.edges", "5 5\n0 1\n1 2\n2 3\n0 3\n0 4\n");
    RunResult r3 = run_tool("ndl --canonical " + moved);
    CHECK(r3.code == 0);
    CHECK(r3.out == kFigTableau + "\n");
    RunResult r4 = run_tool("ndl " + moved);
    CHECK(r4.out != kFigTableau + "\n");
}

TEST_CASE("cli: check command") {
    TempDir dir;
    RunResult good = run_tool("check " + dir.file("t.json", kFigTableau));
    CHECK(good.code == 0);
    CHECK(good.out == "feasible: yes\ngraphic: yes\n");

    RunResult odd = run_tool("check " + dir.file("odd.json", "[[1],[1],[1]]"));
    CHECK(odd.code == 1);
    CHECK(odd.out == "feasible: yes\ngraphic: no\nclass 1: not graphic\n");

    RunResult infeasible = run_tool("check " + dir.file("inf.json", "[[3,3],[3,3]]"));
    CHECK(infeasible.code == 1);
    CHECK(infeasible.out == "feasible: no\ngraphic: no\n");

    RunResult cross = run_tool("check " + dir.file("cross.json", "[[2],[1,1]]"));
    CHECK(cross.code == 1);
    CHECK(cross.out == "feasible: yes\ngraphic: no\ncross (2,1): not bigraphic\n");
}

TEST_CASE("cli: realize command") {
    TempDir dir;
    RunResult r = run_tool("realize " + dir.file("t.json", kFigTableau));
    CHECK(r.code == 0);
    CHECK(r.out == "Dr_\n5 5\n0 1\n0 2\n0 4\n1 3\n2 3\n");

    RunResult bad = run_tool("realize " + dir.file("bad.json", "[[1],[1],[1]]"));
    CHECK(bad.code == 2);
}

TEST_CASE("cli: unique command") {
    TempDir dir;
    RunResult u = run_tool("unique " + dir.file("g.g6", "Dr_\n"));
    CHECK(u.code == 0);
    CHECK(u.out == "unique\n");

    RunResult nu = run_tool("unique --witness " + dir.file("c4.g6", "Cl\n"));
    CHECK(nu.code == 1);
    CHECK(nu.out == "not unique\n{\"a\":0,\"b\":1,\"c\":3,\"d\":2}\n");

    RunResult tab = run_tool("unique " + dir.file("t.json", "[[2,2],[2,2],[2,2],[2,2]]"));
    CHECK(tab.code == 1);
    CHECK(tab.out == "not unique\n");

    // A non-graphic tableau cannot be tested for uniqueness.
    RunResult bad = run_tool("unique " + dir.file("bad.json", "[[1],[1],[1]]"));
    CHECK(bad.code == 2);
}

TEST_CASE("cli: switch-path command") {
    TempDir dir;
    std::string a = dir.file("a.g6", "EhEG\n");  // 6-cycle
    std::string b = dir.file("b.g6", "EJaG\n");  // two triangles
    RunResult r = run_tool("switch-path " + a + " " + b);
    CHECK(r.code == 0);
    ndl::SwitchPath path = ndl::switch_path_from_json(r.out);
    ndl::Graph ga = ndl::graph_from_graph6("EhEG");
    ndl::Graph gb = ndl::graph_from_graph6("EJaG");
    CHECK(ndl::apply_path(ga, path) == gb);

    // Same vertex count, different lists.
    RunResult mism = run_tool("switch-path " + dir.file("c.g6", "Cl\n") + " " +
                              dir.file("d.g6", "Ch\n"));
    CHECK(mism.code == 4);

    // Different vertex counts.
    RunResult sizes = run_tool("switch-path " + dir.file("e.g6", "Cl\n") + " " +
                               dir.file("f.g6", "Dr_\n"));
    CHECK(sizes.code == 4);
}

TEST_CASE("cli: deck and reconstruct round trip") {
    TempDir dir;
    RunResult deck = run_tool("deck " + dir.file("g.g6", "Dr_\n"));
    CHECK(deck.code == 0);
    CHECK(deck.out == "5\nCW\nCk\nCk\nCs\nCr\n");

    std::string deck_file = dir.file("deck.txt", deck.out);
    RunResult recon = run_tool("reconstruct " + deck_file);
    CHECK(recon.code == 0);
    CHECK(recon.out ==
          "{\"degree_sequence\":[3,2,2,2,1],\"edge_count\":5,"
          "\"ndl\":[[2,2,1],[3,2],[3,2],[2,2],[3]]}\n");

    RunResult bad = run_tool("reconstruct " +
                             dir.file("bad.txt", "4\nB_\nB?\nB?\nB?\n"));
    CHECK(bad.code == 2);
}

TEST_CASE("cli: count-realizations command") {
    TempDir dir;
    RunResult r = run_tool("count-realizations " +
                           dir.file("t.json", "[[2,2],[2,2],[2,2],[2,2]]"));
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    std::string big = dir.file("big.json", "[[1],[1],[1],[1],[1],[1],[]]");
    RunResult capped = run_tool("count-realizations " + big);
    CHECK(capped.code == 3);
    RunResult allowed = run_tool("count-realizations --max-n 7 " + big);
    CHECK(allowed.code == 0);
    CHECK(allowed.out == "15\n");
}

TEST_CASE("cli: malformed input exits 2") {
    TempDir dir;
    CHECK(run_tool("ndl " + dir.file("junk.txt", "garbage{{{\n")).code == 2);
    CHECK(run_tool("ndl /nonexistent/file").code == 2);
    CHECK(run_tool("check " + dir.file("neg.json", "[[-1]]")).code == 2);
}
