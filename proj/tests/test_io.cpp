#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "weakrep/cli.hpp"
#include "weakrep/cube_lift.hpp"
#include "weakrep/generators.hpp"
#include "weakrep/interval_solver.hpp"
#include "weakrep/json_io.hpp"
#include "weakrep/svg.hpp"

using namespace weakrep;

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("weakrep_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string read(const std::string& name) const {
        std::ifstream in(dir / name);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

LabeledGraph sample_graph() {
    LabeledGraph g(3);
    g.add_edge(0, 1, EdgeLabel::Near);
    g.add_edge(1, 2, EdgeLabel::Far);
    return g;
}

}  // namespace

TEST_CASE("interval JSON round trip and formatting") {
    IntervalRep rep;
    rep.diameter = Rat(1);
    rep.coord = {{0, Rat(-1, 6)}, {1, Rat(2)}, {2, Rat(7, 2)}};
    std::string j = interval_rep_to_json(rep);
    CHECK(j.find("\"-1/6\"") != std::string::npos);
    CHECK(j.find("\"2\"") != std::string::npos);  // integers drop the /q
    IntervalRep back = interval_rep_from_json(j);
    CHECK(back.diameter == rep.diameter);
    CHECK(back.coord == rep.coord);
    CHECK(unsat_json().find("\"unsat\"") != std::string::npos);
}

TEST_CASE("disk, decomposition, coloring, square, cube JSON round trips") {
    DiskRep d;
    d.diameter = 2;
    d.point = {{0, {0, 0}}, {1, {-3, 4}}};
    DiskRep d2 = disk_rep_from_json(disk_rep_to_json(d));
    CHECK(d2.diameter == d.diameter);
    CHECK(d2.point.at(1).x == -3);
    CHECK(d2.point.at(1).y == 4);

    Decomposition dec{{0, 2}, {1, 3}};
    Decomposition dec2 = decomposition_from_json(decomposition_to_json(dec));
    CHECK(dec2.iset == dec.iset);
    CHECK(dec2.fset == dec.fset);

    ThresholdColoring col;
    col.range = 5;
    col.threshold = 2;
    col.color = {{0, 1}, {1, 5}};
    ThresholdColoring col2 = threshold_coloring_from_json(threshold_coloring_to_json(col));
    CHECK(col2.range == 5);
    CHECK(col2.threshold == 2);
    CHECK(col2.color == col.color);

    SquareContactRep sq;
    sq.side = Rat(3, 2);
    sq.center = {{0, {Rat(3, 4), Rat(3, 4)}}, {1, {Rat(9, 4), Rat(3, 4)}}};
    SquareContactRep sq2 = square_rep_from_json(square_rep_to_json(sq));
    CHECK(sq2.side == sq.side);
    CHECK(sq2.center == sq.center);

    CubeScene scene;
    scene.side = Rat(3, 2);
    scene.base = {{0, {Rat(0), Rat(0), Rat(1)}}};
    CubeScene scene2 = cube_scene_from_json(cube_scene_to_json(scene));
    CHECK(scene2.side == scene.side);
    CHECK(scene2.base == scene.base);
}

TEST_CASE("svg output is deterministic, refuses invalid reps, handles empty") {
    LabeledGraph g = sample_graph();
    IntervalRep rep;
    rep.diameter = Rat(1);
    rep.coord = {{0, Rat(0)}, {1, Rat(1, 2)}, {2, Rat(3)}};
    std::string a = interval_rep_to_svg(g, rep);
    std::string b = interval_rep_to_svg(g, rep);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("stroke-dasharray") != std::string::npos);  // far edge dashed

    IntervalRep bad = rep;
    bad.coord[2] = Rat(1);  // far edge now too close
    CHECK_THROWS(interval_rep_to_svg(g, bad));

    DiskRep disk;
    disk.point = {{0, {0, 0}}, {1, {2, 0}}, {2, {9, 9}}};
    std::string c = disk_rep_to_svg(g, disk);
    CHECK(c == disk_rep_to_svg(g, disk));
    CHECK(c.find("<circle") != std::string::npos);

    LabeledGraph empty(0);
    IntervalRep er;
    CHECK(interval_rep_to_svg(empty, er).find("</svg>") != std::string::npos);
    DiskRep ed;
    CHECK(disk_rep_to_svg(empty, ed).find("</svg>") != std::string::npos);
}

TEST_CASE("cli solve: sat and unsat exit codes and artifacts") {
    TempDir tmp;
    std::string in = tmp.file("g.txt", serialize_graph(sample_graph()));
    std::string out = (tmp.dir / "out.json").string();
    CHECK(cli_main({"solve", "-i", in, "-o", out}) == 0);
    IntervalRep rep = interval_rep_from_json(tmp.read("out.json"));
    CHECK(verify_interval(sample_graph(), rep).ok);

    std::string wheel = tmp.file("w.txt", serialize_graph(gen_wheel_hard(6)));
    CHECK(cli_main({"solve", "-i", wheel, "-o", out}) == 1);
    CHECK(tmp.read("out.json").find("unsat") != std::string::npos);
}

TEST_CASE("cli verify accepts the valid and rejects the broken") {
    TempDir tmp;
    std::string in = tmp.file("g.txt", serialize_graph(sample_graph()));
    DiskRep d;
    d.point = {{0, {0, 0}}, {1, {2, 0}}, {2, {8, 0}}};
    std::string rep = tmp.file("d.json", disk_rep_to_json(d));
    CHECK(cli_main({"verify", "-i", in, "-r", rep}) == 0);
    d.point[2] = {3, 0};
    std::string bad = tmp.file("bad.json", disk_rep_to_json(d));
    CHECK(cli_main({"verify", "-i", in, "-r", bad}) == 1);
}

TEST_CASE("cli construct subcommands") {
    TempDir tmp;
    LabeledGraph sq(4);
    sq.add_edge(0, 1, EdgeLabel::Near);
    sq.add_edge(1, 2, EdgeLabel::Far);
    sq.add_edge(2, 3, EdgeLabel::Near);
    sq.add_edge(0, 3, EdgeLabel::Far);
    std::string in = tmp.file("sq.txt", serialize_graph(sq));
    std::string out = (tmp.dir / "rep.json").string();
    CHECK(cli_main({"construct-interval", "-i", in, "-o", out}) == 0);
    CHECK(verify_interval(sq, interval_rep_from_json(tmp.read("rep.json"))).ok);

    CHECK(cli_main({"construct-disk", "-i", in, "-o", out}) == 0);
    CHECK(verify_disk(sq, disk_rep_from_json(tmp.read("rep.json"))).ok);

    // triangle is rejected by the interval construction
    LabeledGraph tri(3);
    tri.add_edge(0, 1, EdgeLabel::Near);
    tri.add_edge(1, 2, EdgeLabel::Near);
    tri.add_edge(0, 2, EdgeLabel::Near);
    std::string tin = tmp.file("tri.txt", serialize_graph(tri));
    CHECK(cli_main({"construct-interval", "-i", tin, "-o", out}) == 1);
    // but the disk engine contracts it fine
    CHECK(cli_main({"construct-disk", "-i", tin, "-o", out}) == 0);
}

TEST_CASE("cli decompose and export-svg") {
    TempDir tmp;
    LabeledGraph p5(5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1, EdgeLabel::Near);
    std::string in = tmp.file("p5.txt", serialize_graph(p5));
    std::string out = (tmp.dir / "dec.json").string();
    CHECK(cli_main({"decompose", "-i", in, "-o", out}) == 0);
    Decomposition dec = decomposition_from_json(tmp.read("dec.json"));
    CHECK(dec.iset.size() + dec.fset.size() == 5);

    std::string gin = tmp.file("g.txt", serialize_graph(sample_graph()));
    IntervalRep rep;
    rep.diameter = Rat(1);
    rep.coord = {{0, Rat(0)}, {1, Rat(1)}, {2, Rat(3)}};
    std::string rin = tmp.file("rep.json", interval_rep_to_json(rep));
    std::string svg = (tmp.dir / "out.svg").string();
    CHECK(cli_main({"export-svg", "-i", gin, "-r", rin, "-o", svg}) == 0);
    CHECK(tmp.read("out.svg").find("<svg") == 0);
}

TEST_CASE("cli lift-cubes") {
    TempDir tmp;
    LabeledGraph g(3);
    g.add_edge(0, 1, EdgeLabel::Near);
    g.add_edge(1, 2, EdgeLabel::Far);
    auto dec = decide_interval(g);
    REQUIRE(dec.sat);
    ThresholdColoring col = to_threshold_coloring(g, *dec.witness);
    SquareContactRep sq = gen_grid_strip_squares(3, Rat(col.threshold) + Rat(1, 2));
    std::string gin = tmp.file("g.txt", serialize_graph(g));
    std::string sin = tmp.file("sq.json", square_rep_to_json(sq));
    std::string out = (tmp.dir / "scene.json").string();
    CHECK(cli_main({"lift-cubes", "-i", gin, "-s", sin, "-o", out}) == 0);
    CubeScene scene = cube_scene_from_json(tmp.read("scene.json"));
    CHECK(verify_cube_contacts(g, scene, false).ok);
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(cli_main({}) == 2);
    CHECK(cli_main({"frobnicate"}) == 2);
    CHECK(cli_main({"solve"}) == 2);  // missing required --input
}

TEST_CASE("cli gallery materializes the corpus") {
    TempDir tmp;
    std::string dir = (tmp.dir / "gallery").string();
    CHECK(cli_main({"gallery", "-o", dir, "--seed", "2"}) == 0);
    for (const char* name :
         {"sungraph.txt", "sungraph_hard.txt", "sungraph_hard_disk.json",
          "wheel_4.txt", "wheel_11.txt", "girth4_unsat.txt", "demo.txt",
          "verdicts.txt"})
        CHECK(fs::exists(fs::path(dir) / name));
    std::ifstream v(fs::path(dir) / "verdicts.txt");
    std::stringstream buf;
    buf << v.rdbuf();
    CHECK(buf.str().find("wheel_6 interval: unsat") != std::string::npos);
    // frozen fixture matches what the gallery search rediscovers
    std::ifstream fz("tests/fixtures/girth4_unsat.txt");
    REQUIRE(fz.good());
    std::stringstream fbuf;
    fbuf << fz.rdbuf();
    std::ifstream gz(fs::path(dir) / "girth4_unsat.txt");
    std::stringstream gbuf;
    gbuf << gz.rdbuf();
    CHECK(parse_graph(fbuf.str()) == parse_graph(gbuf.str()));
}
