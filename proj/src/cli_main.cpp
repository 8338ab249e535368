#include "weakrep/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weakrep/cube_lift.hpp"
#include "weakrep/disk.hpp"
#include "weakrep/generators.hpp"
#include "weakrep/graph_algorithms.hpp"
#include "weakrep/interval_construct.hpp"
#include "weakrep/interval_solver.hpp"
#include "weakrep/json_io.hpp"
#include "weakrep/svg.hpp"

#include <json.hpp>

namespace weakrep {

namespace {

namespace fs = std::filesystem;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

// Representation files are JSON; the top-level key identifies the kind.
enum class RepKind { Interval, Disk, Cubes };

RepKind rep_kind(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.contains("coords")) return RepKind::Interval;
    if (j.contains("points")) return RepKind::Disk;
    if (j.contains("cubes")) return RepKind::Cubes;
    throw std::runtime_error("representation JSON: expected coords, points, or cubes");
}

int run_solve(const std::string& in, const std::string& out, const std::string& format) {
    LabeledGraph g = parse_graph(slurp(in));
    IntervalDecision dec = decide_interval(g);
    if (!dec.sat) {
        emit(out, unsat_json());
        return 1;
    }
    if (format == "svg")
        emit(out, interval_rep_to_svg(g, *dec.witness));
    else if (format == "txt") {
        std::ostringstream s;
        s << "sat d=" << dec.witness->diameter.str() << "\n";
        for (auto& [v, c] : dec.witness->coord) s << v << ' ' << c.str() << "\n";
        emit(out, s.str());
    } else
        emit(out, interval_rep_to_json(*dec.witness));
    return 0;
}

int run_construct_interval(const std::string& in, const std::string& out,
                           const std::string& format) {
    LabeledGraph g = parse_graph(slurp(in));
    IntervalRep rep;
    try {
        rep = represent_triangle_free_outerplanar(g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "construct-interval: " << e.what() << "\n";
        return 1;
    }
    emit(out, format == "svg" ? interval_rep_to_svg(g, rep) : interval_rep_to_json(rep));
    return 0;
}

int run_construct_disk(const std::string& in, const std::string& out,
                       const std::string& format, long long grid_radius) {
    LabeledGraph g = parse_graph(slurp(in));
    DiskRep rep;
    if (grid_radius > 0) {
        auto found = grid_disk_oracle(g, grid_radius);
        if (!found) {
            std::cerr << "construct-disk: no placement within grid radius "
                      << grid_radius << "\n";
            return 1;
        }
        rep = *found;
    } else {
        try {
            rep = represent_degree2_contractible(g);
        } catch (const std::invalid_argument& e) {
            std::cerr << "construct-disk: " << e.what() << "\n";
            return 1;
        }
    }
    emit(out, format == "svg" ? disk_rep_to_svg(g, rep) : disk_rep_to_json(rep));
    return 0;
}

int run_verify(const std::string& in, const std::string& rep_path,
               const std::string& out, const std::string& diameter) {
    LabeledGraph g = parse_graph(slurp(in));
    std::string text = slurp(rep_path);
    std::vector<std::pair<int, int>> violations;
    bool ok;
    switch (rep_kind(text)) {
        case RepKind::Interval: {
            IntervalRep rep = interval_rep_from_json(text);
            if (!diameter.empty()) rep.diameter = Rat::parse(diameter);
            auto r = verify_interval(g, rep);
            ok = r.ok;
            violations = r.violations;
            break;
        }
        case RepKind::Disk: {
            DiskRep rep = disk_rep_from_json(text);
            if (!diameter.empty()) rep.diameter = Rat::parse(diameter).floor();
            auto r = verify_disk(g, rep);
            ok = r.ok;
            violations = r.violations;
            break;
        }
        case RepKind::Cubes: {
            CubeScene scene = cube_scene_from_json(text);
            auto r = verify_cube_contacts(g, scene);
            ok = r.ok;
            violations = r.violations;
            break;
        }
    }
    std::ostringstream s;
    s << (ok ? "valid" : "invalid") << "\n";
    for (auto& [u, v] : violations) s << "violation " << u << ' ' << v << "\n";
    emit(out, s.str());
    return ok ? 0 : 1;
}

int run_decompose(const std::string& in, const std::string& out) {
    LabeledGraph g = parse_graph(slurp(in));
    auto dec = decompose_forest_2independent(g);
    if (!dec) {
        std::cerr << "decompose: no (2-independent, forest) decomposition\n";
        return 1;
    }
    emit(out, decomposition_to_json(*dec));
    return 0;
}

int run_lift_cubes(const std::string& in, const std::string& squares_path,
                   const std::string& out, const std::string& format,
                   const std::string& eps_str) {
    LabeledGraph g = parse_graph(slurp(in));
    SquareContactRep sq = square_rep_from_json(slurp(squares_path));
    IntervalDecision dec = decide_interval(g);
    if (!dec.sat) {
        emit(out, unsat_json());
        return 1;
    }
    ThresholdColoring col = to_threshold_coloring(g, *dec.witness);
    Rat eps = eps_str.empty() ? sq.side - Rat(col.threshold) : Rat::parse(eps_str);
    CubeScene scene = lift_cubes(g, sq, col, eps);
    emit(out, format == "txt" ? export_cube_scene_obj(scene) : cube_scene_to_json(scene));
    return 0;
}

int run_export_svg(const std::string& in, const std::string& rep_path,
                   const std::string& out) {
    LabeledGraph g = parse_graph(slurp(in));
    std::string text = slurp(rep_path);
    switch (rep_kind(text)) {
        case RepKind::Interval:
            emit(out, interval_rep_to_svg(g, interval_rep_from_json(text)));
            return 0;
        case RepKind::Disk:
            emit(out, disk_rep_to_svg(g, disk_rep_from_json(text)));
            return 0;
        case RepKind::Cubes:
            std::cerr << "export-svg: cube scenes are exported via lift-cubes --format txt\n";
            return 1;
    }
    return 2;
}

int run_gallery(const std::string& out_dir, unsigned seed) {
    fs::create_directories(out_dir);
    std::ostringstream verdicts;

    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
        f << text;
    };

    // Sungraph: placeholder labeling plus the first hard labeling found by
    // search, with a disk witness for the hard one.
    LabeledGraph sun = gen_sungraph();
    write("sungraph.txt", serialize_graph(sun));
    auto hard = find_hard_labelings(sun);
    verdicts << "sungraph hard labelings: " << hard.size() << "\n";
    if (!hard.empty()) {
        write("sungraph_hard.txt", serialize_graph(hard.front()));
        DiskRep disk = represent_degree2_contractible(hard.front());
        write("sungraph_hard_disk.json", disk_rep_to_json(disk));
        write("sungraph_hard_disk.svg", disk_rep_to_svg(hard.front(), disk));
        verdicts << "sungraph_hard interval: unsat, disk: sat\n";
    }

    // Wheels with the unrepresentable labeling.
    for (int n = 4; n <= 11; ++n) {
        LabeledGraph w = gen_wheel_hard(n);
        std::string name = "wheel_" + std::to_string(n);
        write(name + ".txt", serialize_graph(w));
        IntervalDecision dec = decide_interval(w);
        verdicts << name << " interval: " << (dec.sat ? "sat" : "unsat") << "\n";
        if (dec.sat) write(name + "_interval.json", interval_rep_to_json(*dec.witness));
    }

    // Girth-4 search corpus: every candidate structure, and the first
    // candidate/labeling pair the solver rejects.
    auto candidates = girth4_candidates();
    bool found = false;
    for (size_t i = 0; i < candidates.size(); ++i) {
        write("girth4_candidate_" + std::to_string(i) + ".txt",
              serialize_graph(candidates[i]));
        if (found) continue;
        auto bad = find_hard_labelings(candidates[i]);
        if (!bad.empty()) {
            write("girth4_unsat.txt", serialize_graph(bad.front()));
            verdicts << "girth4_unsat interval: unsat (candidate " << i << ", "
                     << bad.size() << " hard labelings)\n";
            found = true;
        }
    }
    if (!found) verdicts << "girth4: no unsat labeling found in candidate corpus\n";

    // Small mixed-label demo: a series-parallel instance with both an interval
    // witness and a lattice disk placement.
    LabeledGraph demo = gen_random_series_parallel(7, seed);
    write("demo.txt", serialize_graph(demo));
    IntervalDecision dec = decide_interval(demo);
    verdicts << "demo interval: " << (dec.sat ? "sat" : "unsat") << "\n";
    if (dec.sat) {
        write("demo_interval.json", interval_rep_to_json(*dec.witness));
        write("demo_interval.svg", interval_rep_to_svg(demo, *dec.witness));
    }
    DiskRep demo_disk = represent_degree2_contractible(demo);
    write("demo_disk.json", disk_rep_to_json(demo_disk));
    write("demo_disk.svg", disk_rep_to_svg(demo, demo_disk));
    verdicts << "demo disk: sat\n";

    write("verdicts.txt", verdicts.str());
    std::cout << verdicts.str();
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"weakrep: exact solver and constructions for near/far edge-labeled "
                 "graphs as weak unit interval and weak unit disk representations"};
    app.require_subcommand(1);

    std::string input = "-", output, rep_path, squares_path, format = "json";
    std::string diameter, eps;
    long long grid_radius = 0;
    unsigned seed = 1;

    auto add_io = [&](CLI::App* cmd, bool need_input = true) {
        if (need_input)
            cmd->add_option("-i,--input", input, "graph file (n m header, u v L lines)")
                ->required();
        cmd->add_option("-o,--output", output, "output path (default stdout)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "svg", "txt"}));
    };

    auto* solve = app.add_subcommand("solve", "decide weak unit interval representability");
    add_io(solve);

    auto* ci = app.add_subcommand("construct-interval",
                                  "d=2 construction for triangle-free outerplanar graphs");
    add_io(ci);

    auto* cd = app.add_subcommand("construct-disk",
                                  "d=2 lattice construction for degree-2 contractible graphs");
    add_io(cd);
    cd->add_option("--grid-radius", grid_radius,
                   "use the exhaustive lattice oracle over [-r,r]^2 instead");

    auto* ver = app.add_subcommand("verify", "check a representation against a labeling");
    add_io(ver);
    ver->add_option("-r,--rep", rep_path, "representation JSON")->required();
    ver->add_option("--diameter", diameter, "override the representation's diameter");

    auto* dec = app.add_subcommand("decompose",
                                   "search for a (2-independent, forest) decomposition");
    add_io(dec);

    auto* gal = app.add_subcommand("gallery", "materialize the named-instance corpus");
    gal->add_option("-o,--output", output, "output directory")->required();
    gal->add_option("--seed", seed, "seed for the randomized demo instance");

    auto* lift = app.add_subcommand("lift-cubes",
                                    "lift squares + threshold coloring to unit cubes");
    add_io(lift);
    lift->add_option("-s,--squares", squares_path, "square contact representation JSON")
        ->required();
    lift->add_option("--eps", eps, "strict slack in (0,1); default side - t");

    auto* svg = app.add_subcommand("export-svg", "render a representation as SVG");
    add_io(svg);
    svg->add_option("-r,--rep", rep_path, "representation JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(input, output, format);
        if (ci->parsed()) return run_construct_interval(input, output, format);
        if (cd->parsed()) return run_construct_disk(input, output, format, grid_radius);
        if (ver->parsed()) return run_verify(input, rep_path, output, diameter);
        if (dec->parsed()) return run_decompose(input, output);
        if (gal->parsed()) return run_gallery(output, seed);
        if (lift->parsed()) return run_lift_cubes(input, squares_path, output, format, eps);
        if (svg->parsed()) return run_export_svg(input, rep_path, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace weakrep
