#include "generators.h"
#include "report.h"
#include "svg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace rp;
namespace fs = std::filesystem;

namespace {

enum Exit { Ok = 0, InputError = 1, InternalError = 2, NoPath = 3 };

nlohmann::ordered_json point_json(const Point& p) { return {format_scalar(p.x()), format_scalar(p.y())}; }

int cmd_solve(const std::string& file, const std::string& svg, bool as_json)
{
    Instance inst;
    try {
        inst = load_instance(file);
    } catch (const std::exception& e) {
        std::cerr << "reflectpath: " << file << ": " << e.what() << "\n";
        return InputError;
    }
    Region region(inst);
    MirrorSystem sys = run(region);
    std::optional<ReflectionPath> path;
    if (sys.termination != Termination::Exhausted) {
        path = extract_path(region, sys);
        ValidityReport v = validate_path(path->points, region);
        if (!v.ok()) {
            std::cerr << "reflectpath: extracted path is invalid: " << v.summary() << "\n";
            return InternalError;
        }
    }
    if (!svg.empty()) {
        std::ofstream out(svg);
        out << render_svg(region, sys, path);
        if (!out) {
            std::cerr << "reflectpath: cannot write " << svg << "\n";
            return InputError;
        }
    }
    if (as_json) {
        nlohmann::ordered_json j;
        j["version"] = RunReport::version;
        j["name"] = inst.name;
        j["n"] = inst.polygon.size();
        j["eaves"] = region.eaves().size();
        j["verdict"] = path ? "path" : "no-cdrp";
        std::vector<size_t> sizes;
        for (auto& l : sys.layers)
            sizes.push_back(l.size());
        j["layers"] = sizes;
        if (path) {
            j["k"] = path->turn_count();
            auto pts = nlohmann::ordered_json::array();
            for (auto& p : path->points)
                pts.push_back(point_json(p));
            j["points"] = pts;
            auto turns = nlohmann::ordered_json::array();
            for (size_t i = 0; i < path->turns.size(); ++i)
                turns.push_back({{"edge", path->turns[i].edge},
                                 {"lambda", format_scalar(path->turns[i].lambda)},
                                 {"dir", to_string(path->turn_dir[i])},
                                 {"layer", path->layer[i]}});
            j["turns"] = turns;
            auto crossings = nlohmann::ordered_json::array();
            for (auto& c : path->crossings)
                crossings.push_back({{"eave", c.eave}, {"link", c.link}, {"at", point_json(c.point)}});
            j["crossings"] = crossings;
        }
        std::cout << j.dump() << "\n";
    } else if (path) {
        std::cout << "instance " << inst.name << "\n" << path->str();
    } else {
        std::cout << "instance " << inst.name << "\nverdict no constrained path\n";
    }
    return path ? Ok : NoPath;
}

std::vector<std::string> instance_files(const std::string& where)
{
    std::vector<std::string> files;
    if (fs::is_directory(where)) {
        for (auto& entry : fs::directory_iterator(where)) {
            std::string p = entry.path().string();
            if (entry.is_regular_file() && p.size() > 10 && p.ends_with(".poly.json"))
                files.push_back(p);
        }
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(where);
    }
    return files;
}

int cmd_check(const std::string& where, long budget, bool timings, bool tamper)
{
    if (!fs::exists(where)) {
        std::cerr << "reflectpath: " << where << ": no such file or directory\n";
        return InputError;
    }
    std::vector<std::string> files = instance_files(where);
    std::vector<std::string> lines(files.size());
    std::vector<int> status(files.size(), Ok);
    AnalyzeOptions opt;
    opt.budget = budget;
    opt.tamper = tamper;
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < files.size(); ++i) {
        try {
            RunReport rep = analyze(load_instance(files[i]), opt);
            lines[i] = rep.json(timings);
            status[i] = rep.ok() ? Ok : InternalError;
        } catch (const ParseError& e) {
            lines[i] = nlohmann::json({{"file", files[i]}, {"error", e.what()}}).dump();
            status[i] = InputError;
        } catch (const InvalidInstance& e) {
            lines[i] = nlohmann::json({{"file", files[i]}, {"error", e.what()}}).dump();
            status[i] = InputError;
        } catch (const std::exception& e) {
            lines[i] = nlohmann::json({{"file", files[i]}, {"error", e.what()}}).dump();
            status[i] = InternalError;
        }
    }
    int worst = Ok;
    for (size_t i = 0; i < files.size(); ++i) {
        std::cout << lines[i] << "\n";
        if (status[i] == InternalError || (status[i] == InputError && worst == Ok))
            worst = status[i];
    }
    return worst;
}

int cmd_gen(const std::string& kind, int n, uint64_t seed, int eaves, const std::string& dir)
{
    Instance inst;
    try {
        if (kind == "spiral")
            inst = gen_spiral(n);
        else if (kind == "winding")
            inst = gen_winding_spiral(n);
        else if (kind == "random")
            inst = gen_random_simple(n, seed);
        else if (kind == "convex")
            inst = gen_convex(n, seed);
        else
            inst = gen_corridor(eaves);
    } catch (const GenerationFailure& e) {
        std::cerr << "reflectpath: " << e.what() << "\n";
        return InternalError;
    }
    fs::create_directories(dir);
    std::string file = (fs::path(dir) / (inst.name + ".poly.json")).string();
    save_instance(inst, file);
    std::cout << file << "\n";
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"minimum constrained diffuse reflection paths in simple polygons"};
    app.require_subcommand(1);

    std::string file, svg, where, kind, dir = ".";
    bool as_json = false, timings = false, tamper = false;
    long budget = -1;
    int n = 12, eaves = 1;
    uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "compute a minimum-turn constrained path");
    solve->add_option("file", file, "instance (.poly.json)")->required();
    solve->add_option("--svg", svg, "write a rendering");
    solve->add_flag("--json", as_json, "print one JSON record");

    auto* check = app.add_subcommand("check", "cross-check the engine against oracles and bounds");
    check->add_option("path", where, "instance file or directory")->required();
    check->add_option("--budget", budget, "oracle sequence cap");
    check->add_flag("--timings", timings, "include wall-clock fields");
    check->add_flag("--tamper", tamper, "misreport k by one (harness sanity)");

    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->add_option("kind", kind, "instance class")
        ->required()
        ->check(CLI::IsMember({"spiral", "winding", "random", "convex", "corridor"}));
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--eaves", eaves, "corridor eave count");
    gen->add_option("--out", dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*solve)
            return cmd_solve(file, svg, as_json);
        if (*check)
            return cmd_check(where, budget, timings, tamper);
        return cmd_gen(kind, n, seed, eaves, dir);
    } catch (const std::exception& e) {
        std::cerr << "reflectpath: internal error: " << e.what() << "\n";
        return InternalError;
    }
}
