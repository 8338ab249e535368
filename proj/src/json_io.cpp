#include "weakrep/json_io.hpp"

#include <json.hpp>

namespace weakrep {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string interval_rep_to_json(const IntervalRep& rep) {
    json j;
    j["diameter"] = rep.diameter.str();
    j["coords"] = json::object();
    for (auto& [v, c] : rep.coord) j["coords"][std::to_string(v)] = c.str();
    return dump(j);
}

IntervalRep interval_rep_from_json(const std::string& text) {
    json j = json::parse(text);
    IntervalRep rep;
    rep.diameter = Rat::parse(j.at("diameter").get<std::string>());
    for (auto& [k, v] : j.at("coords").items())
        rep.coord[std::stoi(k)] = Rat::parse(v.get<std::string>());
    return rep;
}

std::string unsat_json() { return dump(json{{"result", "unsat"}}); }

std::string disk_rep_to_json(const DiskRep& rep) {
    json j;
    j["diameter"] = rep.diameter;
    j["points"] = json::object();
    for (auto& [v, p] : rep.point) j["points"][std::to_string(v)] = {p.x, p.y};
    return dump(j);
}

DiskRep disk_rep_from_json(const std::string& text) {
    json j = json::parse(text);
    DiskRep rep;
    rep.diameter = j.at("diameter").get<long long>();
    for (auto& [k, v] : j.at("points").items())
        rep.point[std::stoi(k)] = {v.at(0).get<long long>(), v.at(1).get<long long>()};
    return rep;
}

std::string decomposition_to_json(const Decomposition& dec) {
    json j;
    j["iset"] = json::array();
    j["fset"] = json::array();
    for (int v : dec.iset) j["iset"].push_back(v);
    for (int v : dec.fset) j["fset"].push_back(v);
    return dump(j);
}

Decomposition decomposition_from_json(const std::string& text) {
    json j = json::parse(text);
    Decomposition dec;
    for (auto& v : j.at("iset")) dec.iset.insert(v.get<int>());
    for (auto& v : j.at("fset")) dec.fset.insert(v.get<int>());
    return dec;
}

std::string threshold_coloring_to_json(const ThresholdColoring& col) {
    json j;
    j["range"] = col.range;
    j["threshold"] = col.threshold;
    j["colors"] = json::object();
    for (auto& [v, c] : col.color) j["colors"][std::to_string(v)] = c;
    return dump(j);
}

ThresholdColoring threshold_coloring_from_json(const std::string& text) {
    json j = json::parse(text);
    ThresholdColoring col;
    col.range = j.at("range").get<long long>();
    col.threshold = j.at("threshold").get<long long>();
    for (auto& [k, v] : j.at("colors").items())
        col.color[std::stoi(k)] = v.get<long long>();
    return col;
}

std::string square_rep_to_json(const SquareContactRep& sq) {
    json j;
    j["side"] = sq.side.str();
    j["squares"] = json::object();
    for (auto& [v, c] : sq.center)
        j["squares"][std::to_string(v)] = {c.first.str(), c.second.str()};
    return dump(j);
}

SquareContactRep square_rep_from_json(const std::string& text) {
    json j = json::parse(text);
    SquareContactRep sq;
    sq.side = Rat::parse(j.at("side").get<std::string>());
    for (auto& [k, v] : j.at("squares").items())
        sq.center[std::stoi(k)] = {Rat::parse(v.at(0).get<std::string>()),
                                   Rat::parse(v.at(1).get<std::string>())};
    return sq;
}

std::string cube_scene_to_json(const CubeScene& scene) {
    json j;
    j["side"] = scene.side.str();
    j["cubes"] = json::object();
    for (auto& [v, b] : scene.base)
        j["cubes"][std::to_string(v)] = {b[0].str(), b[1].str(), b[2].str()};
    return dump(j);
}

CubeScene cube_scene_from_json(const std::string& text) {
    json j = json::parse(text);
    CubeScene scene;
    scene.side = Rat::parse(j.at("side").get<std::string>());
    for (auto& [k, v] : j.at("cubes").items())
        scene.base[std::stoi(k)] = {Rat::parse(v.at(0).get<std::string>()),
                                    Rat::parse(v.at(1).get<std::string>()),
                                    Rat::parse(v.at(2).get<std::string>())};
    return scene;
}

}  // namespace weakrep
