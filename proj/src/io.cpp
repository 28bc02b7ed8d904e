#include "domtri/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace domtri {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const PlaneGraph& g) {
    ordered_json doc;
    ordered_json outer = ordered_json::array();
    for (const Dart& d : g.outer_darts()) outer.push_back({d.tail, d.head});
    doc["outer_darts"] = std::move(outer);

    ordered_json rot = ordered_json::object();
    for (Vertex v : g.vertices()) {
        auto r = g.rotation(v);
        std::vector<Vertex> canon(r.begin(), r.end());
        if (!canon.empty()) std::rotate(canon.begin(), std::min_element(canon.begin(), canon.end()), canon.end());
        rot[std::to_string(v)] = canon;
    }
    doc["rotation"] = std::move(rot);
    doc["vertices"] = g.vertices();
    return doc.dump();
}

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorCode::FormatError, what); }

Vertex as_vertex(const nlohmann::json& j, const char* where) {
    if (!j.is_number_integer()) format_error(std::string(where) + ": vertex ids must be integers");
    return j.get<Vertex>();
}

}  // namespace

PlaneGraph from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        format_error(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) format_error("top level must be an object");
    for (const char* key : {"vertices", "rotation", "outer_darts"})
        if (!doc.contains(key)) format_error(std::string("missing key \"") + key + "\"");
    if (!doc["vertices"].is_array()) format_error("\"vertices\" must be an array");
    if (!doc["rotation"].is_object()) format_error("\"rotation\" must be an object keyed by vertex id");
    if (!doc["outer_darts"].is_array()) format_error("\"outer_darts\" must be an array of [tail, head] pairs");

    RotationMap rotation;
    for (const auto& v : doc["vertices"]) {
        Vertex id = as_vertex(v, "vertices");
        if (!rotation.emplace(id, std::vector<Vertex>{}).second)
            format_error("vertex " + std::to_string(id) + " listed twice");
    }
    for (const auto& [key, list] : doc["rotation"].items()) {
        Vertex id{};
        std::size_t used = 0;
        try {
            id = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size()) format_error("rotation key \"" + key + "\" is not an integer");
        auto it = rotation.find(id);
        if (it == rotation.end()) format_error("rotation given for undeclared vertex " + key);
        if (!list.is_array()) format_error("rotation of " + key + " must be an array");
        for (const auto& w : list) it->second.push_back(as_vertex(w, "rotation"));
    }
    std::vector<Dart> outer;
    for (const auto& d : doc["outer_darts"]) {
        if (!d.is_array() || d.size() != 2) format_error("outer dart must be a [tail, head] pair");
        outer.push_back({as_vertex(d[0], "outer_darts"), as_vertex(d[1], "outer_darts")});
    }
    return PlaneGraph::build(rotation, outer);
}

PlaneGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) format_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::string export_dot(const PlaneGraph& g, const DotAnnotations& notes) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v : g.vertices()) {
        out << "  " << v;
        std::vector<std::string> attrs;
        if (contains(notes.dominating, v)) attrs.push_back("style=filled, fillcolor=black, fontcolor=white");
        if (contains(notes.removed, v)) attrs.push_back("color=red");
        if (contains(notes.external, v)) attrs.push_back("shape=box");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace domtri
