#include "hstar/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hstar/errors.hpp"
#include "hstar/parser.hpp"

namespace hstar {

using nlohmann::json;

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what(), e.byte);
    }
}

namespace {

const json& require_key(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw validation_error(std::string(what) + " is missing the '" + key + "' key");
    return j.at(key);
}

std::vector<std::string> string_array(const json& j, const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw validation_error(std::string(what) + " must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

Ring ring_from_json(const json& j, const Caps& caps) {
    std::vector<std::string> vars = string_array(require_key(j, "vars", "ring"), "ring 'vars'");
    const json& f = require_key(j, "field", "ring");
    if (f.is_string() && f.get<std::string>() == "Q") return Ring(vars);
    if (f.is_object() && f.contains("cyclotomic")) {
        const json& m = f.at("cyclotomic");
        if (!m.is_number_integer() || m.get<long>() < 1)
            throw validation_error("cyclotomic order must be a positive integer");
        long order = m.get<long>();
        if (order > caps.cyclo_order_cap)
            throw cap_exceeded_error("cyclotomic order " + std::to_string(order) +
                                     " exceeds the cap " + std::to_string(caps.cyclo_order_cap));
        return Ring(vars, FieldSpec::cyclotomic(order));
    }
    throw validation_error("ring 'field' must be \"Q\" or {\"cyclotomic\": m}");
}

Ideal ideal_from_json(const json& j, const Caps& caps) {
    Ring ring = ring_from_json(require_key(j, "ring", "ideal"), caps);
    std::vector<std::string> texts = string_array(require_key(j, "generators", "ideal"),
                                                  "ideal 'generators'");
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < texts.size(); ++i) {
        try {
            gens.push_back(parse_polynomial(texts[i], ring));
        } catch (const parse_error& e) {
            throw parse_error("generator " + std::to_string(i + 1) + ": " + texts[i],
                              e.position());
        }
    }
    return Ideal(ring, std::move(gens));
}

Ideal load_ideal(const std::string& path, const Caps& caps) {
    return ideal_from_json(load_json_file(path), caps);
}

ProjectivePoint point_from_json(const json& j, const Ring& ring) {
    std::vector<std::string> texts = string_array(require_key(j, "coords", "point"),
                                                  "point 'coords'");
    std::vector<FieldElement> coords;
    for (const auto& t : texts) coords.push_back(parse_field_element(t, ring.field()));
    return ProjectivePoint(ring, std::move(coords));
}

ProjectivePoint parse_point_arg(const std::string& text, const Ring& ring) {
    if (std::filesystem::exists(text)) return point_from_json(load_json_file(text), ring);
    if (text.find(':') == std::string::npos)
        throw validation_error("point argument is neither a file nor an inline c0:c1:...:cn");
    std::vector<FieldElement> coords;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ':'))
        coords.push_back(parse_field_element(piece, ring.field()));
    return ProjectivePoint(ring, std::move(coords));
}

Graph graph_from_json(const json& j) {
    std::vector<std::string> vertices =
        string_array(require_key(j, "vertices", "graph"), "graph 'vertices'");
    const json& ej = require_key(j, "edges", "graph");
    if (!ej.is_array()) throw validation_error("graph 'edges' must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw validation_error("each graph edge must be a [\"u\", \"v\"] pair");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(std::move(vertices), edges);
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

nlohmann::json ring_to_json(const Ring& r) {
    json f;
    if (r.field().is_cyclotomic)
        f = json{{"cyclotomic", r.field().cyclotomic_order}};
    else
        f = "Q";
    return json{{"vars", r.vars()}, {"field", f}};
}

nlohmann::json ideal_to_json(const Ideal& I) {
    std::vector<std::string> gens;
    for (const auto& g : I.generators()) gens.push_back(to_string(g));
    if (gens.empty()) gens.push_back("0");
    return json{{"ring", ring_to_json(I.ring())}, {"generators", gens}};
}

nlohmann::json point_to_json(const ProjectivePoint& p) {
    std::vector<std::string> coords;
    for (const auto& c : p.coords()) coords.push_back(to_string(c));
    return json{{"coords", coords}};
}

nlohmann::json graph_to_json(const Graph& g) {
    std::vector<std::vector<std::string>> edges;
    for (size_t i = 0; i < g.n_edges(); ++i) {
        auto [u, v] = g.edge_names(i);
        edges.push_back({u, v});
    }
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

} // namespace hstar
