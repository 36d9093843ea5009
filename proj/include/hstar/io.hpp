#ifndef HSTAR_IO_HPP
#define HSTAR_IO_HPP

#include <string>

#include <json.hpp>

#include "hstar/caps.hpp"
#include "hstar/ideal.hpp"
#include "hstar/point.hpp"
#include "hstar/toricgraph.hpp"

namespace hstar {

/// Parses a JSON document from a file; malformed JSON becomes a parse_error
/// carrying the byte position, an unreadable file a validation_error.
nlohmann::json load_json_file(const std::string& path);

// Schemas:
//   ideal  {"ring": {"vars": [...], "field": "Q" | {"cyclotomic": m}}, "generators": ["...", ...]}
//   point  {"coords": ["...", ...]}   (field elements over the ambient ring's field)
//   graph  {"vertices": [...], "edges": [["u", "v"], ...]}

Ring ring_from_json(const nlohmann::json& j, const Caps& caps = default_caps());
Ideal ideal_from_json(const nlohmann::json& j, const Caps& caps = default_caps());
Ideal load_ideal(const std::string& path, const Caps& caps = default_caps());

ProjectivePoint point_from_json(const nlohmann::json& j, const Ring& ring);
/// Accepts either a path to a point file or an inline "c0:c1:...:cn".
ProjectivePoint parse_point_arg(const std::string& text, const Ring& ring);

Graph graph_from_json(const nlohmann::json& j);
Graph load_graph(const std::string& path);

nlohmann::json ring_to_json(const Ring& r);
nlohmann::json ideal_to_json(const Ideal& I);  // generators as canonical strings
nlohmann::json point_to_json(const ProjectivePoint& p);
nlohmann::json graph_to_json(const Graph& g);

} // namespace hstar

#endif
