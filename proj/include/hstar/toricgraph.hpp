#ifndef HSTAR_TORICGRAPH_HPP
#define HSTAR_TORICGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "hstar/groebner.hpp"

namespace hstar {

/// A finite simple graph: ordered distinct vertex names, ordered distinct
/// undirected edges with distinct endpoints.
class Graph {
public:
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    /// Edges as index pairs into vertices(), in input order and orientation.
    const std::vector<std::pair<size_t, size_t>>& edges() const { return edges_; }
    size_t n_vertices() const { return vertices_.size(); }
    size_t n_edges() const { return edges_.size(); }
    std::pair<std::string, std::string> edge_names(size_t i) const;

    /// Index of the undirected edge {u, v}, or npos when absent.
    size_t find_edge(const std::string& u, const std::string& v) const;
    static constexpr size_t npos = static_cast<size_t>(-1);

    /// Q[e1..em], one variable per edge in edge order.
    Ring edge_ring() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<size_t, size_t>> edges_;
};

/// H is a subgraph of G: every vertex name and every undirected edge of H
/// appears in G.
bool is_subgraph(const Graph& H, const Graph& G);

/// A closed walk of even length given by its edge index sequence.
struct ClosedEvenWalk {
    std::vector<size_t> edge_indices;

    friend bool operator==(const ClosedEvenWalk& a, const ClosedEvenWalk& b) {
        return a.edge_indices == b.edge_indices;
    }
};

/// True when the edge sequence is a walk (consecutive edges share a vertex),
/// closed, and of even length >= 2.
bool is_closed_even_walk(const ClosedEvenWalk& w, const Graph& G);

/// All closed even walks of length 4..max_length, deduplicated up to rotation
/// and reflection, restricted to walks whose binomial is nonzero; sorted by
/// (length, lexicographic edge sequence). Enumeration effort is bounded by
/// caps.walk_limit.
std::vector<ClosedEvenWalk> closed_even_walks(const Graph& G, int max_length,
                                              const Caps& caps = default_caps());

/// f = (product of odd-position edges) - (product of even-position edges);
/// may be zero when the two products coincide.
Polynomial walk_binomial(const ClosedEvenWalk& w, const Graph& G, const Ring& edge_ring);

/// Kernel of e_i -> v_{i1} v_{i2}, by eliminating the vertex variables from
/// <e_i - v_{i1} v_{i2}>; returned in the edge ring. Every generator is a
/// pure difference of monomials.
Ideal toric_ideal_graph(const Graph& G, const Caps& caps = default_caps());

/// I_H computed in H's edge ring, re-expressed in G's edge ring through the
/// inclusion of H's edges into G's.
Ideal extend_subgraph_ideal(const Graph& H, const Graph& G, const Caps& caps = default_caps());

struct SubgraphTheoremReport {
    bool holds;
    std::string details;
    Ideal lhs;  // I_G * I_H^e
    Ideal rhs;  // I_H^e
};

/// Checks I_G * I_H^e = I_H^e by the elimination path; when H = G this is the
/// toric idempotency I_G * I_G = I_G, additionally cross-checked through the
/// binomial fast path with the all-ones witness.
SubgraphTheoremReport verify_subgraph_theorem(const Graph& G, const Graph& H,
                                              const Caps& caps = default_caps());

} // namespace hstar

#endif
