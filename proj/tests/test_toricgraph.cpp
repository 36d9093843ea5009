#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hstar/errors.hpp"
#include "hstar/parser.hpp"
#include "hstar/toricgraph.hpp"

using namespace hstar;

namespace {

Graph c4() { return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }

Graph c3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

std::vector<std::string> gen_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(to_string(g));
    return out;
}

} // namespace

TEST_CASE("graph construction and validation") {
    Graph g = c4();
    CHECK(g.n_vertices() == 4);
    CHECK(g.n_edges() == 4);
    CHECK(g.edge_names(2) == std::make_pair(std::string("c"), std::string("d")));
    CHECK(g.find_edge("a", "b") == 0);
    CHECK(g.find_edge("b", "a") == 0);  // edges are unordered
    CHECK(g.find_edge("d", "a") == 3);
    CHECK(g.find_edge("a", "c") == Graph::npos);
    CHECK(g.edge_ring().vars() == std::vector<std::string>{"e1", "e2", "e3", "e4"});

    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "a"}}), validation_error);        // loop
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), validation_error);
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), validation_error);                  // dup vertex
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "c"}}), validation_error);        // unknown endpoint
    CHECK_THROWS_AS(Graph({""}, {}), validation_error);
    CHECK(Graph({"a"}, {}).n_edges() == 0);
}

TEST_CASE("subgraph relation") {
    Graph g = c4();
    Graph p3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(is_subgraph(p3, g));
    CHECK(is_subgraph(g, g));
    CHECK(!is_subgraph(g, p3));
    CHECK(!is_subgraph(Graph({"a", "c"}, {{"a", "c"}}), g));      // missing edge
    CHECK(!is_subgraph(Graph({"a", "x"}, {}), g));                // missing vertex
}

TEST_CASE("closed even walk recognition") {
    Graph g = c4();
    CHECK(is_closed_even_walk(ClosedEvenWalk{{0, 1, 2, 3}}, g));
    CHECK(is_closed_even_walk(ClosedEvenWalk{{1, 2, 3, 0}}, g));  // any starting edge
    CHECK(is_closed_even_walk(ClosedEvenWalk{{0, 0}}, g));        // back and forth
    CHECK(!is_closed_even_walk(ClosedEvenWalk{{0, 1, 2}}, g));    // odd length
    CHECK(!is_closed_even_walk(ClosedEvenWalk{{0, 2, 0, 2}}, g)); // disconnected hops
    CHECK(!is_closed_even_walk(ClosedEvenWalk{{0, 1}}, g));       // not closed
    CHECK(!is_closed_even_walk(ClosedEvenWalk{{}}, g));
    CHECK(!is_closed_even_walk(ClosedEvenWalk{{0, 7}}, g));       // bad index
}

TEST_CASE("walk binomials alternate odd and even positions") {
    Graph g = c4();
    Ring r = g.edge_ring();
    CHECK(to_string(walk_binomial(ClosedEvenWalk{{0, 1, 2, 3}}, g, r)) == "e1*e3 - e2*e4");
    CHECK(walk_binomial(ClosedEvenWalk{{0, 0}}, g, r).is_zero());
    CHECK(walk_binomial(ClosedEvenWalk{{0, 1, 1, 0}}, g, r).is_zero());
    CHECK_THROWS_AS(walk_binomial(ClosedEvenWalk{{0, 1, 2}}, g, r), validation_error);
}

TEST_CASE("walk enumeration dedupes rotations and reflections") {
    Graph g = c4();
    auto walks = closed_even_walks(g, 4);
    REQUIRE(walks.size() == 1);
    CHECK(walks[0] == ClosedEvenWalk{{0, 1, 2, 3}});

    // odd cycles admit no walk with a nonzero binomial
    CHECK(closed_even_walks(c3(), 6).empty());

    auto longer = closed_even_walks(g, 8);
    CHECK(longer.size() > 1);
    for (const auto& w : longer) {
        CHECK(is_closed_even_walk(w, g));
        CHECK(!walk_binomial(w, g, g.edge_ring()).is_zero());
        // canonical representative: first among its rotations and reflections
        std::vector<size_t> seq = w.edge_indices;
        std::vector<size_t> best = seq;
        for (int pass = 0; pass < 2; ++pass) {
            for (size_t s = 0; s < seq.size(); ++s) {
                std::rotate(seq.begin(), seq.begin() + 1, seq.end());
                best = std::min(best, seq);
            }
            std::reverse(seq.begin(), seq.end());
        }
        CHECK(w.edge_indices == best);
    }

    Caps tiny = default_caps();
    tiny.walk_limit = 3;
    CHECK_THROWS_AS(closed_even_walks(g, 8, tiny), cap_exceeded_error);
}

TEST_CASE("toric ideals of small graphs") {
    Ideal ic4 = toric_ideal_graph(c4());
    CHECK(ic4.ring() == c4().edge_ring());
    CHECK(gen_strings(ic4) == std::vector<std::string>{"e1*e3 - e2*e4"});

    CHECK(toric_ideal_graph(c3()).is_zero());
    CHECK(toric_ideal_graph(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})).is_zero());

    Graph c6({"a", "b", "c", "d", "e", "f"},
             {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}});
    CHECK(gen_strings(toric_ideal_graph(c6)) ==
          std::vector<std::string>{"e1*e3*e5 - e2*e4*e6"});

    CHECK_THROWS_AS(toric_ideal_graph(Graph({"a"}, {})), validation_error);
}

TEST_CASE("subgraph ideals extend into the larger edge ring") {
    Graph g({"a", "b", "c", "d"},
            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}});  // C4 plus chord
    Ideal ext = extend_subgraph_ideal(c4(), g);
    CHECK(ext.ring() == g.edge_ring());
    CHECK(gen_strings(ext) == std::vector<std::string>{"e1*e3 - e2*e4"});

    Graph p3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Ideal zero = extend_subgraph_ideal(p3, g);
    CHECK(zero.ring() == g.edge_ring());
    CHECK(zero.is_zero());

    CHECK_THROWS_AS(extend_subgraph_ideal(g, c4()), validation_error);  // not a subgraph

    // the chord creates a triangle, so the degree matrix gains rank and the
    // kernel stays one-dimensional: I_G is still just the square binomial
    Ideal ig = toric_ideal_graph(g);
    CHECK(gen_strings(ig) == std::vector<std::string>{"e1*e3 - e2*e4"});
    GroebnerBasis gb = reduced_groebner_basis(ig, MonomialOrder::grevlex());
    CHECK(normal_form(parse_polynomial("e1*e3 - e2*e4", g.edge_ring()), gb.elements, gb.order)
              .is_zero());
    CHECK(ideal_equal(ig, ext, MonomialOrder::grevlex()));
}

TEST_CASE("subgraph theorem verification") {
    Graph g = c4();
    Graph p3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    SubgraphTheoremReport rep = verify_subgraph_theorem(g, p3);
    CHECK(rep.holds);
    CHECK(rep.lhs.is_zero());
    CHECK(rep.rhs.is_zero());
    CHECK(rep.details.find("holds") != std::string::npos);

    SubgraphTheoremReport self = verify_subgraph_theorem(g, g);
    CHECK(self.holds);
    CHECK(ideal_equal(self.lhs, self.rhs, MonomialOrder::grevlex()));
    CHECK(gen_strings(self.rhs) == std::vector<std::string>{"e1*e3 - e2*e4"});
    CHECK(self.details.find("certified") != std::string::npos);
}
