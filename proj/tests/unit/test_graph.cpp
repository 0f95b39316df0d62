#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "kgwb/error.hpp"
#include "kgwb/graph.hpp"

using namespace kgwb;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

bool contains(std::span<const std::size_t> positions, std::size_t pos) {
    return std::find(positions.begin(), positions.end(), pos) != positions.end();
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("add_node assigns a fresh id and increments the count") {
    PropertyGraph g;
    const auto id = g.add_node("Skill", "Writing");
    CHECK_FALSE(id.empty());
    CHECK(g.counts() == Counts{1, 0});
    CHECK(g.get_node(id).name == "Writing");
    CHECK(g.get_node(id).type_label == "Skill");
}

TEST_CASE("name defaults to the id") {
    PropertyGraph g;
    g.add_node("Skill", "", {}, "n7");
    CHECK(g.get_node("n7").name == "n7");
}

TEST_CASE("explicit duplicate id is rejected") {
    PropertyGraph g;
    g.add_node("Skill", "a", {}, "n1");
    CHECK(code_of([&] { g.add_node("Skill", "b", {}, "n1"); }) == ErrorCode::DuplicateId);
    CHECK(g.counts().nodes == 1);
}

TEST_CASE("empty type label is rejected") {
    PropertyGraph g;
    CHECK(code_of([&] { g.add_node(""); }) == ErrorCode::EmptyTypeLabel);
}

TEST_CASE("generated ids skip caller-supplied ones") {
    PropertyGraph g;
    g.add_node("A", "", {}, "n1");
    const auto a = g.add_node("A");
    const auto b = g.add_node("A");
    CHECK(a != "n1");
    CHECK(b != "n1");
    CHECK(a != b);
}

TEST_CASE("100 adds over 3 labels: type index sizes sum to 100 and match a scan") {
    testing::Rng rng(7);
    PropertyGraph g;
    const std::vector<std::string> labels{"A", "B", "C"};
    for (int i = 0; i < 100; ++i) g.add_node(rng.pick(labels));
    std::size_t total = 0;
    for (const auto& t : labels) {
        std::size_t scanned = 0;
        for (const auto& n : g.nodes()) scanned += n.type_label == t;
        CHECK(g.nodes_of_type(t).size() == scanned);
        total += g.nodes_of_type(t).size();
    }
    CHECK(total == 100);
}

TEST_CASE("edge appears in out of src and in of dst") {
    PropertyGraph g;
    g.add_node("A", "", {}, "n1");
    g.add_node("A", "", {}, "n2");
    const auto e = g.add_edge("n1", "n2", "requires");
    const auto epos = std::size_t{0};
    CHECK(g.get_edge(e).rel_label == "requires");
    CHECK(contains(g.out_edges(*g.node_index("n1")), epos));
    CHECK(contains(g.in_edges(*g.node_index("n2")), epos));
    CHECK(g.in_edges(*g.node_index("n1")).empty());
    CHECK(g.out_edges(*g.node_index("n2")).empty());
}

TEST_CASE("edge to a missing node is UnknownEndpoint") {
    PropertyGraph g;
    g.add_node("A", "", {}, "n1");
    CHECK(code_of([&] { g.add_edge("n1", "nX", "r"); }) == ErrorCode::UnknownEndpoint);
    CHECK(code_of([&] { g.add_edge("nX", "n1", "r"); }) == ErrorCode::UnknownEndpoint);
    CHECK(g.counts().edges == 0);
}

TEST_CASE("self-loop appears once in out and once in in") {
    PropertyGraph g;
    g.add_node("A", "", {}, "n1");
    g.add_edge("n1", "n1", "r");
    const auto pos = *g.node_index("n1");
    auto count = [](std::span<const std::size_t> s) { return std::count(s.begin(), s.end(), std::size_t{0}); };
    CHECK(count(g.out_edges(pos)) == 1);
    CHECK(count(g.in_edges(pos)) == 1);
}

TEST_CASE("parallel edges are kept with distinct ids") {
    PropertyGraph g;
    g.add_node("A", "", {}, "n1");
    g.add_node("A", "", {}, "n2");
    const auto a = g.add_edge("n1", "n2", "r");
    const auto b = g.add_edge("n1", "n2", "r");
    CHECK(a != b);
    CHECK(g.edges_of_relation("r").size() == 2);
    CHECK(code_of([&] { g.add_edge("n1", "n2", "r", {}, a); }) == ErrorCode::DuplicateId);
}

TEST_CASE("counts and lookups") {
    PropertyGraph g;
    CHECK(g.counts() == Counts{0, 0});
    g.add_node("A", "", {}, "n1");
    g.add_node("A", "", {}, "n2");
    g.add_node("B", "", {}, "n3");
    g.add_edge("n1", "n2", "r");
    g.add_edge("n2", "n3", "r");
    CHECK(g.counts() == Counts{3, 2});
    CHECK(code_of([&] { g.get_node("missing"); }) == ErrorCode::NotFound);
    CHECK(code_of([&] { g.get_edge("missing"); }) == ErrorCode::NotFound);
    CHECK(g.find_node("missing") == nullptr);
}

TEST_CASE("ingest of zero records") {
    PropertyGraph g;
    const auto r = g.ingest({}, {});
    CHECK(r.nodes_added == 0);
    CHECK(r.edges_added == 0);
    CHECK(r.rejected.empty());
}

TEST_CASE("ingest with one malformed node record reports its line") {
    std::istringstream nodes(
        "{\"id\":\"a\",\"type\":\"Skill\"}\n"
        "{\"id\":\"b\",\"type\":\"Skill\",\"name\":\"B\",\"attrs\":{\"level\":3}}\n"
        "{\"id\":\"c\",\"type\":\n"
        "{\"id\":\"d\",\"type\":\"Ability\"}\n"
        "{\"type\":\"Task\"}\n");
    std::istringstream edges(
        "{\"src\":\"a\",\"dst\":\"b\",\"rel\":\"r\"}\n"
        "{\"src\":\"a\",\"dst\":\"c\",\"rel\":\"r\"}\n"
        "{\"src\":\"a\",\"dst\":\"d\"}\n");
    PropertyGraph g;
    const auto r = g.ingest(nodes, edges);
    CHECK(r.nodes_added == 4);
    CHECK(r.edges_added == 1);
    REQUIRE(r.rejected.size() == 3);
    CHECK(r.rejected[0].kind == "node");
    CHECK(r.rejected[0].ordinal == 3);
    CHECK(r.rejected[1].kind == "edge");
    CHECK(r.rejected[1].ordinal == 2);
    CHECK(r.rejected[1].reason.find("unknown endpoint") != std::string::npos);
    CHECK(r.rejected[2].ordinal == 3);
    CHECK(std::get<std::int64_t>(g.get_node("b").attrs.at("level")) == 3);
}

TEST_CASE("ingest rejects nested attribute values and duplicate ids") {
    std::istringstream nodes(
        "{\"id\":\"a\",\"type\":\"Skill\",\"attrs\":{\"x\":[1]}}\n"
        "{\"id\":\"b\",\"type\":\"Skill\"}\n"
        "{\"id\":\"b\",\"type\":\"Skill\"}\n"
        "{\"id\":\"c\",\"type\":\"\"}\n");
    std::istringstream edges("");
    PropertyGraph g;
    const auto r = g.ingest(nodes, edges);
    CHECK(r.nodes_added == 1);
    CHECK(r.rejected.size() == 3);
    CHECK(g.counts().nodes == r.nodes_added);
}

TEST_CASE("ingest totals: added plus rejected equals records") {
    testing::Rng rng(11);
    for (int round = 0; round < 20; ++round) {
        std::ostringstream nodes, edges;
        std::size_t node_lines = 0, edge_lines = 0;
        for (int i = 0; i < 30; ++i, ++node_lines) {
            if (rng.chance(10)) {
                nodes << "{broken\n";
            } else {
                nodes << Json{{"id", "x" + std::to_string(rng.below(25))}, {"type", rng.pick(testing::kTypes)}}.dump()
                      << '\n';
            }
        }
        for (int i = 0; i < 40; ++i, ++edge_lines) {
            edges << Json{{"src", "x" + std::to_string(rng.below(30))},
                          {"dst", "x" + std::to_string(rng.below(30))},
                          {"rel", rng.pick(testing::kRelations)}}
                         .dump()
                  << '\n';
        }
        std::istringstream ni(nodes.str()), ei(edges.str());
        PropertyGraph g;
        const auto r = g.ingest(ni, ei);
        std::size_t node_rej = 0, edge_rej = 0;
        for (const auto& rej : r.rejected) (rej.kind == "node" ? node_rej : edge_rej)++;
        CHECK(r.nodes_added + node_rej == node_lines);
        CHECK(r.edges_added + edge_rej == edge_lines);
        CHECK(g.counts() == Counts{r.nodes_added, r.edges_added});
    }
}

TEST_CASE("property: referential integrity, degree sum, and index-vs-scan equivalence") {
    testing::Rng rng(2024);
    for (int round = 0; round < 100; ++round) {
        const auto g = testing::random_graph(rng);
        std::size_t adjacency = 0;
        for (std::size_t i = 0; i < g.nodes().size(); ++i) adjacency += g.out_edges(i).size() + g.in_edges(i).size();
        CHECK(adjacency == 2 * g.counts().edges);
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const auto& edge = g.edges()[e];
            REQUIRE(g.has_node(edge.src));
            REQUIRE(g.has_node(edge.dst));
            CHECK(g.nodes()[g.src_index(e)].id == edge.src);
            CHECK(g.nodes()[g.dst_index(e)].id == edge.dst);
        }
        for (const auto& t : testing::kTypes) {
            std::vector<std::size_t> scanned;
            for (std::size_t i = 0; i < g.nodes().size(); ++i) {
                if (g.nodes()[i].type_label == t) scanned.push_back(i);
            }
            const auto indexed = g.nodes_of_type(t);
            CHECK(std::vector<std::size_t>(indexed.begin(), indexed.end()) == scanned);
        }
        for (const auto& r : testing::kRelations) {
            std::size_t scanned = 0;
            for (const auto& e : g.edges()) scanned += e.rel_label == r;
            CHECK(g.edges_of_relation(r).size() == scanned);
        }
    }
}

TEST_CASE("record serialization round-trips through ingest") {
    testing::Rng rng(5);
    const auto g = testing::random_graph(rng);
    std::vector<JsonLine> nodes, edges;
    for (const auto& n : g.nodes()) nodes.push_back({nodes.size() + 1, node_to_json(n), {}});
    for (const auto& e : g.edges()) edges.push_back({edges.size() + 1, edge_to_json(e), {}});
    PropertyGraph copy;
    const auto r = copy.ingest(nodes, edges);
    CHECK(r.rejected.empty());
    REQUIRE(copy.counts() == g.counts());
    for (std::size_t i = 0; i < g.nodes().size(); ++i) CHECK(copy.nodes()[i] == g.nodes()[i]);
    for (std::size_t i = 0; i < g.edges().size(); ++i) CHECK(copy.edges()[i] == g.edges()[i]);
}

}  // TEST_SUITE
