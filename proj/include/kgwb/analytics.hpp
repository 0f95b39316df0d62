#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/corpus.hpp"
#include "kgwb/graph.hpp"

namespace kgwb::analytics {

// Node-link views stop being readable well before a thousand nodes.
inline constexpr std::size_t kDefaultNodeCap = 500;

struct SuperNode {
    std::string type_label;
    std::size_t node_count = 0;

    bool operator==(const SuperNode&) const = default;
};

struct SuperEdge {
    std::string src_type;
    std::string rel_label;
    std::string dst_type;
    std::size_t edge_count = 0;

    bool operator==(const SuperEdge&) const = default;
};

// Type-level summary. super_nodes sorted by label, super_edges by
// (src_type, rel_label, dst_type).
struct FacetedGraph {
    std::vector<SuperNode> super_nodes;
    std::vector<SuperEdge> super_edges;

    bool operator==(const FacetedGraph&) const = default;
};

struct DistributionEntry {
    std::string label;
    std::size_t count = 0;
    std::optional<std::string> name;  // display name when label is a node id

    bool operator==(const DistributionEntry&) const = default;
};

struct Distribution {
    std::vector<DistributionEntry> entries;
    std::size_t total = 0;

    bool operator==(const Distribution&) const = default;
};

struct RelationDegree {
    std::string rel_label;
    std::size_t in_count = 0;
    std::size_t out_count = 0;

    bool operator==(const RelationDegree&) const = default;
};

struct DegreeProfile {
    NodeId node_id;
    std::vector<RelationDegree> relations;  // sorted by rel_label

    bool operator==(const DegreeProfile&) const = default;
};

struct Subgraph {
    std::vector<Node> nodes;  // breadth-first, id-ordered within a level
    std::vector<Edge> edges;  // sorted by id
    bool truncated = false;
    std::vector<NodeId> frontier;

    bool operator==(const Subgraph&) const = default;
};

FacetedGraph faceted_graph(const PropertyGraph& graph);

// Ordered by count descending, then label ascending.
Distribution node_type_distribution(const PropertyGraph& graph);

// With `node_type`, counts only edges with at least one endpoint of that
// type (each edge once).
Distribution relation_type_distribution(const PropertyGraph& graph,
                                        std::optional<std::string_view> node_type = std::nullopt);

// Throws NotFound. A self-loop counts once in each direction.
DegreeProfile degree_profile(const PropertyGraph& graph, std::string_view node_id);

// Undirected BFS ball of radius `depth` around `node_id`. Levels are
// expanded in id order and inclusion stops at `node_cap` nodes; `frontier`
// then lists included nodes that still had unincluded neighbors inside the
// radius. An empty `rel_filter` admits every relation; otherwise only the
// listed labels are traversed and returned.
//
// Throws NotFound, or InvalidArgument when node_cap == 0.
Subgraph neighborhood(const PropertyGraph& graph, std::string_view node_id, std::size_t depth,
                      const std::vector<std::string>& rel_filter = {},
                      std::size_t node_cap = kDefaultNodeCap);

// Per-node score = total degree + linked corpus mentions, for every node of
// `entity_type`. Ordered ascending (rarest first), ties by node id.
Distribution entity_frequency(const PropertyGraph& graph, std::string_view entity_type,
                              const CorpusStore& corpus);

Json to_json(const FacetedGraph& faceted);
Json to_json(const Distribution& distribution);
Json to_json(const DegreeProfile& profile);
Json to_json(const Subgraph& subgraph);

}  // namespace kgwb::analytics
