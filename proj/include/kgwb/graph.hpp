#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/jsonl.hpp"
#include "kgwb/value.hpp"

namespace kgwb {

using NodeId = std::string;
using EdgeId = std::string;

struct Node {
    NodeId id;
    std::string type_label;
    std::string name;
    AttrMap attrs;

    bool operator==(const Node&) const = default;
};

struct Edge {
    EdgeId id;
    NodeId src;
    NodeId dst;
    std::string rel_label;
    AttrMap attrs;

    bool operator==(const Edge&) const = default;
};

struct Counts {
    std::size_t nodes = 0;
    std::size_t edges = 0;

    bool operator==(const Counts&) const = default;
};

// A record that ingestion refused. `kind` names the input stream ("node",
// "edge", "document", "candidate"); `ordinal` is its 1-based line number.
struct Rejection {
    std::string kind;
    std::size_t ordinal = 0;
    std::string reason;
};

struct IngestReport {
    std::size_t nodes_added = 0;
    std::size_t edges_added = 0;
    std::vector<Rejection> rejected;
};

// Directed heterogeneous multigraph with type, relation, and adjacency
// indexes. Not synchronized; see Workbench for the shared, locked handle.
//
// Nodes and edges are stored densely and never removed, so positions into
// nodes()/edges() are stable and the indexes hold positions.
class PropertyGraph {
public:
    // Throws EmptyTypeLabel, DuplicateId, or InvalidArgument (empty explicit id).
    NodeId add_node(std::string type_label, std::string name = {}, AttrMap attrs = {},
                    std::optional<NodeId> id = std::nullopt);

    // Throws UnknownEndpoint, DuplicateId, or InvalidArgument (empty label/id).
    EdgeId add_edge(const NodeId& src, const NodeId& dst, std::string rel_label,
                    AttrMap attrs = {}, std::optional<EdgeId> id = std::nullopt);

    // Throws NotFound.
    const Node& get_node(std::string_view id) const;
    const Edge& get_edge(std::string_view id) const;

    const Node* find_node(std::string_view id) const noexcept;
    const Edge* find_edge(std::string_view id) const noexcept;
    std::optional<std::size_t> node_index(std::string_view id) const noexcept;
    bool has_node(std::string_view id) const noexcept { return node_index(id).has_value(); }
    bool has_edge(std::string_view id) const noexcept { return find_edge(id) != nullptr; }

    Counts counts() const noexcept { return {nodes_.size(), edges_.size()}; }

    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    // Positions into nodes() / edges(), in insertion order.
    std::span<const std::size_t> nodes_of_type(std::string_view type_label) const noexcept;
    std::span<const std::size_t> edges_of_relation(std::string_view rel_label) const noexcept;
    std::span<const std::size_t> out_edges(std::size_t node_pos) const { return out_.at(node_pos); }
    std::span<const std::size_t> in_edges(std::size_t node_pos) const { return in_.at(node_pos); }
    std::size_t src_index(std::size_t edge_pos) const { return edge_ends_.at(edge_pos).first; }
    std::size_t dst_index(std::size_t edge_pos) const { return edge_ends_.at(edge_pos).second; }

    // Sorted label sets.
    std::vector<std::string> type_labels() const;
    std::vector<std::string> relation_labels() const;

    // Validates and applies each record independently; failing records are
    // listed in the report and leave the graph untouched. Edge records are
    // applied after all node records.
    IngestReport ingest(const std::vector<JsonLine>& node_records,
                        const std::vector<JsonLine>& edge_records);
    IngestReport ingest(std::istream& node_records, std::istream& edge_records);

    // Throws the same errors as add_node/add_edge, or InvalidArgument for a
    // malformed record.
    NodeId add_node_record(const Json& record);
    EdgeId add_edge_record(const Json& record);

private:
    std::string next_id(char prefix, std::size_t& counter, bool for_node) const;

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::pair<std::size_t, std::size_t>> edge_ends_;
    std::map<std::string, std::size_t, std::less<>> node_pos_;
    std::map<std::string, std::size_t, std::less<>> edge_pos_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> by_type_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> by_relation_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::size_t node_seq_ = 0;
    std::size_t edge_seq_ = 0;
};

// Record-format serialization (the JSON-lines ingest schema).
Json node_to_json(const Node& node);
Json edge_to_json(const Edge& edge);

Json to_json(const Counts& counts);
Json to_json(const std::vector<Rejection>& rejected);
Json to_json(const IngestReport& report);

}  // namespace kgwb
