#include "kgwb/graph.hpp"

#include "kgwb/error.hpp"

namespace kgwb {

namespace {

const std::string* optional_string(const Json& record, const char* key, bool& bad) {
    auto it = record.find(key);
    if (it == record.end() || it->is_null()) return nullptr;
    if (!it->is_string()) {
        bad = true;
        return nullptr;
    }
    return &it->get_ref<const std::string&>();
}

std::string required_string(const Json& record, const char* key) {
    bool bad = false;
    const auto* value = optional_string(record, key, bad);
    if (bad) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a string");
    if (value == nullptr) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
    return *value;
}

std::optional<std::string> maybe_string(const Json& record, const char* key) {
    bool bad = false;
    const auto* value = optional_string(record, key, bad);
    if (bad) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a string");
    if (value == nullptr) return std::nullopt;
    return *value;
}

AttrMap record_attrs(const Json& record) {
    auto it = record.find("attrs");
    if (it == record.end()) return {};
    return attrs_from_json(*it);
}

}  // namespace

std::string PropertyGraph::next_id(char prefix, std::size_t& counter, bool for_node) const {
    while (true) {
        std::string candidate = prefix + std::to_string(++counter);
        bool taken = for_node ? node_pos_.contains(candidate) : edge_pos_.contains(candidate);
        if (!taken) return candidate;
    }
}

NodeId PropertyGraph::add_node(std::string type_label, std::string name, AttrMap attrs,
                               std::optional<NodeId> id) {
    if (type_label.empty()) throw Error(ErrorCode::EmptyTypeLabel, "node type label is empty");
    if (id) {
        if (id->empty()) throw Error(ErrorCode::InvalidArgument, "node id is empty");
        if (node_pos_.contains(*id)) throw Error(ErrorCode::DuplicateId, "duplicate node id '" + *id + "'");
    }
    NodeId node_id = id ? std::move(*id) : next_id('n', node_seq_, true);
    if (name.empty()) name = node_id;

    const std::size_t pos = nodes_.size();
    by_type_[type_label].push_back(pos);
    node_pos_.emplace(node_id, pos);
    out_.emplace_back();
    in_.emplace_back();
    nodes_.push_back({node_id, std::move(type_label), std::move(name), std::move(attrs)});
    return node_id;
}

EdgeId PropertyGraph::add_edge(const NodeId& src, const NodeId& dst, std::string rel_label,
                               AttrMap attrs, std::optional<EdgeId> id) {
    if (rel_label.empty()) throw Error(ErrorCode::InvalidArgument, "relation label is empty");
    const auto src_pos = node_index(src);
    if (!src_pos) throw Error(ErrorCode::UnknownEndpoint, "unknown endpoint '" + src + "'");
    const auto dst_pos = node_index(dst);
    if (!dst_pos) throw Error(ErrorCode::UnknownEndpoint, "unknown endpoint '" + dst + "'");
    if (id) {
        if (id->empty()) throw Error(ErrorCode::InvalidArgument, "edge id is empty");
        if (edge_pos_.contains(*id)) throw Error(ErrorCode::DuplicateId, "duplicate edge id '" + *id + "'");
    }
    EdgeId edge_id = id ? std::move(*id) : next_id('e', edge_seq_, false);

    const std::size_t pos = edges_.size();
    by_relation_[rel_label].push_back(pos);
    edge_pos_.emplace(edge_id, pos);
    out_[*src_pos].push_back(pos);
    in_[*dst_pos].push_back(pos);
    edge_ends_.emplace_back(*src_pos, *dst_pos);
    edges_.push_back({edge_id, src, dst, std::move(rel_label), std::move(attrs)});
    return edge_id;
}

const Node& PropertyGraph::get_node(std::string_view id) const {
    if (const auto* node = find_node(id)) return *node;
    throw Error(ErrorCode::NotFound, "node '" + std::string(id) + "' not found");
}

const Edge& PropertyGraph::get_edge(std::string_view id) const {
    if (const auto* edge = find_edge(id)) return *edge;
    throw Error(ErrorCode::NotFound, "edge '" + std::string(id) + "' not found");
}

const Node* PropertyGraph::find_node(std::string_view id) const noexcept {
    auto pos = node_index(id);
    return pos ? &nodes_[*pos] : nullptr;
}

const Edge* PropertyGraph::find_edge(std::string_view id) const noexcept {
    auto it = edge_pos_.find(id);
    return it == edge_pos_.end() ? nullptr : &edges_[it->second];
}

std::optional<std::size_t> PropertyGraph::node_index(std::string_view id) const noexcept {
    auto it = node_pos_.find(id);
    if (it == node_pos_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::size_t> PropertyGraph::nodes_of_type(std::string_view type_label) const noexcept {
    auto it = by_type_.find(type_label);
    if (it == by_type_.end()) return {};
    return it->second;
}

std::span<const std::size_t> PropertyGraph::edges_of_relation(std::string_view rel_label) const noexcept {
    auto it = by_relation_.find(rel_label);
    if (it == by_relation_.end()) return {};
    return it->second;
}

std::vector<std::string> PropertyGraph::type_labels() const {
    std::vector<std::string> labels;
    labels.reserve(by_type_.size());
    for (const auto& [label, _] : by_type_) labels.push_back(label);
    return labels;
}

std::vector<std::string> PropertyGraph::relation_labels() const {
    std::vector<std::string> labels;
    labels.reserve(by_relation_.size());
    for (const auto& [label, _] : by_relation_) labels.push_back(label);
    return labels;
}

NodeId PropertyGraph::add_node_record(const Json& record) {
    if (!record.is_object()) throw Error(ErrorCode::InvalidArgument, "node record must be an object");
    auto type_label = required_string(record, "type");
    auto name = maybe_string(record, "name").value_or("");
    auto id = maybe_string(record, "id");
    return add_node(std::move(type_label), std::move(name), record_attrs(record), std::move(id));
}

EdgeId PropertyGraph::add_edge_record(const Json& record) {
    if (!record.is_object()) throw Error(ErrorCode::InvalidArgument, "edge record must be an object");
    auto src = required_string(record, "src");
    auto dst = required_string(record, "dst");
    auto rel = required_string(record, "rel");
    auto id = maybe_string(record, "id");
    return add_edge(src, dst, std::move(rel), record_attrs(record), std::move(id));
}

IngestReport PropertyGraph::ingest(const std::vector<JsonLine>& node_records,
                                   const std::vector<JsonLine>& edge_records) {
    IngestReport report;
    // add_node/add_edge validate everything before mutating, so a thrown
    // record leaves no partial state behind.
    for (const auto& line : node_records) {
        if (!line.record) {
            report.rejected.push_back({"node", line.ordinal, line.parse_error});
            continue;
        }
        try {
            add_node_record(*line.record);
            ++report.nodes_added;
        } catch (const Error& e) {
            report.rejected.push_back({"node", line.ordinal, e.what()});
        }
    }
    for (const auto& line : edge_records) {
        if (!line.record) {
            report.rejected.push_back({"edge", line.ordinal, line.parse_error});
            continue;
        }
        try {
            add_edge_record(*line.record);
            ++report.edges_added;
        } catch (const Error& e) {
            report.rejected.push_back({"edge", line.ordinal, e.what()});
        }
    }
    return report;
}

IngestReport PropertyGraph::ingest(std::istream& node_records, std::istream& edge_records) {
    auto nodes = read_json_lines(node_records);
    auto edges = read_json_lines(edge_records);
    return ingest(nodes, edges);
}

Json node_to_json(const Node& node) {
    Json out{{"id", node.id}, {"type", node.type_label}, {"name", node.name}};
    out["attrs"] = attrs_to_json(node.attrs);
    return out;
}

Json edge_to_json(const Edge& edge) {
    Json out{{"id", edge.id}, {"src", edge.src}, {"dst", edge.dst}, {"rel", edge.rel_label}};
    out["attrs"] = attrs_to_json(edge.attrs);
    return out;
}

Json to_json(const Counts& counts) {
    return Json{{"nodes", counts.nodes}, {"edges", counts.edges}};
}

Json to_json(const std::vector<Rejection>& rejected) {
    Json out = Json::array();
    for (const auto& r : rejected) out.push_back({{"kind", r.kind}, {"ordinal", r.ordinal}, {"reason", r.reason}});
    return out;
}

Json to_json(const IngestReport& report) {
    return Json{{"nodes_added", report.nodes_added},
                {"edges_added", report.edges_added},
                {"rejected", to_json(report.rejected)}};
}

}  // namespace kgwb
