#include "kgwb/analytics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "kgwb/error.hpp"

namespace kgwb::analytics {

namespace {

Distribution from_counts(const std::map<std::string, std::size_t>& counts) {
    Distribution dist;
    for (const auto& [label, count] : counts) {
        if (count == 0) continue;
        dist.entries.push_back({label, count, std::nullopt});
        dist.total += count;
    }
    // map iteration is label-ascending, so a stable sort keeps the tie-break.
    std::stable_sort(dist.entries.begin(), dist.entries.end(),
                     [](const DistributionEntry& a, const DistributionEntry& b) { return a.count > b.count; });
    return dist;
}

}  // namespace

FacetedGraph faceted_graph(const PropertyGraph& graph) {
    FacetedGraph faceted;
    for (const auto& label : graph.type_labels()) {
        const auto count = graph.nodes_of_type(label).size();
        if (count > 0) faceted.super_nodes.push_back({label, count});
    }
    std::map<std::tuple<std::string_view, std::string_view, std::string_view>, std::size_t> edges;
    const auto nodes = graph.nodes();
    const auto all_edges = graph.edges();
    for (std::size_t e = 0; e < all_edges.size(); ++e) {
        const auto& src_type = nodes[graph.src_index(e)].type_label;
        const auto& dst_type = nodes[graph.dst_index(e)].type_label;
        ++edges[{src_type, all_edges[e].rel_label, dst_type}];
    }
    for (const auto& [key, count] : edges) {
        const auto& [src, rel, dst] = key;
        faceted.super_edges.push_back({std::string(src), std::string(rel), std::string(dst), count});
    }
    return faceted;
}

Distribution node_type_distribution(const PropertyGraph& graph) {
    std::map<std::string, std::size_t> counts;
    for (const auto& label : graph.type_labels()) counts[label] = graph.nodes_of_type(label).size();
    return from_counts(counts);
}

Distribution relation_type_distribution(const PropertyGraph& graph, std::optional<std::string_view> node_type) {
    std::map<std::string, std::size_t> counts;
    if (!node_type) {
        for (const auto& label : graph.relation_labels()) counts[label] = graph.edges_of_relation(label).size();
        return from_counts(counts);
    }
    std::set<std::size_t> incident;
    for (auto n : graph.nodes_of_type(*node_type)) {
        incident.insert(graph.out_edges(n).begin(), graph.out_edges(n).end());
        incident.insert(graph.in_edges(n).begin(), graph.in_edges(n).end());
    }
    const auto edges = graph.edges();
    for (auto e : incident) ++counts[edges[e].rel_label];
    return from_counts(counts);
}

DegreeProfile degree_profile(const PropertyGraph& graph, std::string_view node_id) {
    const auto pos = graph.node_index(node_id);
    if (!pos) throw Error(ErrorCode::NotFound, "node '" + std::string(node_id) + "' not found");
    const auto edges = graph.edges();
    std::map<std::string, RelationDegree> by_rel;
    for (auto e : graph.out_edges(*pos)) ++by_rel[edges[e].rel_label].out_count;
    for (auto e : graph.in_edges(*pos)) ++by_rel[edges[e].rel_label].in_count;

    DegreeProfile profile;
    profile.node_id = std::string(node_id);
    for (auto& [label, degree] : by_rel) {
        degree.rel_label = label;
        profile.relations.push_back(std::move(degree));
    }
    return profile;
}

Subgraph neighborhood(const PropertyGraph& graph, std::string_view node_id, std::size_t depth,
                      const std::vector<std::string>& rel_filter, std::size_t node_cap) {
    const auto start = graph.node_index(node_id);
    if (!start) throw Error(ErrorCode::NotFound, "node '" + std::string(node_id) + "' not found");
    if (node_cap == 0) throw Error(ErrorCode::InvalidArgument, "node cap must be at least 1");

    const auto nodes = graph.nodes();
    const auto edges = graph.edges();
    const std::set<std::string_view> allowed(rel_filter.begin(), rel_filter.end());
    auto traversable = [&](std::size_t e) { return allowed.empty() || allowed.contains(edges[e].rel_label); };
    auto neighbors = [&](std::size_t n) {
        std::vector<std::size_t> out;
        for (auto e : graph.out_edges(n)) {
            if (traversable(e)) out.push_back(graph.dst_index(e));
        }
        for (auto e : graph.in_edges(n)) {
            if (traversable(e)) out.push_back(graph.src_index(e));
        }
        return out;
    };
    auto by_id = [&](std::size_t a, std::size_t b) { return nodes[a].id < nodes[b].id; };

    std::vector<std::size_t> order{*start};
    std::map<std::size_t, std::size_t> distance{{*start, 0}};
    std::vector<std::size_t> level{*start};
    Subgraph sub;
    for (std::size_t d = 1; d <= depth && !level.empty() && !sub.truncated; ++d) {
        std::vector<std::size_t> next;
        for (auto n : level) {
            for (auto m : neighbors(n)) {
                if (!distance.contains(m)) next.push_back(m);
            }
        }
        std::sort(next.begin(), next.end(), by_id);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level.clear();
        for (auto m : next) {
            if (order.size() >= node_cap) {
                sub.truncated = true;
                break;
            }
            distance.emplace(m, d);
            order.push_back(m);
            level.push_back(m);
        }
    }

    if (sub.truncated) {
        for (auto n : order) {
            if (distance.at(n) >= depth) continue;
            auto around = neighbors(n);
            if (std::any_of(around.begin(), around.end(), [&](std::size_t m) { return !distance.contains(m); })) {
                sub.frontier.push_back(nodes[n].id);
            }
        }
    }

    sub.nodes.reserve(order.size());
    for (auto n : order) sub.nodes.push_back(nodes[n]);
    std::set<std::size_t> picked;
    for (auto n : order) {
        for (auto e : graph.out_edges(n)) {
            if (traversable(e) && distance.contains(graph.dst_index(e))) picked.insert(e);
        }
    }
    for (auto e : picked) sub.edges.push_back(edges[e]);
    std::sort(sub.edges.begin(), sub.edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return sub;
}

Distribution entity_frequency(const PropertyGraph& graph, std::string_view entity_type, const CorpusStore& corpus) {
    Distribution dist;
    const auto nodes = graph.nodes();
    for (auto n : graph.nodes_of_type(entity_type)) {
        const auto& node = nodes[n];
        const std::size_t score = graph.out_edges(n).size() + graph.in_edges(n).size() + corpus.mention_count(node.id);
        dist.entries.push_back({node.id, score, node.name});
        dist.total += score;
    }
    std::sort(dist.entries.begin(), dist.entries.end(), [](const DistributionEntry& a, const DistributionEntry& b) {
        return std::tie(a.count, a.label) < std::tie(b.count, b.label);
    });
    return dist;
}

Json to_json(const FacetedGraph& faceted) {
    Json nodes = Json::array();
    for (const auto& n : faceted.super_nodes) nodes.push_back({{"type", n.type_label}, {"count", n.node_count}});
    Json edges = Json::array();
    for (const auto& e : faceted.super_edges) {
        edges.push_back({{"src_type", e.src_type}, {"rel", e.rel_label}, {"dst_type", e.dst_type}, {"count", e.edge_count}});
    }
    return Json{{"super_nodes", std::move(nodes)}, {"super_edges", std::move(edges)}};
}

Json to_json(const Distribution& distribution) {
    Json entries = Json::array();
    for (const auto& e : distribution.entries) {
        Json entry{{"label", e.label}, {"count", e.count}};
        if (e.name) entry["name"] = *e.name;
        entries.push_back(std::move(entry));
    }
    return Json{{"entries", std::move(entries)}, {"total", distribution.total}};
}

Json to_json(const DegreeProfile& profile) {
    Json relations = Json::array();
    for (const auto& r : profile.relations) {
        relations.push_back({{"rel", r.rel_label}, {"in", r.in_count}, {"out", r.out_count}});
    }
    return Json{{"node_id", profile.node_id}, {"relations", std::move(relations)}};
}

Json to_json(const Subgraph& subgraph) {
    Json nodes = Json::array();
    for (const auto& n : subgraph.nodes) nodes.push_back(node_to_json(n));
    Json edges = Json::array();
    for (const auto& e : subgraph.edges) edges.push_back(edge_to_json(e));
    return Json{{"nodes", std::move(nodes)},
                {"edges", std::move(edges)},
                {"truncated", subgraph.truncated},
                {"frontier", subgraph.frontier}};
}

}  // namespace kgwb::analytics
