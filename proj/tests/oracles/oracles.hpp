#pragma once

// Reference implementations used as test oracles. They share no code with
// the library beyond the plain data types: every answer is recomputed by
// full scans over nodes(), edges() and documents().

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "kgwb/corpus.hpp"
#include "kgwb/graph.hpp"
#include "kgwb/query.hpp"

namespace kgwb::oracle {

// ---- query ----------------------------------------------------------------

inline std::optional<Scalar> lookup(const Node& n, const std::string& attr) {
    if (attr == "id") return Scalar{n.id};
    if (attr == "name") return Scalar{n.name};
    if (attr == "type") return Scalar{n.type_label};
    for (const auto& [k, v] : n.attrs) {
        if (k == attr) return v;
    }
    return std::nullopt;
}

inline std::string lower(std::string s) {
    for (auto& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return s;
}

// Three-way outcome of comparing two scalars; nullopt when the kinds are
// not comparable.
inline std::optional<int> order(const Scalar& a, const Scalar& b) {
    auto numeric = [](const Scalar& s) -> std::optional<long double> {
        if (s.index() == 1) return static_cast<long double>(std::get<1>(s));
        if (s.index() == 2) return static_cast<long double>(std::get<2>(s));
        return std::nullopt;
    };
    if (a.index() == 3 && b.index() == 3) {
        const int c = std::get<3>(a).compare(std::get<3>(b));
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    if (a.index() == 0 && b.index() == 0) return std::get<0>(a) == std::get<0>(b) ? 0 : 2;  // 2: unequal, unordered
    auto x = numeric(a), y = numeric(b);
    if (x && y) return *x < *y ? -1 : (*x > *y ? 1 : 0);
    return std::nullopt;
}

inline bool holds(const Scalar& value, query::CompareOp op, const Scalar& literal) {
    using query::CompareOp;
    if (op == CompareOp::Contains) {
        if (value.index() != 3 || literal.index() != 3) return false;
        return lower(std::get<3>(value)).find(lower(std::get<3>(literal))) != std::string::npos;
    }
    auto o = order(value, literal);
    if (!o) return false;
    if (*o == 2) return op == CompareOp::Ne;
    const bool is_bool = value.index() == 0;
    switch (op) {
        case CompareOp::Eq: return *o == 0;
        case CompareOp::Ne: return *o != 0;
        case CompareOp::Lt: return !is_bool && *o < 0;
        case CompareOp::Le: return !is_bool && *o <= 0;
        case CompareOp::Gt: return !is_bool && *o > 0;
        case CompareOp::Ge: return !is_bool && *o >= 0;
        default: return false;
    }
}

inline bool node_ok(const Node& n, const query::NodePattern& p, const std::vector<query::Filter>& filters) {
    if (p.type_label && n.type_label != *p.type_label) return false;
    for (const auto& f : filters) {
        if (f.var != p.var) continue;
        auto v = lookup(n, f.attr);
        if (!v || !holds(*v, f.op, f.literal)) return false;
    }
    return true;
}

// Nested-loop evaluation. Rows come back in the documented order: by the
// projected ids, then (bound ids in pattern order), then the edge id.
inline query::ResultTable evaluate(const query::QueryAst& ast, const PropertyGraph& g) {
    using Key = std::tuple<std::vector<std::string>, std::vector<std::string>, std::string>;
    std::vector<Key> found;
    auto project = [&](const std::map<std::string, std::string>& binding) {
        std::vector<std::string> row;
        for (const auto& v : ast.return_vars) row.push_back(binding.at(v));
        return row;
    };
    if (const auto* np = std::get_if<query::NodePattern>(&ast.pattern)) {
        for (const auto& n : g.nodes()) {
            if (!node_ok(n, *np, ast.filters)) continue;
            std::map<std::string, std::string> b{{np->var, n.id}};
            found.emplace_back(project(b), std::vector<std::string>{n.id}, "");
        }
    } else {
        const auto& pp = std::get<query::PathPattern>(ast.pattern);
        for (const auto& a : g.nodes()) {
            for (const auto& b : g.nodes()) {
                if (!node_ok(a, pp.src, ast.filters) || !node_ok(b, pp.dst, ast.filters)) continue;
                if (pp.src.var == pp.dst.var && a.id != b.id) continue;
                for (const auto& e : g.edges()) {
                    if (pp.rel_label && e.rel_label != *pp.rel_label) continue;
                    const bool forward = e.src == a.id && e.dst == b.id;
                    const bool backward = e.src == b.id && e.dst == a.id;
                    bool hit = false;
                    switch (pp.direction) {
                        case query::Direction::Out: hit = forward; break;
                        case query::Direction::In: hit = backward; break;
                        case query::Direction::Any: hit = forward || backward; break;
                    }
                    if (!hit) continue;
                    std::map<std::string, std::string> bind{{pp.src.var, a.id}, {pp.dst.var, b.id}};
                    found.emplace_back(project(bind), std::vector<std::string>{a.id, b.id}, e.id);
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    query::ResultTable t;
    t.columns = ast.return_vars;
    for (const auto& k : found) {
        if (ast.limit && t.rows.size() == static_cast<std::size_t>(*ast.limit)) {
            t.truncated = true;
            break;
        }
        t.rows.push_back(std::get<0>(k));
    }
    return t;
}

// ---- graph analytics --------------------------------------------------------

struct Facets {
    std::map<std::string, std::size_t> nodes_by_type;
    std::map<std::tuple<std::string, std::string, std::string>, std::size_t> edges_by_triple;
};

inline Facets facets(const PropertyGraph& g) {
    Facets f;
    std::map<std::string, std::string> type_of;
    for (const auto& n : g.nodes()) {
        ++f.nodes_by_type[n.type_label];
        type_of[n.id] = n.type_label;
    }
    for (const auto& e : g.edges()) ++f.edges_by_triple[{type_of.at(e.src), e.rel_label, type_of.at(e.dst)}];
    return f;
}

// Per relation (in, out) counts for one node by scanning every edge.
inline std::map<std::string, std::pair<std::size_t, std::size_t>> degree_scan(const PropertyGraph& g,
                                                                              const std::string& id) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : g.edges()) {
        if (e.dst == id) ++out[e.rel_label].first;
        if (e.src == id) ++out[e.rel_label].second;
    }
    return out;
}

// Reference BFS: levels of node ids, each level sorted, edges treated as
// undirected and limited to `rels` when non-empty.
inline std::vector<std::vector<std::string>> bfs_levels(const PropertyGraph& g, const std::string& start,
                                                        std::size_t depth, const std::vector<std::string>& rels) {
    auto admitted = [&](const Edge& e) {
        return rels.empty() || std::find(rels.begin(), rels.end(), e.rel_label) != rels.end();
    };
    std::set<std::string> seen{start};
    std::vector<std::vector<std::string>> levels{{start}};
    for (std::size_t d = 0; d < depth; ++d) {
        std::set<std::string> next;
        for (const auto& u : levels.back()) {
            for (const auto& e : g.edges()) {
                if (!admitted(e)) continue;
                if (e.src == u && !seen.count(e.dst)) next.insert(e.dst);
                if (e.dst == u && !seen.count(e.src)) next.insert(e.src);
            }
        }
        if (next.empty()) break;
        seen.insert(next.begin(), next.end());
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

inline std::vector<std::string> flatten(const std::vector<std::vector<std::string>>& levels) {
    std::vector<std::string> out;
    for (const auto& l : levels) out.insert(out.end(), l.begin(), l.end());
    return out;
}

// Undirected degree plus linked mention count, by full scans.
inline std::size_t frequency(const PropertyGraph& g, const CorpusStore& c, const std::string& id) {
    std::size_t f = 0;
    for (const auto& e : g.edges()) f += (e.src == id) + (e.dst == id);
    for (const auto& d : c.documents()) {
        for (const auto& m : d.mentions) f += m.node_id && *m.node_id == id;
    }
    return f;
}

// ---- corpus -----------------------------------------------------------------

// Code-point slice by decoding UTF-8 lead bytes directly.
inline std::string cp_slice(const std::string& text, std::size_t start, std::size_t end) {
    std::string out;
    std::size_t cp = 0;
    for (std::size_t i = 0; i < text.size();) {
        const auto lead = static_cast<unsigned char>(text[i]);
        const std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
        if (cp >= start && cp < end) out.append(text, i, len);
        i += len;
        ++cp;
    }
    return out;
}

inline std::size_t cp_length(const std::string& text) {
    std::size_t n = 0;
    for (unsigned char c : text) n += (c & 0xC0) != 0x80;
    return n;
}

// (doc id, span starts) of every span whose surface folds to `surface`.
inline std::vector<std::pair<std::string, std::vector<std::size_t>>> surface_scan(const CorpusStore& c,
                                                                                  const std::string& surface) {
    std::map<std::string, std::vector<std::size_t>> hits;
    for (const auto& d : c.documents()) {
        for (const auto& m : d.mentions) {
            if (lower(m.surface) == lower(surface)) hits[d.id].push_back(m.start);
        }
    }
    std::vector<std::pair<std::string, std::vector<std::size_t>>> out(hits.begin(), hits.end());
    for (auto& [_, starts] : out) std::sort(starts.begin(), starts.end());
    return out;
}

}  // namespace kgwb::oracle
