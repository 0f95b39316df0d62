#include "kgwb/workbench.hpp"

#include <charconv>
#include <fstream>
#include <mutex>

#include "kgwb/error.hpp"

namespace kgwb {

namespace fs = std::filesystem;

namespace {

const Json& param(const Json& params, const char* key) {
    static const Json null;
    if (!params.is_object()) return null;
    auto it = params.find(key);
    return it == params.end() ? null : *it;
}

std::string require_string(const Json& params, const char* key) {
    const auto& v = param(params, key);
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
        throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must be a non-empty string");
    }
    return v.get<std::string>();
}

std::optional<std::string> optional_string(const Json& params, const char* key) {
    const auto& v = param(params, key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must be a string");
    if (v.get_ref<const std::string&>().empty()) return std::nullopt;
    return v.get<std::string>();
}

// Accepts JSON integers and decimal strings (query-string parameters).
std::size_t optional_count(const Json& params, const char* key, std::size_t fallback) {
    const auto& v = param(params, key);
    if (v.is_null()) return fallback;
    if (v.is_number_integer()) {
        if (v.get<std::int64_t>() < 0) {
            throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must be non-negative");
        }
        return v.get<std::size_t>();
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s.empty()) return fallback;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size()) return value;
    }
    throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must be a non-negative integer");
}

std::vector<std::string> string_list(const Json& params, const char* key) {
    const auto& v = param(params, key);
    std::vector<std::string> out;
    if (v.is_null()) return out;
    if (v.is_string()) {
        std::string_view s = v.get_ref<const std::string&>();
        while (!s.empty()) {
            auto comma = s.find(',');
            auto part = s.substr(0, comma);
            if (!part.empty()) out.emplace_back(part);
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        return out;
    }
    if (v.is_array()) {
        for (const auto& item : v) {
            if (!item.is_string()) throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must list strings");
            out.push_back(item.get<std::string>());
        }
        return out;
    }
    throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must be a string or array");
}

std::vector<SpanRange> span_list(const Json& params) {
    const auto& v = param(params, "spans");
    if (!v.is_array()) throw Error(ErrorCode::InvalidArgument, "parameter 'spans' must be an array");
    std::vector<SpanRange> spans;
    for (const auto& s : v) {
        if (!s.is_object()) throw Error(ErrorCode::InvalidArgument, "span must be an object with start/end");
        spans.push_back({optional_count(s, "start", 0), optional_count(s, "end", 0)});
    }
    return spans;
}

constexpr std::size_t kDefaultWindow = 80;

}  // namespace

const std::map<std::string, Workbench::Operation, std::less<>>& Workbench::registry() {
    static const std::map<std::string, Operation, std::less<>> ops = {
        {"counts", [](const Workbench& wb, const Json&) { return to_json(wb.graph_.counts()); }},
        {"faceted_graph",
         [](const Workbench& wb, const Json&) { return analytics::to_json(analytics::faceted_graph(wb.graph_)); }},
        {"node_type_distribution",
         [](const Workbench& wb, const Json&) {
             return analytics::to_json(analytics::node_type_distribution(wb.graph_));
         }},
        {"relation_type_distribution",
         [](const Workbench& wb, const Json& p) {
             auto type = optional_string(p, "type");
             return analytics::to_json(analytics::relation_type_distribution(
                 wb.graph_, type ? std::optional<std::string_view>(*type) : std::nullopt));
         }},
        {"get_node", [](const Workbench& wb, const Json& p) { return node_to_json(wb.graph_.get_node(require_string(p, "id"))); }},
        {"degree_profile",
         [](const Workbench& wb, const Json& p) {
             return analytics::to_json(analytics::degree_profile(wb.graph_, require_string(p, "id")));
         }},
        {"neighborhood",
         [](const Workbench& wb, const Json& p) {
             return analytics::to_json(analytics::neighborhood(
                 wb.graph_, require_string(p, "id"), optional_count(p, "depth", 1), string_list(p, "rel"),
                 optional_count(p, "cap", wb.config_.node_cap_default)));
         }},
        {"entity_frequency",
         [](const Workbench& wb, const Json& p) {
             return analytics::to_json(analytics::entity_frequency(wb.graph_, require_string(p, "type"), wb.corpus_));
         }},
        {"query",
         [](const Workbench& wb, const Json& p) {
             return query::to_json(query::execute(query::parse(require_string(p, "query")), wb.graph_));
         }},
        {"mentions_of",
         [](const Workbench& wb, const Json& p) {
             auto surface = optional_string(p, "surface");
             auto node = optional_string(p, "node");
             if (surface.has_value() == node.has_value()) {
                 throw Error(ErrorCode::InvalidArgument, "give exactly one of 'surface' or 'node'");
             }
             auto hits = surface ? wb.corpus_.mentions_of_surface(*surface) : wb.corpus_.mentions_of_node(*node);
             Json out = Json::array();
             for (const auto& h : hits) out.push_back(to_json(h));
             return out;
         }},
        {"context",
         [](const Workbench& wb, const Json& p) {
             return to_json(wb.corpus_.context(require_string(p, "doc"), span_list(p),
                                               optional_count(p, "window", kDefaultWindow)));
         }},
        {"suggest_expansion_types",
         [](const Workbench& wb, const Json& p) {
             return workflows::to_json(
                 workflows::suggest_expansion_types(wb.graph_, wb.corpus_, optional_count(p, "k", 5)));
         }},
        {"seed_session",
         [](const Workbench& wb, const Json& p) {
             return workflows::to_json(wb.sessions_->seed_session(require_string(p, "id")));
         }},
        {"export_seeds",
         [](const Workbench& wb, const Json& p) {
             return workflows::to_json(wb.sessions_->export_seeds(wb.graph_, require_string(p, "id")));
         }},
        {"verification_session",
         [](const Workbench& wb, const Json& p) {
             return workflows::to_json(wb.sessions_->verification_session(require_string(p, "id")));
         }},
        {"candidate_context",
         [](const Workbench& wb, const Json& p) {
             return workflows::to_json(wb.sessions_->candidate_context(
                 wb.graph_, wb.corpus_, require_string(p, "session"), require_string(p, "candidate"),
                 optional_count(p, "window", kDefaultWindow), wb.config_.node_cap_default));
         }},
    };
    return ops;
}

const std::set<std::string>& Workbench::operation_names() {
    static const std::set<std::string> names = [] {
        std::set<std::string> out;
        for (const auto& [name, _] : registry()) out.insert(name);
        return out;
    }();
    return names;
}

Workbench::Workbench(WorkbenchConfig config)
    : config_(std::move(config)),
      history_(operation_names(),
               config_.data_dir ? std::optional<fs::path>(*config_.data_dir / DataFiles::kHistory) : std::nullopt) {
    if (config_.node_cap_default == 0) throw Error(ErrorCode::InvalidArgument, "node cap default must be at least 1");
    if (config_.data_dir) {
        load_data_dir();
        sessions_ = std::make_unique<workflows::SessionStore>(*config_.data_dir / DataFiles::kSessions);
    } else {
        sessions_ = std::make_unique<workflows::SessionStore>();
    }
}

std::optional<fs::path> Workbench::file(const char* name) const {
    if (!config_.data_dir) return std::nullopt;
    return *config_.data_dir / name;
}

void Workbench::load_data_dir() {
    const auto& dir = *config_.data_dir;
    std::error_code ec;
    if (fs::exists(dir, ec) && !fs::is_directory(dir, ec)) {
        throw Error(ErrorCode::BadDataDir, dir.string() + " is not a directory");
    }
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::BadDataDir, "cannot create data directory " + dir.string() + ": " + ec.message());

    auto lines_of = [&](const char* name) -> std::vector<JsonLine> {
        auto path = dir / name;
        if (!fs::exists(path)) return {};
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::BadDataDir, "cannot read " + path.string());
        return read_json_lines(in);
    };
    auto graph_report = graph_.ingest(lines_of(DataFiles::kNodes), lines_of(DataFiles::kEdges));
    auto corpus_report = corpus_.ingest(lines_of(DataFiles::kCorpus));
    startup_report_ = Json{{"graph", to_json(graph_report)}, {"corpus", to_json(corpus_report)}};
}

void Workbench::append_lines(const char* name, const std::vector<Json>& records) const {
    auto path = file(name);
    if (!path || records.empty()) return;
    std::ofstream out(*path, std::ios::app);
    for (const auto& r : records) out << r.dump() << '\n';
    if (!out) throw Error(ErrorCode::BadDataDir, "cannot append to " + path->string());
}

std::uint64_t Workbench::graph_version() const {
    std::shared_lock lock(data_mutex_);
    return version_;
}

Versioned Workbench::invoke(std::string_view op_name, const Json& params) const {
    const auto& ops = registry();
    auto it = ops.find(op_name);
    if (it == ops.end()) throw Error(ErrorCode::UnknownOperation, "unknown operation '" + std::string(op_name) + "'");
    std::shared_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    return {version_, it->second(*this, params)};
}

Versioned Workbench::ingest_graph(const std::vector<JsonLine>& node_records, const std::vector<JsonLine>& edge_records) {
    std::unique_lock lock(data_mutex_);
    const auto before = graph_.counts();
    auto report = graph_.ingest(node_records, edge_records);
    const auto nodes = graph_.nodes();
    const auto edges = graph_.edges();
    std::vector<Json> node_lines, edge_lines;
    for (auto i = before.nodes; i < nodes.size(); ++i) node_lines.push_back(node_to_json(nodes[i]));
    for (auto i = before.edges; i < edges.size(); ++i) edge_lines.push_back(edge_to_json(edges[i]));
    append_lines(DataFiles::kNodes, node_lines);
    append_lines(DataFiles::kEdges, edge_lines);
    if (report.nodes_added + report.edges_added > 0) ++version_;
    return {version_, Json{{"report", to_json(report)}}};
}

Versioned Workbench::ingest_corpus(const std::vector<JsonLine>& doc_records) {
    std::unique_lock lock(data_mutex_);
    const auto before = corpus_.document_count();
    auto report = corpus_.ingest(doc_records);
    std::vector<Json> lines;
    for (auto i = before; i < corpus_.document_count(); ++i) lines.push_back(document_to_json(corpus_.documents()[i]));
    append_lines(DataFiles::kCorpus, lines);
    if (report.documents_added > 0) ++version_;
    return {version_, Json{{"report", to_json(report)}}};
}

Versioned Workbench::create_seed_session(const std::string& entity_type) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    const auto& s = sessions_->create_seed_session(graph_, entity_type);
    return {version_, Json{{"session", workflows::to_json(s)}, {"sessionVersion", s.version}}};
}

Versioned Workbench::add_seed(const std::string& session_id, const std::string& node_id) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    const auto& s = sessions_->add_seed(graph_, session_id, node_id);
    return {version_, Json{{"session", workflows::to_json(s)}, {"sessionVersion", s.version}}};
}

Versioned Workbench::remove_seed(const std::string& session_id, const std::string& node_id) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    const auto& s = sessions_->remove_seed(graph_, session_id, node_id);
    return {version_, Json{{"session", workflows::to_json(s)}, {"sessionVersion", s.version}}};
}

Versioned Workbench::export_seeds(const std::string& session_id) const {
    return invoke("export_seeds", Json{{"id", session_id}});
}

Versioned Workbench::import_seeds(const Json& seed_file) {
    auto file = workflows::seed_file_from_json(seed_file);
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    const auto& s = sessions_->import_seeds(graph_, file);
    return {version_, Json{{"session", workflows::to_json(s)}, {"sessionVersion", s.version}}};
}

Versioned Workbench::list_seed_sessions() const {
    std::shared_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    Json out = Json::array();
    for (const auto* s : sessions_->seed_sessions()) out.push_back(workflows::to_json(*s));
    return {version_, std::move(out)};
}

Versioned Workbench::create_verification_session(const std::vector<JsonLine>& candidate_records) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    auto created = sessions_->create_verification_session(graph_, corpus_, candidate_records);
    const auto& s = sessions_->verification_session(created.session_id);
    auto payload = workflows::to_json(created);
    payload["session"] = workflows::to_json(s);
    payload["sessionVersion"] = s.version;
    return {version_, std::move(payload)};
}

Versioned Workbench::set_decision(const std::string& session_id, const std::string& candidate_id,
                                  workflows::Decision decision) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    const auto& c = sessions_->set_decision(session_id, candidate_id, decision);
    return {version_, Json{{"candidate", workflows::to_json(c)},
                           {"sessionVersion", sessions_->verification_session(session_id).version}}};
}

Versioned Workbench::export_decisions(const std::string& session_id) const {
    std::shared_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    return {version_, sessions_->export_decisions(session_id)};
}

Versioned Workbench::import_decisions(const Json& decision_file) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    auto created = sessions_->import_decisions(graph_, corpus_, decision_file);
    const auto& s = sessions_->verification_session(created.session_id);
    auto payload = workflows::to_json(created);
    payload["session"] = workflows::to_json(s);
    payload["sessionVersion"] = s.version;
    return {version_, std::move(payload)};
}

Versioned Workbench::apply_merge(const std::string& session_id) {
    std::unique_lock sessions_lock(sessions_mutex_);
    std::unique_lock data_lock(data_mutex_);
    auto result = sessions_->apply_merge(graph_, session_id);
    std::vector<Json> node_lines, edge_lines;
    for (const auto& id : result.node_ids) node_lines.push_back(node_to_json(graph_.get_node(id)));
    for (const auto& id : result.edge_ids) edge_lines.push_back(edge_to_json(graph_.get_edge(id)));
    append_lines(DataFiles::kNodes, node_lines);
    append_lines(DataFiles::kEdges, edge_lines);
    if (result.inserted_nodes + result.inserted_edges > 0) ++version_;
    return {version_, Json{{"merge", workflows::to_json(result)},
                           {"sessionVersion", sessions_->verification_session(session_id).version}}};
}

Versioned Workbench::list_verification_sessions() const {
    std::shared_lock sessions_lock(sessions_mutex_);
    std::shared_lock data_lock(data_mutex_);
    Json out = Json::array();
    for (const auto* s : sessions_->verification_sessions()) out.push_back(workflows::to_json(*s));
    return {version_, std::move(out)};
}

history::ExplorationState Workbench::record_state(std::string op_name, Json params, Json view_hint,
                                                  std::optional<std::string> parent) {
    return history_.record(std::move(op_name), std::move(params), std::move(view_hint), std::move(parent),
                           graph_version());
}

RestoredState Workbench::restore_state(std::string_view id) const {
    auto state = history_.get(id);
    auto fresh = invoke(state.op_name, state.params);
    return {std::move(state), fresh.graph_version, std::move(fresh.payload)};
}

}  // namespace kgwb
