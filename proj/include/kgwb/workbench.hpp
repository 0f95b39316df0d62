#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/analytics.hpp"
#include "kgwb/corpus.hpp"
#include "kgwb/events.hpp"
#include "kgwb/graph.hpp"
#include "kgwb/history.hpp"
#include "kgwb/query.hpp"
#include "kgwb/workflows.hpp"

namespace kgwb {

struct WorkbenchConfig {
    // When set, the graph and corpus are loaded from (and appended to)
    // nodes.jsonl / edges.jsonl / corpus.jsonl, sessions live under
    // sessions/, and history under history.jsonl.
    std::optional<std::filesystem::path> data_dir;
    std::size_t node_cap_default = analytics::kDefaultNodeCap;
};

// A payload together with the data version it was computed against.
struct Versioned {
    std::uint64_t graph_version = 0;
    Json payload;
};

struct RestoredState {
    history::ExplorationState state;
    std::uint64_t graph_version = 0;
    Json result;
};

struct DataFiles {
    static constexpr const char* kNodes = "nodes.jsonl";
    static constexpr const char* kEdges = "edges.jsonl";
    static constexpr const char* kCorpus = "corpus.jsonl";
    static constexpr const char* kCandidates = "candidates.jsonl";
    static constexpr const char* kSessions = "sessions";
    static constexpr const char* kHistory = "history.jsonl";
};

// The graph service: one shared graph + corpus under a reader/writer lock,
// the curation sessions, exploration history, and selection events.
//
// Every read runs against a consistent snapshot and reports the data
// version it saw; every write bumps the version when it changes data.
// Lock order is sessions before data.
class Workbench {
public:
    explicit Workbench(WorkbenchConfig config = {});

    const WorkbenchConfig& config() const noexcept { return config_; }
    std::uint64_t graph_version() const;
    // Report of loading the data directory at construction.
    const Json& startup_report() const noexcept { return startup_report_; }

    // Run `fn(graph, corpus, version)` under the shared lock.
    template <typename Fn>
    auto read(Fn&& fn) const {
        std::shared_lock lock(data_mutex_);
        return fn(static_cast<const PropertyGraph&>(graph_), static_cast<const CorpusStore&>(corpus_), version_);
    }

    // --- replayable operations ------------------------------------------
    // Names accepted by invoke() and by history records.
    static const std::set<std::string>& operation_names();
    // Dispatches a registered read operation with JSON parameters. Throws
    // UnknownOperation, InvalidArgument for bad params, or the operation's
    // own errors.
    Versioned invoke(std::string_view op_name, const Json& params) const;

    // --- writes ----------------------------------------------------------
    Versioned ingest_graph(const std::vector<JsonLine>& node_records, const std::vector<JsonLine>& edge_records);
    Versioned ingest_corpus(const std::vector<JsonLine>& doc_records);

    Versioned create_seed_session(const std::string& entity_type);
    Versioned add_seed(const std::string& session_id, const std::string& node_id);
    Versioned remove_seed(const std::string& session_id, const std::string& node_id);
    Versioned export_seeds(const std::string& session_id) const;
    Versioned import_seeds(const Json& seed_file);
    Versioned list_seed_sessions() const;

    Versioned create_verification_session(const std::vector<JsonLine>& candidate_records);
    Versioned set_decision(const std::string& session_id, const std::string& candidate_id,
                           workflows::Decision decision);
    Versioned export_decisions(const std::string& session_id) const;
    Versioned import_decisions(const Json& decision_file);
    Versioned apply_merge(const std::string& session_id);
    Versioned list_verification_sessions() const;

    // --- history ---------------------------------------------------------
    history::ExplorationState record_state(std::string op_name, Json params, Json view_hint,
                                           std::optional<std::string> parent);
    std::vector<history::ExplorationState> list_states() const { return history_.list(); }
    RestoredState restore_state(std::string_view id) const;

    events::EventBus& events() noexcept { return events_; }

private:
    using Operation = std::function<Json(const Workbench&, const Json&)>;
    static const std::map<std::string, Operation, std::less<>>& registry();

    std::optional<std::filesystem::path> file(const char* name) const;
    void append_lines(const char* name, const std::vector<Json>& records) const;
    void load_data_dir();

    WorkbenchConfig config_;
    Json startup_report_ = Json::object();

    mutable std::shared_mutex data_mutex_;
    PropertyGraph graph_;
    CorpusStore corpus_;
    std::uint64_t version_ = 0;

    mutable std::shared_mutex sessions_mutex_;
    std::unique_ptr<workflows::SessionStore> sessions_;

    history::History history_;
    events::EventBus events_;
};

}  // namespace kgwb
