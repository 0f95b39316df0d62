#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/value.hpp"

namespace kgwb::history {

// One replayable exploration step. Parameters are stored, results are not:
// restoring re-runs the operation against the current data.
struct ExplorationState {
    std::string id;
    std::int64_t timestamp_ms = 0;
    std::string op_name;
    Json params;
    Json view_hint;
    std::optional<std::string> parent;
    std::uint64_t graph_version = 0;
};

// Append-only forest of states. Appends are serialized, reads are shared.
// With a file, each state is appended as one JSON line and the file is
// replayed on construction.
class History {
public:
    explicit History(std::set<std::string> registered_ops,
                     std::optional<std::filesystem::path> file = std::nullopt);

    // Throws UnknownOperation or UnknownParent.
    ExplorationState record(std::string op_name, Json params, Json view_hint,
                            std::optional<std::string> parent, std::uint64_t graph_version);

    std::vector<ExplorationState> list() const;  // timestamp (= append) order
    ExplorationState get(std::string_view id) const;  // throws NotFound
    std::size_t size() const;

    bool is_registered(std::string_view op_name) const { return ops_.contains(std::string(op_name)); }

private:
    std::set<std::string> ops_;
    std::optional<std::filesystem::path> file_;
    mutable std::shared_mutex mutex_;
    std::vector<ExplorationState> states_;
    std::map<std::string, std::size_t, std::less<>> by_id_;
    std::size_t counter_ = 0;
};

Json to_json(const ExplorationState& state);
ExplorationState state_from_json(const Json& json);

}  // namespace kgwb::history
