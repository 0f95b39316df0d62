#include "kgwb/history.hpp"

#include <chrono>
#include <fstream>
#include <mutex>

#include "kgwb/error.hpp"

namespace kgwb::history {

History::History(std::set<std::string> registered_ops, std::optional<std::filesystem::path> file)
    : ops_(std::move(registered_ops)), file_(std::move(file)) {
    if (!file_ || !std::filesystem::exists(*file_)) return;
    std::ifstream in(*file_);
    if (!in) throw Error(ErrorCode::BadDataDir, "cannot read history file " + file_->string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ExplorationState state;
        try {
            state = state_from_json(Json::parse(line));
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::BadDataDir, "corrupt history line: " + std::string(e.what()));
        }
        if (state.id.size() > 1 && state.id[0] == 'h') {
            counter_ = std::max<std::size_t>(counter_, std::stoull(state.id.substr(1)));
        }
        by_id_.emplace(state.id, states_.size());
        states_.push_back(std::move(state));
    }
}

ExplorationState History::record(std::string op_name, Json params, Json view_hint,
                                 std::optional<std::string> parent, std::uint64_t graph_version) {
    if (!ops_.contains(op_name)) {
        throw Error(ErrorCode::UnknownOperation, "operation '" + op_name + "' is not replayable");
    }
    std::unique_lock lock(mutex_);
    if (parent && !by_id_.contains(*parent)) {
        throw Error(ErrorCode::UnknownParent, "unknown parent state '" + *parent + "'");
    }
    ExplorationState state;
    state.id = "h" + std::to_string(++counter_);
    state.timestamp_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();
    if (!states_.empty()) state.timestamp_ms = std::max(state.timestamp_ms, states_.back().timestamp_ms);
    state.op_name = std::move(op_name);
    state.params = params.is_null() ? Json::object() : std::move(params);
    state.view_hint = std::move(view_hint);
    state.parent = std::move(parent);
    state.graph_version = graph_version;
    if (file_) {
        std::ofstream out(*file_, std::ios::app);
        out << to_json(state).dump() << '\n';
        if (!out) throw Error(ErrorCode::BadDataDir, "cannot append to history file " + file_->string());
    }
    by_id_.emplace(state.id, states_.size());
    states_.push_back(state);
    return state;
}

std::vector<ExplorationState> History::list() const {
    std::shared_lock lock(mutex_);
    return states_;
}

ExplorationState History::get(std::string_view id) const {
    std::shared_lock lock(mutex_);
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw Error(ErrorCode::NotFound, "history state '" + std::string(id) + "' not found");
    return states_[it->second];
}

std::size_t History::size() const {
    std::shared_lock lock(mutex_);
    return states_.size();
}

Json to_json(const ExplorationState& state) {
    return Json{{"id", state.id},
                {"timestamp_ms", state.timestamp_ms},
                {"op", state.op_name},
                {"params", state.params},
                {"view_hint", state.view_hint},
                {"parent", state.parent ? Json(*state.parent) : Json(nullptr)},
                {"graph_version", state.graph_version}};
}

ExplorationState state_from_json(const Json& json) {
    ExplorationState state;
    state.id = json.at("id").get<std::string>();
    state.timestamp_ms = json.at("timestamp_ms").get<std::int64_t>();
    state.op_name = json.at("op").get<std::string>();
    state.params = json.value("params", Json::object());
    state.view_hint = json.value("view_hint", Json());
    if (json.contains("parent") && json.at("parent").is_string()) state.parent = json.at("parent").get<std::string>();
    state.graph_version = json.value("graph_version", std::uint64_t{0});
    return state;
}

}  // namespace kgwb::history
