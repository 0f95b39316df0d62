#include "kgwb/events.hpp"

#include <algorithm>
#include <set>

#include "kgwb/error.hpp"

namespace kgwb::events {

namespace {

const std::set<std::string> kTargetKinds = {"node", "type", "relation", "candidate", "document"};

}  // namespace

std::optional<SelectionEvent> Subscription::next(std::chrono::milliseconds timeout) {
    std::unique_lock lock(mutex_);
    cv_.wait_for(lock, timeout, [&] { return !queue_.empty() || closed_; });
    if (queue_.empty()) return std::nullopt;
    auto event = std::move(queue_.front());
    queue_.pop_front();
    return event;
}

bool Subscription::closed() const {
    std::lock_guard lock(mutex_);
    return closed_ && queue_.empty();
}

void Subscription::push(const SelectionEvent& event) {
    {
        std::lock_guard lock(mutex_);
        queue_.push_back(event);
    }
    cv_.notify_one();
}

void Subscription::close() {
    {
        std::lock_guard lock(mutex_);
        closed_ = true;
    }
    cv_.notify_all();
}

std::uint64_t EventBus::publish(SelectionEvent event) {
    if (event.scope.empty()) throw Error(ErrorCode::InvalidArgument, "event scope is empty");
    if (!kTargetKinds.contains(event.target.kind)) {
        throw Error(ErrorCode::InvalidArgument, "unknown selection target kind '" + event.target.kind + "'");
    }
    std::lock_guard lock(mutex_);
    auto& scope = scopes_[event.scope];
    event.seq = ++scope.seq;
    scope.backlog.push_back(event);
    if (scope.backlog.size() > kBacklog) scope.backlog.pop_front();
    auto& subs = scope.subscribers;
    subs.erase(std::remove_if(subs.begin(), subs.end(), [](const auto& w) { return w.expired(); }), subs.end());
    for (const auto& weak : subs) {
        if (auto sub = weak.lock()) sub->push(event);
    }
    return event.seq;
}

std::shared_ptr<Subscription> EventBus::subscribe(const std::string& scope, std::optional<std::uint64_t> after) {
    auto sub = std::make_shared<Subscription>(scope);
    std::lock_guard lock(mutex_);
    if (closed_) {
        sub->close();
        return sub;
    }
    auto& s = scopes_[scope];
    if (after) {
        for (const auto& ev : s.backlog) {
            if (ev.seq > *after) sub->push(ev);
        }
    }
    s.subscribers.push_back(sub);
    return sub;
}

std::vector<SelectionEvent> EventBus::backlog(const std::string& scope, std::uint64_t after) const {
    std::lock_guard lock(mutex_);
    std::vector<SelectionEvent> out;
    auto it = scopes_.find(scope);
    if (it == scopes_.end()) return out;
    for (const auto& ev : it->second.backlog) {
        if (ev.seq > after) out.push_back(ev);
    }
    return out;
}

std::uint64_t EventBus::last_seq(const std::string& scope) const {
    std::lock_guard lock(mutex_);
    auto it = scopes_.find(scope);
    return it == scopes_.end() ? 0 : it->second.seq;
}

void EventBus::close() {
    std::lock_guard lock(mutex_);
    closed_ = true;
    for (auto& [_, scope] : scopes_) {
        for (const auto& weak : scope.subscribers) {
            if (auto sub = weak.lock()) sub->close();
        }
    }
}

Json to_json(const SelectionEvent& event) {
    return Json{{"scope", event.scope},
                {"target", {{"kind", event.target.kind}, {"id", event.target.id}}},
                {"origin_view", event.origin_view},
                {"seq", event.seq}};
}

SelectionEvent event_from_json(const Json& json) {
    try {
        SelectionEvent event;
        event.scope = json.at("scope").get<std::string>();
        event.target.kind = json.at("target").at("kind").get<std::string>();
        event.target.id = json.at("target").at("id").get<std::string>();
        event.origin_view = json.value("origin_view", std::string{});
        return event;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed selection event: ") + e.what());
    }
}

}  // namespace kgwb::events
