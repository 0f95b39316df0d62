#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kgwb/value.hpp"

namespace kgwb::events {

// kind is one of: node, type, relation, candidate, document.
struct SelectionTarget {
    std::string kind;
    std::string id;

    bool operator==(const SelectionTarget&) const = default;
};

struct SelectionEvent {
    std::string scope;
    SelectionTarget target;
    std::string origin_view;
    std::uint64_t seq = 0;  // assigned by publish(), strictly increasing per scope

    bool operator==(const SelectionEvent&) const = default;
};

class EventBus;

// Per-subscriber queue. Publishers only append under a short lock, so a
// slow consumer never blocks them.
class Subscription {
public:
    // Waits up to `timeout`; nullopt on timeout or once the bus is closed
    // and the queue is drained.
    std::optional<SelectionEvent> next(std::chrono::milliseconds timeout);
    bool closed() const;
    const std::string& scope() const noexcept { return scope_; }

    explicit Subscription(std::string scope) : scope_(std::move(scope)) {}

private:
    friend class EventBus;
    void push(const SelectionEvent& event);
    void close();

    std::string scope_;
    mutable std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<SelectionEvent> queue_;
    bool closed_ = false;
};

// Fan-out of selection events between coordinated views. Each scope keeps
// a bounded backlog so a reconnecting client can resume after its last seq.
class EventBus {
public:
    static constexpr std::size_t kBacklog = 1024;

    // Throws InvalidArgument for an empty scope or unknown target kind.
    std::uint64_t publish(SelectionEvent event);

    // Receives every event published after this call. With `after`, backlog
    // events with seq > after are delivered first.
    std::shared_ptr<Subscription> subscribe(const std::string& scope,
                                            std::optional<std::uint64_t> after = std::nullopt);

    std::vector<SelectionEvent> backlog(const std::string& scope, std::uint64_t after) const;
    std::uint64_t last_seq(const std::string& scope) const;

    // Wakes and closes every subscription; later subscriptions start closed.
    void close();

private:
    struct Scope {
        std::uint64_t seq = 0;
        std::deque<SelectionEvent> backlog;
        std::vector<std::weak_ptr<Subscription>> subscribers;
    };

    mutable std::mutex mutex_;
    std::map<std::string, Scope> scopes_;
    bool closed_ = false;
};

Json to_json(const SelectionEvent& event);
// Reads scope, target{kind,id}, origin_view; seq is ignored.
SelectionEvent event_from_json(const Json& json);

}  // namespace kgwb::events
