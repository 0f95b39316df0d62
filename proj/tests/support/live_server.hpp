#pragma once

#include <memory>
#include <thread>

#include "http_client.hpp"
#include "kgwb/server.hpp"

namespace kgwb::testing {

// A Workbench served on an ephemeral loopback port for the lifetime of
// the object.
class LiveServer {
public:
    explicit LiveServer(WorkbenchConfig config = {})
        : workbench_(std::make_unique<Workbench>(std::move(config))), server_(*workbench_) {
        port_ = server_.bind("127.0.0.1", 0);
        thread_ = std::thread([this] { server_.run(); });
    }
    ~LiveServer() {
        server_.stop();
        thread_.join();
    }
    LiveServer(const LiveServer&) = delete;
    LiveServer& operator=(const LiveServer&) = delete;

    Workbench& workbench() { return *workbench_; }
    int port() const { return port_; }
    HttpClient client() const { return HttpClient("127.0.0.1", port_); }

private:
    std::unique_ptr<Workbench> workbench_;
    api::Server server_;
    int port_ = 0;
    std::thread thread_;
};

}  // namespace kgwb::testing
