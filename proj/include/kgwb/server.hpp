#pragma once

#include <memory>
#include <string>

#include "kgwb/error.hpp"
#include "kgwb/workbench.hpp"

namespace kgwb::api {

// Maps an error category to its HTTP status.
int http_status(ErrorCode code) noexcept;

// JSON body for a failed request: {"error":{"code","message"[,"position","expected"]}}.
Json error_body(const Error& error);

// HTTP front end over a Workbench. Endpoints:
//   GET  /health
//   GET  /graph/counts | /graph/faceted | /graph/distribution/nodes
//   GET  /graph/distribution/relations?type= | /graph/frequency?type=
//   GET  /graph/node/{id} | /graph/node/{id}/degree | /graph/node/{id}/neighborhood?depth=&cap=&rel=
//   POST /query
//   POST /ingest/graph | /ingest/corpus
//   GET  /corpus/mentions?surface=|node=      POST /corpus/context
//   /sessions/seeds/...  /sessions/verify/... (incl. POST /sessions/verify/{id}/merge)
//   GET|POST /history, GET /history/{id}, GET|POST /history/{id}/restore
//   GET  /events?scope=&after=&limit= (text/event-stream), GET /events/backlog, POST /events
class Server {
public:
    explicit Server(Workbench& workbench);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    // Binds without serving. Port 0 picks a free port. Returns the bound
    // port; throws Error(PortInUse) when the address is taken.
    int bind(const std::string& host, int port);

    // Serves until stop(). Requires bind().
    void run();

    // Closes event streams and stops the listener; safe from any thread.
    void stop();

    int port() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace kgwb::api
