#include "kgwb/server.hpp"

#include <sys/socket.h>

#include <atomic>
#include <charconv>
#include <thread>

#include <httplib.h>

#include "kgwb/error.hpp"

namespace kgwb::api {

namespace {

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, const Json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

void reply_error(httplib::Response& res, const Error& e) { reply(res, error_body(e), http_status(e.code())); }

// {"graphVersion": v, key: payload}
Json envelope(const Versioned& v, const char* key) {
    return Json{{"graphVersion", v.graph_version}, {key, v.payload}};
}

// {"graphVersion": v, ...payload fields}
Json merged(const Versioned& v) {
    Json out = v.payload;
    out["graphVersion"] = v.graph_version;
    return out;
}

Json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    try {
        return Json::parse(req.body);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("request body is not valid JSON: ") + e.what());
    }
}

// Query-string parameters as a JSON object of strings.
Json query_params(const httplib::Request& req) {
    Json out = Json::object();
    for (const auto& [key, value] : req.params) out[key] = value;
    return out;
}

std::optional<std::uint64_t> uint_param(const httplib::Request& req, const char* key) {
    if (!req.has_param(key)) return std::nullopt;
    const auto value = req.get_param_value(key);
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::InvalidArgument, std::string("parameter '") + key + "' must be a non-negative integer");
    }
    return out;
}

std::string sse_frame(const events::SelectionEvent& event) {
    return "id: " + std::to_string(event.seq) + "\nevent: selection\ndata: " + events::to_json(event).dump() + "\n\n";
}

}  // namespace

int http_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotFound:
        case ErrorCode::UnknownSession:
        case ErrorCode::UnknownCandidate:
            return 404;
        case ErrorCode::DuplicateId:
        case ErrorCode::SessionMerged:
        case ErrorCode::AlreadyMerged:
            return 409;
        case ErrorCode::TypeMismatch:
        case ErrorCode::MissingProposal:
        case ErrorCode::UnknownEdgeTarget:
        case ErrorCode::UnknownType:
        case ErrorCode::UnknownNode:
        case ErrorCode::UnknownParent:
        case ErrorCode::UnknownOperation:
        case ErrorCode::UnknownEndpoint:
        case ErrorCode::SpanOutOfRange:
            return 422;
        case ErrorCode::PortInUse:
        case ErrorCode::BadDataDir:
            return 500;
        default:
            return 400;
    }
}

Json error_body(const Error& error) {
    Json detail{{"code", to_string(error.code())}, {"message", error.what()}};
    if (const auto* syntax = dynamic_cast<const SyntaxError*>(&error)) {
        detail["position"] = syntax->position();
        detail["expected"] = syntax->expected();
    }
    return Json{{"error", std::move(detail)}};
}

struct Server::Impl {
    explicit Impl(Workbench& wb) : workbench(wb) {}

    Workbench& workbench;
    httplib::Server http;
    int port = -1;
    std::atomic<bool> stopping{false};
    std::atomic<bool> entered{false};
    std::atomic<bool> finished{false};

    // Wraps a handler so library errors become JSON error responses.
    template <typename Fn>
    httplib::Server::Handler guarded(Fn fn) {
        return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
            try {
                fn(req, res);
            } catch (const Error& e) {
                reply_error(res, e);
            } catch (const Json::exception& e) {
                reply_error(res, Error(ErrorCode::InvalidArgument, e.what()));
            }
        };
    }

    void read_route(const char* pattern, const char* op, const char* key) {
        http.Get(pattern, guarded([this, op, key](const httplib::Request& req, httplib::Response& res) {
            reply(res, envelope(workbench.invoke(op, query_params(req)), key));
        }));
    }

    void node_route(const char* pattern, const char* op, const char* key) {
        http.Get(pattern, guarded([this, op, key](const httplib::Request& req, httplib::Response& res) {
            auto params = query_params(req);
            params["id"] = req.matches[1].str();
            reply(res, envelope(workbench.invoke(op, params), key));
        }));
    }

    void install_graph_routes() {
        http.Get("/health", [](const httplib::Request&, httplib::Response& res) {
            reply(res, Json{{"status", "ok"}});
        });
        read_route("/graph/counts", "counts", "counts");
        read_route("/graph/faceted", "faceted_graph", "facetedGraph");
        read_route("/graph/distribution/nodes", "node_type_distribution", "distribution");
        read_route("/graph/distribution/relations", "relation_type_distribution", "distribution");
        read_route("/graph/frequency", "entity_frequency", "distribution");
        node_route(R"(/graph/node/(.+)/degree)", "degree_profile", "degreeProfile");
        node_route(R"(/graph/node/(.+)/neighborhood)", "neighborhood", "subgraph");
        node_route(R"(/graph/node/(.+))", "get_node", "node");

        http.Post("/query", guarded([this](const httplib::Request& req, httplib::Response& res) {
            Json params;
            const auto type = req.get_header_value("Content-Type");
            if (type.rfind("text/plain", 0) == 0) {
                params = Json{{"query", req.body}};
            } else {
                params = parse_body(req);
            }
            reply(res, envelope(workbench.invoke("query", params), "result"));
        }));

        http.Post("/ingest/graph", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            auto nodes = json_lines_from_body(body.value("nodes", Json()));
            auto edges = json_lines_from_body(body.value("edges", Json()));
            reply(res, merged(workbench.ingest_graph(nodes, edges)));
        }));
        http.Post("/ingest/corpus", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            reply(res, merged(workbench.ingest_corpus(json_lines_from_body(body.value("documents", Json())))));
        }));

        read_route("/corpus/mentions", "mentions_of", "mentions");
        http.Post("/corpus/context", guarded([this](const httplib::Request& req, httplib::Response& res) {
            reply(res, envelope(workbench.invoke("context", parse_body(req)), "context"));
        }));
    }

    void install_session_routes() {
        // Seed selection.
        http.Get("/sessions/seeds", guarded([this](const httplib::Request&, httplib::Response& res) {
            reply(res, envelope(workbench.list_seed_sessions(), "sessions"));
        }));
        http.Post("/sessions/seeds", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            reply(res, merged(workbench.create_seed_session(body.at("entity_type").get<std::string>())), 201);
        }));
        read_route("/sessions/seeds/suggest", "suggest_expansion_types", "suggestions");
        http.Post("/sessions/seeds/import", guarded([this](const httplib::Request& req, httplib::Response& res) {
            reply(res, merged(workbench.import_seeds(parse_body(req))), 201);
        }));
        http.Get(R"(/sessions/seeds/([^/]+)/export)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto v = workbench.export_seeds(req.matches[1].str());
            res.set_header("X-Graph-Version", std::to_string(v.graph_version));
            res.set_content(v.payload.dump(2), kJson);
        }));
        http.Post(R"(/sessions/seeds/([^/]+)/seeds)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            reply(res, merged(workbench.add_seed(req.matches[1].str(), body.at("node_id").get<std::string>())));
        }));
        http.Delete(R"(/sessions/seeds/([^/]+)/seeds/(.+))",
                    guarded([this](const httplib::Request& req, httplib::Response& res) {
                        reply(res, merged(workbench.remove_seed(req.matches[1].str(), req.matches[2].str())));
                    }));
        http.Get(R"(/sessions/seeds/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
            reply(res, envelope(workbench.invoke("seed_session", Json{{"id", req.matches[1].str()}}), "session"));
        }));

        // Alignment verification.
        http.Get("/sessions/verify", guarded([this](const httplib::Request&, httplib::Response& res) {
            reply(res, envelope(workbench.list_verification_sessions(), "sessions"));
        }));
        http.Post("/sessions/verify", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            reply(res, merged(workbench.create_verification_session(json_lines_from_body(body.value("candidates", Json())))),
                  201);
        }));
        http.Post("/sessions/verify/import", guarded([this](const httplib::Request& req, httplib::Response& res) {
            reply(res, merged(workbench.import_decisions(parse_body(req))), 201);
        }));
        auto decide = guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            auto decision = workflows::parse_decision(body.at("decision").get<std::string>());
            reply(res, merged(workbench.set_decision(req.matches[1].str(), req.matches[2].str(), decision)));
        });
        http.Post(R"(/sessions/verify/([^/]+)/candidates/([^/]+)/decision)", decide);
        http.Put(R"(/sessions/verify/([^/]+)/candidates/([^/]+)/decision)", decide);
        http.Get(R"(/sessions/verify/([^/]+)/candidates/([^/]+)/context)",
                 guarded([this](const httplib::Request& req, httplib::Response& res) {
                     auto params = query_params(req);
                     params["session"] = req.matches[1].str();
                     params["candidate"] = req.matches[2].str();
                     reply(res, envelope(workbench.invoke("candidate_context", params), "context"));
                 }));
        http.Get(R"(/sessions/verify/([^/]+)/export)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto v = workbench.export_decisions(req.matches[1].str());
            res.set_header("X-Graph-Version", std::to_string(v.graph_version));
            res.set_content(v.payload.dump(2), kJson);
        }));
        http.Post(R"(/sessions/verify/([^/]+)/merge)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            reply(res, merged(workbench.apply_merge(req.matches[1].str())));
        }));
        http.Get(R"(/sessions/verify/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
            reply(res, envelope(workbench.invoke("verification_session", Json{{"id", req.matches[1].str()}}), "session"));
        }));
    }

    void install_history_routes() {
        http.Get("/history", guarded([this](const httplib::Request&, httplib::Response& res) {
            Json states = Json::array();
            for (const auto& s : workbench.list_states()) states.push_back(history::to_json(s));
            reply(res, Json{{"graphVersion", workbench.graph_version()}, {"states", std::move(states)}});
        }));
        http.Post("/history", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto body = parse_body(req);
            std::optional<std::string> parent;
            if (body.contains("parent") && body["parent"].is_string()) parent = body["parent"].get<std::string>();
            auto state = workbench.record_state(body.at("op").get<std::string>(), body.value("params", Json::object()),
                                                body.value("view_hint", Json()), parent);
            reply(res, Json{{"graphVersion", workbench.graph_version()}, {"state", history::to_json(state)}}, 201);
        }));
        auto restore = guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto restored = workbench.restore_state(req.matches[1].str());
            reply(res, Json{{"state", history::to_json(restored.state)},
                            {"result", restored.result},
                            {"graphVersion", restored.graph_version},
                            {"stateGraphVersion", restored.state.graph_version},
                            {"drift", restored.graph_version != restored.state.graph_version}});
        });
        http.Get(R"(/history/([^/]+)/restore)", restore);
        http.Post(R"(/history/([^/]+)/restore)", restore);
        http.Get(R"(/history/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
            for (const auto& s : workbench.list_states()) {
                if (s.id == req.matches[1].str()) return reply(res, Json{{"state", history::to_json(s)}});
            }
            throw Error(ErrorCode::NotFound, "history state '" + req.matches[1].str() + "' not found");
        }));
    }

    void install_event_routes() {
        http.Post("/events", guarded([this](const httplib::Request& req, httplib::Response& res) {
            auto event = events::event_from_json(parse_body(req));
            auto seq = workbench.events().publish(std::move(event));
            reply(res, Json{{"seq", seq}});
        }));
        http.Get("/events/backlog", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const auto scope = req.get_param_value("scope");
            if (scope.empty()) throw Error(ErrorCode::InvalidArgument, "parameter 'scope' is required");
            Json list = Json::array();
            for (const auto& e : workbench.events().backlog(scope, uint_param(req, "after").value_or(0))) {
                list.push_back(events::to_json(e));
            }
            reply(res, Json{{"events", std::move(list)}});
        }));
        http.Get("/events", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const auto scope = req.get_param_value("scope");
            if (scope.empty()) throw Error(ErrorCode::InvalidArgument, "parameter 'scope' is required");
            auto after = uint_param(req, "after");
            auto limit = uint_param(req, "limit");
            auto sub = workbench.events().subscribe(scope, after);
            auto sent = std::make_shared<std::uint64_t>(0);
            res.set_header("Cache-Control", "no-cache");
            res.set_chunked_content_provider(
                "text/event-stream", [sub, sent, limit](std::size_t, httplib::DataSink& sink) {
                    if (limit && *sent >= *limit) {
                        sink.done();
                        return true;
                    }
                    auto event = sub->next(std::chrono::milliseconds(500));
                    if (!event) {
                        if (sub->closed()) {
                            sink.done();
                            return true;
                        }
                        const std::string keepalive = ": keepalive\n\n";
                        return sink.write(keepalive.data(), keepalive.size());
                    }
                    const auto frame = sse_frame(*event);
                    ++*sent;
                    return sink.write(frame.data(), frame.size());
                });
        }));
    }
};

Server::Server(Workbench& workbench) : impl_(std::make_unique<Impl>(workbench)) {
    auto& http = impl_->http;
    http.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    http.new_task_queue = [] { return new httplib::ThreadPool(16); };
    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            reply(res, Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}, 500);
        } catch (...) {
            reply(res, Json{{"error", {{"code", "Internal"}, {"message", "unknown error"}}}}, 500);
        }
    });
    http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && res.body.empty()) {
            reply(res, Json{{"error", {{"code", "NotFound"}, {"message", "no route for " + req.method + " " + req.path}}}},
                  404);
        }
    });
    impl_->install_graph_routes();
    impl_->install_session_routes();
    impl_->install_history_routes();
    impl_->install_event_routes();
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
    auto& http = impl_->http;
    if (port == 0) {
        impl_->port = http.bind_to_any_port(host);
        if (impl_->port < 0) throw Error(ErrorCode::PortInUse, "could not bind any port on " + host);
    } else {
        if (!http.bind_to_port(host, port)) {
            throw Error(ErrorCode::PortInUse, "port " + std::to_string(port) + " on " + host + " is unavailable");
        }
        impl_->port = port;
    }
    return impl_->port;
}

void Server::run() {
    if (impl_->port < 0) throw Error(ErrorCode::InvalidArgument, "bind() before run()");
    impl_->entered = true;
    if (!impl_->stopping) impl_->http.listen_after_bind();
    impl_->finished = true;
}

void Server::stop() {
    if (impl_->stopping.exchange(true)) return;
    impl_->workbench.events().close();
    // httplib ignores stop() until the accept loop is up, so wait for it
    // when run() has already been entered.
    if (impl_->entered) {
        while (!impl_->http.is_running() && !impl_->finished) std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
    impl_->http.stop();
}

int Server::port() const noexcept { return impl_->port; }

}  // namespace kgwb::api
