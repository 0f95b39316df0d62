#include "cli.hpp"

#include <pthread.h>
#include <signal.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "kgwb/demo_data.hpp"
#include "kgwb/error.hpp"
#include "kgwb/query.hpp"
#include "kgwb/server.hpp"
#include "kgwb/workbench.hpp"

namespace kgwb::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string data_dir;
    std::size_t node_cap = analytics::kDefaultNodeCap;

    // ingest
    std::string nodes_file, edges_file, corpus_file, candidates_file;
    // serve
    std::string host = "127.0.0.1";
    int port = 8080;
    // query
    std::string query_text;
    std::string format = "json";
    // export
    std::string session_id, out_file;
    // demo-data
    std::uint64_t seed = demo::kDefaultSeed;
    bool force = false;
};

WorkbenchConfig config_of(const Options& opts) {
    WorkbenchConfig cfg;
    if (!opts.data_dir.empty()) cfg.data_dir = fs::path(opts.data_dir);
    cfg.node_cap_default = opts.node_cap;
    return cfg;
}

std::vector<JsonLine> lines_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::UnreadableInput, "cannot open " + path);
    return read_json_lines(in);
}

int cmd_ingest(const Options& opts, std::ostream& out) {
    Workbench wb(config_of(opts));
    Json report = Json::object();
    if (!opts.nodes_file.empty() || !opts.edges_file.empty()) {
        auto nodes = opts.nodes_file.empty() ? std::vector<JsonLine>{} : lines_from_file(opts.nodes_file);
        auto edges = opts.edges_file.empty() ? std::vector<JsonLine>{} : lines_from_file(opts.edges_file);
        report = wb.ingest_graph(nodes, edges).payload.at("report");
    }
    if (!opts.corpus_file.empty()) {
        report["corpus"] = wb.ingest_corpus(lines_from_file(opts.corpus_file)).payload.at("report");
    }
    if (!opts.candidates_file.empty()) {
        auto created = wb.create_verification_session(lines_from_file(opts.candidates_file)).payload;
        report["verification"] = Json{{"session_id", created.at("session_id")}, {"rejected", created.at("rejected")}};
    }
    report["graphVersion"] = wb.graph_version();
    out << report.dump(2) << '\n';
    return kExitOk;
}

int cmd_query(const Options& opts, std::ostream& out) {
    Workbench wb(config_of(opts));
    auto result = wb.invoke("query", Json{{"query", opts.query_text}}).payload;
    if (opts.format == "text") {
        out << query::to_text(query::result_table_from_json(result));
    } else {
        out << result.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_export(const Options& opts, std::ostream& out) {
    Workbench wb(config_of(opts));
    Json file;
    if (opts.session_id.rfind("seed-", 0) == 0) {
        file = wb.export_seeds(opts.session_id).payload;
    } else {
        file = wb.export_decisions(opts.session_id).payload;
    }
    if (opts.out_file.empty()) {
        out << file.dump(2) << '\n';
        return kExitOk;
    }
    std::ofstream dst(opts.out_file, std::ios::binary | std::ios::trunc);
    dst << file.dump(2) << '\n';
    if (!dst) throw Error(ErrorCode::BadDataDir, "cannot write " + opts.out_file);
    out << "wrote " << opts.out_file << '\n';
    return kExitOk;
}

int cmd_demo_data(const Options& opts, std::ostream& out) {
    if (opts.data_dir.empty()) throw Error(ErrorCode::BadDataDir, "demo-data needs --data-dir (or WORKBENCH_DATA_DIR)");
    auto dataset = demo::generate(opts.seed);
    demo::write(dataset, opts.data_dir, opts.force);
    out << Json{{"data_dir", opts.data_dir},
                {"seed", opts.seed},
                {"nodes", dataset.nodes.size()},
                {"edges", dataset.edges.size()},
                {"documents", dataset.documents.size()},
                {"candidates", dataset.candidates.size()}}
               .dump(2)
        << '\n';
    return kExitOk;
}

int cmd_serve(const Options& opts, std::ostream& out) {
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    sigaddset(&signals, SIGUSR1);
    // Block before any thread starts so only the watcher receives them.
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    Workbench wb(config_of(opts));
    api::Server server(wb);
    const int port = server.bind(opts.host, opts.port);
    out << "listening on http://" << opts.host << ":" << port << std::endl;

    std::thread watcher([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    });
    server.run();
    pthread_kill(watcher.native_handle(), SIGUSR1);
    watcher.join();
    out << "stopped" << std::endl;
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Knowledge-graph exploration and curation workbench", "kgwb"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--data-dir", opts.data_dir, "Data directory (graph, corpus, sessions, history)")
        ->envname("WORKBENCH_DATA_DIR");
    app.add_option("--node-cap", opts.node_cap, "Default neighborhood node cap")->check(CLI::Range(1, 1 << 30));

    auto* ingest = app.add_subcommand("ingest", "Ingest JSON-lines files and print the report");
    ingest->add_option("--nodes", opts.nodes_file, "Node records")->check(CLI::ExistingFile);
    ingest->add_option("--edges", opts.edges_file, "Edge records")->check(CLI::ExistingFile);
    ingest->add_option("--corpus", opts.corpus_file, "Document records")->check(CLI::ExistingFile);
    ingest->add_option("--candidates", opts.candidates_file, "Alignment candidates; opens a verification session")
        ->check(CLI::ExistingFile);

    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    serve->add_option("--host", opts.host, "Bind address");
    serve->add_option("--port", opts.port, "Port")->envname("WORKBENCH_PORT")->check(CLI::Range(1, 65535));

    auto* query = app.add_subcommand("query", "Run a graph query");
    query->add_option("text", opts.query_text, "Query text")->required();
    query->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* exp = app.add_subcommand("export", "Export a seed or decision session file");
    exp->add_option("--session", opts.session_id, "Session id (seed-N or verify-N)")->required();
    exp->add_option("--out", opts.out_file, "Output file (default: stdout)");

    auto* demo = app.add_subcommand("demo-data", "Write the synthetic demo dataset");
    demo->add_option("--seed", opts.seed, "Generator seed");
    demo->add_flag("--force", opts.force, "Overwrite existing files");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (ingest->parsed() && opts.nodes_file.empty() && opts.edges_file.empty() && opts.corpus_file.empty() &&
            opts.candidates_file.empty()) {
            throw CLI::ValidationError("ingest", "give at least one of --nodes, --edges, --corpus, --candidates");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* scope = &app;
        for (const auto* sub : app.get_subcommands()) scope = sub;
        err << scope->help();
        return kExitUsage;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(opts, out);
        if (serve->parsed()) return cmd_serve(opts, out);
        if (query->parsed()) return cmd_query(opts, out);
        if (exp->parsed()) return cmd_export(opts, out);
        if (demo->parsed()) return cmd_demo_data(opts, out);
    } catch (const Error& e) {
        err << api::error_body(e).dump() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}

}  // namespace kgwb::cli
