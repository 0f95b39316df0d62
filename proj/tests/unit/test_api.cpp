#include <doctest.h>

#include <filesystem>
#include <thread>

#include "kgwb/error.hpp"
#include "live_server.hpp"

using namespace kgwb;
using kgwb::testing::LiveServer;

namespace {

const Json kNodes = Json::array({
    {{"id", "o1"}, {"type", "Occupation"}, {"name", "Data Analyst"}},
    {{"id", "o2"}, {"type", "Occupation"}, {"name", "Editor"}},
    {{"id", "s1"}, {"type", "Skill"}, {"name", "Python"}},
    {{"id", "s2"}, {"type", "Skill"}, {"name", "Writing"}},
});
const Json kEdges = Json::array({
    {{"id", "e1"}, {"src", "o1"}, {"dst", "s1"}, {"rel", "requires"}},
    {{"id", "e2"}, {"src", "o2"}, {"dst", "s2"}, {"rel", "requires"}},
    {{"id", "e3"}, {"src", "o1"}, {"dst", "o2"}, {"rel", "related_to"}},
});
const Json kDocs = Json::array({
    {{"id", "d1"},
     {"text", "Data Analyst wanted: Python and Tableau."},
     {"mentions", Json::array({{{"start", 0}, {"end", 12}, {"surface", "Data Analyst"}, {"node_id", "o1"}},
                               {{"start", 21}, {"end", 27}, {"surface", "Python"}, {"node_id", "s1"}}})}},
    {{"id", "d2"}, {"text", "Editors love Tableau."}, {"mentions", Json::array()}},
});

void seed(testing::HttpClient& http) {
    REQUIRE(http.post("/ingest/graph", Json{{"nodes", kNodes}, {"edges", kEdges}}).status == 200);
    REQUIRE(http.post("/ingest/corpus", Json{{"documents", kDocs}}).status == 200);
}

}  // namespace

TEST_SUITE("api") {

TEST_CASE("health and unknown routes") {
    LiveServer live;
    auto http = live.client();
    const auto health = http.get("/health");
    CHECK(health.status == 200);
    CHECK(health.json() == Json{{"status", "ok"}});
    const auto missing = http.get("/nope");
    CHECK(missing.status == 404);
    CHECK(missing.json()["error"]["code"] == "NotFound");
}

TEST_CASE("ingest bumps the version; reads carry it") {
    LiveServer live;
    auto http = live.client();
    CHECK(http.get("/graph/counts").json() == Json{{"graphVersion", 0}, {"counts", {{"nodes", 0}, {"edges", 0}}}});
    const auto ingest = http.post("/ingest/graph", Json{{"nodes", kNodes}, {"edges", kEdges}}).json();
    CHECK(ingest["report"]["nodes_added"] == 4);
    CHECK(ingest["report"]["edges_added"] == 3);
    CHECK(ingest["graphVersion"] == 1);
    // JSON-lines text bodies are accepted too.
    const auto text = http.post("/ingest/graph", Json{{"nodes", "{\"type\":\"Skill\"}\n{bad\n"}}).json();
    CHECK(text["report"]["nodes_added"] == 1);
    CHECK(text["report"]["rejected"][0]["ordinal"] == 2);
    const auto counts = http.get("/graph/counts").json();
    CHECK(counts["graphVersion"] == 2);
    CHECK(counts["counts"]["nodes"] == 5);
}

TEST_CASE("faceted totals equal counts; distributions and node views") {
    LiveServer live;
    auto http = live.client();
    seed(http);
    const auto faceted = http.get("/graph/faceted").json()["facetedGraph"];
    std::size_t nodes = 0, edges = 0;
    for (const auto& s : faceted["super_nodes"]) nodes += s["count"].get<std::size_t>();
    for (const auto& s : faceted["super_edges"]) edges += s["count"].get<std::size_t>();
    const auto counts = http.get("/graph/counts").json()["counts"];
    CHECK(nodes == counts["nodes"]);
    CHECK(edges == counts["edges"]);

    CHECK(http.get("/graph/distribution/nodes").json()["distribution"]["total"] == 4);
    const auto rel = http.get("/graph/distribution/relations?type=Skill").json()["distribution"];
    CHECK(rel["entries"] == Json::array({{{"label", "requires"}, {"count", 2}}}));
    const auto freq = http.get("/graph/frequency?type=Skill").json()["distribution"];
    CHECK(freq["entries"][0]["label"] == "s2");  // degree 1, no mentions
    CHECK(freq["entries"][1]["count"] == 2);     // s1: degree 1 + 1 mention

    CHECK(http.get("/graph/node/s1").json()["node"]["name"] == "Python");
    CHECK(http.get("/graph/node/zz").status == 404);
    const auto degree = http.get("/graph/node/o1/degree").json()["degreeProfile"];
    CHECK(degree["relations"].size() == 2);
    const auto hood = http.get("/graph/node/o1/neighborhood?depth=1&cap=2").json()["subgraph"];
    CHECK(hood["nodes"].size() == 2);
    CHECK(hood["truncated"] == true);
    const auto filtered = http.get("/graph/node/o1/neighborhood?depth=2&rel=requires").json()["subgraph"];
    CHECK(filtered["nodes"].size() == 2);
    CHECK(http.get("/graph/node/o1/neighborhood?depth=x").status == 400);
}

TEST_CASE("query endpoint: JSON and text bodies, syntax errors") {
    LiveServer live;
    auto http = live.client();
    seed(http);
    const auto r = http.post("/query", Json{{"query", "MATCH (a:Occupation)-[:requires]->(b) RETURN a, b"}}).json();
    CHECK(r["result"]["rows"] == Json::array({Json::array({"o1", "s1"}), Json::array({"o2", "s2"})}));
    const auto plain = http.post("/query", "MATCH (a:Skill) RETURN a LIMIT 1", "text/plain").json();
    CHECK(plain["result"]["truncated"] == true);
    const auto bad = http.post("/query", Json{{"query", "MATCH (a RETURN a"}});
    CHECK(bad.status == 400);
    CHECK(bad.json()["error"]["code"] == "SyntaxError");
    CHECK(bad.json()["error"]["position"] == 6);
    CHECK(http.post("/query", Json{{"query", "MATCH (a) RETURN b"}}).json()["error"]["code"] == "UnboundVariable");
    CHECK(http.post("/query", "{not json").status == 400);
}

TEST_CASE("corpus endpoints") {
    LiveServer live;
    auto http = live.client();
    seed(http);
    const auto by_node = http.get("/corpus/mentions?node=s1").json()["mentions"];
    REQUIRE(by_node.size() == 1);
    CHECK(by_node[0]["doc_id"] == "d1");
    CHECK(http.get("/corpus/mentions?surface=PYTHON").json()["mentions"].size() == 1);
    CHECK(http.get("/corpus/mentions?surface=nothing").json()["mentions"].empty());
    CHECK(http.get("/corpus/mentions").status == 400);
    const auto ctx = http.post("/corpus/context", Json{{"doc", "d1"}, {"spans", {{{"start", 21}, {"end", 27}}}}, {"window", 4}})
                         .json()["context"];
    CHECK(ctx["window"] == Json{{"start", 17}, {"end", 31}});
    CHECK(ctx["segments"][1] == Json{{"text", "Python"}, {"highlighted", true}});
    CHECK(http.post("/corpus/context", Json{{"doc", "d1"}, {"spans", {{{"start", 21}, {"end", 99}}}}}).status == 422);
    CHECK(http.post("/corpus/context", Json{{"doc", "dx"}, {"spans", {{{"start", 0}, {"end", 1}}}}}).status == 404);
}

TEST_CASE("seed session endpoints") {
    LiveServer live;
    auto http = live.client();
    seed(http);
    const auto created = http.post("/sessions/seeds", Json{{"entity_type", "Skill"}});
    CHECK(created.status == 201);
    const std::string id = created.json()["session"]["id"];
    CHECK(http.post("/sessions/seeds", Json{{"entity_type", "Planet"}}).json()["error"]["code"] == "UnknownType");
    const auto added = http.post("/sessions/seeds/" + id + "/seeds", Json{{"node_id", "s2"}}).json();
    CHECK(added["session"]["seeds"] == Json::array({"s2"}));
    CHECK(added["sessionVersion"].get<int>() > 0);
    http.post("/sessions/seeds/" + id + "/seeds", Json{{"node_id", "s1"}});
    const auto wrong = http.post("/sessions/seeds/" + id + "/seeds", Json{{"node_id", "o1"}});
    CHECK(wrong.status == 422);
    CHECK(wrong.json()["error"]["code"] == "TypeMismatch");
    CHECK(http.post("/sessions/seeds/seed-99/seeds", Json{{"node_id", "s1"}}).status == 404);

    const auto exported = http.get("/sessions/seeds/" + id + "/export");
    CHECK(exported.graph_version_header == "2");
    CHECK(exported.body.find('\n') != std::string::npos);  // pretty printed
    CHECK(exported.json() == Json{{"entity_type", "Skill"},
                                  {"seeds", {{{"node_id", "s2"}, {"name", "Writing"}}, {{"node_id", "s1"}, {"name", "Python"}}}}});
    const auto imported = http.post("/sessions/seeds/import", exported.json()).json();
    CHECK(imported["session"]["seeds"] == Json::array({"s2", "s1"}));

    CHECK(http.del("/sessions/seeds/" + id + "/seeds/s2").json()["session"]["seeds"] == Json::array({"s1"}));
    CHECK(http.get("/sessions/seeds").json()["sessions"].size() == 2);
    CHECK(http.get("/sessions/seeds/" + id).json()["session"]["entity_type"] == "Skill");
    const auto suggest = http.get("/sessions/seeds/suggest?k=1").json()["suggestions"];
    CHECK(suggest.size() == 1);
}

TEST_CASE("verification session endpoints and merge") {
    LiveServer live;
    auto http = live.client();
    seed(http);
    const Json candidates = Json::array({
        {{"id", "c1"},
         {"surface", "Tableau"},
         {"evidence", {{{"doc", "d1"}, {"start", 32}, {"end", 39}}, {{"doc", "d2"}, {"start", 13}, {"end", 20}}}},
         {"proposed_type", "Skill"},
         {"proposed_edges", {{{"rel", "requires"}, {"target", "o1"}, {"dir", "in"}}}}},
        {{"id", "c2"}, {"surface", "Python"}, {"evidence", {{{"doc", "d1"}, {"start", 21}, {"end", 27}}}}, {"graph_node", "s1"}},
        {{"id", "c3"}, {"surface", "Ghost"}, {"evidence", Json::array()}, {"graph_node", "zz"}},
    });
    const auto created = http.post("/sessions/verify", Json{{"candidates", candidates}});
    CHECK(created.status == 201);
    const auto body = created.json();
    const std::string id = body["session_id"];
    CHECK(body["rejected"].size() == 1);
    CHECK(body["session"]["candidates"].size() == 2);

    const auto ctx = http.get("/sessions/verify/" + id + "/candidates/c1/context?window=5").json()["context"];
    CHECK(ctx["corpus"].size() == 2);
    CHECK(ctx["graph"].is_null());
    const auto linked = http.get("/sessions/verify/" + id + "/candidates/c2/context").json()["context"];
    CHECK(linked["graph"]["nodes"].size() == 2);

    CHECK(http.post("/sessions/verify/" + id + "/candidates/c2/decision", Json{{"decision", "insert"}}).json()["error"]["code"] ==
          "MissingProposal");
    CHECK(http.post("/sessions/verify/" + id + "/candidates/c1/decision", Json{{"decision", "approve"}}).status == 400);
    CHECK(http.post("/sessions/verify/" + id + "/candidates/c9/decision", Json{{"decision", "ignore"}}).status == 404);
    CHECK(http.put("/sessions/verify/" + id + "/candidates/c1/decision", Json{{"decision", "insert"}}).json()["candidate"]["decision"] ==
          "insert");
    http.post("/sessions/verify/" + id + "/candidates/c2/decision", Json{{"decision", "defer"}});

    const auto exported = http.get("/sessions/verify/" + id + "/export").json();
    const auto copy = http.post("/sessions/verify/import", exported).json();
    CHECK(copy["session"]["candidates"] == http.get("/sessions/verify/" + id).json()["session"]["candidates"]);

    const auto before = http.get("/graph/counts").json();
    const auto merged = http.post("/sessions/verify/" + id + "/merge", "").json();
    CHECK(merged["merge"]["inserted_nodes"] == 1);
    CHECK(merged["merge"]["inserted_edges"] == 1);
    CHECK(merged["graphVersion"].get<int>() == before["graphVersion"].get<int>() + 1);
    const auto after = http.get("/graph/counts").json()["counts"];
    CHECK(after["nodes"] == before["counts"]["nodes"].get<int>() + 1);
    CHECK(http.post("/sessions/verify/" + id + "/merge", "").status == 409);
    const auto late = http.post("/sessions/verify/" + id + "/candidates/c1/decision", Json{{"decision", "ignore"}});
    CHECK(late.status == 409);
    CHECK(late.json()["error"]["code"] == "SessionMerged");
    CHECK(http.get("/sessions/verify").json()["sessions"].size() == 2);
}

TEST_CASE("history endpoints") {
    LiveServer live;
    auto http = live.client();
    seed(http);
    const auto recorded = http.post("/history", Json{{"op", "neighborhood"}, {"params", {{"id", "o1"}, {"depth", 2}}},
                                                     {"view_hint", {{"layout", "force"}}}});
    CHECK(recorded.status == 201);
    const std::string id = recorded.json()["state"]["id"];
    const auto direct = http.get("/graph/node/o1/neighborhood?depth=2").json()["subgraph"];
    const auto restored = http.post("/history/" + id + "/restore", "").json();
    CHECK(restored["result"] == direct);
    CHECK(restored["state"]["view_hint"] == Json{{"layout", "force"}});
    CHECK(restored["drift"] == false);

    CHECK(http.post("/history", Json{{"op", "frobnicate"}}).json()["error"]["code"] == "UnknownOperation");
    CHECK(http.post("/history", Json{{"op", "counts"}, {"parent", "h999"}}).json()["error"]["code"] == "UnknownParent");
    const auto child = http.post("/history", Json{{"op", "counts"}, {"parent", id}}).json();
    CHECK(child["state"]["parent"] == id);
    CHECK(http.get("/history").json()["states"].size() == 2);
    CHECK(http.get("/history/" + id).json()["state"]["op"] == "neighborhood");
    CHECK(http.get("/history/h999/restore").status == 404);

    http.post("/ingest/graph", Json{{"nodes", {{{"id", "s9"}, {"type", "Skill"}}}}, {"edges", {{{"src", "o1"}, {"dst", "s9"}, {"rel", "requires"}}}}});
    const auto drifted = http.get("/history/" + id + "/restore").json();
    CHECK(drifted["drift"] == true);
    CHECK(drifted["result"] != direct);
}

TEST_CASE("selection events stream over SSE") {
    LiveServer live;
    auto http = live.client();
    const Json event{{"scope", "ui"}, {"target", {{"kind", "node"}, {"id", "o1"}}}, {"origin_view", "faceted"}};
    CHECK(http.post("/events", event).json()["seq"] == 1);
    CHECK(http.post("/events", Json{{"scope", "ui"}, {"target", {{"kind", "planet"}, {"id", "x"}}}}).status == 400);

    auto read_frames = [&](const std::string& path) {
        std::string all;
        auto reader = live.client();
        reader.stream(path, [&](const std::string& chunk) {
            all += chunk;
            return true;
        });
        return all;
    };
    std::string first, second;
    std::thread a([&] { first = read_frames("/events?scope=ui&after=1&limit=3"); });
    std::thread b([&] { second = read_frames("/events?scope=ui&after=1&limit=3"); });
    for (int i = 0; i < 3; ++i) http.post("/events", event);
    a.join();
    b.join();
    auto data_lines = [](const std::string& s) {
        std::vector<Json> out;
        std::size_t pos = 0;
        while ((pos = s.find("data: ", pos)) != std::string::npos) {
            const auto end = s.find('\n', pos);
            out.push_back(Json::parse(s.substr(pos + 6, end - pos - 6)));
            pos = end;
        }
        return out;
    };
    const auto ea = data_lines(first);
    REQUIRE(ea.size() == 3);
    CHECK(ea[0]["seq"] == 2);
    CHECK(ea[2]["seq"] == 4);
    CHECK(ea == data_lines(second));
    CHECK(first.find("id: 2\nevent: selection\n") != std::string::npos);
    CHECK(http.get("/events/backlog?scope=ui&after=2").json()["events"].size() == 2);
}

TEST_CASE("binding a taken port fails with PortInUse") {
    LiveServer live;
    Workbench wb;
    api::Server other(wb);
    try {
        other.bind("127.0.0.1", live.port());
        FAIL("expected PortInUse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PortInUse);
    }
}

TEST_CASE("error codes map to statuses") {
    CHECK(api::http_status(ErrorCode::NotFound) == 404);
    CHECK(api::http_status(ErrorCode::SyntaxError) == 400);
    CHECK(api::http_status(ErrorCode::AlreadyMerged) == 409);
    CHECK(api::http_status(ErrorCode::UnknownEdgeTarget) == 422);
}

TEST_CASE("data directory survives a restart") {
    const auto dir = std::filesystem::temp_directory_path() / "kgwb_api_restart";
    std::filesystem::remove_all(dir);
    std::string seed_id;
    {
        LiveServer live(WorkbenchConfig{dir});
        auto http = live.client();
        seed(http);
        seed_id = http.post("/sessions/seeds", Json{{"entity_type", "Skill"}}).json()["session"]["id"];
        http.post("/sessions/seeds/" + seed_id + "/seeds", Json{{"node_id", "s1"}});
        http.post("/history", Json{{"op", "counts"}});
    }
    LiveServer again(WorkbenchConfig{dir});
    auto http = again.client();
    CHECK(http.get("/graph/counts").json()["counts"] == Json{{"nodes", 4}, {"edges", 3}});
    CHECK(http.get("/sessions/seeds/" + seed_id).json()["session"]["seeds"] == Json::array({"s1"}));
    CHECK(http.get("/history").json()["states"].size() == 1);
    CHECK(http.get("/corpus/mentions?node=o1").json()["mentions"].size() == 1);
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
