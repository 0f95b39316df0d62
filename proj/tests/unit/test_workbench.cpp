#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kgwb/demo_data.hpp"
#include "kgwb/error.hpp"
#include "kgwb/workbench.hpp"

using namespace kgwb;
namespace fs = std::filesystem;

namespace {

std::vector<JsonLine> lines(const std::vector<Json>& records) {
    std::vector<JsonLine> out;
    std::size_t ordinal = 0;
    for (const auto& r : records) out.push_back({++ordinal, std::optional<Json>(std::in_place, r), {}});
    return out;
}

void load_demo(Workbench& wb) {
    const auto demo = demo::generate();
    wb.ingest_graph(lines(demo.nodes), lines(demo.edges));
    wb.ingest_corpus(lines(demo.documents));
}

}  // namespace

TEST_SUITE("workbench") {

TEST_CASE("every registered operation runs on the demo data") {
    Workbench wb;
    load_demo(wb);
    const auto seed = wb.create_seed_session("Skill").payload["session"]["id"].get<std::string>();
    const auto demo = demo::generate();
    const auto verify = wb.create_verification_session(lines(demo.candidates)).payload["session_id"].get<std::string>();
    const auto& doc = demo.documents.front();
    const std::map<std::string, Json> params{
        {"counts", Json::object()},
        {"faceted_graph", Json::object()},
        {"node_type_distribution", Json::object()},
        {"relation_type_distribution", {{"type", "Skill"}}},
        {"get_node", {{"id", demo.nodes.front()["id"]}}},
        {"degree_profile", {{"id", demo.nodes.front()["id"]}}},
        {"neighborhood", {{"id", demo.nodes.front()["id"]}, {"depth", 2}, {"cap", 10}}},
        {"entity_frequency", {{"type", "Skill"}}},
        {"query", {{"query", "MATCH (a:Occupation)-[:requires_skill]->(b) RETURN a, b LIMIT 5"}}},
        {"mentions_of", {{"surface", "python"}}},
        {"context", {{"doc", doc["id"]}, {"spans", {{{"start", 0}, {"end", 1}}}}, {"window", 10}}},
        {"suggest_expansion_types", {{"k", 3}}},
        {"seed_session", {{"id", seed}}},
        {"export_seeds", {{"id", seed}}},
        {"verification_session", {{"id", verify}}},
        {"candidate_context", {{"session", verify}, {"candidate", demo.candidates.front()["id"]}}},
    };
    CHECK(params.size() == Workbench::operation_names().size());
    for (const auto& name : Workbench::operation_names()) {
        CAPTURE(name);
        REQUIRE(params.count(name));
        const auto a = wb.invoke(name, params.at(name));
        const auto b = wb.invoke(name, params.at(name));
        CHECK(a.payload == b.payload);
        CHECK(a.graph_version == 2);
    }
    CHECK_THROWS_AS(wb.invoke("nope", Json::object()), Error);
    CHECK_THROWS_AS(wb.invoke("get_node", Json::object()), Error);
    CHECK_THROWS_AS(wb.invoke("neighborhood", Json{{"id", "x"}, {"depth", -1}}), Error);
}

TEST_CASE("writes bump the version only when data changes") {
    Workbench wb;
    CHECK(wb.graph_version() == 0);
    CHECK(wb.ingest_graph({}, {}).graph_version == 0);
    CHECK(wb.ingest_graph(lines({Json{{"id", "a"}, {"type", "T"}}}), {}).graph_version == 1);
    CHECK(wb.ingest_graph(lines({Json{{"id", "a"}, {"type", "T"}}}), {}).graph_version == 1);  // duplicate rejected
    CHECK(wb.ingest_corpus(lines({Json{{"id", "d"}, {"text", "a"}}})).graph_version == 2);
    CHECK(wb.create_seed_session("T").graph_version == 2);
}

TEST_CASE("history restore replays against the current data") {
    Workbench wb;
    load_demo(wb);
    const Json params{{"query", "MATCH (a:Skill) RETURN a LIMIT 4"}};
    const auto state = wb.record_state("query", params, Json{{"table", true}}, std::nullopt);
    const auto restored = wb.restore_state(state.id);
    CHECK(restored.result == wb.invoke("query", params).payload);
    CHECK(restored.graph_version == state.graph_version);
    CHECK(restored.state.view_hint == Json{{"table", true}});
    CHECK_THROWS_AS(wb.record_state("ingest", Json::object(), nullptr, std::nullopt), Error);
}

TEST_CASE("a data directory reloads graph, corpus, sessions and history") {
    const auto dir = fs::temp_directory_path() / "kgwb_workbench_reload";
    fs::remove_all(dir);
    Json faceted;
    std::string state_id;
    {
        Workbench wb(WorkbenchConfig{dir});
        load_demo(wb);
        const auto demo = demo::generate();
        const auto created = wb.create_verification_session(lines(demo.candidates)).payload;
        const std::string id = created["session_id"];
        for (const auto& c : created["session"]["candidates"]) {
            if (!c["proposed_type"].is_null()) {
                wb.set_decision(id, c["id"], workflows::Decision::Insert);
                break;
            }
        }
        wb.apply_merge(id);
        faceted = wb.invoke("faceted_graph", Json::object()).payload;
        state_id = wb.record_state("faceted_graph", Json::object(), nullptr, std::nullopt).id;
    }
    Workbench again(WorkbenchConfig{dir});
    CHECK(again.startup_report()["graph"]["rejected"].empty());
    CHECK(again.invoke("faceted_graph", Json::object()).payload == faceted);
    CHECK(again.list_verification_sessions().payload[0]["merged"] == true);
    CHECK(again.restore_state(state_id).result == faceted);
    fs::remove_all(dir);

    fs::create_directories(dir.parent_path());
    const auto file = fs::temp_directory_path() / "kgwb_workbench_not_a_dir";
    { std::ofstream(file) << "x"; }
    CHECK_THROWS_AS(Workbench(WorkbenchConfig{file}), Error);
    fs::remove(file);
}

}  // TEST_SUITE
