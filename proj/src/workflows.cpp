#include "kgwb/workflows.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include "kgwb/error.hpp"

namespace kgwb::workflows {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSeedPrefix = "seed-";
constexpr std::string_view kVerifyPrefix = "verify-";

std::int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string_view to_string(EdgeDirection d) { return d == EdgeDirection::Out ? "out" : "in"; }

std::optional<std::string> opt_string(const Json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

std::string req_string(const Json& obj, const char* key) {
    auto value = opt_string(obj, key);
    if (!value || value->empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
    return *value;
}

std::size_t req_offset(const Json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer() || it->get<std::int64_t>() < 0) {
        throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a non-negative integer");
    }
    return it->get<std::size_t>();
}

std::size_t id_suffix(std::string_view id, std::string_view prefix) {
    if (!id.starts_with(prefix)) return 0;
    std::size_t value = 0;
    for (char c : id.substr(prefix.size())) {
        if (c < '0' || c > '9') return 0;
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

void write_atomically(const fs::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::BadDataDir, "cannot write " + tmp.string());
        out << content;
        if (!out) throw Error(ErrorCode::BadDataDir, "cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

SeedSession seed_session_from_json(const Json& j) {
    SeedSession s;
    s.id = j.at("id").get<std::string>();
    s.entity_type = j.at("entity_type").get<std::string>();
    s.seeds = j.at("seeds").get<std::vector<NodeId>>();
    s.created_ms = j.value("created_ms", std::int64_t{0});
    s.updated_ms = j.value("updated_ms", std::int64_t{0});
    s.version = j.value("version", std::uint64_t{0});
    return s;
}

VerificationSession verification_from_json(const Json& j) {
    VerificationSession s;
    s.id = j.at("id").get<std::string>();
    for (const auto& c : j.at("candidates")) s.candidates.push_back(candidate_from_json(c, true));
    s.merged = j.value("merged", false);
    s.created_ms = j.value("created_ms", std::int64_t{0});
    s.updated_ms = j.value("updated_ms", std::int64_t{0});
    s.version = j.value("version", std::uint64_t{0});
    return s;
}

}  // namespace

std::string_view to_string(Decision decision) noexcept {
    switch (decision) {
        case Decision::Pending: return "pending";
        case Decision::Insert: return "insert";
        case Decision::Ignore: return "ignore";
        case Decision::Defer: return "defer";
    }
    return "pending";
}

Decision parse_decision(std::string_view text) {
    if (text == "pending") return Decision::Pending;
    if (text == "insert") return Decision::Insert;
    if (text == "ignore") return Decision::Ignore;
    if (text == "defer") return Decision::Defer;
    throw Error(ErrorCode::InvalidArgument,
                "decision must be one of pending, insert, ignore, defer (got '" + std::string(text) + "')");
}

std::string merged_node_id(std::string_view session_id, std::string_view candidate_id) {
    return "merged:" + std::string(session_id) + ":" + std::string(candidate_id);
}

std::vector<TypeSuggestion> suggest_expansion_types(const PropertyGraph& graph, const CorpusStore& corpus,
                                                    std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    std::vector<TypeSuggestion> out;
    for (const auto& label : graph.type_labels()) {
        const auto freq = analytics::entity_frequency(graph, label, corpus);
        if (freq.entries.empty()) continue;
        out.push_back({label, static_cast<double>(freq.total) / static_cast<double>(freq.entries.size())});
    }
    std::stable_sort(out.begin(), out.end(), [](const TypeSuggestion& a, const TypeSuggestion& b) {
        return a.mean_frequency < b.mean_frequency;
    });
    if (out.size() > k) out.resize(k);
    return out;
}

AlignmentCandidate candidate_from_json(const Json& record, bool with_decision) {
    if (!record.is_object()) throw Error(ErrorCode::InvalidArgument, "candidate record must be an object");
    AlignmentCandidate c;
    c.id = req_string(record, "id");
    c.surface = req_string(record, "surface");
    if (auto it = record.find("evidence"); it != record.end() && !it->is_null()) {
        if (!it->is_array()) throw Error(ErrorCode::InvalidArgument, "evidence must be an array");
        for (const auto& e : *it) {
            if (!e.is_object()) throw Error(ErrorCode::InvalidArgument, "evidence entry must be an object");
            c.evidence.push_back({req_string(e, "doc"), req_offset(e, "start"), req_offset(e, "end")});
        }
    }
    c.graph_node = opt_string(record, "graph_node");
    c.proposed_type = opt_string(record, "proposed_type");
    if (c.proposed_type && c.proposed_type->empty()) c.proposed_type.reset();
    if (auto it = record.find("proposed_edges"); it != record.end() && !it->is_null()) {
        if (!it->is_array()) throw Error(ErrorCode::InvalidArgument, "proposed_edges must be an array");
        for (const auto& e : *it) {
            if (!e.is_object()) throw Error(ErrorCode::InvalidArgument, "proposed edge must be an object");
            ProposedEdge edge{req_string(e, "rel"), req_string(e, "target"), EdgeDirection::Out};
            auto dir = opt_string(e, "dir").value_or("out");
            if (dir == "in") edge.direction = EdgeDirection::In;
            else if (dir != "out") throw Error(ErrorCode::InvalidArgument, "dir must be 'out' or 'in'");
            c.proposed_edges.push_back(std::move(edge));
        }
    }
    if (with_decision) {
        if (auto d = opt_string(record, "decision")) c.decision = parse_decision(*d);
    }
    return c;
}

SessionStore::SessionStore(fs::path directory) : directory_(std::move(directory)) {
    std::error_code ec;
    fs::create_directories(*directory_, ec);
    if (ec || !fs::is_directory(*directory_)) {
        throw Error(ErrorCode::BadDataDir, "cannot use session directory " + directory_->string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(*directory_)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        std::ifstream in(path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::BadDataDir, "corrupt session file " + path.string() + ": " + e.what());
        }
        const auto kind = j.value("kind", std::string{});
        if (kind == "seed") {
            auto s = seed_session_from_json(j);
            seed_counter_ = std::max(seed_counter_, id_suffix(s.id, kSeedPrefix));
            seed_order_.push_back(s.id);
            seeds_.emplace(s.id, std::move(s));
        } else if (kind == "verification") {
            auto s = verification_from_json(j);
            verify_counter_ = std::max(verify_counter_, id_suffix(s.id, kVerifyPrefix));
            verify_order_.push_back(s.id);
            verifications_.emplace(s.id, std::move(s));
        }
    }
    auto by_suffix = [](std::string_view prefix) {
        return [prefix](const std::string& a, const std::string& b) {
            return id_suffix(a, prefix) < id_suffix(b, prefix);
        };
    };
    std::sort(seed_order_.begin(), seed_order_.end(), by_suffix(kSeedPrefix));
    std::sort(verify_order_.begin(), verify_order_.end(), by_suffix(kVerifyPrefix));
}

void SessionStore::persist(const SeedSession& session) const {
    if (!directory_) return;
    auto j = to_json(session);
    j["kind"] = "seed";
    write_atomically(*directory_ / (session.id + ".json"), j.dump(2));
}

void SessionStore::persist(const VerificationSession& session) const {
    if (!directory_) return;
    auto j = to_json(session);
    j["kind"] = "verification";
    write_atomically(*directory_ / (session.id + ".json"), j.dump(2));
}

SeedSession& SessionStore::seed_mut(std::string_view id) {
    auto it = seeds_.find(id);
    if (it == seeds_.end()) throw Error(ErrorCode::UnknownSession, "unknown seed session '" + std::string(id) + "'");
    return it->second;
}

VerificationSession& SessionStore::verify_mut(std::string_view id) {
    auto it = verifications_.find(id);
    if (it == verifications_.end()) {
        throw Error(ErrorCode::UnknownSession, "unknown verification session '" + std::string(id) + "'");
    }
    return it->second;
}

const SeedSession& SessionStore::create_seed_session(const PropertyGraph& graph, std::string entity_type) {
    if (graph.nodes_of_type(entity_type).empty()) {
        throw Error(ErrorCode::UnknownType, "unknown entity type '" + entity_type + "'");
    }
    SeedSession s;
    s.id = std::string(kSeedPrefix) + std::to_string(++seed_counter_);
    s.entity_type = std::move(entity_type);
    s.created_ms = s.updated_ms = now_ms();
    s.version = 1;
    persist(s);
    seed_order_.push_back(s.id);
    auto [it, _] = seeds_.emplace(s.id, std::move(s));
    return it->second;
}

const SeedSession& SessionStore::seed_session(std::string_view id) const {
    return const_cast<SessionStore*>(this)->seed_mut(id);
}

std::vector<const SeedSession*> SessionStore::seed_sessions() const {
    std::vector<const SeedSession*> out;
    for (const auto& id : seed_order_) out.push_back(&seeds_.find(id)->second);
    return out;
}

const SeedSession& SessionStore::add_seed(const PropertyGraph& graph, std::string_view session_id,
                                          std::string_view node_id) {
    auto& s = seed_mut(session_id);
    const auto* node = graph.find_node(node_id);
    if (!node) throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(node_id) + "'");
    if (node->type_label != s.entity_type) {
        throw Error(ErrorCode::TypeMismatch, "node '" + node->id + "' has type '" + node->type_label +
                                                 "', session expects '" + s.entity_type + "'");
    }
    if (std::find(s.seeds.begin(), s.seeds.end(), node_id) != s.seeds.end()) return s;
    auto updated = s;
    updated.seeds.emplace_back(node_id);
    updated.updated_ms = now_ms();
    ++updated.version;
    persist(updated);
    s = std::move(updated);
    return s;
}

const SeedSession& SessionStore::remove_seed(const PropertyGraph& graph, std::string_view session_id,
                                             std::string_view node_id) {
    auto& s = seed_mut(session_id);
    if (!graph.has_node(node_id)) throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(node_id) + "'");
    auto it = std::find(s.seeds.begin(), s.seeds.end(), node_id);
    if (it == s.seeds.end()) return s;
    auto updated = s;
    updated.seeds.erase(updated.seeds.begin() + (it - s.seeds.begin()));
    updated.updated_ms = now_ms();
    ++updated.version;
    persist(updated);
    s = std::move(updated);
    return s;
}

SeedFile SessionStore::export_seeds(const PropertyGraph& graph, std::string_view session_id) const {
    const auto& s = seed_session(session_id);
    SeedFile file{s.entity_type, {}};
    for (const auto& id : s.seeds) {
        const auto* node = graph.find_node(id);
        file.seeds.push_back({id, node ? node->name : id});
    }
    return file;
}

const SeedSession& SessionStore::import_seeds(const PropertyGraph& graph, const SeedFile& file) {
    if (graph.nodes_of_type(file.entity_type).empty()) {
        throw Error(ErrorCode::UnknownType, "unknown entity type '" + file.entity_type + "'");
    }
    for (const auto& seed : file.seeds) {
        const auto* node = graph.find_node(seed.node_id);
        if (!node) throw Error(ErrorCode::UnknownNode, "unknown node '" + seed.node_id + "'");
        if (node->type_label != file.entity_type) {
            throw Error(ErrorCode::TypeMismatch, "node '" + seed.node_id + "' is not of type '" + file.entity_type + "'");
        }
    }
    SeedSession s;
    s.id = std::string(kSeedPrefix) + std::to_string(++seed_counter_);
    s.entity_type = file.entity_type;
    for (const auto& seed : file.seeds) {
        if (std::find(s.seeds.begin(), s.seeds.end(), seed.node_id) == s.seeds.end()) s.seeds.push_back(seed.node_id);
    }
    s.created_ms = s.updated_ms = now_ms();
    s.version = 1;
    persist(s);
    seed_order_.push_back(s.id);
    auto [it, _] = seeds_.emplace(s.id, std::move(s));
    return it->second;
}

SessionCreated SessionStore::build_verification(const PropertyGraph& graph, const CorpusStore& corpus,
                                                const std::vector<JsonLine>& records, bool with_decisions) {
    VerificationSession s;
    SessionCreated created;
    std::set<std::string> seen;
    for (const auto& line : records) {
        if (!line.record) {
            created.rejected.push_back({"candidate", line.ordinal, line.parse_error});
            continue;
        }
        try {
            auto c = candidate_from_json(*line.record, with_decisions);
            if (seen.contains(c.id)) throw Error(ErrorCode::DuplicateId, "duplicate candidate id '" + c.id + "'");
            if (c.graph_node && !graph.has_node(*c.graph_node)) {
                throw Error(ErrorCode::UnknownNode, "unknown graph node '" + *c.graph_node + "'");
            }
            for (const auto& e : c.evidence) {
                if (!corpus.find_document(e.doc_id)) {
                    throw Error(ErrorCode::NotFound, "unknown document '" + e.doc_id + "'");
                }
                if (e.start >= e.end || e.end > corpus.length(e.doc_id)) {
                    throw Error(ErrorCode::SpanOutOfRange, "evidence span [" + std::to_string(e.start) + "," +
                                                               std::to_string(e.end) + ") outside '" + e.doc_id + "'");
                }
            }
            if (c.decision == Decision::Insert && !c.proposed_type) {
                throw Error(ErrorCode::MissingProposal, "insert decision without proposed_type");
            }
            seen.insert(c.id);
            s.candidates.push_back(std::move(c));
        } catch (const Error& e) {
            created.rejected.push_back({"candidate", line.ordinal, e.what()});
        }
    }
    s.id = std::string(kVerifyPrefix) + std::to_string(++verify_counter_);
    s.created_ms = s.updated_ms = now_ms();
    s.version = 1;
    persist(s);
    created.session_id = s.id;
    verify_order_.push_back(s.id);
    verifications_.emplace(s.id, std::move(s));
    return created;
}

SessionCreated SessionStore::create_verification_session(const PropertyGraph& graph, const CorpusStore& corpus,
                                                         const std::vector<JsonLine>& candidate_records) {
    return build_verification(graph, corpus, candidate_records, false);
}

const VerificationSession& SessionStore::verification_session(std::string_view id) const {
    return const_cast<SessionStore*>(this)->verify_mut(id);
}

std::vector<const VerificationSession*> SessionStore::verification_sessions() const {
    std::vector<const VerificationSession*> out;
    for (const auto& id : verify_order_) out.push_back(&verifications_.find(id)->second);
    return out;
}

const AlignmentCandidate& SessionStore::set_decision(std::string_view session_id, std::string_view candidate_id,
                                                     Decision decision) {
    auto& s = verify_mut(session_id);
    if (s.merged) throw Error(ErrorCode::SessionMerged, "session '" + s.id + "' is already merged");
    auto it = std::find_if(s.candidates.begin(), s.candidates.end(),
                           [&](const AlignmentCandidate& c) { return c.id == candidate_id; });
    if (it == s.candidates.end()) {
        throw Error(ErrorCode::UnknownCandidate, "unknown candidate '" + std::string(candidate_id) + "'");
    }
    if (decision == Decision::Insert && !it->proposed_type) {
        throw Error(ErrorCode::MissingProposal, "candidate '" + it->id + "' has no proposed_type to insert");
    }
    const auto index = static_cast<std::size_t>(it - s.candidates.begin());
    auto updated = s;
    updated.candidates[index].decision = decision;
    updated.updated_ms = now_ms();
    ++updated.version;
    persist(updated);
    s = std::move(updated);
    return s.candidates[index];
}

CandidateContext SessionStore::candidate_context(const PropertyGraph& graph, const CorpusStore& corpus,
                                                 std::string_view session_id, std::string_view candidate_id,
                                                 std::size_t window, std::size_t node_cap) const {
    const auto& s = verification_session(session_id);
    auto it = std::find_if(s.candidates.begin(), s.candidates.end(),
                           [&](const AlignmentCandidate& c) { return c.id == candidate_id; });
    if (it == s.candidates.end()) {
        throw Error(ErrorCode::UnknownCandidate, "unknown candidate '" + std::string(candidate_id) + "'");
    }
    std::vector<std::string> doc_order;
    std::map<std::string, std::vector<SpanRange>> by_doc;
    for (const auto& e : it->evidence) {
        if (!by_doc.contains(e.doc_id)) doc_order.push_back(e.doc_id);
        by_doc[e.doc_id].push_back({e.start, e.end});
    }
    CandidateContext ctx;
    for (const auto& doc : doc_order) ctx.corpus.push_back(corpus.context(doc, by_doc[doc], window));
    if (it->graph_node) ctx.graph = analytics::neighborhood(graph, *it->graph_node, 1, {}, node_cap);
    return ctx;
}

Json SessionStore::export_decisions(std::string_view session_id) const {
    const auto& s = verification_session(session_id);
    Json candidates = Json::array();
    for (const auto& c : s.candidates) candidates.push_back(to_json(c));
    return Json{{"session_id", s.id}, {"merged", s.merged}, {"candidates", std::move(candidates)}};
}

SessionCreated SessionStore::import_decisions(const PropertyGraph& graph, const CorpusStore& corpus, const Json& file) {
    if (!file.is_object() || !file.contains("candidates")) {
        throw Error(ErrorCode::InvalidArgument, "decision file must be an object with a 'candidates' array");
    }
    return build_verification(graph, corpus, json_lines_from_array(file.at("candidates")), true);
}

MergeResult SessionStore::apply_merge(PropertyGraph& graph, std::string_view session_id) {
    auto& s = verify_mut(session_id);
    if (s.merged) throw Error(ErrorCode::AlreadyMerged, "session '" + s.id + "' is already merged");

    MergeResult result;
    std::vector<const AlignmentCandidate*> inserts;
    std::set<std::string> new_ids;
    for (const auto& c : s.candidates) {
        if (c.decision != Decision::Insert) {
            result.skipped.push_back({c.id, "decision: " + std::string(to_string(c.decision))});
            continue;
        }
        if (!c.proposed_type) throw Error(ErrorCode::MissingProposal, "candidate '" + c.id + "' has no proposed_type");
        auto id = merged_node_id(s.id, c.id);
        if (graph.has_node(id)) throw Error(ErrorCode::DuplicateId, "node '" + id + "' already exists");
        new_ids.insert(std::move(id));
        inserts.push_back(&c);
    }
    for (const auto* c : inserts) {
        for (std::size_t i = 0; i < c->proposed_edges.size(); ++i) {
            const auto& target = c->proposed_edges[i].target;
            if (!graph.has_node(target) && !new_ids.contains(target)) {
                throw Error(ErrorCode::UnknownEdgeTarget,
                            "candidate '" + c->id + "' proposes an edge to unknown node '" + target + "'");
            }
            auto edge_id = merged_node_id(s.id, c->id) + ":" + std::to_string(i);
            if (graph.has_edge(edge_id)) throw Error(ErrorCode::DuplicateId, "edge '" + edge_id + "' already exists");
        }
    }

    auto updated = s;
    updated.merged = true;
    updated.updated_ms = now_ms();
    ++updated.version;
    persist(updated);

    for (const auto* c : inserts) {
        AttrMap attrs{{"source", std::string("corpus-alignment")},
                      {"session", s.id},
                      {"candidate", c->id}};
        result.node_ids.push_back(graph.add_node(*c->proposed_type, c->surface, attrs, merged_node_id(s.id, c->id)));
    }
    for (const auto* c : inserts) {
        const auto self = merged_node_id(s.id, c->id);
        for (std::size_t i = 0; i < c->proposed_edges.size(); ++i) {
            const auto& e = c->proposed_edges[i];
            const bool out = e.direction == EdgeDirection::Out;
            result.edge_ids.push_back(graph.add_edge(out ? self : e.target, out ? e.target : self, e.rel_label,
                                                     {{"source", std::string("corpus-alignment")}},
                                                     self + ":" + std::to_string(i)));
        }
    }
    result.inserted_nodes = result.node_ids.size();
    result.inserted_edges = result.edge_ids.size();
    s = std::move(updated);
    return result;
}

Json to_json(const SeedSession& session) {
    return Json{{"id", session.id},
                {"entity_type", session.entity_type},
                {"seeds", session.seeds},
                {"created_ms", session.created_ms},
                {"updated_ms", session.updated_ms},
                {"version", session.version}};
}

Json to_json(const SeedFile& file) {
    Json seeds = Json::array();
    for (const auto& s : file.seeds) seeds.push_back({{"node_id", s.node_id}, {"name", s.name}});
    return Json{{"entity_type", file.entity_type}, {"seeds", std::move(seeds)}};
}

SeedFile seed_file_from_json(const Json& json) {
    if (!json.is_object()) throw Error(ErrorCode::InvalidArgument, "seed file must be an object");
    SeedFile file;
    file.entity_type = req_string(json, "entity_type");
    auto it = json.find("seeds");
    if (it == json.end() || !it->is_array()) throw Error(ErrorCode::InvalidArgument, "seed file needs a 'seeds' array");
    for (const auto& s : *it) {
        if (!s.is_object()) throw Error(ErrorCode::InvalidArgument, "seed entry must be an object");
        file.seeds.push_back({req_string(s, "node_id"), opt_string(s, "name").value_or("")});
    }
    return file;
}

Json to_json(const AlignmentCandidate& c) {
    Json evidence = Json::array();
    for (const auto& e : c.evidence) evidence.push_back({{"doc", e.doc_id}, {"start", e.start}, {"end", e.end}});
    Json edges = Json::array();
    for (const auto& e : c.proposed_edges) {
        edges.push_back({{"rel", e.rel_label}, {"target", e.target}, {"dir", to_string(e.direction)}});
    }
    Json out{{"id", c.id}, {"surface", c.surface}, {"evidence", std::move(evidence)}};
    out["graph_node"] = c.graph_node ? Json(*c.graph_node) : Json(nullptr);
    out["proposed_type"] = c.proposed_type ? Json(*c.proposed_type) : Json(nullptr);
    out["proposed_edges"] = std::move(edges);
    out["decision"] = to_string(c.decision);
    return out;
}

Json to_json(const VerificationSession& session) {
    Json candidates = Json::array();
    for (const auto& c : session.candidates) candidates.push_back(to_json(c));
    return Json{{"id", session.id},
                {"candidates", std::move(candidates)},
                {"merged", session.merged},
                {"created_ms", session.created_ms},
                {"updated_ms", session.updated_ms},
                {"version", session.version}};
}

Json to_json(const MergeResult& result) {
    Json skipped = Json::array();
    for (const auto& s : result.skipped) skipped.push_back({{"candidate", s.candidate_id}, {"reason", s.reason}});
    return Json{{"inserted_nodes", result.inserted_nodes},
                {"inserted_edges", result.inserted_edges},
                {"skipped", std::move(skipped)},
                {"node_ids", result.node_ids},
                {"edge_ids", result.edge_ids}};
}

Json to_json(const CandidateContext& context) {
    Json corpus = Json::array();
    for (const auto& c : context.corpus) corpus.push_back(kgwb::to_json(c));
    return Json{{"corpus", std::move(corpus)},
                {"graph", context.graph ? analytics::to_json(*context.graph) : Json(nullptr)}};
}

Json to_json(const SessionCreated& created) {
    return Json{{"session_id", created.session_id}, {"rejected", kgwb::to_json(created.rejected)}};
}

Json to_json(const std::vector<TypeSuggestion>& suggestions) {
    Json out = Json::array();
    for (const auto& s : suggestions) out.push_back({{"type", s.type_label}, {"mean_frequency", s.mean_frequency}});
    return out;
}

}  // namespace kgwb::workflows
