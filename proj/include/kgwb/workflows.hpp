#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/analytics.hpp"
#include "kgwb/corpus.hpp"
#include "kgwb/graph.hpp"
#include "kgwb/jsonl.hpp"

namespace kgwb::workflows {

enum class Decision { Pending, Insert, Ignore, Defer };

std::string_view to_string(Decision decision) noexcept;
Decision parse_decision(std::string_view text);  // throws InvalidArgument

enum class EdgeDirection { Out, In };

struct SeedSession {
    std::string id;
    std::string entity_type;
    std::vector<NodeId> seeds;  // first-insertion order, no duplicates
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;
    std::uint64_t version = 0;
};

struct SeedEntry {
    NodeId node_id;
    std::string name;

    bool operator==(const SeedEntry&) const = default;
};

struct SeedFile {
    std::string entity_type;
    std::vector<SeedEntry> seeds;

    bool operator==(const SeedFile&) const = default;
};

struct EvidenceSpan {
    std::string doc_id;
    std::size_t start = 0;
    std::size_t end = 0;

    bool operator==(const EvidenceSpan&) const = default;
};

struct ProposedEdge {
    std::string rel_label;
    NodeId target;
    EdgeDirection direction = EdgeDirection::Out;

    bool operator==(const ProposedEdge&) const = default;
};

struct AlignmentCandidate {
    std::string id;
    std::string surface;
    std::vector<EvidenceSpan> evidence;
    std::optional<NodeId> graph_node;
    std::optional<std::string> proposed_type;
    std::vector<ProposedEdge> proposed_edges;
    Decision decision = Decision::Pending;

    bool operator==(const AlignmentCandidate&) const = default;
};

struct VerificationSession {
    std::string id;
    std::vector<AlignmentCandidate> candidates;
    bool merged = false;
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;
    std::uint64_t version = 0;
};

struct SkippedCandidate {
    std::string candidate_id;
    std::string reason;
};

struct MergeResult {
    std::size_t inserted_nodes = 0;
    std::size_t inserted_edges = 0;
    std::vector<SkippedCandidate> skipped;
    std::vector<NodeId> node_ids;
    std::vector<EdgeId> edge_ids;
};

struct CandidateContext {
    std::vector<HighlightedContext> corpus;
    std::optional<analytics::Subgraph> graph;
};

struct SessionCreated {
    std::string session_id;
    std::vector<Rejection> rejected;
};

struct TypeSuggestion {
    std::string type_label;
    double mean_frequency = 0.0;
};

// Types ranked by the mean entity_frequency of their nodes, lowest first,
// ties by label. Throws InvalidArgument when k == 0.
std::vector<TypeSuggestion> suggest_expansion_types(const PropertyGraph& graph, const CorpusStore& corpus,
                                                    std::size_t k);

// Id given to the node created for an insert-decided candidate.
std::string merged_node_id(std::string_view session_id, std::string_view candidate_id);

// Owns seed-selection and verification sessions. When constructed with a
// directory, every mutation rewrites <dir>/<session id>.json and existing
// files are loaded on construction. Not synchronized.
class SessionStore {
public:
    SessionStore() = default;
    explicit SessionStore(std::filesystem::path directory);

    // --- seed selection -------------------------------------------------
    const SeedSession& create_seed_session(const PropertyGraph& graph, std::string entity_type);
    const SeedSession& seed_session(std::string_view id) const;  // throws UnknownSession
    std::vector<const SeedSession*> seed_sessions() const;

    // Throws UnknownSession, UnknownNode, TypeMismatch.
    const SeedSession& add_seed(const PropertyGraph& graph, std::string_view session_id, std::string_view node_id);
    const SeedSession& remove_seed(const PropertyGraph& graph, std::string_view session_id, std::string_view node_id);

    SeedFile export_seeds(const PropertyGraph& graph, std::string_view session_id) const;
    // New session holding the file's seeds; throws UnknownType, UnknownNode, TypeMismatch.
    const SeedSession& import_seeds(const PropertyGraph& graph, const SeedFile& file);

    // --- alignment verification -----------------------------------------
    SessionCreated create_verification_session(const PropertyGraph& graph, const CorpusStore& corpus,
                                               const std::vector<JsonLine>& candidate_records);
    const VerificationSession& verification_session(std::string_view id) const;
    std::vector<const VerificationSession*> verification_sessions() const;

    // Throws UnknownSession, SessionMerged, UnknownCandidate, MissingProposal.
    const AlignmentCandidate& set_decision(std::string_view session_id, std::string_view candidate_id,
                                           Decision decision);

    CandidateContext candidate_context(const PropertyGraph& graph, const CorpusStore& corpus,
                                       std::string_view session_id, std::string_view candidate_id,
                                       std::size_t window, std::size_t node_cap = analytics::kDefaultNodeCap) const;

    Json export_decisions(std::string_view session_id) const;
    SessionCreated import_decisions(const PropertyGraph& graph, const CorpusStore& corpus, const Json& file);

    // All-or-nothing: validation failures (UnknownEdgeTarget, DuplicateId)
    // leave both the graph and the session untouched. Throws AlreadyMerged.
    MergeResult apply_merge(PropertyGraph& graph, std::string_view session_id);

private:
    SeedSession& seed_mut(std::string_view id);
    VerificationSession& verify_mut(std::string_view id);
    void persist(const SeedSession& session) const;
    void persist(const VerificationSession& session) const;
    SessionCreated build_verification(const PropertyGraph& graph, const CorpusStore& corpus,
                                      const std::vector<JsonLine>& records, bool with_decisions);

    std::optional<std::filesystem::path> directory_;
    std::map<std::string, SeedSession, std::less<>> seeds_;
    std::map<std::string, VerificationSession, std::less<>> verifications_;
    std::vector<std::string> seed_order_;
    std::vector<std::string> verify_order_;
    std::size_t seed_counter_ = 0;
    std::size_t verify_counter_ = 0;
};

Json to_json(const SeedSession& session);
Json to_json(const SeedFile& file);
SeedFile seed_file_from_json(const Json& json);  // throws InvalidArgument
Json to_json(const AlignmentCandidate& candidate);
Json to_json(const VerificationSession& session);
Json to_json(const MergeResult& result);
Json to_json(const CandidateContext& context);
Json to_json(const SessionCreated& created);
Json to_json(const std::vector<TypeSuggestion>& suggestions);

// Parses a candidate record (and its "decision" field when `with_decision`).
// Checks shape only; graph and corpus references are checked by the store.
AlignmentCandidate candidate_from_json(const Json& record, bool with_decision);

}  // namespace kgwb::workflows
