#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgwb/graph.hpp"
#include "kgwb/jsonl.hpp"

namespace kgwb {

// Offsets are Unicode code-point indices into Document::text, end exclusive.
struct MentionSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    std::string surface;
    std::optional<NodeId> node_id;

    bool operator==(const MentionSpan&) const = default;
};

struct Document {
    std::string id;
    std::optional<std::string> title;
    std::string text;
    std::vector<MentionSpan> mentions;  // disjoint, sorted by start

    bool operator==(const Document&) const = default;
};

struct SpanRange {
    std::size_t start = 0;
    std::size_t end = 0;

    bool operator==(const SpanRange&) const = default;
};

struct DocumentMentions {
    std::string doc_id;
    std::vector<MentionSpan> spans;
};

struct Segment {
    std::string text;
    bool highlighted = false;

    bool operator==(const Segment&) const = default;
};

struct HighlightedContext {
    std::string doc_id;
    std::vector<Segment> segments;
    std::size_t window_start = 0;  // code points
    std::size_t window_end = 0;
};

struct CorpusIngestReport {
    std::size_t documents_added = 0;
    std::size_t mentions_added = 0;
    std::vector<Rejection> rejected;
};

// Keeps the longer of two overlapping ranges, then the earlier one; returns
// the survivors sorted by start. Exposed for reuse by context requests.
std::vector<std::size_t> resolve_overlaps(const std::vector<SpanRange>& ranges);

class CorpusStore {
public:
    // Validates every span (bounds, surface == text slice) before storing.
    // Throws DuplicateId, SpanOutOfRange, or InvalidArgument ("span/text mismatch").
    void add_document(Document doc);

    // One document per record; a bad record is rejected whole.
    CorpusIngestReport ingest(const std::vector<JsonLine>& records);
    CorpusIngestReport ingest(std::istream& records);

    const Document& get_document(std::string_view id) const;  // throws NotFound
    const Document* find_document(std::string_view id) const noexcept;
    std::size_t document_count() const noexcept { return docs_.size(); }
    std::size_t mention_total() const noexcept;
    const std::vector<Document>& documents() const noexcept { return docs_; }

    // Case-insensitive exact match on span surfaces; ordered by doc id.
    std::vector<DocumentMentions> mentions_of_surface(std::string_view surface) const;
    std::vector<DocumentMentions> mentions_of_node(std::string_view node_id) const;
    std::size_t mention_count(std::string_view node_id) const noexcept;

    // Code-point slice [start, end) of the document text. Throws
    // SpanOutOfRange when the range leaves the document.
    std::string slice(std::string_view doc_id, std::size_t start, std::size_t end) const;
    std::size_t length(std::string_view doc_id) const;  // in code points

    // Excerpt reaching `window` code points beyond the spans' bounding range
    // on each side, clamped to the document. Overlapping requested spans are
    // first resolved with resolve_overlaps().
    HighlightedContext context(std::string_view doc_id, const std::vector<SpanRange>& spans,
                               std::size_t window) const;

private:
    struct Hit {
        std::size_t doc;
        std::size_t span;
    };

    std::vector<DocumentMentions> collect(const std::vector<Hit>& hits) const;

    std::vector<Document> docs_;
    std::vector<std::vector<std::size_t>> offsets_;  // code point -> byte
    std::map<std::string, std::size_t, std::less<>> by_id_;
    std::map<std::string, std::vector<Hit>, std::less<>> by_surface_;
    std::map<std::string, std::vector<Hit>, std::less<>> by_node_;
};

Json to_json(const MentionSpan& span);
Json to_json(const DocumentMentions& mentions);
Json to_json(const HighlightedContext& context);
Json to_json(const CorpusIngestReport& report);
Json document_to_json(const Document& doc);
Document document_from_json(const Json& record);  // throws InvalidArgument

}  // namespace kgwb
