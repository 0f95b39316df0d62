#include "kgwb/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "kgwb/error.hpp"
#include "kgwb/utf8.hpp"

namespace kgwb {

std::vector<std::size_t> resolve_overlaps(const std::vector<SpanRange>& ranges) {
    std::vector<std::size_t> order(ranges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto la = ranges[a].end - ranges[a].start;
        const auto lb = ranges[b].end - ranges[b].start;
        if (la != lb) return la > lb;
        return ranges[a].start < ranges[b].start;
    });
    std::vector<std::size_t> kept;
    for (auto idx : order) {
        const auto& r = ranges[idx];
        bool clash = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return r.start < ranges[k].end && ranges[k].start < r.end;
        });
        if (!clash) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end(),
              [&](std::size_t a, std::size_t b) { return ranges[a].start < ranges[b].start; });
    return kept;
}

void CorpusStore::add_document(Document doc) {
    if (doc.id.empty()) throw Error(ErrorCode::InvalidArgument, "document id is empty");
    if (by_id_.contains(doc.id)) throw Error(ErrorCode::DuplicateId, "duplicate document id '" + doc.id + "'");
    auto offsets = utf8::code_point_offsets(doc.text);
    const std::size_t length = offsets.size() - 1;

    std::vector<SpanRange> ranges;
    ranges.reserve(doc.mentions.size());
    for (const auto& m : doc.mentions) {
        if (m.start >= m.end || m.end > length) {
            throw Error(ErrorCode::SpanOutOfRange,
                        "span out of bounds [" + std::to_string(m.start) + "," + std::to_string(m.end) + ")");
        }
        std::string_view slice(doc.text.data() + offsets[m.start], offsets[m.end] - offsets[m.start]);
        if (slice != m.surface) throw Error(ErrorCode::InvalidArgument, "span/text mismatch");
        ranges.push_back({m.start, m.end});
    }
    std::vector<MentionSpan> kept;
    for (auto idx : resolve_overlaps(ranges)) kept.push_back(std::move(doc.mentions[idx]));
    doc.mentions = std::move(kept);

    const std::size_t pos = docs_.size();
    for (std::size_t i = 0; i < doc.mentions.size(); ++i) {
        const auto& m = doc.mentions[i];
        by_surface_[utf8::fold_case(m.surface)].push_back({pos, i});
        if (m.node_id) by_node_[*m.node_id].push_back({pos, i});
    }
    by_id_.emplace(doc.id, pos);
    offsets_.push_back(std::move(offsets));
    docs_.push_back(std::move(doc));
}

CorpusIngestReport CorpusStore::ingest(const std::vector<JsonLine>& records) {
    CorpusIngestReport report;
    for (const auto& line : records) {
        if (!line.record) {
            report.rejected.push_back({"document", line.ordinal, line.parse_error});
            continue;
        }
        try {
            auto doc = document_from_json(*line.record);
            add_document(std::move(doc));
            report.mentions_added += docs_.back().mentions.size();
            ++report.documents_added;
        } catch (const Error& e) {
            report.rejected.push_back({"document", line.ordinal, e.what()});
        }
    }
    return report;
}

CorpusIngestReport CorpusStore::ingest(std::istream& records) {
    return ingest(read_json_lines(records));
}

const Document& CorpusStore::get_document(std::string_view id) const {
    if (const auto* doc = find_document(id)) return *doc;
    throw Error(ErrorCode::NotFound, "document '" + std::string(id) + "' not found");
}

const Document* CorpusStore::find_document(std::string_view id) const noexcept {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &docs_[it->second];
}

std::size_t CorpusStore::mention_total() const noexcept {
    std::size_t total = 0;
    for (const auto& d : docs_) total += d.mentions.size();
    return total;
}

std::vector<DocumentMentions> CorpusStore::collect(const std::vector<Hit>& hits) const {
    std::map<std::string_view, std::vector<MentionSpan>> grouped;
    for (const auto& h : hits) grouped[docs_[h.doc].id].push_back(docs_[h.doc].mentions[h.span]);
    std::vector<DocumentMentions> out;
    out.reserve(grouped.size());
    for (auto& [doc_id, spans] : grouped) {
        std::sort(spans.begin(), spans.end(),
                  [](const MentionSpan& a, const MentionSpan& b) { return a.start < b.start; });
        out.push_back({std::string(doc_id), std::move(spans)});
    }
    return out;
}

std::vector<DocumentMentions> CorpusStore::mentions_of_surface(std::string_view surface) const {
    auto it = by_surface_.find(utf8::fold_case(surface));
    if (it == by_surface_.end()) return {};
    return collect(it->second);
}

std::vector<DocumentMentions> CorpusStore::mentions_of_node(std::string_view node_id) const {
    auto it = by_node_.find(node_id);
    if (it == by_node_.end()) return {};
    return collect(it->second);
}

std::size_t CorpusStore::mention_count(std::string_view node_id) const noexcept {
    auto it = by_node_.find(node_id);
    return it == by_node_.end() ? 0 : it->second.size();
}

std::size_t CorpusStore::length(std::string_view doc_id) const {
    auto it = by_id_.find(doc_id);
    if (it == by_id_.end()) throw Error(ErrorCode::NotFound, "document '" + std::string(doc_id) + "' not found");
    return offsets_[it->second].size() - 1;
}

std::string CorpusStore::slice(std::string_view doc_id, std::size_t start, std::size_t end) const {
    auto it = by_id_.find(doc_id);
    if (it == by_id_.end()) throw Error(ErrorCode::NotFound, "document '" + std::string(doc_id) + "' not found");
    const auto& offsets = offsets_[it->second];
    if (start > end || end >= offsets.size()) {
        throw Error(ErrorCode::SpanOutOfRange, "range [" + std::to_string(start) + "," + std::to_string(end) +
                                                   ") outside document '" + std::string(doc_id) + "'");
    }
    const auto& text = docs_[it->second].text;
    return text.substr(offsets[start], offsets[end] - offsets[start]);
}

HighlightedContext CorpusStore::context(std::string_view doc_id, const std::vector<SpanRange>& spans,
                                        std::size_t window) const {
    const std::size_t len = length(doc_id);
    if (spans.empty()) throw Error(ErrorCode::InvalidArgument, "context needs at least one span");
    for (const auto& s : spans) {
        if (s.start >= s.end || s.end > len) {
            throw Error(ErrorCode::SpanOutOfRange, "span [" + std::to_string(s.start) + "," +
                                                       std::to_string(s.end) + ") outside document '" +
                                                       std::string(doc_id) + "'");
        }
    }
    std::vector<SpanRange> kept;
    for (auto idx : resolve_overlaps(spans)) kept.push_back(spans[idx]);

    const std::size_t lo = kept.front().start;
    std::size_t hi = 0;
    for (const auto& s : kept) hi = std::max(hi, s.end);

    HighlightedContext ctx;
    ctx.doc_id = std::string(doc_id);
    ctx.window_start = lo > window ? lo - window : 0;
    ctx.window_end = len - hi > window ? hi + window : len;

    std::size_t cursor = ctx.window_start;
    for (const auto& s : kept) {
        if (s.start > cursor) ctx.segments.push_back({slice(doc_id, cursor, s.start), false});
        ctx.segments.push_back({slice(doc_id, s.start, s.end), true});
        cursor = s.end;
    }
    if (ctx.window_end > cursor) ctx.segments.push_back({slice(doc_id, cursor, ctx.window_end), false});
    return ctx;
}

Json to_json(const MentionSpan& span) {
    Json out{{"start", span.start}, {"end", span.end}, {"surface", span.surface}};
    out["node_id"] = span.node_id ? Json(*span.node_id) : Json(nullptr);
    return out;
}

Json to_json(const DocumentMentions& mentions) {
    Json spans = Json::array();
    for (const auto& s : mentions.spans) spans.push_back(to_json(s));
    return Json{{"doc_id", mentions.doc_id}, {"spans", std::move(spans)}};
}

Json to_json(const HighlightedContext& context) {
    Json segments = Json::array();
    for (const auto& s : context.segments) segments.push_back({{"text", s.text}, {"highlighted", s.highlighted}});
    return Json{{"doc_id", context.doc_id},
                {"window", {{"start", context.window_start}, {"end", context.window_end}}},
                {"segments", std::move(segments)}};
}

Json to_json(const CorpusIngestReport& report) {
    return Json{{"documents_added", report.documents_added},
                {"mentions_added", report.mentions_added},
                {"rejected", to_json(report.rejected)}};
}

Json document_to_json(const Document& doc) {
    Json mentions = Json::array();
    for (const auto& m : doc.mentions) {
        Json j{{"start", m.start}, {"end", m.end}, {"surface", m.surface}};
        if (m.node_id) j["node_id"] = *m.node_id;
        mentions.push_back(std::move(j));
    }
    Json out{{"id", doc.id}, {"text", doc.text}, {"mentions", std::move(mentions)}};
    if (doc.title) out["title"] = *doc.title;
    return out;
}

Document document_from_json(const Json& record) {
    if (!record.is_object()) throw Error(ErrorCode::InvalidArgument, "document record must be an object");
    auto string_field = [&](const Json& obj, const char* key, bool required) -> std::optional<std::string> {
        auto it = obj.find(key);
        if (it == obj.end() || it->is_null()) {
            if (required) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
            return std::nullopt;
        }
        if (!it->is_string()) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a string");
        return it->get<std::string>();
    };
    auto offset_field = [](const Json& obj, const char* key) -> std::size_t {
        auto it = obj.find(key);
        if (it == obj.end() || !it->is_number_integer() || it->get<std::int64_t>() < 0) {
            throw Error(ErrorCode::InvalidArgument, std::string("span field '") + key + "' must be a non-negative integer");
        }
        return it->get<std::size_t>();
    };

    Document doc;
    doc.id = *string_field(record, "id", true);
    doc.title = string_field(record, "title", false);
    doc.text = *string_field(record, "text", true);
    if (auto it = record.find("mentions"); it != record.end() && !it->is_null()) {
        if (!it->is_array()) throw Error(ErrorCode::InvalidArgument, "mentions must be an array");
        for (const auto& m : *it) {
            if (!m.is_object()) throw Error(ErrorCode::InvalidArgument, "mention must be an object");
            MentionSpan span;
            span.start = offset_field(m, "start");
            span.end = offset_field(m, "end");
            span.surface = *string_field(m, "surface", true);
            span.node_id = string_field(m, "node_id", false);
            doc.mentions.push_back(std::move(span));
        }
    }
    return doc;
}

}  // namespace kgwb
