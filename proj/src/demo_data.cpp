#include "kgwb/demo_data.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "kgwb/error.hpp"
#include "kgwb/utf8.hpp"

namespace kgwb::demo {

namespace {

namespace fs = std::filesystem;

// Only the raw engine output is used: std::mt19937_64 is fully specified,
// the standard distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    // Biased toward low indexes, giving a long tail of rarely-linked entities.
    std::size_t skewed(std::size_t n) { return std::min(below(n), below(n)); }
    double tenths(int lo, int hi) { return static_cast<double>(between(lo * 10, hi * 10)) / 10.0; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

    template <typename T, std::size_t N>
    const T& pick(const std::array<T, N>& items) {
        return items[below(N)];
    }

private:
    std::mt19937_64 engine_;
};

struct TypeSpec {
    const char* label;
    const char* id_prefix;
    std::size_t count;
    std::vector<std::string> modifiers;
    std::vector<std::string> bases;
};

const std::vector<TypeSpec>& type_specs() {
    static const std::vector<TypeSpec> specs = {
        {"Occupation", "occ", 150,
         {"Senior", "Junior", "Lead", "Assistant", "Associate", "Principal", "Field", "Clinical", "Staff", "Chief"},
         {"Data Analyst", "Software Developer", "Registered Nurse", "Electrician", "Civil Engineer",
          "Accountant", "Graphic Designer", "Pharmacist", "Machinist", "Paralegal", "Logistics Planner",
          "Web Developer", "Lab Technician", "Sales Representative", "HR Specialist", "Welder",
          "Project Manager", "Dietitian", "Surveyor", "Teacher"}},
        {"Skill", "skl", 200,
         {"Active", "Critical", "Technical", "Written", "Oral", "Quantitative", "Strategic", "Applied",
          "Advanced", "Basic"},
         {"Listening", "Thinking", "Writing", "Programming", "Negotiation", "Coordination", "Monitoring",
          "Instructing", "Troubleshooting", "Persuasion", "Mathematics", "Judgment", "Learning",
          "Time Management", "Systems Analysis", "Quality Control", "Operations Analysis", "Service Orientation",
          "Equipment Maintenance", "Social Perceptiveness"}},
        {"Ability", "abl", 150,
         {"Manual", "Visual", "Auditory", "Spatial", "Verbal", "Numerical", "Selective", "Sustained",
          "Rapid", "Fine"},
         {"Dexterity", "Reasoning", "Memorization", "Attention", "Comprehension", "Expression",
          "Perception", "Orientation", "Stamina", "Flexibility", "Reaction Time", "Visualization",
          "Problem Sensitivity", "Fluency of Ideas", "Category Flexibility"}},
        {"Knowledge", "knw", 200,
         {"Applied", "Clinical", "Industrial", "Digital", "Financial", "Public", "Environmental", "Legal",
          "Commercial", "Structural"},
         {"Mathematics", "Chemistry", "Biology", "Economics", "Law", "Psychology", "Design", "Engineering",
          "Medicine", "Education", "Geography", "Telecommunications", "Transportation", "Mechanics",
          "Physics", "Sociology", "Administration", "Customer Service", "Computers", "Production"}},
        {"Task", "tsk", 300,
         {"Prepare", "Review", "Monitor", "Coordinate", "Inspect", "Document", "Analyze", "Maintain",
          "Schedule", "Evaluate", "Design", "Repair", "Train", "Audit", "Estimate"},
         {"project budgets", "patient records", "safety procedures", "client requests", "production schedules",
          "inventory levels", "test results", "equipment logs", "design drafts", "contract terms",
          "shipping orders", "quality reports", "staff rotations", "system alerts", "site surveys",
          "lesson plans", "financial statements", "lab samples", "wiring diagrams", "marketing campaigns"}},
    };
    return specs;
}

constexpr std::array<const char*, 12> kCities = {"Zürich", "São Paulo", "Montréal", "Köln", "Málaga", "Chicago",
                                                 "Toronto", "Dublin", "Austin", "Kraków", "Lyon", "Denver"};
constexpr std::array<const char*, 8> kTeams = {"operations", "analytics", "field", "research",
                                               "platform", "clinical", "finance", "customer"};
// Surfaces that appear in postings but have no graph node: the raw material
// for alignment candidates.
constexpr std::array<const char*, 12> kTools = {"Python", "SQL", "Excel", "AutoCAD", "Tableau", "SAP",
                                                "Kubernetes", "Salesforce", "MATLAB", "Jira", "PLC programming",
                                                "GIS mapping"};

std::string pad(std::size_t n) {
    std::string s = std::to_string(n);
    return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

// Builds a document while tracking code-point offsets of annotated spans.
class DocBuilder {
public:
    void text(const std::string& s) {
        text_ += s;
        length_ += utf8::code_point_count(s);
    }

    void mention(const std::string& surface, const std::string* node_id) {
        Json span{{"start", length_}, {"surface", surface}};
        text(surface);
        span["end"] = length_;
        if (node_id) span["node_id"] = *node_id;
        mentions_.push_back(std::move(span));
    }

    const Json& last_mention() const { return mentions_.back(); }
    std::string take_text() { return std::move(text_); }
    Json take_mentions() { return std::move(mentions_); }

private:
    std::string text_;
    std::size_t length_ = 0;
    Json mentions_ = Json::array();
};

}  // namespace

DemoDataset generate(std::uint64_t seed) {
    Rng rng(seed);
    DemoDataset out;

    std::map<std::string, std::vector<std::pair<std::string, std::string>>> by_type;  // label -> (id, name)
    for (const auto& spec : type_specs()) {
        std::vector<std::string> names;
        for (const auto& m : spec.modifiers) {
            for (const auto& b : spec.bases) names.push_back(m + " " + b);
        }
        rng.shuffle(names);
        names.resize(std::min(names.size(), spec.count));
        std::sort(names.begin(), names.end());
        auto& bucket = by_type[spec.label];
        for (std::size_t i = 0; i < names.size(); ++i) {
            const std::string id = std::string(spec.id_prefix) + "-" + pad(i + 1);
            Json attrs = Json::object();
            const std::string label = spec.label;
            if (label == "Occupation") {
                attrs["code"] = std::to_string(11 + rng.below(43)) + "-" + pad(1000 + rng.below(9000)) + ".00";
                attrs["job_zone"] = static_cast<int>(rng.between(1, 5));
            } else if (label == "Skill") {
                attrs["category"] = rng.below(3) == 0 ? "Basic" : "Cross-Functional";
            } else if (label == "Ability") {
                static constexpr std::array<const char*, 4> kinds = {"Cognitive", "Psychomotor", "Physical", "Sensory"};
                attrs["category"] = rng.pick(kinds);
            } else if (label == "Knowledge") {
                attrs["hot_technology"] = rng.below(4) == 0;
            } else {
                attrs["importance"] = rng.tenths(1, 5);
            }
            out.nodes.push_back(Json{{"id", id}, {"type", label}, {"name", names[i]}, {"attrs", attrs}});
            bucket.emplace_back(id, names[i]);
        }
    }

    const auto& occupations = by_type["Occupation"];
    const auto& skills = by_type["Skill"];
    const auto& abilities = by_type["Ability"];
    const auto& knowledge = by_type["Knowledge"];
    const auto& tasks = by_type["Task"];

    std::size_t edge_seq = 0;
    auto add_edge = [&](const std::string& src, const std::string& dst, const char* rel, Json attrs) {
        out.edges.push_back(
            Json{{"id", "e-" + pad(++edge_seq)}, {"src", src}, {"dst", dst}, {"rel", rel}, {"attrs", std::move(attrs)}});
    };
    // Per-occupation links, remembered for writing postings.
    struct Profile {
        std::vector<std::size_t> skills, abilities, knowledge, tasks;
    };
    std::vector<Profile> profiles(occupations.size());
    auto pick_distinct = [&](std::size_t how_many, std::size_t pool) {
        std::set<std::size_t> chosen;
        while (chosen.size() < how_many) chosen.insert(rng.skewed(pool));
        return std::vector<std::size_t>(chosen.begin(), chosen.end());
    };
    for (std::size_t o = 0; o < occupations.size(); ++o) {
        auto& p = profiles[o];
        p.skills = pick_distinct(rng.between(4, 7), skills.size());
        p.abilities = pick_distinct(rng.between(3, 5), abilities.size());
        p.knowledge = pick_distinct(rng.between(2, 5), knowledge.size());
        p.tasks = pick_distinct(rng.between(3, 6), tasks.size());
        for (auto s : p.skills) add_edge(occupations[o].first, skills[s].first, "requires_skill", {{"importance", rng.tenths(1, 5)}});
        for (auto a : p.abilities) add_edge(occupations[o].first, abilities[a].first, "requires_ability", {{"importance", rng.tenths(1, 5)}});
        for (auto k : p.knowledge) add_edge(occupations[o].first, knowledge[k].first, "requires_knowledge", {{"importance", rng.tenths(1, 5)}});
        for (auto t : p.tasks) add_edge(occupations[o].first, tasks[t].first, "performs", Json::object());
    }
    for (std::size_t s = 0; s < skills.size(); ++s) {
        std::size_t other = rng.below(skills.size() - 1);
        if (other >= s) ++other;
        add_edge(skills[s].first, skills[other].first, "related_to", Json::object());
    }
    for (std::size_t k = 0; k < knowledge.size(); ++k) {
        add_edge(knowledge[k].first, tasks[rng.below(tasks.size())].first, "supports", Json::object());
    }

    // Postings. Tool mentions are unlinked; their spans seed the candidates.
    std::map<std::string, Json> tool_evidence;
    for (std::size_t d = 0; d < 200; ++d) {
        const std::size_t o = rng.below(occupations.size());
        const auto& p = profiles[o];
        DocBuilder doc;
        const auto& occ = occupations[o];
        doc.mention(occ.second, &occ.first);
        doc.text(std::string(" — ") + kCities[rng.below(kCities.size())] + ". We are hiring a ");
        doc.mention(occ.second, &occ.first);
        doc.text(std::string(" to join our ") + kTeams[rng.below(kTeams.size())] + " team. ");

        const auto& s1 = skills[p.skills[rng.below(p.skills.size())]];
        const auto& s2 = skills[p.skills[rng.below(p.skills.size())]];
        doc.text("The ideal candidate brings strong ");
        doc.mention(s1.second, &s1.first);
        if (s2.first != s1.first) {
            doc.text(" and ");
            doc.mention(s2.second, &s2.first);
        }
        doc.text(" skills. ");

        const auto& k = knowledge[p.knowledge[rng.below(p.knowledge.size())]];
        const auto& a = abilities[p.abilities[rng.below(p.abilities.size())]];
        doc.text("Experience with ");
        doc.mention(k.second, &k.first);
        doc.text(" is expected; ");
        doc.mention(a.second, &a.first);
        doc.text(" is a plus. ");

        const auto& t = tasks[p.tasks[rng.below(p.tasks.size())]];
        doc.text("Daily work: ");
        doc.mention(t.second, &t.first);
        doc.text(".");

        if (rng.below(3) != 0) {
            const std::string tool = kTools[rng.skewed(kTools.size())];
            doc.text(" Familiarity with ");
            doc.mention(tool, nullptr);
            doc.text(" preferred.");
            auto& ev = tool_evidence[tool];
            if (ev.is_null()) ev = Json::array();
            const auto& m = doc.last_mention();
            const std::string doc_id = "doc-" + pad(d + 1);
            if (ev.size() < 3) ev.push_back({{"doc", doc_id}, {"start", m["start"]}, {"end", m["end"]}});
        }

        Json record{{"id", "doc-" + pad(d + 1)},
                    {"title", occ.second + " (" + kCities[rng.below(kCities.size())] + ")"}};
        record["text"] = doc.take_text();
        record["mentions"] = doc.take_mentions();
        out.documents.push_back(std::move(record));
    }

    std::size_t cand_seq = 0;
    for (const auto& [tool, evidence] : tool_evidence) {
        const auto& related = skills[rng.below(skills.size())];
        Json c{{"id", "cand-" + pad(++cand_seq)},
               {"surface", tool},
               {"evidence", evidence},
               {"graph_node", related.first},
               {"proposed_type", "Skill"},
               {"proposed_edges", Json::array({{{"rel", "related_to"}, {"target", related.first}, {"dir", "out"}}})}};
        out.candidates.push_back(std::move(c));
    }
    return out;
}

void write(const DemoDataset& dataset, const fs::path& dir, bool overwrite) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw Error(ErrorCode::BadDataDir, "cannot create " + dir.string());
    const std::array<std::pair<const char*, const std::vector<Json>*>, 4> files = {{
        {"nodes.jsonl", &dataset.nodes},
        {"edges.jsonl", &dataset.edges},
        {"corpus.jsonl", &dataset.documents},
        {"candidates.jsonl", &dataset.candidates},
    }};
    if (!overwrite) {
        for (const auto& [name, _] : files) {
            if (fs::exists(dir / name)) {
                throw Error(ErrorCode::BadDataDir, (dir / name).string() + " already exists (use --force to overwrite)");
            }
        }
    }
    for (const auto& [name, records] : files) {
        std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
        for (const auto& r : *records) out << r.dump() << '\n';
        if (!out) throw Error(ErrorCode::BadDataDir, "cannot write " + (dir / name).string());
    }
}

}  // namespace kgwb::demo
