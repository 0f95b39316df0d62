#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "kgwb/value.hpp"

namespace kgwb::demo {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Synthetic occupational knowledge graph: five entity types (Occupation,
// Skill, Ability, Knowledge, Task), six relation types, a job-posting corpus
// with linked and unlinked mention spans, and alignment candidates drawn
// from the unlinked mentions. Output is a pure function of the seed.
struct DemoDataset {
    std::vector<Json> nodes;
    std::vector<Json> edges;
    std::vector<Json> documents;
    std::vector<Json> candidates;
};

DemoDataset generate(std::uint64_t seed = kDefaultSeed);

// Writes nodes.jsonl, edges.jsonl, corpus.jsonl and candidates.jsonl.
// Throws Error(BadDataDir) if a file exists and !overwrite.
void write(const DemoDataset& dataset, const std::filesystem::path& dir, bool overwrite = false);

}  // namespace kgwb::demo
