#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace astdiff {

struct SynthOptions {
    uint64_t seed = 1;
    int count = 200;
};

struct SynthResult {
    int revision_count = 0;
    int label_count = 0;
    std::string summary_json;
};

// Generates a deterministic corpus of file revisions under out_dir: one
// directory per revision holding the before/after inputs (source text, or an
// AST interchange document for a slice of revisions), an exact
// mapping.truth.json, and a mapping.corrupt.json with one planted defect.
// A corpus-level labels.json records, per revision, the statements whose
// mappings the corrupted variant gets wrong. The truth mapping pairs each
// statement with its true counterpart and never violates the single-mapping
// accuracy rules.
SynthResult generate_corpus(const std::filesystem::path& out_dir, const SynthOptions& options);

}  // namespace astdiff
