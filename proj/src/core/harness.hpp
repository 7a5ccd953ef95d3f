#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "core/mapping.hpp"
#include "core/report.hpp"

namespace astdiff {

struct HarnessOptions {
    MapperConfig mapper;
    bool nit_names_only = false;
    int jobs = 1;
    bool use_external = false;
    std::vector<std::string> algorithms = {"gt", "mtd", "ijm"};
};

// Judges one revision given already-built node mappings, one per algorithm.
RevisionReport run_revision(const std::string& revision_id, const Ast& before, const Ast& after,
                            const std::vector<std::pair<std::string, NodeMappingSet>>& mappings,
                            const HarnessOptions& options);

// Loads `before.*`/`after.*` from the directory (`*.ast.json` as an
// interchange document, anything else parsed as source), obtains mappings
// from the built-in mappers or, with use_external, from `mapping.<alg>.json`
// files, and judges the revision. Failures become an error report.
RevisionReport run_revision_dir(const std::filesystem::path& dir, const HarnessOptions& options);

// Runs every subdirectory containing a `before.*` file, in name order.
// Revisions are independent; jobs > 1 processes them on a thread pool.
// Results are assembled in name order regardless of job count.
CorpusReport run_corpus(const std::filesystem::path& corpus_dir, const HarnessOptions& options);

// Applies a JSON config file ({min_subtree_height, dice_threshold,
// name_similarity_threshold, nit_names_only, jobs, algorithms}, all optional)
// on top of the given options. Unknown keys raise SchemaError.
void apply_config_file(const std::filesystem::path& path, HarnessOptions& options);

}  // namespace astdiff
