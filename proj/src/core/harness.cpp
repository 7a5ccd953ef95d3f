#include "core/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/interchange.hpp"
#include "core/judge.hpp"
#include "core/mappers.hpp"
#include "core/parser.hpp"
#include "core/tokens.hpp"

namespace astdiff {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Locates the revision input for one side: exactly one `<stem>.*` file,
// `.ast.json` loaded as interchange, anything else parsed as source.
Ast load_side(const fs::path& dir, const std::string& stem) {
    std::vector<fs::path> candidates;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name == stem || name.rfind(stem + ".", 0) == 0) candidates.push_back(entry.path());
    }
    if (candidates.empty()) throw SchemaError("no " + stem + ".* file in " + dir.string());
    if (candidates.size() > 1) {
        std::sort(candidates.begin(), candidates.end());
        throw SchemaError("ambiguous " + stem + ".* files in " + dir.string() + ": " +
                          candidates[0].filename().string() + " and " +
                          candidates[1].filename().string());
    }
    const fs::path& path = candidates[0];
    const std::string text = read_file(path);
    if (path.filename().string().size() >= stem.size() + 9 &&
        path.filename().string().substr(stem.size()) == ".ast.json") {
        return load_ast(text);
    }
    return parse_source(text);
}

void validate_algorithms(const std::vector<std::string>& algorithms) {
    if (algorithms.empty()) throw SchemaError("no algorithms selected");
    std::set<std::string> seen;
    for (const std::string& a : algorithms) {
        if (a.empty()) throw SchemaError("empty algorithm name");
        if (!seen.insert(a).second) throw SchemaError("duplicate algorithm: " + a);
    }
}

}  // namespace

RevisionReport run_revision(const std::string& revision_id, const Ast& before, const Ast& after,
                            const std::vector<std::pair<std::string, NodeMappingSet>>& mappings,
                            const HarnessOptions& options) {
    const TokenList before_tokens = tokenize(before);
    const TokenList after_tokens = tokenize(after);
    MeasureContext ctx{&before, &after, &before_tokens, &after_tokens, options.nit_names_only};
    std::vector<AlgorithmView> views;
    views.reserve(mappings.size());
    for (const auto& [name, nodes] : mappings) {
        views.push_back(build_view(name, before, before_tokens, after, after_tokens, nodes));
    }
    const RevisionJudgement judgement = judge_all(ctx, views);
    return build_revision_report(revision_id, ctx, views, judgement);
}

RevisionReport run_revision_dir(const fs::path& dir, const HarnessOptions& options) {
    const std::string id = dir.filename().string();
    try {
        validate_algorithms(options.algorithms);
        const Ast before = load_side(dir, "before");
        const Ast after = load_side(dir, "after");
        std::vector<std::pair<std::string, NodeMappingSet>> mappings;
        for (const std::string& name : options.algorithms) {
            if (options.use_external) {
                const fs::path path = dir / ("mapping." + name + ".json");
                if (!fs::exists(path)) throw SchemaError("missing " + path.filename().string());
                mappings.emplace_back(name, load_mapping(before, after, read_file(path)));
            } else {
                MapperFn fn = find_mapper(name);
                if (fn == nullptr) throw SchemaError("unknown algorithm: " + name);
                mappings.emplace_back(name, fn(before, after, options.mapper));
            }
        }
        return run_revision(id, before, after, mappings, options);
    } catch (const std::exception& e) {
        return build_error_report(id, options.algorithms, e.what());
    }
}

CorpusReport run_corpus(const fs::path& corpus_dir, const HarnessOptions& options) {
    if (!fs::is_directory(corpus_dir)) {
        throw SchemaError("corpus directory not found: " + corpus_dir.string());
    }
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (!entry.is_directory()) continue;
        bool has_before = false;
        for (const auto& f : fs::directory_iterator(entry.path())) {
            const std::string name = f.path().filename().string();
            if (name == "before" || name.rfind("before.", 0) == 0) {
                has_before = true;
                break;
            }
        }
        if (has_before) dirs.push_back(entry.path());
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<RevisionReport> reports(dirs.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || dirs.size() <= 1) {
        for (size_t i = 0; i < dirs.size(); ++i) reports[i] = run_revision_dir(dirs[i], options);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= dirs.size()) return;
                reports[i] = run_revision_dir(dirs[i], options);
            }
        };
        std::vector<std::thread> pool;
        const size_t n = std::min(static_cast<size_t>(jobs), dirs.size());
        pool.reserve(n);
        for (size_t i = 0; i < n; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return assemble_corpus(std::move(reports), options.algorithms);
}

void apply_config_file(const fs::path& path, HarnessOptions& options) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("config parse error: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw SchemaError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "min_subtree_height") {
                options.mapper.min_subtree_height = value.get<int>();
            } else if (key == "dice_threshold") {
                options.mapper.dice_threshold = value.get<double>();
            } else if (key == "name_similarity_threshold") {
                options.mapper.name_similarity_threshold = value.get<double>();
            } else if (key == "nit_names_only") {
                options.nit_names_only = value.get<bool>();
            } else if (key == "jobs") {
                options.jobs = value.get<int>();
            } else if (key == "algorithms") {
                options.algorithms = value.get<std::vector<std::string>>();
            } else {
                throw SchemaError("unknown config key: " + key);
            }
        } catch (const nlohmann::json::type_error&) {
            throw SchemaError("config key has wrong type: " + key);
        }
    }
}

}  // namespace astdiff
