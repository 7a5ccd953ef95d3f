#include "astdiff/astdiff.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/evaluate.hpp"
#include "core/harness.hpp"
#include "core/mappers.hpp"
#include "core/interchange.hpp"
#include "core/parser.hpp"
#include "core/synth.hpp"
#include "core/tokens.hpp"

struct astdiff_ast {
    astdiff::Ast ast;
};

struct astdiff_report {
    bool is_corpus = false;
    astdiff::RevisionReport revision;
    astdiff::CorpusReport corpus;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

astdiff_status fail(astdiff_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <typename Fn>
astdiff_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return ASTDIFF_OK;
    } catch (const astdiff::SyntaxError& e) {
        return fail(ASTDIFF_ERR_SYNTAX, e.what());
    } catch (const astdiff::SchemaError& e) {
        return fail(ASTDIFF_ERR_SCHEMA, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(ASTDIFF_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ASTDIFF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ASTDIFF_ERR_INTERNAL, e.what());
    }
}

astdiff_status require(bool ok, const char* what) {
    return ok ? ASTDIFF_OK : fail(ASTDIFF_ERR_INVALID_ARGUMENT, what);
}

astdiff::HarnessOptions to_harness_options(const astdiff_options* options) {
    astdiff::HarnessOptions h;
    if (options != nullptr) {
        h.mapper.min_subtree_height = options->min_subtree_height;
        h.mapper.dice_threshold = options->dice_threshold;
        h.mapper.name_similarity_threshold = options->name_similarity_threshold;
        h.nit_names_only = options->nit_names_only != 0;
        h.jobs = options->jobs;
    }
    return h;
}

std::vector<std::string> to_names(const char* const* names, size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (names[i] == nullptr) throw astdiff::SchemaError("null algorithm name");
        out.emplace_back(names[i]);
    }
    return out;
}

astdiff_status emit_string(const std::string& text, char** out) {
    *out = dup_string(text);
    if (*out == nullptr) return fail(ASTDIFF_ERR_INTERNAL, "out of memory");
    g_last_error.clear();
    return ASTDIFF_OK;
}

}  // namespace

extern "C" {

void astdiff_options_init(astdiff_options* options) {
    if (options == nullptr) return;
    const astdiff::MapperConfig defaults;
    options->min_subtree_height = defaults.min_subtree_height;
    options->dice_threshold = defaults.dice_threshold;
    options->name_similarity_threshold = defaults.name_similarity_threshold;
    options->nit_names_only = 0;
    options->jobs = 1;
}

astdiff_status astdiff_options_load(const char* path, astdiff_options* options,
                                    char** algorithms_csv) {
    if (astdiff_status s = require(path != nullptr && options != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    astdiff::HarnessOptions h = to_harness_options(options);
    const astdiff_status status = guarded([&]() { astdiff::apply_config_file(path, h); });
    if (status != ASTDIFF_OK) return status;
    options->min_subtree_height = h.mapper.min_subtree_height;
    options->dice_threshold = h.mapper.dice_threshold;
    options->name_similarity_threshold = h.mapper.name_similarity_threshold;
    options->nit_names_only = h.nit_names_only ? 1 : 0;
    options->jobs = h.jobs;
    if (algorithms_csv != nullptr) {
        std::string joined;
        for (size_t i = 0; i < h.algorithms.size(); ++i) {
            joined += (i == 0 ? "" : ",");
            joined += h.algorithms[i];
        }
        return emit_string(joined, algorithms_csv);
    }
    return ASTDIFF_OK;
}

const char* astdiff_status_name(astdiff_status status) {
    switch (status) {
        case ASTDIFF_OK: return "ok";
        case ASTDIFF_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case ASTDIFF_ERR_SYNTAX: return "syntax_error";
        case ASTDIFF_ERR_SCHEMA: return "schema_error";
        case ASTDIFF_ERR_IO: return "io_error";
        case ASTDIFF_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* astdiff_last_error(void) { return g_last_error.c_str(); }

void astdiff_string_free(char* text) { std::free(text); }

astdiff_status astdiff_parse_source(const char* source, astdiff_ast** out) {
    if (astdiff_status s = require(source != nullptr && out != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    *out = nullptr;
    return guarded([&]() { *out = new astdiff_ast{astdiff::parse_source(source)}; });
}

astdiff_status astdiff_ast_from_json(const char* json_text, astdiff_ast** out) {
    if (astdiff_status s = require(json_text != nullptr && out != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    *out = nullptr;
    return guarded([&]() { *out = new astdiff_ast{astdiff::load_ast(json_text)}; });
}

astdiff_status astdiff_ast_to_json(const astdiff_ast* ast, char** out) {
    if (astdiff_status s = require(ast != nullptr && out != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    std::string text;
    const astdiff_status status = guarded([&]() { text = astdiff::save_ast(ast->ast); });
    return status == ASTDIFF_OK ? emit_string(text, out) : status;
}

astdiff_status astdiff_ast_token_dump(const astdiff_ast* ast, char** out) {
    if (astdiff_status s = require(ast != nullptr && out != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    std::string text;
    const astdiff_status status = guarded([&]() { text = astdiff::dump_tokens(ast->ast); });
    return status == ASTDIFF_OK ? emit_string(text, out) : status;
}

void astdiff_ast_free(astdiff_ast* ast) { delete ast; }

astdiff_status astdiff_run_revision(const char* revision_id, const astdiff_ast* before,
                                    const astdiff_ast* after, const char* const* algorithm_names,
                                    const char* const* external_mapping_json,
                                    size_t algorithm_count, const astdiff_options* options,
                                    astdiff_report** out) {
    if (astdiff_status s = require(revision_id != nullptr && before != nullptr &&
                                       after != nullptr && algorithm_names != nullptr &&
                                       algorithm_count > 0 && out != nullptr,
                                   "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    *out = nullptr;
    return guarded([&]() {
        astdiff::HarnessOptions h = to_harness_options(options);
        h.algorithms = to_names(algorithm_names, algorithm_count);
        std::vector<std::pair<std::string, astdiff::NodeMappingSet>> mappings;
        for (size_t i = 0; i < algorithm_count; ++i) {
            const std::string& name = h.algorithms[i];
            if (external_mapping_json != nullptr) {
                if (external_mapping_json[i] == nullptr) {
                    throw astdiff::SchemaError("null mapping document for " + name);
                }
                mappings.emplace_back(name, astdiff::load_mapping(before->ast, after->ast,
                                                                  external_mapping_json[i]));
            } else {
                astdiff::MapperFn fn = astdiff::find_mapper(name);
                if (fn == nullptr) throw astdiff::SchemaError("unknown algorithm: " + name);
                mappings.emplace_back(name, fn(before->ast, after->ast, h.mapper));
            }
        }
        auto* report = new astdiff_report;
        report->is_corpus = false;
        report->revision =
            astdiff::run_revision(revision_id, before->ast, after->ast, mappings, h);
        *out = report;
    });
}

astdiff_status astdiff_run_corpus(const char* corpus_dir, const char* const* algorithm_names,
                                  size_t algorithm_count, int use_external,
                                  const astdiff_options* options, astdiff_report** out) {
    if (astdiff_status s = require(corpus_dir != nullptr && algorithm_names != nullptr &&
                                       algorithm_count > 0 && out != nullptr,
                                   "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    *out = nullptr;
    return guarded([&]() {
        astdiff::HarnessOptions h = to_harness_options(options);
        h.algorithms = to_names(algorithm_names, algorithm_count);
        h.use_external = use_external != 0;
        auto* report = new astdiff_report;
        report->is_corpus = true;
        report->corpus = astdiff::run_corpus(corpus_dir, h);
        *out = report;
    });
}

astdiff_status astdiff_report_to_json(const astdiff_report* report, char** out) {
    if (astdiff_status s = require(report != nullptr && out != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    std::string text;
    const astdiff_status status = guarded([&]() {
        text = report->is_corpus ? astdiff::corpus_report_to_json(report->corpus)
                                 : astdiff::revision_report_to_json(report->revision);
    });
    return status == ASTDIFF_OK ? emit_string(text, out) : status;
}

astdiff_status astdiff_report_to_text(const astdiff_report* report, const char* statement_filter,
                                      char** out) {
    if (astdiff_status s = require(report != nullptr && out != nullptr, "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    const std::string filter = statement_filter == nullptr ? "" : statement_filter;
    std::string text;
    const astdiff_status status = guarded([&]() {
        text = report->is_corpus ? astdiff::corpus_report_to_text(report->corpus, filter)
                                 : astdiff::revision_report_to_text(report->revision, filter);
    });
    return status == ASTDIFF_OK ? emit_string(text, out) : status;
}

int astdiff_report_had_errors(const astdiff_report* report) {
    if (report == nullptr) return 0;
    return report->is_corpus ? (report->corpus.error_count > 0 ? 1 : 0)
                             : (report->revision.error.empty() ? 0 : 1);
}

void astdiff_report_free(astdiff_report* report) { delete report; }

astdiff_status astdiff_evaluate(const char* corpus_report_json, const char* labels_json,
                                char** out) {
    if (astdiff_status s = require(corpus_report_json != nullptr && labels_json != nullptr &&
                                       out != nullptr,
                                   "null argument");
        s != ASTDIFF_OK) {
        return s;
    }
    std::string text;
    const astdiff_status status = guarded(
        [&]() { text = astdiff::evaluate_report(corpus_report_json, labels_json); });
    return status == ASTDIFF_OK ? emit_string(text, out) : status;
}

astdiff_status astdiff_generate_corpus(uint64_t seed, int count, const char* out_dir,
                                       char** out_summary_json) {
    if (astdiff_status s = require(out_dir != nullptr && count >= 0, "invalid argument");
        s != ASTDIFF_OK) {
        return s;
    }
    std::string summary;
    const astdiff_status status = guarded([&]() {
        astdiff::SynthOptions options;
        options.seed = seed;
        options.count = count;
        summary = astdiff::generate_corpus(out_dir, options).summary_json;
    });
    if (status != ASTDIFF_OK) return status;
    if (out_summary_json != nullptr) return emit_string(summary, out_summary_json);
    return ASTDIFF_OK;
}

}  // extern "C"
