#ifndef ASTDIFF_H
#define ASTDIFF_H

/* C interface to the astdiff library: AST construction, mapping-algorithm
 * comparison over file revisions, report rendering, report evaluation
 * against ground-truth labels, and synthetic corpus generation.
 *
 * Conventions: functions returning astdiff_status yield ASTDIFF_OK (0) on
 * success; on failure astdiff_last_error() returns a thread-local message.
 * Strings returned through char** out parameters are NUL-terminated,
 * malloc-backed, and must be released with astdiff_string_free. Handles are
 * opaque and freed with their matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum astdiff_status {
    ASTDIFF_OK = 0,
    ASTDIFF_ERR_INVALID_ARGUMENT = 1,
    ASTDIFF_ERR_SYNTAX = 2,
    ASTDIFF_ERR_SCHEMA = 3,
    ASTDIFF_ERR_IO = 4,
    ASTDIFF_ERR_INTERNAL = 5
} astdiff_status;

typedef struct astdiff_ast astdiff_ast;
typedef struct astdiff_report astdiff_report;

typedef struct astdiff_options {
    int min_subtree_height;          /* identical-subtree match minimum height */
    double dice_threshold;           /* inner-node dice acceptance threshold */
    double name_similarity_threshold; /* value-similarity gate for leaf/name matching */
    int nit_names_only;              /* nonzero: NIT counts only name tokens */
    int jobs;                        /* worker threads for corpus runs */
} astdiff_options;

/* Fills the defaults (height 2, dice 0.5, name similarity 0.6, names-only
 * off, 1 job). */
void astdiff_options_init(astdiff_options* options);

/* Applies a JSON config file on top of *options. If the file selects
 * algorithms, *algorithms_csv receives the comma-joined list (else the
 * current default); free it with astdiff_string_free. algorithms_csv may be
 * NULL when the caller does not need it. */
astdiff_status astdiff_options_load(const char* path, astdiff_options* options,
                                    char** algorithms_csv);

const char* astdiff_status_name(astdiff_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* astdiff_last_error(void);

void astdiff_string_free(char* text);

/* --- ASTs --- */

astdiff_status astdiff_parse_source(const char* source, astdiff_ast** out);
astdiff_status astdiff_ast_from_json(const char* json_text, astdiff_ast** out);
astdiff_status astdiff_ast_to_json(const astdiff_ast* ast, char** out);

/* Tab-separated token table: index, kind, text, byte range, owning node. */
astdiff_status astdiff_ast_token_dump(const astdiff_ast* ast, char** out);

void astdiff_ast_free(astdiff_ast* ast);

/* --- Judging --- */

/* Judges one revision. algorithm_names has algorithm_count entries. When
 * external_mapping_json is NULL the named built-in mappers run; otherwise it
 * must hold algorithm_count mapping documents, one per algorithm. */
astdiff_status astdiff_run_revision(const char* revision_id, const astdiff_ast* before,
                                    const astdiff_ast* after, const char* const* algorithm_names,
                                    const char* const* external_mapping_json,
                                    size_t algorithm_count, const astdiff_options* options,
                                    astdiff_report** out);

/* Judges every revision directory under corpus_dir (subdirectories holding a
 * before.* file). With use_external nonzero, mappings come from
 * mapping.<name>.json files in each revision directory. Per-revision
 * failures are recorded in the report, not raised. */
astdiff_status astdiff_run_corpus(const char* corpus_dir, const char* const* algorithm_names,
                                  size_t algorithm_count, int use_external,
                                  const astdiff_options* options, astdiff_report** out);

astdiff_status astdiff_report_to_json(const astdiff_report* report, char** out);

/* Human-readable rendering. A non-NULL, non-empty statement_filter adds a
 * side-by-side mapping view of every statement whose text contains it. */
astdiff_status astdiff_report_to_text(const astdiff_report* report, const char* statement_filter,
                                      char** out);

/* Nonzero when any revision in the report failed to process. */
int astdiff_report_had_errors(const astdiff_report* report);

void astdiff_report_free(astdiff_report* report);

/* --- Evaluation and synthesis --- */

/* Scores a corpus report (JSON) against a ground-truth labels file (JSON
 * array of {revision, algorithm, side, statement_range}); *out receives the
 * per-algorithm tp/fp/fn/precision/recall JSON. */
astdiff_status astdiff_evaluate(const char* corpus_report_json, const char* labels_json,
                                char** out);

/* Generates the deterministic synthetic corpus under out_dir; see the
 * gen-synth CLI command. *out_summary_json (optional) receives the summary
 * document. */
astdiff_status astdiff_generate_corpus(uint64_t seed, int count, const char* out_dir,
                                       char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* ASTDIFF_H */
