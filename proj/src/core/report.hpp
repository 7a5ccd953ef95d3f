#pragma once

#include <string>
#include <vector>

#include "core/judge.hpp"

namespace astdiff {

struct ReportVerdict {
    ElementRef element;
    std::string element_text;
    Range element_range;
    std::string decided_by;
    std::string evidence;
};

// Verdicts for one algorithm grouped under the statement they fall into.
struct StatementGroup {
    Side side = Side::Src;
    int stmt_id = kNoNode;  // kNoNode when the element lies outside statements
    Range range;
    std::string statement_text;
    uint32_t line = 0;
    std::vector<ReportVerdict> verdicts;
};

struct AlgorithmReport {
    std::string algorithm;
    std::vector<StatementGroup> inaccurate_statements;
    bool flagged = false;
};

struct PairStat {
    std::string a;
    std::string b;
    int inconsistent_statement_count = 0;
};

struct UndecidedDetail {
    std::string a;
    std::string b;
    std::string stage;
    ElementRef element;
    std::string element_text;
    Range element_range;
};

// Side-by-side mapping digest used by the text renderer.
struct TokenDigest {
    std::string text;
    Range range;
    std::vector<std::string> partner;  // per algorithm, empty string when unmapped
};

struct StatementDigest {
    Side side = Side::Src;
    int id = kNoNode;
    uint32_t line = 0;
    Range range;
    std::string text;
    std::vector<std::string> stmt_partner;  // per algorithm, empty string when unmapped
    std::vector<TokenDigest> tokens;
};

struct RevisionReport {
    std::string revision;
    std::string error;  // nonempty when the revision failed to process
    std::vector<std::string> algorithms;
    std::vector<AlgorithmReport> per_algorithm;
    std::vector<PairStat> pairs;
    std::vector<UndecidedDetail> undecided;
    std::vector<StatementDigest> digests;
};

struct CorpusAlgorithmSummary {
    std::string algorithm;
    int inaccurate_statement_count = 0;
    int flagged_revision_count = 0;
    double flagged_revision_ratio = 0.0;
};

struct CorpusReport {
    std::vector<RevisionReport> revisions;
    std::vector<CorpusAlgorithmSummary> per_algorithm;
    int error_count = 0;
};

RevisionReport build_revision_report(std::string revision_id, const MeasureContext& ctx,
                                     const std::vector<AlgorithmView>& views,
                                     const RevisionJudgement& judgement);

RevisionReport build_error_report(std::string revision_id, std::vector<std::string> algorithms,
                                  std::string message);

// Computes the per-algorithm corpus summary from already-ordered revisions.
CorpusReport assemble_corpus(std::vector<RevisionReport> revisions,
                             const std::vector<std::string>& algorithms);

std::string revision_report_to_json(const RevisionReport& report);
std::string corpus_report_to_json(const CorpusReport& report);

// Human-readable rendering. A non-empty statement filter additionally prints
// the side-by-side mapping view of every statement whose text contains it.
std::string revision_report_to_text(const RevisionReport& report,
                                    const std::string& statement_filter);
std::string corpus_report_to_text(const CorpusReport& report,
                                  const std::string& statement_filter);

}  // namespace astdiff
