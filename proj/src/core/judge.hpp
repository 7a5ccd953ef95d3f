#pragma once

#include <compare>
#include <string>
#include <vector>

#include "core/measures.hpp"
#include "core/refine.hpp"

namespace astdiff {

enum class Granularity : uint8_t { Statement, Token };
enum class Side : uint8_t { Src, Dst };

const char* granularity_name(Granularity g);
const char* side_name(Side s);

struct ElementRef {
    Granularity granularity = Granularity::Statement;
    Side side = Side::Src;
    int id = -1;  // node id for statements, token index for tokens

    auto operator<=>(const ElementRef&) const = default;
};

struct Verdict {
    std::string algorithm;
    ElementRef element;
    std::string decided_by;  // one of NIT, PM, TYPE, STMT, VAL, LLCS, sim-two-condition
    std::string evidence;
};

struct UndecidedEntry {
    std::string a;
    std::string b;
    ElementRef element;  // the contested element
    std::string stage;   // "statement" or "token"
};

struct PairJudgement {
    std::string a;
    std::string b;
    std::vector<Verdict> verdicts;
    std::vector<UndecidedEntry> undecided;
    // Statement units (collapsed across sides when both algorithms agree on
    // the pair) where the two algorithms disagree.
    int inconsistent_statement_count = 0;
};

// Violations detectable from a single algorithm's mapping alone: a mapped
// non-block statement pair sharing no identical token text, a mapped block
// pair whose parents are not mapped to each other, and a mapped token pair of
// differing kinds. Every such pair condemns both of its endpoints.
std::vector<Verdict> absolute_rule_verdicts(const MeasureContext& ctx, const AlgorithmView& view);

// Differential comparison of two algorithms over one revision: absolute rules
// for each, then adjudication of every statement unit where the two disagree.
PairJudgement judge_pair(const MeasureContext& ctx, const AlgorithmView& a,
                         const AlgorithmView& b);

struct RevisionJudgement {
    std::vector<PairJudgement> pairs;  // all (i, j) with i < j, in input order
    // Per input algorithm: union of its Inaccurate verdicts across all pairs,
    // deduplicated by element and sorted.
    std::vector<std::vector<Verdict>> per_algorithm;
};

RevisionJudgement judge_all(const MeasureContext& ctx, const std::vector<AlgorithmView>& views);

}  // namespace astdiff
