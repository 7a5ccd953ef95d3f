#pragma once

#include <utility>
#include <vector>

#include "core/ast.hpp"
#include "core/refine.hpp"
#include "core/tokens.hpp"

namespace astdiff {

// Shared read-only inputs for one revision.
struct MeasureContext {
    const Ast* src = nullptr;
    const Ast* dst = nullptr;
    const TokenList* src_tokens = nullptr;
    const TokenList* dst_tokens = nullptr;
    bool nit_names_only = false;
};

// Number of identical-text mapped token pairs inside the statement pair.
// With nit_names_only set, only value-token pairs count.
int nit(const MeasureContext& ctx, const AlgorithmView& view, int src_stmt, int dst_stmt);

// True when the statements' parent nodes are mapped to each other.
bool pm(const MeasureContext& ctx, const AlgorithmView& view, int src_stmt, int dst_stmt);

// Length of the longest chain of mapped token pairs inside the statement pair
// that is strictly increasing on both sides.
int llcs(const MeasureContext& ctx, const AlgorithmView& view, int src_stmt, int dst_stmt);

// Longest strictly-increasing chain over (src, dst) index pairs. Pairs must
// be injective on both components.
int longest_increasing_pair_chain(std::vector<std::pair<int, int>> pairs);

}  // namespace astdiff
