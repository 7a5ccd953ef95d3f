#include "core/measures.hpp"

#include <algorithm>

namespace astdiff {

namespace {

bool pair_in_statements(const MeasureContext& ctx, const TokenPair& p, int src_stmt,
                        int dst_stmt) {
    return ctx.src_tokens->enclosing_statement[static_cast<size_t>(p.src)] == src_stmt &&
           ctx.dst_tokens->enclosing_statement[static_cast<size_t>(p.dst)] == dst_stmt;
}

}  // namespace

int nit(const MeasureContext& ctx, const AlgorithmView& view, int src_stmt, int dst_stmt) {
    int count = 0;
    for (const TokenPair& p : view.tokens.pairs) {
        if (!pair_in_statements(ctx, p, src_stmt, dst_stmt)) continue;
        const Token& a = ctx.src_tokens->token(p.src);
        const Token& b = ctx.dst_tokens->token(p.dst);
        if (ctx.nit_names_only && !(a.in_node_value && b.in_node_value)) continue;
        if (a.text == b.text) ++count;
    }
    return count;
}

bool pm(const MeasureContext& ctx, const AlgorithmView& view, int src_stmt, int dst_stmt) {
    int src_parent = ctx.src->node(src_stmt).parent;
    int dst_parent = ctx.dst->node(dst_stmt).parent;
    if (src_parent == kNoNode || dst_parent == kNoNode) return false;
    return view.nodes.maps(src_parent, dst_parent);
}

int llcs(const MeasureContext& ctx, const AlgorithmView& view, int src_stmt, int dst_stmt) {
    std::vector<std::pair<int, int>> chain;
    for (const TokenPair& p : view.tokens.pairs) {
        if (pair_in_statements(ctx, p, src_stmt, dst_stmt)) chain.push_back({p.src, p.dst});
    }
    return longest_increasing_pair_chain(std::move(chain));
}

int longest_increasing_pair_chain(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    // Patience algorithm on the dst components; tails[k] holds the smallest
    // possible chain tail of length k+1.
    std::vector<int> tails;
    for (const auto& pair : pairs) {
        auto it = std::lower_bound(tails.begin(), tails.end(), pair.second);
        if (it == tails.end()) {
            tails.push_back(pair.second);
        } else {
            *it = pair.second;
        }
    }
    return static_cast<int>(tails.size());
}

}  // namespace astdiff
