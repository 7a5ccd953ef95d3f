#include "core/refine.hpp"

#include <algorithm>

namespace astdiff {

std::vector<std::vector<int>> group_by_statement(const Ast& ast) {
    std::vector<std::vector<int>> groups(ast.size());
    for (size_t i = 0; i < ast.size(); ++i) {
        int stmt = ast.enclosing_statement[i];
        if (stmt != kNoNode) groups[static_cast<size_t>(stmt)].push_back(static_cast<int>(i));
    }
    return groups;
}

StatementMappingSet derive_statement_mappings(const Ast& src, const Ast& dst,
                                              const NodeMappingSet& nodes) {
    StatementMappingSet set;
    set.src_to_dst.assign(src.size(), kNoNode);
    set.dst_to_src.assign(dst.size(), kNoNode);
    for (const NodePair& p : nodes.pairs()) {
        if (!src.is_statement(p.src) || !dst.is_statement(p.dst)) continue;
        set.pairs.push_back(p);
        set.src_to_dst[static_cast<size_t>(p.src)] = p.dst;
        set.dst_to_src[static_cast<size_t>(p.dst)] = p.src;
    }
    return set;
}

namespace {

// Length of the maximum equal-text in-order matching of src[i..] vs dst[j..].
std::vector<std::vector<int>> lcs_table(const std::vector<std::string>& src,
                                        const std::vector<std::string>& dst) {
    std::vector<std::vector<int>> table(src.size() + 1, std::vector<int>(dst.size() + 1, 0));
    for (size_t i = src.size(); i-- > 0;) {
        for (size_t j = dst.size(); j-- > 0;) {
            table[i][j] = src[i] == dst[j] ? table[i + 1][j + 1] + 1
                                           : std::max(table[i + 1][j], table[i][j + 1]);
        }
    }
    return table;
}

}  // namespace

std::vector<std::pair<int, int>> match_token_sequences(const std::vector<std::string>& src,
                                                       const std::vector<std::string>& dst) {
    // Phase one: maximum equal-text matching, built greedily so the resulting
    // pair sequence is the lexicographically smallest maximum one.
    std::vector<std::vector<int>> table = lcs_table(src, dst);
    std::vector<std::pair<int, int>> anchors;
    size_t i = 0;
    size_t j = 0;
    while (table[i][j] > 0) {
        bool advanced = false;
        for (size_t a = i; a < src.size() && !advanced; ++a) {
            for (size_t b = j; b < dst.size() && !advanced; ++b) {
                if (src[a] == dst[b] && table[a + 1][b + 1] + 1 == table[i][j]) {
                    anchors.push_back({static_cast<int>(a), static_cast<int>(b)});
                    i = a + 1;
                    j = b + 1;
                    advanced = true;
                }
            }
        }
        if (!advanced) break;  // unreachable: a positive table entry has a first match
    }

    // Phase two: inside each gap between consecutive anchors (and before the
    // first and after the last), pair leftovers front to back.
    std::vector<std::pair<int, int>> result;
    int prev_src = -1;
    int prev_dst = -1;
    auto fill_gap = [&](int src_end, int dst_end) {
        int s = prev_src + 1;
        int d = prev_dst + 1;
        while (s < src_end && d < dst_end) {
            result.push_back({s, d});
            ++s;
            ++d;
        }
    };
    for (const auto& anchor : anchors) {
        fill_gap(anchor.first, anchor.second);
        result.push_back(anchor);
        prev_src = anchor.first;
        prev_dst = anchor.second;
    }
    fill_gap(static_cast<int>(src.size()), static_cast<int>(dst.size()));
    return result;
}

TokenMappingSet derive_token_mappings(const Ast&, const TokenList& src_tokens, const Ast&,
                                      const TokenList& dst_tokens, const NodeMappingSet& nodes) {
    TokenMappingSet set;
    set.src_to_dst.assign(src_tokens.size(), -1);
    set.dst_to_src.assign(dst_tokens.size(), -1);
    auto texts_of = [](const TokenList& list, const std::vector<int>& indices) {
        std::vector<std::string> texts;
        texts.reserve(indices.size());
        for (int idx : indices) texts.push_back(list.token(idx).text);
        return texts;
    };
    for (const NodePair& p : nodes.pairs()) {
        const auto pair_up = [&](const std::vector<int>& src_idx, const std::vector<int>& dst_idx) {
            for (auto [a, b] : match_token_sequences(texts_of(src_tokens, src_idx),
                                                     texts_of(dst_tokens, dst_idx))) {
                int sp = src_idx[static_cast<size_t>(a)];
                int dp = dst_idx[static_cast<size_t>(b)];
                set.pairs.push_back({sp, dp});
                set.src_to_dst[static_cast<size_t>(sp)] = dp;
                set.dst_to_src[static_cast<size_t>(dp)] = sp;
            }
        };
        pair_up(src_tokens.value_tokens_of[static_cast<size_t>(p.src)],
                dst_tokens.value_tokens_of[static_cast<size_t>(p.dst)]);
        pair_up(src_tokens.other_tokens_of[static_cast<size_t>(p.src)],
                dst_tokens.other_tokens_of[static_cast<size_t>(p.dst)]);
    }
    std::sort(set.pairs.begin(), set.pairs.end(),
              [](const TokenPair& a, const TokenPair& b) { return a.src < b.src; });
    return set;
}

AlgorithmView build_view(std::string name, const Ast& src, const TokenList& src_tokens,
                         const Ast& dst, const TokenList& dst_tokens, NodeMappingSet nodes) {
    AlgorithmView view;
    view.name = std::move(name);
    view.stmts = derive_statement_mappings(src, dst, nodes);
    view.tokens = derive_token_mappings(src, src_tokens, dst, dst_tokens, nodes);
    view.nodes = std::move(nodes);
    return view;
}

}  // namespace astdiff
