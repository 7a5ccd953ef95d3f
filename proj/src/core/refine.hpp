#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/ast.hpp"
#include "core/mapping.hpp"
#include "core/tokens.hpp"

namespace astdiff {

// Per node id: own nodes of each statement, i.e. nodes whose nearest enclosing
// statement is that statement (the statement node itself included). Entries
// for non-statement nodes stay empty.
std::vector<std::vector<int>> group_by_statement(const Ast& ast);

struct StatementMappingSet {
    std::vector<NodePair> pairs;  // sorted by src id
    std::vector<int> src_to_dst;  // per node id, kNoNode when unmapped
    std::vector<int> dst_to_src;

    bool maps(int src, int dst) const {
        return src != kNoNode && dst != kNoNode &&
               src < static_cast<int>(src_to_dst.size()) &&
               src_to_dst[static_cast<size_t>(src)] == dst;
    }
};

struct TokenPair {
    int src = -1;
    int dst = -1;
    bool operator==(const TokenPair&) const = default;
};

struct TokenMappingSet {
    std::vector<TokenPair> pairs;  // sorted by src token index
    std::vector<int> src_to_dst;   // per src token index, -1 when unmapped
    std::vector<int> dst_to_src;
};

// Statement pairs are exactly the mapped node pairs where both endpoints are
// statements.
StatementMappingSet derive_statement_mappings(const Ast& src, const Ast& dst,
                                              const NodeMappingSet& nodes);

// Pairs the texts of two token sequences in two phases: first a maximum
// equal-text in-order matching (lexicographically smallest in src-major pair
// order among the maximum ones), then positional pairing of the leftover
// tokens between consecutive matches (list boundaries act as anchors), front
// to back, longer tails left unmapped. Returns (src index, dst index) pairs
// sorted by src index.
std::vector<std::pair<int, int>> match_token_sequences(const std::vector<std::string>& src,
                                                       const std::vector<std::string>& dst);

// Applies match_token_sequences per mapped node pair, separately to the value
// tokens and the structural tokens each node owns. Value tokens therefore
// never pair with structural tokens.
TokenMappingSet derive_token_mappings(const Ast& src, const TokenList& src_tokens, const Ast& dst,
                                      const TokenList& dst_tokens, const NodeMappingSet& nodes);

// One algorithm's mapping with its statement- and token-level refinements.
struct AlgorithmView {
    std::string name;
    NodeMappingSet nodes;
    StatementMappingSet stmts;
    TokenMappingSet tokens;
};

AlgorithmView build_view(std::string name, const Ast& src, const TokenList& src_tokens,
                         const Ast& dst, const TokenList& dst_tokens, NodeMappingSet nodes);

}  // namespace astdiff
