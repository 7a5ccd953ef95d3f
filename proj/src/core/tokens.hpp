#pragma once

#include <string>
#include <vector>

#include "core/ast.hpp"

namespace astdiff {

enum class TokenCategory : uint8_t {
    VariableName,
    TypeName,
    MethodName,
    DeclarationName,
    Structural,
};

struct TokenKind {
    TokenCategory category = TokenCategory::Structural;
    // Label of the deepest containing node; set only for Structural tokens so
    // that, for example, a brace under a Block and one under a TypeDeclaration
    // compare as different kinds.
    std::string structural_label;

    bool operator==(const TokenKind&) const = default;
};

std::string token_kind_name(const TokenKind& kind);

struct Token {
    int index = 0;
    std::string text;
    Range range;
    int drn = kNoNode;          // deepest node whose range contains the token
    bool in_node_value = false;  // token lies inside the drn's value occurrence
    TokenKind kind;
};

struct TokenList {
    std::vector<Token> tokens;
    // Per node id, ascending token indices split by the value/non-value
    // partition. Tokens belong to exactly one node (their drn).
    std::vector<std::vector<int>> value_tokens_of;
    std::vector<std::vector<int>> other_tokens_of;
    // Per token, the enclosing statement of its drn (kNoNode when none).
    std::vector<int> enclosing_statement;

    const Token& token(int index) const { return tokens[static_cast<size_t>(index)]; }
    size_t size() const { return tokens.size(); }
};

// Lexes the AST's source and attaches each token to its deepest containing
// node. Word-like tokens lying inside that node's value occurrence are value
// tokens; everything else is structural.
TokenList tokenize(const Ast& ast);

// One line per token: index, kind, text, byte range, owning node id.
std::string dump_tokens(const Ast& ast);

}  // namespace astdiff
