#pragma once

#include <string_view>
#include <vector>

#include "core/ast.hpp"

namespace astdiff {

enum class LexemeKind : uint8_t {
    Identifier,
    Keyword,
    Number,
    String,
    Punct,
};

struct Lexeme {
    LexemeKind kind = LexemeKind::Punct;
    std::string text;
    Range range;
    uint32_t line = 1;    // 1-based
    uint32_t column = 1;  // 1-based
};

bool is_keyword(std::string_view word);

// True when the lexeme's first character is a word character (letter, digit,
// underscore, or quote). Word-like lexemes are the ones eligible to become
// value tokens; punctuation never is.
bool is_word_like(std::string_view text);

// Splits source text into lexemes, skipping whitespace and // and /* */
// comments. Throws SyntaxError on unknown characters or unterminated
// strings/comments.
std::vector<Lexeme> lex_source(std::string_view source);

}  // namespace astdiff
