#include "core/source_lexer.hpp"

#include <array>
#include <cctype>

#include "core/errors.hpp"

namespace astdiff {

namespace {

constexpr std::array<std::string_view, 24> kKeywords = {
    "boolean", "byte",   "char",  "class",     "double", "else",  "false", "final",
    "float",   "for",    "if",    "int",       "long",   "new",   "null",  "private",
    "protected", "public", "return", "short",  "static", "true",  "void",  "while",
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Multi-character operators, longest first so lexing is greedy.
constexpr std::array<std::string_view, 9> kMultiPunct = {
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
};

}  // namespace

bool is_keyword(std::string_view word) {
    for (auto k : kKeywords) {
        if (k == word) return true;
    }
    return false;
}

bool is_word_like(std::string_view text) {
    if (text.empty()) return false;
    char c = text.front();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '"' || c == '\'';
}

std::vector<Lexeme> lex_source(std::string_view source) {
    std::vector<Lexeme> out;
    uint32_t line = 1;
    uint32_t column = 1;
    size_t i = 0;
    auto advance = [&](size_t count) {
        for (size_t k = 0; k < count; ++k) {
            if (source[i + k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        i += count;
    };
    auto emit = [&](LexemeKind kind, size_t length) {
        Lexeme lx;
        lx.kind = kind;
        lx.text = std::string(source.substr(i, length));
        lx.range = {static_cast<uint32_t>(i), static_cast<uint32_t>(i + length)};
        lx.line = line;
        lx.column = column;
        out.push_back(std::move(lx));
        advance(length);
    };

    while (i < source.size()) {
        char c = source[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            while (i < source.size() && source[i] != '\n') advance(1);
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
            uint32_t start_line = line;
            uint32_t start_col = column;
            advance(2);
            while (true) {
                if (i + 1 >= source.size()) {
                    throw SyntaxError("unterminated block comment", start_line, start_col);
                }
                if (source[i] == '*' && source[i + 1] == '/') {
                    advance(2);
                    break;
                }
                advance(1);
            }
            continue;
        }
        if (is_ident_start(c)) {
            size_t len = 1;
            while (i + len < source.size() && is_ident_char(source[i + len])) ++len;
            std::string_view word = source.substr(i, len);
            emit(is_keyword(word) ? LexemeKind::Keyword : LexemeKind::Identifier, len);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t len = 1;
            while (i + len < source.size() &&
                   (is_ident_char(source[i + len]) || source[i + len] == '.')) {
                ++len;
            }
            emit(LexemeKind::Number, len);
            continue;
        }
        if (c == '"' || c == '\'') {
            char quote = c;
            size_t len = 1;
            while (true) {
                if (i + len >= source.size() || source[i + len] == '\n') {
                    throw SyntaxError("unterminated string literal", line, column);
                }
                if (source[i + len] == '\\') {
                    len += 2;
                    continue;
                }
                if (source[i + len] == quote) {
                    ++len;
                    break;
                }
                ++len;
            }
            emit(LexemeKind::String, len);
            continue;
        }
        bool matched = false;
        for (auto op : kMultiPunct) {
            if (source.substr(i, op.size()) == op) {
                emit(LexemeKind::Punct, op.size());
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (std::string_view("(){}[];,.<>=+-*/%!&|").find(c) != std::string_view::npos) {
            emit(LexemeKind::Punct, 1);
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, column);
    }
    return out;
}

}  // namespace astdiff
