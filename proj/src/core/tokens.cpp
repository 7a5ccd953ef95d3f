#include "core/tokens.hpp"

#include <cctype>
#include <sstream>

#include "core/source_lexer.hpp"

namespace astdiff {

namespace {

bool is_type_node_label(const std::string& label) {
    return label == "SimpleType" || label == "ParameterizedType" || label == "QualifiedName";
}

char next_visible_char(const std::string& source, uint32_t from) {
    for (size_t i = from; i < source.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(source[i]))) return source[i];
    }
    return '\0';
}

TokenKind kind_of(const Ast& ast, const Token& token) {
    const AstNode& node = ast.node(token.drn);
    if (!token.in_node_value) return {TokenCategory::Structural, node.label};
    if (is_type_node_label(node.label)) return {TokenCategory::TypeName, ""};
    if (node.label == "SimpleName") {
        const std::string parent_label =
            node.parent == kNoNode ? std::string() : ast.node(node.parent).label;
        if (parent_label == "TypeDeclaration" || parent_label == "MethodDeclaration") {
            return {TokenCategory::DeclarationName, ""};
        }
        if (parent_label == "MethodInvocation" &&
            next_visible_char(ast.source, node.range.end) == '(') {
            return {TokenCategory::MethodName, ""};
        }
        return {TokenCategory::VariableName, ""};
    }
    return {TokenCategory::Structural, node.label};
}

}  // namespace

std::string token_kind_name(const TokenKind& kind) {
    switch (kind.category) {
        case TokenCategory::VariableName: return "VariableName";
        case TokenCategory::TypeName: return "TypeName";
        case TokenCategory::MethodName: return "MethodName";
        case TokenCategory::DeclarationName: return "DeclarationName";
        case TokenCategory::Structural: return "Structural(" + kind.structural_label + ")";
    }
    return "Structural()";
}

TokenList tokenize(const Ast& ast) {
    TokenList list;
    list.value_tokens_of.resize(ast.size());
    list.other_tokens_of.resize(ast.size());
    const AstNode& root = ast.node(ast.root());
    for (const Lexeme& lx : lex_source(ast.source)) {
        if (!root.range.contains(lx.range)) continue;
        int drn = ast.root();
        while (true) {
            int next = kNoNode;
            for (int c : ast.node(drn).children) {
                if (ast.node(c).range.contains(lx.range)) {
                    next = c;
                    break;
                }
            }
            if (next == kNoNode) break;
            drn = next;
        }
        Token token;
        token.index = static_cast<int>(list.tokens.size());
        token.text = lx.text;
        token.range = lx.range;
        token.drn = drn;
        const AstNode& owner = ast.node(drn);
        token.in_node_value = !owner.value.empty() &&
                              owner.value_range.contains(token.range) &&
                              is_word_like(token.text);
        token.kind = kind_of(ast, token);
        (token.in_node_value ? list.value_tokens_of : list.other_tokens_of)[static_cast<size_t>(drn)]
            .push_back(token.index);
        list.enclosing_statement.push_back(ast.enclosing_statement[static_cast<size_t>(drn)]);
        list.tokens.push_back(std::move(token));
    }
    return list;
}

std::string dump_tokens(const Ast& ast) {
    TokenList list = tokenize(ast);
    std::ostringstream out;
    for (const Token& t : list.tokens) {
        out << t.index << '\t' << token_kind_name(t.kind) << '\t' << t.text << '\t' << '['
            << t.range.begin << ',' << t.range.end << ')' << '\t' << t.drn << '\n';
    }
    return out.str();
}

}  // namespace astdiff
