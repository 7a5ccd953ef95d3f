#include "core/parser.hpp"

#include <cassert>
#include <memory>

#include "core/errors.hpp"
#include "core/source_lexer.hpp"

namespace astdiff {

namespace {

bool is_primitive_type_word(std::string_view w) {
    return w == "boolean" || w == "byte" || w == "char" || w == "double" || w == "float" ||
           w == "int" || w == "long" || w == "short" || w == "void";
}

bool is_modifier_word(std::string_view w) {
    return w == "private" || w == "protected" || w == "public" || w == "static" || w == "final";
}

struct ProtoNode {
    std::string label;
    std::string value;
    Range range;
    Range value_range;
    std::vector<int> children;
};

class Parser {
public:
    explicit Parser(std::string_view source) : source_(source), lexemes_(lex_source(source)) {}

    Ast parse() {
        int cu = make("CompilationUnit");
        while (!at_end()) {
            add_child(cu, parse_type_declaration());
        }
        protos_[static_cast<size_t>(cu)].range = {0, static_cast<uint32_t>(source_.size())};
        return build_ast(cu);
    }

private:
    std::string_view source_;
    std::vector<Lexeme> lexemes_;
    size_t pos_ = 0;
    std::vector<ProtoNode> protos_;

    // ---- lexeme stream -------------------------------------------------

    bool at_end() const { return pos_ >= lexemes_.size(); }
    const Lexeme& peek(size_t ahead = 0) const {
        static const Lexeme eof{LexemeKind::Punct, "", {0, 0}, 0, 0};
        return pos_ + ahead < lexemes_.size() ? lexemes_[pos_ + ahead] : eof;
    }
    bool at(std::string_view text, size_t ahead = 0) const { return peek(ahead).text == text; }
    bool at_kind(LexemeKind kind, size_t ahead = 0) const {
        return pos_ + ahead < lexemes_.size() && lexemes_[pos_ + ahead].kind == kind;
    }
    const Lexeme& advance() {
        if (at_end()) fail("unexpected end of input");
        return lexemes_[pos_++];
    }
    const Lexeme& expect(std::string_view text) {
        if (!at(text)) fail(std::string("expected '") + std::string(text) + "'");
        return lexemes_[pos_++];
    }
    [[noreturn]] void fail(const std::string& message) const {
        uint32_t line = 1;
        uint32_t column = 1;
        if (!lexemes_.empty()) {
            const Lexeme& lx = pos_ < lexemes_.size() ? lexemes_[pos_] : lexemes_.back();
            line = lx.line;
            column = lx.column;
        }
        throw SyntaxError(message, line, column);
    }

    // ---- proto tree ----------------------------------------------------

    int make(std::string label, std::string value = "") {
        protos_.push_back(ProtoNode{std::move(label), std::move(value), {}, {}, {}});
        return static_cast<int>(protos_.size() - 1);
    }
    void add_child(int parent, int child) { protos_[static_cast<size_t>(parent)].children.push_back(child); }
    void set_range(int id, uint32_t begin, uint32_t end) { protos_[static_cast<size_t>(id)].range = {begin, end}; }
    uint32_t begin_of(int id) const { return protos_[static_cast<size_t>(id)].range.begin; }
    uint32_t end_of(int id) const { return protos_[static_cast<size_t>(id)].range.end; }

    int make_leaf(const std::string& label, const Lexeme& lx) {
        int id = make(label, lx.text);
        protos_[static_cast<size_t>(id)].range = lx.range;
        protos_[static_cast<size_t>(id)].value_range = lx.range;
        return id;
    }

    int make_slice_leaf(const std::string& label, uint32_t begin, uint32_t end) {
        int id = make(label, std::string(source_.substr(begin, end - begin)));
        protos_[static_cast<size_t>(id)].range = {begin, end};
        protos_[static_cast<size_t>(id)].value_range = {begin, end};
        return id;
    }

    // ---- grammar -------------------------------------------------------

    std::vector<int> parse_modifiers() {
        std::vector<int> mods;
        while (at_kind(LexemeKind::Keyword) && is_modifier_word(peek().text)) {
            mods.push_back(make_leaf("Modifier", advance()));
        }
        return mods;
    }

    // A type reference is always a single leaf: PrimitiveType for keyword
    // types, SimpleType for a bare name, ParameterizedType for a generic
    // reference whose value spans the whole "Name<...>" source slice.
    int parse_type() {
        if (at_kind(LexemeKind::Keyword) && is_primitive_type_word(peek().text)) {
            return make_leaf("PrimitiveType", advance());
        }
        if (!at_kind(LexemeKind::Identifier)) fail("expected a type name");
        const Lexeme& name = advance();
        if (!at("<")) return make_leaf("SimpleType", name);
        uint32_t begin = name.range.begin;
        int depth = 0;
        uint32_t end = name.range.end;
        while (true) {
            if (at_end()) fail("unterminated type arguments");
            const Lexeme& lx = advance();
            if (lx.text == "<") ++depth;
            if (lx.text == ">") --depth;
            end = lx.range.end;
            if (depth == 0) break;
        }
        return make_slice_leaf("ParameterizedType", begin, end);
    }

    // Looks ahead for "Type name" at a statement start, where Type is either a
    // primitive keyword or an identifier with optional generic arguments.
    bool looks_like_declaration() const {
        if (at_kind(LexemeKind::Keyword) && is_primitive_type_word(peek().text)) {
            return at_kind(LexemeKind::Identifier, 1);
        }
        if (!at_kind(LexemeKind::Identifier)) return false;
        size_t ahead = 1;
        if (at("<", 1)) {
            int depth = 0;
            while (pos_ + ahead < lexemes_.size()) {
                const std::string& t = lexemes_[pos_ + ahead].text;
                if (t == "<") ++depth;
                if (t == ">") --depth;
                ++ahead;
                if (depth == 0) break;
            }
            if (depth != 0) return false;
        }
        return at_kind(LexemeKind::Identifier, ahead);
    }

    int parse_type_declaration() {
        std::vector<int> mods = parse_modifiers();
        uint32_t begin = mods.empty() ? peek().range.begin : begin_of(mods.front());
        expect("class");
        if (!at_kind(LexemeKind::Identifier)) fail("expected a class name");
        int name = make_leaf("SimpleName", advance());
        int decl = make("TypeDeclaration");
        for (int m : mods) add_child(decl, m);
        add_child(decl, name);
        expect("{");
        while (!at("}")) {
            if (at_end()) fail("unterminated class body");
            add_child(decl, parse_member());
        }
        const Lexeme& close = expect("}");
        set_range(decl, begin, close.range.end);
        return decl;
    }

    int parse_member() {
        size_t mark = pos_;
        std::vector<int> mods = parse_modifiers();
        if (at("class")) {
            pos_ = mark;
            protos_.resize(protos_.size() - mods.size());
            return parse_type_declaration();
        }
        uint32_t begin = mods.empty() ? peek().range.begin : begin_of(mods.front());
        int type = parse_type();
        if (!at_kind(LexemeKind::Identifier)) fail("expected a member name");
        int name = make_leaf("SimpleName", advance());
        if (at("(")) return parse_method_rest(mods, type, name, begin);
        return parse_field_rest(mods, type, name, begin);
    }

    int parse_field_rest(const std::vector<int>& mods, int type, int name, uint32_t begin) {
        int fragment = make("VariableDeclarationFragment");
        add_child(fragment, name);
        uint32_t frag_end = end_of(name);
        if (at("=")) {
            advance();
            int init = parse_expression();
            add_child(fragment, init);
            frag_end = end_of(init);
        }
        set_range(fragment, begin_of(name), frag_end);
        const Lexeme& semi = expect(";");
        int decl = make("FieldDeclaration");
        for (int m : mods) add_child(decl, m);
        add_child(decl, type);
        add_child(decl, fragment);
        set_range(decl, begin, semi.range.end);
        return decl;
    }

    int parse_method_rest(const std::vector<int>& mods, int type, int name, uint32_t begin) {
        int decl = make("MethodDeclaration");
        for (int m : mods) add_child(decl, m);
        add_child(decl, type);
        add_child(decl, name);
        expect("(");
        bool first = true;
        while (!at(")")) {
            if (!first) expect(",");
            first = false;
            int param_type = parse_type();
            if (!at_kind(LexemeKind::Identifier)) fail("expected a parameter name");
            int param_name = make_leaf("SimpleName", advance());
            int param = make("SingleVariableDeclaration");
            add_child(param, param_type);
            add_child(param, param_name);
            set_range(param, begin_of(param_type), end_of(param_name));
            add_child(decl, param);
        }
        expect(")");
        int body = parse_block();
        add_child(decl, body);
        set_range(decl, begin, end_of(body));
        return decl;
    }

    int parse_block() {
        const Lexeme& open = expect("{");
        int block = make("Block");
        while (!at("}")) {
            if (at_end()) fail("unterminated block");
            add_child(block, parse_statement());
        }
        const Lexeme& close = expect("}");
        set_range(block, open.range.begin, close.range.end);
        return block;
    }

    int parse_statement() {
        if (at("{")) return parse_block();
        if (at("if")) return parse_if();
        if (at("for")) return parse_for();
        if (at("return")) return parse_return();
        if (looks_like_declaration()) return parse_variable_declaration("VariableDeclarationStatement", true);
        int expr = parse_expression();
        const Lexeme& semi = expect(";");
        int stmt = make("ExpressionStatement");
        add_child(stmt, expr);
        set_range(stmt, begin_of(expr), semi.range.end);
        return stmt;
    }

    // Shared by local declaration statements and for-loop init declarations.
    int parse_variable_declaration(const std::string& label, bool consume_semicolon) {
        uint32_t begin = peek().range.begin;
        int type = parse_type();
        if (!at_kind(LexemeKind::Identifier)) fail("expected a variable name");
        int name = make_leaf("SimpleName", advance());
        int fragment = make("VariableDeclarationFragment");
        add_child(fragment, name);
        uint32_t end = end_of(name);
        if (at("=")) {
            advance();
            int init = parse_expression();
            add_child(fragment, init);
            end = end_of(init);
        }
        set_range(fragment, begin_of(name), end);
        if (consume_semicolon) {
            const Lexeme& semi = expect(";");
            end = semi.range.end;
        }
        int decl = make(label);
        add_child(decl, type);
        add_child(decl, fragment);
        set_range(decl, begin, end);
        return decl;
    }

    int parse_if() {
        const Lexeme& kw = expect("if");
        expect("(");
        int cond = parse_expression();
        expect(")");
        int stmt = make("IfStatement");
        add_child(stmt, cond);
        int then_branch = parse_statement();
        add_child(stmt, then_branch);
        uint32_t end = end_of(then_branch);
        if (at("else")) {
            advance();
            int else_branch = parse_statement();
            add_child(stmt, else_branch);
            end = end_of(else_branch);
        }
        set_range(stmt, kw.range.begin, end);
        return stmt;
    }

    int parse_for() {
        const Lexeme& kw = expect("for");
        expect("(");
        int stmt = make("ForStatement");
        if (!at(";")) {
            if (looks_like_declaration()) {
                add_child(stmt, parse_variable_declaration("VariableDeclarationExpression", false));
            } else {
                add_child(stmt, parse_expression());
            }
        }
        expect(";");
        if (!at(";")) add_child(stmt, parse_expression());
        expect(";");
        if (!at(")")) add_child(stmt, parse_expression());
        expect(")");
        int body = parse_statement();
        add_child(stmt, body);
        set_range(stmt, kw.range.begin, end_of(body));
        return stmt;
    }

    int parse_return() {
        const Lexeme& kw = expect("return");
        int stmt = make("ReturnStatement");
        uint32_t end;
        if (!at(";")) {
            int value = parse_expression();
            add_child(stmt, value);
        }
        const Lexeme& semi = expect(";");
        end = semi.range.end;
        set_range(stmt, kw.range.begin, end);
        return stmt;
    }

    // ---- expressions ---------------------------------------------------

    int parse_expression() { return parse_assignment(); }

    int parse_assignment() {
        int lhs = parse_binary(0);
        if (at("=") || at("+=")) {
            advance();
            int rhs = parse_assignment();
            int assign = make("Assignment");
            add_child(assign, lhs);
            add_child(assign, rhs);
            set_range(assign, begin_of(lhs), end_of(rhs));
            return assign;
        }
        return lhs;
    }

    static int binary_precedence(std::string_view op) {
        if (op == "||") return 1;
        if (op == "&&") return 2;
        if (op == "==" || op == "!=") return 3;
        if (op == "<" || op == ">" || op == "<=" || op == ">=") return 4;
        if (op == "+" || op == "-") return 5;
        if (op == "*" || op == "/" || op == "%") return 6;
        return 0;
    }

    int parse_binary(int min_precedence) {
        int left = parse_unary();
        while (!at_end()) {
            int prec = binary_precedence(peek().text);
            if (prec == 0 || prec < min_precedence) break;
            advance();
            int right = parse_binary(prec + 1);
            int infix = make("InfixExpression");
            add_child(infix, left);
            add_child(infix, right);
            set_range(infix, begin_of(left), end_of(right));
            left = infix;
        }
        return left;
    }

    int parse_unary() {
        if (at("!") || at("-")) {
            const Lexeme& op = advance();
            int operand = parse_unary();
            int expr = make("PrefixExpression");
            add_child(expr, operand);
            set_range(expr, op.range.begin, end_of(operand));
            return expr;
        }
        return parse_postfix();
    }

    int parse_postfix() {
        int expr = parse_primary();
        while (true) {
            if (at(".")) {
                advance();
                if (!at_kind(LexemeKind::Identifier)) fail("expected a member name after '.'");
                int name = make_leaf("SimpleName", advance());
                if (at("(")) {
                    int call = make("MethodInvocation");
                    add_child(call, expr);
                    add_child(call, name);
                    uint32_t end = parse_arguments(call);
                    set_range(call, begin_of(expr), end);
                    expr = call;
                } else {
                    int access = make("FieldAccess");
                    add_child(access, expr);
                    add_child(access, name);
                    set_range(access, begin_of(expr), end_of(name));
                    expr = access;
                }
                continue;
            }
            if (at("(") && protos_[static_cast<size_t>(expr)].label == "SimpleName") {
                int call = make("MethodInvocation");
                add_child(call, expr);
                uint32_t end = parse_arguments(call);
                set_range(call, begin_of(expr), end);
                expr = call;
                continue;
            }
            if (at("++") || at("--")) {
                const Lexeme& op = advance();
                int post = make("PostfixExpression");
                add_child(post, expr);
                set_range(post, begin_of(expr), op.range.end);
                expr = post;
                continue;
            }
            break;
        }
        return expr;
    }

    uint32_t parse_arguments(int call) {
        expect("(");
        bool first = true;
        while (!at(")")) {
            if (!first) expect(",");
            first = false;
            add_child(call, parse_expression());
        }
        const Lexeme& close = expect(")");
        return close.range.end;
    }

    int parse_primary() {
        if (at("(")) {
            const Lexeme& open = advance();
            int inner = parse_expression();
            const Lexeme& close = expect(")");
            int paren = make("ParenthesizedExpression");
            add_child(paren, inner);
            set_range(paren, open.range.begin, close.range.end);
            return paren;
        }
        if (at("new")) {
            const Lexeme& kw = advance();
            int type = parse_type();
            int creation = make("ClassInstanceCreation");
            add_child(creation, type);
            uint32_t end = parse_arguments(creation);
            set_range(creation, kw.range.begin, end);
            return creation;
        }
        if (at("true") || at("false")) return make_leaf("BooleanLiteral", advance());
        if (at("null")) return make_leaf("NullLiteral", advance());
        if (at_kind(LexemeKind::Number)) return make_leaf("NumberLiteral", advance());
        if (at_kind(LexemeKind::String)) return make_leaf("StringLiteral", advance());
        if (at_kind(LexemeKind::Identifier)) return make_leaf("SimpleName", advance());
        fail("expected an expression");
    }

    // ---- flattening ----------------------------------------------------

    Ast build_ast(int root) {
        Ast ast;
        ast.source = std::string(source_);
        std::vector<std::pair<int, int>> stack = {{root, kNoNode}};  // proto id, final parent id
        while (!stack.empty()) {
            auto [proto_id, parent] = stack.back();
            stack.pop_back();
            const ProtoNode& proto = protos_[static_cast<size_t>(proto_id)];
            AstNode node;
            node.id = static_cast<int>(ast.nodes.size());
            node.label = proto.label;
            node.value = proto.value;
            node.range = proto.range;
            node.value_range = proto.value_range;
            node.parent = parent;
            if (parent != kNoNode) ast.nodes[static_cast<size_t>(parent)].children.push_back(node.id);
            ast.nodes.push_back(std::move(node));
            for (auto it = proto.children.rbegin(); it != proto.children.rend(); ++it) {
                stack.push_back({*it, ast.nodes.back().id});
            }
        }
        ast.finalize();
        return ast;
    }
};

}  // namespace

Ast parse_source(std::string_view source) {
    Parser parser(source);
    return parser.parse();
}

}  // namespace astdiff
