#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "core/ast.hpp"
#include "core/errors.hpp"
#include "core/interchange.hpp"
#include "core/parser.hpp"
#include "core/source_lexer.hpp"
#include "core/tokens.hpp"
#include "test_support.hpp"

using namespace astdiff;

namespace {

std::vector<std::string> lex_texts(std::string_view source) {
    std::vector<std::string> out;
    for (const Lexeme& lx : lex_source(source)) out.push_back(lx.text);
    return out;
}

std::vector<std::string> labels_preorder(const Ast& ast) {
    std::vector<std::string> out;
    for (const AstNode& n : ast.nodes) out.push_back(n.label);
    return out;
}

}  // namespace

TEST_CASE("lexer splits words, numbers, strings, and punctuation") {
    auto lexemes = lex_source("int x = 42; String s = \"a\\\"b\";");
    REQUIRE(lexemes.size() == 10);
    CHECK(lexemes[0].kind == LexemeKind::Keyword);
    CHECK(lexemes[0].text == "int");
    CHECK(lexemes[1].kind == LexemeKind::Identifier);
    CHECK(lexemes[1].text == "x");
    CHECK(lexemes[2].kind == LexemeKind::Punct);
    CHECK(lexemes[3].kind == LexemeKind::Number);
    CHECK(lexemes[3].text == "42");
    CHECK(lexemes[5].text == "String");
    CHECK(lexemes[8].kind == LexemeKind::String);
    CHECK(lexemes[8].text == "\"a\\\"b\"");
    CHECK(lexemes[0].range.begin == 0);
    CHECK(lexemes[0].range.end == 3);
    CHECK(lexemes[1].line == 1);
    CHECK(lexemes[1].column == 5);
}

TEST_CASE("lexer takes the longest punctuation first") {
    CHECK(lex_texts("a >= b") == std::vector<std::string>{"a", ">=", "b"});
    CHECK(lex_texts("a == b") == std::vector<std::string>{"a", "==", "b"});
    CHECK(lex_texts("i++") == std::vector<std::string>{"i", "++"});
    CHECK(lex_texts("a && b || c") == std::vector<std::string>{"a", "&&", "b", "||", "c"});
    CHECK(lex_texts("x<=y") == std::vector<std::string>{"x", "<=", "y"});
    CHECK(lex_texts("a<b>c") == std::vector<std::string>{"a", "<", "b", ">", "c"});
}

TEST_CASE("lexer skips comments and counts lines") {
    auto lexemes = lex_source("a // trailing\n/* block\ncomment */ b");
    REQUIRE(lexemes.size() == 2);
    CHECK(lexemes[0].text == "a");
    CHECK(lexemes[1].text == "b");
    CHECK(lexemes[1].line == 3);
}

TEST_CASE("lexer rejects malformed input") {
    CHECK_THROWS_AS(lex_source("\"unterminated"), SyntaxError);
    CHECK_THROWS_AS(lex_source("/* never closed"), SyntaxError);
    CHECK_THROWS_AS(lex_source("a # b"), SyntaxError);
    try {
        lex_source("a\n  #");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("word-like classification drives value-token eligibility") {
    CHECK(is_word_like("abc"));
    CHECK(is_word_like("42"));
    CHECK(is_word_like("\"str\""));
    CHECK(is_word_like("_x"));
    CHECK_FALSE(is_word_like("+"));
    CHECK_FALSE(is_word_like("("));
}

TEST_CASE("parser builds the field-and-method shape") {
    Ast ast = ts::load_golden("g1_motivating", "before");
    CHECK(labels_preorder(ast) ==
          std::vector<std::string>{"CompilationUnit", "TypeDeclaration", "Modifier", "SimpleName",
                                   "FieldDeclaration", "ParameterizedType",
                                   "VariableDeclarationFragment", "SimpleName"});
    int pt = ts::find_node(ast, "ParameterizedType");
    REQUIRE(pt != kNoNode);
    CHECK(ast.node(pt).is_leaf());
    CHECK(ast.node(pt).value == "HashMap<Integer,Integer>");
    CHECK(ast.node_text(pt) == "HashMap<Integer,Integer>");
    int fd = ts::find_node(ast, "FieldDeclaration");
    std::string fd_text{ast.node_text(fd)};
    CHECK(fd_text == "HashMap<Integer,Integer> portMapping;");
    CHECK(ast.kind(fd) == StatementKind::Declaration);
    CHECK(ast.kind(ts::find_node(ast, "TypeDeclaration")) == StatementKind::Declaration);
}

TEST_CASE("parser handles parameters, returns, and control flow") {
    Ast ast = parse_source(
        "class A {\n"
        "    int f(int a, String b) {\n"
        "        if (a > 0) {\n"
        "            a = a + 1;\n"
        "        }\n"
        "        for (int i = 0; i < a; i++) {\n"
        "            a = a - 1;\n"
        "        }\n"
        "        return a;\n"
        "    }\n"
        "}\n");
    int md = ts::find_node(ast, "MethodDeclaration");
    REQUIRE(md != kNoNode);
    const AstNode& method = ast.node(md);
    REQUIRE(method.children.size() == 5);
    CHECK(ast.node(method.children[0]).label == "PrimitiveType");
    CHECK(ast.node(method.children[1]).value == "f");
    CHECK(ast.node(method.children[2]).label == "SingleVariableDeclaration");
    CHECK(ast.node(method.children[3]).label == "SingleVariableDeclaration");
    CHECK(ast.node(method.children[4]).label == "Block");

    int param = method.children[2];
    REQUIRE(ast.node(param).children.size() == 2);
    CHECK(ast.node(ast.node(param).children[0]).label == "PrimitiveType");
    CHECK(ast.node(ast.node(param).children[1]).value == "a");
    CHECK(ast.node(ast.node(ts::find_node(ast, "SingleVariableDeclaration", "", 1)).children[0])
              .label == "SimpleType");

    int ifs = ts::find_node(ast, "IfStatement");
    REQUIRE(ifs != kNoNode);
    CHECK(ast.kind(ifs) == StatementKind::Ordinary);
    int fors = ts::find_node(ast, "ForStatement");
    REQUIRE(fors != kNoNode);
    CHECK(ast.node(ast.node(fors).children[0]).label == "VariableDeclarationExpression");
    int ret = ts::find_node(ast, "ReturnStatement");
    REQUIRE(ret != kNoNode);
    CHECK(ast.node_text(ret) == "return a;");
    int es = ts::find_node(ast, "ExpressionStatement");
    REQUIRE(es != kNoNode);
    CHECK(ast.node_text(es) == "a = a + 1;");
}

TEST_CASE("parser nests infix expressions by precedence, left to right") {
    Ast sum = parse_source("class A { void m() { x = a + b + c; } }");
    int outer = ts::find_node(sum, "InfixExpression");
    REQUIRE(outer != kNoNode);
    const AstNode& top = sum.node(outer);
    REQUIRE(top.children.size() == 2);
    CHECK(sum.node(top.children[0]).label == "InfixExpression");
    CHECK(sum.node(top.children[1]).value == "c");

    Ast mixed = parse_source("class A { void m() { x = a + b * c; } }");
    int plus = ts::find_node(mixed, "InfixExpression");
    const AstNode& plus_node = mixed.node(plus);
    CHECK(mixed.node(plus_node.children[0]).value == "a");
    CHECK(mixed.node(plus_node.children[1]).label == "InfixExpression");
}

TEST_CASE("parser covers calls, creations, and unary forms") {
    Ast ast = parse_source(
        "class A { void m() { obj.call(x, 1); p = new Point(2); q = !done; r = (a + b); } }");
    int call = ts::find_node(ast, "MethodInvocation");
    REQUIRE(call != kNoNode);
    const AstNode& invocation = ast.node(call);
    REQUIRE(invocation.children.size() == 4);
    CHECK(ast.node(invocation.children[0]).value == "obj");
    CHECK(ast.node(invocation.children[1]).value == "call");
    CHECK(ast.node(invocation.children[3]).label == "NumberLiteral");
    int creation = ts::find_node(ast, "ClassInstanceCreation");
    REQUIRE(creation != kNoNode);
    CHECK(ast.node(ast.node(creation).children[0]).label == "SimpleType");
    CHECK(ts::find_node(ast, "PrefixExpression") != kNoNode);
    CHECK(ts::find_node(ast, "ParenthesizedExpression") != kNoNode);
}

TEST_CASE("parser reports syntax errors with positions") {
    CHECK_THROWS_AS(parse_source("class A { void m( { } }"), SyntaxError);
    CHECK_THROWS_AS(parse_source("class A { void m() { x = ; } }"), SyntaxError);
    CHECK_THROWS_AS(parse_source("class"), SyntaxError);
    try {
        parse_source("class A { void m() { x = ; } }");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() >= 1);
        CHECK(std::string(e.what()).size() > 0);
    }
}

TEST_CASE("interchange round-trips a parsed tree") {
    Ast ast = ts::load_golden("g1_motivating", "after");
    Ast back = load_ast(save_ast(ast));
    REQUIRE(back.nodes.size() == ast.nodes.size());
    for (size_t i = 0; i < ast.nodes.size(); ++i) {
        const AstNode& a = ast.nodes[i];
        const AstNode& b = back.nodes[i];
        CHECK(a.label == b.label);
        CHECK(a.value == b.value);
        CHECK(a.range.begin == b.range.begin);
        CHECK(a.range.end == b.range.end);
        CHECK(a.children == b.children);
        CHECK(a.parent == b.parent);
    }
    CHECK(back.source == ast.source);
    CHECK(back.statement_labels == ast.statement_labels);
    CHECK(back.block_label == ast.block_label);
}

TEST_CASE("interchange rejects malformed documents") {
    CHECK_THROWS_AS(load_ast("not json"), SchemaError);
    CHECK_THROWS_AS(load_ast("{\"nodes\": []}"), SchemaError);
    CHECK_THROWS_AS(load_ast("{\"header\": {\"format_version\": 99}, \"nodes\": []}"), SchemaError);
    CHECK_THROWS_AS(
        load_ast("{\"header\": {\"format_version\": 1}, \"nodes\": [], \"source\": \"\"}"),
        SchemaError);
    // Node range past the end of the source.
    CHECK_THROWS_AS(
        load_ast("{\"header\": {\"format_version\": 1}, \"nodes\": "
                 "[{\"id\": 0, \"label\": \"X\", \"start\": 0, \"end\": 5}], \"source\": \"ab\"}"),
        SchemaError);
    // Duplicate node id.
    CHECK_THROWS_AS(
        load_ast("{\"header\": {\"format_version\": 1}, \"nodes\": "
                 "[{\"id\": 0, \"label\": \"X\", \"start\": 0, \"end\": 2, \"children\": []}, "
                 "{\"id\": 0, \"label\": \"Y\", \"start\": 0, \"end\": 1, \"children\": []}], "
                 "\"source\": \"ab\"}"),
        SchemaError);
}

TEST_CASE("interchange locates the first occurrence of a value") {
    std::string doc =
        "{\"header\": {\"format_version\": 1}, \"nodes\": "
        "[{\"id\": 0, \"label\": \"Root\", \"value\": \"a\", \"start\": 0, \"end\": 5, "
        "\"children\": []}], \"source\": \"b a a\"}";
    Ast ast = load_ast(doc);
    CHECK(ast.nodes[0].value_range.begin == 2);
    CHECK(ast.nodes[0].value_range.end == 3);
}

TEST_CASE("finalize validates tree structure") {
    auto make_leaf = [](int id, const std::string& label, uint32_t b, uint32_t e) {
        AstNode n;
        n.id = id;
        n.label = label;
        n.range = {b, e};
        return n;
    };
    {
        Ast ast;
        ast.source = "ab";
        ast.nodes.push_back(make_leaf(0, "A", 0, 2));
        ast.nodes.push_back(make_leaf(1, "B", 0, 1));
        CHECK_THROWS_WITH_AS(ast.finalize(), "multiple roots", SchemaError);
    }
    {
        Ast ast;
        ast.source = "ab";
        ast.nodes.push_back(make_leaf(0, "A", 0, 2));
        ast.nodes.push_back(make_leaf(1, "B", 0, 4));
        ast.nodes[0].children = {1};
        ast.nodes[1].parent = 0;
        CHECK_THROWS_AS(ast.finalize(), SchemaError);
    }
    {
        // Child not reachable in pre-order position: ids out of order.
        Ast ast;
        ast.source = "abcd";
        ast.nodes.push_back(make_leaf(0, "A", 0, 4));
        ast.nodes.push_back(make_leaf(1, "B", 2, 3));
        ast.nodes.push_back(make_leaf(2, "C", 0, 1));
        ast.nodes[0].children = {2, 1};
        ast.nodes[1].parent = 0;
        ast.nodes[2].parent = 0;
        CHECK_THROWS_AS(ast.finalize(), SchemaError);
    }
    {
        Ast ast;
        CHECK_THROWS_WITH_AS(ast.finalize(), "empty node list", SchemaError);
    }
}

TEST_CASE("finalize computes depth, height, statement links, and subtree spans") {
    Ast ast = ts::load_golden("g3_nit5v4", "before");
    int cu = 0;
    CHECK(ast.node(cu).depth == 0);
    CHECK(ast.node(cu).subtree_end == static_cast<int>(ast.nodes.size()) - 1);
    int es = ts::find_node(ast, "ExpressionStatement");
    int total = ts::find_node(ast, "SimpleName", "total");
    CHECK(ast.node(total).height == 1);
    CHECK(ast.enclosing_statement[static_cast<size_t>(total)] == es);
    CHECK(ast.enclosing_statement[static_cast<size_t>(es)] == es);
    int block = ts::find_node(ast, "Block");
    CHECK(ast.enclosing_statement[static_cast<size_t>(block)] == block);
    CHECK(ast.is_descendant(total, es));
    CHECK_FALSE(ast.is_descendant(es, total));
    auto stmts = ast.statements();
    CHECK(stmts == std::vector<int>{1, 3, 6, 7});
    CHECK(ast.line_of(es) == 1);
}

TEST_CASE("statement labels classify against the configured table") {
    const auto& labels = default_statement_labels();
    const std::string& block = default_block_label();
    CHECK(classify_label("Block", labels, block) == StatementKind::Block);
    CHECK(classify_label("TypeDeclaration", labels, block) == StatementKind::Declaration);
    CHECK(classify_label("FieldDeclaration", labels, block) == StatementKind::Declaration);
    CHECK(classify_label("ExpressionStatement", labels, block) == StatementKind::Ordinary);
    CHECK(classify_label("IfStatement", labels, block) == StatementKind::Ordinary);
    CHECK(classify_label("SimpleName", labels, block) == StatementKind::NonStatement);
    CHECK(classify_label("MethodDeclaration", {"MethodDeclaration"}, "B") ==
          StatementKind::Declaration);
    CHECK(classify_label("MethodDeclaration", {}, "MethodDeclaration") == StatementKind::Block);
}

TEST_CASE("tokenize assigns deepest nodes, partitions, and kinds") {
    Ast ast = ts::load_golden("g1_motivating", "before");
    TokenList tokens = tokenize(ast);

    int hash_map = ts::find_token(tokens, "HashMap");
    REQUIRE(hash_map >= 0);
    int pt = ts::find_node(ast, "ParameterizedType");
    CHECK(tokens.token(hash_map).drn == pt);
    CHECK(tokens.token(hash_map).in_node_value);
    CHECK(token_kind_name(tokens.token(hash_map).kind) == "TypeName");

    int angle = ts::find_token(tokens, "<");
    REQUIRE(angle >= 0);
    CHECK(tokens.token(angle).drn == pt);
    CHECK_FALSE(tokens.token(angle).in_node_value);
    CHECK(token_kind_name(tokens.token(angle).kind) == "Structural(ParameterizedType)");

    CHECK(tokens.value_tokens_of[static_cast<size_t>(pt)].size() == 3);
    CHECK(tokens.other_tokens_of[static_cast<size_t>(pt)].size() == 3);

    int class_name = ts::find_token(tokens, "PublishedAddressPolicy");
    CHECK(token_kind_name(tokens.token(class_name).kind) == "DeclarationName");
    int field_name = ts::find_token(tokens, "portMapping");
    CHECK(token_kind_name(tokens.token(field_name).kind) == "VariableName");
    int kw = ts::find_token(tokens, "class");
    CHECK(token_kind_name(tokens.token(kw).kind) == "Structural(TypeDeclaration)");

    int fd = ts::find_node(ast, "FieldDeclaration");
    CHECK(tokens.enclosing_statement[static_cast<size_t>(hash_map)] == fd);
    CHECK(tokens.enclosing_statement[static_cast<size_t>(kw)] ==
          ts::find_node(ast, "TypeDeclaration"));

    Ast call = ts::load_golden("g6_val_getbytes", "before");
    TokenList call_tokens = tokenize(call);
    CHECK(token_kind_name(call_tokens.token(ts::find_token(call_tokens, "getBytes")).kind) ==
          "MethodName");
    CHECK(token_kind_name(call_tokens.token(ts::find_token(call_tokens, "data")).kind) ==
          "VariableName");
}

TEST_CASE("token dump emits one tab-separated line per token") {
    Ast ast = parse_source("class A { }");
    std::string dump = dump_tokens(ast);
    CHECK(dump ==
          "0\tStructural(TypeDeclaration)\tclass\t[0,5)\t1\n"
          "1\tDeclarationName\tA\t[6,7)\t2\n"
          "2\tStructural(TypeDeclaration)\t{\t[8,9)\t1\n"
          "3\tStructural(TypeDeclaration)\t}\t[10,11)\t1\n");
}
