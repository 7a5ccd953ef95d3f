#include "core/ast.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace astdiff {

const char* statement_kind_name(StatementKind kind) {
    switch (kind) {
        case StatementKind::NonStatement: return "NonStatement";
        case StatementKind::Ordinary: return "Ordinary";
        case StatementKind::Declaration: return "Declaration";
        case StatementKind::Block: return "Block";
    }
    return "NonStatement";
}

const std::vector<std::string>& default_statement_labels() {
    static const std::vector<std::string> labels = {
        "TypeDeclaration",
        "FieldDeclaration",
        "MethodDeclaration",
        "VariableDeclarationStatement",
        "ExpressionStatement",
        "IfStatement",
        "ForStatement",
        "ReturnStatement",
    };
    return labels;
}

const std::string& default_block_label() {
    static const std::string label = "Block";
    return label;
}

StatementKind classify_label(const std::string& label,
                             const std::vector<std::string>& statement_labels,
                             const std::string& block_label) {
    if (label == block_label) return StatementKind::Block;
    if (std::find(statement_labels.begin(), statement_labels.end(), label) ==
        statement_labels.end()) {
        return StatementKind::NonStatement;
    }
    if (label.ends_with("Declaration")) return StatementKind::Declaration;
    return StatementKind::Ordinary;
}

std::vector<int> Ast::statements() const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (stmt_kind[i] != StatementKind::NonStatement) out.push_back(static_cast<int>(i));
    }
    return out;
}

uint32_t Ast::line_of(int id) const {
    uint32_t begin = node(id).range.begin;
    uint32_t line = 1;
    for (uint32_t i = 0; i < begin && i < source.size(); ++i) {
        if (source[i] == '\n') ++line;
    }
    return line;
}

void Ast::finalize() {
    if (nodes.empty()) throw SchemaError("empty node list");
    int roots = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const AstNode& n = nodes[i];
        if (n.id != static_cast<int>(i)) throw SchemaError("node ids must be dense and in order");
        if (n.parent == kNoNode) ++roots;
        for (int c : n.children) {
            if (c < 0 || c >= static_cast<int>(nodes.size())) throw SchemaError("child id out of bounds");
            if (nodes[static_cast<size_t>(c)].parent != n.id) throw SchemaError("parent mismatch at node " + std::to_string(c));
            if (!n.range.contains(nodes[static_cast<size_t>(c)].range)) {
                throw SchemaError("range nesting violation at node " + std::to_string(c));
            }
        }
    }
    if (roots > 1) throw SchemaError("multiple roots");
    if (roots == 0 || nodes[0].parent != kNoNode) throw SchemaError("root must be node 0");

    // Verify the node array is the pre-order walk of the tree.
    std::vector<int> stack = {0};
    int expected = 0;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        if (id != expected++) throw SchemaError("node ids must be dense and in order");
        const auto& children = nodes[static_cast<size_t>(id)].children;
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
    }
    if (expected != static_cast<int>(nodes.size())) throw SchemaError("unreachable nodes present");

    if (statement_labels.empty()) statement_labels = default_statement_labels();
    if (block_label.empty()) block_label = default_block_label();

    stmt_kind.assign(nodes.size(), StatementKind::NonStatement);
    enclosing_statement.assign(nodes.size(), kNoNode);
    for (size_t i = 0; i < nodes.size(); ++i) {
        stmt_kind[i] = classify_label(nodes[i].label, statement_labels, block_label);
        AstNode& n = nodes[i];
        n.depth = n.parent == kNoNode ? 0 : nodes[static_cast<size_t>(n.parent)].depth + 1;
        if (stmt_kind[i] != StatementKind::NonStatement) {
            enclosing_statement[i] = n.id;
        } else if (n.parent != kNoNode) {
            enclosing_statement[i] = enclosing_statement[static_cast<size_t>(n.parent)];
        }
    }
    for (size_t i = nodes.size(); i-- > 0;) {
        AstNode& n = nodes[i];
        n.height = 1;
        n.subtree_end = n.id;
        for (int c : n.children) {
            n.height = std::max(n.height, nodes[static_cast<size_t>(c)].height + 1);
            n.subtree_end = std::max(n.subtree_end, nodes[static_cast<size_t>(c)].subtree_end);
        }
    }
}

}  // namespace astdiff
