#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace astdiff {

// Half-open byte range [begin, end) into the source text.
struct Range {
    uint32_t begin = 0;
    uint32_t end = 0;

    bool contains(const Range& other) const { return begin <= other.begin && other.end <= end; }
    bool contains_offset(uint32_t off) const { return begin <= off && off < end; }
    uint32_t length() const { return end - begin; }
    bool operator==(const Range&) const = default;
};

inline constexpr int kNoNode = -1;

struct AstNode {
    int id = kNoNode;
    std::string label;
    std::string value;  // empty for nodes that carry no value
    Range range;
    int parent = kNoNode;
    std::vector<int> children;
    // Occurrence of `value` inside `range` (equal begin/end when value is empty
    // or does not occur literally in the node's source slice).
    Range value_range;
    // Filled by finalize():
    int depth = 0;        // root has depth 0
    int height = 1;       // leaves have height 1
    int subtree_end = 0;  // ids in this node's subtree form [id, subtree_end]

    bool is_leaf() const { return children.empty(); }
};

enum class StatementKind : uint8_t {
    NonStatement,
    Ordinary,
    Declaration,
    Block,
};

const char* statement_kind_name(StatementKind kind);

// Labels the built-in parser emits for statement nodes, and the label it uses
// for blocks. Interchange documents may override both via their header.
const std::vector<std::string>& default_statement_labels();
const std::string& default_block_label();

class Ast {
public:
    std::string source;
    std::vector<AstNode> nodes;  // pre-order, ids dense: nodes[i].id == i
    std::vector<std::string> statement_labels;
    std::string block_label;

    // Derived per node by finalize():
    std::vector<StatementKind> stmt_kind;
    std::vector<int> enclosing_statement;  // nearest statement ancestor-or-self, else kNoNode

    const AstNode& node(int id) const { return nodes[static_cast<size_t>(id)]; }
    int root() const { return 0; }
    size_t size() const { return nodes.size(); }
    bool is_statement(int id) const { return stmt_kind[static_cast<size_t>(id)] != StatementKind::NonStatement; }
    StatementKind kind(int id) const { return stmt_kind[static_cast<size_t>(id)]; }
    bool is_descendant(int node, int ancestor) const {
        return nodes[static_cast<size_t>(ancestor)].id <= node &&
               node <= nodes[static_cast<size_t>(ancestor)].subtree_end;
    }
    std::string_view text(const Range& r) const {
        return std::string_view(source).substr(r.begin, r.end - r.begin);
    }
    std::string_view node_text(int id) const { return text(node(id).range); }
    std::vector<int> statements() const;
    // 1-based line of the first byte of the node's range.
    uint32_t line_of(int id) const;

    // Validates shape (single root, dense pre-order ids, nested ranges),
    // classifies statements, and fills the derived per-node fields.
    // Throws SchemaError on violations.
    void finalize();
};

// Classifies a label against a statement-label table and block label.
StatementKind classify_label(const std::string& label,
                             const std::vector<std::string>& statement_labels,
                             const std::string& block_label);

}  // namespace astdiff
