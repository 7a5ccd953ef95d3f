#include "core/interchange.hpp"

#include <json.hpp>

#include "core/errors.hpp"

namespace astdiff {

namespace {

using ordered_json = nlohmann::ordered_json;

// Locates the literal occurrence of a node's value inside its source slice.
// Nodes whose value does not occur (or is empty) get an empty value range.
Range locate_value(const std::string& source, const Range& range, const std::string& value) {
    if (value.empty()) return {range.begin, range.begin};
    std::string_view slice = std::string_view(source).substr(range.begin, range.length());
    size_t at = slice.find(value);
    if (at == std::string_view::npos) return {range.begin, range.begin};
    uint32_t begin = range.begin + static_cast<uint32_t>(at);
    return {begin, begin + static_cast<uint32_t>(value.size())};
}

}  // namespace

Ast load_ast(std::string_view json_text) {
    ordered_json doc = ordered_json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("invalid JSON in AST document");
    if (!doc.is_object() || !doc.contains("header") || !doc.contains("nodes")) {
        throw SchemaError("AST document must contain header and nodes");
    }
    const auto& header = doc["header"];
    if (!header.is_object() || header.value("format_version", 0) != kAstFormatVersion) {
        throw SchemaError("unsupported AST format_version");
    }

    Ast ast;
    ast.source = doc.value("source", std::string());
    if (header.contains("statement_labels")) {
        for (const auto& l : header["statement_labels"]) {
            if (!l.is_string()) throw SchemaError("statement_labels must be strings");
            ast.statement_labels.push_back(l.get<std::string>());
        }
    }
    ast.block_label = header.value("block_label", std::string());

    const auto& nodes = doc["nodes"];
    if (!nodes.is_array() || nodes.empty()) throw SchemaError("nodes must be a non-empty array");
    ast.nodes.resize(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    for (const auto& nj : nodes) {
        if (!nj.is_object() || !nj.contains("id") || !nj.contains("label") ||
            !nj.contains("start") || !nj.contains("end")) {
            throw SchemaError("node entries need id, label, start, end");
        }
        int id = nj["id"].get<int>();
        if (id < 0 || id >= static_cast<int>(nodes.size())) throw SchemaError("node id out of bounds");
        if (seen[static_cast<size_t>(id)]) throw SchemaError("duplicate node id " + std::to_string(id));
        seen[static_cast<size_t>(id)] = true;
        AstNode& node = ast.nodes[static_cast<size_t>(id)];
        node.id = id;
        node.label = nj["label"].get<std::string>();
        node.value = nj.value("value", std::string());
        node.range.begin = nj["start"].get<uint32_t>();
        node.range.end = nj["end"].get<uint32_t>();
        if (node.range.end < node.range.begin || node.range.end > ast.source.size()) {
            throw SchemaError("node range outside source at node " + std::to_string(id));
        }
        if (nj.contains("children")) {
            for (const auto& c : nj["children"]) node.children.push_back(c.get<int>());
        }
        node.value_range = locate_value(ast.source, node.range, node.value);
    }
    for (AstNode& node : ast.nodes) {
        for (int c : node.children) {
            if (c < 0 || c >= static_cast<int>(ast.nodes.size())) throw SchemaError("child id out of bounds");
            ast.nodes[static_cast<size_t>(c)].parent = node.id;
        }
    }
    ast.finalize();
    return ast;
}

std::string save_ast(const Ast& ast) {
    ordered_json doc;
    doc["header"] = {
        {"format_version", kAstFormatVersion},
        {"statement_labels", ast.statement_labels},
        {"block_label", ast.block_label},
    };
    ordered_json nodes = ordered_json::array();
    for (const AstNode& node : ast.nodes) {
        ordered_json nj;
        nj["id"] = node.id;
        nj["label"] = node.label;
        if (!node.value.empty()) nj["value"] = node.value;
        nj["start"] = node.range.begin;
        nj["end"] = node.range.end;
        nj["children"] = node.children;
        nodes.push_back(std::move(nj));
    }
    doc["nodes"] = std::move(nodes);
    doc["source"] = ast.source;
    return doc.dump(2) + "\n";
}

}  // namespace astdiff
