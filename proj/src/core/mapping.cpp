#include "core/mapping.hpp"

#include <algorithm>

#include <json.hpp>

#include "core/errors.hpp"

namespace astdiff {

NodeMappingSet NodeMappingSet::build(const Ast& src, const Ast& dst, std::vector<NodePair> pairs) {
    NodeMappingSet set;
    set.src_to_dst_.assign(src.size(), kNoNode);
    set.dst_to_src_.assign(dst.size(), kNoNode);
    for (const NodePair& p : pairs) {
        if (p.src < 0 || p.src >= static_cast<int>(src.size()) || p.dst < 0 ||
            p.dst >= static_cast<int>(dst.size())) {
            throw SchemaError("mapping pair out of bounds");
        }
        if (set.src_to_dst_[static_cast<size_t>(p.src)] != kNoNode) {
            throw SchemaError("src mapped twice: " + std::to_string(p.src));
        }
        if (set.dst_to_src_[static_cast<size_t>(p.dst)] != kNoNode) {
            throw SchemaError("dst mapped twice: " + std::to_string(p.dst));
        }
        if (src.node(p.src).label != dst.node(p.dst).label) {
            throw SchemaError("label mismatch at pair (" + std::to_string(p.src) + "," +
                              std::to_string(p.dst) + ")");
        }
        set.src_to_dst_[static_cast<size_t>(p.src)] = p.dst;
        set.dst_to_src_[static_cast<size_t>(p.dst)] = p.src;
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const NodePair& a, const NodePair& b) { return a.src < b.src; });
    set.pairs_ = std::move(pairs);
    return set;
}

NodeMappingSet load_mapping(const Ast& src, const Ast& dst, std::string_view json_text,
                            std::string* algorithm_out) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("invalid JSON in mapping document");
    if (!doc.is_object() || doc.value("format_version", 0) != kMappingFormatVersion) {
        throw SchemaError("unsupported mapping format_version");
    }
    if (algorithm_out) *algorithm_out = doc.value("algorithm", std::string());
    std::vector<NodePair> pairs;
    if (doc.contains("pairs")) {
        if (!doc["pairs"].is_array()) throw SchemaError("pairs must be an array");
        for (const auto& pj : doc["pairs"]) {
            if (!pj.is_object() || !pj.contains("src") || !pj.contains("dst")) {
                throw SchemaError("pair entries need src and dst");
            }
            pairs.push_back({pj["src"].get<int>(), pj["dst"].get<int>()});
        }
    }
    return NodeMappingSet::build(src, dst, std::move(pairs));
}

std::string save_mapping(const NodeMappingSet& mapping, const std::string& algorithm) {
    nlohmann::ordered_json doc;
    doc["format_version"] = kMappingFormatVersion;
    doc["algorithm"] = algorithm;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const NodePair& p : mapping.pairs()) {
        pairs.push_back({{"src", p.src}, {"dst", p.dst}});
    }
    doc["pairs"] = std::move(pairs);
    return doc.dump(2) + "\n";
}

}  // namespace astdiff
