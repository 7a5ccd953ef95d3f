#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/ast.hpp"

namespace astdiff {

inline constexpr int kMappingFormatVersion = 1;

struct NodePair {
    int src = kNoNode;
    int dst = kNoNode;
    bool operator==(const NodePair&) const = default;
};

// A validated node mapping between two ASTs: injective in both directions,
// label-preserving, stored sorted by src id.
class NodeMappingSet {
public:
    NodeMappingSet() = default;

    // Validates and indexes the pairs. Throws SchemaError on out-of-bounds
    // ids, duplicate endpoints, or label mismatches.
    static NodeMappingSet build(const Ast& src, const Ast& dst, std::vector<NodePair> pairs);

    const std::vector<NodePair>& pairs() const { return pairs_; }
    int dst_of(int src) const {
        return src >= 0 && src < static_cast<int>(src_to_dst_.size()) ? src_to_dst_[static_cast<size_t>(src)] : kNoNode;
    }
    int src_of(int dst) const {
        return dst >= 0 && dst < static_cast<int>(dst_to_src_.size()) ? dst_to_src_[static_cast<size_t>(dst)] : kNoNode;
    }
    bool maps(int src, int dst) const { return src != kNoNode && dst_of(src) == dst && dst != kNoNode; }
    bool has_src(int src) const { return dst_of(src) != kNoNode; }
    bool has_dst(int dst) const { return src_of(dst) != kNoNode; }
    size_t size() const { return pairs_.size(); }

private:
    std::vector<NodePair> pairs_;
    std::vector<int> src_to_dst_;
    std::vector<int> dst_to_src_;
};

struct MapperConfig {
    int min_subtree_height = 2;
    double dice_threshold = 0.5;
    double name_similarity_threshold = 0.6;
};

// Reads a mapping interchange document ({format_version, algorithm, pairs})
// and validates it against the two ASTs. Throws SchemaError on violations.
// When algorithm_out is non-null it receives the document's algorithm name.
NodeMappingSet load_mapping(const Ast& src, const Ast& dst, std::string_view json_text,
                            std::string* algorithm_out = nullptr);

std::string save_mapping(const NodeMappingSet& mapping, const std::string& algorithm);

}  // namespace astdiff
