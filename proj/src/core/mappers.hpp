#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/ast.hpp"
#include "core/mapping.hpp"

namespace astdiff {

// Normalized edit-distance similarity: 1 - levenshtein(a,b) / max(|a|,|b|).
// Two empty strings are fully similar.
double edit_similarity(std::string_view a, std::string_view b);

// Greedy top-down identical-subtree matching (tallest subtrees first) followed
// by bottom-up dice matching of inner nodes and an in-order recovery pass over
// unmapped descendants of mapped pairs.
NodeMappingSet map_topdown_bottomup(const Ast& src, const Ast& dst, const MapperConfig& cfg);

// Identical-subtree pruning with no height minimum, then leaf matching by
// value similarity, then inner-node matching by dice over mapped leaves.
NodeMappingSet map_leaf_first(const Ast& src, const Ast& dst, const MapperConfig& cfg);

// Partitions both trees by declarations matched on declared-name similarity,
// then matches within each partition's own forest, gating every non-identical
// match on value similarity.
NodeMappingSet map_name_aware(const Ast& src, const Ast& dst, const MapperConfig& cfg);

using MapperFn = NodeMappingSet (*)(const Ast&, const Ast&, const MapperConfig&);

struct MapperEntry {
    std::string name;
    MapperFn fn;
};

// The built-in mappers in canonical order: gt, mtd, ijm.
const std::vector<MapperEntry>& builtin_mappers();

// nullptr when the name is not a built-in mapper.
MapperFn find_mapper(const std::string& name);

}  // namespace astdiff
