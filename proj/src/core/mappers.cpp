#include "core/mappers.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace astdiff {

namespace {

uint64_t hash_mix(uint64_t seed, uint64_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Structural hash per subtree over (label, value, child hashes). Equal
// subtrees hash equally; candidates are still verified node by node.
std::vector<uint64_t> subtree_hashes(const Ast& ast) {
    std::hash<std::string> hs;
    std::vector<uint64_t> h(ast.size(), 0);
    for (size_t i = ast.size(); i-- > 0;) {
        const AstNode& n = ast.nodes[i];
        uint64_t v = hash_mix(hs(n.label), hs(n.value));
        for (int c : n.children) v = hash_mix(v, h[static_cast<size_t>(c)]);
        h[i] = v;
    }
    return h;
}

bool subtrees_identical(const Ast& src, int s, const Ast& dst, int d) {
    const AstNode& a = src.node(s);
    const AstNode& b = dst.node(d);
    if (a.label != b.label || a.value != b.value || a.children.size() != b.children.size()) {
        return false;
    }
    for (size_t i = 0; i < a.children.size(); ++i) {
        if (!subtrees_identical(src, a.children[i], dst, b.children[i])) return false;
    }
    return true;
}

std::vector<int> post_order(const Ast& ast) {
    std::vector<int> order;
    order.reserve(ast.size());
    std::vector<std::pair<int, bool>> stack = {{ast.root(), false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(id);
            continue;
        }
        stack.push_back({id, true});
        const auto& children = ast.node(id).children;
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back({*it, false});
    }
    return order;
}

// Mutable mapping state shared by the mapper phases.
struct Work {
    const Ast& src;
    const Ast& dst;
    std::vector<int> src_to_dst;
    std::vector<int> dst_to_src;
    std::vector<NodePair> pairs;

    Work(const Ast& s, const Ast& d)
        : src(s), dst(d), src_to_dst(s.size(), kNoNode), dst_to_src(d.size(), kNoNode) {}

    bool src_mapped(int s) const { return src_to_dst[static_cast<size_t>(s)] != kNoNode; }
    bool dst_mapped(int d) const { return dst_to_src[static_cast<size_t>(d)] != kNoNode; }
    void map(int s, int d) {
        src_to_dst[static_cast<size_t>(s)] = d;
        dst_to_src[static_cast<size_t>(d)] = s;
        pairs.push_back({s, d});
    }
    bool subtree_unmapped_src(int s) const {
        for (int i = s; i <= src.node(s).subtree_end; ++i) {
            if (src_mapped(i)) return false;
        }
        return true;
    }
    bool subtree_unmapped_dst(int d) const {
        for (int i = d; i <= dst.node(d).subtree_end; ++i) {
            if (dst_mapped(i)) return false;
        }
        return true;
    }
    // Maps two identical subtrees node by node; identical structure makes the
    // pre-order offsets line up.
    void map_subtrees(int s, int d) {
        int count = src.node(s).subtree_end - s;
        for (int k = 0; k <= count; ++k) map(s + k, d + k);
    }
    NodeMappingSet finish() { return NodeMappingSet::build(src, dst, std::move(pairs)); }
};

// Membership filter used by the partition-based mapper; accepts every node for
// the whole-tree mappers.
using NodeFilter = std::function<bool(const Ast&, int)>;

bool accept_all(const Ast&, int) { return true; }

// Matches identical subtrees, tallest first; ties broken by smallest src id
// then smallest dst id. Subtrees must be entirely unmapped on both sides and
// entirely inside the allowed region.
void match_identical_subtrees(Work& w, int min_height, const NodeFilter& src_allowed,
                              const NodeFilter& dst_allowed) {
    std::vector<uint64_t> src_hash = subtree_hashes(w.src);
    std::vector<uint64_t> dst_hash = subtree_hashes(w.dst);
    std::unordered_map<uint64_t, std::vector<int>> dst_buckets;
    int max_height = 0;
    auto region_ok = [](const Ast& ast, int root_id, const NodeFilter& allowed) {
        for (int i = root_id; i <= ast.node(root_id).subtree_end; ++i) {
            if (!allowed(ast, i)) return false;
        }
        return true;
    };
    for (size_t i = 0; i < w.dst.size(); ++i) {
        dst_buckets[dst_hash[i]].push_back(static_cast<int>(i));
        max_height = std::max(max_height, w.dst.node(static_cast<int>(i)).height);
    }
    for (size_t i = 0; i < w.src.size(); ++i) {
        max_height = std::max(max_height, w.src.node(static_cast<int>(i)).height);
    }
    for (int h = max_height; h >= std::max(min_height, 1); --h) {
        for (size_t s = 0; s < w.src.size(); ++s) {
            int sid = static_cast<int>(s);
            if (w.src.node(sid).height != h || w.src_mapped(sid)) continue;
            if (!region_ok(w.src, sid, src_allowed)) continue;
            auto bucket = dst_buckets.find(src_hash[s]);
            if (bucket == dst_buckets.end()) continue;
            for (int did : bucket->second) {
                if (w.dst.node(did).height != h || !w.subtree_unmapped_dst(did)) continue;
                if (!region_ok(w.dst, did, dst_allowed)) continue;
                if (!subtrees_identical(w.src, sid, w.dst, did)) continue;
                w.map_subtrees(sid, did);
                break;
            }
        }
    }
}

void map_roots_if_alike(Work& w) {
    int sr = w.src.root();
    int dr = w.dst.root();
    if (!w.src_mapped(sr) && !w.dst_mapped(dr) &&
        w.src.node(sr).label == w.dst.node(dr).label) {
        w.map(sr, dr);
    }
}

// Dice over mapped proper descendants; when leaves_only is set, only leaf
// descendants enter the numerator and denominator.
double dice_score(const Work& w, int s, int d, bool leaves_only) {
    int src_total = 0;
    int dst_total = 0;
    int common = 0;
    for (int i = s + 1; i <= w.src.node(s).subtree_end; ++i) {
        if (leaves_only && !w.src.node(i).is_leaf()) continue;
        ++src_total;
        int partner = w.src_to_dst[static_cast<size_t>(i)];
        if (partner == kNoNode) continue;
        if (leaves_only && !w.dst.node(partner).is_leaf()) continue;
        if (d < partner && partner <= w.dst.node(d).subtree_end) ++common;
    }
    for (int i = d + 1; i <= w.dst.node(d).subtree_end; ++i) {
        if (leaves_only && !w.dst.node(i).is_leaf()) continue;
        ++dst_total;
    }
    if (src_total + dst_total == 0) return 1.0;
    return 2.0 * common / (src_total + dst_total);
}

// Optional value-similarity gate applied by the partition-based mapper.
bool values_compatible(const Work& w, int s, int d, double threshold, bool gate) {
    if (!gate) return true;
    const std::string& a = w.src.node(s).value;
    const std::string& b = w.dst.node(d).value;
    if (a.empty() && b.empty()) return true;
    return edit_similarity(a, b) >= threshold;
}

// Bottom-up matching of unmapped inner nodes by dice score.
void match_inner_by_dice(Work& w, const MapperConfig& cfg, bool leaves_only,
                         bool value_gate, const NodeFilter& src_allowed,
                         const NodeFilter& dst_allowed) {
    std::unordered_map<std::string, std::vector<int>> dst_by_label;
    for (size_t i = 0; i < w.dst.size(); ++i) {
        int did = static_cast<int>(i);
        if (!w.dst.node(did).is_leaf() && dst_allowed(w.dst, did)) {
            dst_by_label[w.dst.node(did).label].push_back(did);
        }
    }
    for (int sid : post_order(w.src)) {
        if (w.src.node(sid).is_leaf() || w.src_mapped(sid) || !src_allowed(w.src, sid)) continue;
        auto it = dst_by_label.find(w.src.node(sid).label);
        if (it == dst_by_label.end()) continue;
        int best = kNoNode;
        double best_score = 0.0;
        for (int did : it->second) {
            if (w.dst_mapped(did)) continue;
            if (!values_compatible(w, sid, did, cfg.name_similarity_threshold, value_gate)) continue;
            double score = dice_score(w, sid, did, leaves_only);
            if (score >= cfg.dice_threshold && score > best_score) {
                best = did;
                best_score = score;
            }
        }
        if (best != kNoNode) w.map(sid, best);
    }
}

// In-order recovery: for each scope pair, walks both sides' unmapped
// descendants in pre-order and pairs nodes with equal labels front to back.
void match_recovery(Work& w, const MapperConfig& cfg, bool value_gate,
                    const NodeFilter& src_allowed, const NodeFilter& dst_allowed,
                    std::vector<NodePair> mapped) {
    std::sort(mapped.begin(), mapped.end(), [&](const NodePair& a, const NodePair& b) {
        int da = w.src.node(a.src).depth;
        int db = w.src.node(b.src).depth;
        if (da != db) return da > db;
        return a.src < b.src;
    });
    for (const NodePair& pair : mapped) {
        std::vector<int> src_free;
        std::vector<int> dst_free;
        for (int i = pair.src + 1; i <= w.src.node(pair.src).subtree_end; ++i) {
            if (!w.src_mapped(i) && src_allowed(w.src, i)) src_free.push_back(i);
        }
        for (int i = pair.dst + 1; i <= w.dst.node(pair.dst).subtree_end; ++i) {
            if (!w.dst_mapped(i) && dst_allowed(w.dst, i)) dst_free.push_back(i);
        }
        size_t j = 0;
        for (int sid : src_free) {
            if (w.src_mapped(sid)) continue;  // mapped earlier in this same pass
            size_t t = j;
            while (t < dst_free.size() &&
                   (w.dst_mapped(dst_free[t]) ||
                    w.dst.node(dst_free[t]).label != w.src.node(sid).label ||
                    !values_compatible(w, sid, dst_free[t], cfg.name_similarity_threshold,
                                       value_gate))) {
                ++t;
            }
            if (t < dst_free.size()) {
                w.map(sid, dst_free[t]);
                j = t + 1;
            }
        }
    }
}

}  // namespace

double edit_similarity(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    std::vector<size_t> prev(b.size() + 1);
    std::vector<size_t> cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
        }
        std::swap(prev, cur);
    }
    double distance = static_cast<double>(prev[b.size()]);
    return 1.0 - distance / static_cast<double>(std::max(a.size(), b.size()));
}

NodeMappingSet map_topdown_bottomup(const Ast& src, const Ast& dst, const MapperConfig& cfg) {
    Work w(src, dst);
    match_identical_subtrees(w, cfg.min_subtree_height, accept_all, accept_all);
    map_roots_if_alike(w);
    match_inner_by_dice(w, cfg, /*leaves_only=*/false, /*value_gate=*/false, accept_all, accept_all);
    match_recovery(w, cfg, /*value_gate=*/false, accept_all, accept_all, w.pairs);
    return w.finish();
}

NodeMappingSet map_leaf_first(const Ast& src, const Ast& dst, const MapperConfig& cfg) {
    Work w(src, dst);
    match_identical_subtrees(w, 1, accept_all, accept_all);
    // Leaf matching by value similarity.
    for (size_t s = 0; s < src.size(); ++s) {
        int sid = static_cast<int>(s);
        if (!src.node(sid).is_leaf() || w.src_mapped(sid)) continue;
        int best = kNoNode;
        double best_score = 0.0;
        for (size_t d = 0; d < dst.size(); ++d) {
            int did = static_cast<int>(d);
            if (!dst.node(did).is_leaf() || w.dst_mapped(did)) continue;
            if (dst.node(did).label != src.node(sid).label) continue;
            double score = edit_similarity(src.node(sid).value, dst.node(did).value);
            if (score >= cfg.name_similarity_threshold && score > best_score) {
                best = did;
                best_score = score;
            }
        }
        if (best != kNoNode) w.map(sid, best);
    }
    map_roots_if_alike(w);
    match_inner_by_dice(w, cfg, /*leaves_only=*/true, /*value_gate=*/false, accept_all, accept_all);
    return w.finish();
}

namespace {

// First SimpleName value found in pre-order within the declaration's own
// region (nested declarations are opaque).
std::string declaration_name(const Ast& ast, int decl) {
    for (int i = decl + 1; i <= ast.node(decl).subtree_end;) {
        const AstNode& n = ast.node(i);
        if (ast.kind(i) == StatementKind::Declaration) {
            i = n.subtree_end + 1;
            continue;
        }
        if (n.label == "SimpleName") return n.value;
        ++i;
    }
    return "";
}

// Declarations directly inside the given node's region (not nested into a
// closer declaration).
std::vector<int> child_declarations(const Ast& ast, int parent) {
    std::vector<int> out;
    for (int i = parent + 1; i <= ast.node(parent).subtree_end;) {
        if (ast.kind(i) == StatementKind::Declaration) {
            out.push_back(i);
            i = ast.node(i).subtree_end + 1;
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace

NodeMappingSet map_name_aware(const Ast& src, const Ast& dst, const MapperConfig& cfg) {
    Work w(src, dst);
    map_roots_if_alike(w);

    // Pair declarations level by level, top down, by declared-name similarity.
    std::vector<NodePair> partitions;
    std::vector<NodePair> frontier = {{src.root(), dst.root()}};
    partitions.push_back(frontier.front());
    while (!frontier.empty()) {
        NodePair scope = frontier.back();
        frontier.pop_back();
        std::vector<int> src_decls = child_declarations(src, scope.src);
        std::vector<int> dst_decls = child_declarations(dst, scope.dst);
        std::vector<bool> taken(dst_decls.size(), false);
        for (int a : src_decls) {
            int best = -1;
            double best_score = 0.0;
            for (size_t k = 0; k < dst_decls.size(); ++k) {
                if (taken[k] || dst.node(dst_decls[k]).label != src.node(a).label) continue;
                double score =
                    edit_similarity(declaration_name(src, a), declaration_name(dst, dst_decls[k]));
                if (score >= cfg.name_similarity_threshold && score > best_score) {
                    best = static_cast<int>(k);
                    best_score = score;
                }
            }
            if (best >= 0) {
                taken[static_cast<size_t>(best)] = true;
                NodePair matched{a, dst_decls[static_cast<size_t>(best)]};
                w.map(matched.src, matched.dst);
                partitions.push_back(matched);
                frontier.push_back(matched);
            }
        }
    }

    // Match each partition's own forest, never crossing into nested
    // declarations and gating non-identical matches on value similarity.
    for (const NodePair& scope : partitions) {
        NodeFilter src_allowed = [&src, scope](const Ast&, int id) {
            if (id == scope.src || !src.is_descendant(id, scope.src)) return false;
            for (int a = id; a != scope.src; a = src.node(a).parent) {
                if (src.kind(a) == StatementKind::Declaration) return false;
            }
            return true;
        };
        NodeFilter dst_allowed = [&dst, scope](const Ast&, int id) {
            if (id == scope.dst || !dst.is_descendant(id, scope.dst)) return false;
            for (int a = id; a != scope.dst; a = dst.node(a).parent) {
                if (dst.kind(a) == StatementKind::Declaration) return false;
            }
            return true;
        };
        match_identical_subtrees(w, cfg.min_subtree_height, src_allowed, dst_allowed);
        match_inner_by_dice(w, cfg, /*leaves_only=*/false, /*value_gate=*/true, src_allowed,
                            dst_allowed);
        std::vector<NodePair> scope_pairs = {scope};
        for (const NodePair& p : w.pairs) {
            if (src_allowed(src, p.src) && dst_allowed(dst, p.dst)) scope_pairs.push_back(p);
        }
        match_recovery(w, cfg, /*value_gate=*/true, src_allowed, dst_allowed,
                       std::move(scope_pairs));
    }
    return w.finish();
}

const std::vector<MapperEntry>& builtin_mappers() {
    static const std::vector<MapperEntry> entries = {
        {"gt", map_topdown_bottomup},
        {"mtd", map_leaf_first},
        {"ijm", map_name_aware},
    };
    return entries;
}

MapperFn find_mapper(const std::string& name) {
    for (const MapperEntry& e : builtin_mappers()) {
        if (e.name == name) return e.fn;
    }
    return nullptr;
}

}  // namespace astdiff
