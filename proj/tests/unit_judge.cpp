#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core/judge.hpp"
#include "core/mappers.hpp"
#include "core/measures.hpp"
#include "core/refine.hpp"
#include "test_support.hpp"

using namespace astdiff;

namespace {

using Key = std::tuple<int, int, int>;

Key stmt_src(int id) { return {0, 0, id}; }
Key stmt_dst(int id) { return {0, 1, id}; }
Key tok_src(int id) { return {1, 0, id}; }
Key tok_dst(int id) { return {1, 1, id}; }

std::vector<Verdict> for_alg(const PairJudgement& j, const std::string& name) {
    std::vector<Verdict> out;
    for (const Verdict& v : j.verdicts) {
        if (v.algorithm == name) out.push_back(v);
    }
    return out;
}

std::set<std::pair<Key, std::string>> undecided_set(const PairJudgement& j) {
    std::set<std::pair<Key, std::string>> out;
    for (const UndecidedEntry& u : j.undecided) out.insert({ts::element_key(u.element), u.stage});
    return out;
}

std::set<Key> undecided_elements(const PairJudgement& j) {
    std::set<Key> out;
    for (const UndecidedEntry& u : j.undecided) out.insert(ts::element_key(u.element));
    return out;
}

// All token indices whose deepest node is one of the given nodes.
std::set<Key> tokens_of_nodes(const TokenList& list, Side side, const std::set<int>& nodes) {
    std::set<Key> out;
    for (size_t i = 0; i < list.size(); ++i) {
        if (nodes.count(list.token(static_cast<int>(i)).drn) != 0) {
            out.insert({1, side == Side::Src ? 0 : 1, static_cast<int>(i)});
        }
    }
    return out;
}

AlgorithmView builtin_view(const ts::Revision& rev, const std::string& name,
                           const MapperConfig& cfg) {
    MapperFn fn = find_mapper(name);
    REQUIRE(fn != nullptr);
    return build_view(name, rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                      fn(rev.src, rev.dst, cfg));
}

void check_all_decided_by(const std::vector<Verdict>& vs, const std::string& measure,
                          const std::string& evidence) {
    for (const Verdict& v : vs) {
        CHECK(v.decided_by == measure);
        CHECK(v.evidence == evidence);
    }
}

// Straight pairs except one source subtree is re-rooted at another
// destination node (subtree shapes must coincide).
std::vector<NodePair> straight_with_move(const Ast& src, int s_root, int d_root) {
    std::vector<NodePair> pairs;
    int span = src.node(s_root).subtree_end - s_root + 1;
    for (int i = 0; i < static_cast<int>(src.nodes.size()); ++i) {
        if (i >= s_root && i < s_root + span) {
            pairs.push_back({i, d_root + (i - s_root)});
        } else {
            pairs.push_back({i, i});
        }
    }
    return pairs;
}

}  // namespace

TEST_CASE("chain length matches the exhaustive reference") {
    CHECK(longest_increasing_pair_chain({}) == 0);
    CHECK(longest_increasing_pair_chain({{0, 0}}) == 1);
    CHECK(longest_increasing_pair_chain({{0, 1}, {1, 0}}) == 1);
    CHECK(longest_increasing_pair_chain({{0, 0}, {1, 1}, {2, 2}}) == 3);
    CHECK(longest_increasing_pair_chain({{2, 2}, {0, 0}, {1, 1}}) == 3);

    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<std::pair<int, int>> pairs = ts::random_pairs(rng, 12);
        REQUIRE_MESSAGE(longest_increasing_pair_chain(pairs) == ts::oracle_chain(pairs),
                        "iteration " << iter);
    }
}

TEST_CASE("statement measures on a duplicated-statement revision") {
    ts::Revision rev = ts::golden_revision("g3_nit5v4");
    std::string gt_doc = ts::read_file(ts::golden_dir() / "g3_nit5v4" / "mapping.gt.json");
    std::string ijm_doc = ts::read_file(ts::golden_dir() / "g3_nit5v4" / "mapping.ijm.json");
    AlgorithmView gt = build_view("gt", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                                  load_mapping(rev.src, rev.dst, gt_doc, nullptr));
    AlgorithmView ijm = build_view("ijm", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                                   load_mapping(rev.src, rev.dst, ijm_doc, nullptr));
    MeasureContext ctx = rev.ctx();

    CHECK(nit(ctx, gt, 7, 7) == 5);
    CHECK(nit(ctx, ijm, 7, 13) == 4);
    CHECK(llcs(ctx, gt, 7, 7) == 5);
    CHECK(llcs(ctx, ijm, 7, 13) == 5);
    CHECK(pm(ctx, gt, 7, 7));
    CHECK(pm(ctx, ijm, 7, 13));

    // Restricting the count to name tokens drops '=' and '+'.
    MeasureContext names = rev.ctx(true);
    CHECK(nit(names, gt, 7, 7) == 3);
    CHECK(nit(names, ijm, 7, 13) == 3);
}

TEST_CASE("a statement pair with lower token agreement is condemned") {
    ts::Revision rev = ts::golden_revision("g3_nit5v4");
    std::string gt_doc = ts::read_file(ts::golden_dir() / "g3_nit5v4" / "mapping.gt.json");
    std::string ijm_doc = ts::read_file(ts::golden_dir() / "g3_nit5v4" / "mapping.ijm.json");
    AlgorithmView gt = build_view("gt", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                                  load_mapping(rev.src, rev.dst, gt_doc, nullptr));
    AlgorithmView ijm = build_view("ijm", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                                   load_mapping(rev.src, rev.dst, ijm_doc, nullptr));
    PairJudgement j = judge_pair(rev.ctx(), gt, ijm);

    CHECK(for_alg(j, "gt").empty());
    std::vector<Verdict> vs = for_alg(j, "ijm");
    CHECK(ts::element_set(vs) == std::set<Key>{stmt_src(7), stmt_dst(7), stmt_dst(13)});
    check_all_decided_by(vs, "NIT", "nit 5 vs 4");
    CHECK(j.inconsistent_statement_count == 3);
    CHECK(undecided_set(j) ==
          std::set<std::pair<Key, std::string>>{{stmt_dst(13), "statement"}});
}

TEST_CASE("statements sharing no token text are condemned outright") {
    ts::Revision rev = ts::golden_revision("g2_nit0");
    std::string gt_doc = ts::read_file(ts::golden_dir() / "g2_nit0" / "mapping.gt.json");
    std::string mtd_doc = ts::read_file(ts::golden_dir() / "g2_nit0" / "mapping.mtd.json");
    AlgorithmView gt = build_view("gt", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                                  load_mapping(rev.src, rev.dst, gt_doc, nullptr));
    AlgorithmView mtd = build_view("mtd", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
                                   load_mapping(rev.src, rev.dst, mtd_doc, nullptr));
    MeasureContext ctx = rev.ctx();

    CHECK(nit(ctx, mtd, 7, 11) == 0);
    CHECK(nit(ctx, mtd, 11, 7) == 0);
    CHECK(nit(ctx, gt, 7, 7) == 3);
    CHECK(nit(ctx, gt, 11, 11) == 4);

    std::vector<Verdict> abs = absolute_rule_verdicts(ctx, mtd);
    CHECK(ts::element_set(abs) ==
          std::set<Key>{stmt_src(7), stmt_src(11), stmt_dst(7), stmt_dst(11)});
    check_all_decided_by(abs, "NIT", "nit=0");
    CHECK(absolute_rule_verdicts(ctx, gt).empty());

    PairJudgement j = judge_pair(ctx, gt, mtd);
    CHECK(for_alg(j, "gt").empty());
    std::vector<Verdict> vs = for_alg(j, "mtd");
    CHECK(ts::element_set(vs) ==
          std::set<Key>{stmt_src(7), stmt_src(11), stmt_dst(7), stmt_dst(11)});
    // The outright condemnations are recorded first, so the later rank-based
    // duplicates never replace them.
    check_all_decided_by(vs, "NIT", "nit=0");
    CHECK(j.inconsistent_statement_count == 4);
    CHECK(j.undecided.empty());
}

TEST_CASE("a copied statement follows the parent-mapped location") {
    ts::Revision rev = ts::golden_revision("g4_pm");
    int src_es = ts::find_node(rev.src, "ExpressionStatement");
    int dst_l2 = ts::find_node(rev.dst, "ExpressionStatement", "", 0);
    int dst_l3 = ts::find_node(rev.dst, "ExpressionStatement", "", 1);
    REQUIRE(src_es == 7);
    REQUIRE(dst_l2 == 7);
    REQUIRE(dst_l3 == 17);

    AlgorithmView gt = rev.view("gt", straight_with_move(rev.src, src_es, dst_l3));
    AlgorithmView ijm = rev.view("ijm", ts::straight_pairs(static_cast<int>(rev.src.nodes.size())));
    MeasureContext ctx = rev.ctx();

    CHECK(nit(ctx, gt, src_es, dst_l3) == 6);
    CHECK(nit(ctx, ijm, src_es, dst_l2) == 6);
    CHECK_FALSE(pm(ctx, gt, src_es, dst_l3));
    CHECK(pm(ctx, ijm, src_es, dst_l2));

    PairJudgement j = judge_pair(ctx, gt, ijm);
    CHECK(for_alg(j, "ijm").empty());
    std::vector<Verdict> vs = for_alg(j, "gt");
    CHECK(ts::element_set(vs) ==
          std::set<Key>{stmt_src(src_es), stmt_dst(dst_l2), stmt_dst(dst_l3)});
    check_all_decided_by(vs, "PM", "parents mapped vs not");
    CHECK(j.inconsistent_statement_count == 3);
    CHECK(undecided_set(j) ==
          std::set<std::pair<Key, std::string>>{{stmt_dst(dst_l3), "statement"}});
}

TEST_CASE("a block mapped without its parents is condemned outright") {
    ts::Revision rev = ts::golden_revision("g4b_block");
    std::vector<NodePair> gt_pairs;
    for (int i = 0; i < static_cast<int>(rev.src.nodes.size()); ++i) {
        if (i == 3 || i == 4) continue;  // skip the method declaration and its type
        gt_pairs.push_back({i, i});
    }
    AlgorithmView gt = rev.view("gt", gt_pairs);
    AlgorithmView ijm = rev.view("ijm", ts::straight_pairs(static_cast<int>(rev.src.nodes.size())));
    MeasureContext ctx = rev.ctx();

    std::vector<Verdict> abs = absolute_rule_verdicts(ctx, gt);
    CHECK(ts::element_set(abs) == std::set<Key>{stmt_src(6), stmt_dst(6)});
    check_all_decided_by(abs, "PM", "parents unmapped");
    CHECK(absolute_rule_verdicts(ctx, ijm).empty());

    PairJudgement j = judge_pair(ctx, gt, ijm);
    CHECK(for_alg(j, "ijm").empty());
    std::vector<Verdict> vs = for_alg(j, "gt");
    CHECK(ts::element_set(vs) ==
          std::set<Key>{stmt_src(6), stmt_dst(6), stmt_src(3), stmt_dst(3)});
    for (const Verdict& v : vs) {
        if (v.element.id == 6) {
            CHECK(v.decided_by == "PM");
            CHECK(v.evidence == "parents unmapped");
        } else {
            CHECK(v.decided_by == "sim-two-condition");
            CHECK(v.evidence == "surviving statement pair vs unmapped or condemned");
        }
    }
    CHECK(j.inconsistent_statement_count == 2);
    CHECK(j.undecided.empty());
}

TEST_CASE("a token left unmapped inside a mapped statement pair is condemned") {
    ts::Revision rev = ts::golden_revision("g5_stmt_value");
    int value_node = ts::find_node(rev.src, "SimpleName", "value");
    REQUIRE(value_node == 9);
    std::vector<NodePair> ijm_pairs;
    for (int i = 0; i < static_cast<int>(rev.src.nodes.size()); ++i) {
        if (i != value_node) ijm_pairs.push_back({i, i});
    }
    AlgorithmView gt = rev.view("gt", ts::straight_pairs(static_cast<int>(rev.src.nodes.size())));
    AlgorithmView ijm = rev.view("ijm", ijm_pairs);

    int src_tok = ts::find_token(rev.src_tokens, "value");
    int dst_tok = ts::find_token(rev.dst_tokens, "value");
    REQUIRE(src_tok >= 0);
    REQUIRE(dst_tok >= 0);

    PairJudgement j = judge_pair(rev.ctx(), gt, ijm);
    CHECK(for_alg(j, "gt").empty());
    std::vector<Verdict> vs = for_alg(j, "ijm");
    CHECK(ts::element_set(vs) == std::set<Key>{tok_src(src_tok), tok_dst(dst_tok)});
    check_all_decided_by(vs, "STMT", "inside own mapped statement pair vs not");
    CHECK(j.inconsistent_statement_count == 1);
    CHECK(j.undecided.empty());
}

TEST_CASE("an identical-text token pair beats a renamed one") {
    ts::Revision rev = ts::golden_revision("g6_val_getbytes");
    int src_mi = ts::find_node(rev.src, "MethodInvocation");
    int dst_outer = ts::find_node(rev.dst, "MethodInvocation", "", 0);
    int dst_inner = ts::find_node(rev.dst, "MethodInvocation", "", 1);
    REQUIRE(src_mi == 10);
    REQUIRE(dst_outer == 10);
    REQUIRE(dst_inner == 13);

    // One algorithm keeps the invocation at the outer call (renaming the
    // method), the other follows it into the new inner call.
    AlgorithmView gt = rev.view("gt", ts::straight_pairs(static_cast<int>(rev.src.nodes.size())));
    AlgorithmView ijm = rev.view("ijm", straight_with_move(rev.src, src_mi, dst_inner));

    int src_get = ts::find_token(rev.src_tokens, "getBytes");
    int dst_get = ts::find_token(rev.dst_tokens, "getBytes");
    int dst_write = ts::find_token(rev.dst_tokens, "writeBytes");
    REQUIRE(src_get >= 0);
    REQUIRE(dst_get >= 0);
    REQUIRE(dst_write >= 0);

    PairJudgement j = judge_pair(rev.ctx(), gt, ijm);
    CHECK(for_alg(j, "ijm").empty());
    std::vector<Verdict> vs = for_alg(j, "gt");
    CHECK(ts::element_set(vs) ==
          std::set<Key>{tok_src(src_get), tok_dst(dst_get), tok_dst(dst_write)});
    check_all_decided_by(vs, "VAL", "identical token text vs not");
    CHECK(j.inconsistent_statement_count == 1);

    // Everything else in the moved call resolves the same under either choice
    // or ties on every token measure, so those tokens stay undecided.
    std::set<Key> expected_undecided = {
        tok_src(ts::find_token(rev.src_tokens, "data")),
        tok_src(ts::find_token(rev.src_tokens, ".")),
        tok_src(ts::find_token(rev.src_tokens, "(", 1)),
        tok_src(ts::find_token(rev.src_tokens, ")", 1)),
        tok_dst(ts::find_token(rev.dst_tokens, "data", 0)),
        tok_dst(ts::find_token(rev.dst_tokens, "data", 1)),
        tok_dst(ts::find_token(rev.dst_tokens, ".", 0)),
        tok_dst(ts::find_token(rev.dst_tokens, ".", 1)),
        tok_dst(dst_write),
        tok_dst(ts::find_token(rev.dst_tokens, "(", 1)),
        tok_dst(ts::find_token(rev.dst_tokens, "(", 2)),
        tok_dst(ts::find_token(rev.dst_tokens, ")", 1)),
        tok_dst(ts::find_token(rev.dst_tokens, ")", 2)),
    };
    CHECK(undecided_elements(j) == expected_undecided);
    for (const UndecidedEntry& u : j.undecided) CHECK(u.stage == "token");
}

TEST_CASE("crossed argument tokens are condemned by chain length") {
    ts::Revision rev = ts::golden_revision("g7_llcs");
    int src_f1 = ts::find_node(rev.src, "SimpleName", "Filterable", 0);
    int src_f2 = ts::find_node(rev.src, "SimpleName", "Filterable", 1);
    REQUIRE(src_f1 == 10);
    REQUIRE(src_f2 == 12);

    auto doc = [&](bool crossed) {
        std::vector<NodePair> pairs;
        for (int i = 0; i <= 7; ++i) pairs.push_back({i, i});
        pairs.push_back({9, 9});    // sort
        pairs.push_back({11, 11});  // runner
        if (crossed) {
            pairs.push_back({src_f1, src_f2});
            pairs.push_back({src_f2, src_f1});
        } else {
            pairs.push_back({src_f1, src_f1});
            pairs.push_back({src_f2, src_f2});
        }
        return pairs;
    };
    AlgorithmView gt = rev.view("gt", doc(true));
    AlgorithmView ijm = rev.view("ijm", doc(false));
    MeasureContext ctx = rev.ctx();

    CHECK(llcs(ctx, gt, 7, 7) == 3);
    CHECK(llcs(ctx, ijm, 7, 7) == 5);
    CHECK(nit(ctx, gt, 7, 7) == 5);
    CHECK(nit(ctx, ijm, 7, 7) == 5);

    int sf1 = ts::find_token(rev.src_tokens, "Filterable", 0);
    int sf2 = ts::find_token(rev.src_tokens, "Filterable", 1);
    int df1 = ts::find_token(rev.dst_tokens, "Filterable", 0);
    int df2 = ts::find_token(rev.dst_tokens, "Filterable", 1);

    PairJudgement j = judge_pair(ctx, gt, ijm);
    CHECK(for_alg(j, "ijm").empty());
    std::vector<Verdict> vs = for_alg(j, "gt");
    CHECK(ts::element_set(vs) ==
          std::set<Key>{tok_src(sf1), tok_src(sf2), tok_dst(df1), tok_dst(df2)});
    check_all_decided_by(vs, "LLCS", "llcs 5 vs 3");
    CHECK(j.inconsistent_statement_count == 1);
    CHECK(j.undecided.empty());
}

TEST_CASE("a token pair of differing kinds is condemned outright") {
    ts::Revision rev = ts::golden_revision("g9_type");
    AlgorithmView gt = builtin_view(rev, "gt", MapperConfig{});
    AlgorithmView ijm = builtin_view(rev, "ijm", MapperConfig{});

    // The greedy recovery pairs the old variable with the new call's name;
    // the name-aware similarity gate refuses the rename.
    int src_value = ts::find_node(rev.src, "SimpleName", "value");
    int dst_bytevalue = ts::find_node(rev.dst, "SimpleName", "bytevalue");
    CHECK(gt.nodes.dst_of(src_value) == dst_bytevalue);
    CHECK_FALSE(ijm.nodes.has_src(src_value));

    int src_tok = ts::find_token(rev.src_tokens, "value");
    int dst_tok = ts::find_token(rev.dst_tokens, "bytevalue");
    REQUIRE(src_tok >= 0);
    REQUIRE(dst_tok >= 0);

    MeasureContext ctx = rev.ctx();
    std::vector<Verdict> abs = absolute_rule_verdicts(ctx, gt);
    CHECK(ts::element_set(abs) == std::set<Key>{tok_src(src_tok), tok_dst(dst_tok)});
    check_all_decided_by(abs, "TYPE", "VariableName vs MethodName");
    CHECK(absolute_rule_verdicts(ctx, ijm).empty());

    PairJudgement j = judge_pair(ctx, gt, ijm);
    CHECK(for_alg(j, "ijm").empty());
    std::vector<Verdict> vs = for_alg(j, "gt");
    CHECK(ts::element_set(vs) == std::set<Key>{tok_src(src_tok), tok_dst(dst_tok)});
    check_all_decided_by(vs, "TYPE", "VariableName vs MethodName");
    CHECK(j.inconsistent_statement_count == 1);
    // A condemned pair ranks no better than no pair at all, so the contested
    // tokens themselves stay undecided.
    CHECK(undecided_set(j) == std::set<std::pair<Key, std::string>>{
                                  {tok_src(src_tok), "token"}, {tok_dst(dst_tok), "token"}});
}

TEST_CASE("the moved type condemns the whole-statement disagreement tokenwise") {
    ts::Revision rev = ts::golden_revision("g1_motivating");
    MapperConfig cfg;
    cfg.min_subtree_height = 1;
    AlgorithmView gt = builtin_view(rev, "gt", cfg);
    AlgorithmView ijm = builtin_view(rev, "ijm", cfg);

    PairJudgement j = judge_pair(rev.ctx(), gt, ijm);
    CHECK(for_alg(j, "ijm").empty());
    std::vector<Verdict> vs = for_alg(j, "gt");
    std::set<Key> expected = tokens_of_nodes(rev.src_tokens, Side::Src, {5});
    std::set<Key> dst_part = tokens_of_nodes(rev.dst_tokens, Side::Dst, {5, 16});
    expected.insert(dst_part.begin(), dst_part.end());
    REQUIRE(expected.size() == 18);
    CHECK(ts::element_set(vs) == expected);
    check_all_decided_by(vs, "STMT", "inside own mapped statement pair vs not");
    CHECK(j.inconsistent_statement_count == 2);

    // The greedy mapping drags the type's tokens into an unmapped statement
    // pair; with nothing on the other side to compare, they stay undecided.
    CHECK(undecided_elements(j) == tokens_of_nodes(rev.dst_tokens, Side::Dst, {16}));
    for (const UndecidedEntry& u : j.undecided) CHECK(u.stage == "token");
}

TEST_CASE("judging is symmetric in its argument order") {
    struct Case {
        std::string revision;
        std::string a;
        std::string b;
    };
    std::vector<Case> cases = {{"g2_nit0", "mapping.gt.json", "mapping.mtd.json"},
                               {"g3_nit5v4", "mapping.gt.json", "mapping.ijm.json"}};
    for (const Case& c : cases) {
        ts::Revision rev = ts::golden_revision(c.revision);
        AlgorithmView va = build_view(
            "first", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
            load_mapping(rev.src, rev.dst,
                         ts::read_file(ts::golden_dir() / c.revision / c.a), nullptr));
        AlgorithmView vb = build_view(
            "second", rev.src, rev.src_tokens, rev.dst, rev.dst_tokens,
            load_mapping(rev.src, rev.dst,
                         ts::read_file(ts::golden_dir() / c.revision / c.b), nullptr));
        MeasureContext ctx = rev.ctx();
        PairJudgement fwd = judge_pair(ctx, va, vb);
        PairJudgement rev_j = judge_pair(ctx, vb, va);
        CHECK(ts::verdict_sigs(for_alg(fwd, "first")) == ts::verdict_sigs(for_alg(rev_j, "first")));
        CHECK(ts::verdict_sigs(for_alg(fwd, "second")) ==
              ts::verdict_sigs(for_alg(rev_j, "second")));
        CHECK(undecided_set(fwd) == undecided_set(rev_j));
        CHECK(fwd.inconsistent_statement_count == rev_j.inconsistent_statement_count);
    }
}

TEST_CASE("two algorithms agreeing on wrong pairs raise nothing between themselves") {
    ts::Revision rev = ts::golden_revision("g8_rq2");
    int src_m = ts::find_node(rev.src, "ExpressionStatement", "", 0);
    int src_n = ts::find_node(rev.src, "ExpressionStatement", "", 1);
    REQUIRE(src_m == 7);
    REQUIRE(src_n == 15);

    std::vector<NodePair> crossed;
    int span = rev.src.node(src_m).subtree_end - src_m + 1;
    for (int i = 0; i < static_cast<int>(rev.src.nodes.size()); ++i) {
        if (i >= src_m && i < src_m + span) {
            crossed.push_back({i, src_n + (i - src_m)});
        } else if (i >= src_n && i < src_n + span) {
            crossed.push_back({i, src_m + (i - src_n)});
        } else {
            crossed.push_back({i, i});
        }
    }
    AlgorithmView a = rev.view("a", crossed);
    AlgorithmView b = rev.view("b", crossed);
    AlgorithmView c = rev.view("c", ts::straight_pairs(static_cast<int>(rev.src.nodes.size())));
    MeasureContext ctx = rev.ctx();

    PairJudgement agreeing = judge_pair(ctx, a, b);
    CHECK(agreeing.verdicts.empty());
    CHECK(agreeing.undecided.empty());
    CHECK(agreeing.inconsistent_statement_count == 0);

    std::set<Key> expected = {stmt_src(src_m), stmt_src(src_n), stmt_dst(src_m),
                              stmt_dst(src_n)};
    PairJudgement against = judge_pair(ctx, a, c);
    std::vector<Verdict> vs = for_alg(against, "a");
    CHECK(ts::element_set(vs) == expected);
    check_all_decided_by(vs, "NIT", "nit 4 vs 2");
    CHECK(for_alg(against, "c").empty());
    CHECK(against.inconsistent_statement_count == 4);

    RevisionJudgement all = judge_all(ctx, {a, b, c});
    REQUIRE(all.pairs.size() == 3);
    REQUIRE(all.per_algorithm.size() == 3);
    CHECK(ts::element_set(all.per_algorithm[0]) == expected);
    CHECK(ts::element_set(all.per_algorithm[1]) == expected);
    CHECK(all.per_algorithm[2].empty());
    // Sorted by element: src statements first, then dst.
    CHECK(all.per_algorithm[0][0].element.side == Side::Src);
    CHECK(all.per_algorithm[0][0].element.id == src_m);
    CHECK(all.per_algorithm[0][3].element.side == Side::Dst);
    CHECK(all.per_algorithm[0][3].element.id == src_n);
    // The pair of agreeing algorithms contributes nothing on its own; the
    // third mapping is what exposes them.
    CHECK(ts::element_set(for_alg(all.pairs[0], "a")).empty());
}
