#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/ast.hpp"
#include "core/mapping.hpp"
#include "core/parser.hpp"
#include "core/refine.hpp"
#include "core/tokens.hpp"
#include "test_support.hpp"

using namespace astdiff;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

void check_sorted_and_injective(const Pairs& pairs) {
    std::set<int> src_seen;
    std::set<int> dst_seen;
    int prev = -1;
    for (const auto& [s, d] : pairs) {
        CHECK(s > prev);
        prev = s;
        CHECK(src_seen.insert(s).second);
        CHECK(dst_seen.insert(d).second);
    }
}

}  // namespace

TEST_CASE("token pairing anchors equal texts and fills the gaps positionally") {
    Pairs got = match_token_sequences({"HashMap", "Integer", "Integer"},
                                      {"Map", "Integer", "Integer"});
    CHECK(got == Pairs{{0, 0}, {1, 1}, {2, 2}});

    // No equal text at all: one big gap, paired front to back.
    CHECK(match_token_sequences({"a", "b"}, {"c", "d"}) == Pairs{{0, 0}, {1, 1}});

    // Inner gap between two anchors.
    CHECK(match_token_sequences({"p", "q", "r"}, {"p", "s", "r"}) == Pairs{{0, 0}, {1, 1}, {2, 2}});

    // The longer side of a gap keeps a tail unmapped.
    CHECK(match_token_sequences({"p", "a", "b", "q"}, {"p", "c", "q"}) ==
          Pairs{{0, 0}, {1, 1}, {3, 2}});

    // Equal lists pair straight; an extra repeat stays unmapped.
    CHECK(match_token_sequences({"a", "a", "a"}, {"a", "a"}) == Pairs{{0, 0}, {1, 1}});

    CHECK(match_token_sequences({}, {"x"}).empty());
    CHECK(match_token_sequences({"x"}, {}).empty());
    CHECK(match_token_sequences({}, {}).empty());
}

TEST_CASE("token pairing keeps matches in order and maximal") {
    // Taking the first equal pair here ((0,1)) would cap the matching at one
    // anchor; the maximality guard must skip it.
    CHECK(match_token_sequences({"b", "a", "b"}, {"a", "b"}) == Pairs{{1, 0}, {2, 1}});

    // Crossing matches are impossible: only one of the two equal texts can
    // anchor, and the tie breaks toward the smallest source index.
    CHECK(match_token_sequences({"a", "b"}, {"b", "a"}) == Pairs{{0, 1}});

    // Among equal-size matchings the lexicographically smallest wins.
    CHECK(match_token_sequences({"a"}, {"a", "a"}) == Pairs{{0, 0}});
    CHECK(match_token_sequences({"a", "a"}, {"a"}) == Pairs{{0, 0}});
    CHECK(match_token_sequences({"x", "y"}, {"y", "x", "y"}) == Pairs{{0, 1}, {1, 2}});
}

TEST_CASE("token pairing agrees with the exhaustive reference") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<std::string> src = ts::random_words(rng, 8);
        std::vector<std::string> dst = ts::random_words(rng, 8);
        Pairs got = match_token_sequences(src, dst);
        Pairs want = ts::oracle_token_pairing(src, dst);
        REQUIRE_MESSAGE(got == want, "iteration " << iter);
        check_sorted_and_injective(got);
    }
}

TEST_CASE("statement pairs are the mapped pairs whose endpoints are both statements") {
    ts::Revision rev = ts::golden_revision("g3_nit5v4");
    std::string doc = ts::read_file(ts::golden_dir() / "g3_nit5v4" / "mapping.ijm.json");
    NodeMappingSet nodes = load_mapping(rev.src, rev.dst, doc, nullptr);
    StatementMappingSet stmts = derive_statement_mappings(rev.src, rev.dst, nodes);

    std::vector<NodePair> expected = {{1, 1}, {3, 3}, {6, 6}, {7, 13}};
    CHECK(stmts.pairs == expected);
    CHECK(stmts.src_to_dst[7] == 13);
    CHECK(stmts.dst_to_src[13] == 7);
    CHECK(stmts.dst_to_src[7] == kNoNode);
    CHECK(stmts.maps(7, 13));
    CHECK_FALSE(stmts.maps(7, 7));
    CHECK_FALSE(stmts.maps(kNoNode, 13));

    std::string gt_doc = ts::read_file(ts::golden_dir() / "g3_nit5v4" / "mapping.gt.json");
    StatementMappingSet straight = derive_statement_mappings(
        rev.src, rev.dst, load_mapping(rev.src, rev.dst, gt_doc, nullptr));
    CHECK(straight.pairs == std::vector<NodePair>{{1, 1}, {3, 3}, {6, 6}, {7, 7}});
}

TEST_CASE("statement groups collect each statement's own nodes") {
    Ast ast = ts::load_golden("g3_nit5v4", "before");
    std::vector<std::vector<int>> groups = group_by_statement(ast);
    REQUIRE(groups.size() == ast.nodes.size());
    CHECK(groups[0].empty());
    CHECK(groups[2].empty());
    CHECK(groups[1] == std::vector<int>{1, 2});
    CHECK(groups[3] == std::vector<int>{3, 4, 5});
    CHECK(groups[6] == std::vector<int>{6});
    CHECK(groups[7] == std::vector<int>{7, 8, 9, 10, 11, 12});
}

TEST_CASE("token refinement pairs tokens only inside mapped node pairs") {
    ts::Revision rev = ts::golden_revision("g1_motivating");
    std::vector<NodePair> pairs = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 16}, {6, 6}, {7, 7}};
    AlgorithmView view = rev.view("gt", pairs);

    CHECK_FALSE(view.tokens.pairs.empty());
    for (const TokenPair& p : view.tokens.pairs) {
        const Token& s = rev.src_tokens.token(p.src);
        const Token& d = rev.dst_tokens.token(p.dst);
        CHECK(view.nodes.maps(s.drn, d.drn));
        CHECK(s.in_node_value == d.in_node_value);
        CHECK(view.tokens.src_to_dst[static_cast<size_t>(p.src)] == p.dst);
        CHECK(view.tokens.dst_to_src[static_cast<size_t>(p.dst)] == p.src);
    }

    // The moved type leaf carries its six tokens to the new location.
    int src_hash = ts::find_token(rev.src_tokens, "HashMap");
    int dst_hash = ts::find_token(rev.dst_tokens, "HashMap");
    REQUIRE(src_hash >= 0);
    REQUIRE(dst_hash >= 0);
    CHECK(view.tokens.src_to_dst[static_cast<size_t>(src_hash)] == dst_hash);
    int mapped_into_16 = 0;
    for (const TokenPair& p : view.tokens.pairs) {
        if (rev.dst_tokens.token(p.dst).drn == 16) ++mapped_into_16;
    }
    CHECK(mapped_into_16 == 6);
}

TEST_CASE("value tokens never pair with structural tokens") {
    for (const std::string& name : {std::string("g1_motivating"), std::string("g3_nit5v4")}) {
        ts::Revision rev = ts::golden_revision(name);
        int n = static_cast<int>(std::min(rev.src.nodes.size(), rev.dst.nodes.size()));
        std::vector<NodePair> pairs;
        for (int i = 0; i < n; ++i) {
            if (rev.src.node(i).label == rev.dst.node(i).label) pairs.push_back({i, i});
        }
        AlgorithmView view = rev.view("straight", pairs);
        for (const TokenPair& p : view.tokens.pairs) {
            CHECK(rev.src_tokens.token(p.src).in_node_value ==
                  rev.dst_tokens.token(p.dst).in_node_value);
        }
    }
}

TEST_CASE("token refinement over a single node equals plain list pairing") {
    std::mt19937_64 rng(991);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<std::string> a = ts::random_words(rng, 8);
        std::vector<std::string> b = ts::random_words(rng, 8);
        ts::Revision rev(ts::word_list_ast(a), ts::word_list_ast(b));
        REQUIRE(rev.src_tokens.size() == a.size());
        REQUIRE(rev.dst_tokens.size() == b.size());
        AlgorithmView view = rev.view("list", {{0, 0}});
        Pairs got;
        for (const TokenPair& p : view.tokens.pairs) got.push_back({p.src, p.dst});
        CHECK(got == match_token_sequences(a, b));
    }
}

TEST_CASE("an empty node mapping refines to empty statement and token mappings") {
    ts::Revision rev = ts::golden_revision("g3_nit5v4");
    AlgorithmView view = rev.view("empty", {});
    CHECK(view.stmts.pairs.empty());
    CHECK(view.tokens.pairs.empty());
    CHECK(view.name == "empty");
}
