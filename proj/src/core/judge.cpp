#include "core/judge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace astdiff {

namespace {

// Token- and statement-pair condemnations from the absolute rules, indexed by
// the pair's src endpoint. Used to push condemned choices to the bottom of
// every later comparison.
struct AbsoluteFlags {
    std::vector<bool> stmt_pair;   // by src statement node id
    std::vector<bool> token_pair;  // by src token index
};

struct StmtChoice {
    bool exists = false;
    int src = kNoNode;
    int dst = kNoNode;
};

struct TokenChoice {
    bool exists = false;
    int src = -1;
    int dst = -1;
};

struct Comparison {
    int winner = 0;  // 0 tie, 1 first argument, 2 second argument
    std::string measure;
    std::string evidence;
};

std::vector<Verdict> collect_absolute(const MeasureContext& ctx, const AlgorithmView& view,
                                      AbsoluteFlags* flags) {
    std::vector<Verdict> verdicts;
    if (flags) {
        flags->stmt_pair.assign(ctx.src->size(), false);
        flags->token_pair.assign(ctx.src_tokens->size(), false);
    }
    auto add = [&](ElementRef element, const char* measure, const std::string& evidence) {
        verdicts.push_back({view.name, element, measure, evidence});
    };
    for (const NodePair& p : view.stmts.pairs) {
        if (ctx.src->kind(p.src) == StatementKind::Block) {
            if (!pm(ctx, view, p.src, p.dst)) {
                if (flags) flags->stmt_pair[static_cast<size_t>(p.src)] = true;
                add({Granularity::Statement, Side::Src, p.src}, "PM", "parents unmapped");
                add({Granularity::Statement, Side::Dst, p.dst}, "PM", "parents unmapped");
            }
        } else if (nit(ctx, view, p.src, p.dst) == 0) {
            if (flags) flags->stmt_pair[static_cast<size_t>(p.src)] = true;
            add({Granularity::Statement, Side::Src, p.src}, "NIT", "nit=0");
            add({Granularity::Statement, Side::Dst, p.dst}, "NIT", "nit=0");
        }
    }
    for (const TokenPair& p : view.tokens.pairs) {
        const TokenKind& ka = ctx.src_tokens->token(p.src).kind;
        const TokenKind& kb = ctx.dst_tokens->token(p.dst).kind;
        if (ka == kb) continue;
        if (flags) flags->token_pair[static_cast<size_t>(p.src)] = true;
        std::string evidence = token_kind_name(ka) + " vs " + token_kind_name(kb);
        add({Granularity::Token, Side::Src, p.src}, "TYPE", evidence);
        add({Granularity::Token, Side::Dst, p.dst}, "TYPE", evidence);
    }
    return verdicts;
}

// One algorithm's side of a comparison.
struct Contender {
    const AlgorithmView* view;
    const AbsoluteFlags* flags;
};

int stmt_rank(const Contender& c, const StmtChoice& choice) {
    if (!choice.exists) return 0;
    if (c.flags->stmt_pair[static_cast<size_t>(choice.src)]) return 0;
    return 1;
}

Comparison compare_statement_choices(const MeasureContext& ctx, const Contender& first,
                                     const StmtChoice& ca, const Contender& second,
                                     const StmtChoice& cb) {
    Comparison cmp;
    int ra = stmt_rank(first, ca);
    int rb = stmt_rank(second, cb);
    if (ra != rb) {
        cmp.winner = ra > rb ? 1 : 2;
        cmp.measure = "sim-two-condition";
        cmp.evidence = "surviving statement pair vs unmapped or condemned";
        return cmp;
    }
    if (ra == 0) return cmp;
    int na = nit(ctx, *first.view, ca.src, ca.dst);
    int nb = nit(ctx, *second.view, cb.src, cb.dst);
    if (na != nb) {
        cmp.winner = na > nb ? 1 : 2;
        cmp.measure = "NIT";
        std::ostringstream ev;
        ev << "nit " << std::max(na, nb) << " vs " << std::min(na, nb);
        cmp.evidence = ev.str();
        return cmp;
    }
    bool pa = pm(ctx, *first.view, ca.src, ca.dst);
    bool pb = pm(ctx, *second.view, cb.src, cb.dst);
    if (pa != pb) {
        cmp.winner = pa ? 1 : 2;
        cmp.measure = "PM";
        cmp.evidence = "parents mapped vs not";
        return cmp;
    }
    return cmp;
}

int token_rank(const MeasureContext& ctx, const Contender& c, const TokenChoice& choice) {
    if (!choice.exists) return 0;
    if (c.flags->token_pair[static_cast<size_t>(choice.src)]) return 0;
    int src_stmt = ctx.src_tokens->enclosing_statement[static_cast<size_t>(choice.src)];
    int dst_stmt = ctx.dst_tokens->enclosing_statement[static_cast<size_t>(choice.dst)];
    return c.view->stmts.maps(src_stmt, dst_stmt) ? 1 : 0;
}

Comparison compare_token_choices(const MeasureContext& ctx, const Contender& first,
                                 const TokenChoice& ca, const Contender& second,
                                 const TokenChoice& cb) {
    Comparison cmp;
    int ra = token_rank(ctx, first, ca);
    int rb = token_rank(ctx, second, cb);
    if (ra != rb) {
        cmp.winner = ra > rb ? 1 : 2;
        cmp.measure = "STMT";
        cmp.evidence = "inside own mapped statement pair vs not";
        return cmp;
    }
    if (ra == 0) return cmp;
    bool va = ctx.src_tokens->token(ca.src).text == ctx.dst_tokens->token(ca.dst).text;
    bool vb = ctx.src_tokens->token(cb.src).text == ctx.dst_tokens->token(cb.dst).text;
    if (va != vb) {
        cmp.winner = va ? 1 : 2;
        cmp.measure = "VAL";
        cmp.evidence = "identical token text vs not";
        return cmp;
    }
    auto chain_of = [&](const Contender& c, const TokenChoice& choice) {
        int s = ctx.src_tokens->enclosing_statement[static_cast<size_t>(choice.src)];
        int t = ctx.dst_tokens->enclosing_statement[static_cast<size_t>(choice.dst)];
        return llcs(ctx, *c.view, s, t);
    };
    int la = chain_of(first, ca);
    int lb = chain_of(second, cb);
    if (la != lb) {
        cmp.winner = la > lb ? 1 : 2;
        cmp.measure = "LLCS";
        std::ostringstream ev;
        ev << "llcs " << std::max(la, lb) << " vs " << std::min(la, lb);
        cmp.evidence = ev.str();
        return cmp;
    }
    return cmp;
}

}  // namespace

const char* granularity_name(Granularity g) {
    return g == Granularity::Statement ? "statement" : "token";
}

const char* side_name(Side s) { return s == Side::Src ? "src" : "dst"; }

std::vector<Verdict> absolute_rule_verdicts(const MeasureContext& ctx, const AlgorithmView& view) {
    return collect_absolute(ctx, view, nullptr);
}

PairJudgement judge_pair(const MeasureContext& ctx, const AlgorithmView& a,
                         const AlgorithmView& b) {
    PairJudgement out;
    out.a = a.name;
    out.b = b.name;

    AbsoluteFlags fa;
    AbsoluteFlags fb;
    std::set<std::pair<std::string, ElementRef>> seen;
    auto push_verdict = [&](Verdict v) {
        if (seen.insert({v.algorithm, v.element}).second) out.verdicts.push_back(std::move(v));
    };
    for (Verdict& v : collect_absolute(ctx, a, &fa)) push_verdict(std::move(v));
    for (Verdict& v : collect_absolute(ctx, b, &fb)) push_verdict(std::move(v));

    Contender ca{&a, &fa};
    Contender cb{&b, &fb};

    std::set<std::pair<ElementRef, std::string>> undecided_seen;
    auto push_undecided = [&](ElementRef element, const char* stage) {
        if (undecided_seen.insert({element, stage}).second) {
            out.undecided.push_back({a.name, b.name, element, stage});
        }
    };

    auto condemn = [&](const Contender& loser, const std::vector<ElementRef>& elements,
                       const Comparison& cmp) {
        for (const ElementRef& e : elements) {
            push_verdict({loser.view->name, e, cmp.measure, cmp.evidence});
        }
    };

    auto adjudicate_statement = [&](Side side, int e0) {
        auto choice_of = [&](const Contender& c) {
            StmtChoice choice;
            if (side == Side::Src) {
                int t = c.view->stmts.src_to_dst[static_cast<size_t>(e0)];
                choice = {t != kNoNode, e0, t};
            } else {
                int s = c.view->stmts.dst_to_src[static_cast<size_t>(e0)];
                choice = {s != kNoNode, s, e0};
            }
            return choice;
        };
        StmtChoice choice_a = choice_of(ca);
        StmtChoice choice_b = choice_of(cb);
        Comparison cmp = compare_statement_choices(ctx, ca, choice_a, cb, choice_b);
        ElementRef contested{Granularity::Statement, side, e0};
        if (cmp.winner == 0) {
            push_undecided(contested, "statement");
            return;
        }
        const Contender& winner = cmp.winner == 1 ? ca : cb;
        const Contender& loser = cmp.winner == 1 ? cb : ca;
        const StmtChoice& wc = cmp.winner == 1 ? choice_a : choice_b;
        const StmtChoice& lc = cmp.winner == 1 ? choice_b : choice_a;
        Side other = side == Side::Src ? Side::Dst : Side::Src;
        int e1 = side == Side::Src ? wc.dst : wc.src;
        // The loser may map the winner's partner elsewhere; the winner's pair
        // must also beat that competing pair or the unit stays undecided.
        int e4 = side == Side::Src ? loser.view->stmts.dst_to_src[static_cast<size_t>(e1)]
                                   : loser.view->stmts.src_to_dst[static_cast<size_t>(e1)];
        if (e4 != kNoNode) {
            StmtChoice competing = side == Side::Src ? StmtChoice{true, e4, e1}
                                                     : StmtChoice{true, e1, e4};
            Comparison second = compare_statement_choices(ctx, winner, wc, loser, competing);
            if (second.winner != 1) {
                push_undecided(contested, "statement");
                return;
            }
        }
        std::vector<ElementRef> condemned = {contested, {Granularity::Statement, other, e1}};
        if (lc.exists) {
            int e2 = side == Side::Src ? lc.dst : lc.src;
            condemned.push_back({Granularity::Statement, other, e2});
        }
        if (e4 != kNoNode) condemned.push_back({Granularity::Statement, side, e4});
        condemn(loser, condemned, cmp);
    };

    auto adjudicate_token = [&](Side side, int e0) {
        auto choice_of = [&](const Contender& c) {
            TokenChoice choice;
            if (side == Side::Src) {
                int q = c.view->tokens.src_to_dst[static_cast<size_t>(e0)];
                choice = {q >= 0, e0, q};
            } else {
                int p = c.view->tokens.dst_to_src[static_cast<size_t>(e0)];
                choice = {p >= 0, p, e0};
            }
            return choice;
        };
        TokenChoice choice_a = choice_of(ca);
        TokenChoice choice_b = choice_of(cb);
        Comparison cmp = compare_token_choices(ctx, ca, choice_a, cb, choice_b);
        ElementRef contested{Granularity::Token, side, e0};
        if (cmp.winner == 0) {
            push_undecided(contested, "token");
            return;
        }
        const Contender& winner = cmp.winner == 1 ? ca : cb;
        const Contender& loser = cmp.winner == 1 ? cb : ca;
        const TokenChoice& wc = cmp.winner == 1 ? choice_a : choice_b;
        const TokenChoice& lc = cmp.winner == 1 ? choice_b : choice_a;
        Side other = side == Side::Src ? Side::Dst : Side::Src;
        int e1 = side == Side::Src ? wc.dst : wc.src;
        int e4 = side == Side::Src ? loser.view->tokens.dst_to_src[static_cast<size_t>(e1)]
                                   : loser.view->tokens.src_to_dst[static_cast<size_t>(e1)];
        if (e4 >= 0) {
            TokenChoice competing = side == Side::Src ? TokenChoice{true, e4, e1}
                                                      : TokenChoice{true, e1, e4};
            Comparison second = compare_token_choices(ctx, winner, wc, loser, competing);
            if (second.winner != 1) {
                push_undecided(contested, "token");
                return;
            }
        }
        std::vector<ElementRef> condemned = {contested, {Granularity::Token, other, e1}};
        if (lc.exists) {
            int e2 = side == Side::Src ? lc.dst : lc.src;
            condemned.push_back({Granularity::Token, other, e2});
        }
        if (e4 >= 0) condemned.push_back({Granularity::Token, side, e4});
        condemn(loser, condemned, cmp);
    };

    // Own tokens per statement on each side.
    std::vector<std::vector<int>> src_own(ctx.src->size());
    std::vector<std::vector<int>> dst_own(ctx.dst->size());
    for (size_t i = 0; i < ctx.src_tokens->size(); ++i) {
        int stmt = ctx.src_tokens->enclosing_statement[i];
        if (stmt != kNoNode) src_own[static_cast<size_t>(stmt)].push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < ctx.dst_tokens->size(); ++i) {
        int stmt = ctx.dst_tokens->enclosing_statement[i];
        if (stmt != kNoNode) dst_own[static_cast<size_t>(stmt)].push_back(static_cast<int>(i));
    }
    auto src_token_diff = [&](int s) {
        std::vector<int> diff;
        for (int p : src_own[static_cast<size_t>(s)]) {
            if (a.tokens.src_to_dst[static_cast<size_t>(p)] !=
                b.tokens.src_to_dst[static_cast<size_t>(p)]) {
                diff.push_back(p);
            }
        }
        return diff;
    };
    auto dst_token_diff = [&](int t) {
        std::vector<int> diff;
        for (int q : dst_own[static_cast<size_t>(t)]) {
            if (a.tokens.dst_to_src[static_cast<size_t>(q)] !=
                b.tokens.dst_to_src[static_cast<size_t>(q)]) {
                diff.push_back(q);
            }
        }
        return diff;
    };

    for (int s : ctx.src->statements()) {
        int ta = a.stmts.src_to_dst[static_cast<size_t>(s)];
        int tb = b.stmts.src_to_dst[static_cast<size_t>(s)];
        if (ta != tb) {
            ++out.inconsistent_statement_count;
            adjudicate_statement(Side::Src, s);
            continue;
        }
        std::vector<int> src_diff = src_token_diff(s);
        if (ta != kNoNode) {
            // Both algorithms agree on the statement pair: src and dst units
            // collapse into one, adjudicated token by token.
            std::vector<int> dst_diff = dst_token_diff(ta);
            if (src_diff.empty() && dst_diff.empty()) continue;
            ++out.inconsistent_statement_count;
            for (int p : src_diff) adjudicate_token(Side::Src, p);
            for (int q : dst_diff) adjudicate_token(Side::Dst, q);
            continue;
        }
        if (!src_diff.empty()) {
            ++out.inconsistent_statement_count;
            for (int p : src_diff) adjudicate_token(Side::Src, p);
        }
    }
    for (int t : ctx.dst->statements()) {
        int sa = a.stmts.dst_to_src[static_cast<size_t>(t)];
        int sb = b.stmts.dst_to_src[static_cast<size_t>(t)];
        if (sa == sb && sa != kNoNode) continue;  // collapsed with the src unit
        if (sa != sb) {
            ++out.inconsistent_statement_count;
            adjudicate_statement(Side::Dst, t);
            continue;
        }
        std::vector<int> dst_diff = dst_token_diff(t);
        if (!dst_diff.empty()) {
            ++out.inconsistent_statement_count;
            for (int q : dst_diff) adjudicate_token(Side::Dst, q);
        }
    }
    return out;
}

RevisionJudgement judge_all(const MeasureContext& ctx, const std::vector<AlgorithmView>& views) {
    RevisionJudgement out;
    for (size_t i = 0; i < views.size(); ++i) {
        for (size_t j = i + 1; j < views.size(); ++j) {
            out.pairs.push_back(judge_pair(ctx, views[i], views[j]));
        }
    }
    out.per_algorithm.resize(views.size());
    for (size_t k = 0; k < views.size(); ++k) {
        std::set<ElementRef> seen;
        std::vector<Verdict> merged;
        for (const PairJudgement& pj : out.pairs) {
            if (pj.a != views[k].name && pj.b != views[k].name) continue;
            for (const Verdict& v : pj.verdicts) {
                if (v.algorithm != views[k].name) continue;
                if (seen.insert(v.element).second) merged.push_back(v);
            }
        }
        std::sort(merged.begin(), merged.end(),
                  [](const Verdict& x, const Verdict& y) { return x.element < y.element; });
        out.per_algorithm[k] = std::move(merged);
    }
    return out;
}

}  // namespace astdiff
