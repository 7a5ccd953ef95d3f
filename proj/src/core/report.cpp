#include "core/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace astdiff {
namespace {

using ordered_json = nlohmann::ordered_json;

const Ast& ast_of(const MeasureContext& ctx, Side side) {
    return side == Side::Src ? *ctx.src : *ctx.dst;
}

const TokenList& tokens_of(const MeasureContext& ctx, Side side) {
    return side == Side::Src ? *ctx.src_tokens : *ctx.dst_tokens;
}

std::string element_text(const MeasureContext& ctx, const ElementRef& e) {
    if (e.granularity == Granularity::Token) return tokens_of(ctx, e.side).token(e.id).text;
    return std::string(ast_of(ctx, e.side).node_text(e.id));
}

Range element_range(const MeasureContext& ctx, const ElementRef& e) {
    if (e.granularity == Granularity::Token) return tokens_of(ctx, e.side).token(e.id).range;
    return ast_of(ctx, e.side).node(e.id).range;
}

int enclosing_statement_of(const MeasureContext& ctx, const ElementRef& e) {
    if (e.granularity == Granularity::Statement) return e.id;
    return tokens_of(ctx, e.side).enclosing_statement[static_cast<size_t>(e.id)];
}

uint32_t line_of_offset(const Ast& ast, uint32_t offset) {
    uint32_t line = 1;
    for (uint32_t i = 0; i < offset && i < ast.source.size(); ++i) {
        if (ast.source[i] == '\n') ++line;
    }
    return line;
}

// Collapses whitespace runs and truncates; keeps report lines single-line.
std::string single_line(std::string_view text, size_t limit = 72) {
    std::string out;
    bool pending_space = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    if (out.size() > limit) {
        out.resize(limit);
        out += "...";
    }
    return out;
}

std::vector<StatementGroup> group_verdicts(const MeasureContext& ctx,
                                           const std::vector<Verdict>& verdicts) {
    std::map<std::pair<int, int>, StatementGroup> groups;
    for (const Verdict& v : verdicts) {
        const int stmt = enclosing_statement_of(ctx, v.element);
        auto [it, inserted] = groups.try_emplace({static_cast<int>(v.element.side), stmt});
        StatementGroup& g = it->second;
        if (inserted) {
            g.side = v.element.side;
            g.stmt_id = stmt;
            const Ast& ast = ast_of(ctx, v.element.side);
            if (stmt != kNoNode) {
                g.range = ast.node(stmt).range;
                g.statement_text = std::string(ast.node_text(stmt));
                g.line = ast.line_of(stmt);
            } else {
                g.range = element_range(ctx, v.element);
                g.line = line_of_offset(ast, g.range.begin);
            }
        } else if (stmt == kNoNode) {
            const Range r = element_range(ctx, v.element);
            g.range.begin = std::min(g.range.begin, r.begin);
            g.range.end = std::max(g.range.end, r.end);
        }
        g.verdicts.push_back({v.element, element_text(ctx, v.element), element_range(ctx, v.element),
                              v.decided_by, v.evidence});
    }
    std::vector<StatementGroup> out;
    out.reserve(groups.size());
    for (auto& [key, g] : groups) {
        std::sort(g.verdicts.begin(), g.verdicts.end(),
                  [](const ReportVerdict& x, const ReportVerdict& y) { return x.element < y.element; });
        out.push_back(std::move(g));
    }
    return out;
}

std::string describe_statement(const Ast& ast, Side side, int id) {
    std::ostringstream os;
    const AstNode& n = ast.node(id);
    os << side_name(side) << " [" << n.range.begin << "," << n.range.end << ") line "
       << ast.line_of(id) << ": " << single_line(ast.node_text(id));
    return os.str();
}

std::string describe_token(const Token& t) {
    std::ostringstream os;
    os << '"' << single_line(t.text, 40) << "\" [" << t.range.begin << "," << t.range.end << ")";
    return os.str();
}

std::vector<StatementDigest> build_digests(const MeasureContext& ctx,
                                           const std::vector<AlgorithmView>& views) {
    std::vector<StatementDigest> out;
    for (Side side : {Side::Src, Side::Dst}) {
        const Ast& ast = ast_of(ctx, side);
        const Ast& other = ast_of(ctx, side == Side::Src ? Side::Dst : Side::Src);
        const TokenList& toks = tokens_of(ctx, side);
        const TokenList& other_toks = tokens_of(ctx, side == Side::Src ? Side::Dst : Side::Src);
        std::vector<std::vector<int>> stmt_tokens(ast.nodes.size());
        for (size_t ti = 0; ti < toks.size(); ++ti) {
            const int s = toks.enclosing_statement[ti];
            if (s != kNoNode) stmt_tokens[static_cast<size_t>(s)].push_back(static_cast<int>(ti));
        }
        for (int s : ast.statements()) {
            StatementDigest d;
            d.side = side;
            d.id = s;
            d.line = ast.line_of(s);
            d.range = ast.node(s).range;
            d.text = std::string(ast.node_text(s));
            for (const AlgorithmView& view : views) {
                const auto& fwd = side == Side::Src ? view.stmts.src_to_dst : view.stmts.dst_to_src;
                const int partner =
                    s < static_cast<int>(fwd.size()) ? fwd[static_cast<size_t>(s)] : kNoNode;
                d.stmt_partner.push_back(
                    partner == kNoNode
                        ? std::string()
                        : describe_statement(other, side == Side::Src ? Side::Dst : Side::Src,
                                             partner));
            }
            for (int ti : stmt_tokens[static_cast<size_t>(s)]) {
                const Token& t = toks.token(ti);
                TokenDigest td{t.text, t.range, {}};
                for (const AlgorithmView& view : views) {
                    const auto& fwd =
                        side == Side::Src ? view.tokens.src_to_dst : view.tokens.dst_to_src;
                    const int partner = ti < static_cast<int>(fwd.size())
                                            ? fwd[static_cast<size_t>(ti)]
                                            : -1;
                    td.partner.push_back(partner < 0 ? std::string()
                                                     : describe_token(other_toks.token(partner)));
                }
                d.tokens.push_back(std::move(td));
            }
            out.push_back(std::move(d));
        }
    }
    return out;
}

ordered_json range_json(const Range& r) {
    return ordered_json{{"start", r.begin}, {"end", r.end}};
}

ordered_json element_json(const ElementRef& e, const std::string& text, const Range& range) {
    return ordered_json{{"granularity", granularity_name(e.granularity)},
                        {"side", side_name(e.side)},
                        {"id", e.id},
                        {"text", text},
                        {"range", range_json(range)}};
}

ordered_json revision_json(const RevisionReport& r) {
    ordered_json j;
    j["revision"] = r.revision;
    if (!r.error.empty()) j["error"] = r.error;
    ordered_json algos = ordered_json::array();
    for (const AlgorithmReport& ar : r.per_algorithm) {
        ordered_json stmts = ordered_json::array();
        for (const StatementGroup& g : ar.inaccurate_statements) {
            ordered_json verdicts = ordered_json::array();
            for (const ReportVerdict& v : g.verdicts) {
                verdicts.push_back(
                    ordered_json{{"element", element_json(v.element, v.element_text, v.element_range)},
                                 {"decided_by", v.decided_by},
                                 {"evidence", v.evidence}});
            }
            stmts.push_back(ordered_json{{"side", side_name(g.side)},
                                         {"range", range_json(g.range)},
                                         {"line", g.line},
                                         {"statement_text", g.statement_text},
                                         {"verdicts", std::move(verdicts)}});
        }
        algos.push_back(ordered_json{{"algorithm", ar.algorithm},
                                     {"inaccurate_statements", std::move(stmts)},
                                     {"flagged", ar.flagged}});
    }
    j["per_algorithm"] = std::move(algos);
    ordered_json pairs = ordered_json::array();
    for (const PairStat& p : r.pairs) {
        pairs.push_back(ordered_json{
            {"a", p.a}, {"b", p.b}, {"inconsistent_statement_count", p.inconsistent_statement_count}});
    }
    j["pairs"] = std::move(pairs);
    ordered_json und = ordered_json::array();
    for (const UndecidedDetail& u : r.undecided) {
        und.push_back(ordered_json{{"a", u.a},
                                   {"b", u.b},
                                   {"stage", u.stage},
                                   {"element", element_json(u.element, u.element_text, u.element_range)}});
    }
    j["undecided"] = std::move(und);
    return j;
}

}  // namespace

RevisionReport build_revision_report(std::string revision_id, const MeasureContext& ctx,
                                     const std::vector<AlgorithmView>& views,
                                     const RevisionJudgement& judgement) {
    RevisionReport r;
    r.revision = std::move(revision_id);
    for (const AlgorithmView& v : views) r.algorithms.push_back(v.name);
    for (size_t i = 0; i < views.size(); ++i) {
        AlgorithmReport ar;
        ar.algorithm = views[i].name;
        ar.inaccurate_statements = group_verdicts(ctx, judgement.per_algorithm[i]);
        ar.flagged = !ar.inaccurate_statements.empty();
        r.per_algorithm.push_back(std::move(ar));
    }
    for (const PairJudgement& pj : judgement.pairs) {
        r.pairs.push_back({pj.a, pj.b, pj.inconsistent_statement_count});
        for (const UndecidedEntry& u : pj.undecided) {
            r.undecided.push_back({u.a, u.b, u.stage, u.element, element_text(ctx, u.element),
                                   element_range(ctx, u.element)});
        }
    }
    r.digests = build_digests(ctx, views);
    return r;
}

RevisionReport build_error_report(std::string revision_id, std::vector<std::string> algorithms,
                                  std::string message) {
    RevisionReport r;
    r.revision = std::move(revision_id);
    r.error = std::move(message);
    r.algorithms = std::move(algorithms);
    for (const std::string& a : r.algorithms) {
        AlgorithmReport ar;
        ar.algorithm = a;
        r.per_algorithm.push_back(std::move(ar));
    }
    return r;
}

CorpusReport assemble_corpus(std::vector<RevisionReport> revisions,
                             const std::vector<std::string>& algorithms) {
    CorpusReport c;
    c.revisions = std::move(revisions);
    for (const std::string& name : algorithms) {
        CorpusAlgorithmSummary s;
        s.algorithm = name;
        c.per_algorithm.push_back(std::move(s));
    }
    for (const RevisionReport& r : c.revisions) {
        if (!r.error.empty()) {
            ++c.error_count;
            continue;
        }
        for (const AlgorithmReport& ar : r.per_algorithm) {
            for (CorpusAlgorithmSummary& s : c.per_algorithm) {
                if (s.algorithm != ar.algorithm) continue;
                s.inaccurate_statement_count += static_cast<int>(ar.inaccurate_statements.size());
                if (ar.flagged) ++s.flagged_revision_count;
            }
        }
    }
    const size_t total = c.revisions.size();
    for (CorpusAlgorithmSummary& s : c.per_algorithm) {
        s.flagged_revision_ratio =
            total == 0 ? 0.0 : static_cast<double>(s.flagged_revision_count) / static_cast<double>(total);
    }
    return c;
}

std::string revision_report_to_json(const RevisionReport& report) {
    return revision_json(report).dump(2) + "\n";
}

std::string corpus_report_to_json(const CorpusReport& report) {
    ordered_json j;
    ordered_json revs = ordered_json::array();
    for (const RevisionReport& r : report.revisions) revs.push_back(revision_json(r));
    j["revisions"] = std::move(revs);
    ordered_json summary;
    summary["revision_count"] = report.revisions.size();
    summary["error_count"] = report.error_count;
    ordered_json errors = ordered_json::array();
    for (const RevisionReport& r : report.revisions) {
        if (r.error.empty()) continue;
        errors.push_back(ordered_json{{"revision", r.revision}, {"message", r.error}});
    }
    summary["errors"] = std::move(errors);
    ordered_json algos = ordered_json::array();
    for (const CorpusAlgorithmSummary& s : report.per_algorithm) {
        algos.push_back(ordered_json{{"algorithm", s.algorithm},
                                     {"inaccurate_statement_count", s.inaccurate_statement_count},
                                     {"flagged_revision_count", s.flagged_revision_count},
                                     {"flagged_revision_ratio", s.flagged_revision_ratio}});
    }
    summary["per_algorithm"] = std::move(algos);
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

namespace {

void render_revision(std::ostream& os, const RevisionReport& r, const std::string& filter) {
    os << "revision " << r.revision << "\n";
    if (!r.error.empty()) {
        os << "  error: " << r.error << "\n";
        return;
    }
    for (const AlgorithmReport& ar : r.per_algorithm) {
        if (!ar.flagged) {
            os << "  " << ar.algorithm << ": clean\n";
            continue;
        }
        os << "  " << ar.algorithm << ": " << ar.inaccurate_statements.size()
           << " inaccurate statement(s)\n";
        for (const StatementGroup& g : ar.inaccurate_statements) {
            os << "    " << side_name(g.side) << " [" << g.range.begin << "," << g.range.end
               << ") line " << g.line << ": "
               << (g.stmt_id == kNoNode ? std::string("(outside statements)")
                                        : single_line(g.statement_text))
               << "\n";
            for (const ReportVerdict& v : g.verdicts) {
                os << "      ";
                if (v.element.granularity == Granularity::Token) {
                    os << "token \"" << single_line(v.element_text, 40) << "\" ["
                       << v.element_range.begin << "," << v.element_range.end << ")";
                } else {
                    os << "statement";
                }
                os << " decided by " << v.decided_by << ": " << v.evidence << "\n";
            }
        }
    }
    for (const PairStat& p : r.pairs) {
        os << "  pair " << p.a << "/" << p.b << ": " << p.inconsistent_statement_count
           << " inconsistent statement(s)\n";
    }
    for (const UndecidedDetail& u : r.undecided) {
        os << "  undecided " << u.a << "/" << u.b << " (" << u.stage << "): "
           << granularity_name(u.element.granularity) << " " << side_name(u.element.side) << " \""
           << single_line(u.element_text, 40) << "\" [" << u.element_range.begin << ","
           << u.element_range.end << ")\n";
    }
    if (filter.empty()) return;
    bool any = false;
    for (const StatementDigest& d : r.digests) {
        if (d.text.find(filter) == std::string::npos) continue;
        if (!any) {
            os << "  statement view \"" << single_line(filter, 40) << "\"\n";
            any = true;
        }
        os << "    " << side_name(d.side) << " [" << d.range.begin << "," << d.range.end
           << ") line " << d.line << ": " << single_line(d.text) << "\n";
        for (size_t i = 0; i < r.algorithms.size(); ++i) {
            os << "      " << r.algorithms[i] << " -> "
               << (d.stmt_partner[i].empty() ? std::string("(unmapped)") : d.stmt_partner[i])
               << "\n";
        }
        for (const TokenDigest& t : d.tokens) {
            os << "      token \"" << single_line(t.text, 40) << "\" [" << t.range.begin << ","
               << t.range.end << "):";
            for (size_t i = 0; i < r.algorithms.size(); ++i) {
                os << (i == 0 ? " " : ", ") << r.algorithms[i] << " -> "
                   << (t.partner[i].empty() ? std::string("(unmapped)") : t.partner[i]);
            }
            os << "\n";
        }
    }
    if (!any) os << "  statement view \"" << single_line(filter, 40) << "\": no match\n";
}

}  // namespace

std::string revision_report_to_text(const RevisionReport& report,
                                    const std::string& statement_filter) {
    std::ostringstream os;
    render_revision(os, report, statement_filter);
    return os.str();
}

std::string corpus_report_to_text(const CorpusReport& report,
                                  const std::string& statement_filter) {
    std::ostringstream os;
    os << "corpus: " << report.revisions.size() << " revision(s), " << report.error_count
       << " error(s)\n";
    for (const CorpusAlgorithmSummary& s : report.per_algorithm) {
        os << "  " << s.algorithm << ": " << s.inaccurate_statement_count
           << " inaccurate statement(s) across " << s.flagged_revision_count
           << " flagged revision(s) (ratio " << std::fixed << std::setprecision(3)
           << s.flagged_revision_ratio << ")\n";
        os.unsetf(std::ios::floatfield);
    }
    for (const RevisionReport& r : report.revisions) render_revision(os, r, statement_filter);
    return os.str();
}

}  // namespace astdiff
