#include "core/synth.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/interchange.hpp"
#include "core/mapping.hpp"
#include "core/parser.hpp"
#include "core/refine.hpp"
#include "core/tokens.hpp"

namespace astdiff {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    int below(int n) { return static_cast<int>(eng_() % static_cast<uint64_t>(n)); }

  private:
    std::mt19937_64 eng_;
};

constexpr const char* kVarBases[] = {"alpha", "beta", "gamma", "delta", "omega", "sigma"};
constexpr const char* kCallBases[] = {"compute", "update", "merge", "fetch", "blend"};

// Counter-suffixed names keep every identifier in a file textually unique, so
// wrongly crossed statements never share name tokens.
struct NameGen {
    int counter = 0;
    std::string var() {
        const std::string name = std::string(kVarBases[counter % 6]) + std::to_string(counter);
        ++counter;
        return name;
    }
    std::string call() {
        const std::string name = std::string(kCallBases[counter % 5]) + std::to_string(counter);
        ++counter;
        return name;
    }
};

enum class StmtKind { Assign, Repeat, Decl, If, For, Ret };

struct StmtModel {
    int identity = -1;
    StmtKind kind = StmtKind::Assign;
    std::vector<std::string> names;
    std::string type_kw = "int";
    int literal = 0;
};

struct MethodModel {
    std::string name;
    std::vector<std::string> param_names;
    bool returns_int = false;
    std::vector<StmtModel> before;
    std::vector<StmtModel> after;
};

struct FileModel {
    std::string class_name;
    std::vector<MethodModel> methods;
};

StmtModel make_stmt(int identity, StmtKind kind, NameGen& ng, Rng& rng) {
    StmtModel s;
    s.identity = identity;
    s.kind = kind;
    s.literal = rng.below(100);
    switch (kind) {
        case StmtKind::Assign:
        case StmtKind::Repeat:
            s.names = {ng.var(), ng.call(), ng.var(), ng.var()};
            break;
        case StmtKind::Decl:
            s.names = {ng.var()};
            s.type_kw = rng.below(2) == 0 ? "int" : "long";
            break;
        case StmtKind::If:
        case StmtKind::For:
            s.names = {ng.var(), ng.var(), ng.var()};
            break;
        case StmtKind::Ret:
            s.names = {ng.var()};
            break;
    }
    return s;
}

std::string emit_stmt(const StmtModel& s) {
    std::ostringstream os;
    const auto& n = s.names;
    switch (s.kind) {
        case StmtKind::Assign:
            os << n[0] << " = " << n[1] << "(" << n[2] << ", " << n[3] << ");";
            break;
        case StmtKind::Repeat:
            os << n[0] << " = " << n[1] << "(" << n[2] << ", " << n[3] << ", " << n[2] << ");";
            break;
        case StmtKind::Decl:
            os << s.type_kw << " " << n[0] << " = " << s.literal << ";";
            break;
        case StmtKind::If:
            os << "if (" << n[0] << " == " << n[1] << ") { " << n[2] << " = " << n[0] << "; }";
            break;
        case StmtKind::For:
            os << "for (int " << n[0] << " = 0; " << n[0] << " < " << n[1] << "; " << n[0]
               << "++) { " << n[2] << " = " << n[2] << " + " << n[0] << "; }";
            break;
        case StmtKind::Ret:
            os << "return " << n[0] << ";";
            break;
    }
    return os.str();
}

std::string emit_source(const FileModel& f, bool after_side) {
    std::ostringstream os;
    os << "public class " << f.class_name << " {\n";
    for (const MethodModel& m : f.methods) {
        os << "    public " << (m.returns_int ? "int" : "void") << " " << m.name << "(";
        for (size_t i = 0; i < m.param_names.size(); ++i) {
            os << (i == 0 ? "" : ", ") << "int " << m.param_names[i];
        }
        os << ") {\n";
        for (const StmtModel& s : after_side ? m.after : m.before) {
            os << "        " << emit_stmt(s) << "\n";
        }
        os << "    }\n";
    }
    os << "}\n";
    return os.str();
}

FileModel build_model(int rev_index, Rng& rng, NameGen& ng, int& next_identity) {
    FileModel f;
    f.class_name = "Sample" + std::to_string(rev_index);
    const int methods = 2 + rng.below(2);
    for (int j = 0; j < methods; ++j) {
        MethodModel m;
        m.name = "run" + std::to_string(j);
        const int params = rng.below(3);
        for (int p = 0; p < params; ++p) m.param_names.push_back(ng.var());
        m.returns_int = rng.below(2) == 1;
        std::vector<StmtKind> kinds = {StmtKind::Assign, StmtKind::Repeat, StmtKind::Assign};
        static constexpr StmtKind kPool[] = {StmtKind::Assign, StmtKind::Repeat, StmtKind::Decl,
                                             StmtKind::If, StmtKind::For};
        const int extra = rng.below(4);
        for (int e = 0; e < extra; ++e) kinds.push_back(kPool[rng.below(5)]);
        if (m.returns_int) kinds.push_back(StmtKind::Ret);
        for (StmtKind k : kinds) m.before.push_back(make_stmt(next_identity++, k, ng, rng));
        m.after = m.before;
        f.methods.push_back(std::move(m));
    }
    return f;
}

void apply_edits(FileModel& f, Rng& rng, NameGen& ng, int& next_identity) {
    const int edits = 1 + rng.below(3);
    for (int e = 0; e < edits; ++e) {
        MethodModel& m = f.methods[static_cast<size_t>(rng.below(static_cast<int>(f.methods.size())))];
        const int tail = m.returns_int ? 1 : 0;
        const int region = static_cast<int>(m.after.size()) - tail;
        switch (rng.below(5)) {
            case 0: {  // rename one identifier
                if (m.after.empty()) break;
                StmtModel& s = m.after[static_cast<size_t>(rng.below(static_cast<int>(m.after.size())))];
                s.names[static_cast<size_t>(rng.below(static_cast<int>(s.names.size())))] += "x";
                break;
            }
            case 1: {  // change a declared type
                std::vector<StmtModel*> decls;
                for (MethodModel& mm : f.methods) {
                    for (StmtModel& s : mm.after) {
                        if (s.kind == StmtKind::Decl) decls.push_back(&s);
                    }
                }
                if (decls.empty()) break;
                StmtModel& s = *decls[static_cast<size_t>(rng.below(static_cast<int>(decls.size())))];
                s.type_kw = s.type_kw == "int" ? "long" : "int";
                break;
            }
            case 2: {  // move a statement within its block
                if (region < 2) break;
                const int from = rng.below(region);
                const int to = rng.below(region - 1);
                StmtModel s = m.after[static_cast<size_t>(from)];
                m.after.erase(m.after.begin() + from);
                m.after.insert(m.after.begin() + to, std::move(s));
                break;
            }
            case 3: {  // insert a new statement
                const StmtKind k = rng.below(2) == 0 ? StmtKind::Assign : StmtKind::Decl;
                StmtModel s = make_stmt(next_identity++, k, ng, rng);
                const int pos = rng.below(region + 1);
                m.after.insert(m.after.begin() + pos, std::move(s));
                break;
            }
            case 4: {  // delete a statement
                if (region < 1 || m.after.size() < 2) break;
                m.after.erase(m.after.begin() + rng.below(region));
                break;
            }
        }
    }
}

struct ParsedMethod {
    int method_node = kNoNode;
    int block_node = kNoNode;
    std::vector<int> stmt_nodes;
};

struct ParsedSide {
    Ast ast;
    int class_node = kNoNode;
    std::vector<ParsedMethod> methods;
};

ParsedSide analyze(Ast ast) {
    ParsedSide p;
    p.ast = std::move(ast);
    const AstNode& root = p.ast.node(0);
    if (root.children.size() != 1) throw std::logic_error("synth: expected one class");
    p.class_node = root.children[0];
    const AstNode& cls = p.ast.node(p.class_node);
    for (size_t i = 2; i < cls.children.size(); ++i) {
        ParsedMethod pm;
        pm.method_node = cls.children[i];
        const AstNode& m = p.ast.node(pm.method_node);
        pm.block_node = m.children.back();
        for (int c : p.ast.node(pm.block_node).children) pm.stmt_nodes.push_back(c);
        p.methods.push_back(std::move(pm));
    }
    return p;
}

void check_shape(const FileModel& f, const ParsedSide& s, bool after_side) {
    if (s.methods.size() != f.methods.size()) throw std::logic_error("synth: method count mismatch");
    for (size_t j = 0; j < f.methods.size(); ++j) {
        const auto& list = after_side ? f.methods[j].after : f.methods[j].before;
        if (s.methods[j].stmt_nodes.size() != list.size()) {
            throw std::logic_error("synth: statement count mismatch");
        }
    }
}

void pair_offset(const Ast& a, const Ast& b, int na, int nb, std::vector<NodePair>& out) {
    const int len = a.node(na).subtree_end - na;
    if (len != b.node(nb).subtree_end - nb) throw std::logic_error("synth: subtree shape mismatch");
    for (int k = 0; k <= len; ++k) {
        if (a.node(na + k).label != b.node(nb + k).label) {
            throw std::logic_error("synth: subtree label mismatch");
        }
        out.push_back({na + k, nb + k});
    }
}

std::vector<NodePair> build_truth(const FileModel& f, const ParsedSide& S, const ParsedSide& D) {
    std::vector<NodePair> out;
    out.push_back({0, 0});
    out.push_back({S.class_node, D.class_node});
    const AstNode& cs = S.ast.node(S.class_node);
    const AstNode& cd = D.ast.node(D.class_node);
    out.push_back({cs.children[0], cd.children[0]});  // class modifier
    out.push_back({cs.children[1], cd.children[1]});  // class name
    for (size_t j = 0; j < f.methods.size(); ++j) {
        const ParsedMethod& ms = S.methods[j];
        const ParsedMethod& md = D.methods[j];
        out.push_back({ms.method_node, md.method_node});
        const AstNode& hs = S.ast.node(ms.method_node);
        const AstNode& hd = D.ast.node(md.method_node);
        if (hs.children.size() != hd.children.size()) {
            throw std::logic_error("synth: method header mismatch");
        }
        for (size_t k = 0; k + 1 < hs.children.size(); ++k) {
            pair_offset(S.ast, D.ast, hs.children[k], hd.children[k], out);
        }
        out.push_back({ms.block_node, md.block_node});
        std::map<int, int> dst_by_identity;
        for (size_t i = 0; i < f.methods[j].after.size(); ++i) {
            dst_by_identity[f.methods[j].after[i].identity] = md.stmt_nodes[i];
        }
        for (size_t i = 0; i < f.methods[j].before.size(); ++i) {
            auto it = dst_by_identity.find(f.methods[j].before[i].identity);
            if (it == dst_by_identity.end()) continue;
            pair_offset(S.ast, D.ast, ms.stmt_nodes[i], it->second, out);
        }
    }
    return out;
}

struct CommonStmt {
    int method = 0;
    StmtKind kind = StmtKind::Assign;
    const StmtModel* before_model = nullptr;
    const StmtModel* after_model = nullptr;
    int src_node = kNoNode;
    int dst_node = kNoNode;
};

std::vector<CommonStmt> find_commons(const FileModel& f, const ParsedSide& S, const ParsedSide& D) {
    std::vector<CommonStmt> out;
    for (size_t j = 0; j < f.methods.size(); ++j) {
        std::map<int, std::pair<const StmtModel*, int>> after_by_id;
        for (size_t i = 0; i < f.methods[j].after.size(); ++i) {
            after_by_id[f.methods[j].after[i].identity] = {&f.methods[j].after[i],
                                                          D.methods[j].stmt_nodes[i]};
        }
        for (size_t i = 0; i < f.methods[j].before.size(); ++i) {
            const StmtModel& b = f.methods[j].before[i];
            auto it = after_by_id.find(b.identity);
            if (it == after_by_id.end()) continue;
            out.push_back({static_cast<int>(j), b.kind, &b, it->second.first,
                           S.methods[j].stmt_nodes[i], it->second.second});
        }
    }
    return out;
}

std::vector<int> leaves_with_value(const Ast& a, int root, std::string_view value) {
    std::vector<int> out;
    for (int i = root; i <= a.node(root).subtree_end; ++i) {
        if (a.node(i).is_leaf() && a.node(i).value == value) out.push_back(i);
    }
    return out;
}

void erase_src_subtree(std::vector<NodePair>& pairs, const Ast& src, int root) {
    const int end = src.node(root).subtree_end;
    std::erase_if(pairs, [&](const NodePair& p) { return p.src >= root && p.src <= end; });
}

void erase_pair_with_src(std::vector<NodePair>& pairs, int src) {
    std::erase_if(pairs, [&](const NodePair& p) { return p.src == src; });
}

bool redirect_dst(std::vector<NodePair>& pairs, int src, int new_dst) {
    for (NodePair& p : pairs) {
        if (p.src == src) {
            p.dst = new_dst;
            return true;
        }
    }
    return false;
}

enum class Corruption { None, Swap, TokenCross, KindCross, Nit0Cross, Unmap, BlockCross };

const char* corruption_name(Corruption c) {
    switch (c) {
        case Corruption::None: return "none";
        case Corruption::Swap: return "statement_swap";
        case Corruption::TokenCross: return "token_cross";
        case Corruption::KindCross: return "kind_cross";
        case Corruption::Nit0Cross: return "nit_zero_cross";
        case Corruption::Unmap: return "unmap_statement";
        case Corruption::BlockCross: return "block_cross";
    }
    return "none";
}

// Mutates the pair list for one planted defect; returns false when the
// current revision lacks the needed ingredients.
bool try_corruption(Corruption kind, std::vector<NodePair>& pairs, const ParsedSide& S,
                    const ParsedSide& D, const std::vector<CommonStmt>& commons, Rng& rng) {
    switch (kind) {
        case Corruption::None:
            return true;
        case Corruption::Swap: {
            std::vector<std::pair<size_t, size_t>> cands;
            for (size_t i = 0; i < commons.size(); ++i) {
                for (size_t j = i + 1; j < commons.size(); ++j) {
                    if (commons[i].method == commons[j].method &&
                        commons[i].kind == StmtKind::Assign && commons[j].kind == StmtKind::Assign) {
                        cands.emplace_back(i, j);
                    }
                }
            }
            if (cands.empty()) return false;
            const auto [i, j] = cands[static_cast<size_t>(rng.below(static_cast<int>(cands.size())))];
            const CommonStmt& a = commons[i];
            const CommonStmt& b = commons[j];
            erase_src_subtree(pairs, S.ast, a.src_node);
            erase_src_subtree(pairs, S.ast, b.src_node);
            pair_offset(S.ast, D.ast, a.src_node, b.dst_node, pairs);
            pair_offset(S.ast, D.ast, b.src_node, a.dst_node, pairs);
            return true;
        }
        case Corruption::TokenCross: {
            std::vector<const CommonStmt*> cands;
            for (const CommonStmt& c : commons) {
                if (c.kind == StmtKind::Repeat) cands.push_back(&c);
            }
            if (cands.empty()) return false;
            const CommonStmt& c = *cands[static_cast<size_t>(rng.below(static_cast<int>(cands.size())))];
            const auto sx = leaves_with_value(S.ast, c.src_node, c.before_model->names[2]);
            const auto dx = leaves_with_value(D.ast, c.dst_node, c.after_model->names[2]);
            if (sx.size() != 2 || dx.size() != 2) return false;
            return redirect_dst(pairs, sx[0], dx[1]) && redirect_dst(pairs, sx[1], dx[0]);
        }
        case Corruption::KindCross: {
            std::vector<const CommonStmt*> cands;
            for (const CommonStmt& c : commons) {
                if (c.kind == StmtKind::Repeat) cands.push_back(&c);
            }
            if (cands.empty()) return false;
            const CommonStmt& c = *cands[static_cast<size_t>(rng.below(static_cast<int>(cands.size())))];
            const auto ls = leaves_with_value(S.ast, c.src_node, c.before_model->names[0]);
            const auto cs = leaves_with_value(S.ast, c.src_node, c.before_model->names[1]);
            const auto cd = leaves_with_value(D.ast, c.dst_node, c.after_model->names[1]);
            if (ls.empty() || cs.empty() || cd.empty()) return false;
            erase_pair_with_src(pairs, ls[0]);
            erase_pair_with_src(pairs, cs[0]);
            pairs.push_back({ls[0], cd[0]});
            return true;
        }
        case Corruption::Nit0Cross: {
            std::vector<const CommonStmt*> cands;
            for (const CommonStmt& c : commons) {
                if (c.kind == StmtKind::Assign || c.kind == StmtKind::Repeat) cands.push_back(&c);
            }
            if (cands.size() < 2) return false;
            const size_t i = static_cast<size_t>(rng.below(static_cast<int>(cands.size())));
            size_t j = static_cast<size_t>(rng.below(static_cast<int>(cands.size() - 1)));
            if (j >= i) ++j;
            const CommonStmt& a = *cands[i];
            const CommonStmt& b = *cands[j];
            erase_src_subtree(pairs, S.ast, a.src_node);
            erase_src_subtree(pairs, S.ast, b.src_node);
            pairs.push_back({a.src_node, b.dst_node});
            return true;
        }
        case Corruption::Unmap: {
            if (commons.empty()) return false;
            const CommonStmt& c =
                commons[static_cast<size_t>(rng.below(static_cast<int>(commons.size())))];
            erase_src_subtree(pairs, S.ast, c.src_node);
            return true;
        }
        case Corruption::BlockCross: {
            if (S.methods.size() < 2 || D.methods.size() < 2) return false;
            const int b0s = S.methods[0].block_node;
            const int b1s = S.methods[1].block_node;
            const int b1d = D.methods[1].block_node;
            erase_pair_with_src(pairs, b0s);
            erase_pair_with_src(pairs, b1s);
            pairs.push_back({b0s, b1d});
            return true;
        }
    }
    return false;
}

Corruption apply_corruption(Corruption want, std::vector<NodePair>& pairs, const ParsedSide& S,
                            const ParsedSide& D, const std::vector<CommonStmt>& commons, Rng& rng) {
    for (Corruption attempt : {want, Corruption::Unmap, Corruption::None}) {
        if (try_corruption(attempt, pairs, S, D, commons, rng)) return attempt;
    }
    return Corruption::None;
}

// Interchange emission drops the trailing semicolon from statement ranges, so
// the semicolon token belongs to the surrounding block instead.
Ast strip_statement_semicolons(const Ast& in) {
    Ast out;
    out.source = in.source;
    out.statement_labels = in.statement_labels;
    out.block_label = in.block_label;
    out.nodes = in.nodes;
    for (AstNode& n : out.nodes) {
        if (in.kind(n.id) != StatementKind::NonStatement && n.range.end > n.range.begin &&
            out.source[n.range.end - 1] == ';') {
            --n.range.end;
        }
    }
    out.finalize();
    return out;
}

struct LabelRow {
    const char* side;
    Range range;
};

// A statement is labeled when the corrupted mapping's statement partner or
// any of its own tokens' partners differ from the truth mapping's.
std::vector<LabelRow> compute_labels(const Ast& before, const Ast& after,
                                     const NodeMappingSet& truth, const NodeMappingSet& corrupt) {
    const TokenList bt = tokenize(before);
    const TokenList at = tokenize(after);
    const AlgorithmView tv = build_view("truth", before, bt, after, at, truth);
    const AlgorithmView cv = build_view("corrupt", before, bt, after, at, corrupt);
    std::vector<LabelRow> out;
    for (int s : before.statements()) {
        bool differs = tv.stmts.src_to_dst[static_cast<size_t>(s)] !=
                       cv.stmts.src_to_dst[static_cast<size_t>(s)];
        for (size_t ti = 0; !differs && ti < bt.size(); ++ti) {
            if (bt.enclosing_statement[ti] != s) continue;
            differs = tv.tokens.src_to_dst[ti] != cv.tokens.src_to_dst[ti];
        }
        if (differs) out.push_back({"src", before.node(s).range});
    }
    for (int t : after.statements()) {
        bool differs = tv.stmts.dst_to_src[static_cast<size_t>(t)] !=
                       cv.stmts.dst_to_src[static_cast<size_t>(t)];
        for (size_t ti = 0; !differs && ti < at.size(); ++ti) {
            if (at.enclosing_statement[ti] != t) continue;
            differs = tv.tokens.dst_to_src[ti] != cv.tokens.dst_to_src[ti];
        }
        if (differs) out.push_back({"dst", after.node(t).range});
    }
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path.string());
    out << content;
}

}  // namespace

SynthResult generate_corpus(const fs::path& out_dir, const SynthOptions& options) {
    fs::create_directories(out_dir);
    Rng rng(options.seed);
    ordered_json labels = ordered_json::array();
    ordered_json revisions = ordered_json::array();
    std::map<std::string, int> corruption_counts;
    int source_count = 0;
    int ast_json_count = 0;
    int label_total = 0;

    static constexpr Corruption kCycle[] = {Corruption::None,      Corruption::Swap,
                                            Corruption::TokenCross, Corruption::KindCross,
                                            Corruption::Nit0Cross,  Corruption::Unmap,
                                            Corruption::BlockCross};

    for (int index = 0; index < options.count; ++index) {
        std::ostringstream idos;
        idos << "rev" << std::setw(4) << std::setfill('0') << index;
        const std::string id = idos.str();

        NameGen ng;
        int next_identity = 0;
        FileModel f = build_model(index, rng, ng, next_identity);
        apply_edits(f, rng, ng, next_identity);
        const std::string before_src = emit_source(f, false);
        const std::string after_src = emit_source(f, true);
        ParsedSide S = analyze(parse_source(before_src));
        ParsedSide D = analyze(parse_source(after_src));
        check_shape(f, S, false);
        check_shape(f, D, true);

        const std::vector<NodePair> truth_pairs = build_truth(f, S, D);
        const std::vector<CommonStmt> commons = find_commons(f, S, D);
        std::vector<NodePair> corrupt_pairs = truth_pairs;
        const Corruption applied =
            apply_corruption(kCycle[index % 7], corrupt_pairs, S, D, commons, rng);

        const bool ast_json = applied == Corruption::Nit0Cross || rng.below(10) == 0;
        const Ast final_before = ast_json ? strip_statement_semicolons(S.ast) : S.ast;
        const Ast final_after = ast_json ? strip_statement_semicolons(D.ast) : D.ast;

        const NodeMappingSet truth = NodeMappingSet::build(final_before, final_after, truth_pairs);
        const NodeMappingSet corrupt =
            NodeMappingSet::build(final_before, final_after, corrupt_pairs);
        const std::vector<LabelRow> rows = compute_labels(final_before, final_after, truth, corrupt);

        const fs::path dir = out_dir / id;
        fs::create_directories(dir);
        if (ast_json) {
            write_file(dir / "before.ast.json", save_ast(final_before));
            write_file(dir / "after.ast.json", save_ast(final_after));
        } else {
            write_file(dir / "before.java", before_src);
            write_file(dir / "after.java", after_src);
        }
        write_file(dir / "mapping.truth.json", save_mapping(truth, "truth"));
        write_file(dir / "mapping.corrupt.json", save_mapping(corrupt, "corrupt"));

        for (const LabelRow& row : rows) {
            labels.push_back(ordered_json{
                {"revision", id},
                {"algorithm", "corrupt"},
                {"side", row.side},
                {"statement_range", ordered_json{{"start", row.range.begin}, {"end", row.range.end}}}});
        }
        label_total += static_cast<int>(rows.size());
        ++corruption_counts[corruption_name(applied)];
        ++(ast_json ? ast_json_count : source_count);
        revisions.push_back(ordered_json{{"revision", id},
                                         {"corruption", corruption_name(applied)},
                                         {"format", ast_json ? "ast_json" : "source"},
                                         {"labels", rows.size()}});
    }

    write_file(out_dir / "labels.json", labels.dump(2) + "\n");

    ordered_json summary;
    summary["seed"] = options.seed;
    summary["count"] = options.count;
    summary["label_count"] = label_total;
    ordered_json counts;
    for (const auto& [name, n] : corruption_counts) counts[name] = n;
    summary["corruptions"] = std::move(counts);
    summary["formats"] = ordered_json{{"source", source_count}, {"ast_json", ast_json_count}};
    summary["revisions"] = std::move(revisions);
    const std::string summary_text = summary.dump(2) + "\n";
    write_file(out_dir / "summary.json", summary_text);

    SynthResult result;
    result.revision_count = options.count;
    result.label_count = label_total;
    result.summary_json = summary_text;
    return result;
}

}  // namespace astdiff
