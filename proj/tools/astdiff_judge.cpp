#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astdiff/astdiff.h"

namespace {

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { astdiff_string_free(ptr); }
};

int tool_error(const std::string& what, astdiff_status status) {
    std::cerr << "astdiff-judge: " << what << ": " << astdiff_status_name(status) << ": "
              << astdiff_last_error() << "\n";
    return 1;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const char* content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct RunArgs {
    std::string corpus;
    std::string algorithms = "gt,mtd,ijm";
    bool external = false;
    int jobs = 1;
    std::string format = "json";
    std::string out;
    std::string config;
    std::string statement;
    int min_subtree_height = 0;
    double dice_threshold = 0.0;
    double name_similarity_threshold = 0.0;
    bool nit_names_only = false;
};

int do_run(const CLI::App& cmd, const RunArgs& args) {
    astdiff_options options;
    astdiff_options_init(&options);
    std::string algorithms = args.algorithms;
    if (!args.config.empty()) {
        OwnedString csv;
        const astdiff_status status =
            astdiff_options_load(args.config.c_str(), &options, &csv.ptr);
        if (status != ASTDIFF_OK) return tool_error("loading " + args.config, status);
        if (cmd.count("--algorithms") == 0) algorithms = csv.ptr;
    }
    if (cmd.count("--jobs") != 0) options.jobs = args.jobs;
    if (cmd.count("--min-subtree-height") != 0) options.min_subtree_height = args.min_subtree_height;
    if (cmd.count("--dice-threshold") != 0) options.dice_threshold = args.dice_threshold;
    if (cmd.count("--name-similarity-threshold") != 0) {
        options.name_similarity_threshold = args.name_similarity_threshold;
    }
    if (args.nit_names_only) options.nit_names_only = 1;

    const std::vector<std::string> names = split_csv(algorithms);
    std::vector<const char*> cnames;
    cnames.reserve(names.size());
    for (const std::string& n : names) cnames.push_back(n.c_str());

    astdiff_report* report = nullptr;
    astdiff_status status = astdiff_run_corpus(args.corpus.c_str(), cnames.data(), cnames.size(),
                                               args.external ? 1 : 0, &options, &report);
    if (status != ASTDIFF_OK) return tool_error("running " + args.corpus, status);

    OwnedString rendered;
    status = args.format == "text"
                 ? astdiff_report_to_text(report, args.statement.c_str(), &rendered.ptr)
                 : astdiff_report_to_json(report, &rendered.ptr);
    if (status != ASTDIFF_OK) {
        astdiff_report_free(report);
        return tool_error("rendering report", status);
    }
    const bool had_errors = astdiff_report_had_errors(report) != 0;
    astdiff_report_free(report);

    if (!args.out.empty()) {
        if (!write_file(args.out, rendered.ptr)) {
            std::cerr << "astdiff-judge: cannot write " << args.out << "\n";
            return 1;
        }
    } else {
        std::cout << rendered.ptr;
    }
    return had_errors ? 1 : 0;
}

int do_eval(const std::string& report_path, const std::string& labels_path) {
    std::string report_text;
    if (!read_file(report_path, report_text)) {
        std::cerr << "astdiff-judge: cannot read " << report_path << "\n";
        return 1;
    }
    std::string labels_text;
    if (!read_file(labels_path, labels_text)) {
        std::cerr << "astdiff-judge: cannot read " << labels_path << "\n";
        return 1;
    }
    OwnedString result;
    const astdiff_status status =
        astdiff_evaluate(report_text.c_str(), labels_text.c_str(), &result.ptr);
    if (status != ASTDIFF_OK) return tool_error("evaluating", status);
    std::cout << result.ptr;
    return 0;
}

int do_dump_tokens(const std::string& path) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "astdiff-judge: cannot read " << path << "\n";
        return 1;
    }
    astdiff_ast* ast = nullptr;
    const astdiff_status status = ends_with(path, ".ast.json")
                                      ? astdiff_ast_from_json(text.c_str(), &ast)
                                      : astdiff_parse_source(text.c_str(), &ast);
    if (status != ASTDIFF_OK) return tool_error("loading " + path, status);
    OwnedString dump;
    const astdiff_status dump_status = astdiff_ast_token_dump(ast, &dump.ptr);
    astdiff_ast_free(ast);
    if (dump_status != ASTDIFF_OK) return tool_error("dumping tokens", dump_status);
    std::cout << dump.ptr;
    return 0;
}

int do_gen_synth(uint64_t seed, int count, const std::string& out_dir) {
    OwnedString summary;
    const astdiff_status status =
        astdiff_generate_corpus(seed, count, out_dir.c_str(), &summary.ptr);
    if (status != ASTDIFF_OK) return tool_error("generating " + out_dir, status);
    std::cout << summary.ptr;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential judge for AST mapping algorithms"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Judge every revision in a corpus directory");
    run->add_option("--corpus", run_args.corpus, "Corpus root: one subdirectory per revision")
        ->required();
    run->add_option("--algorithms", run_args.algorithms,
                    "Comma-separated algorithm names (default gt,mtd,ijm)");
    run->add_flag("--external", run_args.external,
                  "Read mapping.<name>.json files instead of running built-in mappers");
    run->add_option("--jobs", run_args.jobs, "Worker threads (default 1)");
    run->add_option("--format", run_args.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    run->add_option("--out", run_args.out, "Write the report to this file instead of stdout");
    run->add_option("--config", run_args.config, "JSON config file (CLI flags override it)");
    run->add_option("--statement", run_args.statement,
                    "Text mode: show a side-by-side view of statements containing this text");
    run->add_option("--min-subtree-height", run_args.min_subtree_height,
                    "Identical-subtree match minimum height");
    run->add_option("--dice-threshold", run_args.dice_threshold,
                    "Inner-node dice acceptance threshold");
    run->add_option("--name-similarity-threshold", run_args.name_similarity_threshold,
                    "Value-similarity gate for leaf and name matching");
    run->add_flag("--nit-names-only", run_args.nit_names_only,
                  "Count only name tokens when comparing shared-token counts");

    std::string eval_report;
    std::string eval_labels;
    CLI::App* eval = app.add_subcommand("eval", "Score a report against ground-truth labels");
    eval->add_option("--report", eval_report, "Corpus report JSON file")->required();
    eval->add_option("--labels", eval_labels, "Ground-truth labels JSON file")->required();

    std::string dump_path;
    CLI::App* dump = app.add_subcommand("dump-tokens", "Print the token table of one file");
    dump->add_option("file", dump_path, "Source file or AST interchange document (*.ast.json)")
        ->required();

    uint64_t synth_seed = 1;
    int synth_count = 200;
    std::string synth_out;
    CLI::App* synth = app.add_subcommand("gen-synth", "Generate a synthetic corpus");
    synth->add_option("--seed", synth_seed, "Generator seed (default 1)");
    synth->add_option("--count", synth_count, "Number of revisions (default 200)");
    synth->add_option("--out", synth_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) return do_run(*run, run_args);
    if (eval->parsed()) return do_eval(eval_report, eval_labels);
    if (dump->parsed()) return do_dump_tokens(dump_path);
    if (synth->parsed()) return do_gen_synth(synth_seed, synth_count, synth_out);
    return 2;
}
