#include "core/evaluate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "core/errors.hpp"

namespace astdiff {
namespace {

using ordered_json = nlohmann::ordered_json;

// (revision, side, range start, range end)
using Detection = std::tuple<std::string, std::string, uint64_t, uint64_t>;

nlohmann::json parse_or_throw(std::string_view text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string(what) + " parse error: " + e.what());
    }
}

const nlohmann::json& require(const nlohmann::json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(std::string(what) + " missing field: " + key);
    return *it;
}

struct Collected {
    std::vector<std::string> algorithms;  // first-appearance order
    std::map<std::string, std::set<Detection>> by_algorithm;

    void note_algorithm(const std::string& name) {
        if (by_algorithm.find(name) == by_algorithm.end()) {
            algorithms.push_back(name);
            by_algorithm.emplace(name, std::set<Detection>{});
        }
    }
};

void collect_detections(const nlohmann::json& report, Collected& out) {
    if (!report.is_object()) throw SchemaError("report must be a JSON object");
    // Accept both a corpus report ({revisions: [...]}) and a single revision.
    std::vector<const nlohmann::json*> revisions;
    if (report.contains("revisions")) {
        for (const auto& r : require(report, "revisions", "report")) revisions.push_back(&r);
    } else {
        revisions.push_back(&report);
    }
    for (const nlohmann::json* rev : revisions) {
        const std::string revision = require(*rev, "revision", "report").get<std::string>();
        for (const auto& algo : require(*rev, "per_algorithm", "report")) {
            const std::string name = require(algo, "algorithm", "report").get<std::string>();
            out.note_algorithm(name);
            for (const auto& stmt : require(algo, "inaccurate_statements", "report")) {
                const auto& range = require(stmt, "range", "report");
                out.by_algorithm[name].insert(
                    {revision, require(stmt, "side", "report").get<std::string>(),
                     require(range, "start", "report").get<uint64_t>(),
                     require(range, "end", "report").get<uint64_t>()});
            }
        }
    }
}

void collect_labels(const nlohmann::json& labels, Collected& out) {
    if (!labels.is_array()) throw SchemaError("labels must be a JSON array");
    for (const auto& entry : labels) {
        const std::string name = require(entry, "algorithm", "labels").get<std::string>();
        out.note_algorithm(name);
        const auto& range = require(entry, "statement_range", "labels");
        out.by_algorithm[name].insert(
            {require(entry, "revision", "labels").get<std::string>(),
             require(entry, "side", "labels").get<std::string>(),
             require(range, "start", "labels").get<uint64_t>(),
             require(range, "end", "labels").get<uint64_t>()});
    }
}

void fill_counts(ordered_json& j, const EvalCounts& c) {
    j["tp"] = c.tp;
    j["fp"] = c.fp;
    j["fn"] = c.fn;
    j["precision"] = c.precision ? ordered_json(*c.precision) : ordered_json(nullptr);
    j["recall"] = c.recall ? ordered_json(*c.recall) : ordered_json(nullptr);
}

ordered_json counts_json(const EvalCounts& c) {
    ordered_json j;
    fill_counts(j, c);
    return j;
}

}  // namespace

EvalCounts eval_from_counts(int tp, int fp, int fn) {
    EvalCounts c;
    c.tp = tp;
    c.fp = fp;
    c.fn = fn;
    if (tp + fp > 0) c.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (tp + fn > 0) c.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    return c;
}

EvalOutcome evaluate_detections(std::string_view report_json, std::string_view labels_json) {
    Collected detected;
    collect_detections(parse_or_throw(report_json, "report"), detected);
    Collected labeled;
    collect_labels(parse_or_throw(labels_json, "labels"), labeled);

    // Algorithm order: report first-appearance, then label-only algorithms.
    std::vector<std::string> order = detected.algorithms;
    for (const std::string& name : labeled.algorithms) {
        if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
    }

    EvalOutcome out;
    int tp_sum = 0;
    int fp_sum = 0;
    int fn_sum = 0;
    for (const std::string& name : order) {
        static const std::set<Detection> kEmpty;
        auto dit = detected.by_algorithm.find(name);
        auto lit = labeled.by_algorithm.find(name);
        const std::set<Detection>& det = dit == detected.by_algorithm.end() ? kEmpty : dit->second;
        const std::set<Detection>& lab = lit == labeled.by_algorithm.end() ? kEmpty : lit->second;
        int tp = 0;
        for (const Detection& d : det) tp += lab.count(d) ? 1 : 0;
        const int fp = static_cast<int>(det.size()) - tp;
        const int fn = static_cast<int>(lab.size()) - tp;
        out.per_algorithm.emplace_back(name, eval_from_counts(tp, fp, fn));
        tp_sum += tp;
        fp_sum += fp;
        fn_sum += fn;
    }
    out.overall = eval_from_counts(tp_sum, fp_sum, fn_sum);
    return out;
}

std::string evaluate_report(std::string_view report_json, std::string_view labels_json) {
    const EvalOutcome outcome = evaluate_detections(report_json, labels_json);
    ordered_json j;
    ordered_json algos = ordered_json::array();
    for (const auto& [name, counts] : outcome.per_algorithm) {
        ordered_json entry;
        entry["algorithm"] = name;
        fill_counts(entry, counts);
        algos.push_back(std::move(entry));
    }
    j["per_algorithm"] = std::move(algos);
    j["overall"] = counts_json(outcome.overall);
    return j.dump(2) + "\n";
}

}  // namespace astdiff
