#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace astdiff {

struct EvalCounts {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    // Unset when the denominator is zero (no detections / no positives).
    std::optional<double> precision;
    std::optional<double> recall;
};

// Derives precision and recall from raw counts.
EvalCounts eval_from_counts(int tp, int fp, int fn);

struct EvalOutcome {
    std::vector<std::pair<std::string, EvalCounts>> per_algorithm;
    EvalCounts overall;
};

// Scores a corpus report against a ground-truth label file. Detections are
// the (revision, algorithm, side, statement range) tuples of the report's
// inaccurate statements; labels carry the same tuple shape.
EvalOutcome evaluate_detections(std::string_view report_json, std::string_view labels_json);

// JSON rendering of evaluate_detections:
// {per_algorithm: [{algorithm, tp, fp, fn, precision, recall}], overall: {...}}
// with null precision/recall where undefined.
std::string evaluate_report(std::string_view report_json, std::string_view labels_json);

}  // namespace astdiff
