#ifndef GINFER_REPORT_HPP
#define GINFER_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ginfer/classifier.hpp"
#include "ginfer/corpus.hpp"
#include "ginfer/eval.hpp"
#include "ginfer/lexicon.hpp"

namespace ginfer::report {

enum class Format { Json, Tsv };

std::optional<Format> parse_format(std::string_view name);

// Shortest round-trip decimal form; same digits on every platform.
std::string fmt_real(double value);

void write_predictions(std::ostream& out, std::span<const Prediction> predictions, Format format);

void write_eval(std::ostream& out, const EvalReport& report, std::string_view strategy,
                const MonteCarloResult* monte_carlo, Format format);

// One-line run summary for standard output.
std::string eval_summary_line(const EvalReport& report, std::string_view strategy);

void write_shadow(std::ostream& out, std::span<const ShadowPair> pairs, Format format);

void write_candidates(std::ostream& out, std::span<const CandidateTerm> candidates, Format format);

void write_sweep(std::ostream& out, std::span<const SweepRow> rows, Format format);

void write_stats(std::ostream& out, const CorpusStats& stats, const LoadedEdges* edge_load,
                 const PatternFeatureStats* features, Format format);

}  // namespace ginfer::report

#endif  // GINFER_REPORT_HPP
