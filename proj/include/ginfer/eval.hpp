#ifndef GINFER_EVAL_HPP
#define GINFER_EVAL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ginfer/classifier.hpp"

namespace ginfer {

struct Confusion {
    std::size_t ff = 0;  // true F, predicted F
    std::size_t fm = 0;  // true F, predicted M
    std::size_t mf = 0;  // true M, predicted F
    std::size_t mm = 0;  // true M, predicted M

    std::size_t total() const { return ff + fm + mf + mm; }
};

// Unset when the denominator is empty (absent class), never faked as 0.
struct ClassMetrics {
    std::optional<double> precision;
    std::optional<double> recall;
};

struct EvalReport {
    std::size_t n_evaluated = 0;
    double realized_accuracy = 0.0;
    double expected_accuracy = 0.0;
    double coverage = 0.0;  // fraction of evaluated users with a lexicon match
    std::optional<double> matched_accuracy;  // accuracy among matched; unset if none matched
    Confusion confusion;
    ClassMetrics female;
    ClassMetrics male;
};

// Scores predictions against the labeled table. Every user must have a
// label (run split_known first) and a prediction; a missing prediction
// throws InputError naming the user, an empty table EmptyInputError.
EvalReport evaluate(std::span<const Prediction> predictions,
                    std::span<const UserRecord> labeled_users, double prior_female);

enum class MatchOutcome : std::uint8_t { MatchedCorrect, MatchedWrong, Fallback };

// Expectation of accuracy over the fallback draws, holding matches
// fixed: (correct matches + p*|fallback F| + (1-p)*|fallback M|) / N.
double expected_accuracy(std::span<const MatchOutcome> outcomes,
                         std::span<const Gender> labels, double prior_female);

struct MonteCarloResult {
    double mean = 0.0;
    double std_error = 0.0;
    bool std_error_defined = false;  // false when trials == 1
    std::size_t trials = 0;
};

// Realized accuracy over `trials` reclassifications with seeds
// base_seed, base_seed+1, ...; mean and standard error of the mean.
MonteCarloResult monte_carlo_accuracy(const Matcher& matcher, const StrategyConfig& config,
                                      std::span<const UserRecord> labeled_users,
                                      std::size_t trials);

struct SweepRow {
    double prior_female = 0.0;
    double expected_accuracy = 0.0;
    double realized_accuracy = 0.0;
};

// One row per requested prior, in request order. Matches are computed
// once; only the fallback threshold moves.
std::vector<SweepRow> sweep_prior(const Matcher& matcher, const StrategyConfig& config,
                                  std::span<const UserRecord> labeled_users,
                                  std::span<const double> priors);

struct FeatureRow {
    std::string_view name;
    std::size_t female_count = 0;
    std::size_t male_count = 0;
    std::optional<double> female_prevalence;  // unset when the class is empty
    std::optional<double> male_prevalence;
};

constexpr std::size_t kPatternFeatureCount = 4;

// Prevalence of screen-name patterns by gender, detected on the
// normalized username: a character repeated >= 3 times in a row, "!!",
// "...", and the substring "omg".
struct PatternFeatureStats {
    std::size_t n_female = 0;
    std::size_t n_male = 0;
    std::array<FeatureRow, kPatternFeatureCount> features;
};

PatternFeatureStats pattern_feature_prevalence(std::span<const UserRecord> users);

}  // namespace ginfer

#endif  // GINFER_EVAL_HPP
