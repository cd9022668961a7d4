#include "ginfer/eval.hpp"

#include <cmath>
#include <unordered_map>

#include "ginfer/errors.hpp"
#include "ginfer/text.hpp"

namespace ginfer {

EvalReport evaluate(std::span<const Prediction> predictions,
                    std::span<const UserRecord> labeled_users, double prior_female) {
    if (labeled_users.empty())
        throw EmptyInputError("no labeled users to evaluate");
    std::unordered_map<std::string_view, const Prediction*> by_id;
    by_id.reserve(predictions.size());
    for (const Prediction& p : predictions)
        by_id.emplace(p.user_id, &p);

    EvalReport report;
    std::vector<MatchOutcome> outcomes;
    std::vector<Gender> labels;
    outcomes.reserve(labeled_users.size());
    labels.reserve(labeled_users.size());
    std::size_t matched = 0;
    std::size_t matched_correct = 0;
    for (const UserRecord& u : labeled_users) {
        if (u.gender_label == Gender::Unknown)
            throw InputError("user \"" + u.user_id +
                             "\" has no gender label; split off unknowns before evaluating");
        const auto it = by_id.find(u.user_id);
        if (it == by_id.end())
            throw InputError("no prediction for user \"" + u.user_id + "\"");
        const Prediction& p = *it->second;
        const bool correct = p.gender == u.gender_label;
        if (u.gender_label == Gender::Female) {
            if (correct) ++report.confusion.ff; else ++report.confusion.fm;
        } else {
            if (correct) ++report.confusion.mm; else ++report.confusion.mf;
        }
        if (p.matched()) {
            ++matched;
            if (correct)
                ++matched_correct;
            outcomes.push_back(correct ? MatchOutcome::MatchedCorrect : MatchOutcome::MatchedWrong);
        } else {
            outcomes.push_back(MatchOutcome::Fallback);
        }
        labels.push_back(u.gender_label);
    }

    const auto n = static_cast<double>(labeled_users.size());
    report.n_evaluated = labeled_users.size();
    report.realized_accuracy =
        static_cast<double>(report.confusion.ff + report.confusion.mm) / n;
    report.expected_accuracy = expected_accuracy(outcomes, labels, prior_female);
    report.coverage = static_cast<double>(matched) / n;
    if (matched > 0)
        report.matched_accuracy =
            static_cast<double>(matched_correct) / static_cast<double>(matched);

    const Confusion& c = report.confusion;
    if (c.ff + c.mf > 0)
        report.female.precision = static_cast<double>(c.ff) / static_cast<double>(c.ff + c.mf);
    if (c.ff + c.fm > 0)
        report.female.recall = static_cast<double>(c.ff) / static_cast<double>(c.ff + c.fm);
    if (c.mm + c.fm > 0)
        report.male.precision = static_cast<double>(c.mm) / static_cast<double>(c.mm + c.fm);
    if (c.mm + c.mf > 0)
        report.male.recall = static_cast<double>(c.mm) / static_cast<double>(c.mm + c.mf);
    return report;
}

double expected_accuracy(std::span<const MatchOutcome> outcomes,
                         std::span<const Gender> labels, double prior_female) {
    if (outcomes.size() != labels.size())
        throw InputError("match outcomes and labels differ in length");
    if (outcomes.empty())
        throw EmptyInputError("expected accuracy of an empty corpus");
    if (prior_female < 0.0 || prior_female > 1.0)
        throw InputError("fallback prior must be in [0, 1]");
    std::size_t matched_correct = 0;
    std::size_t fallback_female = 0;
    std::size_t fallback_male = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        switch (outcomes[i]) {
            case MatchOutcome::MatchedCorrect:
                ++matched_correct;
                break;
            case MatchOutcome::MatchedWrong:
                break;
            case MatchOutcome::Fallback:
                if (labels[i] == Gender::Female)
                    ++fallback_female;
                else if (labels[i] == Gender::Male)
                    ++fallback_male;
                else
                    throw InputError("fallback user has no gender label");
                break;
        }
    }
    return (static_cast<double>(matched_correct) +
            prior_female * static_cast<double>(fallback_female) +
            (1.0 - prior_female) * static_cast<double>(fallback_male)) /
           static_cast<double>(outcomes.size());
}

MonteCarloResult monte_carlo_accuracy(const Matcher& matcher, const StrategyConfig& config,
                                      std::span<const UserRecord> labeled_users,
                                      std::size_t trials) {
    if (trials < 1)
        throw InputError("at least one trial required");
    std::vector<double> accuracies;
    accuracies.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        StrategyConfig trial_config = config;
        trial_config.seed = config.seed + t;
        const auto predictions = classify_corpus(matcher, trial_config, labeled_users);
        accuracies.push_back(
            evaluate(predictions, labeled_users, trial_config.fallback_prior_female)
                .realized_accuracy);
    }
    MonteCarloResult result;
    result.trials = trials;
    double sum = 0.0;
    for (double a : accuracies)
        sum += a;
    result.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
        double ss = 0.0;
        for (double a : accuracies)
            ss += (a - result.mean) * (a - result.mean);
        const double variance = ss / static_cast<double>(trials - 1);
        result.std_error = std::sqrt(variance / static_cast<double>(trials));
        result.std_error_defined = true;
    }
    return result;
}

std::vector<SweepRow> sweep_prior(const Matcher& matcher, const StrategyConfig& config,
                                  std::span<const UserRecord> labeled_users,
                                  std::span<const double> priors) {
    if (priors.empty())
        throw InputError("prior sweep needs at least one prior");
    for (double p : priors)
        if (p < 0.0 || p > 1.0)
            throw InputError("fallback prior must be in [0, 1]");
    std::vector<SweepRow> rows;
    rows.reserve(priors.size());
    for (double p : priors) {
        StrategyConfig row_config = config;
        row_config.fallback_prior_female = p;
        const auto predictions = classify_corpus(matcher, row_config, labeled_users);
        const EvalReport report = evaluate(predictions, labeled_users, p);
        rows.push_back({p, report.expected_accuracy, report.realized_accuracy});
    }
    return rows;
}

namespace {

bool has_repeated_run(std::u32string_view s, std::size_t min_run) {
    std::size_t run = 0;
    char32_t prev = 0;
    for (char32_t c : s) {
        run = (run > 0 && c == prev) ? run + 1 : 1;
        prev = c;
        if (run >= min_run)
            return true;
    }
    return false;
}

bool contains(std::u32string_view s, std::u32string_view needle) {
    return s.find(needle) != std::u32string_view::npos;
}

}  // namespace

PatternFeatureStats pattern_feature_prevalence(std::span<const UserRecord> users) {
    PatternFeatureStats stats;
    stats.features[0].name = "repeated_char_run";
    stats.features[1].name = "repeated_exclamation";
    stats.features[2].name = "ellipsis";
    stats.features[3].name = "omg";
    for (const UserRecord& u : users) {
        if (u.gender_label == Gender::Unknown)
            continue;
        const bool female = u.gender_label == Gender::Female;
        if (female)
            ++stats.n_female;
        else
            ++stats.n_male;
        const std::u32string name = normalize_to_u32(u.username);
        const bool fired[kPatternFeatureCount] = {
            has_repeated_run(name, 3),
            contains(name, U"!!"),
            contains(name, U"..."),
            contains(name, U"omg"),
        };
        for (std::size_t f = 0; f < kPatternFeatureCount; ++f) {
            if (!fired[f])
                continue;
            if (female)
                ++stats.features[f].female_count;
            else
                ++stats.features[f].male_count;
        }
    }
    if (stats.n_female + stats.n_male == 0)
        throw EmptyInputError("no labeled users for pattern features");
    for (FeatureRow& row : stats.features) {
        if (stats.n_female > 0)
            row.female_prevalence = static_cast<double>(row.female_count) /
                                    static_cast<double>(stats.n_female);
        if (stats.n_male > 0)
            row.male_prevalence = static_cast<double>(row.male_count) /
                                  static_cast<double>(stats.n_male);
    }
    return stats;
}

}  // namespace ginfer
