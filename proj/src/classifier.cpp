#include "ginfer/classifier.hpp"

#include <thread>

#include "ginfer/errors.hpp"
#include "ginfer/text.hpp"

namespace ginfer {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Topic: return "TOPIC";
        case Strategy::FemaleThenMale: return "FEMALE_THEN_MALE";
        case Strategy::FemaleOnly: return "FEMALE_ONLY";
        case Strategy::FemaleOnlyPlusExtras: return "FEMALE_ONLY_PLUS_EXTRAS";
        case Strategy::LongestAcrossAll: return "LONGEST_ACROSS_ALL";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    std::string upper(name);
    for (char& c : upper)
        if (c >= 'a' && c <= 'z')
            c = static_cast<char>(c - 'a' + 'A');
    for (Strategy s : {Strategy::Topic, Strategy::FemaleThenMale, Strategy::FemaleOnly,
                       Strategy::FemaleOnlyPlusExtras, Strategy::LongestAcrossAll}) {
        if (upper == strategy_name(s))
            return s;
    }
    return std::nullopt;
}

StrategyConfig make_strategy_config(Strategy strategy, double prior_female, std::uint64_t seed) {
    if (prior_female < 0.0 || prior_female > 1.0)
        throw InputError("fallback prior must be in [0, 1]");
    StrategyConfig config;
    config.strategy = strategy;
    config.fallback_prior_female = prior_female;
    config.seed = seed;
    config.selection_policy.mode = strategy == Strategy::LongestAcrossAll
                                       ? SelectionMode::LongestWins
                                       : SelectionMode::FirstCategoryWins;
    return config;
}

namespace {

constexpr std::uint64_t kFnvBasis = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv1a_byte(std::uint64_t h, unsigned char b) {
    return (h ^ b) * kFnvPrime;
}

std::uint64_t splitmix64_mix(std::uint64_t h) {
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
}

Gender category_gender(Category c) {
    return c == Category::MaleName ? Gender::Male : Gender::Female;
}

}  // namespace

FallbackDraw fallback_draw(std::uint64_t seed, std::string_view user_id, double prior_female) {
    if (prior_female < 0.0 || prior_female > 1.0)
        throw InputError("fallback prior must be in [0, 1]");
    std::uint64_t h = kFnvBasis;
    for (int i = 0; i < 8; ++i)
        h = fnv1a_byte(h, static_cast<unsigned char>(seed >> (8 * i)));
    for (char c : user_id)
        h = fnv1a_byte(h, static_cast<unsigned char>(c));
    h = splitmix64_mix(h);
    const double draw = static_cast<double>(h >> 11) * 0x1.0p-53;
    return {draw < prior_female ? Gender::Female : Gender::Male, draw};
}

Prediction classify_user(const Matcher& matcher, const StrategyConfig& config,
                         const UserRecord& user) {
    const std::u32string normalized = normalize_to_u32(user.username);
    const std::vector<Match> matches = matcher.find_all_matches(normalized);
    const std::optional<Match> best = select_best_match(matches, config.selection_policy);
    if (!best) {
        const FallbackDraw draw = fallback_draw(config.seed, user.user_id,
                                                config.fallback_prior_female);
        return {user.user_id, draw.gender, FallbackProvenance{draw.uniform_draw}};
    }
    Gender gender = Gender::Female;
    switch (config.strategy) {
        case Strategy::Topic:
        case Strategy::FemaleOnly:
        case Strategy::FemaleOnlyPlusExtras:
            gender = Gender::Female;
            break;
        case Strategy::FemaleThenMale:
        case Strategy::LongestAcrossAll:
            gender = category_gender(best->term.category);
            break;
    }
    return {user.user_id, gender, MatchedProvenance{best->term, best->start, best->end}};
}

std::vector<Prediction> classify_corpus(const Matcher& matcher, const StrategyConfig& config,
                                        std::span<const UserRecord> users, unsigned threads) {
    std::vector<Prediction> predictions(users.size());
    if (threads <= 1 || users.size() < 2) {
        for (std::size_t i = 0; i < users.size(); ++i)
            predictions[i] = classify_user(matcher, config, users[i]);
        return predictions;
    }
    const std::size_t n = users.size();
    const unsigned worker_count = static_cast<unsigned>(
        std::min<std::size_t>(threads, n));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::size_t chunk = (n + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        workers.emplace_back([&, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                predictions[i] = classify_user(matcher, config, users[i]);
        });
    }
    for (std::thread& t : workers)
        t.join();
    return predictions;
}

}  // namespace ginfer
