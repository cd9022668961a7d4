#ifndef GINFER_CLASSIFIER_HPP
#define GINFER_CLASSIFIER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ginfer/corpus.hpp"
#include "ginfer/matcher.hpp"

namespace ginfer {

enum class Strategy : std::uint8_t {
    Topic,                 // any topic match => F
    FemaleThenMale,        // female names checked before male names
    FemaleOnly,            // female names only, any match => F
    FemaleOnlyPlusExtras,  // female names plus extra terms, any match => F
    LongestAcrossAll,      // longest match across all name lists decides
};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct StrategyConfig {
    Strategy strategy = Strategy::FemaleOnly;
    double fallback_prior_female = 0.7;
    std::uint64_t seed = 0;
    SelectionPolicy selection_policy;
};

// Config with the selection policy the strategy implies:
// LongestAcrossAll selects the longest match, everything else the
// first-precedence category.
StrategyConfig make_strategy_config(Strategy strategy, double prior_female, std::uint64_t seed);

struct FallbackDraw {
    Gender gender = Gender::Female;
    double uniform_draw = 0.0;
};

// Deterministic per-user draw, independent of call order. The draw is
// a fixed 64-bit hash mapped to [0,1):
//
//   h = FNV-1a64 over the 8 little-endian bytes of `seed` followed by
//       the UTF-8 bytes of `user_id`
//       (basis 0xcbf29ce484222325, prime 0x100000001b3)
//   h = splitmix64 finalizer of h
//       (h ^= h>>30; h *= 0xbf58476d1ce4e5b9;
//        h ^= h>>27; h *= 0x94d049bb133111eb; h ^= h>>31)
//   uniform_draw = (h >> 11) * 2^-53
//
// gender is F iff uniform_draw < prior_female.
FallbackDraw fallback_draw(std::uint64_t seed, std::string_view user_id, double prior_female);

struct MatchedProvenance {
    Term term;
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const MatchedProvenance&, const MatchedProvenance&) = default;
};

struct FallbackProvenance {
    double uniform_draw = 0.0;

    friend bool operator==(const FallbackProvenance&, const FallbackProvenance&) = default;
};

using Provenance = std::variant<MatchedProvenance, FallbackProvenance>;

struct Prediction {
    std::string user_id;
    Gender gender = Gender::Female;  // never Unknown
    Provenance provenance;

    bool matched() const { return std::holds_alternative<MatchedProvenance>(provenance); }
    friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Normalizes the username, matches, selects per the config's policy;
// falls back to the seeded draw when nothing matches. The matcher must
// be compiled from the lexicon the strategy calls for.
Prediction classify_user(const Matcher& matcher, const StrategyConfig& config,
                         const UserRecord& user);

// One prediction per user, in input order. `threads` > 1 splits the
// work; output is identical at any thread count.
std::vector<Prediction> classify_corpus(const Matcher& matcher, const StrategyConfig& config,
                                        std::span<const UserRecord> users, unsigned threads = 1);

}  // namespace ginfer

#endif  // GINFER_CLASSIFIER_HPP
