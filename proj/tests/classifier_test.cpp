#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "ginfer/classifier.hpp"
#include "ginfer/errors.hpp"
#include "test_util.hpp"

using namespace ginfer;
using test_util::Rng;

TEST_CASE("strategy names round-trip") {
    for (Strategy s : {Strategy::Topic, Strategy::FemaleThenMale, Strategy::FemaleOnly,
                       Strategy::FemaleOnlyPlusExtras, Strategy::LongestAcrossAll}) {
        const auto parsed = parse_strategy(strategy_name(s));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == s);
    }
    CHECK(parse_strategy("female_then_male") == Strategy::FemaleThenMale);
    CHECK(!parse_strategy("bogus").has_value());
}

TEST_CASE("make_strategy_config derives the selection mode") {
    CHECK(make_strategy_config(Strategy::LongestAcrossAll, 0.7, 1).selection_policy.mode ==
          SelectionMode::LongestWins);
    CHECK(make_strategy_config(Strategy::FemaleThenMale, 0.7, 1).selection_policy.mode ==
          SelectionMode::FirstCategoryWins);
    CHECK_THROWS_AS(make_strategy_config(Strategy::FemaleOnly, -0.1, 1), InputError);
    CHECK_THROWS_AS(make_strategy_config(Strategy::FemaleOnly, 1.5, 1), InputError);
}

TEST_CASE("degenerate priors pin the fallback gender") {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t seed = rng.next();
        const std::string id = "user" + std::to_string(rng.next());
        CHECK(fallback_draw(seed, id, 1.0).gender == Gender::Female);
        CHECK(fallback_draw(seed, id, 0.0).gender == Gender::Male);
    }
}

TEST_CASE("fallback draws are deterministic and well distributed") {
    // Same inputs, same draw.
    const FallbackDraw a = fallback_draw(42, "u1", 0.7);
    const FallbackDraw b = fallback_draw(42, "u1", 0.7);
    CHECK(a.uniform_draw == b.uniform_draw);
    CHECK(a.gender == b.gender);
    // Draw ignores the prior; only the verdict depends on it.
    CHECK(fallback_draw(42, "u1", 0.1).uniform_draw == a.uniform_draw);

    // Seed 42, 100,000 distinct ids, prior 0.7: the female fraction lands
    // within 0.7 +/- 0.005 (about 3.4 binomial sigma).
    std::size_t female = 0;
    const std::size_t n = 100000;
    for (std::size_t i = 0; i < n; ++i) {
        const FallbackDraw d = fallback_draw(42, "u" + std::to_string(i + 1), 0.7);
        CHECK(d.uniform_draw >= 0.0);
        CHECK(d.uniform_draw < 1.0);
        if (d.gender == Gender::Female)
            ++female;
    }
    const double fraction = static_cast<double>(female) / static_cast<double>(n);
    CHECK(std::abs(fraction - 0.7) <= 0.005);
}

TEST_CASE("fallback verdict is the draw compared to the prior") {
    Rng rng(1234);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t seed = rng.next();
        const std::string id = test_util::random_word(rng, 1, 12, 26);
        const double prior = static_cast<double>(rng.below(101)) / 100.0;
        const FallbackDraw d = fallback_draw(seed, id, prior);
        CHECK((d.gender == Gender::Female) == (d.uniform_draw < prior));
    }
}

namespace {

Lexicon bert_robert() {
    return test_util::make_lexicon({test_util::term("bert", Category::FemaleName),
                                    test_util::term("robert", Category::MaleName)});
}

}  // namespace

TEST_CASE("female-then-male picks the female name inside a male one") {
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::FemaleThenMale, 0.7, 7);
    const Prediction p = classify_user(matcher, config, test_util::user("u1", "xrobertx", Gender::Male));
    CHECK(p.gender == Gender::Female);
    REQUIRE(p.matched());
    const auto& m = std::get<MatchedProvenance>(p.provenance);
    CHECK(m.term.text == "bert");
    CHECK(m.start == 3);
    CHECK(m.end == 7);
}

TEST_CASE("longest-across-all picks the longer male name") {
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::LongestAcrossAll, 0.7, 7);
    const Prediction p = classify_user(matcher, config, test_util::user("u1", "xrobertx", Gender::Male));
    CHECK(p.gender == Gender::Male);
    REQUIRE(p.matched());
    CHECK(std::get<MatchedProvenance>(p.provenance).term.text == "robert");
}

TEST_CASE("no match falls back to the seeded draw") {
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::FemaleThenMale, 0.7, 99);
    const Prediction p = classify_user(matcher, config, test_util::user("u1", "qqq", Gender::Female));
    REQUIRE(!p.matched());
    const FallbackDraw expected = fallback_draw(99, "u1", 0.7);
    CHECK(std::get<FallbackProvenance>(p.provenance).uniform_draw == expected.uniform_draw);
    CHECK(p.gender == expected.gender);
}

TEST_CASE("extras list turns love2sing into a match") {
    const Lexicon lex = test_util::make_lexicon({test_util::term("anna", Category::FemaleName),
                                                 test_util::term("girl", Category::ExtraFemale),
                                                 test_util::term("love", Category::ExtraFemale)});
    const Matcher matcher(lex);
    const auto config = make_strategy_config(Strategy::FemaleOnlyPlusExtras, 0.7, 7);
    const Prediction p = classify_user(matcher, config, test_util::user("u1", "love2sing", Gender::Female));
    CHECK(p.gender == Gender::Female);
    REQUIRE(p.matched());
    CHECK(std::get<MatchedProvenance>(p.provenance).term.text == "love");
}

TEST_CASE("topic and female-only strategies map any match to female") {
    const Lexicon topics = test_util::make_lexicon({test_util::term("oprah", Category::Topic)});
    const auto config = make_strategy_config(Strategy::Topic, 0.7, 7);
    const Prediction p =
        classify_user(Matcher(topics), config, test_util::user("u1", "oprahfan", Gender::Male));
    CHECK(p.gender == Gender::Female);
    CHECK(p.matched());
}

TEST_CASE("username is normalized before matching") {
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::FemaleThenMale, 0.7, 7);
    const Prediction p = classify_user(matcher, config, test_util::user("u1", "  XRobertX ", Gender::Male));
    CHECK(p.matched());
    CHECK(p.gender == Gender::Female);
}

TEST_CASE("classify_corpus preserves order and handles the empty table") {
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::FemaleThenMale, 0.7, 7);
    CHECK(classify_corpus(matcher, config, {}).empty());

    std::vector<UserRecord> users = {
        test_util::user("a", "bertha", Gender::Female),
        test_util::user("b", "roberto", Gender::Male),
        test_util::user("c", "zzz", Gender::Unknown),
    };
    const auto preds = classify_corpus(matcher, config, users);
    REQUIRE(preds.size() == 3);
    CHECK(preds[0].user_id == "a");
    CHECK(preds[1].user_id == "b");
    CHECK(preds[2].user_id == "c");
    CHECK(preds[0].matched());
    CHECK(preds[1].matched());
    CHECK(!preds[2].matched());  // UNKNOWN users are still classified
    CHECK(preds[2].gender != Gender::Unknown);
}

namespace {

std::vector<UserRecord> synthetic_users(std::size_t n) {
    Rng rng(55);
    std::vector<UserRecord> users;
    users.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string name = test_util::random_word(rng, 4, 12, 26);
        if (i % 3 == 0)
            name.insert(rng.below(name.size()), "bert");
        users.push_back(test_util::user("u" + std::to_string(i), name,
                                        i % 2 == 0 ? Gender::Female : Gender::Male));
    }
    return users;
}

}  // namespace

TEST_CASE("classify_corpus output is invariant under thread count") {
    const auto users = synthetic_users(20000);
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::FemaleThenMale, 0.7, 42);
    const auto one = classify_corpus(matcher, config, users, 1);
    const auto four = classify_corpus(matcher, config, users, 4);
    const auto many = classify_corpus(matcher, config, users, 13);
    REQUIRE(one.size() == users.size());
    CHECK(one == four);
    CHECK(one == many);
}

TEST_CASE("fallback fraction obeys the law of large numbers") {
    // 10,000 unmatched users, prior 0.3: fraction within 4 sigma.
    std::vector<UserRecord> users;
    for (int i = 0; i < 10000; ++i)
        users.push_back(test_util::user("id" + std::to_string(i), "zz9", Gender::Unknown));
    const Matcher matcher(bert_robert());
    const auto config = make_strategy_config(Strategy::FemaleOnly, 0.3, 7);
    const auto preds = classify_corpus(matcher, config, users, 4);
    std::size_t female = 0;
    for (const Prediction& p : preds) {
        CHECK(!p.matched());
        if (p.gender == Gender::Female)
            ++female;
    }
    const double fraction = static_cast<double>(female) / 10000.0;
    const double tolerance = 4.0 * std::sqrt(0.3 * 0.7 / 10000.0);
    CHECK(std::abs(fraction - 0.3) <= tolerance);
}

TEST_CASE("changing the seed touches only fallback predictions") {
    const auto users = synthetic_users(2000);
    const Matcher matcher(bert_robert());
    const auto a = classify_corpus(matcher, make_strategy_config(Strategy::FemaleThenMale, 0.7, 1), users);
    const auto b = classify_corpus(matcher, make_strategy_config(Strategy::FemaleThenMale, 0.7, 2), users);
    REQUIRE(a.size() == b.size());
    bool any_fallback_changed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].matched() == b[i].matched());
        if (a[i].matched()) {
            CHECK(a[i] == b[i]);
        } else if (a[i].gender != b[i].gender) {
            any_fallback_changed = true;
        }
    }
    CHECK(any_fallback_changed);
}

TEST_CASE("every female-only match is also a plus-extras match") {
    const Lexicon female_only = test_util::make_lexicon({test_util::term("ann", Category::FemaleName),
                                                         test_util::term("bert", Category::FemaleName)});
    const Lexicon plus_extras = test_util::make_lexicon({test_util::term("ann", Category::FemaleName),
                                                         test_util::term("bert", Category::FemaleName),
                                                         test_util::term("girl", Category::ExtraFemale),
                                                         test_util::term("love", Category::ExtraFemale)});
    const auto users = synthetic_users(3000);
    const auto base = classify_corpus(Matcher(female_only),
                                      make_strategy_config(Strategy::FemaleOnly, 0.7, 3), users);
    const auto extended = classify_corpus(Matcher(plus_extras),
                                          make_strategy_config(Strategy::FemaleOnlyPlusExtras, 0.7, 3), users);
    REQUIRE(base.size() == extended.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i].matched()) {
            CHECK(extended[i].matched());
            CHECK(extended[i].gender == Gender::Female);
        }
    }
}
