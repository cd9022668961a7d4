// ginfer: infer user gender from screen names with a term lexicon,
// evaluate strategies against labeled corpora, and mine new terms.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "ginfer/classifier.hpp"
#include "ginfer/corpus.hpp"
#include "ginfer/errors.hpp"
#include "ginfer/eval.hpp"
#include "ginfer/gen.hpp"
#include "ginfer/lexicon.hpp"
#include "ginfer/matcher.hpp"
#include "ginfer/report.hpp"

namespace {

using namespace ginfer;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("file not found: " + path);
    return in;
}

// Reports are rendered fully before the output path is opened, so a
// failing run never leaves a partial or stale file behind.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InputError("cannot open output file: " + out_path);
    out << content;
    if (!out)
        throw InputError("write failed: " + out_path);
}

report::Format parse_format_flag(const std::string& name) {
    const auto format = report::parse_format(name);
    if (!format)
        throw InputError("unknown format \"" + name + "\" (expected json or tsv)");
    return *format;
}

Strategy parse_strategy_flag(const std::string& name) {
    const auto strategy = parse_strategy(name);
    if (!strategy)
        throw InputError("unknown strategy \"" + name + "\"");
    return *strategy;
}

struct ListPaths {
    std::string female;
    std::string male;
    std::string topics;
    std::string extras;
};

void add_list_options(CLI::App& cmd, ListPaths& paths) {
    cmd.add_option("--female-names", paths.female, "Female name list, one term per line");
    cmd.add_option("--male-names", paths.male, "Male name list");
    cmd.add_option("--topics", paths.topics, "Female-topic term list");
    cmd.add_option("--extras", paths.extras, "Extra female-indicative terms");
}

TermList load_list(const std::string& path, Category category) {
    auto in = open_input(path);
    return load_term_list(in, category, path);
}

// Each strategy prescribes its term lists; a missing required list is
// a usage error naming the flag.
std::vector<TermList> load_strategy_lists(Strategy strategy, const ListPaths& paths) {
    const auto require = [&](const std::string& path, const char* flag) {
        if (path.empty())
            throw InputError(std::string(flag) + " is required for strategy " +
                             std::string(strategy_name(strategy)));
    };
    std::vector<TermList> lists;
    switch (strategy) {
        case Strategy::Topic:
            require(paths.topics, "--topics");
            lists.push_back(load_list(paths.topics, Category::Topic));
            break;
        case Strategy::FemaleThenMale:
            require(paths.female, "--female-names");
            require(paths.male, "--male-names");
            lists.push_back(load_list(paths.female, Category::FemaleName));
            lists.push_back(load_list(paths.male, Category::MaleName));
            break;
        case Strategy::FemaleOnly:
            require(paths.female, "--female-names");
            lists.push_back(load_list(paths.female, Category::FemaleName));
            break;
        case Strategy::FemaleOnlyPlusExtras:
            require(paths.female, "--female-names");
            require(paths.extras, "--extras");
            lists.push_back(load_list(paths.female, Category::FemaleName));
            lists.push_back(load_list(paths.extras, Category::ExtraFemale));
            break;
        case Strategy::LongestAcrossAll:
            require(paths.female, "--female-names");
            require(paths.male, "--male-names");
            lists.push_back(load_list(paths.female, Category::FemaleName));
            lists.push_back(load_list(paths.male, Category::MaleName));
            if (!paths.extras.empty())
                lists.push_back(load_list(paths.extras, Category::ExtraFemale));
            break;
    }
    return lists;
}

std::vector<UserRecord> load_user_file(const std::string& path) {
    auto in = open_input(path);
    return load_users(in, path);
}

struct ClassifyOptions {
    std::string users_path;
    ListPaths lists;
    std::string strategy = "FEMALE_THEN_MALE";
    double prior = 0.7;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out_path;
    std::string format = "json";
    std::size_t trials = 0;  // evaluate only; 0 = no Monte Carlo block
};

void add_classify_options(CLI::App& cmd, ClassifyOptions& opt) {
    cmd.add_option("--users", opt.users_path, "User table TSV: user_id<TAB>username<TAB>gender")
        ->required();
    add_list_options(cmd, opt.lists);
    cmd.add_option("--strategy", opt.strategy,
                   "TOPIC, FEMALE_THEN_MALE, FEMALE_ONLY, FEMALE_ONLY_PLUS_EXTRAS or "
                   "LONGEST_ACROSS_ALL");
    cmd.add_option("--prior", opt.prior, "Fallback probability of assigning F");
    cmd.add_option("--seed", opt.seed, "Seed for the fallback draws");
    cmd.add_option("--threads", opt.threads, "Worker threads for classification");
    cmd.add_option("--out", opt.out_path, "Output file (default: standard output)");
    cmd.add_option("--format", opt.format, "json or tsv");
}

int cmd_classify(const ClassifyOptions& opt) {
    const report::Format format = parse_format_flag(opt.format);
    const Strategy strategy = parse_strategy_flag(opt.strategy);
    const auto users = load_user_file(opt.users_path);
    const auto lists = load_strategy_lists(strategy, opt.lists);
    const Matcher matcher(build_lexicon(lists).lexicon);
    const auto config = make_strategy_config(strategy, opt.prior, opt.seed);
    const auto predictions = classify_corpus(matcher, config, users, opt.threads);

    std::ostringstream rendered;
    report::write_predictions(rendered, predictions, format);
    emit(opt.out_path, rendered.str());
    return 0;
}

int cmd_evaluate(const ClassifyOptions& opt) {
    const report::Format format = parse_format_flag(opt.format);
    const Strategy strategy = parse_strategy_flag(opt.strategy);
    const auto users = load_user_file(opt.users_path);
    const auto [known, unknown] = split_known(users);
    if (known.empty())
        throw EmptyInputError("no labeled users in " + opt.users_path);

    const auto lists = load_strategy_lists(strategy, opt.lists);
    const Matcher matcher(build_lexicon(lists).lexicon);
    const auto config = make_strategy_config(strategy, opt.prior, opt.seed);
    const auto predictions = classify_corpus(matcher, config, known, opt.threads);
    const EvalReport eval = evaluate(predictions, known, opt.prior);

    std::optional<MonteCarloResult> monte_carlo;
    if (opt.trials > 0)
        monte_carlo = monte_carlo_accuracy(matcher, config, known, opt.trials);

    std::ostringstream rendered;
    report::write_eval(rendered, eval, strategy_name(strategy),
                       monte_carlo ? &*monte_carlo : nullptr, format);
    emit(opt.out_path, rendered.str());

    // The summary stays on stdout unless the report itself goes there.
    const std::string summary = report::eval_summary_line(eval, strategy_name(strategy));
    if (opt.out_path.empty())
        std::cerr << summary << '\n';
    else
        std::cout << summary << '\n';
    return 0;
}

struct StatsOptions {
    std::string users_path;
    std::string edges_path;
    std::string out_path;
    std::string format = "json";
};

int cmd_stats(const StatsOptions& opt) {
    const report::Format format = parse_format_flag(opt.format);
    const auto users = load_user_file(opt.users_path);

    std::optional<LoadedEdges> edges;
    if (!opt.edges_path.empty()) {
        std::unordered_set<std::string> known_ids;
        for (const UserRecord& u : users)
            known_ids.insert(u.user_id);
        auto in = open_input(opt.edges_path);
        edges = load_edges(in, &known_ids, opt.edges_path);
    }
    const CorpusStats stats = corpus_stats(users, edges ? edges->edges : EdgeList{});

    std::optional<PatternFeatureStats> features;
    const auto [known, unknown] = split_known(users);
    if (!known.empty())
        features = pattern_feature_prevalence(users);

    std::ostringstream rendered;
    report::write_stats(rendered, stats, edges ? &*edges : nullptr,
                        features ? &*features : nullptr, format);
    emit(opt.out_path, rendered.str());
    return 0;
}

struct ShadowOptions {
    ListPaths lists;
    std::string out_path;
    std::string format = "json";
};

int cmd_shadow(const ShadowOptions& opt) {
    const report::Format format = parse_format_flag(opt.format);
    std::vector<TermList> lists;
    if (!opt.lists.female.empty())
        lists.push_back(load_list(opt.lists.female, Category::FemaleName));
    if (!opt.lists.male.empty())
        lists.push_back(load_list(opt.lists.male, Category::MaleName));
    if (!opt.lists.topics.empty())
        lists.push_back(load_list(opt.lists.topics, Category::Topic));
    if (!opt.lists.extras.empty())
        lists.push_back(load_list(opt.lists.extras, Category::ExtraFemale));
    if (lists.empty())
        throw InputError("shadow needs at least one term list");

    const auto pairs = shadow_report(build_lexicon(lists).lexicon);
    std::ostringstream rendered;
    report::write_shadow(rendered, pairs, format);
    emit(opt.out_path, rendered.str());
    return 0;
}

struct MineOptions {
    std::string users_path;
    ListPaths lists;  // optional; mined grams already present are dropped
    std::size_t ngram_min = 2;
    std::size_t ngram_max = 4;
    std::size_t min_support = 2;
    double skew = 0.8;
    std::string out_path;
    std::string format = "json";
};

int cmd_mine(const MineOptions& opt) {
    const report::Format format = parse_format_flag(opt.format);
    const auto users = load_user_file(opt.users_path);

    std::vector<TermList> lists;
    if (!opt.lists.female.empty())
        lists.push_back(load_list(opt.lists.female, Category::FemaleName));
    if (!opt.lists.male.empty())
        lists.push_back(load_list(opt.lists.male, Category::MaleName));
    if (!opt.lists.topics.empty())
        lists.push_back(load_list(opt.lists.topics, Category::Topic));
    if (!opt.lists.extras.empty())
        lists.push_back(load_list(opt.lists.extras, Category::ExtraFemale));
    std::optional<Lexicon> exclude;
    if (!lists.empty())
        exclude = build_lexicon(lists).lexicon;

    const MiningParams params{opt.ngram_min, opt.ngram_max, opt.min_support, opt.skew};
    const auto candidates = mine_candidate_terms(users, params, exclude ? &*exclude : nullptr);

    std::ostringstream rendered;
    report::write_candidates(rendered, candidates, format);
    emit(opt.out_path, rendered.str());
    return 0;
}

struct SweepOptions {
    std::string users_path;
    ListPaths lists;
    std::string strategy = "FEMALE_THEN_MALE";
    std::vector<double> priors;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
};

int cmd_sweep(const SweepOptions& opt) {
    const report::Format format = parse_format_flag(opt.format);
    const Strategy strategy = parse_strategy_flag(opt.strategy);
    const auto users = load_user_file(opt.users_path);
    const auto [known, unknown] = split_known(users);
    if (known.empty())
        throw EmptyInputError("no labeled users in " + opt.users_path);

    const auto lists = load_strategy_lists(strategy, opt.lists);
    const Matcher matcher(build_lexicon(lists).lexicon);
    const auto config = make_strategy_config(strategy, 0.7, opt.seed);
    const auto rows = sweep_prior(matcher, config, known, opt.priors);

    std::ostringstream rendered;
    report::write_sweep(rendered, rows, format);
    emit(opt.out_path, rendered.str());
    return 0;
}

struct GenOptions {
    GenParams params;
    std::string female_path;
    std::string male_path;
    std::string out_path;
};

int cmd_gen(const GenOptions& opt) {
    std::vector<std::string> female_names;
    std::vector<std::string> male_names;
    if (!opt.female_path.empty())
        for (const Term& t : load_list(opt.female_path, Category::FemaleName).terms)
            female_names.push_back(t.text);
    if (!opt.male_path.empty())
        for (const Term& t : load_list(opt.male_path, Category::MaleName).terms)
            male_names.push_back(t.text);
    if (opt.params.embed_rate_female > 0.0 && female_names.empty())
        throw InputError("--embed-rate-female > 0 needs --female-names");
    if (opt.params.embed_rate_male > 0.0 && male_names.empty())
        throw InputError("--embed-rate-male > 0 needs --male-names");

    const auto users = generate_corpus(opt.params, female_names, male_names);
    std::ostringstream rendered;
    write_users(rendered, users);
    emit(opt.out_path, rendered.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Screen-name gender inference and evaluation"};
    app.require_subcommand(1);
    int exit_code = 0;

    ClassifyOptions classify_opt;
    CLI::App* classify = app.add_subcommand("classify", "Predict a gender for every user");
    add_classify_options(*classify, classify_opt);
    classify->callback([&] { exit_code = cmd_classify(classify_opt); });

    ClassifyOptions evaluate_opt;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Score a strategy against labels");
    add_classify_options(*evaluate, evaluate_opt);
    evaluate->add_option("--trials", evaluate_opt.trials,
                         "Monte Carlo trials over reseeded fallback draws");
    evaluate->callback([&] { exit_code = cmd_evaluate(evaluate_opt); });

    StatsOptions stats_opt;
    CLI::App* stats = app.add_subcommand("stats", "Corpus composition and name-pattern stats");
    stats->add_option("--users", stats_opt.users_path, "User table TSV")->required();
    stats->add_option("--edges", stats_opt.edges_path, "Follower edges TSV");
    stats->add_option("--out", stats_opt.out_path, "Output file (default: standard output)");
    stats->add_option("--format", stats_opt.format, "json or tsv");
    stats->callback([&] { exit_code = cmd_stats(stats_opt); });

    ShadowOptions shadow_opt;
    CLI::App* shadow = app.add_subcommand("shadow", "Terms nested inside other terms");
    add_list_options(*shadow, shadow_opt.lists);
    shadow->add_option("--out", shadow_opt.out_path, "Output file (default: standard output)");
    shadow->add_option("--format", shadow_opt.format, "json or tsv");
    shadow->callback([&] { exit_code = cmd_shadow(shadow_opt); });

    MineOptions mine_opt;
    CLI::App* mine = app.add_subcommand("mine", "Mine gender-skewed username n-grams");
    mine->add_option("--users", mine_opt.users_path, "User table TSV")->required();
    add_list_options(*mine, mine_opt.lists);
    mine->add_option("--ngram-min", mine_opt.ngram_min, "Shortest n-gram, in code points");
    mine->add_option("--ngram-max", mine_opt.ngram_max, "Longest n-gram, in code points");
    mine->add_option("--min-support", mine_opt.min_support, "Minimum users containing the gram");
    mine->add_option("--skew", mine_opt.skew, "Female-fraction skew threshold in (0.5, 1]");
    mine->add_option("--out", mine_opt.out_path, "Output file (default: standard output)");
    mine->add_option("--format", mine_opt.format, "json or tsv");
    mine->callback([&] { exit_code = cmd_mine(mine_opt); });

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Expected and realized accuracy per prior");
    sweep->add_option("--users", sweep_opt.users_path, "User table TSV")->required();
    add_list_options(*sweep, sweep_opt.lists);
    sweep->add_option("--strategy", sweep_opt.strategy, "Strategy to sweep");
    sweep->add_option("--priors", sweep_opt.priors, "Comma-separated fallback priors")
        ->required()
        ->delimiter(',');
    sweep->add_option("--seed", sweep_opt.seed, "Seed for the realized runs");
    sweep->add_option("--out", sweep_opt.out_path, "Output file (default: standard output)");
    sweep->add_option("--format", sweep_opt.format, "json or tsv");
    sweep->callback([&] { exit_code = cmd_sweep(sweep_opt); });

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic labeled corpus");
    gen->add_option("--n", gen_opt.params.n_users, "User count");
    gen->add_option("--female-fraction", gen_opt.params.female_fraction,
                    "Exact fraction of users drawn female");
    gen->add_option("--embed-rate-female", gen_opt.params.embed_rate_female,
                    "Chance a female user's name embeds a list name");
    gen->add_option("--embed-rate-male", gen_opt.params.embed_rate_male,
                    "Chance a male user's name embeds a list name");
    gen->add_option("--unknown-fraction", gen_opt.params.unknown_fraction,
                    "Exact fraction with the label blanked to U");
    gen->add_option("--seed", gen_opt.params.seed, "Generator seed");
    gen->add_option("--female-names", gen_opt.female_path, "Names to embed in female users");
    gen->add_option("--male-names", gen_opt.male_path, "Names to embed in male users");
    gen->add_option("--out", gen_opt.out_path, "Output file (default: standard output)");
    gen->callback([&] { exit_code = cmd_gen(gen_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ginfer::EmptyInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ginfer::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
