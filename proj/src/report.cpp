#include "ginfer/report.hpp"

#include <ostream>

#include <json.hpp>

namespace ginfer::report {

using nlohmann::json;

namespace {

constexpr std::string_view kNa = "NA";

json real_or_null(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string real_or_na(const std::optional<double>& v) {
    return v ? fmt_real(*v) : std::string(kNa);
}

json eval_to_json(const EvalReport& r, std::string_view strategy,
                  const MonteCarloResult* mc) {
    json j{
        {"n_evaluated", r.n_evaluated},
        {"realized_accuracy", r.realized_accuracy},
        {"expected_accuracy", r.expected_accuracy},
        {"coverage", r.coverage},
        {"matched_accuracy", real_or_null(r.matched_accuracy)},
        {"confusion",
         {{"ff", r.confusion.ff}, {"fm", r.confusion.fm}, {"mf", r.confusion.mf}, {"mm", r.confusion.mm}}},
        {"per_class",
         {{"f", {{"precision", real_or_null(r.female.precision)}, {"recall", real_or_null(r.female.recall)}}},
          {"m", {{"precision", real_or_null(r.male.precision)}, {"recall", real_or_null(r.male.recall)}}}}},
        {"strategy", std::string(strategy)},
    };
    if (mc) {
        j["monte_carlo"] = {
            {"trials", mc->trials},
            {"mean", mc->mean},
            {"std_error", mc->std_error_defined ? json(mc->std_error) : json(nullptr)},
        };
    }
    return j;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "json")
        return Format::Json;
    if (name == "tsv")
        return Format::Tsv;
    return std::nullopt;
}

std::string fmt_real(double value) {
    return json(value).dump();
}

void write_predictions(std::ostream& out, std::span<const Prediction> predictions, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (const Prediction& p : predictions) {
            json j{{"user_id", p.user_id}, {"gender", std::string(gender_token(p.gender))}};
            if (const auto* m = std::get_if<MatchedProvenance>(&p.provenance)) {
                j["source"] = "matched";
                j["term"] = m->term.text;
                j["category"] = std::string(category_name(m->term.category));
                j["start"] = m->start;
                j["end"] = m->end;
            } else {
                j["source"] = "fallback";
                j["draw"] = std::get<FallbackProvenance>(p.provenance).uniform_draw;
            }
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "# user_id\tgender\tsource\tterm\tcategory\tstart\tend\tdraw\n";
    for (const Prediction& p : predictions) {
        out << p.user_id << '\t' << gender_token(p.gender) << '\t';
        if (const auto* m = std::get_if<MatchedProvenance>(&p.provenance)) {
            out << "matched\t" << m->term.text << '\t' << category_name(m->term.category) << '\t'
                << m->start << '\t' << m->end << "\t\n";
        } else {
            out << "fallback\t\t\t\t\t"
                << fmt_real(std::get<FallbackProvenance>(p.provenance).uniform_draw) << '\n';
        }
    }
}

void write_eval(std::ostream& out, const EvalReport& r, std::string_view strategy,
                const MonteCarloResult* mc, Format format) {
    if (format == Format::Json) {
        out << eval_to_json(r, strategy, mc).dump(2) << '\n';
        return;
    }
    out << "strategy\t" << strategy << '\n'
        << "n_evaluated\t" << r.n_evaluated << '\n'
        << "realized_accuracy\t" << fmt_real(r.realized_accuracy) << '\n'
        << "expected_accuracy\t" << fmt_real(r.expected_accuracy) << '\n'
        << "coverage\t" << fmt_real(r.coverage) << '\n'
        << "matched_accuracy\t" << real_or_na(r.matched_accuracy) << '\n'
        << "confusion.ff\t" << r.confusion.ff << '\n'
        << "confusion.fm\t" << r.confusion.fm << '\n'
        << "confusion.mf\t" << r.confusion.mf << '\n'
        << "confusion.mm\t" << r.confusion.mm << '\n'
        << "per_class.f.precision\t" << real_or_na(r.female.precision) << '\n'
        << "per_class.f.recall\t" << real_or_na(r.female.recall) << '\n'
        << "per_class.m.precision\t" << real_or_na(r.male.precision) << '\n'
        << "per_class.m.recall\t" << real_or_na(r.male.recall) << '\n';
    if (mc) {
        out << "monte_carlo.trials\t" << mc->trials << '\n'
            << "monte_carlo.mean\t" << fmt_real(mc->mean) << '\n'
            << "monte_carlo.std_error\t"
            << (mc->std_error_defined ? fmt_real(mc->std_error) : std::string(kNa)) << '\n';
    }
}

std::string eval_summary_line(const EvalReport& r, std::string_view strategy) {
    std::string line = "strategy=";
    line += strategy;
    line += " realized=" + fmt_real(r.realized_accuracy);
    line += " expected=" + fmt_real(r.expected_accuracy);
    line += " coverage=" + fmt_real(r.coverage);
    line += " n=" + std::to_string(r.n_evaluated);
    return line;
}

void write_shadow(std::ostream& out, std::span<const ShadowPair> pairs, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (const ShadowPair& p : pairs) {
            arr.push_back({{"inner", p.inner.text},
                           {"inner_category", std::string(category_name(p.inner.category))},
                           {"outer", p.outer.text},
                           {"outer_category", std::string(category_name(p.outer.category))}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "# inner\tinner_category\touter\touter_category\n";
    for (const ShadowPair& p : pairs) {
        out << p.inner.text << '\t' << category_name(p.inner.category) << '\t' << p.outer.text
            << '\t' << category_name(p.outer.category) << '\n';
    }
}

void write_candidates(std::ostream& out, std::span<const CandidateTerm> candidates, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (const CandidateTerm& c : candidates)
            arr.push_back({{"term", c.text}, {"support", c.support}, {"female_fraction", c.female_fraction}});
        out << arr.dump(2) << '\n';
        return;
    }
    out << "# term\tsupport\tfemale_fraction\n";
    for (const CandidateTerm& c : candidates)
        out << c.text << '\t' << c.support << '\t' << fmt_real(c.female_fraction) << '\n';
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (const SweepRow& row : rows)
            arr.push_back({{"prior_female", row.prior_female},
                           {"expected_accuracy", row.expected_accuracy},
                           {"realized_accuracy", row.realized_accuracy}});
        out << arr.dump(2) << '\n';
        return;
    }
    out << "# prior_female\texpected_accuracy\trealized_accuracy\n";
    for (const SweepRow& row : rows) {
        out << fmt_real(row.prior_female) << '\t' << fmt_real(row.expected_accuracy) << '\t'
            << fmt_real(row.realized_accuracy) << '\n';
    }
}

void write_stats(std::ostream& out, const CorpusStats& stats, const LoadedEdges* edge_load,
                 const PatternFeatureStats* features, Format format) {
    if (format == Format::Json) {
        json j{
            {"total_users", stats.total_users},
            {"known_users", stats.known_users},
            {"unknown_users", stats.unknown_users},
            {"female_fraction_of_known", real_or_null(stats.female_fraction_of_known)},
            {"edge_count", stats.edge_count},
            {"degrees",
             {{"min_in", stats.degrees.min_in}, {"mean_in", stats.degrees.mean_in},
              {"max_in", stats.degrees.max_in}, {"min_out", stats.degrees.min_out},
              {"mean_out", stats.degrees.mean_out}, {"max_out", stats.degrees.max_out}}},
        };
        if (edge_load) {
            j["edge_load"] = {{"self_loops_dropped", edge_load->self_loops_dropped},
                              {"duplicate_edges", edge_load->duplicate_edges},
                              {"dangling_endpoints", edge_load->dangling_endpoints}};
        }
        if (features) {
            json arr = json::array();
            for (const FeatureRow& row : features->features) {
                arr.push_back({{"name", std::string(row.name)},
                               {"female_count", row.female_count},
                               {"male_count", row.male_count},
                               {"female_prevalence", real_or_null(row.female_prevalence)},
                               {"male_prevalence", real_or_null(row.male_prevalence)}});
            }
            j["pattern_features"] = std::move(arr);
        }
        out << j.dump(2) << '\n';
        return;
    }
    out << "total_users\t" << stats.total_users << '\n'
        << "known_users\t" << stats.known_users << '\n'
        << "unknown_users\t" << stats.unknown_users << '\n'
        << "female_fraction_of_known\t" << real_or_na(stats.female_fraction_of_known) << '\n'
        << "edge_count\t" << stats.edge_count << '\n'
        << "degrees.min_in\t" << stats.degrees.min_in << '\n'
        << "degrees.mean_in\t" << fmt_real(stats.degrees.mean_in) << '\n'
        << "degrees.max_in\t" << stats.degrees.max_in << '\n'
        << "degrees.min_out\t" << stats.degrees.min_out << '\n'
        << "degrees.mean_out\t" << fmt_real(stats.degrees.mean_out) << '\n'
        << "degrees.max_out\t" << stats.degrees.max_out << '\n';
    if (edge_load) {
        out << "edge_load.self_loops_dropped\t" << edge_load->self_loops_dropped << '\n'
            << "edge_load.duplicate_edges\t" << edge_load->duplicate_edges << '\n'
            << "edge_load.dangling_endpoints\t" << edge_load->dangling_endpoints << '\n';
    }
    if (features) {
        for (const FeatureRow& row : features->features) {
            out << "pattern_features." << row.name << ".female_count\t" << row.female_count << '\n'
                << "pattern_features." << row.name << ".male_count\t" << row.male_count << '\n'
                << "pattern_features." << row.name << ".female_prevalence\t"
                << real_or_na(row.female_prevalence) << '\n'
                << "pattern_features." << row.name << ".male_prevalence\t"
                << real_or_na(row.male_prevalence) << '\n';
        }
    }
}

}  // namespace ginfer::report
