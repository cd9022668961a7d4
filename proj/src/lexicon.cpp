#include "ginfer/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include "ginfer/corpus.hpp"
#include "ginfer/errors.hpp"
#include "ginfer/text.hpp"

namespace ginfer {

std::string_view category_name(Category c) {
    switch (c) {
        case Category::FemaleName: return "FEMALE_NAME";
        case Category::MaleName: return "MALE_NAME";
        case Category::Topic: return "TOPIC";
        case Category::ExtraFemale: return "EXTRA_FEMALE";
    }
    return "?";
}

CategoryPrecedence CategoryPrecedence::standard() {
    return CategoryPrecedence({Category::ExtraFemale, Category::FemaleName,
                               Category::MaleName, Category::Topic});
}

CategoryPrecedence::CategoryPrecedence(std::array<Category, kCategoryCount> highest_first) {
    std::array<bool, kCategoryCount> seen{};
    for (std::size_t r = 0; r < highest_first.size(); ++r) {
        const auto idx = static_cast<std::size_t>(highest_first[r]);
        if (seen[idx])
            throw InputError("category precedence lists a category twice");
        seen[idx] = true;
        ranks_[idx] = r;
    }
}

bool Lexicon::contains(std::string_view text) const {
    return texts_.count(std::string(text)) != 0;
}

namespace {

std::size_t code_point_length(std::string_view utf8_text) {
    return utf8::decode_lossy(utf8_text).size();
}

// Strips one trailing \r so CRLF streams parse like LF ones.
void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
}

}  // namespace

TermList load_term_list(std::istream& in, Category category, std::string_view source_name) {
    TermList result;
    result.category = category;
    std::unordered_set<std::string> seen;
    std::string line;
    std::uint32_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty() || line[0] == '#')
            continue;
        if (!utf8::is_valid(line))
            throw InputError(std::string(source_name) + ":" + std::to_string(line_no) +
                             ": invalid UTF-8");
        std::string text = normalize_text(line);
        if (code_point_length(text) < 2) {
            ++result.skipped_short;
            continue;
        }
        if (!seen.insert(text).second)
            continue;
        result.terms.push_back(Term{std::move(text), category, line_no});
    }
    if (in.bad())
        throw InputError(std::string(source_name) + ": read failure");
    return result;
}

struct LexiconBuilder {
    static Lexicon make(std::vector<Term> terms, const CategoryPrecedence& precedence) {
        Lexicon lex;
        lex.precedence_ = precedence;
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.text < b.text; });
        for (const Term& t : terms)
            lex.texts_.insert(t.text);
        lex.terms_ = std::move(terms);
        return lex;
    }
};

LexiconBuildResult build_lexicon(std::span<const TermList> lists,
                                 const CategoryPrecedence& precedence) {
    std::unordered_map<std::string, Term> kept;
    std::vector<CategoryConflict> conflicts;
    for (const TermList& list : lists) {
        for (const Term& term : list.terms) {
            if (normalize_text(term.text) != term.text)
                throw InputError("term is not normalized: \"" + term.text + "\"");
            if (code_point_length(term.text) < 2)
                throw InputError("term is shorter than 2 characters: \"" + term.text + "\"");
            auto [it, inserted] = kept.emplace(term.text, term);
            if (inserted)
                continue;
            if (precedence.rank(term.category) < precedence.rank(it->second.category)) {
                conflicts.push_back({term.text, term.category, it->second.category});
                it->second = term;
            } else {
                conflicts.push_back({term.text, it->second.category, term.category});
            }
        }
    }
    if (kept.empty())
        throw EmptyInputError("no terms: a lexicon needs at least one");
    std::vector<Term> terms;
    terms.reserve(kept.size());
    for (auto& [text, term] : kept)
        terms.push_back(std::move(term));
    std::sort(conflicts.begin(), conflicts.end(), [](const CategoryConflict& a, const CategoryConflict& b) {
        if (a.text != b.text)
            return a.text < b.text;
        return static_cast<int>(a.dropped) < static_cast<int>(b.dropped);
    });
    return {LexiconBuilder::make(std::move(terms), precedence), std::move(conflicts)};
}

std::vector<ShadowPair> shadow_report(const Lexicon& lexicon) {
    if (lexicon.size() == 0)
        throw EmptyInputError("shadow report over an empty lexicon");
    std::vector<ShadowPair> pairs;
    const auto& terms = lexicon.terms();
    for (const Term& outer : terms) {
        for (const Term& inner : terms) {
            if (inner.text.size() >= outer.text.size())
                continue;
            if (outer.text.find(inner.text) != std::string::npos)
                pairs.push_back({inner, outer});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const ShadowPair& a, const ShadowPair& b) {
        if (a.outer.text != b.outer.text)
            return a.outer.text < b.outer.text;
        return a.inner.text < b.inner.text;
    });
    return pairs;
}

std::vector<CandidateTerm> mine_candidate_terms(std::span<const UserRecord> labeled_users,
                                                const MiningParams& params,
                                                const Lexicon* exclude) {
    if (params.n_min < 2 || params.n_min > params.n_max)
        throw InputError("n-gram bounds need 2 <= n_min <= n_max");
    if (!(params.skew_threshold > 0.5) || params.skew_threshold > 1.0)
        throw InputError("skew threshold must be in (0.5, 1]");

    bool any_f = false;
    bool any_m = false;
    for (const UserRecord& u : labeled_users) {
        any_f = any_f || u.gender_label == Gender::Female;
        any_m = any_m || u.gender_label == Gender::Male;
    }
    if (!any_f || !any_m)
        throw EmptyInputError("mining needs at least one F and one M labeled user");

    struct Counts {
        std::size_t support = 0;
        std::size_t female = 0;
    };
    std::unordered_map<std::string, Counts> counts;
    std::unordered_set<std::string> per_user;
    for (const UserRecord& u : labeled_users) {
        if (u.gender_label == Gender::Unknown)
            continue;
        const std::u32string name = normalize_to_u32(u.username);
        per_user.clear();
        for (std::size_t n = params.n_min; n <= params.n_max && n <= name.size(); ++n) {
            for (std::size_t i = 0; i + n <= name.size(); ++i)
                per_user.insert(utf8::encode(std::u32string_view(name).substr(i, n)));
        }
        for (const std::string& gram : per_user) {
            Counts& c = counts[gram];
            ++c.support;
            if (u.gender_label == Gender::Female)
                ++c.female;
        }
    }

    std::vector<CandidateTerm> out;
    for (const auto& [gram, c] : counts) {
        if (c.support < params.min_support)
            continue;
        const double fraction = static_cast<double>(c.female) / static_cast<double>(c.support);
        if (fraction < params.skew_threshold && fraction > 1.0 - params.skew_threshold)
            continue;
        if (exclude && exclude->contains(gram))
            continue;
        out.push_back({gram, c.support, fraction});
    }
    std::sort(out.begin(), out.end(), [](const CandidateTerm& a, const CandidateTerm& b) {
        if (a.support != b.support)
            return a.support > b.support;
        return a.text < b.text;
    });
    return out;
}

}  // namespace ginfer
