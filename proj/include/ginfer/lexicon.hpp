#ifndef GINFER_LEXICON_HPP
#define GINFER_LEXICON_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ginfer {

struct UserRecord;

enum class Category : std::uint8_t {
    FemaleName,
    MaleName,
    Topic,
    ExtraFemale,
};

constexpr std::size_t kCategoryCount = 4;

std::string_view category_name(Category c);

// Total order over categories, highest precedence first. Decides which
// category keeps a term that appears in several lists, and which match
// wins under first-category selection.
class CategoryPrecedence {
public:
    // ExtraFemale > FemaleName > MaleName > Topic.
    static CategoryPrecedence standard();

    explicit CategoryPrecedence(std::array<Category, kCategoryCount> highest_first);

    // 0 = highest precedence.
    std::size_t rank(Category c) const { return ranks_[static_cast<std::size_t>(c)]; }

private:
    std::array<std::size_t, kCategoryCount> ranks_{};
};

// One normalized lexicon entry. `source_line` is the 1-based line in
// the file it came from (1 for programmatic terms).
struct Term {
    std::string text;
    Category category = Category::FemaleName;
    std::uint32_t source_line = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

// A term whose text sits inside a longer term's text. First-match
// selection can attribute the longer name's users to the shorter term.
struct ShadowPair {
    Term inner;
    Term outer;

    friend bool operator==(const ShadowPair&, const ShadowPair&) = default;
};

// A mined n-gram proposed for lexicon inclusion.
struct CandidateTerm {
    std::string text;
    std::size_t support = 0;        // users containing it, counted once per user
    double female_fraction = 0.0;   // F users containing it / support

    friend bool operator==(const CandidateTerm&, const CandidateTerm&) = default;
};

// Immutable set of terms with unique texts plus the category order.
// Terms are kept sorted by text; the index of a term is its dense
// pattern id for the matcher.
class Lexicon {
public:
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool contains(std::string_view text) const;
    const CategoryPrecedence& precedence() const { return precedence_; }

private:
    friend struct LexiconBuilder;
    std::vector<Term> terms_;
    std::unordered_set<std::string> texts_;
    CategoryPrecedence precedence_ = CategoryPrecedence::standard();
};

struct TermList {
    Category category = Category::FemaleName;
    std::vector<Term> terms;
    std::size_t skipped_short = 0;  // lines under 2 code points after normalization
};

// Reads one term per line: UTF-8, `#` comments and blank lines ignored,
// lines normalized, in-stream duplicates dropped. Throws InputError on
// stream failure or invalid UTF-8 (with line number).
TermList load_term_list(std::istream& in, Category category, std::string_view source_name);

// A term text that appeared under more than one list; the occurrence
// under `dropped` lost to the one kept under `kept`.
struct CategoryConflict {
    std::string text;
    Category kept;
    Category dropped;

    friend bool operator==(const CategoryConflict&, const CategoryConflict&) = default;
};

struct LexiconBuildResult {
    Lexicon lexicon;
    std::vector<CategoryConflict> conflicts;
};

// Unions the lists; a text appearing under several categories is kept
// once under the highest-precedence one, each loss recorded as a
// conflict. Throws EmptyInputError if the union is empty and
// InputError on terms that are not normalized or are under 2 code
// points.
LexiconBuildResult build_lexicon(std::span<const TermList> lists,
                                 const CategoryPrecedence& precedence = CategoryPrecedence::standard());

// All ordered pairs (inner, outer) of distinct terms where inner.text
// is a strict substring of outer.text, sorted by (outer.text,
// inner.text).
std::vector<ShadowPair> shadow_report(const Lexicon& lexicon);

struct MiningParams {
    std::size_t n_min = 2;
    std::size_t n_max = 4;
    std::size_t min_support = 2;
    double skew_threshold = 0.8;
};

// Counts every character n-gram of the normalized usernames at most
// once per user; emits those meeting the support and skew thresholds
// and not already in `exclude`, sorted by support descending then text.
// Requires at least one F and one M label.
std::vector<CandidateTerm> mine_candidate_terms(std::span<const UserRecord> labeled_users,
                                                const MiningParams& params,
                                                const Lexicon* exclude = nullptr);

}  // namespace ginfer

#endif  // GINFER_LEXICON_HPP
