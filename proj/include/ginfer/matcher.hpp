#ifndef GINFER_MATCHER_HPP
#define GINFER_MATCHER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ginfer/lexicon.hpp"

namespace ginfer {

// One occurrence of a term. Offsets count Unicode code points in the
// normalized text; [start, end) equals term.text.
struct Match {
    Term term;
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start; }
    friend bool operator==(const Match&, const Match&) = default;
};

enum class SelectionMode : std::uint8_t {
    FirstCategoryWins,  // only the highest-precedence category present competes
    LongestWins,        // every match competes
};

struct SelectionPolicy {
    SelectionMode mode = SelectionMode::FirstCategoryWins;
    CategoryPrecedence category_precedence = CategoryPrecedence::standard();
};

// Immutable multi-pattern automaton over a lexicon's terms (trie with
// failure links). Query cost is linear in the text, independent of the
// term count. Safe to share across threads once built.
class Matcher {
public:
    explicit Matcher(const Lexicon& lexicon);

    std::size_t pattern_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Every occurrence of every term, overlaps and nestings included,
    // sorted by (start, end, term.text).
    std::vector<Match> find_all_matches(std::string_view normalized_text) const;
    std::vector<Match> find_all_matches(std::u32string_view normalized_text) const;

private:
    struct Node {
        std::int32_t fail = 0;
        std::int32_t output_link = -1;  // nearest proper-suffix node ending a term
        std::int32_t pattern = -1;      // term ending exactly here (texts are unique)
        std::uint32_t depth = 0;
        std::uint32_t trans_begin = 0;
        std::uint32_t trans_end = 0;
    };

    std::int32_t step(std::int32_t state, char32_t c) const;

    std::vector<Node> nodes_;
    std::vector<std::pair<char32_t, std::int32_t>> transitions_;  // sorted per node
    std::vector<Term> terms_;
};

// Independent oracle with the same contract as find_all_matches,
// implemented as a per-term, per-offset scan.
std::vector<Match> brute_force_matches(const Lexicon& lexicon, std::string_view normalized_text);

// Deterministic best match, or nullopt for an empty list.
// FirstCategoryWins narrows to the highest-precedence category present;
// LongestWins keeps all. Ties break by longer length, then higher
// category precedence, then smaller start, then smaller term text.
std::optional<Match> select_best_match(std::span<const Match> matches,
                                       const SelectionPolicy& policy);

}  // namespace ginfer

#endif  // GINFER_MATCHER_HPP
