#include "ginfer/matcher.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ginfer/text.hpp"

namespace ginfer {

namespace {

struct BuildNode {
    std::map<char32_t, std::int32_t> children;  // ordered: build is deterministic
    std::int32_t pattern = -1;
    std::uint32_t depth = 0;
};

void sort_matches(std::vector<Match>& matches) {
    std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
        if (a.start != b.start)
            return a.start < b.start;
        if (a.end != b.end)
            return a.end < b.end;
        return a.term.text < b.term.text;
    });
}

}  // namespace

Matcher::Matcher(const Lexicon& lexicon) : terms_(lexicon.terms()) {
    std::vector<BuildNode> trie(1);
    for (std::size_t id = 0; id < terms_.size(); ++id) {
        std::int32_t node = 0;
        for (char32_t c : utf8::decode_lossy(terms_[id].text)) {
            auto it = trie[node].children.find(c);
            if (it == trie[node].children.end()) {
                const auto next = static_cast<std::int32_t>(trie.size());
                trie[node].children.emplace(c, next);
                trie.push_back(BuildNode{{}, -1, trie[node].depth + 1});
                node = next;
            } else {
                node = it->second;
            }
        }
        trie[node].pattern = static_cast<std::int32_t>(id);
    }

    nodes_.resize(trie.size());
    for (std::size_t i = 0; i < trie.size(); ++i) {
        nodes_[i].pattern = trie[i].pattern;
        nodes_[i].depth = trie[i].depth;
        nodes_[i].trans_begin = static_cast<std::uint32_t>(transitions_.size());
        for (const auto& [c, child] : trie[i].children)
            transitions_.emplace_back(c, child);
        nodes_[i].trans_end = static_cast<std::uint32_t>(transitions_.size());
    }

    // Failure links by breadth-first traversal; output links collapse
    // the failure chain to the nearest term-ending suffix.
    std::deque<std::int32_t> queue;
    for (const auto& [c, child] : trie[0].children) {
        nodes_[child].fail = 0;
        queue.push_back(child);
    }
    while (!queue.empty()) {
        const std::int32_t node = queue.front();
        queue.pop_front();
        const std::int32_t fail = nodes_[node].fail;
        nodes_[node].output_link =
            nodes_[fail].pattern >= 0 ? fail : nodes_[fail].output_link;
        for (const auto& [c, child] : trie[node].children) {
            std::int32_t f = fail;
            while (f != 0 && !trie[f].children.count(c))
                f = nodes_[f].fail;
            auto it = trie[f].children.find(c);
            nodes_[child].fail = (it != trie[f].children.end() && it->second != child) ? it->second : 0;
            queue.push_back(child);
        }
    }
}

std::int32_t Matcher::step(std::int32_t state, char32_t c) const {
    for (;;) {
        const Node& n = nodes_[state];
        const auto* begin = transitions_.data() + n.trans_begin;
        const auto* end = transitions_.data() + n.trans_end;
        const auto* it = std::lower_bound(
            begin, end, c,
            [](const std::pair<char32_t, std::int32_t>& t, char32_t ch) { return t.first < ch; });
        if (it != end && it->first == c)
            return it->second;
        if (state == 0)
            return 0;
        state = n.fail;
    }
}

std::vector<Match> Matcher::find_all_matches(std::u32string_view normalized_text) const {
    std::vector<Match> matches;
    std::int32_t state = 0;
    for (std::size_t i = 0; i < normalized_text.size(); ++i) {
        state = step(state, normalized_text[i]);
        for (std::int32_t n = state; n >= 0; n = nodes_[n].output_link) {
            if (nodes_[n].pattern >= 0) {
                const Term& term = terms_[static_cast<std::size_t>(nodes_[n].pattern)];
                const std::size_t len = nodes_[n].depth;
                matches.push_back(Match{term, i + 1 - len, i + 1});
            }
        }
    }
    sort_matches(matches);
    return matches;
}

std::vector<Match> Matcher::find_all_matches(std::string_view normalized_text) const {
    return find_all_matches(utf8::decode_lossy(normalized_text));
}

std::vector<Match> brute_force_matches(const Lexicon& lexicon, std::string_view normalized_text) {
    const std::u32string text = utf8::decode_lossy(normalized_text);
    std::vector<Match> matches;
    for (const Term& term : lexicon.terms()) {
        const std::u32string pattern = utf8::decode_lossy(term.text);
        if (pattern.empty() || pattern.size() > text.size())
            continue;
        for (std::size_t start = 0; start + pattern.size() <= text.size(); ++start) {
            bool hit = true;
            for (std::size_t k = 0; k < pattern.size(); ++k) {
                if (text[start + k] != pattern[k]) {
                    hit = false;
                    break;
                }
            }
            if (hit)
                matches.push_back(Match{term, start, start + pattern.size()});
        }
    }
    sort_matches(matches);
    return matches;
}

std::optional<Match> select_best_match(std::span<const Match> matches,
                                       const SelectionPolicy& policy) {
    if (matches.empty())
        return std::nullopt;

    const auto& precedence = policy.category_precedence;
    std::size_t best_rank = precedence.rank(matches.front().term.category);
    if (policy.mode == SelectionMode::FirstCategoryWins) {
        for (const Match& m : matches)
            best_rank = std::min(best_rank, precedence.rank(m.term.category));
    }

    const Match* best = nullptr;
    for (const Match& m : matches) {
        if (policy.mode == SelectionMode::FirstCategoryWins &&
            precedence.rank(m.term.category) != best_rank)
            continue;
        if (!best) {
            best = &m;
            continue;
        }
        bool better = false;
        if (m.length() != best->length()) {
            better = m.length() > best->length();
        } else if (precedence.rank(m.term.category) != precedence.rank(best->term.category)) {
            better = precedence.rank(m.term.category) < precedence.rank(best->term.category);
        } else if (m.start != best->start) {
            better = m.start < best->start;
        } else {
            better = m.term.text < best->term.text;
        }
        if (better)
            best = &m;
    }
    return *best;
}

}  // namespace ginfer
