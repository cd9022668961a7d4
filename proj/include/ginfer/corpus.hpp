#ifndef GINFER_CORPUS_HPP
#define GINFER_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ginfer {

enum class Gender : std::uint8_t { Female, Male, Unknown };

std::string_view gender_token(Gender g);  // "F", "M", "U"

struct UserRecord {
    std::string user_id;
    std::string username;  // raw screen name, as found
    Gender gender_label = Gender::Unknown;

    friend bool operator==(const UserRecord&, const UserRecord&) = default;
};

using Edge = std::pair<std::string, std::string>;  // follower -> followee
using EdgeList = std::vector<Edge>;

// Reads `user_id<TAB>username<TAB>gender` lines, gender in {F, M, U}
// with U or empty meaning unknown. `#` comments and blank lines are
// skipped; LF and CRLF both accepted. Fail-fast: malformed lines,
// invalid UTF-8, invalid gender tokens and duplicate ids all throw
// InputError with the line number.
std::vector<UserRecord> load_users(std::istream& in, std::string_view source_name);

void write_users(std::ostream& out, std::span<const UserRecord> users);

struct LoadedEdges {
    EdgeList edges;                      // self-loops removed, duplicates retained
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges = 0;
    std::size_t dangling_endpoints = 0;  // endpoints absent from the user table
};

// Reads `follower_id<TAB>followee_id` lines. `known_ids` may be null,
// in which case no dangling count is taken.
LoadedEdges load_edges(std::istream& in, const std::unordered_set<std::string>* known_ids,
                       std::string_view source_name);

// Partition by whether a gender label exists; relative order kept.
std::pair<std::vector<UserRecord>, std::vector<UserRecord>>
split_known(std::span<const UserRecord> users);

struct DegreeSummary {
    std::size_t min_in = 0;
    std::size_t max_in = 0;
    double mean_in = 0.0;
    std::size_t min_out = 0;
    std::size_t max_out = 0;
    double mean_out = 0.0;
};

struct CorpusStats {
    std::size_t total_users = 0;
    std::size_t known_users = 0;
    std::size_t unknown_users = 0;
    // Unset when there are no known users.
    std::optional<double> female_fraction_of_known;
    std::size_t edge_count = 0;
    DegreeSummary degrees;  // over users present in the table
};

CorpusStats corpus_stats(std::span<const UserRecord> users, const EdgeList& edges = {});

}  // namespace ginfer

#endif  // GINFER_CORPUS_HPP
