#include "ginfer/corpus.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "ginfer/errors.hpp"
#include "ginfer/text.hpp"

namespace ginfer {

std::string_view gender_token(Gender g) {
    switch (g) {
        case Gender::Female: return "F";
        case Gender::Male: return "M";
        case Gender::Unknown: return "U";
    }
    return "?";
}

namespace {

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
}

[[noreturn]] void fail_at(std::string_view source, std::size_t line_no, const std::string& what) {
    throw InputError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', begin);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, tab - begin));
        begin = tab + 1;
    }
}

}  // namespace

std::vector<UserRecord> load_users(std::istream& in, std::string_view source_name) {
    std::vector<UserRecord> users;
    std::unordered_map<std::string, std::size_t> id_lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty() || line[0] == '#')
            continue;
        if (!utf8::is_valid(line))
            fail_at(source_name, line_no, "invalid UTF-8");
        const auto fields = split_tabs(line);
        if (fields.size() != 3)
            fail_at(source_name, line_no,
                    "expected user_id<TAB>username<TAB>gender, got " +
                        std::to_string(fields.size()) + " fields");
        if (fields[0].empty())
            fail_at(source_name, line_no, "empty user id");
        Gender gender;
        if (fields[2] == "F") {
            gender = Gender::Female;
        } else if (fields[2] == "M") {
            gender = Gender::Male;
        } else if (fields[2] == "U" || fields[2].empty()) {
            gender = Gender::Unknown;
        } else {
            fail_at(source_name, line_no,
                    "invalid gender token \"" + std::string(fields[2]) + "\" (expected F, M or U)");
        }
        auto [it, inserted] = id_lines.emplace(std::string(fields[0]), line_no);
        if (!inserted)
            fail_at(source_name, line_no,
                    "duplicate user id \"" + it->first + "\" (first seen at line " +
                        std::to_string(it->second) + ")");
        users.push_back({std::string(fields[0]), std::string(fields[1]), gender});
    }
    if (in.bad())
        throw InputError(std::string(source_name) + ": read failure");
    return users;
}

void write_users(std::ostream& out, std::span<const UserRecord> users) {
    for (const UserRecord& u : users)
        out << u.user_id << '\t' << u.username << '\t' << gender_token(u.gender_label) << '\n';
}

LoadedEdges load_edges(std::istream& in, const std::unordered_set<std::string>* known_ids,
                       std::string_view source_name) {
    LoadedEdges result;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty() || line[0] == '#')
            continue;
        if (!utf8::is_valid(line))
            fail_at(source_name, line_no, "invalid UTF-8");
        const auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
            fail_at(source_name, line_no, "expected follower_id<TAB>followee_id");
        if (fields[0] == fields[1]) {
            ++result.self_loops_dropped;
            continue;
        }
        if (known_ids) {
            if (!known_ids->count(std::string(fields[0])))
                ++result.dangling_endpoints;
            if (!known_ids->count(std::string(fields[1])))
                ++result.dangling_endpoints;
        }
        if (!seen.insert(std::string(line)).second)
            ++result.duplicate_edges;
        result.edges.emplace_back(std::string(fields[0]), std::string(fields[1]));
    }
    if (in.bad())
        throw InputError(std::string(source_name) + ": read failure");
    return result;
}

std::pair<std::vector<UserRecord>, std::vector<UserRecord>>
split_known(std::span<const UserRecord> users) {
    std::vector<UserRecord> known;
    std::vector<UserRecord> unknown;
    for (const UserRecord& u : users) {
        if (u.gender_label == Gender::Unknown)
            unknown.push_back(u);
        else
            known.push_back(u);
    }
    return {std::move(known), std::move(unknown)};
}

CorpusStats corpus_stats(std::span<const UserRecord> users, const EdgeList& edges) {
    CorpusStats stats;
    stats.total_users = users.size();
    std::size_t females = 0;
    std::unordered_map<std::string_view, std::pair<std::size_t, std::size_t>> degrees;
    degrees.reserve(users.size());
    for (const UserRecord& u : users) {
        if (u.gender_label != Gender::Unknown) {
            ++stats.known_users;
            if (u.gender_label == Gender::Female)
                ++females;
        }
        degrees.emplace(u.user_id, std::make_pair(std::size_t{0}, std::size_t{0}));
    }
    stats.unknown_users = stats.total_users - stats.known_users;
    if (stats.known_users > 0)
        stats.female_fraction_of_known =
            static_cast<double>(females) / static_cast<double>(stats.known_users);

    stats.edge_count = edges.size();
    for (const Edge& e : edges) {
        if (auto it = degrees.find(e.first); it != degrees.end())
            ++it->second.second;  // out-degree of follower
        if (auto it = degrees.find(e.second); it != degrees.end())
            ++it->second.first;  // in-degree of followee
    }
    if (!degrees.empty()) {
        DegreeSummary& d = stats.degrees;
        d.min_in = d.min_out = std::numeric_limits<std::size_t>::max();
        std::size_t sum_in = 0;
        std::size_t sum_out = 0;
        for (const auto& [id, deg] : degrees) {
            d.min_in = std::min(d.min_in, deg.first);
            d.max_in = std::max(d.max_in, deg.first);
            d.min_out = std::min(d.min_out, deg.second);
            d.max_out = std::max(d.max_out, deg.second);
            sum_in += deg.first;
            sum_out += deg.second;
        }
        d.mean_in = static_cast<double>(sum_in) / static_cast<double>(degrees.size());
        d.mean_out = static_cast<double>(sum_out) / static_cast<double>(degrees.size());
    }
    return stats;
}

}  // namespace ginfer
