#include "ginfer/gen.hpp"

#include <algorithm>
#include <cmath>

#include "ginfer/errors.hpp"

namespace ginfer {

namespace {

// splitmix64; all generator randomness comes from this one stream so
// output is identical on every platform.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

constexpr char kJunkChars[] = "0123456789_";

std::string junk(Rng& rng, std::size_t len) {
    std::string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(kJunkChars[rng.bounded(sizeof(kJunkChars) - 1)]);
    return out;
}

}  // namespace

std::vector<UserRecord> generate_corpus(const GenParams& params,
                                        std::span<const std::string> female_names,
                                        std::span<const std::string> male_names) {
    if (params.female_fraction < 0.0 || params.female_fraction > 1.0 ||
        params.unknown_fraction < 0.0 || params.unknown_fraction > 1.0 ||
        params.embed_rate_female < 0.0 || params.embed_rate_female > 1.0 ||
        params.embed_rate_male < 0.0 || params.embed_rate_male > 1.0)
        throw InputError("generator fractions must be in [0, 1]");

    const std::size_t n = params.n_users;
    const auto n_female = static_cast<std::size_t>(
        std::llround(params.female_fraction * static_cast<double>(n)));
    const auto n_unknown = static_cast<std::size_t>(
        std::llround(params.unknown_fraction * static_cast<double>(n)));

    Rng rng{params.seed};

    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = static_cast<std::uint32_t>(i);
    auto shuffle = [&rng](std::vector<std::uint32_t>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng.bounded(i)]);
    };

    std::vector<bool> is_female(n, false);
    shuffle(order);
    for (std::size_t i = 0; i < n_female; ++i)
        is_female[order[i]] = true;

    std::vector<bool> is_unknown(n, false);
    shuffle(order);
    for (std::size_t i = 0; i < n_unknown; ++i)
        is_unknown[order[i]] = true;

    std::vector<UserRecord> users;
    users.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool female = is_female[i];
        const double embed_rate = female ? params.embed_rate_female : params.embed_rate_male;
        const auto& names = female ? female_names : male_names;
        std::string username;
        if (!names.empty() && rng.uniform() < embed_rate) {
            const std::string& name = names[rng.bounded(names.size())];
            username = junk(rng, 2 + rng.bounded(4)) + name + junk(rng, 2 + rng.bounded(4));
        } else {
            username = junk(rng, 6 + rng.bounded(7));
        }
        const Gender label = is_unknown[i] ? Gender::Unknown
                             : female      ? Gender::Female
                                           : Gender::Male;
        users.push_back({"u" + std::to_string(i + 1), std::move(username), label});
    }
    return users;
}

}  // namespace ginfer
