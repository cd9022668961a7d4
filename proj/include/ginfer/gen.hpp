#ifndef GINFER_GEN_HPP
#define GINFER_GEN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ginfer/corpus.hpp"

namespace ginfer {

// Synthetic corpus parameters. Female and unknown counts are exact
// (llround of fraction * n), not binomial draws, so split counts can be
// asserted. Usernames are digits and underscores, optionally embedding
// a name from the matching list at the per-gender rate.
struct GenParams {
    std::size_t n_users = 1000;
    double female_fraction = 0.5;
    double embed_rate_female = 0.0;
    double embed_rate_male = 0.0;
    double unknown_fraction = 0.0;
    std::uint64_t seed = 0;
};

// Deterministic for a given parameter set, independent of platform.
// Name lists may be empty when the matching embed rate is 0.
std::vector<UserRecord> generate_corpus(const GenParams& params,
                                        std::span<const std::string> female_names,
                                        std::span<const std::string> male_names);

}  // namespace ginfer

#endif  // GINFER_GEN_HPP
