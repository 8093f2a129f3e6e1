#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gatewitness {

// One inequality family tracked over the random-channel campaign. margin is
// the amount by which the inequality held (negative = violated beyond its
// tolerance); worst_margin is the minimum seen.
struct VerifyCheck {
    std::string name;
    double tolerance = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    double worst_margin = 0.0;
    std::uint64_t worst_seed = 0;
};

struct VerifySummary {
    std::uint64_t channels = 0;
    std::uint64_t base_seed = 0;
    std::uint64_t kraus_rank = 0;  // 0 = cycle ranks 1..16
    std::vector<VerifyCheck> checks;

    std::uint64_t total_violations() const;
};

// Evaluates every estimator inequality against the exact oracles over
// n_channels seeded random channels composed after the ideal controlled-NOT.
// kraus_rank 0 cycles through ranks 1..16; channel i uses the seed
// derive_stream(seed, i).
VerifySummary verify_bounds_campaign(std::uint64_t n_channels, std::uint64_t seed,
                                     std::uint64_t kraus_rank);

nlohmann::ordered_json verify_to_json(const VerifySummary& summary);
std::string render_verify_summary(const VerifySummary& summary);

}  // namespace gatewitness
