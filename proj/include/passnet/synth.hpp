#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "passnet/passlog.hpp"

namespace passnet {

/// Markov possession model: chain starts arrive as a Poisson process at rate
/// pass_rate*(1-continuation_prob) per minute, chain lengths are geometric
/// with mean 1/(1-continuation_prob), so the pass rate comes out at
/// pass_rate. Zones walk a row-stochastic transition matrix; receivers are
/// drawn by weight, never the current passer.
struct SimConfig {
    std::uint64_t seed = 0;
    std::vector<int> half_minutes = {45, 45};  // index 0 is half 1; up to 4 halves
    int players = 11;                          // squad numbers 1..players
    double pass_rate = 6.0;                    // expected passes per minute
    double continuation_prob = 0.0;            // in [0, 1)
    std::array<std::array<double, kZoneCount>, kZoneCount> zone_transition{};
    std::vector<double> receiver_bias;         // one positive weight per player

    static SimConfig defaults();
};

/// Throws std::invalid_argument when a field is outside its domain.
void validate_config(const SimConfig& cfg);

struct SimOutput {
    MatchLog log;
    std::vector<int> chain_lengths;  // ground-truth chain boundaries, in order
};

SimOutput simulate_detailed(const SimConfig& cfg);
MatchLog simulate(const SimConfig& cfg);

/// Presets: "disruption" (short chains, slow pace, defensive zones) and
/// "domination" (long chains, fast pace, offensive zones).
SimConfig scenario(std::string_view name);

/// Flat key=value config file, one key per line.
SimConfig parse_sim_config(std::string_view text);
std::string write_sim_config(const SimConfig& cfg);

}  // namespace passnet
