#ifndef KICKCAST_SYNTH_GENERATOR_HPP
#define KICKCAST_SYNTH_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "kickcast/labels.hpp"
#include "kickcast/world_state.hpp"

namespace kickcast {

/// Thresholds of the rule-based kicker policy.
struct OracleConfig {
    double pass_threshold_deg = 10.0;  // minimum free pass corridor half-angle
    double dribble_threshold_m = 7.0;  // minimum free sector distance
};

struct EpisodeConfig {
    int n_events = 1000;
    std::uint64_t seed = 1;
    NoiseConfig noise;
    double formation_spread = 10.0;  // meters, controls how far teams spread around the ball
    double pass_threshold_deg = 10.0;
    double dribble_threshold_m = 7.0;

    OracleConfig oracle() const { return {pass_threshold_deg, dribble_threshold_m}; }
};

/// One synthetic kick event: ground-truth state, its noisy observation, and the
/// oracle action chosen from the ground truth.
struct KickEvent {
    WorldState fws;
    WorldState ws;
    KickAction action;
    std::int64_t event_id = 0;
};

/// Deterministic rule-based stand-in for the kick-planning module. Decides from the
/// FULL state only:
///   1. pass to the receiver with the widest free corridor, if any receiver has a
///      corridor of at least pass_threshold_deg and no opponent within 3 m;
///   2. otherwise dribble 5 m along the center of the best free sector whose target
///      stays on the pitch, if that sector is clear for at least dribble_threshold_m;
///   3. otherwise hold.
/// Throws std::invalid_argument unless fws is FULL and the kicker is kickable.
KickAction oracle_policy(const WorldState& fws, const OracleConfig& cfg = {});

/// Generates n_events independent kick events, fully determined by cfg.
std::vector<KickEvent> generate_events(const EpisodeConfig& cfg);

}  // namespace kickcast

#endif  // KICKCAST_SYNTH_GENERATOR_HPP
