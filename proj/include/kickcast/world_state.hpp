#ifndef KICKCAST_WORLD_STATE_HPP
#define KICKCAST_WORLD_STATE_HPP

#include <cstdint>
#include <vector>

#include "kickcast/geometry.hpp"

namespace kickcast {

enum class Side : int { kLeft = 1, kRight = -1 };

/// Heterogeneous player type parameters (the nine type-class features).
struct PlayerTypeParams {
    double dash_rate = 0.006;
    double effort_max = 1.0;
    double effort_min = 0.6;
    double kickable_dist = 1.085;
    double margin_dist = 0.7;
    double kick_power_rate = 0.027;
    double decay = 0.4;
    double size = 0.3;
    double speed_max = 1.05;
};

struct PlayerState {
    Side side = Side::kLeft;
    int unum = 1;
    Vec2 pos;
    Vec2 vel;           // meters per cycle
    double body = 0.0;  // degrees, (-180, 180]
    double face = 0.0;  // degrees, (-180, 180]
    double stamina = 8000.0;
    PlayerTypeParams type_params;
    bool tackling = false;
    bool kicking = false;
    bool card = false;
    // Cycles since each quantity was last directly observed. All zero in a FULL state.
    int pos_count = 0;
    int vel_count = 0;
    int stamina_count = 0;
};

struct BallState {
    Vec2 pos;
    Vec2 vel;  // |vel| <= kBallSpeedMax
};

enum class Flavor { kFull, kNoisy };

/// One-cycle snapshot of the match from the kicker team's point of view.
/// Coordinates are normalized so the kicker's team attacks toward +x.
struct WorldState {
    int cycle = 0;
    BallState ball;
    std::vector<PlayerState> teammates;  // 11 players in a complete state
    std::vector<PlayerState> opponents;  // 11 players in a complete state
    int kicker_unum = 1;                 // the teammate holding the ball
    int offside_count = 0;               // cycles since the offside line was last confirmed
    Flavor flavor = Flavor::kFull;

    /// Teammate lookup by uniform number; nullptr when absent.
    const PlayerState* teammate(int unum) const;
    const PlayerState* opponent(int unum) const;
    /// The ball holder. Throws std::invalid_argument if kicker_unum is not on the team.
    const PlayerState& kicker() const;
};

/// Observation noise model standing in for the server's sensor noise.
struct NoiseConfig {
    double pos_sigma_base = 0.1;       // meters
    double pos_sigma_per_meter = 0.02; // extra sigma per meter of distance from the kicker
    double vel_sigma = 0.05;           // meters per cycle
    double angle_sigma = 2.0;          // degrees
    double p_unseen = 0.05;            // per player per cycle
    std::uint64_t seed = 1;
};

/// FULL -> NOISY transform. Pure function of (fws, cfg, prev): noise is drawn from
/// per-object substreams keyed on (cfg.seed, cycle, side, unum), so the result does
/// not depend on the stored player order. The kicker and the ball are perturbed with
/// half sigma; players other than the kicker may be "not seen" with probability
/// p_unseen, in which case their fields are carried over from prev (when given) and
/// their observation counts are incremented.
/// Throws std::invalid_argument if fws is not FULL or carries nonzero counts.
WorldState apply_observation_noise(const WorldState& fws, const NoiseConfig& cfg,
                                   const WorldState* prev = nullptr);

/// Offside line when attacking toward +x: max(second-largest opponent x, ball x).
double offside_line_x(const WorldState& ws);

/// True iff the teammate is beyond the offside line in the opponent half.
/// Throws std::invalid_argument for an unknown unum.
bool is_offside(const WorldState& ws, int teammate_unum);

/// True iff the ball is within the teammate's kickable distance (boundary inclusive).
/// Throws std::invalid_argument for an unknown unum.
bool kickable(const WorldState& ws, int teammate_unum);

}  // namespace kickcast

#endif  // KICKCAST_WORLD_STATE_HPP
