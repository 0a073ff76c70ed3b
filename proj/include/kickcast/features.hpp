#ifndef KICKCAST_FEATURES_HPP
#define KICKCAST_FEATURES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kickcast/ordering.hpp"
#include "kickcast/world_state.hpp"

namespace kickcast {

inline constexpr int kDribbleSectors = 12;
inline constexpr double kDribbleDistanceCap = 30.0;   // meters, empty-sector value
inline constexpr double kFreePassAngleCap = 60.0;     // degrees
inline constexpr double kPassCorridorSlack = 3.0;     // meters added to the receiver distance
inline constexpr double kShootBlockRadius = 1.2;      // opponent shadow radius, meters
inline constexpr double kNoOpponentDistance = 200.0;  // nearest_opp_dist with no opponents

inline constexpr int kBallFeatureCount = 10;
inline constexpr int kTeammateFeatureCount = 38;
inline constexpr int kOpponentFeatureCount = 32;
inline constexpr int kTeamSize = 11;
inline constexpr int kFeatureWidth = kBallFeatureCount + kDribbleSectors + 2 +
                                     kTeamSize * kTeammateFeatureCount +
                                     kTeamSize * kOpponentFeatureCount;  // 794

/// Fixed-width column layout for one kick event.
struct FeatureSchema {
    std::string version;
    std::vector<std::string> column_names;

    int width() const { return static_cast<int>(column_names.size()); }
    /// Column index by name, or -1 when absent.
    int index_of(const std::string& name) const;

    /// The schema used throughout this artifact ("kickcast-features-v1", width 794).
    static const FeatureSchema& standard();
};

struct FeatureRow {
    std::vector<double> values;  // schema width, all finite
    OrderingMethod method = OrderingMethod::kUnum;
    std::int64_t event_id = 0;
};

/// Ball block: (X, Y, RX, RY, R, Theta, VX, VY, VR, VTheta); R* are relative to the
/// kicker, angles in degrees with the zero vector mapping to 0.
std::array<double, kBallFeatureCount> ball_features(const WorldState& ws);

/// Distance from the ball to the nearest opponent per 30-degree sector, capped at
/// kDribbleDistanceCap. Sector k covers bearings [-180 + 30k, -150 + 30k).
std::array<double, kDribbleSectors> dribble_free_distances(const WorldState& ws);

/// Free half-angle of the pass corridor from the ball to the teammate, in degrees,
/// capped at kFreePassAngleCap. Opponents qualify when their distance to the ball is
/// below dist(ball, teammate) + kPassCorridorSlack.
/// Throws std::invalid_argument when the teammate is the kicker or unknown.
double free_pass_angle(const WorldState& ws, int teammate_unum);

/// Widest opponent-free angular gap inside the goal-mouth cone as seen from the
/// teammate. Opponent shadows subtend asin(min(1, kShootBlockRadius / dist)) on each
/// side of their bearing. Zero when covered or when the player is behind the goal line.
double free_shoot_angle(const WorldState& ws, int teammate_unum);

enum class PlayerRole { kTeammate, kOpponent };

/// Per-player feature block in schema order: 38 values for teammates, 32 for
/// opponents. Booleans encode as 1/0.
std::vector<double> player_features(const WorldState& ws, const PlayerState& player,
                                    PlayerRole role);

/// Assembles the full 794-wide row: ball block, dribble sectors, (cycle,
/// offside_count), teammate blocks in method order, opponent blocks in method order
/// (opponent lists fall back to the base method since no opponent is the kicker).
FeatureRow extract_row(const WorldState& ws, OrderingMethod method,
                       std::int64_t event_id = 0);

/// Teammate ordering used by extract_row for the same state and method.
Ordering teammate_ordering(const WorldState& ws, OrderingMethod method);

}  // namespace kickcast

#endif  // KICKCAST_FEATURES_HPP
