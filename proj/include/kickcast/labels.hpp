#ifndef KICKCAST_LABELS_HPP
#define KICKCAST_LABELS_HPP

#include <array>
#include <string>

#include "kickcast/ordering.hpp"
#include "kickcast/world_state.hpp"

namespace kickcast {

enum class ActionCategory : int { kHold = 0, kPass = 1, kDribble = 2 };

enum class ActionDescription : int {
    kDribble = 0,
    kDirectPass = 1,
    kCrossPass = 2,
    kThroughPass = 3,
    kLeadPass = 4,
    kHold = 5,
};

std::string to_string(ActionCategory c);
std::string to_string(ActionDescription d);

/// The kicker's chosen action. HOLD and DRIBBLE target the kicker itself.
struct KickAction {
    ActionCategory category = ActionCategory::kHold;
    ActionDescription description = ActionDescription::kHold;
    int target_unum = 1;
    Vec2 target_position;
    double first_kick_angle = 0.0;  // degrees, direction of the commanded ball velocity
    double first_kick_speed = 0.0;  // meters per cycle

    /// Checks the category/description/target invariants for the given kicker.
    /// Throws std::invalid_argument on violation.
    void validate(int kicker_unum) const;
};

/// Fixed 8-column label vector for one kick event.
struct LabelRow {
    ActionCategory category = ActionCategory::kHold;
    int target_unum = 1;
    int target_index = 0;  // position of target_unum in the teammate ordering
    ActionDescription description = ActionDescription::kHold;
    Vec2 target_position;
    double first_kick_angle = 0.0;
    double first_kick_speed = 0.0;

    std::array<double, 8> to_values() const;
    static const std::array<std::string, 8>& column_names();
    static LabelRow from_values(const std::array<double, 8>& v);
};

/// Converts an action into its label encoding under the given teammate ordering.
/// first_kick_angle is recomputed from (target_position - ball) except for HOLD,
/// whose target coincides with the ball. Throws std::invalid_argument when the
/// target unum is absent from the ordering or the action is inconsistent.
LabelRow generate_labels(const KickAction& action, const Ordering& ordering,
                         const WorldState& ws);

}  // namespace kickcast

#endif  // KICKCAST_LABELS_HPP
