#include "kickcast/labels.hpp"

#include <stdexcept>

namespace kickcast {

std::string to_string(ActionCategory c) {
    switch (c) {
        case ActionCategory::kHold: return "hold";
        case ActionCategory::kPass: return "pass";
        case ActionCategory::kDribble: return "dribble";
    }
    return "?";
}

std::string to_string(ActionDescription d) {
    switch (d) {
        case ActionDescription::kDribble: return "dribble";
        case ActionDescription::kDirectPass: return "direct_pass";
        case ActionDescription::kCrossPass: return "cross_pass";
        case ActionDescription::kThroughPass: return "through_pass";
        case ActionDescription::kLeadPass: return "lead_pass";
        case ActionDescription::kHold: return "hold";
    }
    return "?";
}

void KickAction::validate(int kicker_unum) const {
    switch (category) {
        case ActionCategory::kPass:
            if (description != ActionDescription::kDirectPass &&
                description != ActionDescription::kCrossPass &&
                description != ActionDescription::kThroughPass &&
                description != ActionDescription::kLeadPass)
                throw std::invalid_argument("PASS action with non-pass description");
            if (target_unum == kicker_unum)
                throw std::invalid_argument("PASS action targeting the kicker");
            break;
        case ActionCategory::kHold:
            if (first_kick_speed != 0.0)
                throw std::invalid_argument("HOLD action with nonzero kick speed");
            if (target_unum != kicker_unum)
                throw std::invalid_argument("HOLD action not targeting the kicker");
            if (description != ActionDescription::kHold)
                throw std::invalid_argument("HOLD action with non-hold description");
            break;
        case ActionCategory::kDribble:
            if (description != ActionDescription::kDribble)
                throw std::invalid_argument("DRIBBLE action with non-dribble description");
            if (target_unum != kicker_unum)
                throw std::invalid_argument("DRIBBLE action not targeting the kicker");
            break;
    }
    if (first_kick_speed < 0.0)
        throw std::invalid_argument("negative first kick speed");
}

std::array<double, 8> LabelRow::to_values() const {
    return {static_cast<double>(static_cast<int>(category)),
            static_cast<double>(target_unum),
            static_cast<double>(target_index),
            static_cast<double>(static_cast<int>(description)),
            target_position.x,
            target_position.y,
            first_kick_angle,
            first_kick_speed};
}

const std::array<std::string, 8>& LabelRow::column_names() {
    static const std::array<std::string, 8> names = {
        "label_category",    "label_target_unum", "label_target_index",
        "label_description", "label_target_x",    "label_target_y",
        "label_kick_angle",  "label_kick_speed"};
    return names;
}

LabelRow LabelRow::from_values(const std::array<double, 8>& v) {
    LabelRow row;
    row.category = static_cast<ActionCategory>(static_cast<int>(v[0]));
    row.target_unum = static_cast<int>(v[1]);
    row.target_index = static_cast<int>(v[2]);
    row.description = static_cast<ActionDescription>(static_cast<int>(v[3]));
    row.target_position = {v[4], v[5]};
    row.first_kick_angle = v[6];
    row.first_kick_speed = v[7];
    return row;
}

LabelRow generate_labels(const KickAction& action, const Ordering& ordering,
                         const WorldState& ws) {
    action.validate(ws.kicker_unum);
    int index = ordering.index_of(action.target_unum);
    if (index < 0)
        throw std::invalid_argument("generate_labels: target unum " +
                                    std::to_string(action.target_unum) +
                                    " absent from ordering");
    LabelRow row;
    row.category = action.category;
    row.target_unum = action.target_unum;
    row.target_index = index;
    row.description = action.description;
    row.target_position = action.target_position;
    row.first_kick_speed = action.first_kick_speed;
    Vec2 delta = action.target_position - ws.ball.pos;
    if (action.category == ActionCategory::kHold || (delta.x == 0.0 && delta.y == 0.0))
        row.first_kick_angle = action.first_kick_angle;
    else
        row.first_kick_angle = angle_deg(delta);
    return row;
}

}  // namespace kickcast
