#include "kickcast/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kickcast/errors.hpp"

namespace kickcast {

namespace {

const char* kPlayerCommonNames[] = {
    "side",        "unum",       "body",          "face",
    "tackling",    "kicking",    "card",          "dash_rate",
    "effort_max",  "effort_min", "kickable_dist", "margin_dist",
    "kick_power_rate", "decay",  "size",          "speed_max",
    "x",           "y",          "rx",            "ry",
    "r",           "theta",      "vx",            "vy",
    "vr",          "vtheta",     "pos_count",     "vel_count",
    "goal_angle",  "goal_dist",  "stamina",       "stamina_count"};

const char* kTeammateOnlyNames[] = {"offside",          "is_kicker",
                                    "free_pass_angle",  "direct_pass_dist",
                                    "nearest_opp_dist", "free_shoot_angle"};

FeatureSchema build_standard_schema() {
    FeatureSchema s;
    s.version = "kickcast-features-v1";
    s.column_names = {"ball_x",  "ball_y",  "ball_rx", "ball_ry", "ball_r",
                      "ball_theta", "ball_vx", "ball_vy", "ball_vr", "ball_vtheta"};
    for (int k = 0; k < kDribbleSectors; ++k)
        s.column_names.push_back("dribble_free_dist_" + std::to_string(k));
    s.column_names.push_back("cycle");
    s.column_names.push_back("offside_count");
    auto slot = [](const char* team, int i) {
        return std::string(team) + "_" + (i < 10 ? "0" : "") + std::to_string(i) + "_";
    };
    for (int i = 1; i <= kTeamSize; ++i) {
        for (const char* n : kPlayerCommonNames) s.column_names.push_back(slot("tm", i) + n);
        for (const char* n : kTeammateOnlyNames) s.column_names.push_back(slot("tm", i) + n);
    }
    for (int i = 1; i <= kTeamSize; ++i)
        for (const char* n : kPlayerCommonNames) s.column_names.push_back(slot("opp", i) + n);
    return s;
}

}  // namespace

int FeatureSchema::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < column_names.size(); ++i)
        if (column_names[i] == name) return static_cast<int>(i);
    return -1;
}

const FeatureSchema& FeatureSchema::standard() {
    static const FeatureSchema schema = build_standard_schema();
    return schema;
}

std::array<double, kBallFeatureCount> ball_features(const WorldState& ws) {
    const PlayerState& kicker = ws.kicker();
    Vec2 rel = ws.ball.pos - kicker.pos;
    return {ws.ball.pos.x, ws.ball.pos.y,
            rel.x,         rel.y,
            rel.length(),  angle_deg(rel),
            ws.ball.vel.x, ws.ball.vel.y,
            ws.ball.vel.length(), angle_deg(ws.ball.vel)};
}

namespace {

// Bearing (-180, 180] -> sector 0..11; +180 belongs to sector 0 with -180.
int sector_of(double bearing_deg) {
    int k = static_cast<int>(std::floor((normalize_deg(bearing_deg) + 180.0) / 30.0));
    return k % kDribbleSectors;
}

}  // namespace

std::array<double, kDribbleSectors> dribble_free_distances(const WorldState& ws) {
    std::array<double, kDribbleSectors> out;
    out.fill(kDribbleDistanceCap);
    for (const auto& opp : ws.opponents) {
        Vec2 rel = opp.pos - ws.ball.pos;
        int k = sector_of(angle_deg(rel));
        out[k] = std::min(out[k], std::min(rel.length(), kDribbleDistanceCap));
    }
    return out;
}

double free_pass_angle(const WorldState& ws, int teammate_unum) {
    if (teammate_unum == ws.kicker_unum)
        throw std::invalid_argument("free_pass_angle: teammate is the kicker");
    const PlayerState* tm = ws.teammate(teammate_unum);
    if (!tm) throw std::invalid_argument("free_pass_angle: unknown teammate unum " +
                                         std::to_string(teammate_unum));
    double receiver_dist = ws.ball.pos.dist(tm->pos);
    double pass_dir = angle_deg(tm->pos - ws.ball.pos);
    double best = kFreePassAngleCap;
    for (const auto& opp : ws.opponents) {
        if (opp.pos.dist(ws.ball.pos) >= receiver_dist + kPassCorridorSlack) continue;
        double diff = angle_diff_deg(angle_deg(opp.pos - ws.ball.pos), pass_dir);
        best = std::min(best, diff);
    }
    return best;
}

double free_shoot_angle(const WorldState& ws, int teammate_unum) {
    const PlayerState* tm = ws.teammate(teammate_unum);
    if (!tm) throw std::invalid_argument("free_shoot_angle: unknown teammate unum " +
                                         std::to_string(teammate_unum));
    if (tm->pos.x >= kFieldHalfLength) return 0.0;

    double lo = angle_deg(Vec2{kFieldHalfLength, -kGoalHalfWidth} - tm->pos);
    double hi = angle_deg(Vec2{kFieldHalfLength, kGoalHalfWidth} - tm->pos);
    // x < 52.5 puts both post bearings in (-90, 90), so [lo, hi] needs no wrap.

    std::vector<std::pair<double, double>> shadows;
    for (const auto& opp : ws.opponents) {
        double d = tm->pos.dist(opp.pos);
        double half;
        if (d <= kShootBlockRadius) {
            half = 90.0;
        } else {
            half = rad_to_deg(std::asin(kShootBlockRadius / d));
        }
        double bearing = angle_deg(opp.pos - tm->pos);
        for (int wrap = -1; wrap <= 1; ++wrap) {
            double a = bearing - half + 360.0 * wrap;
            double b = bearing + half + 360.0 * wrap;
            double s = std::max(a, lo), e = std::min(b, hi);
            if (s < e) shadows.emplace_back(s, e);
        }
    }
    std::sort(shadows.begin(), shadows.end());

    double widest = 0.0;
    double cursor = lo;
    for (const auto& [s, e] : shadows) {
        if (s > cursor) widest = std::max(widest, s - cursor);
        cursor = std::max(cursor, e);
    }
    widest = std::max(widest, hi - cursor);
    return std::max(widest, 0.0);
}

std::vector<double> player_features(const WorldState& ws, const PlayerState& player,
                                    PlayerRole role) {
    const PlayerState& kicker = ws.kicker();
    Vec2 rel = player.pos - kicker.pos;
    Vec2 to_goal = goal_center() - player.pos;
    const PlayerTypeParams& tp = player.type_params;

    std::vector<double> out;
    out.reserve(role == PlayerRole::kTeammate ? kTeammateFeatureCount
                                              : kOpponentFeatureCount);
    out.insert(out.end(),
               {static_cast<double>(static_cast<int>(player.side)),
                static_cast<double>(player.unum), player.body, player.face,
                player.tackling ? 1.0 : 0.0, player.kicking ? 1.0 : 0.0,
                player.card ? 1.0 : 0.0, tp.dash_rate, tp.effort_max, tp.effort_min,
                tp.kickable_dist, tp.margin_dist, tp.kick_power_rate, tp.decay, tp.size,
                tp.speed_max, player.pos.x, player.pos.y, rel.x, rel.y, rel.length(),
                angle_deg(rel), player.vel.x, player.vel.y, player.vel.length(),
                angle_deg(player.vel), static_cast<double>(player.pos_count),
                static_cast<double>(player.vel_count), angle_deg(to_goal),
                to_goal.length(), player.stamina,
                static_cast<double>(player.stamina_count)});

    if (role == PlayerRole::kTeammate) {
        bool self = player.unum == ws.kicker_unum;
        double nearest_opp = kNoOpponentDistance;
        for (const auto& opp : ws.opponents)
            nearest_opp = std::min(nearest_opp, opp.pos.dist(player.pos));
        out.insert(out.end(),
                   {is_offside(ws, player.unum) ? 1.0 : 0.0, self ? 1.0 : 0.0,
                    // The corridor is undefined for the holder itself; pinned to 0.
                    self ? 0.0 : free_pass_angle(ws, player.unum),
                    ws.ball.pos.dist(player.pos), nearest_opp,
                    free_shoot_angle(ws, player.unum)});
    }
    return out;
}

Ordering teammate_ordering(const WorldState& ws, OrderingMethod method) {
    return order_players(ws.teammates, method, ws.kicker_unum, ws.kicker().pos);
}

FeatureRow extract_row(const WorldState& ws, OrderingMethod method,
                       std::int64_t event_id) {
    const FeatureSchema& schema = FeatureSchema::standard();
    FeatureRow row;
    row.method = method;
    row.event_id = event_id;
    row.values.reserve(schema.width());

    auto ball = ball_features(ws);
    row.values.insert(row.values.end(), ball.begin(), ball.end());
    auto sectors = dribble_free_distances(ws);
    row.values.insert(row.values.end(), sectors.begin(), sectors.end());
    row.values.push_back(static_cast<double>(ws.cycle));
    row.values.push_back(static_cast<double>(ws.offside_count));

    Vec2 kicker_pos = ws.kicker().pos;
    Ordering tm_order = teammate_ordering(ws, method);
    for (int unum : tm_order.permutation) {
        auto block = player_features(ws, *ws.teammate(unum), PlayerRole::kTeammate);
        row.values.insert(row.values.end(), block.begin(), block.end());
    }
    Ordering opp_order =
        order_players(ws.opponents, base_method(method), std::nullopt, kicker_pos);
    for (int unum : opp_order.permutation) {
        auto block = player_features(ws, *ws.opponent(unum), PlayerRole::kOpponent);
        row.values.insert(row.values.end(), block.begin(), block.end());
    }

    if (static_cast<int>(row.values.size()) != schema.width())
        throw SchemaError("extract_row produced " + std::to_string(row.values.size()) +
                          " values, schema width is " + std::to_string(schema.width()));
    for (double v : row.values)
        if (!std::isfinite(v)) throw NumericError("extract_row produced a non-finite value");
    return row;
}

}  // namespace kickcast
