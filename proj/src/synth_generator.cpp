#include "kickcast/synth_generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kickcast/features.hpp"
#include "kickcast/rng.hpp"

namespace kickcast {

namespace {

constexpr double kMarkingRadius = 3.0;     // receivers need this much space
constexpr double kDribbleStep = 5.0;       // meters dribbled along the chosen sector
constexpr double kDribbleSpeed = 0.8;
constexpr double kLeadCycles = 5.0;        // pass lead = receiver velocity * this
constexpr double kCrossGoalRadius = 15.0;
constexpr double kCrossMinKickerY = 10.0;

double sector_center_deg(int k) { return -180.0 + 30.0 * k + 15.0; }

Vec2 clamp_to_pitch(Vec2 p) {
    return {std::clamp(p.x, -kFieldHalfLength, kFieldHalfLength),
            std::clamp(p.y, -kFieldHalfWidth, kFieldHalfWidth)};
}

double pass_speed_for(double kick_distance) {
    return std::clamp(0.1 * kick_distance + 1.0, 1.0, 3.0);
}

}  // namespace

KickAction oracle_policy(const WorldState& fws, const OracleConfig& cfg) {
    if (fws.flavor != Flavor::kFull)
        throw std::invalid_argument("oracle_policy expects a FULL state");
    if (!kickable(fws, fws.kicker_unum))
        throw std::invalid_argument("oracle_policy: kicker is not kickable");

    // Rule 1: pass to the freest receiver.
    const PlayerState* best_receiver = nullptr;
    double best_angle = -1.0;
    for (const auto& tm : fws.teammates) {
        if (tm.unum == fws.kicker_unum) continue;
        double corridor = free_pass_angle(fws, tm.unum);
        if (corridor < cfg.pass_threshold_deg) continue;
        double nearest_opp = kNoOpponentDistance;
        for (const auto& opp : fws.opponents)
            nearest_opp = std::min(nearest_opp, opp.pos.dist(tm.pos));
        if (nearest_opp < kMarkingRadius) continue;
        if (corridor > best_angle ||
            (corridor == best_angle && tm.unum < best_receiver->unum)) {
            best_angle = corridor;
            best_receiver = &tm;
        }
    }
    if (best_receiver) {
        Vec2 target = clamp_to_pitch(best_receiver->pos + best_receiver->vel * kLeadCycles);
        double lead = best_receiver->pos.dist(target);
        KickAction a;
        a.category = ActionCategory::kPass;
        a.target_unum = best_receiver->unum;
        a.target_position = target;
        if (lead > 3.0 && target.x > 0.0)
            a.description = ActionDescription::kThroughPass;
        else if (best_receiver->pos.dist(goal_center()) < kCrossGoalRadius &&
                 std::abs(fws.kicker().pos.y) > kCrossMinKickerY)
            a.description = ActionDescription::kCrossPass;
        else if (lead > 1.0)
            a.description = ActionDescription::kLeadPass;
        else
            a.description = ActionDescription::kDirectPass;
        a.first_kick_speed = pass_speed_for(fws.ball.pos.dist(target));
        a.first_kick_angle = angle_deg(target - fws.ball.pos);
        return a;
    }

    // Rule 2: dribble into the widest free sector whose 5 m target stays on the pitch.
    auto sectors = dribble_free_distances(fws);
    int best_sector = -1;
    double best_dist = -1.0;
    for (int k = 0; k < kDribbleSectors; ++k) {
        if (sectors[k] < cfg.dribble_threshold_m) continue;
        Vec2 target = fws.ball.pos + unit_deg(sector_center_deg(k)) * kDribbleStep;
        if (!inside_pitch(target)) continue;
        if (sectors[k] > best_dist) {
            best_dist = sectors[k];
            best_sector = k;
        }
    }
    if (best_sector >= 0) {
        KickAction a;
        a.category = ActionCategory::kDribble;
        a.description = ActionDescription::kDribble;
        a.target_unum = fws.kicker_unum;
        a.target_position = fws.ball.pos + unit_deg(sector_center_deg(best_sector)) * kDribbleStep;
        a.first_kick_angle = sector_center_deg(best_sector);
        a.first_kick_speed = kDribbleSpeed;
        return a;
    }

    // Rule 3: hold.
    KickAction a;
    a.category = ActionCategory::kHold;
    a.description = ActionDescription::kHold;
    a.target_unum = fws.kicker_unum;
    a.target_position = fws.ball.pos;
    a.first_kick_angle = 0.0;
    a.first_kick_speed = 0.0;
    return a;
}

namespace {

enum class Scenario { kOpen, kContested, kSwarm };

PlayerTypeParams random_type_params(Rng& rng) {
    PlayerTypeParams tp;
    auto jitter = [&](double v, double rel) { return v * rng.uniform(1.0 - rel, 1.0 + rel); };
    tp.dash_rate = jitter(tp.dash_rate, 0.08);
    double e1 = rng.uniform(0.55, 0.7), e2 = rng.uniform(0.9, 1.0);
    tp.effort_min = std::min(e1, e2);
    tp.effort_max = std::max(e1, e2);
    tp.kickable_dist = jitter(tp.kickable_dist, 0.08);
    tp.margin_dist = jitter(tp.margin_dist, 0.08);
    tp.kick_power_rate = jitter(tp.kick_power_rate, 0.08);
    tp.decay = std::clamp(jitter(tp.decay, 0.08), 0.05, 0.95);
    tp.size = jitter(tp.size, 0.05);
    tp.speed_max = jitter(tp.speed_max, 0.07);
    return tp;
}

PlayerState random_player(Rng& rng, Side side, int unum, Vec2 pos) {
    PlayerState p;
    p.side = side;
    p.unum = unum;
    p.pos = clamp_to_pitch(pos);
    p.type_params = random_type_params(rng);
    double speed = rng.uniform(0.0, 0.75 * p.type_params.speed_max);
    p.vel = unit_deg(rng.uniform(-180.0, 180.0)) * speed;
    p.body = normalize_deg(rng.uniform(-180.0, 180.0));
    p.face = normalize_deg(rng.uniform(-180.0, 180.0));
    p.stamina = rng.uniform(3000.0, 8000.0);
    p.tackling = rng.bernoulli(0.02);
    p.kicking = rng.bernoulli(0.05);
    p.card = rng.bernoulli(0.05);
    return p;
}

Vec2 around(Rng& rng, Vec2 center, double r_min, double r_max) {
    return center + unit_deg(rng.uniform(-180.0, 180.0)) * rng.uniform(r_min, r_max);
}

WorldState make_full_state(Rng& rng, int cycle, const EpisodeConfig& cfg) {
    WorldState ws;
    ws.cycle = cycle;
    ws.flavor = Flavor::kFull;
    ws.offside_count = 0;

    double u = rng.uniform01();
    Scenario scenario = u < 0.50   ? Scenario::kOpen
                        : u < 0.78 ? Scenario::kContested
                                   : Scenario::kSwarm;

    ws.kicker_unum = 1 + static_cast<int>(rng.bounded(11));

    Vec2 kicker_pos;
    if (scenario == Scenario::kSwarm) {
        double sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
        kicker_pos = {rng.uniform(20.0, 50.0), sign * rng.uniform(18.0, 32.0)};
    } else {
        kicker_pos = {rng.uniform(-30.0, 45.0), rng.uniform(-30.0, 30.0)};
    }
    kicker_pos = clamp_to_pitch(kicker_pos);

    // Kicker first so the ball can be placed inside its kickable area.
    PlayerState kicker = random_player(rng, Side::kLeft, ws.kicker_unum, kicker_pos);
    ws.ball.pos = clamp_to_pitch(
        around(rng, kicker.pos, 0.1, 0.95 * kicker.type_params.kickable_dist));
    ws.ball.vel = unit_deg(rng.uniform(-180.0, 180.0)) * rng.uniform(0.0, 0.6);

    double spread = cfg.formation_spread;
    double tm_rmin, tm_rmax;
    switch (scenario) {
        case Scenario::kOpen: tm_rmin = 4.0; tm_rmax = 4.0 + 2.0 * spread; break;
        case Scenario::kContested: tm_rmin = 3.5; tm_rmax = 3.5 + 1.5 * spread; break;
        case Scenario::kSwarm: tm_rmin = 2.5; tm_rmax = 7.0; break;
    }

    for (int unum = 1; unum <= kTeamSize; ++unum) {
        if (unum == ws.kicker_unum) {
            ws.teammates.push_back(kicker);
            continue;
        }
        Vec2 pos = around(rng, ws.ball.pos, tm_rmin, tm_rmax);
        ws.teammates.push_back(random_player(rng, Side::kLeft, unum, pos));
    }

    // Opponents: in contested and swarm play every non-kicker teammate is marked;
    // leftover opponents press the ball or spread out.
    std::vector<Vec2> opp_positions;
    if (scenario == Scenario::kOpen) {
        int pressing = 1 + static_cast<int>(rng.bounded(2));
        for (int i = 0; i < pressing; ++i)
            opp_positions.push_back(around(rng, ws.ball.pos, 2.0, 6.0));
        opp_positions.push_back({rng.uniform(47.0, 52.0), rng.uniform(-4.0, 4.0)});  // keeper
        while (opp_positions.size() < kTeamSize)
            opp_positions.push_back(around(rng, ws.ball.pos, 6.0, 6.0 + 2.4 * spread));
    } else {
        double mark_min = scenario == Scenario::kSwarm ? 0.6 : 0.7;
        double mark_max = scenario == Scenario::kSwarm ? 2.2 : 2.6;
        for (const auto& tm : ws.teammates) {
            if (tm.unum == ws.kicker_unum) continue;
            opp_positions.push_back(around(rng, tm.pos, mark_min, mark_max));
        }
        while (opp_positions.size() < kTeamSize)
            opp_positions.push_back(around(rng, ws.ball.pos, 1.2,
                                           scenario == Scenario::kSwarm ? 3.5 : 5.0));
    }
    for (int unum = 1; unum <= kTeamSize; ++unum)
        ws.opponents.push_back(
            random_player(rng, Side::kRight, unum, opp_positions[unum - 1]));

    return ws;
}

}  // namespace

std::vector<KickEvent> generate_events(const EpisodeConfig& cfg) {
    if (cfg.n_events <= 0) throw std::invalid_argument("generate_events: n_events must be > 0");
    if (cfg.pass_threshold_deg <= 0.0 || cfg.dribble_threshold_m <= 0.0)
        throw std::invalid_argument("generate_events: thresholds must be positive");

    std::vector<KickEvent> events;
    events.reserve(cfg.n_events);
    for (int i = 0; i < cfg.n_events; ++i) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(i), 0x4B69636B));
        KickEvent ev;
        ev.event_id = i;
        ev.fws = make_full_state(rng, i, cfg);
        ev.action = oracle_policy(ev.fws, cfg.oracle());
        ev.ws = apply_observation_noise(ev.fws, cfg.noise);
        events.push_back(std::move(ev));
    }
    return events;
}

}  // namespace kickcast
