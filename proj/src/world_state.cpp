#include "kickcast/world_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kickcast/rng.hpp"

namespace kickcast {

const PlayerState* WorldState::teammate(int unum) const {
    for (const auto& p : teammates)
        if (p.unum == unum) return &p;
    return nullptr;
}

const PlayerState* WorldState::opponent(int unum) const {
    for (const auto& p : opponents)
        if (p.unum == unum) return &p;
    return nullptr;
}

const PlayerState& WorldState::kicker() const {
    const PlayerState* k = teammate(kicker_unum);
    if (!k) throw std::invalid_argument("kicker unum " + std::to_string(kicker_unum) +
                                        " is not on the team");
    return *k;
}

namespace {

Vec2 clamp_to_player_bounds(Vec2 p) {
    const double bx = kFieldHalfLength + kFieldMargin;
    const double by = kFieldHalfWidth + kFieldMargin;
    return {std::clamp(p.x, -bx, bx), std::clamp(p.y, -by, by)};
}

Vec2 clamp_speed(Vec2 v, double max_speed) {
    double s = v.length();
    if (s > max_speed && s > 0.0) return v * (max_speed / s);
    return v;
}

// Substream per observed object so the draw sequence is independent of storage order.
// side_code: 0 ball, 1 teammate, 2 opponent.
Rng object_stream(const NoiseConfig& cfg, int cycle, int side_code, int unum) {
    return Rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(cycle),
                        static_cast<std::uint64_t>(side_code),
                        static_cast<std::uint64_t>(unum)));
}

// Draw order is fixed: pos.x, pos.y, vel.x, vel.y, body, face, unseen-uniform.
void perturb_player(PlayerState& p, Rng& rng, const NoiseConfig& cfg, double sigma_scale,
                    double dist_from_kicker) {
    double pos_sigma = (cfg.pos_sigma_base + cfg.pos_sigma_per_meter * dist_from_kicker) *
                       sigma_scale;
    p.pos.x += rng.gaussian(0.0, pos_sigma);
    p.pos.y += rng.gaussian(0.0, pos_sigma);
    p.pos = clamp_to_player_bounds(p.pos);
    p.vel.x += rng.gaussian(0.0, cfg.vel_sigma * sigma_scale);
    p.vel.y += rng.gaussian(0.0, cfg.vel_sigma * sigma_scale);
    p.body = normalize_deg(p.body + rng.gaussian(0.0, cfg.angle_sigma * sigma_scale));
    p.face = normalize_deg(p.face + rng.gaussian(0.0, cfg.angle_sigma * sigma_scale));
}

const PlayerState* find_in(const std::vector<PlayerState>& players, int unum) {
    for (const auto& p : players)
        if (p.unum == unum) return &p;
    return nullptr;
}

}  // namespace

WorldState apply_observation_noise(const WorldState& fws, const NoiseConfig& cfg,
                                   const WorldState* prev) {
    if (fws.flavor != Flavor::kFull)
        throw std::invalid_argument("apply_observation_noise expects a FULL state");
    for (const auto* team : {&fws.teammates, &fws.opponents})
        for (const auto& p : *team)
            if (p.pos_count != 0 || p.vel_count != 0 || p.stamina_count != 0)
                throw std::invalid_argument(
                    "malformed FULL state: player " + std::to_string(p.unum) +
                    " has nonzero observation counts");

    const Vec2 kicker_pos = fws.kicker().pos;
    WorldState out = fws;
    out.flavor = Flavor::kNoisy;

    {
        Rng rng = object_stream(cfg, fws.cycle, 0, 0);
        double pos_sigma =
            (cfg.pos_sigma_base + cfg.pos_sigma_per_meter * fws.ball.pos.dist(kicker_pos)) * 0.5;
        out.ball.pos.x += rng.gaussian(0.0, pos_sigma);
        out.ball.pos.y += rng.gaussian(0.0, pos_sigma);
        out.ball.vel.x += rng.gaussian(0.0, cfg.vel_sigma * 0.5);
        out.ball.vel.y += rng.gaussian(0.0, cfg.vel_sigma * 0.5);
        out.ball.vel = clamp_speed(out.ball.vel, kBallSpeedMax);
    }

    auto process_team = [&](std::vector<PlayerState>& players, int side_code,
                            const std::vector<PlayerState>* prev_players) {
        for (auto& p : players) {
            Rng rng = object_stream(cfg, fws.cycle, side_code, p.unum);
            bool is_kicker = (side_code == 1 && p.unum == fws.kicker_unum);
            double dist = p.pos.dist(kicker_pos);
            perturb_player(p, rng, cfg, is_kicker ? 0.5 : 1.0, dist);
            if (is_kicker) continue;  // self-localization: the kicker always sees itself
            if (rng.bernoulli(cfg.p_unseen)) {
                const PlayerState* old =
                    prev_players ? find_in(*prev_players, p.unum) : nullptr;
                if (old) {
                    p.pos = old->pos;
                    p.vel = old->vel;
                    p.body = old->body;
                    p.face = old->face;
                    p.stamina = old->stamina;
                    p.pos_count = old->pos_count + 1;
                    p.vel_count = old->vel_count + 1;
                    p.stamina_count = old->stamina_count + 1;
                } else {
                    p.pos_count += 1;
                    p.vel_count += 1;
                    p.stamina_count += 1;
                }
            }
        }
    };
    process_team(out.teammates, 1, prev ? &prev->teammates : nullptr);
    process_team(out.opponents, 2, prev ? &prev->opponents : nullptr);

    // The offside-line accuracy count resets whenever every opponent was just seen.
    bool all_opponents_fresh = true;
    for (const auto& p : out.opponents)
        if (p.pos_count != 0) all_opponents_fresh = false;
    out.offside_count = all_opponents_fresh ? 0 : (prev ? prev->offside_count + 1 : 1);

    return out;
}

double offside_line_x(const WorldState& ws) {
    double first = -kFieldHalfLength, second = -kFieldHalfLength;
    for (const auto& p : ws.opponents) {
        if (p.pos.x > first) {
            second = first;
            first = p.pos.x;
        } else if (p.pos.x > second) {
            second = p.pos.x;
        }
    }
    return std::max(second, ws.ball.pos.x);
}

bool is_offside(const WorldState& ws, int teammate_unum) {
    const PlayerState* p = ws.teammate(teammate_unum);
    if (!p) throw std::invalid_argument("is_offside: unknown teammate unum " +
                                        std::to_string(teammate_unum));
    return p->pos.x > offside_line_x(ws) && p->pos.x > 0.0;
}

bool kickable(const WorldState& ws, int teammate_unum) {
    const PlayerState* p = ws.teammate(teammate_unum);
    if (!p) throw std::invalid_argument("kickable: unknown teammate unum " +
                                        std::to_string(teammate_unum));
    return ws.ball.pos.dist(p->pos) <= p->type_params.kickable_dist;
}

}  // namespace kickcast
