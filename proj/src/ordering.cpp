#include "kickcast/ordering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace kickcast {

namespace {

const char* kMethodNames[] = {"x",   "x_fk",  "unum", "unum_fk", "afc",
                              "afc_fk", "ak", "ak_fk", "akg",  "akg_fk"};

}  // namespace

std::string to_string(OrderingMethod m) {
    return kMethodNames[static_cast<int>(m)];
}

OrderingMethod ordering_method_from_string(const std::string& name) {
    for (OrderingMethod m : all_ordering_methods())
        if (name == to_string(m)) return m;
    std::string valid;
    for (OrderingMethod m : all_ordering_methods()) {
        if (!valid.empty()) valid += ", ";
        valid += to_string(m);
    }
    throw std::invalid_argument("unknown ordering method '" + name + "' (valid: " + valid +
                                ")");
}

bool is_kicker_first(OrderingMethod m) {
    switch (m) {
        case OrderingMethod::kXFk:
        case OrderingMethod::kUnumFk:
        case OrderingMethod::kAfcFk:
        case OrderingMethod::kAkFk:
        case OrderingMethod::kAkgFk:
            return true;
        default:
            return false;
    }
}

OrderingMethod base_method(OrderingMethod m) {
    switch (m) {
        case OrderingMethod::kXFk: return OrderingMethod::kX;
        case OrderingMethod::kUnumFk: return OrderingMethod::kUnum;
        case OrderingMethod::kAfcFk: return OrderingMethod::kAfc;
        case OrderingMethod::kAkFk: return OrderingMethod::kAk;
        case OrderingMethod::kAkgFk: return OrderingMethod::kAkg;
        default: return m;
    }
}

namespace {

double sort_key(const PlayerState& p, OrderingMethod base, const Vec2& kicker_pos) {
    switch (base) {
        case OrderingMethod::kX:
            return p.pos.x;
        case OrderingMethod::kUnum:
            return static_cast<double>(p.unum);
        case OrderingMethod::kAfc:
            return angle_deg(field_center() - p.pos);
        case OrderingMethod::kAk:
            return angle_deg(kicker_pos - p.pos);
        case OrderingMethod::kAkg:
            return angle_deg(goal_center() - p.pos);
        default:
            return 0.0;  // unreachable: base methods only
    }
}

}  // namespace

Ordering order_players(const std::vector<PlayerState>& players, OrderingMethod method,
                       std::optional<int> kicker_unum, const Vec2& kicker_pos) {
    if (players.empty()) throw std::invalid_argument("order_players: empty player list");
    std::unordered_set<int> seen;
    for (const auto& p : players)
        if (!seen.insert(p.unum).second)
            throw std::invalid_argument("order_players: duplicate unum " +
                                        std::to_string(p.unum));

    bool kicker_first = is_kicker_first(method) && kicker_unum.has_value();
    if (is_kicker_first(method) && kicker_unum.has_value() &&
        !seen.count(*kicker_unum))
        throw std::invalid_argument("order_players: kicker unum " +
                                    std::to_string(*kicker_unum) + " not in player list");

    OrderingMethod base = base_method(method);
    std::vector<const PlayerState*> sorted;
    sorted.reserve(players.size());
    for (const auto& p : players) sorted.push_back(&p);

    std::sort(sorted.begin(), sorted.end(),
              [&](const PlayerState* a, const PlayerState* b) {
                  double ka = sort_key(*a, base, kicker_pos);
                  double kb = sort_key(*b, base, kicker_pos);
                  if (ka != kb) return ka < kb;
                  return a->unum < b->unum;
              });

    Ordering out;
    out.permutation.reserve(players.size());
    if (kicker_first) out.permutation.push_back(*kicker_unum);
    for (const auto* p : sorted)
        if (!kicker_first || p->unum != *kicker_unum) out.permutation.push_back(p->unum);
    return out;
}

}  // namespace kickcast
