#ifndef KICKCAST_ORDERING_HPP
#define KICKCAST_ORDERING_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kickcast/world_state.hpp"

namespace kickcast {

/// Player-permutation strategies used to lay out per-player feature blocks.
/// The _FK variants place the kicker first, then apply the base method.
enum class OrderingMethod {
    kX,
    kXFk,
    kUnum,
    kUnumFk,
    kAfc,     // angle from player position to field center
    kAfcFk,
    kAk,      // angle from player position to the kicker
    kAkFk,
    kAkg,     // angle from player position to goal center
    kAkgFk,
};

constexpr std::array<OrderingMethod, 10> all_ordering_methods() {
    return {OrderingMethod::kX,   OrderingMethod::kXFk,  OrderingMethod::kUnum,
            OrderingMethod::kUnumFk, OrderingMethod::kAfc, OrderingMethod::kAfcFk,
            OrderingMethod::kAk,  OrderingMethod::kAkFk, OrderingMethod::kAkg,
            OrderingMethod::kAkgFk};
}

/// Lowercase wire names: x, x_fk, unum, unum_fk, afc, afc_fk, ak, ak_fk, akg, akg_fk.
std::string to_string(OrderingMethod m);
/// Throws std::invalid_argument listing the valid names on an unknown string.
OrderingMethod ordering_method_from_string(const std::string& name);

bool is_kicker_first(OrderingMethod m);
OrderingMethod base_method(OrderingMethod m);

/// A canonical permutation of one team's uniform numbers.
struct Ordering {
    std::vector<int> permutation;

    /// Position of a unum within the permutation, or -1 when absent.
    int index_of(int unum) const {
        for (std::size_t i = 0; i < permutation.size(); ++i)
            if (permutation[i] == unum) return static_cast<int>(i);
        return -1;
    }
};

/// Sorts players by the method's key, ascending, ties broken by ascending unum.
/// Angle keys use the direction of (reference point - player position).
/// kicker_unum identifies the kicker within `players`; pass std::nullopt for a
/// team that does not contain the kicker (opponents), in which case _FK variants
/// degrade to their base method. kicker_pos is the reference for the AK key.
/// Throws std::invalid_argument on duplicate unums or when a _FK variant names a
/// kicker that is not in the list.
Ordering order_players(const std::vector<PlayerState>& players, OrderingMethod method,
                       std::optional<int> kicker_unum, const Vec2& kicker_pos);

}  // namespace kickcast

#endif  // KICKCAST_ORDERING_HPP
