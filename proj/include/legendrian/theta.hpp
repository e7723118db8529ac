#ifndef LEGENDRIAN_THETA_HPP
#define LEGENDRIAN_THETA_HPP

#include "legendrian/half_int.hpp"

#include <array>
#include <compare>
#include <ostream>

namespace legendrian {

using Vec3 = std::array<int, 3>;

// Classical invariants of a Theta-graph embedding over the three standard
// oriented cycles gamma_i = e_i u e_{i+1}, with e_i traversed v1 -> v2.
struct ThetaInvariants {
    Vec3 tb{};
    Vec3 rot{};

    int total_rot() const { return rot[0] + rot[1] + rot[2]; }

    // tw(e_i) = (tb(gamma_{i-1}) + tb(gamma_i) - tb(gamma_{i+1})) / 2
    std::array<HalfInt, 3> twist() const;

    auto operator<=>(const ThetaInvariants &) const = default;
};

// tb(gamma_i) = tw(e_i) + tw(e_{i+1}); inverse of ThetaInvariants::twist.
Vec3 tb_from_twist(const std::array<HalfInt, 3> &tw);

// Complete invariant of a topologically trivial Theta embedding: (tb, rot)
// plus the coorientation sign at v1. When Rot = +-1 the sign is forced to Rot.
struct EmbeddingKey {
    ThetaInvariants inv;
    int sigma1 = 1;

    int sigma2() const { return sigma1 - 2 * inv.total_rot(); }

    auto operator<=>(const EmbeddingKey &) const = default;
};

std::ostream &operator<<(std::ostream &os, const ThetaInvariants &inv);
std::ostream &operator<<(std::ostream &os, const EmbeddingKey &key);

} // namespace legendrian

#endif
