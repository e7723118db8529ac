#include "legendrian/theta.hpp"

namespace legendrian {

std::array<HalfInt, 3> ThetaInvariants::twist() const {
    std::array<HalfInt, 3> tw;
    for (int i = 0; i < 3; ++i) {
        const int prev = tb[(i + 2) % 3], cur = tb[i], next = tb[(i + 1) % 3];
        tw[i] = HalfInt::from_doubled(prev + cur - next);
    }
    return tw;
}

Vec3 tb_from_twist(const std::array<HalfInt, 3> &tw) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i)
        out[i] = static_cast<int>((tw[i] + tw[(i + 1) % 3]).as_integer());
    return out;
}

std::ostream &operator<<(std::ostream &os, const ThetaInvariants &inv) {
    return os << "tb=(" << inv.tb[0] << "," << inv.tb[1] << "," << inv.tb[2] << ") rot=(" << inv.rot[0] << ","
              << inv.rot[1] << "," << inv.rot[2] << ")";
}

std::ostream &operator<<(std::ostream &os, const EmbeddingKey &key) {
    return os << key.inv << " sigma1=" << (key.sigma1 > 0 ? "+1" : "-1");
}

} // namespace legendrian
