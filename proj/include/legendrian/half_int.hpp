#ifndef LEGENDRIAN_HALF_INT_HPP
#define LEGENDRIAN_HALF_INT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace legendrian {

// Exact half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
    static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }

    // Only meaningful when is_integer().
    constexpr std::int64_t as_integer() const { return doubled_ / 2; }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(doubled_ - o.doubled_); }
    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    constexpr HalfInt &operator+=(HalfInt o) {
        doubled_ += o.doubled_;
        return *this;
    }

    constexpr auto operator<=>(const HalfInt &) const = default;

    // "-1/2", "1/2", "3", "-0.5", "2.5", "1.0"
    static HalfInt parse(std::string_view text);

    // Integers print as "3"; halves as "-1/2", "5/2".
    std::string to_string() const;

    // JSON-friendly decimal: "-0.5", "3".
    std::string to_decimal() const;

private:
    explicit constexpr HalfInt(std::int64_t doubled) : doubled_(doubled) {}

    std::int64_t doubled_ = 0;
};

inline std::ostream &operator<<(std::ostream &os, HalfInt h) { return os << h.to_string(); }

} // namespace legendrian

#endif
