#include "legendrian/half_int.hpp"

#include <charconv>
#include <stdexcept>

namespace legendrian {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
    return value;
}

} // namespace

HalfInt HalfInt::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    } else if (s.size() >= 3 && s.substr(0, 3) == "\xE2\x88\x92") { // unicode minus
        negative = true;
        s.remove_prefix(3);
    }
    if (s.empty())
        throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");

    std::int64_t doubled = 0;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(s.substr(0, slash), text);
        std::int64_t den = parse_int(s.substr(slash + 1), text);
        if (den == 1)
            doubled = 2 * num;
        else if (den == 2)
            doubled = num;
        else
            throw std::invalid_argument("denominator must be 1 or 2: '" + std::string(text) + "'");
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::int64_t whole = dot == 0 ? 0 : parse_int(s.substr(0, dot), text);
        std::string_view frac = s.substr(dot + 1);
        while (!frac.empty() && frac.back() == '0')
            frac.remove_suffix(1);
        if (frac.empty())
            doubled = 2 * whole;
        else if (frac == "5")
            doubled = 2 * whole + 1;
        else
            throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    } else {
        doubled = 2 * parse_int(s, text);
    }
    return HalfInt(negative ? -doubled : doubled);
}

std::string HalfInt::to_string() const {
    if (is_integer())
        return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
}

std::string HalfInt::to_decimal() const {
    if (is_integer())
        return std::to_string(doubled_ / 2);
    std::int64_t mag = doubled_ < 0 ? -doubled_ : doubled_;
    return std::string(doubled_ < 0 ? "-" : "") + std::to_string(mag / 2) + ".5";
}

} // namespace legendrian
