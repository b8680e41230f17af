#include "mcb/weight.hpp"

#include "mcb/errors.hpp"

namespace mcb {

std::optional<ParsedDecimal> parse_decimal(std::string_view s) {
    if (s.empty()) return std::nullopt;
    ParsedDecimal out;
    bool seen_dot = false;
    bool any_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') return std::nullopt;
        any_digit = true;
        if (out.mantissa > (INT64_MAX - 9) / 10) return std::nullopt;
        out.mantissa = out.mantissa * 10 + (c - '0');
        if (seen_dot) ++out.digits;
    }
    if (!any_digit) return std::nullopt;
    if (seen_dot && out.digits == 0) return std::nullopt;  // "1."
    return out;
}

Weight rescale(Weight value, int digits) {
    for (int i = 0; i < digits; ++i) {
        if (value > INT64_MAX / 10) throw InvalidParam("weight overflow while rescaling");
        value *= 10;
    }
    return value;
}

Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) throw InvalidParam("weight overflow in addition");
    return r;
}

std::string format_weight(Weight value, int scale_digits) {
    return format_weight_sum(static_cast<__int128>(value), scale_digits);
}

std::string format_weight_sum(__int128 value, int scale_digits) {
    bool neg = value < 0;
    unsigned __int128 v = neg ? static_cast<unsigned __int128>(-value) : static_cast<unsigned __int128>(value);
    std::string digits;
    do {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    } while (v > 0);
    while (static_cast<int>(digits.size()) <= scale_digits) digits.push_back('0');
    std::string out;
    if (neg) out.push_back('-');
    for (int i = static_cast<int>(digits.size()) - 1; i >= scale_digits; --i) out.push_back(digits[i]);
    if (scale_digits > 0) {
        int last = 0;
        while (last < scale_digits && digits[last] == '0') ++last;  // trim trailing zeros
        if (last < scale_digits) {
            out.push_back('.');
            for (int i = scale_digits - 1; i >= last; --i) out.push_back(digits[i]);
        }
    }
    return out;
}

}  // namespace mcb
