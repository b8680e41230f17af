#ifndef MCB_WEIGHT_HPP
#define MCB_WEIGHT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mcb {

// Weights are exact fixed-point decimals: a graph stores one scale (number of
// fractional digits shared by all its weights) and every Weight is the scaled
// integer value. All comparisons and tightness tests are therefore exact.
using Weight = std::int64_t;

constexpr Weight kInfWeight = INT64_MAX / 4;

// A decimal literal, not yet normalized to a common scale.
struct ParsedDecimal {
    std::int64_t mantissa = 0;  // digits with the point removed
    int digits = 0;             // number of fractional digits
};

// Strict grammar: digits, optionally '.' digits. No sign, no exponent.
// Returns nullopt on malformed input or mantissa overflow.
std::optional<ParsedDecimal> parse_decimal(std::string_view s);

// value * 10^digits, throwing InvalidParam on overflow.
Weight rescale(Weight value, int digits);

Weight checked_add(Weight a, Weight b);

// Renders a scaled value back as a minimal decimal ("3", "2.5", "0.125").
std::string format_weight(Weight value, int scale_digits);

// Exact decimal rendering of a 128-bit total (used for basis weight sums).
std::string format_weight_sum(__int128 value, int scale_digits);

}  // namespace mcb

#endif
