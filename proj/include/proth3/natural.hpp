#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "proth3/error.hpp"

namespace proth3 {

/// Exact non-negative integer of unbounded width.
using Natural = boost::multiprecision::cpp_int;

inline std::size_t bit_length(const Natural& x) {
    return x.is_zero() ? 0 : boost::multiprecision::msb(x) + 1;
}

inline bool fits_u64(const Natural& x) {
    return x.sign() >= 0 && x <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const Natural& x) {
    if (!fits_u64(x)) {
        throw error(errc::out_of_range, "value does not fit in 64 bits");
    }
    return x.convert_to<std::uint64_t>();
}

inline Natural pow2(std::uint64_t e) {
    Natural r = 1;
    r <<= e;
    return r;
}

inline Natural isqrt(const Natural& x) {
    return boost::multiprecision::sqrt(x);
}

inline std::string to_decimal(const Natural& x) { return x.str(); }

// Strict decimal parse: digits only, no sign, no whitespace.
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) {
        throw error(errc::invalid_argument, "empty decimal string");
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw error(errc::invalid_argument, "not a decimal natural: '" + std::string(text) + "'");
        }
    }
    return Natural(std::string(text));
}

}  // namespace proth3
