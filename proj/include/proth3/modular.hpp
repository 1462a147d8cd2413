#pragma once

#include <cstdint>

#include "proth3/error.hpp"
#include "proth3/natural.hpp"

// Modular kernels over Natural. Every function here is pure.

namespace proth3 {

namespace detail {

inline void require_modulus(const Natural& modulus) {
    if (modulus < 2) {
        throw error(errc::invalid_modulus, "modulus must be >= 2, got " + modulus.str());
    }
}

inline Natural reduce(const Natural& x, const Natural& modulus) {
    Natural r = x % modulus;
    if (r.sign() < 0) {
        r += modulus;
    }
    return r;
}

}  // namespace detail

/// base^exponent mod modulus by left-to-right square-and-multiply.
inline Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
    detail::require_modulus(modulus);
    if (exponent.sign() < 0) {
        throw error(errc::invalid_argument, "negative exponent");
    }
    const Natural b = detail::reduce(base, modulus);
    Natural result = 1;
    for (std::size_t i = bit_length(exponent); i-- > 0;) {
        result = (result * result) % modulus;
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i))) {
            result = (result * b) % modulus;
        }
    }
    return result % modulus;
}

/// Jacobi symbol (a/m) for odd m >= 3, via the binary reciprocity reduction.
/// No primality assumption on m.
inline int jacobi(const Natural& a, const Natural& m) {
    if (m < 3 || !boost::multiprecision::bit_test(m, 0)) {
        throw error(errc::invalid_argument, "jacobi modulus must be odd and >= 3, got " + m.str());
    }
    Natural x = detail::reduce(a, m);
    Natural y = m;
    int sign = 1;
    while (!x.is_zero()) {
        const unsigned twos = boost::multiprecision::lsb(x);
        x >>= twos;
        // (2/y) = -1 iff y = 3, 5 mod 8
        if (twos & 1U) {
            const unsigned y8 = static_cast<unsigned>(y & 7U);
            if (y8 == 3 || y8 == 5) {
                sign = -sign;
            }
        }
        if ((x & 3U) == 3 && (y & 3U) == 3) {
            sign = -sign;
        }
        std::swap(x, y);
        x %= y;
    }
    return y == 1 ? sign : 0;
}

/// 3^(2^z) mod modulus by z successive squarings.
inline Natural pow3_tower(std::uint64_t z, const Natural& modulus) {
    detail::require_modulus(modulus);
    Natural r = Natural(3) % modulus;
    for (std::uint64_t i = 0; i < z; ++i) {
        r = (r * r) % modulus;
        if (r <= 1) {
            break;  // fixed point: 0 and 1 square to themselves
        }
    }
    return r;
}

/// Exact multiplicative order of 3 modulo f, given that it divides
/// order_bound_p * 2^order_bound_n. order_bound_p is expected to be 1 or a
/// prime. Throws order_bound_violated when 3^(p*2^n) != 1 mod f.
inline Natural mult_order_3(const Natural& f, const Natural& order_bound_p, std::uint32_t order_bound_n) {
    detail::require_modulus(f);
    if (f % 3 == 0) {
        throw error(errc::invalid_argument, "3 divides the modulus " + f.str());
    }
    if (order_bound_p < 1) {
        throw error(errc::invalid_argument, "order bound p must be >= 1");
    }
    Natural exponent = order_bound_p << order_bound_n;
    if (mod_pow(3, exponent, f) != 1) {
        throw error(errc::order_bound_violated,
                    "3^(" + order_bound_p.str() + "*2^" + std::to_string(order_bound_n) +
                        ") != 1 mod " + f.str());
    }
    if (order_bound_p > 1 && mod_pow(3, exponent / order_bound_p, f) == 1) {
        exponent /= order_bound_p;
    }
    while (!boost::multiprecision::bit_test(exponent, 0) && mod_pow(3, exponent >> 1, f) == 1) {
        exponent >>= 1;
    }
    return exponent;
}

}  // namespace proth3
