#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "proth3/error.hpp"
#include "proth3/factorization.hpp"
#include "proth3/natural.hpp"

// Brute-force ground truth. Everything here runs on native 64-bit words
// (128-bit intermediates) and shares no code with the Natural kernels in
// modular.hpp, so it can be used to check them.

namespace proth3::oracle {

struct OracleRange {
    std::uint64_t exact_bound;
};

/// The deterministic Miller-Rabin battery below (first 12 prime bases) is
/// exact for every n < 3.3e24, so every 64-bit input is covered.
inline constexpr OracleRange range{std::numeric_limits<std::uint64_t>::max()};

inline constexpr std::uint64_t default_factor_budget = 100'000'000;

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr bool strong_probable_prime(u64 n, u64 a) {
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline constexpr std::array<u64, 12> small_primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : small_primes) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < 41 * 41) return true;
    for (u64 a : small_primes) {
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

inline void require_in_range(const Natural& m) {
    if (m.sign() < 0 || m > range.exact_bound) {
        throw error(errc::oracle_refusal, m.str() + " exceeds the oracle's exact bound 2^64-1");
    }
}

struct TrialState {
    Factorization out;
    std::uint64_t tried = 0;
};

inline void push_factor(Factorization& f, const Natural& q, unsigned multiplicity) {
    if (multiplicity == 0) return;
    if (!f.prime_factors.empty() && f.prime_factors.back().prime == q) {
        f.prime_factors.back().multiplicity += multiplicity;
    } else {
        f.prime_factors.push_back({q, multiplicity});
    }
}

// Trial division on a 64-bit cofactor; d walks 2, 3, then 6k-1, 6k+1.
inline void trial_u64(u64 cof, u64 d, u64 budget, TrialState& st) {
    auto step_of = [](u64 x) -> u64 { return x < 5 ? (x == 2 ? 1 : 2) : (x % 6 == 5 ? 2 : 4); };
    while (static_cast<u128>(d) * d <= cof && st.tried < budget) {
        unsigned mult = 0;
        while (cof % d == 0) {
            cof /= d;
            ++mult;
        }
        push_factor(st.out, d, mult);
        ++st.tried;
        d += step_of(d);
    }
    if (cof == 1) {
        st.out.cofactor = 1;
        st.out.complete = true;
    } else if (static_cast<u128>(d) * d > cof || is_prime_u64(cof)) {
        push_factor(st.out, cof, 1);
        st.out.cofactor = 1;
        st.out.complete = true;
    } else {
        st.out.cofactor = cof;
        st.out.complete = false;
    }
}

}  // namespace detail

inline bool is_prime_exact(std::uint64_t m) { return detail::is_prime_u64(m); }

/// Exact primality for m <= range.exact_bound; refuses anything larger.
inline bool is_prime_exact(const Natural& m) {
    detail::require_in_range(m);
    return detail::is_prime_u64(m.convert_to<std::uint64_t>());
}

/// Trial division by 2, 3, then 6k +- 1. `budget` caps the number of trial
/// divisors tried; the result is complete when the remaining cofactor is 1 or
/// provably prime.
inline Factorization factorize(const Natural& m, std::uint64_t budget = default_factor_budget) {
    if (m < 2) {
        throw error(errc::invalid_argument, "factorize needs m >= 2, got " + m.str());
    }
    detail::TrialState st;
    st.out.target = m;
    Natural cof = m;
    std::uint64_t d = 2;
    // Wide phase: only while the cofactor exceeds 64 bits.
    while (!fits_u64(cof) && st.tried < budget) {
        unsigned mult = 0;
        while (cof % d == 0) {
            cof /= d;
            ++mult;
        }
        detail::push_factor(st.out, d, mult);
        ++st.tried;
        d += d < 5 ? (d == 2 ? 1 : 2) : (d % 6 == 5 ? 2 : 4);
    }
    if (fits_u64(cof)) {
        detail::trial_u64(cof.convert_to<std::uint64_t>(), d, budget, st);
    } else {
        st.out.cofactor = cof;
        st.out.complete = false;
    }
    return st.out;
}

/// Order of `a` modulo m (gcd(a, m) = 1), from the group order phi(m).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) {
        throw error(errc::invalid_modulus, "order needs m >= 2");
    }
    const Factorization fm = factorize(m);
    if (!fm.complete) {
        throw error(errc::oracle_refusal, "cannot factor " + std::to_string(m));
    }
    std::uint64_t phi = 1;
    std::vector<std::uint64_t> phi_primes;
    for (const auto& pp : fm.prime_factors) {
        const auto q = pp.prime.convert_to<std::uint64_t>();
        for (unsigned i = 1; i < pp.multiplicity; ++i) phi *= q;
        phi *= q - 1;
        if (pp.multiplicity > 1) phi_primes.push_back(q);
        if (q > 2) {
            for (const auto& r : factorize(q - 1).prime_factors) {
                phi_primes.push_back(r.prime.convert_to<std::uint64_t>());
            }
        }
    }
    if (detail::powmod(a, phi, m) != 1) {
        throw error(errc::invalid_argument, "base not coprime to modulus");
    }
    std::uint64_t order = phi;
    for (std::uint64_t r : phi_primes) {
        while (order % r == 0 && detail::powmod(a, order / r, m) == 1) {
            order /= r;
        }
    }
    return order;
}

/// Primover base 3: every divisor d > 1 of m has the same order of 3. Checked
/// over all prime-power divisors, which determine the order of every divisor.
inline bool is_primover_3(const Natural& m) {
    detail::require_in_range(m);
    if (m < 2) {
        throw error(errc::invalid_argument, "primover needs m >= 2");
    }
    if (m % 3 == 0) {
        throw error(errc::invalid_argument, "3 divides " + m.str());
    }
    const Factorization fm = factorize(m);
    if (!fm.complete) {
        throw error(errc::oracle_refusal, "incomplete factorization of " + m.str());
    }
    std::uint64_t shared = 0;
    for (const auto& pp : fm.prime_factors) {
        const auto q = pp.prime.convert_to<std::uint64_t>();
        std::uint64_t qj = 1;
        for (unsigned j = 1; j <= pp.multiplicity; ++j) {
            qj *= q;
            const std::uint64_t ord = multiplicative_order(3, qj);
            if (shared == 0) {
                shared = ord;
            } else if (ord != shared) {
                return false;
            }
        }
    }
    return true;
}

/// Composite and primover. Multiples of 3 and m < 4 are screened to false.
inline bool is_overpseudoprime_3(const Natural& m) {
    detail::require_in_range(m);
    if (m < 4 || m % 3 == 0) return false;
    return !is_prime_exact(m) && is_primover_3(m);
}

}  // namespace proth3::oracle
