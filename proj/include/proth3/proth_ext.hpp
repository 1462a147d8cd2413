#pragma once

#include <cstdint>

#include "proth3/error.hpp"
#include "proth3/fermat_factors.hpp"
#include "proth3/modular.hpp"
#include "proth3/natural.hpp"
#include "proth3/proth_candidate.hpp"

// Base-3 Euler test for R = p * 2^n + 1 and the full decision procedure.
//
// For p > 3 prime and 3 not dividing R, 3^((R-1)/2) = -1 mod R holds exactly
// when R is prime or R is a primover divisor of GF(3, n-1). classify() closes
// the second case with the cheapest available argument.

namespace proth3 {

inline constexpr std::uint64_t default_sieve_budget = 1'000'000;

namespace detail {

inline void require_euler_domain(const ProthCandidate& c) {
    if (c.n() < 2) {
        throw error(errc::out_of_scope, "n = 1 is handled by the Sophie-Germain path, not the Euler test");
    }
    if (c.R() % 3 == 0) {
        throw error(errc::divisible_by_three, "3 divides R = " + c.R().str());
    }
}

inline Natural euler_residue(const ProthCandidate& c) {
    return mod_pow(3, (c.R() - 1) >> 1, c.R());
}

// p > (3^(2^n) + 1) / 2. Since 3^(2^n) / 2 >= 2^(1.58 * 2^n - 1), any p with
// bitlen(p) < floor(1.58 * 2^n) falls short without building the power.
inline bool exceeds_magnitude_bound(const Natural& p, std::uint32_t n) {
    if (n >= 56) return false;
    const std::uint64_t e = std::uint64_t{1} << n;
    if (e > 64) {
        const std::uint64_t threshold = (e / 100) * 158 + (e % 100) * 158 / 100;
        if (bit_length(p) < threshold) return false;
    }
    const Natural bound = (boost::multiprecision::pow(Natural(3), static_cast<unsigned>(e)) + 1) / 2;
    return p > bound;
}

}  // namespace detail

/// 3^((R-1)/2) == -1 mod R. Needs n >= 2 and 3 not dividing R.
inline bool euler_test(const ProthCandidate& c) {
    detail::require_euler_domain(c);
    return detail::euler_residue(c) == c.R() - 1;
}

/// R | GF(3, n-1), via 3^(2^(n-1)) == -1 mod R.
inline bool divides_gf3(const ProthCandidate& c) {
    detail::require_euler_domain(c);
    return pow3_tower(c.n() - 1, c.R()) == c.R() - 1;
}

/// Classical Proth test for R = 3 * 2^n + 1 (n >= 2, so 2^n > 3). Uses the
/// smallest base a >= 2 with (a/R) = -1. Base 3 is useless here because
/// R = 1 mod 3 makes (3/R) = +1.
inline Verdict p3_proth(std::uint32_t n) {
    if (n < 2) {
        throw error(errc::out_of_scope, "p = 3 Proth path needs n >= 2");
    }
    const Natural R = (Natural(3) << n) + 1;
    const Natural rm1 = R - 1;
    // A perfect square R has no base with symbol -1; the scan then stops at
    // its smallest prime factor, where the symbol first vanishes.
    for (Natural a = 2; a < R; ++a) {
        const int j = jacobi(a, R);
        if (j == 0) {
            return Verdict(Outcome::composite, Evidence::sieve_factor_found, false,
                           boost::multiprecision::gcd(a, R));
        }
        if (j == -1) {
            if (mod_pow(a, rm1 >> 1, R) == rm1) {
                return Verdict(Outcome::prime, Evidence::proth_bound, true, a);
            }
            return Verdict(Outcome::composite, Evidence::euler_witness, false, a);
        }
    }
    throw error(errc::contract_violation, "no Proth base found for R = " + R.str());
}

/// Steps, in order: 3 | R; Euler test; Proth bound 2^n > p; magnitude bound
/// p > (3^(2^n)+1)/2; R not dividing GF(3, n-1); sieve along k * 2^n + 1.
inline Verdict classify(const ProthCandidate& c, std::uint64_t sieve_budget = default_sieve_budget) {
    if (c.n() < 2) {
        throw error(errc::out_of_scope, "classify needs n >= 2");
    }
    if (c.p() == 3) {
        return p3_proth(c.n());
    }
    const Natural& R = c.R();
    if (R % 3 == 0) {
        return Verdict(Outcome::composite, Evidence::divisible_by_three, false, Natural(3));
    }
    Natural residue = detail::euler_residue(c);
    if (residue != R - 1) {
        return Verdict(Outcome::composite, Evidence::euler_witness, false, std::move(residue));
    }
    if (pow2(c.n()) > c.p()) {
        return Verdict(Outcome::prime, Evidence::proth_bound, true);
    }
    if (detail::exceeds_magnitude_bound(c.p(), c.n())) {
        return Verdict(Outcome::prime, Evidence::magnitude_bound, true);
    }
    if (!divides_gf3(c)) {
        return Verdict(Outcome::prime, Evidence::non_divisor_of_gf, true);
    }
    if (c.n() == 2) {
        return Verdict(Outcome::primover, Evidence::gf_divisor_unresolved, true);
    }
    const SieveOutcome s = sieve_R(c, sieve_budget);
    switch (s.kind) {
        case SieveOutcome::Kind::factor_found:
            return Verdict(Outcome::composite, Evidence::sieve_factor_found, true, s.factor);
        case SieveOutcome::Kind::exhausted:
            return Verdict(Outcome::prime, Evidence::sieve_exhausted, true);
        case SieveOutcome::Kind::budget_spent:
            break;
    }
    return Verdict(Outcome::primover, Evidence::gf_divisor_unresolved, true);
}

}  // namespace proth3
