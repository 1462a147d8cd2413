#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proth3/modular.hpp"
#include "proth3/natural.hpp"
#include "proth3/oracle.hpp"
#include "proth3/parallel.hpp"
#include "proth3/proth_candidate.hpp"
#include "proth3/proth_ext.hpp"
#include "proth3/search.hpp"

// Replays the base-3 Euler equivalence, the residue laws, classifier
// soundness and the divisor-order law against the oracle.

namespace proth3 {

struct CompositePass {
    std::uint64_t p;
    std::uint32_t n;
    Natural R;
};

struct VerifySummary {
    std::uint64_t candidates = 0;
    std::uint64_t skipped = 0;  // R at or above r_limit
    std::uint64_t primes = 0;
    std::uint64_t composites = 0;
    std::uint64_t primover_verdicts = 0;
    std::vector<CompositePass> composite_euler_passes;
    std::vector<std::string> discrepancies;
};

inline const Natural& default_verify_limit() {
    static const Natural limit = pow2(40);
    return limit;
}

namespace detail {

inline void verify_candidate(std::uint64_t p, std::uint32_t n, VerifySummary& s) {
    const auto c = ProthCandidate::make(p, n);
    const Natural& R = c.R();
    const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " R=" + R.str();
    auto flag = [&](const std::string& what) { s.discrepancies.push_back(tag + ": " + what); };

    const bool oracle_prime = oracle::is_prime_exact(R);
    ++(oracle_prime ? s.primes : s.composites);
    const Verdict v = classify(c);

    if (v.outcome() == Outcome::prime && !oracle_prime) flag("classified prime, oracle composite");
    if (v.outcome() == Outcome::composite && oracle_prime) flag("classified composite, oracle prime");
    if (p == 3) {
        if (v.outcome() == Outcome::primover) flag("p = 3 route returned primover");
        return;
    }

    if (R % 3 == 0) {
        if (v.evidence() != Evidence::divisible_by_three) flag("3 | R not screened first");
        return;
    }
    if (R % 3 != 2) flag("R not 2 mod 3");
    if (jacobi(3, R) != -1) flag("jacobi(3, R) != -1");

    const bool passes = euler_test(c);
    const bool gf = divides_gf3(c);
    const bool rhs = oracle_prime || (gf && oracle::is_primover_3(R));
    if (passes != rhs) flag(passes ? "Euler pass without prime/primover-divisor" : "Euler fail on prime/primover-divisor");

    if (v.outcome() == Outcome::primover) {
        ++s.primover_verdicts;
        if (!gf || !passes) flag("primover verdict without Euler pass and GF divisibility");
    }

    if (passes && !oracle_prime) {
        s.composite_euler_passes.push_back({p, n, R});
        const Natural order = pow2(n);
        for (const auto& pp : oracle::factorize(R).prime_factors) {
            if ((pp.prime - 1) % order != 0) flag("factor " + pp.prime.str() + " not 1 mod 2^n");
            if (mult_order_3(pp.prime, p, n) != order) flag("factor " + pp.prime.str() + " order of 3 != 2^n");
        }
    }
}

}  // namespace detail

/// All odd primes p <= p_max and 2 <= n <= n_max with R below r_limit.
inline VerifySummary run_verify(std::uint64_t p_max, std::uint32_t n_max, unsigned workers = 1,
                                const Natural& r_limit = default_verify_limit()) {
    const std::vector<std::uint64_t> primes = odd_primes_in(3, p_max);
    auto per_p = detail::parallel_map(primes.size(), workers, [&](std::size_t i) {
        VerifySummary s;
        for (std::uint32_t n = 2; n <= n_max; ++n) {
            if ((Natural(primes[i]) << n) + 1 >= r_limit) {
                ++s.skipped;
                continue;
            }
            ++s.candidates;
            detail::verify_candidate(primes[i], n, s);
        }
        return s;
    });
    VerifySummary total;
    for (auto& s : per_p) {
        total.candidates += s.candidates;
        total.skipped += s.skipped;
        total.primes += s.primes;
        total.composites += s.composites;
        total.primover_verdicts += s.primover_verdicts;
        for (auto& c : s.composite_euler_passes) total.composite_euler_passes.push_back(std::move(c));
        for (auto& d : s.discrepancies) total.discrepancies.push_back(std::move(d));
    }
    return total;
}

}  // namespace proth3
