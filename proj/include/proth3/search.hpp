#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "proth3/error.hpp"
#include "proth3/modular.hpp"
#include "proth3/natural.hpp"
#include "proth3/oracle.hpp"
#include "proth3/parallel.hpp"
#include "proth3/proth_candidate.hpp"
#include "proth3/proth_ext.hpp"

namespace proth3 {

struct SearchStep {
    std::uint32_t n;
    Verdict verdict;
};

/// Smallest n <= n_max with p * 2^n + 1 proven prime. `survivor` marks a p
/// for which no n in range produced a Prime verdict.
struct SearchReport {
    Natural p;
    std::optional<std::uint32_t> min_n;
    std::optional<Natural> R_at_min;
    std::uint32_t n_max = 0;
    std::vector<SearchStep> verdicts;
    bool survivor = true;
};

struct SearchOptions {
    std::uint64_t sieve_budget = default_sieve_budget;
    // Stop on a Primover verdict too. Exploratory only: the result is then a
    // probable prime, not a proof.
    bool accept_primover = false;
};

namespace detail {

// q = 2p + 1 with p an odd prime. Pocklington with the prime factor p of
// q - 1 (p > sqrt(q)) and base 2: q is prime iff 3 does not divide q and
// 2^(q-1) = 1 mod q.
inline bool pocklington_2p1(const Natural& p) {
    const Natural q = 2 * p + 1;
    return q % 3 != 0 && mod_pow(2, q - 1, q) == 1;
}

// n = 1. Inside the oracle range the oracle decides.
inline Verdict sophie_germain_step(const Natural& p) {
    const Natural q = 2 * p + 1;
    const bool prime = q <= oracle::range.exact_bound ? oracle::is_prime_exact(q) : pocklington_2p1(p);
    return Verdict(prime ? Outcome::prime : Outcome::composite, Evidence::sophie_germain, false);
}

}  // namespace detail

inline SearchReport min_n(const Natural& p, std::uint32_t n_max, const SearchOptions& options = {},
                          bool p_attested_prime = false) {
    if (n_max < 1) {
        throw error(errc::invalid_argument, "n_max must be >= 1");
    }
    // Validates p (oracle check or attestation) once for the whole run.
    (void)ProthCandidate::make(p, 1, p_attested_prime);

    SearchReport report;
    report.p = p;
    report.n_max = n_max;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        Verdict v = n == 1 ? detail::sophie_germain_step(p)
                           : classify(ProthCandidate::make(p, n, p_attested_prime), options.sieve_budget);
        const bool stop = v.outcome() == Outcome::prime ||
                          (options.accept_primover && v.outcome() == Outcome::primover);
        report.verdicts.push_back({n, std::move(v)});
        if (stop) {
            report.min_n = n;
            report.R_at_min = (p << n) + 1;
            report.survivor = false;
            break;
        }
    }
    return report;
}

inline std::vector<std::uint64_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = std::max<std::uint64_t>(lo, 3) | 1; x <= hi && x >= lo; x += 2) {
        if (oracle::is_prime_exact(x)) out.push_back(x);
        if (x > hi - 2) break;
    }
    return out;
}

/// min_n over every odd prime in [p_min, p_max], ascending by p. Work is
/// spread over `workers` threads; results land in fixed slots, so the output
/// does not depend on scheduling.
inline std::vector<SearchReport> scan(std::uint64_t p_min, std::uint64_t p_max, std::uint32_t n_max,
                                      const SearchOptions& options = {}, unsigned workers = 1) {
    if (p_min > p_max) {
        throw error(errc::invalid_argument, "p_min must be <= p_max");
    }
    if (n_max < 1) {
        throw error(errc::invalid_argument, "n_max must be >= 1");
    }
    if (workers < 1) {
        throw error(errc::invalid_argument, "workers must be >= 1");
    }
    const std::vector<std::uint64_t> primes = odd_primes_in(p_min, p_max);
    return detail::parallel_map(primes.size(), workers,
                                [&](std::size_t i) { return min_n(primes[i], n_max, options); });
}

}  // namespace proth3
