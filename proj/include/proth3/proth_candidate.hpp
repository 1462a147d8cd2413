#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "proth3/error.hpp"
#include "proth3/natural.hpp"
#include "proth3/oracle.hpp"

namespace proth3 {

/// R = p * 2^n + 1 with p an odd prime and n >= 1.
///
/// Primality of p is checked with the oracle when p lies inside its exact
/// range. Larger p must be attested prime by the caller; every verdict about
/// R assumes p prime.
class ProthCandidate {
public:
    static ProthCandidate make(const Natural& p, std::uint32_t n, bool p_attested_prime = false) {
        if (n < 1) {
            throw error(errc::invalid_argument, "exponent n must be >= 1");
        }
        if (p < 3 || !boost::multiprecision::bit_test(p, 0)) {
            throw error(errc::invalid_argument, "p must be an odd prime, got " + p.str());
        }
        if (p <= oracle::range.exact_bound) {
            if (!oracle::is_prime_exact(p)) {
                throw error(errc::invalid_argument, "p = " + p.str() + " is not prime");
            }
        } else if (!p_attested_prime) {
            throw error(errc::attestation_required,
                        "p = " + p.str() + " is above the oracle range and carries no primality attestation");
        }
        return ProthCandidate(p, n);
    }

    const Natural& p() const noexcept { return p_; }
    std::uint32_t n() const noexcept { return n_; }
    const Natural& R() const noexcept { return r_; }

private:
    ProthCandidate(const Natural& p, std::uint32_t n) : p_(p), n_(n), r_((p << n) + 1) {}

    Natural p_;
    std::uint32_t n_;
    Natural r_;
};

enum class Outcome { composite, prime, primover };

enum class Evidence {
    divisible_by_three,
    euler_witness,
    proth_bound,
    magnitude_bound,
    non_divisor_of_gf,
    sieve_exhausted,
    sieve_factor_found,
    gf_divisor_unresolved,
    sophie_germain,  // n = 1, exact check of 2p + 1 (search module only)
};

constexpr std::string_view to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::composite: return "composite";
        case Outcome::prime: return "prime";
        case Outcome::primover: return "primover";
    }
    return "?";
}

constexpr std::string_view to_string(Evidence e) noexcept {
    switch (e) {
        case Evidence::divisible_by_three: return "divisible_by_three";
        case Evidence::euler_witness: return "euler_witness";
        case Evidence::proth_bound: return "proth_bound";
        case Evidence::magnitude_bound: return "magnitude_bound";
        case Evidence::non_divisor_of_gf: return "non_divisor_of_gf";
        case Evidence::sieve_exhausted: return "sieve_exhausted";
        case Evidence::sieve_factor_found: return "sieve_factor_found";
        case Evidence::gf_divisor_unresolved: return "gf_divisor_unresolved";
        case Evidence::sophie_germain: return "sophie_germain";
    }
    return "?";
}

constexpr bool evidence_allows(Outcome o, Evidence e) noexcept {
    switch (e) {
        case Evidence::divisible_by_three:
        case Evidence::euler_witness:
        case Evidence::sieve_factor_found:
            return o == Outcome::composite;
        case Evidence::proth_bound:
        case Evidence::magnitude_bound:
        case Evidence::non_divisor_of_gf:
        case Evidence::sieve_exhausted:
            return o == Outcome::prime;
        case Evidence::gf_divisor_unresolved:
            return o == Outcome::primover;
        case Evidence::sophie_germain:
            return o != Outcome::primover;
    }
    return false;
}

/// Classification outcome with its evidence. `witness` carries the factor for
/// sieve_factor_found, the residue 3^((R-1)/2) mod R for euler_witness, and
/// the Proth base for p = 3 verdicts.
class Verdict {
public:
    Verdict(Outcome outcome, Evidence evidence, bool passed_euler, std::optional<Natural> witness = std::nullopt)
        : outcome_(outcome), evidence_(evidence), passed_euler_(passed_euler), witness_(std::move(witness)) {
        if (!evidence_allows(outcome, evidence)) {
            throw error(errc::contract_violation, std::string("evidence ") + std::string(to_string(evidence)) +
                                                      " cannot support outcome " + std::string(to_string(outcome)));
        }
        if (outcome == Outcome::primover && !passed_euler) {
            throw error(errc::contract_violation, "primover verdict without a passed Euler test");
        }
    }

    Outcome outcome() const noexcept { return outcome_; }
    Evidence evidence() const noexcept { return evidence_; }
    bool passed_euler() const noexcept { return passed_euler_; }
    const std::optional<Natural>& witness() const noexcept { return witness_; }

    friend bool operator==(const Verdict&, const Verdict&) = default;

private:
    Outcome outcome_;
    Evidence evidence_;
    bool passed_euler_;
    std::optional<Natural> witness_;
};

}  // namespace proth3
