#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "proth3/error.hpp"
#include "proth3/factorization.hpp"
#include "proth3/modular.hpp"
#include "proth3/natural.hpp"
#include "proth3/oracle.hpp"
#include "proth3/proth_candidate.hpp"

// Divisor forms of GF(3, n) = 3^(2^n) + 1 and the trial-division machinery
// built on them.

namespace proth3 {

/// f = k * 2^(n+1) + 1, k odd, 3 does not divide k.
struct FormA {
    Natural k;
    friend bool operator==(const FormA&, const FormA&) = default;
};

/// f = 3 * m * 2^(n+2) + 1, m >= 1 of any parity.
struct FormB {
    Natural m;
    friend bool operator==(const FormB&, const FormB&) = default;
};

struct FactorForm {
    std::uint32_t n;
    std::variant<FormA, FormB> kind;
    friend bool operator==(const FactorForm&, const FactorForm&) = default;
};

/// Which of the two divisor forms of GF(3, n) the odd number f has, if any.
/// The forms are disjoint: a FormB number has (f-1)/2^(n+1) = 6m, never odd.
inline std::optional<FactorForm> form_of(const Natural& f, std::uint32_t n) {
    if (f < 5 || !boost::multiprecision::bit_test(f, 0)) {
        throw error(errc::invalid_argument, "form_of needs odd f >= 5, got " + f.str());
    }
    const Natural fm1 = f - 1;
    const Natural step_a = pow2(n + 1);
    if (fm1 % step_a == 0) {
        const Natural k = fm1 / step_a;
        if (boost::multiprecision::bit_test(k, 0) && k % 3 != 0) {
            return FactorForm{n, FormA{k}};
        }
    }
    const Natural step_b = 3 * pow2(n + 2);
    if (fm1 % step_b == 0) {
        return FactorForm{n, FormB{fm1 / step_b}};
    }
    return std::nullopt;
}

/// Increasing merge of both form progressions for index n, bounded by limit.
class CandidateStream {
public:
    CandidateStream(std::uint32_t n, Natural limit)
        : limit_(std::move(limit)), unit_a_(pow2(n + 1)), step_b_(3 * pow2(n + 2)) {
        next_a_ = unit_a_ + 1;  // k = 1
        next_b_ = step_b_ + 1;  // m = 1
    }

    std::optional<Natural> next() {
        if (next_a_ > limit_ && next_b_ > limit_) {
            return std::nullopt;
        }
        if (next_a_ < next_b_) {
            Natural out = next_a_;
            advance_a();
            return out;
        }
        Natural out = next_b_;
        next_b_ += step_b_;
        return out;
    }

private:
    // k runs through 1, 5, 7, 11, 13, ...: the residues 1 and 5 mod 6.
    void advance_a() {
        next_a_ += (k_mod6_ == 1 ? 4 : 2) * unit_a_;
        k_mod6_ = k_mod6_ == 1 ? 5 : 1;
    }

    Natural limit_;
    Natural unit_a_;
    Natural step_b_;
    Natural next_a_;
    Natural next_b_;
    unsigned k_mod6_ = 1;
};

inline std::vector<Natural> enumerate_candidates(std::uint32_t n, const Natural& limit) {
    std::vector<Natural> out;
    CandidateStream stream(n, limit);
    while (auto f = stream.next()) {
        out.push_back(std::move(*f));
    }
    return out;
}

inline constexpr std::uint32_t default_gf3_cap = 5;
inline constexpr std::uint64_t default_gf3_budget = 10'000'000;

inline Natural gf3(std::uint32_t z) {
    return boost::multiprecision::pow(Natural(3), static_cast<unsigned>(1ULL << z)) + 1;
}

/// Factor GF(3, n) by stripping 2 and trial dividing the odd part along the
/// two divisor-form progressions. A final cofactor is accepted as prime only
/// through the oracle, so a divisor off both progressions leaves the result
/// incomplete rather than wrong.
inline Factorization factor_gf3(std::uint32_t n, std::uint64_t budget = default_gf3_budget,
                                std::uint32_t cap = default_gf3_cap) {
    if (n > cap) {
        throw error(errc::out_of_range,
                    "GF(3," + std::to_string(n) + ") is above the factoring cap " + std::to_string(cap));
    }
    Factorization out;
    out.target = gf3(n);
    Natural cof = out.target;
    const unsigned twos = boost::multiprecision::lsb(cof);
    cof >>= twos;
    out.prime_factors.push_back({2, twos});

    bool anomaly = false;
    std::uint64_t tried = 0;
    CandidateStream stream(n, isqrt(cof));
    while (auto f = stream.next()) {
        if (*f * *f > cof) break;
        if (tried == budget) {
            anomaly = true;
            break;
        }
        ++tried;
        unsigned mult = 0;
        while (cof % *f == 0) {
            cof /= *f;
            ++mult;
        }
        if (mult == 0) continue;
        if (oracle::is_prime_exact(*f)) {
            out.prime_factors.push_back({*f, mult});
        } else {
            // Composite candidate dividing: some prime factor escaped both forms.
            for (unsigned i = 0; i < mult; ++i) cof *= *f;
            anomaly = true;
            break;
        }
    }
    if (cof > 1 && !anomaly && cof <= oracle::range.exact_bound && oracle::is_prime_exact(cof)) {
        out.prime_factors.push_back({cof, 1});
        cof = 1;
    }
    out.cofactor = cof;
    out.complete = cof == 1;
    return out;
}

struct SieveOutcome {
    enum class Kind { factor_found, exhausted, budget_spent };
    Kind kind;
    std::optional<Natural> factor;
};

/// Trial division of R by k * 2^n + 1, k = 1, 2, ..., while the divisor
/// stays at or below sqrt(R). `budget` caps the divisors tried.
inline SieveOutcome sieve_progression(const Natural& R, std::uint32_t n, std::uint64_t budget) {
    const Natural step = pow2(n);
    std::uint64_t tried = 0;
    for (Natural f = step + 1;; f += step) {
        if (f * f > R) return {SieveOutcome::Kind::exhausted, std::nullopt};
        if (tried == budget) return {SieveOutcome::Kind::budget_spent, std::nullopt};
        ++tried;
        if (R % f == 0) return {SieveOutcome::Kind::factor_found, f};
    }
}

/// Sieve for an Euler-passing divisor R of GF(3, n-1). Every prime factor of
/// such R has order 2^n for 3, hence lies on k * 2^n + 1, so Exhausted
/// proves R prime.
inline SieveOutcome sieve_R(const ProthCandidate& c, std::uint64_t budget) {
    const Natural& R = c.R();
    const std::uint32_t n = c.n();
    if (c.p() <= 3 || n <= 2) {
        throw error(errc::contract_violation, "sieve needs p > 3 and n > 2");
    }
    if (R % 3 == 0) {
        throw error(errc::contract_violation, "3 divides R = " + R.str());
    }
    const Natural rm1 = R - 1;
    if (mod_pow(3, rm1 >> 1, R) != rm1) {
        throw error(errc::contract_violation, "R = " + R.str() + " fails the base-3 Euler test");
    }
    if (pow3_tower(n - 1, R) != rm1) {
        throw error(errc::contract_violation, "R = " + R.str() + " does not divide GF(3,n-1)");
    }
    return sieve_progression(R, n, budget);
}

}  // namespace proth3
