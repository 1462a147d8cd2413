#include <gtest/gtest.h>

#include "brute.hpp"
#include "proth3/proth_ext.hpp"

using proth3::errc;
using proth3::Evidence;
using proth3::Natural;
using proth3::Outcome;
using proth3::ProthCandidate;

namespace {

template <class Fn>
errc code_of(Fn&& fn) {
    try {
        fn();
    } catch (const proth3::error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no proth3::error thrown";
    return errc::contract_violation;
}

}  // namespace

TEST(ProthCandidate, Construction) {
    const auto c = ProthCandidate::make(5, 3);
    EXPECT_EQ(c.p(), 5);
    EXPECT_EQ(c.n(), 3u);
    EXPECT_EQ(c.R(), 41);
    EXPECT_EQ(code_of([] { ProthCandidate::make(9, 3); }), errc::invalid_argument);
    EXPECT_EQ(code_of([] { ProthCandidate::make(2, 3); }), errc::invalid_argument);
    EXPECT_EQ(code_of([] { ProthCandidate::make(5, 0); }), errc::invalid_argument);
}

TEST(ProthCandidate, AttestationAboveOracleRange) {
    // 2^89 - 1 is a Mersenne prime, far above the oracle's 64-bit range.
    const Natural m89 = (Natural(1) << 89) - 1;
    EXPECT_EQ(code_of([&] { ProthCandidate::make(m89, 4); }), errc::attestation_required);
    const auto c = ProthCandidate::make(m89, 4, true);
    EXPECT_EQ(c.R(), (m89 << 4) + 1);
}

TEST(Verdict, EvidenceMustSupportOutcome) {
    EXPECT_EQ(code_of([] { proth3::Verdict(Outcome::prime, Evidence::euler_witness, true); }),
              errc::contract_violation);
    EXPECT_EQ(code_of([] { proth3::Verdict(Outcome::composite, Evidence::sieve_exhausted, true); }),
              errc::contract_violation);
    EXPECT_EQ(code_of([] { proth3::Verdict(Outcome::primover, Evidence::gf_divisor_unresolved, false); }),
              errc::contract_violation);
    EXPECT_NO_THROW(proth3::Verdict(Outcome::primover, Evidence::gf_divisor_unresolved, true));
}

TEST(EulerTest, Examples) {
    ASSERT_EQ(brute::pow_by_repetition(3, 20, 41), 40u);
    ASSERT_EQ(brute::pow_by_repetition(3, 14, 29), 28u);
    ASSERT_EQ(brute::pow_by_repetition(3, 26, 53), 52u);
    EXPECT_TRUE(proth3::euler_test(ProthCandidate::make(5, 3)));
    EXPECT_TRUE(proth3::euler_test(ProthCandidate::make(7, 2)));
    EXPECT_TRUE(proth3::euler_test(ProthCandidate::make(13, 2)));
}

// Smallest composite R = p*2^n+1 (p > 3 prime, n >= 2, 3 not dividing R)
// found by scanning with trial division.
TEST(EulerTest, SmallestCompositeFails) {
    std::uint64_t best_R = 0, best_p = 0;
    std::uint32_t best_n = 0;
    for (std::uint64_t p = 5; p < 250000; p += 2) {
        if (!brute::is_prime(p)) continue;
        for (std::uint32_t n = 2; (p << n) + 1 <= 1'000'000; ++n) {
            const std::uint64_t R = (p << n) + 1;
            if (R % 3 == 0 || brute::is_prime(R)) continue;
            if (best_R == 0 || R < best_R) {
                best_R = R;
                best_p = p;
                best_n = n;
            }
        }
    }
    ASSERT_NE(best_R, 0u);
    EXPECT_FALSE(proth3::euler_test(ProthCandidate::make(best_p, best_n))) << best_R;
}

TEST(EulerTest, DomainErrors) {
    EXPECT_EQ(code_of([] { proth3::euler_test(ProthCandidate::make(5, 1)); }), errc::out_of_scope);
    EXPECT_EQ(code_of([] { proth3::euler_test(ProthCandidate::make(5, 2)); }), errc::divisible_by_three);
}

TEST(DividesGf3, Examples) {
    // GF(3,2) = 82 = 2 * 41; GF(3,1) = 10.
    EXPECT_TRUE(proth3::divides_gf3(ProthCandidate::make(5, 3)));
    EXPECT_FALSE(proth3::divides_gf3(ProthCandidate::make(7, 2)));
    EXPECT_EQ(code_of([] { proth3::divides_gf3(ProthCandidate::make(5, 2)); }), errc::divisible_by_three);
}

TEST(Classify, Examples) {
    const auto v29 = proth3::classify(ProthCandidate::make(7, 2));
    EXPECT_EQ(v29.outcome(), Outcome::prime);
    EXPECT_EQ(v29.evidence(), Evidence::non_divisor_of_gf);
    EXPECT_TRUE(v29.passed_euler());

    const auto v41 = proth3::classify(ProthCandidate::make(5, 3), 0);
    EXPECT_EQ(v41.outcome(), Outcome::prime);
    EXPECT_EQ(v41.evidence(), Evidence::proth_bound);

    const auto v21 = proth3::classify(ProthCandidate::make(5, 2));
    EXPECT_EQ(v21.outcome(), Outcome::composite);
    EXPECT_EQ(v21.evidence(), Evidence::divisible_by_three);

    const auto v45 = proth3::classify(ProthCandidate::make(11, 2));
    EXPECT_EQ(v45.evidence(), Evidence::divisible_by_three);
}

TEST(Classify, EulerWitnessCarriesResidue) {
    // 17*2^2+1 = 69 = 3*23 is screened; 19*2^3+1 = 153 = 9*17 also; 23*2^2+1 = 93 = 3*31.
    // 13*2^3+1 = 105 = 3*5*7; 11*2^3+1 = 89 prime; 29*2^3+1 = 233 prime;
    // 31*2^2+1 = 125 = 5^3 with 125 = 2 mod 3.
    ASSERT_EQ(125 % 3, 2);
    const auto v = proth3::classify(ProthCandidate::make(31, 2));
    EXPECT_EQ(v.outcome(), Outcome::composite);
    EXPECT_EQ(v.evidence(), Evidence::euler_witness);
    ASSERT_TRUE(v.witness());
    EXPECT_EQ(*v.witness(), brute::pow_by_repetition(3, 62, 125));
}

TEST(Classify, MagnitudeBound) {
    // n = 2: (3^4 + 1) / 2 = 41. 43*4+1 = 173 and 37*4+1 = 149 are prime.
    ASSERT_TRUE(brute::is_prime(173));
    ASSERT_TRUE(brute::is_prime(149));
    EXPECT_EQ(proth3::classify(ProthCandidate::make(43, 2)).evidence(), Evidence::magnitude_bound);
    EXPECT_EQ(proth3::classify(ProthCandidate::make(37, 2)).evidence(), Evidence::non_divisor_of_gf);
}

TEST(Classify, OutOfScope) {
    EXPECT_EQ(code_of([] { proth3::classify(ProthCandidate::make(5, 1)); }), errc::out_of_scope);
}

TEST(MagnitudeGuard, PrefilterAgreesWithExactComparison) {
    for (std::uint32_t n = 1; n <= 9; ++n) {
        const Natural bound = (boost::multiprecision::pow(Natural(3), 1U << n) + 1) / 2;
        const std::vector<Natural> probes{bound - 2, bound - 1, bound, bound + 1, bound + 2, bound * 2, bound / 2,
                                          Natural(1) << (proth3::bit_length(bound) - 1),
                                          Natural(1) << proth3::bit_length(bound)};
        for (const Natural& p : probes) {
            if (p < 1) continue;
            EXPECT_EQ(proth3::detail::exceeds_magnitude_bound(p, n), p > bound) << "n=" << n << " p=" << p;
        }
    }
    EXPECT_FALSE(proth3::detail::exceeds_magnitude_bound(Natural(1) << 5000, 60));
}

TEST(P3Proth, Examples) {
    const auto v13 = proth3::p3_proth(2);
    EXPECT_EQ(v13.outcome(), Outcome::prime);
    EXPECT_EQ(v13.evidence(), Evidence::proth_bound);
    EXPECT_EQ(*v13.witness(), 2);  // smallest nonresidue base for 13
    EXPECT_EQ(proth3::p3_proth(3).outcome(), Outcome::composite);  // 25
    EXPECT_EQ(proth3::p3_proth(4).outcome(), Outcome::composite);  // 49
    EXPECT_EQ(code_of([] { proth3::p3_proth(1); }), errc::out_of_scope);
}

TEST(P3Proth, ClassifyRoutesPThree) {
    for (std::uint32_t n = 2; n <= 12; ++n) {
        EXPECT_EQ(proth3::classify(ProthCandidate::make(3, n)), proth3::p3_proth(n)) << n;
    }
}

TEST(P3Proth, AgreesWithTrialDivision) {
    for (std::uint32_t n = 2; n <= 36; ++n) {
        const std::uint64_t R = (std::uint64_t{3} << n) + 1;
        EXPECT_EQ(proth3::p3_proth(n).outcome() == Outcome::prime, proth3::oracle::is_prime_exact(R)) << n;
    }
}

// Desk-scale replay: soundness, residue laws and both directions of the
// prime-or-GF-divisor equivalence.
TEST(Classify, SoundnessAndResidueLaws) {
    for (std::uint64_t p = 5; p <= 300; p += 2) {
        if (!brute::is_prime(p)) continue;
        for (std::uint32_t n = 2; n <= 14; ++n) {
            const auto c = ProthCandidate::make(p, n);
            const std::uint64_t R = c.R().convert_to<std::uint64_t>();
            const bool prime = proth3::oracle::is_prime_exact(R);
            const auto v = proth3::classify(c);
            if (v.outcome() == Outcome::prime) {
                EXPECT_TRUE(prime) << R;
            }
            if (v.outcome() == Outcome::composite) {
                EXPECT_FALSE(prime) << R;
            }
            if (R % 3 == 0) continue;
            EXPECT_EQ(R % 3, 2u);
            EXPECT_EQ(proth3::jacobi(3, R), -1);
            const bool passes = proth3::euler_test(c);
            if (prime) {
                EXPECT_TRUE(passes) << R;
            }
            if (passes && !prime) {
                EXPECT_TRUE(proth3::divides_gf3(c)) << R;
            }
            if (v.outcome() == Outcome::primover) {
                EXPECT_TRUE(passes);
                EXPECT_TRUE(proth3::divides_gf3(c));
            }
        }
    }
}
