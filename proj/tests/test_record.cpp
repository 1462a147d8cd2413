#include <random>

#include <gtest/gtest.h>

#include "proth3/record.hpp"

using proth3::Evidence;
using proth3::Natural;
using proth3::Outcome;
using proth3::Verdict;

TEST(ResultRecord, KeyOrderIsFixed) {
    const auto rec = proth3::make_record(7, 2, Verdict(Outcome::prime, Evidence::non_divisor_of_gf, true), 3);
    EXPECT_EQ(proth3::to_json(rec).dump(),
              R"({"p":"7","n":2,"R":"29","verdict":"prime","evidence":"non_divisor_of_gf","witness":null,"elapsed_ms":3})");
}

// Decimal strings survive a JSON round trip exactly, at any width.
TEST(ResultRecord, RoundTripProperty) {
    std::mt19937_64 rng(17);
    const Verdict samples[] = {
        Verdict(Outcome::composite, Evidence::euler_witness, false, Natural(12345)),
        Verdict(Outcome::composite, Evidence::sieve_factor_found, true, Natural(17)),
        Verdict(Outcome::prime, Evidence::sieve_exhausted, true),
        Verdict(Outcome::primover, Evidence::gf_divisor_unresolved, true),
        Verdict(Outcome::prime, Evidence::sophie_germain, false),
    };
    for (int i = 0; i < 200; ++i) {
        Natural p = 1;
        for (int w = rng() % 6; w >= 0; --w) p = (p << 64) + rng();
        const std::uint32_t n = rng() % 200 + 1;
        const auto& v = samples[rng() % std::size(samples)];
        const auto rec = proth3::make_record(p, n, v, (i % 2) ? std::optional<std::int64_t>(i) : std::nullopt);
        const auto text = proth3::to_json(rec).dump();
        const auto back = proth3::record_from_json(nlohmann::json::parse(text));
        EXPECT_EQ(back, rec);
        EXPECT_EQ(proth3::parse_natural(back.R), (p << n) + 1);
    }
}

TEST(ResultRecord, RejectsMalformed) {
    auto parse = [](const char* text) { return proth3::record_from_json(nlohmann::json::parse(text)); };
    EXPECT_NO_THROW(parse(R"({"p":"7","n":2,"R":"29","verdict":"prime","evidence":"proth_bound","witness":null})"));
    EXPECT_THROW(parse(R"({"p":"7","n":2,"R":"30","verdict":"prime","evidence":"proth_bound"})"), proth3::error);
    EXPECT_THROW(parse(R"({"p":"-7","n":2,"R":"29","verdict":"prime","evidence":"proth_bound"})"), proth3::error);
    EXPECT_THROW(parse(R"({"p":7,"n":2,"R":"29","verdict":"prime","evidence":"proth_bound"})"), proth3::error);
    EXPECT_THROW(parse(R"({"p":"7","n":2,"R":"29","verdict":"prime","evidence":"euler_witness"})"), proth3::error);
    EXPECT_THROW(parse(R"({"p":"7","n":2,"R":"29","verdict":"maybe","evidence":"proth_bound"})"), proth3::error);
    EXPECT_THROW(parse(R"({"p":"7","n":2,"R":"29","verdict":"prime","evidence":"proth_bound","witness":"1x"})"),
                 proth3::error);
}

TEST(ParseNatural, StrictDecimal) {
    EXPECT_EQ(proth3::parse_natural("0"), 0);
    EXPECT_EQ(proth3::parse_natural("340282366920938463463374607431768211457"),
              (Natural(1) << 128) + 1);
    for (const char* bad : {"", " 1", "1 ", "+1", "-1", "0x10", "1e3"}) {
        EXPECT_THROW(proth3::parse_natural(bad), proth3::error) << bad;
    }
}

TEST(SearchReportJson, Shape) {
    const auto r = proth3::min_n(7, 10);
    EXPECT_EQ(proth3::to_json(r).dump(),
              R"({"p":"7","n_max":10,"min_n":2,"R":"29","survivor":false,)"
              R"("result":{"p":"7","n":2,"R":"29","verdict":"prime","evidence":"non_divisor_of_gf","witness":null},)"
              R"("verdicts":[{"n":1,"verdict":"composite","evidence":"sophie_germain","witness":null},)"
              R"({"n":2,"verdict":"prime","evidence":"non_divisor_of_gf","witness":null}]})");
    const auto survivor = proth3::min_n(47, 3);
    const auto j = proth3::to_json(survivor);
    EXPECT_TRUE(j["min_n"].is_null());
    EXPECT_TRUE(j["result"].is_null());
    EXPECT_TRUE(j["survivor"].get<bool>());
}

TEST(Describe, HumanText) {
    EXPECT_EQ(proth3::describe(Verdict(Outcome::prime, Evidence::non_divisor_of_gf, true), 2),
              "prime (non-divisor of GF(3,1))");
    EXPECT_EQ(proth3::describe(Verdict(Outcome::composite, Evidence::divisible_by_three, false), 2),
              "composite (divisible by 3)");
}
