#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "proth3/error.hpp"
#include "proth3/natural.hpp"
#include "proth3/proth_candidate.hpp"
#include "proth3/search.hpp"

// Persistent output. Big integers are decimal strings; key order is fixed.

namespace proth3 {

using ordered_json = nlohmann::ordered_json;

struct ResultRecord {
    std::string p;
    std::uint32_t n = 0;
    std::string R;
    std::string verdict;
    std::string evidence;
    std::optional<std::string> witness;
    std::optional<std::int64_t> elapsed_ms;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline std::optional<Outcome> parse_outcome(std::string_view s) {
    for (auto o : {Outcome::composite, Outcome::prime, Outcome::primover}) {
        if (to_string(o) == s) return o;
    }
    return std::nullopt;
}

inline std::optional<Evidence> parse_evidence(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(Evidence::sophie_germain); ++i) {
        const auto e = static_cast<Evidence>(i);
        if (to_string(e) == s) return e;
    }
    return std::nullopt;
}

inline ResultRecord make_record(const Natural& p, std::uint32_t n, const Verdict& v,
                                std::optional<std::int64_t> elapsed_ms = std::nullopt) {
    ResultRecord r;
    r.p = to_decimal(p);
    r.n = n;
    r.R = to_decimal((p << n) + 1);
    r.verdict = std::string(to_string(v.outcome()));
    r.evidence = std::string(to_string(v.evidence()));
    if (v.witness()) r.witness = to_decimal(*v.witness());
    r.elapsed_ms = elapsed_ms;
    return r;
}

inline ordered_json to_json(const ResultRecord& r) {
    ordered_json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["R"] = r.R;
    j["verdict"] = r.verdict;
    j["evidence"] = r.evidence;
    j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

/// Inverse of to_json. Rejects malformed decimals, unknown tags, a verdict
/// the evidence cannot support, and an R inconsistent with p and n.
inline ResultRecord record_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& why) { throw error(errc::invalid_argument, "bad result record: " + why); };
    ResultRecord r;
    try {
        r.p = j.at("p").get<std::string>();
        r.n = j.at("n").get<std::uint32_t>();
        r.R = j.at("R").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        r.evidence = j.at("evidence").get<std::string>();
        if (j.contains("witness") && !j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
        if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        fail(e.what());
    }
    const Natural p = parse_natural(r.p);
    const Natural R = parse_natural(r.R);
    if (R != (p << r.n) + 1) fail("R != p*2^n+1");
    if (r.witness) (void)parse_natural(*r.witness);
    const auto o = parse_outcome(r.verdict);
    const auto e = parse_evidence(r.evidence);
    if (!o || !e) fail("unknown verdict or evidence tag");
    if (!evidence_allows(*o, *e)) fail("evidence does not support verdict");
    return r;
}

inline ordered_json to_json(const SearchReport& report) {
    ordered_json j;
    j["p"] = to_decimal(report.p);
    j["n_max"] = report.n_max;
    j["min_n"] = report.min_n ? ordered_json(*report.min_n) : ordered_json(nullptr);
    j["R"] = report.R_at_min ? ordered_json(to_decimal(*report.R_at_min)) : ordered_json(nullptr);
    j["survivor"] = report.survivor;
    if (report.min_n) {
        j["result"] = to_json(make_record(report.p, *report.min_n, report.verdicts.back().verdict));
    } else {
        j["result"] = nullptr;
    }
    ordered_json steps = ordered_json::array();
    for (const auto& s : report.verdicts) {
        ordered_json step;
        step["n"] = s.n;
        step["verdict"] = to_string(s.verdict.outcome());
        step["evidence"] = to_string(s.verdict.evidence());
        step["witness"] = s.verdict.witness() ? ordered_json(to_decimal(*s.verdict.witness())) : ordered_json(nullptr);
        steps.push_back(std::move(step));
    }
    j["verdicts"] = std::move(steps);
    return j;
}

/// One-line human description, e.g. "prime (non-divisor of GF(3,1))".
inline std::string describe(const Verdict& v, std::uint32_t n) {
    std::string what;
    switch (v.evidence()) {
        case Evidence::divisible_by_three: what = "divisible by 3"; break;
        case Evidence::euler_witness: what = "Euler witness"; break;
        case Evidence::proth_bound: what = "Proth bound 2^n > p"; break;
        case Evidence::magnitude_bound: what = "magnitude bound p > (3^(2^n)+1)/2"; break;
        case Evidence::non_divisor_of_gf: what = "non-divisor of GF(3," + std::to_string(n - 1) + ")"; break;
        case Evidence::sieve_exhausted: what = "no divisor k*2^n+1 up to sqrt(R)"; break;
        case Evidence::sieve_factor_found: what = "factor " + to_decimal(v.witness().value_or(0)); break;
        case Evidence::gf_divisor_unresolved:
            what = "divides GF(3," + std::to_string(n - 1) + "), sieve budget spent";
            break;
        case Evidence::sophie_germain: what = "exact check of 2p+1"; break;
    }
    return std::string(to_string(v.outcome())) + " (" + what + ")";
}

}  // namespace proth3
