#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "proth3/error.hpp"
#include "proth3/fermat_factors.hpp"
#include "proth3/natural.hpp"
#include "proth3/oracle.hpp"
#include "proth3/proth_candidate.hpp"
#include "proth3/proth_ext.hpp"
#include "proth3/record.hpp"
#include "proth3/search.hpp"
#include "proth3/verify.hpp"

// Command-line front end. Exit codes: 0 prime, 1 composite, 2 primover,
// 3 usage or contract error. gf3/search/verify use 0 for success.

namespace proth3::cli {

inline constexpr int exit_prime = 0;
inline constexpr int exit_composite = 1;
inline constexpr int exit_primover = 2;
inline constexpr int exit_usage = 3;

inline int exit_code_for(Outcome o) {
    switch (o) {
        case Outcome::prime: return exit_prime;
        case Outcome::composite: return exit_composite;
        case Outcome::primover: return exit_primover;
    }
    return exit_usage;
}

namespace detail {

struct ClassifyArgs {
    std::string p;
    std::uint32_t n = 0;
    std::uint64_t sieve_budget = default_sieve_budget;
    bool json = false;
    bool attest = false;
};

struct SearchArgs {
    std::uint64_t p_min = 3;
    std::uint64_t p_max = 0;
    std::uint32_t n_max = 0;
    std::uint64_t sieve_budget = default_sieve_budget;
    unsigned workers = 1;
    std::string out_path;
    bool accept_primover = false;
};

struct Gf3Args {
    std::uint32_t n = 0;
    std::uint64_t budget = default_gf3_budget;
    bool json = false;
};

struct VerifyArgs {
    std::uint64_t p_max = 1000;
    std::uint32_t n_max = 20;
    unsigned workers = 1;
};

inline int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    const Natural p = parse_natural(a.p);
    const auto start = std::chrono::steady_clock::now();
    const auto candidate = ProthCandidate::make(p, a.n, a.attest);
    const Verdict v = a.n == 1 ? proth3::detail::sophie_germain_step(p) : classify(candidate, a.sieve_budget);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (a.json) {
        out << to_json(make_record(p, a.n, v, elapsed)).dump() << '\n';
    } else {
        out << "R = " << p << "*2^" << a.n << "+1 = " << candidate.R() << '\n';
        out << describe(v, a.n) << '\n';
    }
    return exit_code_for(v.outcome());
}

inline int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n_max < 1) {
        err << "error: --n-max must be >= 1\n";
        return exit_usage;
    }
    SearchOptions options;
    options.sieve_budget = a.sieve_budget;
    options.accept_primover = a.accept_primover;
    const auto reports = scan(a.p_min, a.p_max, a.n_max, options, a.workers);

    std::ostringstream body;
    std::size_t survivors = 0;
    for (const auto& r : reports) {
        body << to_json(r).dump() << '\n';
        survivors += r.survivor ? 1 : 0;
    }
    if (a.out_path.empty()) {
        out << body.str();
        return 0;
    }
    std::ofstream file(a.out_path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
        err << "error: cannot write " << a.out_path << '\n';
        return exit_usage;
    }
    file << body.str();
    file.close();
    if (!file) {
        err << "error: write to " << a.out_path << " failed\n";
        return exit_usage;
    }
    out << "wrote " << reports.size() << " reports (" << survivors << " survivors) to " << a.out_path << '\n';
    return 0;
}

inline std::string form_text(const FactorForm& form) {
    if (const auto* a = std::get_if<FormA>(&form.kind)) return "FormA(k=" + a->k.str() + ")";
    return "FormB(m=" + std::get<FormB>(form.kind).m.str() + ")";
}

inline int cmd_gf3(const Gf3Args& a, std::ostream& out) {
    const Factorization f = factor_gf3(a.n, a.budget);
    if (a.json) {
        ordered_json j;
        j["n"] = a.n;
        j["value"] = to_decimal(f.target);
        j["complete"] = f.complete;
        j["cofactor"] = to_decimal(f.cofactor);
        ordered_json factors = ordered_json::array();
        for (const auto& pp : f.prime_factors) {
            ordered_json e;
            e["prime"] = to_decimal(pp.prime);
            e["multiplicity"] = pp.multiplicity;
            if (pp.prime != 2) {
                const auto form = form_of(pp.prime, a.n);
                if (!form) {
                    e["form"] = nullptr;
                } else if (const auto* fa = std::get_if<FormA>(&form->kind)) {
                    e["form"] = "A";
                    e["k"] = to_decimal(fa->k);
                } else {
                    e["form"] = "B";
                    e["m"] = to_decimal(std::get<FormB>(form->kind).m);
                }
            }
            factors.push_back(std::move(e));
        }
        j["factors"] = std::move(factors);
        out << j.dump() << '\n';
        return f.complete ? 0 : 1;
    }

    std::string line = f.target.str() + " =";
    bool first = true;
    for (const auto& pp : f.prime_factors) {
        line += first ? " " : " · ";
        first = false;
        line += pp.prime.str();
        if (pp.multiplicity > 1) line += "^" + std::to_string(pp.multiplicity);
    }
    if (!f.complete) line += (first ? " " : " · ") + f.cofactor.str() + " (unfactored)";
    for (const auto& pp : f.prime_factors) {
        if (pp.prime == 2) continue;
        const auto form = form_of(pp.prime, a.n);
        line += "; " + pp.prime.str() + " = " + (form ? form_text(*form) : std::string("none"));
    }
    out << line << '\n';
    return f.complete ? 0 : 1;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const VerifySummary s = run_verify(a.p_max, a.n_max, a.workers);
    out << "candidates tested: " << s.candidates << " (skipped " << s.skipped << " with R >= 2^40)\n";
    out << "primes: " << s.primes << '\n';
    out << "composites: " << s.composites << '\n';
    out << "primover verdicts: " << s.primover_verdicts << '\n';
    out << "composite Euler passes: " << s.composite_euler_passes.size() << '\n';
    for (const auto& c : s.composite_euler_passes) {
        out << "  p=" << c.p << " n=" << c.n << " R=" << c.R << '\n';
    }
    for (const auto& d : s.discrepancies) out << "  discrepancy: " << d << '\n';
    out << s.discrepancies.size() << " discrepancies\n";
    return s.discrepancies.empty() ? 0 : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Base-3 Proth extension: classify p*2^n+1, factor GF(3,n), search minimal n.\n"
                 "Oracle primality is exact up to 2^64-1 and refuses larger inputs."};
    app.require_subcommand(1);

    detail::ClassifyArgs ca;
    auto* classify_cmd = app.add_subcommand("classify", "Classify R = p*2^n+1");
    classify_cmd->add_option("--p", ca.p, "odd prime p (decimal)")->required();
    classify_cmd->add_option("--n", ca.n, "exponent n >= 1")->required();
    classify_cmd->add_option("--sieve-budget", ca.sieve_budget, "max divisors tried by the sieve");
    classify_cmd->add_flag("--json", ca.json, "emit one JSON object");
    classify_cmd->add_flag("--attest-prime", ca.attest, "assert p is prime (needed above 2^64)");

    detail::SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Smallest n with p*2^n+1 prime, for each prime p in range");
    search_cmd->add_option("--p-min", sa.p_min, "lower end of the p range");
    search_cmd->add_option("--p-max", sa.p_max, "upper end of the p range")->required();
    search_cmd->add_option("--n-max", sa.n_max, "largest n tried")->required();
    search_cmd->add_option("--sieve-budget", sa.sieve_budget, "max divisors tried by the sieve");
    search_cmd->add_option("--workers", sa.workers, "worker threads")->envname("PROTH3_THREADS")->check(CLI::PositiveNumber);
    search_cmd->add_option("--out", sa.out_path, "JSONL output path (stdout if omitted)");
    search_cmd->add_flag("--accept-primover", sa.accept_primover, "stop at primover verdicts as well");

    detail::Gf3Args ga;
    auto* gf3_cmd = app.add_subcommand("gf3", "Factor GF(3,n) = 3^(2^n)+1 and classify its odd factors");
    gf3_cmd->add_option("--n", ga.n, "index n (<= " + std::to_string(default_gf3_cap) + ")")->required();
    gf3_cmd->add_option("--budget", ga.budget, "max trial divisors");
    gf3_cmd->add_flag("--json", ga.json, "emit one JSON object");

    detail::VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Replay the classifier against the oracle (R < 2^40)");
    verify_cmd->add_option("--p-max", va.p_max, "largest p");
    verify_cmd->add_option("--n-max", va.n_max, "largest n");
    verify_cmd->add_option("--workers", va.workers, "worker threads")->envname("PROTH3_THREADS")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*classify_cmd) return detail::cmd_classify(ca, out);
        if (*search_cmd) return detail::cmd_search(sa, out, err);
        if (*gf3_cmd) return detail::cmd_gf3(ga, out);
        if (*verify_cmd) return detail::cmd_verify(va, out);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("proth3");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace proth3::cli
