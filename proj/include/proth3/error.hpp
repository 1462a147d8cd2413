#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proth3 {

enum class errc {
    invalid_modulus,
    invalid_argument,
    order_bound_violated,
    divisible_by_three,
    out_of_scope,
    attestation_required,
    oracle_refusal,
    out_of_range,
    contract_violation,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::invalid_modulus: return "invalid modulus";
        case errc::invalid_argument: return "invalid argument";
        case errc::order_bound_violated: return "order bound violated";
        case errc::divisible_by_three: return "divisible by three";
        case errc::out_of_scope: return "out of scope";
        case errc::attestation_required: return "attestation required";
        case errc::oracle_refusal: return "oracle refusal";
        case errc::out_of_range: return "out of range";
        case errc::contract_violation: return "contract violation";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace proth3
