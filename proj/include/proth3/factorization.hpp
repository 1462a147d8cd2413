#pragma once

#include <vector>

#include "proth3/natural.hpp"

namespace proth3 {

struct PrimePower {
    Natural prime;
    unsigned multiplicity = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factors found for `target`, ascending. When `complete` is false the
/// unfactored remainder is kept in `cofactor`; otherwise cofactor == 1.
struct Factorization {
    Natural target;
    std::vector<PrimePower> prime_factors;
    Natural cofactor = 1;
    bool complete = false;

    Natural product() const {
        Natural r = 1;
        for (const auto& pp : prime_factors) {
            for (unsigned i = 0; i < pp.multiplicity; ++i) {
                r *= pp.prime;
            }
        }
        return r;
    }
};

}  // namespace proth3
