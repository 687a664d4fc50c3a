#pragma once

#include <cstdint>
#include <vector>

#include "sylchar/numbers.hpp"

namespace sylchar::sylow {

/// Base-p expansion of n with nonzero digits only: n = sum a_i p^{n_i},
/// exponents strictly increasing, coefficients a_i in [1, p-1].
struct PAdicShape {
    std::int64_t p = 0;
    std::vector<std::pair<int, int>> digits;  // (exponent n_i, coefficient a_i)
};

PAdicShape p_adic(std::int64_t n, std::int64_t p);

/// |P_n| = p^{sum_i floor(n / p^i)} (Legendre's formula for v_p(n!)).
BigInt sylow_order(std::int64_t n, std::int64_t p);

}  // namespace sylchar::sylow
