#include "sylchar/padic.hpp"

#include "sylchar/errors.hpp"

namespace sylchar::sylow {

PAdicShape p_adic(std::int64_t n, std::int64_t p) {
    require_prime(p);
    if (n < 1) throw DomainError("p_adic: n must be positive");
    PAdicShape shape;
    shape.p = p;
    int exponent = 0;
    while (n > 0) {
        const int digit = static_cast<int>(n % p);
        if (digit != 0) shape.digits.emplace_back(exponent, digit);
        n /= p;
        ++exponent;
    }
    return shape;
}

BigInt sylow_order(std::int64_t n, std::int64_t p) {
    require_prime(p);
    if (n < 1) throw DomainError("sylow_order: n must be positive");
    std::uint64_t valuation = 0;
    for (std::int64_t q = p; q <= n; q *= p) {
        valuation += static_cast<std::uint64_t>(n / q);
        if (q > n / p) break;  // avoid overflow on the next q *= p
    }
    return pow_int(p, valuation);
}

}  // namespace sylchar::sylow
