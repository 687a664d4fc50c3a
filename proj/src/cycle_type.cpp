#include "sylchar/cycle_type.hpp"

#include <algorithm>
#include <map>

#include "sylchar/errors.hpp"

namespace sylchar::sylow {

CycleType::CycleType(std::int64_t n, std::vector<std::int64_t> parts_)
    : degree(n), parts(std::move(parts_)) {
    std::int64_t sum = 0;
    for (const auto part : parts) {
        if (part < 1) throw DomainError("CycleType: parts must be >= 1");
        sum += part;
    }
    if (sum != n) throw DomainError("CycleType: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(n));
    std::sort(parts.begin(), parts.end());
}

CycleType CycleType::with_fixed_points(std::int64_t n, std::vector<std::int64_t> parts) {
    std::int64_t sum = 0;
    for (const auto part : parts) sum += part;
    if (sum > n) throw DomainError("CycleType: parts exceed the degree");
    parts.insert(parts.end(), static_cast<size_t>(n - sum), 1);
    return CycleType(n, std::move(parts));
}

std::int64_t CycleType::fixed_points() const {
    return static_cast<std::int64_t>(std::count(parts.begin(), parts.end(), 1));
}

std::vector<std::int64_t> CycleType::nontrivial_parts() const {
    std::vector<std::int64_t> out;
    for (const auto part : parts)
        if (part > 1) out.push_back(part);
    return out;
}

std::string CycleType::to_string() const {
    std::string s = "(";
    for (size_t i = parts.size(); i-- > 0;) {
        s += std::to_string(parts[i]);
        if (i > 0) s += ",";
    }
    return s + ")";
}

BigInt centralizer_order(const CycleType& ct) {
    std::map<std::int64_t, unsigned> mult;
    for (const auto part : ct.parts) ++mult[part];
    BigInt order = 1;
    for (const auto& [d, m] : mult) order *= pow_int(d, m) * factorial(m);
    return order;
}

}  // namespace sylchar::sylow
