#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylchar/numbers.hpp"

namespace sylchar::sylow {

/// Cycle type of a permutation of [n]: the multiset of cycle lengths with
/// fixed points (1s) explicit. Parts are kept sorted ascending.
struct CycleType {
    CycleType() = default;
    /// Validates parts >= 1 and sum == n; sorts the parts.
    CycleType(std::int64_t n, std::vector<std::int64_t> parts);

    /// From the non-fixed-point parts only, padding with 1s up to degree n.
    static CycleType with_fixed_points(std::int64_t n, std::vector<std::int64_t> parts);

    std::int64_t degree = 0;
    std::vector<std::int64_t> parts;  // ascending, includes 1s, sums to degree

    std::int64_t fixed_points() const;
    /// Parts greater than 1, ascending.
    std::vector<std::int64_t> nontrivial_parts() const;

    bool operator==(const CycleType& o) const {
        return degree == o.degree && parts == o.parts;
    }
    bool operator<(const CycleType& o) const {
        return degree != o.degree ? degree < o.degree : parts < o.parts;
    }

    std::string to_string() const;
};

/// |C_{S_n}(g)| = prod over distinct part sizes d of d^{m_d} * m_d!.
BigInt centralizer_order(const CycleType& ct);

}  // namespace sylchar::sylow
