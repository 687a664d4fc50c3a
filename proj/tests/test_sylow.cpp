#include <doctest.h>

#include <algorithm>
#include <map>

#include "sylchar/cycle_type.hpp"
#include "sylchar/padic.hpp"
#include "sylchar/wreath.hpp"

using namespace sylchar;
using namespace sylchar::sylow;

namespace {

WreathElem leaf() { return WreathElem(); }

WreathElem node(std::vector<WreathElem> children, int top) {
    return WreathElem(std::move(children), top);
}

WreathElem p3_cycle(int e) { return node({leaf(), leaf(), leaf()}, e); }

/// Per-level sums of top exponents mod p, indexed by level 1..k.
void collect_sums(const WreathElem& x, std::vector<int>& sums) {
    if (x.level() == 0) return;
    sums[static_cast<size_t>(x.level() - 1)] =
        static_cast<int>((sums[static_cast<size_t>(x.level() - 1)] + x.top()) % x.prime());
    for (const auto& child : x.children()) collect_sums(child, sums);
}

}  // namespace

TEST_CASE("p-adic expansion") {
    const auto shape18 = p_adic(18, 3);
    REQUIRE(shape18.digits.size() == 1);
    CHECK(shape18.digits[0] == std::pair<int, int>(2, 2));
    CHECK(p_adic(9, 3).digits == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(p_adic(30, 3).digits == std::vector<std::pair<int, int>>{{1, 1}, {3, 1}});
    CHECK_THROWS_AS(p_adic(10, 4), DomainError);
    CHECK_THROWS_AS(p_adic(0, 3), DomainError);
}

TEST_CASE("Sylow subgroup orders") {
    CHECK(sylow_order(9, 3) == 81);
    CHECK(sylow_order(16, 2) == 32768);
    for (const std::int64_t p : {2, 3, 5, 7}) CHECK(sylow_order(p, p) == p);
    CHECK(sylow_order(18, 3) == 6561);
    CHECK(wreath_order(3, 2) == 81);
    CHECK(wreath_order(3, 3) == 1594323);
    CHECK(wreath_order(2, 4) == 32768);
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(CycleType::with_fixed_points(9, {3})) == 2160);
    CHECK(centralizer_order(CycleType::with_fixed_points(9, {3, 3})) == 108);
    CHECK(centralizer_order(CycleType::with_fixed_points(5, {})) == 120);  // identity: n!
    CHECK_THROWS_AS(CycleType(5, {3, 3}), DomainError);
}

TEST_CASE("permutation action conventions") {
    CHECK(to_permutation(leaf()) == std::vector<std::int64_t>{0});
    CHECK(to_permutation(WreathElem::identity(3, 2)) ==
          std::vector<std::int64_t>({0, 1, 2, 3, 4, 5, 6, 7, 8}));
    // The generator at k = 1 is the 3-cycle 0 -> 1 -> 2 -> 0.
    CHECK(to_permutation(p3_cycle(1)) == std::vector<std::int64_t>({1, 2, 0}));

    // One nontrivial child, trivial top: a 3-cycle inside one block.
    const auto x = node({p3_cycle(1), WreathElem::identity(3, 1), WreathElem::identity(3, 1)}, 0);
    CHECK(cycle_type(x) == CycleType::with_fixed_points(9, {3}));

    const auto y = node({p3_cycle(1), p3_cycle(2), WreathElem::identity(3, 1)}, 0);
    CHECK(cycle_type(y) == CycleType::with_fixed_points(9, {3, 3}));
}

TEST_CASE("group multiplication matches permutation composition") {
    const auto elems = collect_sylow(3, 2);
    REQUIRE(elems.size() == 81);
    for (size_t i = 0; i < elems.size(); i += 7)
        for (size_t j = 0; j < elems.size(); j += 11) {
            const auto product = mul(elems[i], elems[j]);
            const auto pa = to_permutation(elems[i]);
            const auto pb = to_permutation(elems[j]);
            const auto pc = to_permutation(product);
            for (size_t z = 0; z < pc.size(); ++z)
                CHECK(pc[z] == pa[static_cast<size_t>(pb[z])]);
        }
}

TEST_CASE("long-cycle criterion via the twisted product") {
    // (f, 1, 1; c) with f a 3-cycle: the twisted product is f, so the whole
    // element is a 9-cycle.
    const auto x = node({p3_cycle(1), WreathElem::identity(3, 1), WreathElem::identity(3, 1)}, 1);
    CHECK(is_full_cycle(x));
    CHECK(cycle_type(x) == CycleType(9, {9}));

    for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {2, 3}}) {
        const std::int64_t block = pow_int(p, static_cast<std::uint64_t>(k - 1))
                                       .convert_to<std::int64_t>();
        std::int64_t full_cycles = 0;
        enumerate_sylow(p, k, kDefaultElementBudget, [&](const WreathElem& elem) {
            const auto ct = cycle_type(elem);
            if (ct.fixed_points() > 0) CHECK(elem.top() == 0);
            const bool full = is_full_cycle(elem);
            const bool criterion =
                elem.top() != 0 && cycle_type(twisted_product(elem)) == CycleType(block, {block});
            CHECK(full == criterion);
            if (full) ++full_cycles;
        });
        CHECK(full_cycles > 0);
    }
}

TEST_CASE("enumeration sizes and budget guard") {
    CHECK(collect_sylow(3, 1).size() == 3);
    CHECK(collect_sylow(3, 2).size() == 81);
    CHECK(collect_sylow(2, 4).size() == 32768);
    CHECK(collect_sylow(5, 2).size() == 15625);

    try {
        enumerate_sylow(3, 4, kDefaultElementBudget, [](const WreathElem&) {});
        FAIL("expected a budget refusal");
    } catch (const BudgetError& e) {
        CHECK(e.required_budget == "12157665459056928801");  // 3^40
    }
}

TEST_CASE("elements are distinct and orders match") {
    for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}}) {
        const auto elems = collect_sylow(p, k);
        CHECK(BigInt(elems.size()) ==
              sylow_order(pow_int(p, static_cast<std::uint64_t>(k)).convert_to<std::int64_t>(), p));
        std::vector<std::vector<std::int64_t>> images;
        images.reserve(elems.size());
        for (const auto& x : elems) images.push_back(to_permutation(x));
        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    }
}

TEST_CASE("class intersections") {
    std::int64_t count = 0;
    class_intersection(3, 2, CycleType::with_fixed_points(9, {3}), kDefaultElementBudget,
                       [&](const WreathElem&) { ++count; });
    CHECK(count == 6);

    count = 0;
    class_intersection(3, 2, CycleType::with_fixed_points(9, {3, 3}), kDefaultElementBudget,
                       [&](const WreathElem&) { ++count; });
    CHECK(count == 12);

    count = 0;
    class_intersection(3, 2, CycleType::with_fixed_points(9, {2}), kDefaultElementBudget,
                       [&](const WreathElem&) { ++count; });
    CHECK(count == 0);  // 2 is not a power of 3

    // Class sizes partition the group.
    std::map<std::vector<std::int64_t>, std::int64_t> sizes;
    enumerate_sylow(3, 2, kDefaultElementBudget,
                    [&](const WreathElem& x) { ++sizes[cycle_type(x).parts]; });
    std::int64_t total = 0;
    for (const auto& [parts, size] : sizes) {
        std::int64_t in_class = 0;
        class_intersection(3, 2, CycleType(9, parts), kDefaultElementBudget,
                           [&](const WreathElem&) { ++in_class; });
        CHECK(in_class == size);
        total += size;
    }
    CHECK(total == 81);
}

TEST_CASE("bucket census agrees with tree enumeration") {
    for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {2, 3}, {5, 1}}) {
        const auto buckets = bucket_sylow(p, k, kDefaultElementBudget, 2);
        std::int64_t sums_space = 1;
        for (int j = 0; j < k; ++j) sums_space *= p;
        std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> expected;
        enumerate_sylow(p, k, kDefaultElementBudget, [&](const WreathElem& x) {
            std::vector<int> sums(static_cast<size_t>(k), 0);
            collect_sums(x, sums);
            std::int64_t index = 0, weight = 1;
            for (int j = 0; j < k; ++j) {
                index += sums[static_cast<size_t>(j)] * weight;
                weight *= p;
            }
            auto& counts = expected[cycle_type(x).parts];
            if (counts.empty()) counts.assign(static_cast<size_t>(sums_space), 0);
            ++counts[static_cast<size_t>(index)];
        });
        CHECK(buckets.table == expected);
        CHECK(buckets.total_elements() == wreath_order(p, k).convert_to<std::int64_t>());
    }
}

TEST_CASE("bucket census of the full 3^3 tower") {
    const auto buckets = bucket_sylow(3, 3, kDefaultElementBudget, 2);
    CHECK(buckets.total_elements() == 1594323);
    for (const auto& [parts, counts] : buckets.table)
        for (const auto part : parts) {
            std::int64_t v = part;
            while (v % 3 == 0) v /= 3;
            CHECK(v == 1);  // every cycle length is a power of p
        }
}

TEST_CASE("direct products") {
    const auto ps18 = product_structure(18, 3);
    CHECK(ps18.factor_levels == std::vector<int>({2, 2}));
    CHECK(ps18.order() == 6561);

    const auto ps12 = product_structure(12, 3);
    CHECK(ps12.factor_levels == std::vector<int>({1, 2}));

    const auto ps30 = product_structure(30, 3);
    CHECK(ps30.factor_levels == std::vector<int>({1, 3}));

    std::int64_t count = 0;
    enumerate_product(ps12, kDefaultElementBudget, [&](const ProductElem& x) {
        ++count;
        CHECK(product_cycle_type(ps12, x).degree == 12);
    });
    CHECK(count == 243);

    count = 0;
    product_class_intersection(ps18, CycleType::with_fixed_points(18, {9, 9}),
                               kDefaultElementBudget, [&](const ProductElem&) { ++count; });
    CHECK(count == 36 * 36);  // independent 9-cycles in the two factors
}
