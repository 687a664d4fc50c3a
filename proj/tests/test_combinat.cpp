#include <doctest.h>

#include <algorithm>
#include <random>

#include "sylchar/bell.hpp"
#include "sylchar/level_poly.hpp"
#include "sylchar/set_partition.hpp"

using namespace sylchar;
using namespace sylchar::combinat;

namespace {

SetPartition sp(std::vector<std::vector<int>> blocks) { return SetPartition(std::move(blocks)); }

}  // namespace

TEST_CASE("partition enumeration matches the known small lists") {
    const auto parts3 = enumerate_partitions(3);
    REQUIRE(parts3.size() == 5);
    CHECK(parts3.front() == sp({{1, 2, 3}}));  // growth strings start all-zero
    // The five partitions of {1,2,3}, each exactly once.
    CHECK(std::count(parts3.begin(), parts3.end(), sp({{1, 2, 3}})) == 1);
    CHECK(std::count(parts3.begin(), parts3.end(), sp({{1, 2}, {3}})) == 1);
    CHECK(std::count(parts3.begin(), parts3.end(), sp({{1, 3}, {2}})) == 1);
    CHECK(std::count(parts3.begin(), parts3.end(), sp({{2, 3}, {1}})) == 1);
    CHECK(std::count(parts3.begin(), parts3.end(), sp({{1}, {2}, {3}})) == 1);

    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(6).size() == 203);
    CHECK_THROWS_AS(enumerate_partitions(0), DomainError);
    CHECK_THROWS_AS(enumerate_partitions(13), DomainError);
}

TEST_CASE("partition counts equal Bell numbers from the triangle recurrence") {
    for (int b = 1; b <= 8; ++b)
        CHECK(BigInt(enumerate_partitions(b).size()) == bell_number(b));
    CHECK(bell_number(12) == BigInt("4213597"));
}

TEST_CASE("canonical form is unique") {
    CHECK(sp({{3}, {1, 2}}) == sp({{2, 1}, {3}}));
    CHECK(sp({{1, 3}, {2}}) != sp({{1, 2}, {3}}));
    CHECK_THROWS_AS(sp({{1, 2}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(sp({{1}, {3}}), DomainError);
    CHECK_THROWS_AS(sp({{1}, {}}), DomainError);
}

TEST_CASE("refinement order") {
    const auto nu = sp({{1, 2}, {3}, {4}, {5}, {6}});
    const auto lambda = sp({{1, 2, 3}, {4, 5, 6}});
    CHECK(refines(nu, lambda));
    CHECK(refines(nu, nu));
    CHECK_FALSE(refines(lambda, nu));
    CHECK_FALSE(refines(sp({{1, 3}, {2}}), sp({{1, 2}, {3}})));
    CHECK_THROWS_AS(refines(sp({{1}, {2}}), sp({{1, 2, 3}})), DomainError);
}

TEST_CASE("refinement is a partial order on all pairs for b <= 5") {
    for (int b = 1; b <= 5; ++b) {
        const auto all = enumerate_partitions(b);
        for (const auto& x : all) {
            CHECK(refines(x, x));
            for (const auto& y : all) {
                if (refines(x, y) && refines(y, x)) CHECK(x == y);
                for (const auto& z : all)
                    if (refines(x, y) && refines(y, z)) CHECK(refines(x, z));
            }
        }
    }
}

TEST_CASE("block multiplicities") {
    const auto nu = sp({{1, 2}, {3}, {4}, {5}, {6}});
    const auto lambda = sp({{1, 2, 3}, {4, 5, 6}});
    CHECK(multiplicity(nu, lambda, {1, 2, 3}) == 2);
    CHECK(multiplicity(nu, lambda, {4, 5, 6}) == 3);
    CHECK(multiplicity(lambda, lambda, {1, 2, 3}) == 1);
    CHECK_THROWS_AS(multiplicity(nu, lambda, {1, 2}), DomainError);
    CHECK_THROWS_AS(multiplicity(lambda, nu, {1, 2}), DomainError);
}

TEST_CASE("cuts") {
    const auto alpha = sp({{1, 2}, {3, 4, 5}});
    const auto two_cuts = cuts(alpha, 2);
    const auto beta = sp({{1}, {2}, {4}, {3, 5}});
    CHECK(std::count(two_cuts.begin(), two_cuts.end(), beta) == 1);
    for (const auto& cut : two_cuts) {
        CHECK(refines(cut, alpha));
        CHECK(cut.size() == alpha.size() + 2);
    }

    CHECK(cuts(alpha, 0) == std::vector<SetPartition>{alpha});
    CHECK(cuts(sp({{1, 2, 3, 4}}), 1).size() == 7);  // 2^{4-1} - 1 two-block splits
    CHECK(cuts(alpha, 5).empty());
}

TEST_CASE("complete Bell polynomial") {
    // B_4(x1,x2,x3,x4) = x1^4 + 6x1^2x2 + 4x1x3 + 3x2^2 + x4 at all-ones.
    const std::vector<Rational> ones(4, Rational(1));
    CHECK(complete_bell(4, ones) == 15);
    CHECK(complete_bell_determinant(4, ones) == 15);
    CHECK(complete_bell(1, {Rational(7)}) == 7);

    // Vanishes at x_i = -(i-1)! for every degree from 2 up.
    for (int m = 2; m <= kMaxBellDegree; ++m) {
        std::vector<Rational> xs;
        BigInt fact = 1;
        for (int i = 1; i <= m; ++i) {
            xs.push_back(Rational(-fact));
            fact *= i;
        }
        CAPTURE(m);
        CHECK(complete_bell(m, xs) == 0);
        if (m <= 8) CHECK(complete_bell_determinant(m, xs) == 0);
    }
    CHECK_THROWS_AS(complete_bell(13, std::vector<Rational>(13, Rational(1))), DomainError);
}

TEST_CASE("partition route and determinant route agree") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int m = 1; m <= 8; ++m)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> xs;
            for (int i = 0; i < m; ++i) xs.push_back(Rational(coeff(rng)));
            CHECK(complete_bell(m, xs) == complete_bell_determinant(m, xs));
        }
}

TEST_CASE("signed partition sum") {
    CHECK(signed_partition_sum(1) == -1);
    for (int n = 2; n <= kMaxPartitionGround; ++n) {
        CAPTURE(n);
        CHECK(signed_partition_sum(n) == 0);
    }
    // Stirling route agrees with direct enumeration.
    for (int n = 1; n <= 9; ++n)
        CHECK(signed_partition_sum(n) == signed_partition_sum_enumerated(n));
    CHECK_THROWS_AS(signed_partition_sum(13), DomainError);
}

TEST_CASE("suffix-sum products M") {
    const LevelSet ls(3, {1, 2, 3});
    CHECK(m_product(ls, {1}) == 1);
    CHECK(m_product(ls, {2}) == 1);
    CHECK(m_product(ls, {1, 2}) == 9);
    CHECK(m_product(ls, {1, 2, 3}) == 972);  // 27 * (27 + 9)
    CHECK_THROWS_AS(m_product(ls, {}), DomainError);
    CHECK_THROWS_AS(m_product(ls, {4}), DomainError);
}

TEST_CASE("R polynomials") {
    {
        const LevelSet ls(3, {1, 2});
        const auto poly = r_polynomial(ls, {1, 2});
        CHECK(poly.coefficient(1) == 1);
        CHECK(poly.coefficient(0) == -9);
        CHECK(poly.degree() == 1);
        CHECK(r_polynomial(ls, {1}) == PolyInPk(Rational(1)));
    }
    {
        const LevelSet ls(3, {1, 2, 3});
        const auto poly = r_polynomial(ls, {1, 2, 3});
        CHECK(poly.coefficient(2) == 1);
        CHECK(poly.coefficient(1) == -63);
        CHECK(poly.coefficient(0) == 972);
        CHECK(r_value(ls, {1, 2, 3}, 4) == (81 - 27) * (81 - 36));
        CHECK_THROWS_AS(r_value(ls, {1, 2, 3}, 2), DomainError);
    }
}

TEST_CASE("cut coefficients") {
    const LevelSet ls(3, {1, 2, 3, 4, 5});
    const auto alpha = sp({{1, 2}, {3, 4, 5}});
    // Constant coefficient: -p_2 p_5 (p_5 + p_4).
    CHECK(m_coefficient(ls, alpha, 0) == BigInt(-708588));
    // Degrees above sum(|tau| - 1) vanish.
    CHECK(m_coefficient(ls, alpha, 4) == 0);

    // Cut expansion of the first coefficient of the full-set polynomial.
    const LevelSet small(3, {1, 2, 3});
    const auto full = SetPartition::full(3);
    BigInt rhs = 0;
    for (const auto& mu : cuts(full, 1)) rhs += m_coefficient(small, mu, 0);
    CHECK(m_coefficient(small, full, 1) == rhs);
    CHECK(m_coefficient(small, full, 1) == -63);
}

TEST_CASE("theta literal equals closed form on a dense grid") {
    for (const std::int64_t p : {3, 5}) {
        for (int b = 1; b <= 4; ++b) {
            std::vector<int> levels;
            for (int l = 1; l <= b; ++l) levels.push_back(l);
            const LevelSet ls(p, levels);
            for (const auto& lambda : enumerate_partitions(b))
                for (int k = b; k <= b + 3; ++k) {
                    CAPTURE(p);
                    CAPTURE(b);
                    CAPTURE(k);
                    CHECK(theta_literal(ls, lambda, k) == theta_closed(ls, lambda, k));
                }
        }
    }
}
