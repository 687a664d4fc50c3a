#include <doctest.h>

#include <optional>
#include <vector>

#include "sylchar/char_eval.hpp"
#include "sylchar/closed_forms.hpp"
#include "sylchar/cyc_int.hpp"
#include "sylchar/verify.hpp"
#include "sylchar/wreath.hpp"

using namespace sylchar;
using namespace sylchar::chars;
using sylow::CycleType;
using sylow::WreathElem;

namespace {

WreathElem p3_gen(int e) { return WreathElem({WreathElem(), WreathElem(), WreathElem()}, e); }

std::vector<BitSeq> all_bits(int k) {
    std::vector<BitSeq> out;
    for (int mask = 0; mask < (1 << k); ++mask) {
        BitSeq u(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) u[static_cast<size_t>(j)] = (mask >> j) & 1;
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace

TEST_CASE("cyclotomic integers") {
    const auto zeta = CycInt::root_of_unity(3, 1);
    CHECK(zeta.coords() == std::vector<BigInt>({0, 1}));
    CHECK(zeta * zeta == CycInt::root_of_unity(3, 2));
    CHECK(zeta * zeta * zeta == CycInt::from_integer(3, 1));
    CHECK((zeta + zeta * zeta) == CycInt::from_integer(3, -1));
    CHECK_FALSE(zeta.is_rational());
    CHECK((zeta + zeta * zeta).rational_part() == -1);

    // p = 2: zeta is -1.
    CHECK(CycInt::root_of_unity(2, 1) * CycInt::root_of_unity(2, 1) ==
          CycInt::from_integer(2, 1));
    CHECK(CycInt::root_of_unity(2, 3).rational_part() == -1);

    const auto z5 = CycInt::root_of_unity(5, 4);
    CHECK(z5 * CycInt::root_of_unity(5, 1) == CycInt::from_integer(5, 1));
}

TEST_CASE("C factors") {
    CHECK(c_factor(3, 1, {1}) == Rational(2, 3));
    CHECK(c_factor(3, 1, {0}) == Rational(-1, 3));
    CHECK(c_factor(3, 2, {1, 1}) == 4);
    CHECK(c_factor(2, 1, {1}) == Rational(1, 2));
    // Independent of every bit beyond position l.
    for (const auto& u : all_bits(4))
        for (int l = 1; l <= 3; ++l) {
            BitSeq padded = u;
            padded[3] ^= 1;
            CHECK(c_factor(3, l, u) == c_factor(3, l, padded));
        }
    CHECK_THROWS_AS(c_factor(3, 3, {1, 1}), DomainError);
}

TEST_CASE("character evaluation on wreath elements") {
    // Nontrivial level-1 character sends the generator to zeta.
    const CharSpec nontrivial(3, {{0}});
    CHECK(char_eval(nontrivial, p3_gen(1)) == CycInt::root_of_unity(3, 1));
    CHECK(char_eval(nontrivial, p3_gen(2)) == CycInt::root_of_unity(3, 2));

    // Exponent 2 picks the other nontrivial character.
    const CharSpec other(3, {{0}}, {{2}});
    CHECK(char_eval(other, p3_gen(1)) == CycInt::root_of_unity(3, 2));

    // The trivial character is 1 everywhere.
    const CharSpec trivial(3, {{1, 1}});
    sylow::enumerate_sylow(3, 2, 1000, [&](const WreathElem& x) {
        CHECK(char_eval(trivial, x) == CycInt::from_integer(3, 1));
    });

    // Summing the trivial character over a class counts its elements.
    CycInt sum = CycInt::zero(3);
    sylow::class_intersection(3, 2, CycleType::with_fixed_points(9, {3}), 1000,
                              [&](const WreathElem& x) { sum += char_eval(trivial, x); });
    CHECK(sum.rational_part() == 6);

    CHECK_THROWS_AS(char_eval(trivial, p3_gen(0)), DomainError);  // level mismatch
}

TEST_CASE("character evaluation on product elements") {
    const CharSpec two_rows(3, {{0}, {0}});
    const sylow::ProductElem x = {p3_gen(1), p3_gen(1)};
    CHECK(char_eval_product(two_rows, x) == CycInt::root_of_unity(3, 2));

    const CharSpec trivial(3, {{1}, {1}});
    CHECK(char_eval_product(trivial, x) == CycInt::from_integer(3, 1));
    const sylow::ProductElem id = {WreathElem::identity(3, 1), WreathElem::identity(3, 1)};
    CHECK(char_eval_product(two_rows, id) == CycInt::from_integer(3, 1));

    CHECK_THROWS_AS(char_eval_product(two_rows, {p3_gen(1)}), DomainError);
}

TEST_CASE("base values of single-cycle class sums") {
    for (const std::int64_t p : {2, 3, 5, 7}) {
        CHECK(gamma_closed(p, 1, {1}, {1}) == p - 1);
        CHECK(gamma_closed(p, 1, {1}, {0}) == -1);
        CHECK(gamma_recursive(p, 1, {1}, {1}) == p - 1);
        CHECK(gamma_recursive(p, 1, {1}, {0}) == -1);
    }
}

TEST_CASE("closed form spot values") {
    CHECK(gamma_closed(3, 2, {1}, {1, 0}) == 6);
    CHECK(gamma_closed(3, 2, {1}, {1, 1}) == 6);
    CHECK(gamma_closed(3, 2, {1}, {0, 0}) == -3);
    CHECK(gamma_closed(3, 2, {2}, {1, 1}) == 36);
    CHECK(gamma_recursive(3, 2, {2}, {1, 1}) == 36);
    CHECK(gamma_closed(3, 2, {1, 2}, {1, 1}) == 0);  // 3 + 9 > 9
    CHECK(gamma_closed(3, 3, {1, 2}, {1, 1, 0}) == 1296);
    CHECK(gamma_closed(3, 3, {1, 2}, {1, 1, 1}) == 1296);
    CHECK(gamma_recursive(3, 3, {1, 2}, {1, 1, 0}) == 1296);
    CHECK_THROWS_AS(gamma_closed(3, 3, {1, 2, 3}, {1, 1, 1}), DomainError);  // b >= p
    CHECK_THROWS_AS(gamma_closed(3, 2, {1, 1}, {1, 1}), DomainError);  // repeated level
}

TEST_CASE("closed and recursive routes agree everywhere") {
    for (const std::int64_t p : {2, 3, 5}) {
        const int k_cap = p == 5 ? 4 : 6;
        for (int k = 1; k <= k_cap; ++k) {
            std::vector<std::vector<int>> lists;
            const int max_b = std::min<int>(static_cast<int>(p) - 1, 3);
            std::vector<int> current;
            auto rec = [&](auto&& self, int next) -> void {
                if (!current.empty()) lists.push_back(current);
                if (static_cast<int>(current.size()) == max_b) return;
                for (int l = next; l <= k; ++l) {
                    current.push_back(l);
                    self(self, l + 1);
                    current.pop_back();
                }
            };
            rec(rec, 1);
            for (const auto& u : all_bits(k))
                for (const auto& levels : lists) {
                    CAPTURE(p);
                    CAPTURE(k);
                    CHECK(gamma_closed(p, k, levels, u) == gamma_recursive(p, k, levels, u));
                }
        }
    }
}

TEST_CASE("suffix bits beyond the largest level never matter") {
    for (const auto& u : all_bits(4)) {
        BitSeq flipped = u;
        flipped[3] ^= 1;
        CHECK(gamma_closed(3, 4, {1, 2}, u) == gamma_closed(3, 4, {1, 2}, flipped));
        CHECK(gamma_recursive(3, 4, {1, 2}, u) == gamma_recursive(3, 4, {1, 2}, flipped));
        CHECK(gamma_pair(3, 4, 2, u) == gamma_pair(3, 4, 2, flipped));
    }
}

TEST_CASE("pair class sums") {
    CHECK(gamma_pair(3, 2, 1, {1, 0}) == 12);
    CHECK(gamma_pair(3, 2, 1, {0, 0}) == 3);
    CHECK(gamma_pair(3, 2, 2, {1, 1}) == 0);  // l = k
    CHECK_THROWS_AS(gamma_pair(2, 3, 1, {1, 1, 1}), DomainError);

    // Recurrence: split the two cycles over coordinates or keep them
    // together one level down.
    for (const std::int64_t p : {3, 5})
        for (int k = 2; k <= 4; ++k)
            for (int l = 1; l < k; ++l)
                for (const auto& u : all_bits(k)) {
                    const Rational lhs = gamma_pair(p, k, l, u);
                    const BitSeq shorter(u.begin(), u.end() - 1);
                    const Rational rhs =
                        Rational(p * (p - 1), 2) * gamma_closed(p, k - 1, {l}, shorter) *
                            gamma_closed(p, k - 1, {l}, shorter) +
                        Rational(p) * gamma_pair(p, k - 1, l, shorter);
                    CHECK(lhs == rhs);
                    CHECK(lhs == gamma_pair_recursive(p, k, l, u));
                }
}

TEST_CASE("class sums at a single row reduce to gamma") {
    for (int k = 1; k <= 3; ++k) {
        const std::int64_t n = pow_int(3, static_cast<std::uint64_t>(k)).convert_to<std::int64_t>();
        for (const auto& u : all_bits(k)) {
            const CharSpec spec(3, {u});
            for (int l = 1; l <= k; ++l) {
                const auto ct = CycleType::with_fixed_points(
                    n, {pow_int(3, static_cast<std::uint64_t>(l)).convert_to<std::int64_t>()});
                CHECK(class_sum(spec, ct) == gamma_closed(3, k, {l}, u));
            }
            if (k >= 3) {
                const auto ct = CycleType::with_fixed_points(n, {3, 9});
                CHECK(class_sum(spec, ct) == gamma_closed(3, k, {1, 2}, u));
            }
        }
    }
}

TEST_CASE("multi-row class sum matches the explicit three-cycle expansion") {
    // p = 5, k = 3, two rows; cycle type (5, 25, 125) plus fixed points.
    const std::int64_t p = 5;
    const int k = 3;
    const BitSeq r1 = {1, 0, 1}, r2 = {0, 1, 1};
    const CharSpec spec(p, {r1, r2});
    const auto ct = CycleType::with_fixed_points(2 * 125, {5, 25, 125});

    const Rational c1 = c_factor(p, 1, r1) + c_factor(p, 1, r2);
    const Rational c2 = c_factor(p, 2, r1) + c_factor(p, 2, r2);
    const Rational c3 = c_factor(p, 3, r1) + c_factor(p, 3, r2);
    const Rational c12 =
        c_factor(p, 1, r1) * c_factor(p, 2, r1) + c_factor(p, 1, r2) * c_factor(p, 2, r2);
    const Rational c13 =
        c_factor(p, 1, r1) * c_factor(p, 3, r1) + c_factor(p, 1, r2) * c_factor(p, 3, r2);
    const Rational c23 =
        c_factor(p, 2, r1) * c_factor(p, 3, r1) + c_factor(p, 2, r2) * c_factor(p, 3, r2);
    const Rational c123 = c_factor(p, 1, r1) * c_factor(p, 2, r1) * c_factor(p, 3, r1) +
                          c_factor(p, 1, r2) * c_factor(p, 2, r2) * c_factor(p, 3, r2);

    const BigInt pk = pow_int(p, k), p2 = 25, p3 = 125;
    const Rational expected = Rational(pk * pk * pk) * c1 * c2 * c3 -
                              Rational(pk * pk * p2) * c12 * c3 -
                              Rational(pk * pk * p3) * c13 * c2 -
                              Rational(pk * pk * p3) * c23 * c1 +
                              Rational(pk * p3 * (p3 + p2)) * c123;
    CHECK(class_sum(spec, ct) == expected);
    CHECK(class_sum_recursive(spec, ct) == expected);
}

TEST_CASE("three enumeration-free routes agree with the brute-force oracle") {
    // Single factor, all of P_9.
    for (const auto& u : all_bits(2)) {
        const CharSpec spec(3, {u});
        for (const auto& parts : std::vector<std::vector<std::int64_t>>{{}, {3}, {9}, {3, 3}}) {
            const auto ct = CycleType::with_fixed_points(9, parts);
            const Rational oracle = class_sum_oracle(spec, ct, 1000);
            CHECK(class_sum(spec, ct) == oracle);
            CHECK(class_sum_recursive(spec, ct) == oracle);
        }
    }
    // Two factors, all of P_3 x P_3 (n = 6).
    for (const auto& u1 : all_bits(1))
        for (const auto& u2 : all_bits(1)) {
            const CharSpec spec(3, {u1, u2});
            for (const auto& parts : std::vector<std::vector<std::int64_t>>{{}, {3}, {3, 3}}) {
                const auto ct = CycleType::with_fixed_points(6, parts);
                const Rational oracle = class_sum_oracle(spec, ct, 1000);
                CHECK(class_sum(spec, ct) == oracle);
                CHECK(class_sum_recursive(spec, ct) == oracle);
            }
        }
    // p = 2 towers: single-cycle types only.
    for (int k = 1; k <= 3; ++k) {
        const std::int64_t n = pow_int(2, static_cast<std::uint64_t>(k)).convert_to<std::int64_t>();
        for (const auto& u : all_bits(k)) {
            const CharSpec spec(2, {u});
            for (int l = 1; l <= k; ++l) {
                const auto ct = CycleType::with_fixed_points(
                    n, {pow_int(2, static_cast<std::uint64_t>(l)).convert_to<std::int64_t>()});
                const Rational oracle = class_sum_oracle(spec, ct, 100000);
                CHECK(class_sum(spec, ct) == oracle);
                CHECK(class_sum_recursive(spec, ct) == oracle);
            }
        }
    }
}

TEST_CASE("induced character values") {
    const CharSpec trivial(3, {{1, 1}});
    const auto t3 = CycleType::with_fixed_points(9, {3});
    const auto t33 = CycleType::with_fixed_points(9, {3, 3});

    for (const auto mode : {EvalMode::kClosed, EvalMode::kRecursive, EvalMode::kOracle}) {
        CHECK(induced_value(trivial, t3, mode, 1000).value == 160);
        CHECK(induced_value(trivial, t33, mode, 1000).value == 16);
    }
    CHECK(induced_value(CharSpec(3, {{0, 0}}), t3, EvalMode::kOracle, 1000).value == -80);
    CHECK(induced_value(CharSpec(3, {{0, 1}}), t3, EvalMode::kClosed, 1000).value == -80);

    // Sign character of S_2.
    const CharSpec sign(2, {{0}});
    CHECK(induced_value(sign, CycleType(2, {2}), EvalMode::kAuto, 100).value == -1);

    // auto prefers the closed form and falls back to the oracle for repeated
    // parts beyond a pair.
    const auto via_auto = induced_value(trivial, t3, EvalMode::kAuto, 1000);
    CHECK(eval_mode_name(via_auto.mode_used) == "closed");
    const CharSpec two_rows(3, {{1, 1}, {1, 1}});
    const auto t333 = CycleType::with_fixed_points(18, {3, 3, 3});
    CHECK_THROWS_AS(class_sum(two_rows, t333), UnsupportedCycleType);
    const auto fallback = induced_value(two_rows, t333, EvalMode::kAuto, 10000);
    CHECK(eval_mode_name(fallback.mode_used) == "oracle");
}

TEST_CASE("exponent choices never change induced values") {
    const std::vector<std::vector<std::int64_t>> types = {{}, {3}, {9}, {3, 3}, {3, 3, 3}};
    for (const auto& u : all_bits(2)) {
        std::vector<std::vector<int>> exp_choices = {{1, 1}};
        if (u[0] == 0 || u[1] == 0) exp_choices = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
        for (const auto& parts : types) {
            const auto ct = CycleType::with_fixed_points(9, parts);
            std::optional<Rational> reference;
            for (const auto& exps : exp_choices) {
                const CharSpec spec(3, {u}, {exps});
                const auto value = induced_value(spec, ct, EvalMode::kOracle, 1000);
                if (!reference)
                    reference = value.value;
                else
                    CHECK(*reference == value.value);
            }
        }
    }
}

TEST_CASE("nonvanishing on full cycle types") {
    CHECK(induced_nonzero_check(CharSpec(3, {{1}})) == 2);
    CHECK(induced_nonzero_check(CharSpec(3, {{0}})) == -1);
    // Matches the oracle at n = 9.
    for (const auto& u : all_bits(2)) {
        const CharSpec spec(3, {u});
        const auto ct = CycleType(9, {9});
        CHECK(induced_nonzero_check(spec) ==
              induced_value(spec, ct, EvalMode::kOracle, 1000).value);
    }
}

TEST_CASE("regression: characters of P_54 that agree on all single cycles") {
    const CharSpec s(3, {{1, 0, 0}, {0, 1, 1}});
    const CharSpec t(3, {{1, 0, 1}, {0, 1, 0}});
    const BigInt three12 = pow_int(3, 12);

    const auto type = [](std::vector<std::int64_t> parts) {
        return CycleType::with_fixed_points(54, std::move(parts));
    };
    // Agreement on single cycles and on equal pairs.
    for (const std::int64_t part : {3, 9, 27})
        CHECK(class_sum(s, type({part})) == class_sum(t, type({part})));
    for (const std::int64_t part : {3, 9, 27})
        CHECK(class_sum(s, type({part, part})) == class_sum(t, type({part, part})));
    // Divergence at the mixed type {3, 27}.
    CHECK(class_sum(s, type({3, 27})) == Rational(-10 * three12));
    CHECK(class_sum(t, type({3, 27})) == Rational(8 * three12));

    // The factorized bucket oracle confirms all of the above.
    const auto buckets = sylow::bucket_sylow(3, 3, sylow::kDefaultElementBudget, 2);
    for (const auto& parts : std::vector<std::vector<std::int64_t>>{
             {3}, {9}, {27}, {3, 3}, {9, 9}, {27, 27}, {3, 27}, {3, 9}, {9, 27}}) {
        const auto ct = type(parts);
        CHECK(verify::bucketed_class_sum(s, ct, buckets) == class_sum(s, ct));
        CHECK(verify::bucketed_class_sum(t, ct, buckets) == class_sum(t, ct));
    }
}
