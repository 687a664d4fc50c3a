#include "sylchar/closed_forms.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sylchar/char_eval.hpp"
#include "sylchar/cyc_int.hpp"
#include "sylchar/level_poly.hpp"
#include "sylchar/padic.hpp"
#include "sylchar/set_partition.hpp"
#include "sylchar/wreath.hpp"

namespace sylchar::chars {

using combinat::LevelSet;
using combinat::SetPartition;

Rational c_factor(std::int64_t p, int l, const BitSeq& u) {
    require_prime(p);
    if (l < 1 || l > static_cast<int>(u.size()))
        throw DomainError("c_factor: l must be in [1, k]");
    const BigInt exponent_big =
        (pow_int(p, static_cast<std::uint64_t>(l)) - 1) / (p - 1) - 2 * l;
    if (exponent_big > 1000000 || exponent_big < -1000000)
        throw DomainError("c_factor: exponent out of practical range");
    Rational value = pow_rational(p, exponent_big.convert_to<std::int64_t>());
    for (int m = 1; m <= l; ++m)
        value *= p * static_cast<std::int64_t>(u[static_cast<size_t>(m - 1)]) - 1;
    return value;
}

namespace {

/// Validated, sorted distinct levels for a Gamma evaluation.
std::vector<int> checked_levels(std::int64_t p, const std::vector<int>& levels) {
    if (levels.empty()) throw DomainError("gamma: at least one cycle level required");
    if (static_cast<std::int64_t>(levels.size()) >= p)
        throw DomainError("gamma: needs at most p-1 distinct cycle lengths");
    std::vector<int> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1) throw DomainError("gamma: levels must be positive");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw DomainError("gamma: repeated cycle length; use gamma_pair");
    }
    return sorted;
}

bool lengths_exceed(std::int64_t p, int k, const std::vector<int>& sorted_levels) {
    BigInt sum = 0;
    for (const int l : sorted_levels) sum += pow_int(p, static_cast<std::uint64_t>(l));
    return sum > pow_int(p, static_cast<std::uint64_t>(k));
}

std::string memo_key(std::int64_t p, int k, const std::vector<int>& levels, const BitSeq& u) {
    // Gamma for levels up to l depends only on u_1..u_l, so the key trims
    // the sequence to the largest level and the cache stays dense.
    std::string key = std::to_string(p) + "|" + std::to_string(k) + "|";
    for (const int l : levels) key += std::to_string(l) + ",";
    key += "|";
    const int max_level = levels.back();
    for (int m = 0; m < max_level; ++m) key += static_cast<char>('0' + u[static_cast<size_t>(m)]);
    return key;
}

Rational gamma_rec_impl(std::int64_t p, int k, const std::vector<int>& levels, const BitSeq& u,
                        std::unordered_map<std::string, Rational>& memo) {
    if (lengths_exceed(p, k, levels)) return 0;
    const std::string key = memo_key(p, k, levels, u);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    Rational value;
    const int b = static_cast<int>(levels.size());
    if (b == 1) {
        const int l = levels.front();
        if (k == 1) {
            value = Rational(p * static_cast<std::int64_t>(u[0]) - 1);
        } else if (l == k) {
            // A long cycle forces a nontrivial top; the children contribute a
            // shorter long cycle through their twisted product.
            const BigInt free_choices =
                pow_int(p, (pow_int(p, static_cast<std::uint64_t>(k - 1)) - 1)
                               .convert_to<std::uint64_t>());
            value = Rational(free_choices) *
                    gamma_rec_impl(p, k - 1, {k - 1}, u, memo) *
                    (p * static_cast<std::int64_t>(u[static_cast<size_t>(k - 1)]) - 1);
        } else {
            // A short cycle lives in one of the p coordinates of a
            // top-trivial element.
            value = Rational(p) * gamma_rec_impl(p, k - 1, {l}, u, memo);
        }
    } else {
        // Distribute the b cycle lengths over the p coordinates: a partition
        // of the length set, weighted by the injective placements.
        value = 0;
        for (const auto& nu : combinat::enumerate_partitions(b)) {
            Rational term = Rational(falling_factorial(static_cast<unsigned>(p),
                                                       static_cast<unsigned>(nu.size())));
            for (const auto& block : nu.blocks()) {
                std::vector<int> sub;
                sub.reserve(block.size());
                for (const int w : block) sub.push_back(levels[static_cast<size_t>(w - 1)]);
                term *= gamma_rec_impl(p, k - 1, sub, u, memo);
                if (term == 0) break;
            }
            value += term;
        }
    }
    memo.emplace(key, value);
    return value;
}

}  // namespace

Rational gamma_closed(std::int64_t p, int k, const std::vector<int>& levels, const BitSeq& u) {
    require_prime(p);
    if (k < 1 || static_cast<int>(u.size()) != k)
        throw DomainError("gamma_closed: sequence length must equal k >= 1");
    const auto sorted = checked_levels(p, levels);
    if (lengths_exceed(p, k, sorted)) return 0;
    Rational value = Rational(pow_int(p, static_cast<std::uint64_t>(k)));
    for (const int l : sorted) value *= c_factor(p, l, u);
    if (sorted.size() > 1) {
        const LevelSet ls(p, sorted);
        std::vector<int> all(sorted.size());
        for (size_t i = 0; i < sorted.size(); ++i) all[i] = static_cast<int>(i) + 1;
        value *= Rational(combinat::r_value(ls, all, k));
    }
    return value;
}

Rational gamma_recursive(std::int64_t p, int k, const std::vector<int>& levels, const BitSeq& u) {
    require_prime(p);
    if (k < 1 || static_cast<int>(u.size()) != k)
        throw DomainError("gamma_recursive: sequence length must equal k >= 1");
    const auto sorted = checked_levels(p, levels);
    thread_local std::unordered_map<std::string, Rational> memo;
    return gamma_rec_impl(p, k, sorted, u, memo);
}

Rational gamma_pair(std::int64_t p, int k, int l, const BitSeq& u) {
    require_prime(p);
    if (p == 2) throw DomainError("gamma_pair: pair cycle types need an odd prime");
    if (k < 1 || static_cast<int>(u.size()) != k)
        throw DomainError("gamma_pair: sequence length must equal k >= 1");
    if (l < 1) throw DomainError("gamma_pair: level must be positive");
    if (l > k) return 0;
    const BigInt pk = pow_int(p, static_cast<std::uint64_t>(k));
    const BigInt pl = pow_int(p, static_cast<std::uint64_t>(l));
    const Rational c = c_factor(p, l, u);
    return Rational(pk * (pk - pl), 2) * c * c;
}

Rational gamma_pair_recursive(std::int64_t p, int k, int l, const BitSeq& u) {
    require_prime(p);
    if (p == 2) throw DomainError("gamma_pair_recursive: pair cycle types need an odd prime");
    if (k < 1 || static_cast<int>(u.size()) != k)
        throw DomainError("gamma_pair_recursive: sequence length must equal k >= 1");
    if (l < 1) throw DomainError("gamma_pair_recursive: level must be positive");
    if (l >= k) return 0;
    const BitSeq prefix(u.begin(), u.end() - 1);
    const Rational single = gamma_recursive(p, k - 1, {l}, prefix);
    return Rational(p * (p - 1), 2) * single * single +
           Rational(p) * gamma_pair_recursive(p, k - 1, l, prefix);
}

namespace {

/// Normalized view of a cycle type inside P_{a p^k}: the levels of its
/// nontrivial p-power parts, ascending, with repeats.
struct TypeShape {
    std::vector<int> levels;
    bool p_power = true;  // false when some part is not a power of p
};

TypeShape type_shape(std::int64_t p, int k, const sylow::CycleType& ct) {
    TypeShape shape;
    for (const auto part : ct.nontrivial_parts()) {
        std::int64_t v = part;
        int level = 0;
        while (v % p == 0) {
            v /= p;
            ++level;
        }
        if (v != 1) {
            shape.p_power = false;
            return shape;
        }
        shape.levels.push_back(level);
    }
    (void)k;
    std::sort(shape.levels.begin(), shape.levels.end());
    return shape;
}

bool all_distinct(const std::vector<int>& levels) {
    for (size_t i = 1; i < levels.size(); ++i)
        if (levels[i] == levels[i - 1]) return false;
    return true;
}

void check_spec_type(const CharSpec& spec, const sylow::CycleType& ct) {
    if (ct.degree != spec.n())
        throw DomainError("cycle type degree " + std::to_string(ct.degree) +
                          " does not match the character's group degree " +
                          std::to_string(spec.n()));
}

Rational sum_c_products(const CharSpec& spec, const std::vector<int>& levels,
                        const std::vector<int>& subset) {
    Rational sum = 0;
    for (int i = 0; i < spec.a(); ++i) {
        Rational prod = 1;
        for (const int t : subset)
            prod *= c_factor(spec.p, levels[static_cast<size_t>(t - 1)], spec.row(i));
        sum += prod;
    }
    return sum;
}

/// Class sum for distinct levels by the partition expansion: a signed sum of
/// p^{k|nu|} prod_tau [ M(tau) * sum_i prod_{t in tau} C_t(i) ].
Rational class_sum_distinct(const CharSpec& spec, const std::vector<int>& levels) {
    const int b = static_cast<int>(levels.size());
    const int k = spec.k();
    const LevelSet ls(spec.p, levels);
    Rational total = 0;
    for (const auto& nu : combinat::enumerate_partitions(b)) {
        Rational term(pow_int(spec.p, static_cast<std::uint64_t>(k) *
                                          static_cast<std::uint64_t>(nu.size())));
        for (const auto& tau : nu.blocks())
            term *= Rational(combinat::m_product(ls, tau)) * sum_c_products(spec, levels, tau);
        total += ((b - nu.size()) % 2 == 0) ? term : -term;
    }
    return total;
}

Rational class_sum_pair_closed(const CharSpec& spec, int l) {
    if (spec.p == 2)
        throw UnsupportedCycleType(
            "no closed form for a pair of equal cycle lengths at p = 2; use the oracle");
    const int k = spec.k();
    if (l > k) return 0;
    Rational sum_c = 0, sum_c2 = 0;
    for (int i = 0; i < spec.a(); ++i) {
        const Rational c = c_factor(spec.p, l, spec.row(i));
        sum_c += c;
        sum_c2 += c * c;
    }
    const BigInt pk = pow_int(spec.p, static_cast<std::uint64_t>(k));
    const BigInt pl = pow_int(spec.p, static_cast<std::uint64_t>(l));
    if (l == k) return Rational(pk * pk, 2) * (sum_c * sum_c - sum_c2);
    return Rational(pk * pk, 2) * sum_c * sum_c - Rational(pk * pl, 2) * sum_c2;
}

}  // namespace

Rational class_sum(const CharSpec& spec, const sylow::CycleType& ct) {
    check_spec_type(spec, ct);
    const auto shape = type_shape(spec.p, spec.k(), ct);
    if (!shape.p_power) return 0;
    if (shape.levels.empty()) return 1;  // identity class
    for (const int l : shape.levels)
        if (l > spec.k()) return 0;  // a cycle longer than p^k fits in no factor

    if (all_distinct(shape.levels)) {
        if (static_cast<std::int64_t>(shape.levels.size()) >= spec.p)
            throw UnsupportedCycleType(
                "no closed form for " + std::to_string(shape.levels.size()) +
                " distinct cycle lengths at p = " + std::to_string(spec.p) +
                "; use the oracle");
        return class_sum_distinct(spec, shape.levels);
    }
    if (shape.levels.size() == 2 && shape.levels[0] == shape.levels[1])
        return class_sum_pair_closed(spec, shape.levels[0]);
    throw UnsupportedCycleType("no closed form for cycle type " + ct.to_string() +
                               "; use the oracle");
}

Rational class_sum_recursive(const CharSpec& spec, const sylow::CycleType& ct) {
    check_spec_type(spec, ct);
    const auto shape = type_shape(spec.p, spec.k(), ct);
    if (!shape.p_power) return 0;
    if (shape.levels.empty()) return 1;
    for (const int l : shape.levels)
        if (l > spec.k()) return 0;

    const int a = spec.a();
    const int k = spec.k();
    if (shape.levels.size() == 2 && shape.levels[0] == shape.levels[1]) {
        if (spec.p == 2)
            throw UnsupportedCycleType("no recursive pair form at p = 2; use the oracle");
        const int l = shape.levels[0];
        Rational total = 0;
        for (int i = 0; i < a; ++i) {
            for (int j = i + 1; j < a; ++j)
                total += gamma_recursive(spec.p, k, {l}, spec.row(i)) *
                         gamma_recursive(spec.p, k, {l}, spec.row(j));
            total += gamma_pair_recursive(spec.p, k, l, spec.row(i));
        }
        return total;
    }
    if (!all_distinct(shape.levels))
        throw UnsupportedCycleType("no recursive form for cycle type " + ct.to_string() +
                                   "; use the oracle");
    if (static_cast<std::int64_t>(shape.levels.size()) >= spec.p)
        throw UnsupportedCycleType("no recursive form for that many distinct lengths");

    // Sum over assignments of the cycle-length set to distinct rows.
    const int b = static_cast<int>(shape.levels.size());
    Rational total = 0;
    for (const auto& nu : combinat::enumerate_partitions(b)) {
        const int parts = nu.size();
        if (parts > a) continue;
        // Gamma value of each block, per row.
        std::vector<std::vector<Rational>> block_gamma(
            static_cast<size_t>(parts), std::vector<Rational>(static_cast<size_t>(a)));
        for (int bi = 0; bi < parts; ++bi) {
            std::vector<int> sub;
            for (const int w : nu.blocks()[static_cast<size_t>(bi)])
                sub.push_back(shape.levels[static_cast<size_t>(w - 1)]);
            for (int i = 0; i < a; ++i)
                block_gamma[static_cast<size_t>(bi)][static_cast<size_t>(i)] =
                    gamma_recursive(spec.p, k, sub, spec.row(i));
        }
        std::vector<bool> used(static_cast<size_t>(a), false);
        auto assign = [&](auto&& self, int bi, const Rational& acc) -> Rational {
            if (bi == parts) return acc;
            Rational sub_total = 0;
            for (int i = 0; i < a; ++i) {
                if (used[static_cast<size_t>(i)]) continue;
                used[static_cast<size_t>(i)] = true;
                sub_total += self(
                    self, bi + 1,
                    acc * block_gamma[static_cast<size_t>(bi)][static_cast<size_t>(i)]);
                used[static_cast<size_t>(i)] = false;
            }
            return sub_total;
        };
        total += assign(assign, 0, Rational(1));
    }
    return total;
}

Rational class_sum_oracle(const CharSpec& spec, const sylow::CycleType& ct,
                          std::int64_t budget) {
    check_spec_type(spec, ct);
    const auto ps = sylow::product_structure(spec.n(), spec.p);
    if (static_cast<int>(ps.factor_levels.size()) != spec.a())
        throw InternalError("class_sum_oracle: unexpected factor layout");
    CycInt sum = CycInt::zero(spec.p);
    sylow::product_class_intersection(
        ps, ct, budget, [&](const sylow::ProductElem& x) { sum += char_eval_product(spec, x); });
    return Rational(sum.rational_part("class_sum_oracle"));
}

EvalMode parse_eval_mode(const std::string& name) {
    if (name == "closed") return EvalMode::kClosed;
    if (name == "recursive") return EvalMode::kRecursive;
    if (name == "oracle") return EvalMode::kOracle;
    if (name == "auto") return EvalMode::kAuto;
    throw DomainError("unknown mode '" + name + "' (closed|recursive|oracle|auto)");
}

std::string eval_mode_name(EvalMode mode) {
    switch (mode) {
        case EvalMode::kClosed: return "closed";
        case EvalMode::kRecursive: return "recursive";
        case EvalMode::kOracle: return "oracle";
        case EvalMode::kAuto: return "auto";
    }
    return "unknown";
}

InducedValue induced_value(const CharSpec& spec, const sylow::CycleType& ct, EvalMode mode,
                           std::int64_t budget) {
    check_spec_type(spec, ct);
    Rational sum;
    EvalMode used = mode;
    switch (mode) {
        case EvalMode::kClosed: sum = class_sum(spec, ct); break;
        case EvalMode::kRecursive: sum = class_sum_recursive(spec, ct); break;
        case EvalMode::kOracle: sum = class_sum_oracle(spec, ct, budget); break;
        case EvalMode::kAuto: {
            try {
                sum = class_sum(spec, ct);
                used = EvalMode::kClosed;
            } catch (const UnsupportedCycleType& closed_refusal) {
                try {
                    sum = class_sum_oracle(spec, ct, budget);
                    used = EvalMode::kOracle;
                } catch (const BudgetError& oracle_refusal) {
                    throw BudgetError(std::string("no mode available: closed refused (") +
                                          closed_refusal.what() + "); oracle refused (" +
                                          oracle_refusal.what() + ")",
                                      oracle_refusal.required_budget);
                }
            }
            break;
        }
    }
    const Rational value = Rational(sylow::centralizer_order(ct)) * sum /
                           Rational(sylow::sylow_order(ct.degree, spec.p));
    as_integer(value, "induced_value: induced characters of S_n are integer-valued");
    return {value, used};
}

Rational induced_nonzero_check(const CharSpec& spec) {
    const int k = spec.k();
    const std::int64_t a = spec.a();
    const BigInt pk = pow_int(spec.p, static_cast<std::uint64_t>(k));

    Rational class_sum_value = 1;
    for (int i = 0; i < spec.a(); ++i)
        class_sum_value *= Rational(pk) * (k >= 1 ? c_factor(spec.p, k, spec.row(i)) : 1);

    const BigInt centralizer = pow_int(pk, static_cast<std::uint64_t>(a)) *
                               factorial(static_cast<unsigned>(a));
    const Rational value = Rational(centralizer) * class_sum_value /
                           Rational(sylow::sylow_order(spec.n(), spec.p));
    as_integer(value, "induced_nonzero_check");
    if (value == 0)
        throw InternalError("induced_nonzero_check: value on a disjoint p^k-cycles vanished");
    return value;
}

}  // namespace sylchar::chars
