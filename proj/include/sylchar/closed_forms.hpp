#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylchar/char_spec.hpp"
#include "sylchar/cycle_type.hpp"
#include "sylchar/numbers.hpp"

namespace sylchar::chars {

/// C_l(u) = p^{(p^l-1)/(p-1) - 2l} * prod_{m<=l} (p u_m - 1). The exponent
/// may be negative, so the value is a rational in general. Depends only on
/// u_1, ..., u_l.
Rational c_factor(std::int64_t p, int l, const BitSeq& u);

/// Class sum of phi(u) over the elements of P_{p^k} whose cycle type is the
/// distinct p-power cycles p^{l_1} < ... < p^{l_b} plus fixed points,
/// evaluated by the closed product formula p^k C_{l_1}(u)...C_{l_b}(u) R_k.
/// Zero whenever the cycle lengths cannot fit, i.e. sum p^{l_i} > p^k.
/// Requires b <= p-1.
Rational gamma_closed(std::int64_t p, int k, const std::vector<int>& levels, const BitSeq& u);

/// The same value computed purely from the level-by-level recurrences with
/// base case p*u_1 - 1 at k = 1, never touching the closed product formula.
/// Memoized (per thread); serves as an oracle independent of gamma_closed.
Rational gamma_recursive(std::int64_t p, int k, const std::vector<int>& levels, const BitSeq& u);

/// Class sum over the elements of cycle type (p^l, p^l) plus fixed points in
/// P_{p^k}: p^k (p^k - p^l)/2 * C_l(u)^2. Zero at l = k. Odd primes only.
Rational gamma_pair(std::int64_t p, int k, int l, const BitSeq& u);

/// gamma_pair by the pair recurrence (binomial(p,2) square term plus p times
/// the shorter pair sum), with single-cycle values from gamma_recursive.
Rational gamma_pair_recursive(std::int64_t p, int k, int l, const BitSeq& u);

/// Class sum of phi(u) over the elements of P_{a p^k} with cycle type ct.
/// Closed forms exist for (i) distinct p-power parts with at most p-1 of
/// them and (ii) exactly two equal parts p^l at odd p. Anything else throws
/// UnsupportedCycleType. Parts that are not p-powers give 0 (p-group
/// elements have p-power cycle lengths).
Rational class_sum(const CharSpec& spec, const sylow::CycleType& ct);

/// The same dispatch, but every Gamma value comes from the proof recurrences
/// and multi-row types are assembled by summing over assignments of cycles
/// to rows. Independent of class_sum's closed products.
Rational class_sum_recursive(const CharSpec& spec, const sylow::CycleType& ct);

/// Brute force: enumerate the class intersection in P_{a p^k} and sum
/// character values in Z[zeta_p]; asserts the sum is rational.
Rational class_sum_oracle(const CharSpec& spec, const sylow::CycleType& ct, std::int64_t budget);

enum class EvalMode { kClosed, kRecursive, kOracle, kAuto };

EvalMode parse_eval_mode(const std::string& name);
std::string eval_mode_name(EvalMode mode);

struct InducedValue {
    Rational value;
    EvalMode mode_used;
};

/// phi(u) induced to S_n, evaluated at an element of cycle type ct:
/// |C_{S_n}(g)| / |P_n| times the class sum. Always a rational integer;
/// a non-integral result is an internal error. kAuto prefers the closed
/// form and falls back to the oracle within budget.
InducedValue induced_value(const CharSpec& spec, const sylow::CycleType& ct, EvalMode mode,
                           std::int64_t budget);

/// Induced value on a product of a disjoint p^k-cycles; never zero.
Rational induced_nonzero_check(const CharSpec& spec);

}  // namespace sylchar::chars
