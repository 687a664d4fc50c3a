#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sylchar/char_spec.hpp"
#include "sylchar/cycle_type.hpp"
#include "sylchar/numbers.hpp"

namespace sylchar::classify {

/// Multiset of integers in canonical (sorted ascending) encoding; equality
/// of multisets is equality of encodings.
using IntMultiset = std::vector<std::int64_t>;

IntMultiset make_multiset(std::vector<std::int64_t> values);

/// True iff the two characters are conjugate under the normalizer of P_n:
/// for n = a p^k this is equality of the row multisets.
bool n_conjugate(const chars::CharSpec& s, const chars::CharSpec& t);

/// General n: one CharSpec per p-adic digit block; the normalizer
/// factorizes, so the decision is digit-wise.
bool n_conjugate(const std::vector<chars::CharSpec>& s, const std::vector<chars::CharSpec>& t);

/// f(l_1,...,l_b; s) = sum_i sum_{m <= l_i} s_m, the sum of bit-prefix sums
/// of s at the given levels.
std::int64_t f_value(const std::vector<int>& levels, const chars::BitSeq& s);

/// Multiset of f values over the rows of a spec.
IntMultiset f_multiset(const std::vector<int>& levels, const chars::CharSpec& spec);

/// The f-multisets of a row tuple at every strictly increasing level list
/// (l_1 < ... < l_b) with b <= min(a, k).
struct FProfile {
    int a = 0;
    int k = 0;
    std::map<std::vector<int>, IntMultiset> table;
};

FProfile build_profile(const std::vector<chars::BitSeq>& rows);
FProfile build_profile(const chars::CharSpec& spec);

/// Distinguishing data for a pair of non-conjugate characters: the cheapest
/// cycle type where the induced characters provably differ, with both exact
/// class sums.
struct EqualityWitness {
    std::vector<int> levels;
    sylow::CycleType cycle_type;
    Rational class_sum_s;
    Rational class_sum_t;
};

struct InducedEqualResult {
    bool equal = false;
    std::optional<EqualityWitness> witness;
};

/// Decides equality of the induced characters (equivalent to N-conjugacy).
/// When unequal, searches level lists by increasing size then
/// lexicographically for the first differing f-multiset; at that list the
/// class sums must differ, and failing to find a witness is an internal
/// error.
InducedEqualResult induced_equal(const chars::CharSpec& s, const chars::CharSpec& t);

enum class SignedPowerVerdict { kEqual, kExceptional, kSumsDiffer };

struct SignedPowerResult {
    SignedPowerVerdict verdict = SignedPowerVerdict::kEqual;
    std::int64_t w = 0;  // meaningful for kExceptional
};

/// Classifies a pair of exponent multisets by comparing sum (-q)^e: either
/// the sums differ, the multisets are equal, or (only when |sigma| = q) the
/// pair is {w, w-1, ..., w-1} vs {w-2, ..., w-2} for some w >= 2.
SignedPowerResult signed_power_case(std::int64_t q, const IntMultiset& sigma,
                                    const IntMultiset& tau);

struct KeyLemmaResult {
    bool holds = false;
    IntMultiset common;        // the common prefix multiset when holds
    std::string counterexample;  // nonempty only if the conclusion failed
};

/// Checks the cancellation step: given lists l, m with equal multisets that
/// stay equal after incrementing the first c entries of each, the first c
/// entries must agree as multisets. Precondition violations throw; a failed
/// conclusion (provably impossible) is reported, not thrown.
KeyLemmaResult keylemma_conclude(const std::vector<std::int64_t>& l,
                                 const std::vector<std::int64_t>& m, int c);

/// Decides from the f-profiles alone whether two row tuples agree up to
/// permutation, by the recursive split on the first bit. Agrees with
/// directly comparing sorted rows on every input.
bool part2_equivalent(const FProfile& s_profile, const FProfile& t_profile);

}  // namespace sylchar::classify
