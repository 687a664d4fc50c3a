#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sylchar/cycle_type.hpp"
#include "sylchar/numbers.hpp"
#include "sylchar/padic.hpp"

namespace sylchar::sylow {

/// Default ceiling on the number of elements any enumeration may visit.
inline constexpr std::int64_t kDefaultElementBudget = 10'000'000;

/// Largest permutation degree to_permutation will materialize.
inline constexpr std::int64_t kMaxPermutationDegree = 1'000'000;

/// An element of P_{p^k}, the k-fold iterated wreath product of cyclic groups
/// of order p, as a recursive tree: a leaf is the unique element of P_1, and
/// a level-k node holds p children in P_{p^{k-1}} plus a top component c^e,
/// where c is the fixed p-cycle shifting blocks by one.
///
/// Point labels on [p^k] use base-p digits: the point i*p^{k-1} + y lies in
/// block i. The top component sends block i to block i+e (mod p), and the
/// child attached to a block acts within that block, so the realized
/// permutation maps i*p^{k-1} + y to s(i)*p^{k-1} + f_{s(i)}(y) with
/// s(i) = i+e mod p. Group multiplication matches composition of these
/// permutations (right factor acts first).
class WreathElem {
public:
    /// The unique element of P_1 (level 0).
    WreathElem() = default;

    WreathElem(std::vector<WreathElem> children, int top);

    static WreathElem identity(std::int64_t p, int level);

    int level() const { return level_; }
    std::int64_t prime() const { return static_cast<std::int64_t>(children_.size()); }
    int top() const { return top_; }
    const std::vector<WreathElem>& children() const { return children_; }
    const WreathElem& child(size_t i) const { return children_[i]; }

    bool is_identity() const;

    bool operator==(const WreathElem& o) const {
        return top_ == o.top_ && children_ == o.children_;
    }

private:
    std::vector<WreathElem> children_;
    int top_ = 0;
    int level_ = 0;
};

/// Group product; both factors must have the same level and prime.
WreathElem mul(const WreathElem& a, const WreathElem& b);

/// The twisted product f_{s^{p-1}(1)} ... f_{s(1)} f_1 of the children of x,
/// where s is the top permutation of x. Its cycle structure decides whether
/// x is a long cycle.
WreathElem twisted_product(const WreathElem& x);

/// Image array of the point set {0, ..., p^k - 1} under x.
std::vector<std::int64_t> to_permutation(const WreathElem& x);

CycleType cycle_type(const WreathElem& x);

/// True iff x acts as a single p^k-cycle.
bool is_full_cycle(const WreathElem& x);

/// |P_{p^k}| = p^{(p^k - 1)/(p - 1)}.
BigInt wreath_order(std::int64_t p, int k);

/// Calls fn once per element of P_{p^k}, streaming with constant memory per
/// element. Refuses (BudgetError) if |P_{p^k}| exceeds the budget.
void enumerate_sylow(std::int64_t p, int k, std::int64_t budget,
                     const std::function<void(const WreathElem&)>& fn);

std::vector<WreathElem> collect_sylow(std::int64_t p, int k,
                                      std::int64_t budget = kDefaultElementBudget);

/// Streams exactly the elements of P_{p^k} whose cycle type equals ct.
/// When ct has a fixed point only top-trivial subtrees are generated, since
/// an element with a fixed point has trivial top component.
void class_intersection(std::int64_t p, int k, const CycleType& ct, std::int64_t budget,
                        const std::function<void(const WreathElem&)>& fn);

// ---------------------------------------------------------------------------
// Direct-product model of P_n for arbitrary n.
// ---------------------------------------------------------------------------

/// Factor layout of P_n = (P_{p^{n_1}})^{a_1} x ... x (P_{p^{n_t}})^{a_t}:
/// one entry per factor, exponents ascending with repeats.
struct ProductStructure {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::vector<int> factor_levels;

    BigInt order() const;
};

ProductStructure product_structure(std::int64_t n, std::int64_t p);

/// An element of P_n: one WreathElem per factor.
using ProductElem = std::vector<WreathElem>;

/// Cycle type of a product element on [n]: the multiset union of the factor
/// cycle types.
CycleType product_cycle_type(const ProductStructure& ps, const ProductElem& x);

void enumerate_product(const ProductStructure& ps, std::int64_t budget,
                       const std::function<void(const ProductElem&)>& fn);

/// Streams the elements of P_n of cycle type ct.
void product_class_intersection(const ProductStructure& ps, const CycleType& ct,
                                std::int64_t budget,
                                const std::function<void(const ProductElem&)>& fn);

// ---------------------------------------------------------------------------
// Bucketed enumeration: the workhorse behind large verification campaigns.
// ---------------------------------------------------------------------------

/// Aggregate census of P_{p^k}: for each occurring cycle type, how many
/// elements realize each combination of per-level top-exponent sums.
///
/// The sums index encodes (s_1, ..., s_k), s_j the mod-p sum of all top
/// exponents at level j in the element's tree, as sum of s_j * p^{j-1}.
/// Every linear character value is zeta^m with m a fixed linear function of
/// these sums, so one census evaluates class sums for all characters at once.
struct SylowBuckets {
    std::int64_t p = 0;
    int k = 0;
    std::int64_t sums_space = 0;  // p^k
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> table;

    std::int64_t total_elements() const;
};

/// Builds the census by a single streamed enumeration of P_{p^k}. Work is
/// partitioned by (top exponent, first-child prefix) across threads; partial
/// tables are merged in fixed shard order so results are byte-stable.
SylowBuckets bucket_sylow(std::int64_t p, int k, std::int64_t budget, int threads = 0);

}  // namespace sylchar::sylow
