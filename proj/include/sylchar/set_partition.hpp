#pragma once

#include <vector>

#include "sylchar/errors.hpp"
#include "sylchar/numbers.hpp"

namespace sylchar::combinat {

/// Maximum ground-set size for full partition enumeration. Bell(12) is about
/// 4.2 million, the practical desk-scale ceiling.
inline constexpr int kMaxPartitionGround = 12;

/// A partition of {1,...,b} into disjoint nonempty blocks, kept in canonical
/// form: every block sorted ascending, blocks ordered by minimum element.
/// Two partitions are equal iff their canonical encodings compare equal.
class SetPartition {
public:
    SetPartition() = default;

    /// Canonicalizes; validates that the blocks partition {1,...,b} for some b.
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    /// From a restricted-growth string: rgs[i] is the block id of element i+1,
    /// with rgs[0] == 0 and rgs[i] <= max(rgs[0..i-1]) + 1.
    static SetPartition from_rgs(const std::vector<int>& rgs);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int ground_size() const { return ground_size_; }
    int size() const { return static_cast<int>(blocks_.size()); }

    /// Block id of each element, 0-based, in canonical block order.
    std::vector<int> block_index() const;

    bool operator==(const SetPartition& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const { return blocks_ < o.blocks_; }

    /// The one-block partition {{1,...,b}}.
    static SetPartition full(int b);
    /// The all-singletons partition.
    static SetPartition discrete(int b);

private:
    std::vector<std::vector<int>> blocks_;
    int ground_size_ = 0;
};

/// All partitions of {1,...,b} in canonical form; |result| = Bell(b).
std::vector<SetPartition> enumerate_partitions(int b);

/// All partitions of an arbitrary element set, as raw block lists (each
/// block sorted, blocks ordered by minimum).
std::vector<std::vector<std::vector<int>>> enumerate_partitions_of(
    const std::vector<int>& elements);

/// Bell numbers by the triangle recurrence; independent of enumeration.
BigInt bell_number(int n);

/// True iff every block of nu is contained in some block of lambda
/// (nu refines lambda). Both must partition the same ground set.
bool refines(const SetPartition& nu, const SetPartition& lambda);

/// Number of nu-blocks whose union is the lambda-block tau.
/// Requires refines(nu, lambda) and tau a block of lambda.
int multiplicity(const SetPartition& nu, const SetPartition& lambda,
                 const std::vector<int>& tau);

/// All beta refining alpha with exactly i more blocks than alpha.
std::vector<SetPartition> cuts(const SetPartition& alpha, int i);

}  // namespace sylchar::combinat
