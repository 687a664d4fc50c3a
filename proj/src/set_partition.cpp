#include "sylchar/set_partition.hpp"

#include <algorithm>
#include <map>

namespace sylchar::combinat {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    int n = 0;
    for (auto& blk : blocks_) {
        if (blk.empty()) throw DomainError("SetPartition: empty block");
        std::sort(blk.begin(), blk.end());
        n += static_cast<int>(blk.size());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    ground_size_ = n;
    // The union must be exactly {1,...,n}.
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (const auto& blk : blocks_)
        for (int x : blk) {
            if (x < 1 || x > n || seen[static_cast<size_t>(x)])
                throw DomainError("SetPartition: blocks do not partition {1,...,b}");
            seen[static_cast<size_t>(x)] = true;
        }
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    int nblocks = 0;
    for (int id : rgs) nblocks = std::max(nblocks, id + 1);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (size_t i = 0; i < rgs.size(); ++i)
        blocks[static_cast<size_t>(rgs[i])].push_back(static_cast<int>(i) + 1);
    return SetPartition(std::move(blocks));
}

std::vector<int> SetPartition::block_index() const {
    std::vector<int> idx(static_cast<size_t>(ground_size_));
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int x : blocks_[b]) idx[static_cast<size_t>(x - 1)] = static_cast<int>(b);
    return idx;
}

SetPartition SetPartition::full(int b) {
    std::vector<int> all(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) all[static_cast<size_t>(i)] = i + 1;
    return SetPartition({all});
}

SetPartition SetPartition::discrete(int b) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(b));
    for (int i = 1; i <= b; ++i) blocks.push_back({i});
    return SetPartition(std::move(blocks));
}

std::vector<SetPartition> enumerate_partitions(int b) {
    if (b < 1 || b > kMaxPartitionGround)
        throw DomainError("enumerate_partitions: b must be in [1, " +
                          std::to_string(kMaxPartitionGround) + "], got " + std::to_string(b));
    std::vector<int> elements(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) elements[static_cast<size_t>(i)] = i + 1;
    std::vector<SetPartition> out;
    for (auto& blocks : enumerate_partitions_of(elements)) out.push_back(SetPartition(std::move(blocks)));
    return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_partitions_of(
    const std::vector<int>& elements) {
    const int n = static_cast<int>(elements.size());
    if (n < 1 || n > kMaxPartitionGround)
        throw DomainError("enumerate_partitions_of: ground set size out of range");
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    // Iterate restricted-growth strings in lexicographic order. Elements are
    // assumed sorted, so block ids appear in order of the blocks' minima and
    // each string yields the canonical block order directly.
    while (true) {
        int nblocks = 0;
        for (int id : rgs) nblocks = std::max(nblocks, id + 1);
        std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(
                elements[static_cast<size_t>(i)]);
        out.push_back(std::move(blocks));

        int i = n - 1;
        while (i > 0) {
            int maxprev = 0;
            for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, rgs[static_cast<size_t>(j)]);
            if (rgs[static_cast<size_t>(i)] <= maxprev) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<size_t>(j)] = 0;
    }
    return out;
}

BigInt bell_number(int n) {
    if (n < 0) throw DomainError("bell_number: n must be nonnegative");
    if (n == 0) return 1;
    std::vector<BigInt> row = {1};
    for (int i = 1; i < n; ++i) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.back();
}

bool refines(const SetPartition& nu, const SetPartition& lambda) {
    if (nu.ground_size() != lambda.ground_size())
        throw DomainError("refines: partitions of different ground sets");
    const auto lam_idx = lambda.block_index();
    for (const auto& blk : nu.blocks()) {
        const int home = lam_idx[static_cast<size_t>(blk.front() - 1)];
        for (int x : blk)
            if (lam_idx[static_cast<size_t>(x - 1)] != home) return false;
    }
    return true;
}

int multiplicity(const SetPartition& nu, const SetPartition& lambda,
                 const std::vector<int>& tau) {
    if (!refines(nu, lambda)) throw DomainError("multiplicity: nu does not refine lambda");
    std::vector<int> sorted_tau = tau;
    std::sort(sorted_tau.begin(), sorted_tau.end());
    bool found = false;
    for (const auto& blk : lambda.blocks())
        if (blk == sorted_tau) {
            found = true;
            break;
        }
    if (!found) throw DomainError("multiplicity: tau is not a block of lambda");
    int count = 0;
    for (const auto& blk : nu.blocks())
        if (std::includes(sorted_tau.begin(), sorted_tau.end(), blk.begin(), blk.end())) ++count;
    return count;
}

std::vector<SetPartition> cuts(const SetPartition& alpha, int i) {
    if (i < 0) throw DomainError("cuts: i must be nonnegative");
    // Per-block refinements grouped by the number of extra blocks they add.
    using RawPartition = std::vector<std::vector<int>>;
    std::vector<std::map<int, std::vector<RawPartition>>> per_block;
    per_block.reserve(alpha.blocks().size());
    for (const auto& blk : alpha.blocks()) {
        std::map<int, std::vector<RawPartition>> by_extra;
        for (auto& part : enumerate_partitions_of(blk)) {
            const int extra = static_cast<int>(part.size()) - 1;
            by_extra[extra].push_back(std::move(part));
        }
        per_block.push_back(std::move(by_extra));
    }

    std::vector<SetPartition> out;
    std::vector<std::vector<int>> acc;
    auto dfs = [&](auto&& self, size_t blk_idx, int remaining) -> void {
        if (blk_idx == per_block.size()) {
            if (remaining == 0) out.push_back(SetPartition(acc));
            return;
        }
        for (const auto& [extra, parts] : per_block[blk_idx]) {
            if (extra > remaining) break;
            for (const auto& part : parts) {
                const size_t mark = acc.size();
                for (const auto& sub : part) acc.push_back(sub);
                self(self, blk_idx + 1, remaining - extra);
                acc.resize(mark);
            }
        }
    };
    dfs(dfs, 0, i);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sylchar::combinat
