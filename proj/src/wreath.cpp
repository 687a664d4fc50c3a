#include "sylchar/wreath.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "sylchar/errors.hpp"

namespace sylchar::sylow {

namespace {

/// Exponent of p in |P_{p^k}|: 1 + p + ... + p^{k-1}.
BigInt wreath_order_exponent(std::int64_t p, int k) {
    BigInt e = 0, q = 1;
    for (int i = 0; i < k; ++i) {
        e += q;
        q *= p;
    }
    return e;
}

std::string order_string(std::int64_t p, int k) {
    const BigInt e = wreath_order_exponent(p, k);
    if (e <= 4096) return pow_int(p, e.convert_to<std::uint64_t>()).str();
    return std::to_string(p) + "^" + e.str();
}

/// Throws BudgetError unless |P_{p^k}| / divisor fits within budget.
void require_within_budget(std::int64_t p, int k, std::int64_t budget, std::int64_t divisor,
                           const char* what) {
    const BigInt e = wreath_order_exponent(p, k);
    if (e > 64 || pow_int(p, e.convert_to<std::uint64_t>()) / divisor > budget)
        throw BudgetError(std::string(what) + " over P_{" + std::to_string(p) + "^" +
                              std::to_string(k) + "} exceeds the element budget " +
                              std::to_string(budget),
                          order_string(p, k));
}

bool is_p_power(std::int64_t v, std::int64_t p) {
    while (v % p == 0) v /= p;
    return v == 1;
}

}  // namespace

WreathElem::WreathElem(std::vector<WreathElem> children, int top)
    : children_(std::move(children)), top_(top) {
    const auto p = static_cast<std::int64_t>(children_.size());
    if (p < 2) throw DomainError("WreathElem: a node needs at least 2 children");
    for (const auto& c : children_)
        if (c.level() != children_.front().level())
            throw DomainError("WreathElem: children must share a level");
    if (top_ < 0 || top_ >= p) throw DomainError("WreathElem: top exponent out of range");
    level_ = children_.front().level() + 1;
}

WreathElem WreathElem::identity(std::int64_t p, int level) {
    if (level == 0) return WreathElem();
    return WreathElem(
        std::vector<WreathElem>(static_cast<size_t>(p), identity(p, level - 1)), 0);
}

bool WreathElem::is_identity() const {
    if (top_ != 0) return false;
    for (const auto& c : children_)
        if (!c.is_identity()) return false;
    return true;
}

WreathElem mul(const WreathElem& a, const WreathElem& b) {
    if (a.level() != b.level()) throw DomainError("mul: level mismatch");
    if (a.level() == 0) return WreathElem();
    const auto p = a.prime();
    if (p != b.prime()) throw DomainError("mul: prime mismatch");
    std::vector<WreathElem> children;
    children.reserve(static_cast<size_t>(p));
    for (std::int64_t j = 0; j < p; ++j) {
        const std::int64_t src = ((j - a.top()) % p + p) % p;
        children.push_back(mul(a.child(static_cast<size_t>(j)), b.child(static_cast<size_t>(src))));
    }
    return WreathElem(std::move(children), (a.top() + b.top()) % static_cast<int>(p));
}

WreathElem twisted_product(const WreathElem& x) {
    if (x.level() == 0) throw DomainError("twisted_product: needs level >= 1");
    const auto p = x.prime();
    WreathElem acc = x.child(0);
    for (std::int64_t m = 1; m < p; ++m)
        acc = mul(x.child(static_cast<size_t>((m * x.top()) % p)), acc);
    return acc;
}

std::vector<std::int64_t> to_permutation(const WreathElem& x) {
    if (x.level() == 0) return {0};
    const auto p = x.prime();
    std::int64_t degree = 1;
    for (int i = 0; i < x.level(); ++i) {
        degree *= p;
        if (degree > kMaxPermutationDegree)
            throw BudgetError("to_permutation: degree exceeds guard",
                              std::to_string(kMaxPermutationDegree));
    }
    const std::int64_t block = degree / p;
    std::vector<std::int64_t> image(static_cast<size_t>(degree));
    for (std::int64_t i = 0; i < p; ++i) {
        const std::int64_t target = (i + x.top()) % p;
        const auto child_image = to_permutation(x.child(static_cast<size_t>(target)));
        for (std::int64_t y = 0; y < block; ++y)
            image[static_cast<size_t>(i * block + y)] =
                target * block + child_image[static_cast<size_t>(y)];
    }
    return image;
}

CycleType cycle_type(const WreathElem& x) {
    const auto image = to_permutation(x);
    const auto n = static_cast<std::int64_t>(image.size());
    std::vector<bool> seen(image.size(), false);
    std::vector<std::int64_t> parts;
    for (std::int64_t start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::int64_t len = 0, z = start;
        do {
            seen[static_cast<size_t>(z)] = true;
            z = image[static_cast<size_t>(z)];
            ++len;
        } while (z != start);
        parts.push_back(len);
    }
    return CycleType(n, std::move(parts));
}

bool is_full_cycle(const WreathElem& x) {
    const auto image = to_permutation(x);
    std::int64_t len = 0, z = 0;
    do {
        z = image[static_cast<size_t>(z)];
        ++len;
    } while (z != 0);
    return len == static_cast<std::int64_t>(image.size());
}

BigInt wreath_order(std::int64_t p, int k) {
    require_prime(p);
    if (k < 0) throw DomainError("wreath_order: k must be nonnegative");
    const BigInt e = wreath_order_exponent(p, k);
    if (e > 100000) throw DomainError("wreath_order: order is astronomically large");
    return pow_int(p, e.convert_to<std::uint64_t>());
}

namespace {

/// Iterates elements (f_1, ..., f_p; c^e) for e in tops and all child tuples
/// drawn from kids, in odometer order (e outermost, then left-to-right).
void odometer(const std::vector<WreathElem>& kids, std::int64_t p, const std::vector<int>& tops,
              const std::function<void(const WreathElem&)>& fn) {
    std::vector<size_t> idx(static_cast<size_t>(p), 0);
    for (const int e : tops) {
        std::fill(idx.begin(), idx.end(), 0);
        bool done = false;
        while (!done) {
            std::vector<WreathElem> children;
            children.reserve(static_cast<size_t>(p));
            for (const size_t i : idx) children.push_back(kids[i]);
            fn(WreathElem(std::move(children), e));

            done = true;
            size_t pos = idx.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < kids.size()) {
                    done = false;
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

}  // namespace

void enumerate_sylow(std::int64_t p, int k, std::int64_t budget,
                     const std::function<void(const WreathElem&)>& fn) {
    require_prime(p);
    if (k < 0) throw DomainError("enumerate_sylow: k must be nonnegative");
    require_within_budget(p, k, budget, 1, "enumeration");
    if (k == 0) {
        fn(WreathElem());
        return;
    }
    const auto kids = collect_sylow(p, k - 1, budget);
    std::vector<int> tops(static_cast<size_t>(p));
    for (std::int64_t e = 0; e < p; ++e) tops[static_cast<size_t>(e)] = static_cast<int>(e);
    odometer(kids, p, tops, fn);
}

std::vector<WreathElem> collect_sylow(std::int64_t p, int k, std::int64_t budget) {
    std::vector<WreathElem> out;
    enumerate_sylow(p, k, budget, [&](const WreathElem& x) { out.push_back(x); });
    return out;
}

void class_intersection(std::int64_t p, int k, const CycleType& ct, std::int64_t budget,
                        const std::function<void(const WreathElem&)>& fn) {
    require_prime(p);
    if (k < 0) throw DomainError("class_intersection: k must be nonnegative");
    BigInt degree = pow_int(p, static_cast<std::uint64_t>(k));
    if (BigInt(ct.degree) != degree)
        throw DomainError("class_intersection: cycle type degree must be p^k");
    // Elements of a p-group have p-power order, hence p-power cycle lengths.
    for (const auto part : ct.parts)
        if (!is_p_power(part, p)) return;
    if (k == 0) {
        fn(WreathElem());
        return;
    }
    const bool prune_top = ct.fixed_points() > 0;
    require_within_budget(p, k, budget, prune_top ? p : 1, "class enumeration");
    const auto kids = collect_sylow(p, k - 1, budget);
    std::vector<int> tops;
    if (prune_top) {
        tops = {0};
    } else {
        for (std::int64_t e = 0; e < p; ++e) tops.push_back(static_cast<int>(e));
    }
    odometer(kids, p, tops, [&](const WreathElem& x) {
        if (cycle_type(x) == ct) fn(x);
    });
}

// ---------------------------------------------------------------------------
// Direct products
// ---------------------------------------------------------------------------

BigInt ProductStructure::order() const {
    BigInt o = 1;
    for (const int k : factor_levels) o *= wreath_order(p, k);
    return o;
}

ProductStructure product_structure(std::int64_t n, std::int64_t p) {
    const auto shape = p_adic(n, p);
    ProductStructure ps;
    ps.p = p;
    ps.n = n;
    for (const auto& [exponent, coeff] : shape.digits)
        for (int i = 0; i < coeff; ++i) ps.factor_levels.push_back(exponent);
    return ps;
}

CycleType product_cycle_type(const ProductStructure& ps, const ProductElem& x) {
    std::vector<std::int64_t> parts;
    for (const auto& factor : x) {
        const auto ct = cycle_type(factor);
        parts.insert(parts.end(), ct.parts.begin(), ct.parts.end());
    }
    return CycleType(ps.n, std::move(parts));
}

void enumerate_product(const ProductStructure& ps, std::int64_t budget,
                       const std::function<void(const ProductElem&)>& fn) {
    if (ps.order() > budget)
        throw BudgetError("product enumeration over P_" + std::to_string(ps.n) +
                              " exceeds the element budget " + std::to_string(budget),
                          ps.order().str());
    std::map<int, std::vector<WreathElem>> lists;
    for (const int k : ps.factor_levels)
        if (!lists.count(k)) lists[k] = collect_sylow(ps.p, k, budget);

    ProductElem current(ps.factor_levels.size());
    auto dfs = [&](auto&& self, size_t pos) -> void {
        if (pos == ps.factor_levels.size()) {
            fn(current);
            return;
        }
        for (const auto& elem : lists[ps.factor_levels[pos]]) {
            current[pos] = elem;
            self(self, pos + 1);
        }
    };
    dfs(dfs, 0);
}

void product_class_intersection(const ProductStructure& ps, const CycleType& ct,
                                std::int64_t budget,
                                const std::function<void(const ProductElem&)>& fn) {
    if (ct.degree != ps.n) throw DomainError("product_class_intersection: degree mismatch");
    for (const auto part : ct.parts)
        if (!is_p_power(part, ps.p)) return;
    enumerate_product(ps, budget, [&](const ProductElem& x) {
        if (product_cycle_type(ps, x) == ct) fn(x);
    });
}

// ---------------------------------------------------------------------------
// Bucketed enumeration
// ---------------------------------------------------------------------------

namespace {

/// Permutation image plus per-level top-exponent sums (mod p) for one element.
struct Stats {
    std::vector<std::uint32_t> perm;
    std::vector<std::uint8_t> sums;  // sums[j] covers level j+1
};

std::vector<Stats> materialize_stats(std::int64_t p, int k) {
    std::vector<Stats> elems;
    if (k == 0) {
        elems.push_back({{0}, {}});
        return elems;
    }
    const auto lower = materialize_stats(p, k - 1);
    const auto block = static_cast<std::int64_t>(lower.front().perm.size());
    std::vector<size_t> idx(static_cast<size_t>(p), 0);
    for (int e = 0; e < p; ++e) {
        std::fill(idx.begin(), idx.end(), 0);
        bool done = false;
        while (!done) {
            Stats s;
            s.perm.resize(static_cast<size_t>(block * p));
            s.sums.assign(static_cast<size_t>(k), 0);
            for (std::int64_t i = 0; i < p; ++i) {
                const std::int64_t target = (i + e) % p;
                const Stats& child = lower[idx[static_cast<size_t>(target)]];
                for (std::int64_t y = 0; y < block; ++y)
                    s.perm[static_cast<size_t>(i * block + y)] =
                        static_cast<std::uint32_t>(target * block) + child.perm[static_cast<size_t>(y)];
                for (int j = 0; j + 1 < k; ++j)
                    s.sums[static_cast<size_t>(j)] = static_cast<std::uint8_t>(
                        (s.sums[static_cast<size_t>(j)] +
                         lower[idx[static_cast<size_t>(i)]].sums[static_cast<size_t>(j)]) %
                        p);
            }
            s.sums[static_cast<size_t>(k - 1)] = static_cast<std::uint8_t>(e);
            elems.push_back(std::move(s));

            size_t pos = idx.size();
            done = true;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < lower.size()) {
                    done = false;
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    return elems;
}

using BucketTable = std::map<std::vector<std::int64_t>, std::vector<std::int64_t>>;

void accumulate(BucketTable& table, std::int64_t sums_space,
                const std::vector<std::uint32_t>& perm, std::int64_t sums_index,
                std::vector<std::uint8_t>& visited, std::vector<std::int64_t>& parts) {
    const auto n = static_cast<std::int64_t>(perm.size());
    std::fill(visited.begin(), visited.end(), 0);
    parts.clear();
    for (std::int64_t start = 0; start < n; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        std::int64_t len = 0, z = start;
        do {
            visited[static_cast<size_t>(z)] = 1;
            z = perm[static_cast<size_t>(z)];
            ++len;
        } while (z != start);
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end());
    auto it = table.find(parts);
    if (it == table.end())
        it = table.emplace(parts, std::vector<std::int64_t>(static_cast<size_t>(sums_space), 0))
                 .first;
    ++it->second[static_cast<size_t>(sums_index)];
}

void merge_tables(BucketTable& into, const BucketTable& from) {
    for (const auto& [parts, counts] : from) {
        auto it = into.find(parts);
        if (it == into.end()) {
            into.emplace(parts, counts);
        } else {
            for (size_t i = 0; i < counts.size(); ++i) it->second[i] += counts[i];
        }
    }
}

}  // namespace

std::int64_t SylowBuckets::total_elements() const {
    std::int64_t total = 0;
    for (const auto& [parts, counts] : table)
        for (const auto c : counts) total += c;
    return total;
}

SylowBuckets bucket_sylow(std::int64_t p, int k, std::int64_t budget, int threads) {
    require_prime(p);
    if (k < 0) throw DomainError("bucket_sylow: k must be nonnegative");
    require_within_budget(p, k, budget, 1, "bucketed enumeration");

    SylowBuckets buckets;
    buckets.p = p;
    buckets.k = k;
    buckets.sums_space = 1;
    for (int i = 0; i < k; ++i) buckets.sums_space *= p;

    if (k == 0) {
        buckets.table[{1}] = {1};
        return buckets;
    }

    const auto lower = materialize_stats(p, k - 1);
    const auto block = static_cast<std::int64_t>(lower.front().perm.size());
    const std::int64_t degree = block * p;

    // One chunk per (top exponent, first-child index); workers take
    // contiguous chunk ranges and results merge in worker order.
    const std::int64_t chunks = p * static_cast<std::int64_t>(lower.size());
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<std::int64_t>(threads, chunks));

    auto run_range = [&](std::int64_t chunk_begin, std::int64_t chunk_end) {
        BucketTable local;
        std::vector<std::uint8_t> visited(static_cast<size_t>(degree));
        std::vector<std::int64_t> parts;
        std::vector<std::uint32_t> perm(static_cast<size_t>(degree));
        std::vector<size_t> idx(static_cast<size_t>(p), 0);
        for (std::int64_t chunk = chunk_begin; chunk < chunk_end; ++chunk) {
            const int e = static_cast<int>(chunk / static_cast<std::int64_t>(lower.size()));
            const size_t first = static_cast<size_t>(chunk % static_cast<std::int64_t>(lower.size()));
            std::fill(idx.begin(), idx.end(), 0);
            idx[0] = first;
            bool done = false;
            while (!done) {
                std::int64_t sums_index = 0;
                {
                    // Low digit of the sums index is the level-1 sum; the top
                    // digit (weight p^{k-1}) is the root exponent e.
                    std::int64_t level_weight = 1;
                    for (int j = 0; j + 1 < k; ++j) {
                        std::int64_t sum = 0;
                        for (std::int64_t i = 0; i < p; ++i)
                            sum += lower[idx[static_cast<size_t>(i)]].sums[static_cast<size_t>(j)];
                        sums_index += (sum % p) * level_weight;
                        level_weight *= p;
                    }
                    sums_index += e * level_weight;
                }
                for (std::int64_t i = 0; i < p; ++i) {
                    const std::int64_t target = (i + e) % p;
                    const Stats& child = lower[idx[static_cast<size_t>(target)]];
                    for (std::int64_t y = 0; y < block; ++y)
                        perm[static_cast<size_t>(i * block + y)] =
                            static_cast<std::uint32_t>(target * block) +
                            child.perm[static_cast<size_t>(y)];
                }
                accumulate(local, buckets.sums_space, perm, sums_index, visited, parts);

                // Advance the odometer across positions 1..p-1 only; position
                // 0 is pinned by the chunk.
                size_t pos = idx.size();
                done = true;
                while (pos > 1) {
                    --pos;
                    if (++idx[pos] < lower.size()) {
                        done = false;
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        return local;
    };

    if (threads <= 1) {
        buckets.table = run_range(0, chunks);
        return buckets;
    }

    std::vector<std::future<BucketTable>> futures;
    const std::int64_t per = (chunks + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t begin = t * per;
        const std::int64_t end = std::min<std::int64_t>(chunks, begin + per);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, run_range, begin, end));
    }
    for (auto& f : futures) merge_tables(buckets.table, f.get());
    return buckets;
}

}  // namespace sylchar::sylow
