#include "sylchar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sylchar/bell.hpp"
#include "sylchar/char_eval.hpp"
#include "sylchar/classify.hpp"
#include "sylchar/closed_forms.hpp"
#include "sylchar/cyc_int.hpp"
#include "sylchar/level_poly.hpp"
#include "sylchar/set_partition.hpp"

namespace sylchar::verify {

using chars::BitSeq;
using chars::CharSpec;
using sylow::CycleType;
using sylow::SylowBuckets;

int VerificationReport::count(const std::string& status) const {
    int total = 0;
    for (const auto& c : cases)
        if (c.status == status) ++total;
    return total;
}

std::string report_json(const VerificationReport& report, bool include_timing) {
    nlohmann::json doc;
    doc["campaign"] = report.campaign;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    doc["params"] = params;
    doc["cases"] = nlohmann::json::array();
    for (const auto& c : report.cases) {
        nlohmann::json entry;
        entry["id"] = c.id;
        entry["status"] = c.status;
        entry["detail"] = c.detail;
        doc["cases"].push_back(entry);
    }
    doc["totals"] = {{"pass", report.count("pass")},
                     {"fail", report.count("fail")},
                     {"skip", report.count("skip")},
                     {"cases", static_cast<int>(report.cases.size())}};
    doc["elements"] = report.elements_visited;
    doc["first_failure"] = report.first_failure;
    if (include_timing) doc["elapsed_ms"] = report.elapsed_ms;
    return doc.dump(2);
}

std::string report_table(const VerificationReport& report) {
    std::ostringstream out;
    out << "campaign: " << report.campaign << "\n";
    for (const auto& [key, value] : report.params) out << "  " << key << " = " << value << "\n";
    for (const auto& c : report.cases) {
        out << "  [" << c.status << "] " << c.id;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
    out << "totals: " << report.count("pass") << " pass, " << report.count("fail") << " fail, "
        << report.count("skip") << " skip; elements visited: " << report.elements_visited
        << "; elapsed: " << report.elapsed_ms << " ms\n";
    return out.str();
}

namespace {

std::string rat_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

void add_case(VerificationReport& report, const std::string& id, bool ok,
              const std::string& detail = "") {
    report.cases.push_back({id, ok ? "pass" : "fail", ok ? "" : detail});
    if (!ok && report.first_failure.empty()) report.first_failure = id + ": " + detail;
}

void add_skip(VerificationReport& report, const std::string& id, const std::string& reason) {
    report.cases.push_back({id, "skip", reason});
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::vector<BitSeq> all_bitseqs(int k) {
    std::vector<BitSeq> out;
    out.reserve(static_cast<size_t>(1) << k);
    for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << k); ++mask) {
        BitSeq u(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) u[static_cast<size_t>(j)] = (mask >> j) & 1;
        out.push_back(std::move(u));
    }
    return out;
}

struct Concrete {
    BitSeq u;
    std::vector<int> exps;
};

/// All p^k concrete linear characters of P_{p^k}: every 0/1 sequence with
/// every choice of nontrivial exponent at the 0 coordinates.
std::vector<Concrete> all_concretes(std::int64_t p, int k) {
    std::vector<Concrete> out;
    for (const auto& u : all_bitseqs(k)) {
        std::vector<size_t> zero_positions;
        for (size_t j = 0; j < u.size(); ++j)
            if (u[j] == 0) zero_positions.push_back(j);
        std::vector<int> exps(static_cast<size_t>(k), 1);
        bool done = false;
        while (!done) {
            out.push_back({u, exps});
            done = true;
            for (size_t zi = zero_positions.size(); zi-- > 0;) {
                auto& e = exps[zero_positions[zi]];
                if (++e <= p - 1) {
                    done = false;
                    break;
                }
                e = 1;
            }
            if (zero_positions.empty()) break;
        }
    }
    return out;
}

Rational bucket_row_sum(std::int64_t p, int k, const std::vector<std::int64_t>& counts,
                        const BitSeq& u, const std::vector<int>& exps) {
    std::vector<BigInt> by_exponent(static_cast<size_t>(p), BigInt(0));
    for (size_t idx = 0; idx < counts.size(); ++idx) {
        if (counts[idx] == 0) continue;
        std::int64_t digits = static_cast<std::int64_t>(idx);
        std::int64_t m = 0;
        for (int j = 0; j < k; ++j) {
            const std::int64_t s = digits % p;
            digits /= p;
            if (u[static_cast<size_t>(j)] == 0) m += exps[static_cast<size_t>(j)] * s;
        }
        by_exponent[static_cast<size_t>(m % p)] += counts[idx];
    }
    return Rational(
        CycInt::from_exponent_counts(p, by_exponent).rational_part("bucketed class sum"));
}

std::string parts_str(const std::vector<std::int64_t>& parts) {
    std::string s = "(";
    for (size_t i = parts.size(); i-- > 0;) {
        s += std::to_string(parts[i]);
        if (i > 0) s += ",";
    }
    return s + ")";
}

std::string bits_str(const BitSeq& u) {
    std::string s;
    for (const auto b : u) s += static_cast<char>('0' + b);
    return s;
}

/// Sorted multiset difference; nullopt when small is not contained in big.
std::optional<std::vector<std::int64_t>> multiset_subtract(
    const std::vector<std::int64_t>& big, const std::vector<std::int64_t>& small) {
    std::vector<std::int64_t> out;
    size_t i = 0, j = 0;
    while (i < big.size()) {
        if (j < small.size() && big[i] == small[j]) {
            ++i;
            ++j;
        } else if (j < small.size() && small[j] < big[i]) {
            return std::nullopt;
        } else {
            out.push_back(big[i]);
            ++i;
        }
    }
    if (j != small.size()) return std::nullopt;
    return out;
}

}  // namespace

std::map<std::vector<std::int64_t>, Rational> row_class_sums(const SylowBuckets& buckets,
                                                             const BitSeq& u,
                                                             const std::vector<int>& exponents) {
    if (static_cast<int>(u.size()) != buckets.k)
        throw DomainError("row_class_sums: sequence length must equal k");
    std::map<std::vector<std::int64_t>, Rational> sums;
    for (const auto& [parts, counts] : buckets.table)
        sums.emplace(parts, bucket_row_sum(buckets.p, buckets.k, counts, u, exponents));
    return sums;
}

Rational bucketed_class_sum(const CharSpec& spec, const CycleType& ct,
                            const SylowBuckets& buckets) {
    if (spec.p != buckets.p || spec.k() != buckets.k)
        throw DomainError("bucketed_class_sum: census does not match the character");
    if (ct.degree != spec.n()) throw DomainError("bucketed_class_sum: degree mismatch");

    std::vector<std::map<std::vector<std::int64_t>, Rational>> factor_sums;
    factor_sums.reserve(static_cast<size_t>(spec.a()));
    for (int i = 0; i < spec.a(); ++i)
        factor_sums.push_back(
            row_class_sums(buckets, spec.rows[static_cast<size_t>(i)],
                           spec.exponents[static_cast<size_t>(i)]));

    // Assign a sub-multiset of ct to each factor, in all ways.
    std::function<Rational(size_t, const std::vector<std::int64_t>&)> conv =
        [&](size_t factor, const std::vector<std::int64_t>& remaining) -> Rational {
        if (factor == factor_sums.size())
            return remaining.empty() ? Rational(1) : Rational(0);
        Rational total = 0;
        for (const auto& [parts, value] : factor_sums[factor]) {
            if (value == 0) continue;
            const auto rest = multiset_subtract(remaining, parts);
            if (!rest) continue;
            total += value * conv(factor + 1, *rest);
        }
        return total;
    };
    return conv(0, ct.parts);
}

// ---------------------------------------------------------------------------
// Campaign: gamma sweep
// ---------------------------------------------------------------------------

VerificationReport sweep_gamma(std::int64_t p, int k_max, std::int64_t budget, int threads) {
    require_prime(p);
    if (k_max < 1) throw DomainError("sweep_gamma: k_max must be at least 1");
    Timer timer;
    VerificationReport report;
    report.campaign = "gamma-sweep";
    report.params = {{"p", std::to_string(p)},
                     {"k_max", std::to_string(k_max)},
                     {"budget", std::to_string(budget)}};

    for (int k = 1; k <= k_max; ++k) {
        SylowBuckets buckets;
        try {
            buckets = sylow::bucket_sylow(p, k, budget, threads);
        } catch (const BudgetError& e) {
            add_skip(report, "k=" + std::to_string(k),
                     std::string("budget ") + std::to_string(budget) + " violated: " + e.what());
            continue;
        }
        report.elements_visited += buckets.total_elements();
        add_case(report, "k=" + std::to_string(k) + "|order",
                 BigInt(buckets.total_elements()) == sylow::wreath_order(p, k),
                 "census size disagrees with the group order");

        // Supported cycle types: strictly increasing level lists (size up to
        // p-1) and, at odd p, the equal pair (l, l).
        const std::int64_t pk = pow_int(p, static_cast<std::uint64_t>(k)).convert_to<std::int64_t>();
        std::vector<std::vector<int>> level_lists;
        {
            const int max_b = std::min<int>(static_cast<int>(p) - 1, k);
            std::vector<int> list;
            auto rec = [&](auto&& self, int next) -> void {
                if (!list.empty()) level_lists.push_back(list);
                if (static_cast<int>(list.size()) == max_b) return;
                for (int l = next; l <= k; ++l) {
                    list.push_back(l);
                    self(self, l + 1);
                    list.pop_back();
                }
            };
            rec(rec, 1);
        }

        const auto concretes = all_concretes(p, k);
        for (const auto& u : all_bitseqs(k)) {
            for (const auto& levels : level_lists) {
                std::vector<std::int64_t> parts;
                BigInt length_sum = 0;
                std::string levels_str;
                for (const int l : levels) {
                    parts.push_back(
                        pow_int(p, static_cast<std::uint64_t>(l)).convert_to<std::int64_t>());
                    length_sum += parts.back();
                    levels_str += std::to_string(l) + ",";
                }
                if (length_sum > pk) {
                    // The class is empty; all three routes must agree on 0.
                    const Rational closed = chars::gamma_closed(p, k, levels, u);
                    const Rational recursive = chars::gamma_recursive(p, k, levels, u);
                    add_case(report,
                             "k=" + std::to_string(k) + "|levels=" + levels_str +
                                 "|u=" + bits_str(u) + "|vanishing",
                             closed == 0 && recursive == 0,
                             "closed=" + rat_str(closed) + " recursive=" + rat_str(recursive));
                    continue;
                }
                const auto ct = CycleType::with_fixed_points(pk, parts);

                const Rational closed = chars::gamma_closed(p, k, levels, u);
                const Rational recursive = chars::gamma_recursive(p, k, levels, u);
                std::string id = "k=" + std::to_string(k) + "|type=" + ct.to_string() +
                                 "|u=" + bits_str(u);
                bool ok = closed == recursive;
                std::string detail;
                if (!ok)
                    detail = "closed=" + rat_str(closed) + " recursive=" + rat_str(recursive);
                // Oracle for every concrete exponent choice of this u-class.
                const auto it = buckets.table.find(ct.parts);
                for (const auto& concrete : concretes) {
                    if (concrete.u != u) continue;
                    const Rational oracle =
                        it == buckets.table.end()
                            ? Rational(0)
                            : bucket_row_sum(p, k, it->second, concrete.u, concrete.exps);
                    if (oracle != closed) {
                        ok = false;
                        detail = "closed=" + rat_str(closed) + " oracle=" + rat_str(oracle);
                        break;
                    }
                }
                add_case(report, id, ok, detail);
            }
            if (p > 2) {
                for (int l = 1; l <= k; ++l) {
                    std::vector<std::int64_t> parts(2, pow_int(p, static_cast<std::uint64_t>(l))
                                                           .convert_to<std::int64_t>());
                    if (parts[0] + parts[1] > pk) {
                        const Rational closed = chars::gamma_pair(p, k, l, u);
                        const Rational recursive = chars::gamma_pair_recursive(p, k, l, u);
                        add_case(report,
                                 "k=" + std::to_string(k) + "|pair-l=" + std::to_string(l) +
                                     "|u=" + bits_str(u) + "|vanishing",
                                 closed == 0 && recursive == 0,
                                 "closed=" + rat_str(closed) + " recursive=" + rat_str(recursive));
                        continue;
                    }
                    const auto ct = CycleType::with_fixed_points(pk, parts);
                    const Rational closed = chars::gamma_pair(p, k, l, u);
                    const Rational recursive = chars::gamma_pair_recursive(p, k, l, u);
                    std::string id = "k=" + std::to_string(k) + "|type=" + ct.to_string() +
                                     "|u=" + bits_str(u);
                    bool ok = closed == recursive;
                    std::string detail;
                    if (!ok)
                        detail = "closed=" + rat_str(closed) + " recursive=" + rat_str(recursive);
                    const auto it = buckets.table.find(ct.parts);
                    for (const auto& concrete : concretes) {
                        if (concrete.u != u) continue;
                        const Rational oracle =
                            it == buckets.table.end()
                                ? Rational(0)
                                : bucket_row_sum(p, k, it->second, concrete.u, concrete.exps);
                        if (oracle != closed) {
                            ok = false;
                            detail = "closed=" + rat_str(closed) + " oracle=" + rat_str(oracle);
                            break;
                        }
                    }
                    add_case(report, id, ok, detail);
                }
            }
        }
    }
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Campaign: Theorem A certification
// ---------------------------------------------------------------------------

VerificationReport certify_theorem_a(std::int64_t p, std::int64_t n, std::int64_t budget,
                                     int threads) {
    require_prime(p);
    Timer timer;
    VerificationReport report;
    report.campaign = "theorem-a";
    report.params = {{"p", std::to_string(p)},
                     {"n", std::to_string(n)},
                     {"budget", std::to_string(budget)}};

    const auto shape = sylow::p_adic(n, p);
    if (shape.digits.size() != 1)
        throw DomainError("certify_theorem_a: n must equal a * p^k for a single p-adic digit");
    const int k = shape.digits[0].first;
    const int a = shape.digits[0].second;

    const auto buckets = sylow::bucket_sylow(p, k, budget, threads);
    report.elements_visited += buckets.total_elements();

    // Class-sum table per concrete character of the factor P_{p^k}.
    const auto concretes = all_concretes(p, k);
    std::vector<std::map<std::vector<std::int64_t>, Rational>> factor_tables;
    factor_tables.reserve(concretes.size());
    for (const auto& c : concretes)
        factor_tables.push_back(row_class_sums(buckets, c.u, c.exps));

    // Characters of P_n are a-tuples of concretes; build full induced value
    // maps by convolving factor tables.
    const BigInt group_order = sylow::sylow_order(n, p);
    std::vector<std::string> induced_fingerprint;
    std::vector<std::string> n_class_key;
    std::vector<size_t> tuple(static_cast<size_t>(a), 0);
    bool integrality_ok = true;
    std::string integrality_detail;
    bool done = false;
    while (!done) {
        // Convolve the a factor tables in tuple order.
        std::map<std::vector<std::int64_t>, Rational> values;
        values.emplace(std::vector<std::int64_t>{}, Rational(1));
        for (int i = 0; i < a; ++i) {
            std::map<std::vector<std::int64_t>, Rational> next;
            for (const auto& [acc_parts, acc_value] : values) {
                if (acc_value == 0) continue;
                for (const auto& [parts, value] : factor_tables[tuple[static_cast<size_t>(i)]]) {
                    if (value == 0) continue;
                    std::vector<std::int64_t> merged = acc_parts;
                    merged.insert(merged.end(), parts.begin(), parts.end());
                    std::sort(merged.begin(), merged.end());
                    next[merged] += acc_value * value;
                }
            }
            values = std::move(next);
        }
        std::ostringstream fingerprint;
        for (const auto& [parts, sum] : values) {
            const CycleType ct(n, parts);
            const Rational induced =
                Rational(sylow::centralizer_order(ct)) * sum / Rational(group_order);
            if (denominator(induced) != 1 && integrality_ok) {
                integrality_ok = false;
                integrality_detail = "non-integral induced value " + rat_str(induced) + " at " +
                                     ct.to_string();
            }
            if (induced != 0)
                fingerprint << parts_str(parts) << "=" << rat_str(induced) << ";";
        }
        induced_fingerprint.push_back(fingerprint.str());

        std::vector<std::string> rows;
        rows.reserve(static_cast<size_t>(a));
        for (int i = 0; i < a; ++i) rows.push_back(bits_str(concretes[tuple[static_cast<size_t>(i)]].u));
        std::sort(rows.begin(), rows.end());
        std::string key;
        for (const auto& r : rows) key += r + "|";
        n_class_key.push_back(key);

        done = true;
        for (size_t pos = tuple.size(); pos-- > 0;) {
            if (++tuple[pos] < concretes.size()) {
                done = false;
                break;
            }
            tuple[pos] = 0;
        }
        if (tuple.empty()) break;
    }

    const auto total_chars = induced_fingerprint.size();
    const BigInt expected_chars =
        pow_int(pow_int(p, static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(a));
    add_case(report, "character-count", BigInt(total_chars) == expected_chars,
             "expected (p^k)^a = " + expected_chars.str() + " concrete characters, got " +
                 std::to_string(total_chars));
    add_case(report, "integrality", integrality_ok, integrality_detail);

    // Group character indices by induced values and by N-class.
    std::map<std::string, std::vector<size_t>> by_induced, by_nclass;
    for (size_t i = 0; i < total_chars; ++i) {
        by_induced[induced_fingerprint[i]].push_back(i);
        by_nclass[n_class_key[i]].push_back(i);
    }
    auto canonical_blocks = [](const std::map<std::string, std::vector<size_t>>& groups) {
        std::vector<std::vector<size_t>> blocks;
        for (const auto& [key, members] : groups) blocks.push_back(members);
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    const auto induced_blocks = canonical_blocks(by_induced);
    const auto n_blocks = canonical_blocks(by_nclass);
    add_case(report, "partition-match", induced_blocks == n_blocks,
             "induced-equality classes differ from N-conjugacy classes (" +
                 std::to_string(induced_blocks.size()) + " vs " + std::to_string(n_blocks.size()) +
                 " classes)");

    std::vector<size_t> sizes;
    for (const auto& blk : induced_blocks) sizes.push_back(blk.size());
    std::sort(sizes.begin(), sizes.end());
    std::string sizes_str;
    for (const auto s : sizes) sizes_str += std::to_string(s) + ",";
    report.cases.push_back(
        {"classes", "pass", std::to_string(induced_blocks.size()) + " classes of sizes " + sizes_str});

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

// ---------------------------------------------------------------------------
// Campaign: property suites
// ---------------------------------------------------------------------------

namespace {

void suite_bell_identities(VerificationReport& report, std::mt19937_64& rng) {
    using combinat::complete_bell;
    using combinat::complete_bell_determinant;

    bool vanishing_ok = true;
    std::string detail;
    for (int m = 2; m <= combinat::kMaxBellDegree; ++m) {
        std::vector<Rational> xs;
        BigInt fact = 1;
        for (int i = 1; i <= m; ++i) {
            xs.push_back(Rational(-fact));
            fact *= i;
        }
        const Rational value = complete_bell(m, xs);
        if (value != 0) {
            vanishing_ok = false;
            detail = "B_" + std::to_string(m) + " = " + rat_str(value);
            break;
        }
    }
    add_case(report, "bell-vanishing-at-negative-factorials", vanishing_ok, detail);

    bool two_routes_ok = true;
    std::uniform_int_distribution<int> small(-6, 6);
    for (int m = 1; m <= 8 && two_routes_ok; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> xs;
            for (int i = 0; i < m; ++i) xs.push_back(Rational(small(rng)));
            const Rational by_partitions = complete_bell(m, xs);
            const Rational by_determinant = complete_bell_determinant(m, xs);
            if (by_partitions != by_determinant) {
                two_routes_ok = false;
                detail = "m=" + std::to_string(m) + ": " + rat_str(by_partitions) + " vs " +
                         rat_str(by_determinant);
                break;
            }
        }
    }
    add_case(report, "bell-partition-vs-determinant", two_routes_ok, detail);

    bool stirling_ok = true;
    for (int n = 2; n <= combinat::kMaxPartitionGround; ++n) {
        if (combinat::signed_partition_sum(n) != 0) {
            stirling_ok = false;
            detail = "n=" + std::to_string(n);
            break;
        }
    }
    add_case(report, "signed-partition-sum-vanishes", stirling_ok, detail);

    bool counts_ok = true;
    for (int b = 1; b <= 8; ++b) {
        if (BigInt(combinat::enumerate_partitions(b).size()) != combinat::bell_number(b)) {
            counts_ok = false;
            detail = "b=" + std::to_string(b);
            break;
        }
    }
    add_case(report, "partition-count-vs-bell-triangle", counts_ok, detail);
}

void suite_cut_identities(VerificationReport& report, std::mt19937_64& rng) {
    using combinat::LevelSet;
    using combinat::SetPartition;

    for (const std::int64_t p : {3, 5}) {
        bool ok = true;
        std::string detail;
        for (int b = 1; b <= 6 && ok; ++b) {
            // Random strictly increasing level set in [1, b+2].
            std::vector<int> pool(static_cast<size_t>(b + 2));
            for (int i = 0; i < b + 2; ++i) pool[static_cast<size_t>(i)] = i + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> levels(pool.begin(), pool.begin() + b);
            std::sort(levels.begin(), levels.end());
            const LevelSet ls(p, levels);

            for (const auto& alpha : combinat::enumerate_partitions(b)) {
                for (int i = 0; i <= b; ++i) {
                    BigInt rhs = 0;
                    for (const auto& beta : combinat::cuts(alpha, i))
                        rhs += combinat::m_coefficient(ls, beta, 0);
                    const BigInt lhs = combinat::m_coefficient(ls, alpha, i);
                    if (lhs != rhs) {
                        ok = false;
                        detail = "p=" + std::to_string(p) + " b=" + std::to_string(b) +
                                 " i=" + std::to_string(i) + ": " + lhs.str() + " vs " + rhs.str();
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        add_case(report, "cut-coefficient-identity-p" + std::to_string(p), ok, detail);
    }

    for (const std::int64_t p : {3, 5}) {
        bool ok = true;
        std::string detail;
        for (int b = 1; b <= 5 && ok; ++b) {
            std::vector<int> pool(static_cast<size_t>(b + 2));
            for (int i = 0; i < b + 2; ++i) pool[static_cast<size_t>(i)] = i + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> levels(pool.begin(), pool.begin() + b);
            std::sort(levels.begin(), levels.end());
            const LevelSet ls(p, levels);
            const int l_max = levels.back();

            for (const auto& lambda : combinat::enumerate_partitions(b)) {
                for (int k = l_max; k <= l_max + 3; ++k) {
                    const BigInt literal = combinat::theta_literal(ls, lambda, k);
                    const BigInt closed = combinat::theta_closed(ls, lambda, k);
                    if (literal != closed) {
                        ok = false;
                        detail = "p=" + std::to_string(p) + " b=" + std::to_string(b) +
                                 " k=" + std::to_string(k) + ": " + literal.str() + " vs " +
                                 closed.str();
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        add_case(report, "theta-collapse-identity-p" + std::to_string(p), ok, detail);
    }
}

void suite_replace_identity(VerificationReport& report, std::mt19937_64& rng, int instances) {
    using combinat::SetPartition;
    std::uniform_int_distribution<int> size_dist(1, 4);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 4);

    bool ok = true;
    std::string detail;
    int checked = 0;
    for (int trial = 0; trial < instances && ok; ++trial) {
        const int a = size_dist(rng);
        const int b = size_dist(rng);
        // Random factor values c[t][i].
        std::vector<std::vector<Rational>> c(static_cast<size_t>(b),
                                             std::vector<Rational>(static_cast<size_t>(a)));
        for (auto& row : c)
            for (auto& v : row) v = Rational(num_dist(rng), den_dist(rng));

        // Random partition nu of [b] via a random growth string.
        std::vector<int> rgs(static_cast<size_t>(b), 0);
        int max_id = 0;
        for (int i = 1; i < b; ++i) {
            std::uniform_int_distribution<int> id_dist(0, max_id + 1);
            rgs[static_cast<size_t>(i)] = id_dist(rng);
            max_id = std::max(max_id, rgs[static_cast<size_t>(i)]);
        }
        const SetPartition nu = SetPartition::from_rgs(rgs);

        auto block_product = [&](const std::vector<int>& block, int i) {
            Rational prod = 1;
            for (const int t : block) prod *= c[static_cast<size_t>(t - 1)][static_cast<size_t>(i)];
            return prod;
        };

        // Restricted sum: distinct indices per block of nu.
        Rational restricted = 0;
        {
            const int s = nu.size();
            std::vector<int> pick(static_cast<size_t>(s), -1);
            std::vector<bool> used(static_cast<size_t>(a), false);
            auto rec = [&](auto&& self, int pos, Rational acc) -> void {
                if (pos == s) {
                    restricted += acc;
                    return;
                }
                for (int i = 0; i < a; ++i) {
                    if (used[static_cast<size_t>(i)]) continue;
                    used[static_cast<size_t>(i)] = true;
                    self(self, pos + 1,
                         acc * block_product(nu.blocks()[static_cast<size_t>(pos)], i));
                    used[static_cast<size_t>(i)] = false;
                }
            };
            rec(rec, 0, Rational(1));
        }

        // Unrestricted side: signed sum over coarsenings with factorial weights.
        Rational unrestricted = 0;
        for (const auto& lambda : combinat::enumerate_partitions(b)) {
            if (!combinat::refines(nu, lambda)) continue;
            Rational term = 1;
            for (const auto& tau : lambda.blocks()) {
                term *= Rational(
                    factorial(static_cast<unsigned>(combinat::multiplicity(nu, lambda, tau) - 1)));
                Rational sum = 0;
                for (int i = 0; i < a; ++i) sum += block_product(tau, i);
                term *= sum;
            }
            unrestricted += ((nu.size() - lambda.size()) % 2 == 0) ? term : -term;
        }

        if (restricted != unrestricted) {
            ok = false;
            detail = "a=" + std::to_string(a) + " b=" + std::to_string(b) + ": " +
                     rat_str(restricted) + " vs " + rat_str(unrestricted);
        }
        ++checked;
    }
    add_case(report, "index-replacement-identity", ok,
             ok ? "" : detail + " after " + std::to_string(checked) + " instances");
    if (ok)
        report.cases.back().detail = std::to_string(checked) + " random instances";
}

void suite_nonzero(VerificationReport& report, std::mt19937_64& rng, int instances) {
    bool ok = true;
    std::string detail;
    const std::vector<std::int64_t> primes = {2, 3, 5};
    for (int trial = 0; trial < instances && ok; ++trial) {
        const std::int64_t p = primes[static_cast<size_t>(
            std::uniform_int_distribution<int>(0, 2)(rng))];
        const int a = std::uniform_int_distribution<int>(1, static_cast<int>(p) - 1)(rng);
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<BitSeq> rows;
        std::vector<std::vector<int>> exps;
        for (int i = 0; i < a; ++i) {
            BitSeq row(static_cast<size_t>(k));
            std::vector<int> e(static_cast<size_t>(k), 1);
            for (int j = 0; j < k; ++j) {
                row[static_cast<size_t>(j)] =
                    static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 1)(rng));
                if (row[static_cast<size_t>(j)] == 0 && p > 2)
                    e[static_cast<size_t>(j)] =
                        std::uniform_int_distribution<int>(1, static_cast<int>(p) - 1)(rng);
            }
            rows.push_back(std::move(row));
            exps.push_back(std::move(e));
        }
        const CharSpec spec(p, rows, exps);
        try {
            const Rational value = chars::induced_nonzero_check(spec);
            // Cross-check against the enumeration oracle when affordable.
            const BigInt group_order = sylow::product_structure(spec.n(), p).order();
            if (group_order <= 100000) {
                std::vector<std::int64_t> parts(
                    static_cast<size_t>(a),
                    pow_int(p, static_cast<std::uint64_t>(k)).convert_to<std::int64_t>());
                const auto ct = CycleType::with_fixed_points(spec.n(), parts);
                const auto oracle =
                    chars::induced_value(spec, ct, chars::EvalMode::kOracle, 200000);
                if (oracle.value != value) {
                    ok = false;
                    detail = "formula " + rat_str(value) + " vs oracle " + rat_str(oracle.value);
                }
            }
        } catch (const InternalError& e) {
            ok = false;
            detail = e.what();
        }
    }
    add_case(report, "nonzero-on-full-cycle-types", ok,
             ok ? std::to_string(instances) + " random characters" : detail);
}

void suite_product_factorization(VerificationReport& report) {
    // n = 12 = 3 + 9 at p = 3: the induced value at (9-cycle) * g' factors
    // through the two direct factors.
    const std::int64_t p = 3;
    const auto ps = sylow::product_structure(12, p);
    const auto concretes_p3 = all_concretes(p, 1);
    const auto concretes_p9 = all_concretes(p, 2);

    const std::vector<std::vector<std::int64_t>> tail_types = {{}, {3}, {2}};
    bool ok = true;
    std::string detail;
    for (const auto& c9 : concretes_p9) {
        for (const auto& c3 : concretes_p3) {
            for (const auto& tail : tail_types) {
                std::vector<std::int64_t> parts = {9};
                parts.insert(parts.end(), tail.begin(), tail.end());
                const auto ct12 = CycleType::with_fixed_points(12, parts);

                // Direct: enumerate the class inside P_3 x P_9.
                CycInt sum = CycInt::zero(p);
                sylow::product_class_intersection(
                    ps, ct12, sylow::kDefaultElementBudget, [&](const sylow::ProductElem& x) {
                        CycInt value = chars::char_eval_row(p, c3.u, c3.exps, x[0]);
                        value = value * chars::char_eval_row(p, c9.u, c9.exps, x[1]);
                        sum += value;
                    });
                const Rational direct = Rational(sylow::centralizer_order(ct12)) *
                                        Rational(sum.rational_part("product factorization")) /
                                        Rational(sylow::sylow_order(12, p));

                // Factored: induced values inside S_9 and S_3 separately.
                const CharSpec spec9(p, {c9.u}, {c9.exps});
                const CharSpec spec3(p, {c3.u}, {c3.exps});
                const auto ct9 = CycleType::with_fixed_points(9, {9});
                const auto ct3 = CycleType::with_fixed_points(3, tail);
                const Rational factored =
                    chars::induced_value(spec9, ct9, chars::EvalMode::kOracle, 1000).value *
                    chars::induced_value(spec3, ct3, chars::EvalMode::kOracle, 1000).value;

                if (direct != factored) {
                    ok = false;
                    detail = "u9=" + bits_str(c9.u) + " u3=" + bits_str(c3.u) + " type " +
                             ct12.to_string() + ": " + rat_str(direct) + " vs " +
                             rat_str(factored);
                }
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    add_case(report, "product-factorization-n12", ok, detail);
}

}  // namespace

VerificationReport run_property_suites(const SuitesConfig& config) {
    Timer timer;
    VerificationReport report;
    report.campaign = "property-suites";
    report.params = {{"seed", std::to_string(config.seed)},
                     {"replace_instances", std::to_string(config.replace_instances)},
                     {"nonzero_instances", std::to_string(config.nonzero_instances)}};
    std::mt19937_64 rng(config.seed);

    suite_replace_identity(report, rng, config.replace_instances);
    suite_cut_identities(report, rng);
    suite_nonzero(report, rng, config.nonzero_instances);
    suite_product_factorization(report);
    suite_bell_identities(report, rng);

    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

}  // namespace sylchar::verify
