#include "sylchar/classify.hpp"

#include <algorithm>
#include <functional>

#include "sylchar/closed_forms.hpp"

namespace sylchar::classify {

IntMultiset make_multiset(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    return values;
}

bool n_conjugate(const chars::CharSpec& s, const chars::CharSpec& t) {
    if (s.p != t.p || s.a() != t.a() || s.k() != t.k())
        throw DomainError("n_conjugate: characters have different shapes");
    auto srows = s.rows, trows = t.rows;
    std::sort(srows.begin(), srows.end());
    std::sort(trows.begin(), trows.end());
    return srows == trows;
}

bool n_conjugate(const std::vector<chars::CharSpec>& s, const std::vector<chars::CharSpec>& t) {
    if (s.size() != t.size())
        throw DomainError("n_conjugate: different numbers of digit blocks");
    for (size_t i = 0; i < s.size(); ++i)
        if (!n_conjugate(s[i], t[i])) return false;
    return true;
}

std::int64_t f_value(const std::vector<int>& levels, const chars::BitSeq& s) {
    std::int64_t total = 0;
    for (const int l : levels) {
        if (l < 1 || l > static_cast<int>(s.size()))
            throw DomainError("f_value: level out of range");
        for (int m = 0; m < l; ++m) total += s[static_cast<size_t>(m)];
    }
    return total;
}

IntMultiset f_multiset(const std::vector<int>& levels, const chars::CharSpec& spec) {
    std::vector<std::int64_t> values;
    values.reserve(static_cast<size_t>(spec.a()));
    for (const auto& row : spec.rows) values.push_back(f_value(levels, row));
    return make_multiset(std::move(values));
}

namespace {

/// Strictly increasing level lists over [k] of exactly size b, lexicographic.
void for_each_level_list(int k, int b, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> list(static_cast<size_t>(b));
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == b) {
            fn(list);
            return;
        }
        for (int l = next; l <= k - (b - pos - 1); ++l) {
            list[static_cast<size_t>(pos)] = l;
            self(self, pos + 1, l + 1);
        }
    };
    rec(rec, 0, 1);
}

IntMultiset rows_f_multiset(const std::vector<int>& levels,
                            const std::vector<chars::BitSeq>& rows) {
    std::vector<std::int64_t> values;
    values.reserve(rows.size());
    for (const auto& row : rows) values.push_back(f_value(levels, row));
    return make_multiset(std::move(values));
}

}  // namespace

FProfile build_profile(const std::vector<chars::BitSeq>& rows) {
    if (rows.empty()) throw DomainError("build_profile: at least one row required");
    FProfile profile;
    profile.a = static_cast<int>(rows.size());
    profile.k = static_cast<int>(rows.front().size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != profile.k)
            throw DomainError("build_profile: rows must share a common length");
    const int max_b = std::min(profile.a, profile.k);
    for (int b = 1; b <= max_b; ++b)
        for_each_level_list(profile.k, b, [&](const std::vector<int>& levels) {
            profile.table.emplace(levels, rows_f_multiset(levels, rows));
        });
    return profile;
}

FProfile build_profile(const chars::CharSpec& spec) { return build_profile(spec.rows); }

InducedEqualResult induced_equal(const chars::CharSpec& s, const chars::CharSpec& t) {
    if (s.p != t.p || s.n() != t.n())
        throw DomainError("induced_equal: characters live in different groups");
    InducedEqualResult result;
    result.equal = n_conjugate(s, t);
    if (result.equal) return result;

    // The first differing f-multiset, in increasing size then lex order,
    // pins a cycle type where the class sums differ: every shorter list
    // agrees, so in the partition expansion of the class sum all terms
    // except the full-set one cancel.
    const int k = s.k();
    const int max_b = std::min(s.a(), k);
    for (int b = 1; b <= max_b; ++b) {
        std::optional<std::vector<int>> found;
        for_each_level_list(k, b, [&](const std::vector<int>& levels) {
            if (found) return;
            if (f_multiset(levels, s) != f_multiset(levels, t)) found = levels;
        });
        if (!found) continue;

        EqualityWitness witness;
        witness.levels = *found;
        std::vector<std::int64_t> parts;
        for (const int l : *found)
            parts.push_back(pow_int(s.p, static_cast<std::uint64_t>(l)).convert_to<std::int64_t>());
        witness.cycle_type = sylow::CycleType::with_fixed_points(s.n(), parts);
        witness.class_sum_s = chars::class_sum(s, witness.cycle_type);
        witness.class_sum_t = chars::class_sum(t, witness.cycle_type);
        if (witness.class_sum_s == witness.class_sum_t)
            throw InternalError(
                "induced_equal: witness class sums coincide at the first differing "
                "f-multiset; this contradicts the classification");
        result.witness = std::move(witness);
        return result;
    }
    throw InternalError(
        "induced_equal: rows differ but every f-multiset agrees; this contradicts the "
        "reconstruction theorem");
}

SignedPowerResult signed_power_case(std::int64_t q, const IntMultiset& sigma,
                                    const IntMultiset& tau) {
    if (q < 2) throw DomainError("signed_power_case: q must be at least 2");
    if (sigma.size() != tau.size())
        throw DomainError("signed_power_case: multisets must have equal size");
    const auto a = static_cast<std::int64_t>(sigma.size());
    if (a < 1 || a > q) throw DomainError("signed_power_case: size must be in [1, q]");
    for (const auto v : sigma)
        if (v < 0) throw DomainError("signed_power_case: entries must be nonnegative");
    for (const auto v : tau)
        if (v < 0) throw DomainError("signed_power_case: entries must be nonnegative");

    auto signed_sum = [q](const IntMultiset& values) {
        BigInt sum = 0;
        for (const auto v : values) {
            const BigInt power = pow_int(q, static_cast<std::uint64_t>(v));
            sum += (v % 2 == 0) ? power : -power;
        }
        return sum;
    };
    if (signed_sum(sigma) != signed_sum(tau)) return {SignedPowerVerdict::kSumsDiffer, 0};

    const IntMultiset ss = make_multiset(sigma);
    const IntMultiset tt = make_multiset(tau);
    if (ss == tt) return {SignedPowerVerdict::kEqual, 0};

    // Only remaining possibility: {w, w-1, ..., w-1} vs {w-2, ..., w-2}
    // in one of the two orientations, and only at full size a = q.
    auto matches = [a](const IntMultiset& top, const IntMultiset& flat,
                       std::int64_t& w_out) {
        const std::int64_t w = top.back();
        if (w < 2) return false;
        for (std::int64_t i = 0; i + 1 < a; ++i)
            if (top[static_cast<size_t>(i)] != w - 1) return false;
        for (const auto v : flat)
            if (v != w - 2) return false;
        w_out = w;
        return true;
    };
    std::int64_t w = 0;
    if (a == q && (matches(ss, tt, w) || matches(tt, ss, w)))
        return {SignedPowerVerdict::kExceptional, w};
    throw InternalError(
        "signed_power_case: equal sums with multisets that are neither equal nor of the "
        "exceptional shape");
}

KeyLemmaResult keylemma_conclude(const std::vector<std::int64_t>& l,
                                 const std::vector<std::int64_t>& m, int c) {
    const auto b = static_cast<std::int64_t>(l.size());
    if (b != static_cast<std::int64_t>(m.size()))
        throw DomainError("keylemma_conclude: lists must have equal length");
    if (c < 1 || c >= b) throw DomainError("keylemma_conclude: need 1 <= c < length");
    if (make_multiset(l) != make_multiset(m))
        throw DomainError("keylemma_conclude: precondition failed, multisets differ");
    auto incremented = [c](const std::vector<std::int64_t>& values) {
        std::vector<std::int64_t> out = values;
        for (int i = 0; i < c; ++i) ++out[static_cast<size_t>(i)];
        return make_multiset(std::move(out));
    };
    if (incremented(l) != incremented(m))
        throw DomainError(
            "keylemma_conclude: precondition failed, incremented multisets differ");

    const IntMultiset l_prefix =
        make_multiset(std::vector<std::int64_t>(l.begin(), l.begin() + c));
    const IntMultiset m_prefix =
        make_multiset(std::vector<std::int64_t>(m.begin(), m.begin() + c));
    KeyLemmaResult result;
    if (l_prefix == m_prefix) {
        result.holds = true;
        result.common = l_prefix;
    } else {
        std::string report = "prefix multisets differ: {";
        for (const auto v : l_prefix) report += std::to_string(v) + ",";
        report += "} vs {";
        for (const auto v : m_prefix) report += std::to_string(v) + ",";
        report += "}";
        result.counterexample = std::move(report);
    }
    return result;
}

namespace {

using ProfileTable = std::map<std::vector<int>, IntMultiset>;

const IntMultiset& profile_at(const ProfileTable& table, const std::vector<int>& levels) {
    const auto it = table.find(levels);
    if (it == table.end()) throw DomainError("part2_equivalent: profile is incomplete");
    return it->second;
}

/// Splits multiset `after` as `before` with exactly `expected` elements
/// incremented by one; returns the multiset of incremented elements as they
/// appear in `before`. The counting recurrence determines it uniquely.
std::optional<IntMultiset> extract_incremented(const IntMultiset& before,
                                               const IntMultiset& after, std::int64_t expected) {
    std::map<std::int64_t, std::int64_t> cnt_before, cnt_after;
    for (const auto v : before) ++cnt_before[v];
    for (const auto v : after) ++cnt_after[v];
    std::map<std::int64_t, std::int64_t> inc;
    std::int64_t carried = 0, total = 0;
    std::int64_t lo = before.front(), hi = before.back() + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
        const std::int64_t take = cnt_before[v] - cnt_after[v] + carried;
        if (take < 0 || take > cnt_before[v]) return std::nullopt;
        inc[v] = take;
        carried = take;
        total += take;
    }
    if (carried != 0 || total != expected) return std::nullopt;
    IntMultiset out;
    out.reserve(static_cast<size_t>(expected));
    for (const auto& [v, c] : inc) out.insert(out.end(), static_cast<size_t>(c), v);
    return out;
}

std::vector<int> shifted_up(const std::vector<int>& levels) {
    std::vector<int> out = levels;
    for (auto& l : out) ++l;
    return out;
}

bool part2_rec(int a, int k, const ProfileTable& s, const ProfileTable& t);

/// Case where every row starts with the same bit z on both sides: strip the
/// first bit by shifting levels down and subtracting the constant offset.
bool part2_strip(int a, int k, int z, const ProfileTable& s, const ProfileTable& t) {
    ProfileTable s_next, t_next;
    const int max_b = std::min(a, k - 1);
    for (int b = 1; b <= max_b; ++b)
        for_each_level_list(k - 1, b, [&](const std::vector<int>& levels) {
            const auto lifted = shifted_up(levels);
            auto strip = [&](const ProfileTable& table) {
                IntMultiset values = profile_at(table, lifted);
                for (auto& v : values) v -= static_cast<std::int64_t>(b) * z;
                return values;
            };
            s_next.emplace(levels, strip(s));
            t_next.emplace(levels, strip(t));
        });
    return part2_rec(a, k - 1, s_next, t_next);
}

bool part2_rec(int a, int k, const ProfileTable& s, const ProfileTable& t) {
    const auto& f1_s = profile_at(s, {1});
    const auto& f1_t = profile_at(t, {1});
    if (f1_s != f1_t) return false;
    if (k == 1) return true;

    std::int64_t ones = 0;
    for (const auto v : f1_s) ones += v;
    if (ones == 0 || ones == a) return part2_strip(a, k, ones == 0 ? 0 : 1, s, t);

    // Mixed first bits: split each remaining f-multiset into the rows whose
    // first bit is one (they gain +1 when level 1 joins the list) and the
    // rest, then recurse on the two sub-profiles.
    const auto c = ones;
    ProfileTable s_one, s_zero, t_one, t_zero;
    const int max_b = std::min(a - 1, k - 1);
    for (int b = 1; b <= max_b; ++b) {
        bool mismatch = false;
        for_each_level_list(k - 1, b, [&](const std::vector<int>& levels) {
            if (mismatch) return;
            const auto lifted = shifted_up(levels);
            std::vector<int> with_one = lifted;
            with_one.insert(with_one.begin(), 1);

            auto split = [&](const ProfileTable& table, ProfileTable& out_one,
                             ProfileTable& out_zero) {
                const IntMultiset& base = profile_at(table, lifted);
                const IntMultiset& bumped = profile_at(table, with_one);
                const auto inc = extract_incremented(base, bumped, c);
                if (!inc) return false;
                IntMultiset one_part = *inc;
                for (auto& v : one_part) v -= b;  // remove the first-bit contribution
                // Remaining rows: multiset difference base \ inc.
                IntMultiset zero_part;
                {
                    std::map<std::int64_t, std::int64_t> counts;
                    for (const auto v : base) ++counts[v];
                    for (const auto v : *inc) --counts[v];
                    for (const auto& [v, n] : counts)
                        zero_part.insert(zero_part.end(), static_cast<size_t>(n), v);
                }
                out_one.emplace(levels, make_multiset(std::move(one_part)));
                out_zero.emplace(levels, make_multiset(std::move(zero_part)));
                return true;
            };
            if (!split(s, s_one, s_zero) || !split(t, t_one, t_zero)) mismatch = true;
        });
        if (mismatch) return false;
    }
    return part2_rec(static_cast<int>(c), k - 1, s_one, t_one) &&
           part2_rec(static_cast<int>(a - c), k - 1, s_zero, t_zero);
}

}  // namespace

bool part2_equivalent(const FProfile& s_profile, const FProfile& t_profile) {
    if (s_profile.a != t_profile.a || s_profile.k != t_profile.k)
        throw DomainError("part2_equivalent: profile shapes differ");
    if (s_profile.a < 1 || s_profile.k < 1)
        throw DomainError("part2_equivalent: profiles must be nonempty");
    return part2_rec(s_profile.a, s_profile.k, s_profile.table, t_profile.table);
}

}  // namespace sylchar::classify
