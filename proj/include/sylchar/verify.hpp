#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sylchar/char_spec.hpp"
#include "sylchar/cycle_type.hpp"
#include "sylchar/numbers.hpp"
#include "sylchar/wreath.hpp"

namespace sylchar::verify {

struct CaseResult {
    std::string id;
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;  // failure values or the violated budget for skips
};

struct VerificationReport {
    std::string campaign;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CaseResult> cases;
    std::int64_t elements_visited = 0;
    std::int64_t elapsed_ms = 0;
    std::string first_failure;  // inputs + both values of the first failing check

    int count(const std::string& status) const;
    bool all_passed() const { return count("fail") == 0; }
};

/// JSON with stable field names (campaign, params, cases[], status, detail,
/// totals, elements). Timing is optional so that identical configurations
/// produce byte-identical documents.
std::string report_json(const VerificationReport& report, bool include_timing = true);

std::string report_table(const VerificationReport& report);

/// For every k <= k_max, every u and every supported cycle type of P_{p^k},
/// asserts closed form == proof recursion == enumeration, including all
/// concrete exponent choices on the enumeration side. Enumerations beyond
/// the budget are skipped with the violated budget named.
VerificationReport sweep_gamma(std::int64_t p, int k_max, std::int64_t budget, int threads = 0);

/// Enumerates all concrete linear characters of P_n (n = a p^k), computes
/// their full induced characters by the bucketed oracle, and asserts the
/// equality partition coincides with the N-conjugacy partition.
VerificationReport certify_theorem_a(std::int64_t p, std::int64_t n, std::int64_t budget,
                                     int threads = 0);

struct SuitesConfig {
    std::uint64_t seed = 7;
    int replace_instances = 1000;
    int nonzero_instances = 50;
};

/// Property suites: index-replacement identity on random rationals, the
/// cut-coefficient and theta identities, the nonvanishing of induced values
/// on full p^k-cycle types, the product factorization at n = 12, and the
/// Bell/Stirling identities.
VerificationReport run_property_suites(const SuitesConfig& config);

// ---------------------------------------------------------------------------
// Bucketed class sums (shared by campaigns and regression tests).
// ---------------------------------------------------------------------------

/// Class sum of the one-row character (u, exponents) over each cycle type of
/// P_{p^k}, from a census. Values are provably rational; a non-rational sum
/// aborts.
std::map<std::vector<std::int64_t>, Rational> row_class_sums(const sylow::SylowBuckets& buckets,
                                                             const chars::BitSeq& u,
                                                             const std::vector<int>& exponents);

/// Class sum of a multi-row character over P_{a p^k} at cycle type ct by
/// convolving per-row sums across the a factors; never enumerates the
/// product group.
Rational bucketed_class_sum(const chars::CharSpec& spec, const sylow::CycleType& ct,
                            const sylow::SylowBuckets& buckets);

}  // namespace sylchar::verify
