#include "sylchar/level_poly.hpp"

#include <algorithm>

#include "sylchar/errors.hpp"

namespace sylchar::combinat {

LevelSet::LevelSet(std::int64_t p_, std::vector<int> levels_) : p(p_), levels(std::move(levels_)) {
    require_prime(p);
    if (levels.empty()) throw DomainError("LevelSet: at least one level required");
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 1) throw DomainError("LevelSet: levels must be positive");
        if (i > 0 && levels[i] <= levels[i - 1])
            throw DomainError("LevelSet: levels must be strictly increasing");
    }
}

PolyInPk::PolyInPk(const Rational& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

PolyInPk PolyInPk::variable() {
    PolyInPk p;
    p.coeffs_[1] = 1;
    return p;
}

Rational PolyInPk::coefficient(int degree) const {
    const auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational PolyInPk::evaluate(const BigInt& value) const {
    Rational sum = 0;
    for (const auto& [deg, coeff] : coeffs_)
        sum += coeff * Rational(pow_int(value, static_cast<std::uint64_t>(deg)));
    return sum;
}

void PolyInPk::set_coefficient(int degree, const Rational& value) {
    if (value == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = value;
}

PolyInPk& PolyInPk::operator+=(const PolyInPk& o) {
    for (const auto& [deg, coeff] : o.coeffs_) set_coefficient(deg, coefficient(deg) + coeff);
    return *this;
}

PolyInPk& PolyInPk::operator-=(const PolyInPk& o) {
    for (const auto& [deg, coeff] : o.coeffs_) set_coefficient(deg, coefficient(deg) - coeff);
    return *this;
}

PolyInPk operator*(const PolyInPk& a, const PolyInPk& b) {
    PolyInPk out;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_)
            out.set_coefficient(da + db, out.coefficient(da + db) + ca * cb);
    return out;
}

namespace {

/// Sorted copy of tau, validated against the level set.
std::vector<int> checked_tau(const LevelSet& levels, const std::vector<int>& tau) {
    if (tau.empty()) throw DomainError("tau must be a nonempty set of level indices");
    std::vector<int> t = tau;
    std::sort(t.begin(), t.end());
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1 || t[i] > levels.count())
            throw DomainError("tau contains a level index out of range");
        if (i > 0 && t[i] == t[i - 1]) throw DomainError("tau contains a repeated index");
    }
    return t;
}

/// Suffix sums p_{t_z} + ... + p_{t_m} for m = z down to 2.
std::vector<BigInt> suffix_sums(const LevelSet& levels, const std::vector<int>& sorted_tau) {
    std::vector<BigInt> sums;
    const size_t z = sorted_tau.size();
    BigInt acc = 0;
    for (size_t m = z; m >= 2; --m) {
        acc += levels.p_level(sorted_tau[m - 1]);
        sums.push_back(acc);
    }
    return sums;
}

}  // namespace

BigInt m_product(const LevelSet& levels, const std::vector<int>& tau) {
    const auto t = checked_tau(levels, tau);
    BigInt prod = 1;
    for (const auto& s : suffix_sums(levels, t)) prod *= s;
    return prod;
}

PolyInPk r_polynomial(const LevelSet& levels, const std::vector<int>& tau) {
    const auto t = checked_tau(levels, tau);
    PolyInPk poly{Rational(1)};
    const PolyInPk var = PolyInPk::variable();
    for (const auto& s : suffix_sums(levels, t)) poly = poly * (var - PolyInPk(Rational(s)));
    return poly;
}

BigInt r_value(const LevelSet& levels, const std::vector<int>& tau, int k) {
    const auto t = checked_tau(levels, tau);
    if (k < levels.levels[static_cast<size_t>(t.back() - 1)])
        throw DomainError("r_value: k must be at least the largest level in tau");
    const BigInt pk = pow_int(levels.p, static_cast<std::uint64_t>(k));
    BigInt prod = 1;
    for (const auto& s : suffix_sums(levels, t)) prod *= pk - s;
    return prod;
}

BigInt m_coefficient(const LevelSet& levels, const SetPartition& alpha, int i) {
    if (alpha.ground_size() != levels.count())
        throw DomainError("m_coefficient: alpha must partition the level index set");
    if (i < 0) throw DomainError("m_coefficient: i must be nonnegative");
    PolyInPk prod{Rational(1)};
    for (const auto& blk : alpha.blocks()) prod = prod * r_polynomial(levels, blk);
    return as_integer(prod.coefficient(i), "m_coefficient");
}

BigInt theta_literal(const LevelSet& levels, const SetPartition& lambda, int k) {
    const int b = levels.count();
    if (lambda.ground_size() != b) throw DomainError("theta_literal: lambda must partition [b]");
    if (k < levels.levels.back()) throw DomainError("theta_literal: k below the largest level");
    BigInt sum = 0;
    for (const auto& nu : enumerate_partitions(b)) {
        if (!refines(nu, lambda)) continue;
        BigInt term = pow_int(levels.p, static_cast<std::uint64_t>(k) *
                                            static_cast<std::uint64_t>(nu.size()));
        for (const auto& tau : nu.blocks()) term *= r_value(levels, tau, k);
        for (const auto& tau : lambda.blocks())
            term *= factorial(static_cast<unsigned>(multiplicity(nu, lambda, tau) - 1));
        sum += ((nu.size() - lambda.size()) % 2 == 0) ? term : -term;
    }
    return sum;
}

BigInt theta_closed(const LevelSet& levels, const SetPartition& lambda, int k) {
    const int b = levels.count();
    if (lambda.ground_size() != b) throw DomainError("theta_closed: lambda must partition [b]");
    BigInt value = pow_int(levels.p, static_cast<std::uint64_t>(k) *
                                         static_cast<std::uint64_t>(lambda.size()));
    for (const auto& tau : lambda.blocks()) value *= m_product(levels, tau);
    return ((b - lambda.size()) % 2 == 0) ? value : -value;
}

}  // namespace sylchar::combinat
