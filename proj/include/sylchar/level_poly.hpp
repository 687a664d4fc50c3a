#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sylchar/numbers.hpp"
#include "sylchar/set_partition.hpp"

namespace sylchar::combinat {

/// A prime p together with strictly increasing cycle levels l_1 < ... < l_b.
/// Derived quantities p_j = p^{l_j} are the corresponding cycle lengths.
struct LevelSet {
    LevelSet(std::int64_t p, std::vector<int> levels);

    std::int64_t p;
    std::vector<int> levels;  // l_1 < l_2 < ... < l_b, all >= 1

    int count() const { return static_cast<int>(levels.size()); }
    /// p^{l_j} for the 1-based level index j.
    BigInt p_level(int j) const { return pow_int(p, static_cast<std::uint64_t>(levels[static_cast<size_t>(j - 1)])); }
};

/// Polynomial in the single variable P standing for p^k, with exact rational
/// coefficients. Zero coefficients are never stored.
class PolyInPk {
public:
    PolyInPk() = default;
    explicit PolyInPk(const Rational& constant);

    static PolyInPk variable();  // the monomial P

    const std::map<int, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int degree) const;
    int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational evaluate(const BigInt& value) const;

    PolyInPk& operator+=(const PolyInPk& o);
    PolyInPk& operator-=(const PolyInPk& o);
    friend PolyInPk operator+(PolyInPk a, const PolyInPk& b) { return a += b; }
    friend PolyInPk operator-(PolyInPk a, const PolyInPk& b) { return a -= b; }
    friend PolyInPk operator*(const PolyInPk& a, const PolyInPk& b);
    bool operator==(const PolyInPk& o) const { return coeffs_ == o.coeffs_; }

    void set_coefficient(int degree, const Rational& value);

private:
    std::map<int, Rational> coeffs_;
};

/// M(tau): 1 for a singleton tau; otherwise the product of the suffix sums
/// p_{t_z}, p_{t_z}+p_{t_{z-1}}, ..., p_{t_z}+...+p_{t_2} of the cycle
/// lengths selected by tau (1-based level indices, any iteration order).
BigInt m_product(const LevelSet& levels, const std::vector<int>& tau);

/// R^tau as a polynomial in P: the product over m = 2..z of
/// (P - (p_{t_z} + ... + p_{t_m})); the constant 1 for a singleton.
PolyInPk r_polynomial(const LevelSet& levels, const std::vector<int>& tau);

/// R^tau evaluated at P = p^k. Requires k >= the largest level in tau.
BigInt r_value(const LevelSet& levels, const std::vector<int>& tau, int k);

/// M_i(alpha): the coefficient of P^i in the product over blocks tau of
/// alpha of R^tau. M_0(alpha) = (-1)^{b-|alpha|} prod M(tau).
BigInt m_coefficient(const LevelSet& levels, const SetPartition& alpha, int i);

/// Test-support evaluator: theta_lambda computed literally as the signed sum
/// over refinements nu <= lambda of p^{k|nu|} prod R^tau(p^k) times the
/// factorial weights prod (m^lambda_nu(tau) - 1)!.
BigInt theta_literal(const LevelSet& levels, const SetPartition& lambda, int k);

/// The closed form (-1)^{b-|lambda|} p^{k|lambda|} prod_{tau in lambda} M(tau).
BigInt theta_closed(const LevelSet& levels, const SetPartition& lambda, int k);

}  // namespace sylchar::combinat
