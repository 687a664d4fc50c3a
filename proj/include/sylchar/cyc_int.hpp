#pragma once

#include <cstdint>
#include <vector>

#include "sylchar/errors.hpp"
#include "sylchar/numbers.hpp"

namespace sylchar {

/// Element of Z[zeta_p], the ring of integers of the p-th cyclotomic field,
/// stored as p-1 integer coordinates in the basis 1, zeta, ..., zeta^{p-2}.
/// The basis is a Z-basis, so the canonical form is unique: an element is
/// rational exactly when coordinates 1..p-2 vanish.
class CycInt {
public:
    explicit CycInt(std::int64_t p) : p_(p), coords_(static_cast<size_t>(p - 1), BigInt(0)) {
        if (p < 2) throw DomainError("CycInt requires p >= 2");
    }

    static CycInt zero(std::int64_t p) { return CycInt(p); }

    static CycInt from_integer(std::int64_t p, const BigInt& n) {
        CycInt v(p);
        v.coords_[0] = n;
        return v;
    }

    /// zeta^m, exponent taken mod p. zeta^{p-1} folds to -(1+zeta+...+zeta^{p-2}).
    static CycInt root_of_unity(std::int64_t p, std::int64_t m) {
        CycInt v(p);
        m %= p;
        if (m < 0) m += p;
        if (m < p - 1) {
            v.coords_[static_cast<size_t>(m)] = 1;
        } else {
            for (auto& c : v.coords_) c = -1;
        }
        return v;
    }

    /// Sum of count_m * zeta^m over residues m in [0, p); counts.size() == p.
    static CycInt from_exponent_counts(std::int64_t p, const std::vector<BigInt>& counts) {
        if (counts.size() != static_cast<size_t>(p))
            throw DomainError("exponent count vector must have p entries");
        CycInt v(p);
        for (size_t m = 0; m + 1 < counts.size(); ++m) v.coords_[m] = counts[m] - counts.back();
        return v;
    }

    std::int64_t prime() const { return p_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    /// The value as a rational integer; throws InternalError when non-rational,
    /// since every sum this library produces is provably rational.
    BigInt rational_part(const char* context = "CycInt") const {
        if (!is_rational())
            throw InternalError(std::string(context) +
                                ": cyclotomic sum has a non-rational coordinate");
        return coords_[0];
    }

    CycInt& operator+=(const CycInt& o) {
        check_same(o);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }

    CycInt& operator-=(const CycInt& o) {
        check_same(o);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }

    CycInt& operator*=(const BigInt& n) {
        for (auto& c : coords_) c *= n;
        return *this;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const BigInt& n) { return a *= n; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check_same(b);
        const auto p = static_cast<size_t>(a.p_);
        // Convolve in exponent space mod p, then fold zeta^{p-1}.
        std::vector<BigInt> counts(p, BigInt(0));
        for (size_t i = 0; i + 1 < p; ++i) {
            if (a.coords_[i] == 0) continue;
            for (size_t j = 0; j + 1 < p; ++j) {
                if (b.coords_[j] == 0) continue;
                counts[(i + j) % p] += a.coords_[i] * b.coords_[j];
            }
        }
        return from_exponent_counts(a.p_, counts);
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.p_ == b.p_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

private:
    void check_same(const CycInt& o) const {
        if (p_ != o.p_) throw DomainError("CycInt arithmetic across different primes");
    }

    std::int64_t p_;
    std::vector<BigInt> coords_;
};

}  // namespace sylchar
