#include "sylchar/bell.hpp"

#include "sylchar/errors.hpp"
#include "sylchar/set_partition.hpp"

namespace sylchar::combinat {

namespace {

void check_bell_args(int m, size_t count) {
    if (m < 1 || m > kMaxBellDegree)
        throw DomainError("complete_bell: m must be in [1, " +
                          std::to_string(kMaxBellDegree) + "], got " + std::to_string(m));
    if (count != static_cast<size_t>(m))
        throw DomainError("complete_bell: expected m arguments");
}

}  // namespace

Rational complete_bell(int m, const std::vector<Rational>& xs) {
    check_bell_args(m, xs.size());
    Rational sum = 0;
    for (const auto& part : enumerate_partitions(m)) {
        Rational term = 1;
        for (const auto& blk : part.blocks()) term *= xs[blk.size() - 1];
        sum += term;
    }
    return sum;
}

Rational complete_bell_determinant(int m, const std::vector<Rational>& xs) {
    check_bell_args(m, xs.size());
    const size_t n = static_cast<size_t>(m);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        BigInt jfact = 1;
        for (size_t j = i; j < n; ++j) {
            a[i][j] = xs[j - i] / Rational(jfact);
            jfact *= static_cast<unsigned>(j - i + 1);
        }
        if (i > 0) a[i][i - 1] = Rational(-static_cast<std::int64_t>(i));
    }
    // Gaussian elimination with column pivoting; exact over Rational.
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational ratio = a[row][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[row][j] -= ratio * a[col][j];
        }
    }
    return det;
}

std::vector<BigInt> stirling_second_row(int n) {
    if (n < 0) throw DomainError("stirling_second_row: n must be nonnegative");
    std::vector<BigInt> row = {BigInt(1)};  // S(0,0) = 1
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(i) + 1, BigInt(0));
        for (int j = 1; j <= i; ++j) {
            next[static_cast<size_t>(j)] = BigInt(j) * (j < i ? row[static_cast<size_t>(j)] : 0) +
                                           row[static_cast<size_t>(j - 1)];
        }
        row = std::move(next);
    }
    return row;
}

BigInt signed_partition_sum(int n) {
    if (n < 1 || n > kMaxPartitionGround)
        throw DomainError("signed_partition_sum: n must be in [1, " +
                          std::to_string(kMaxPartitionGround) + "], got " + std::to_string(n));
    const auto stirling = stirling_second_row(n);
    BigInt sum = 0;
    for (int j = 1; j <= n; ++j) {
        const BigInt term = stirling[static_cast<size_t>(j)] * factorial(static_cast<unsigned>(j - 1));
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

BigInt signed_partition_sum_enumerated(int n) {
    if (n < 1 || n > kMaxPartitionGround)
        throw DomainError("signed_partition_sum_enumerated: n out of range");
    BigInt sum = 0;
    for (const auto& part : enumerate_partitions(n)) {
        const BigInt term = factorial(static_cast<unsigned>(part.size() - 1));
        sum += (part.size() % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace sylchar::combinat
