#include "tautring/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace tautring {

CoefficientTable exact_inverse(const CoefficientTable& m) {
    if (m.rows() != m.cols()) throw DomainError("exact_inverse: matrix is not square");
    const Eigen::Index n = m.rows();
    CoefficientTable a = m;
    CoefficientTable inv = CoefficientTable::Identity(n, n);

    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        Integer best = 0;
        for (Eigen::Index row = col; row < n; ++row) {
            if (a(row, col).is_zero()) continue;
            Integer mag = ::abs(a(row, col).numerator());
            if (pivot < 0 || mag > best) {
                pivot = row;
                best = std::move(mag);
            }
        }
        if (pivot < 0) throw DomainError("exact_inverse: singular matrix");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Rational scale = a(col, col).inverse();
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (Eigen::Index row = 0; row < n; ++row) {
            if (row == col || a(row, col).is_zero()) continue;
            const Rational factor = a(row, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(row, j) -= factor * a(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

CoefficientTable vandermonde_coefficients(std::span<const long> nodes, unsigned offset) {
    if (nodes.empty()) throw DomainError("vandermonde_coefficients: empty node set");
    std::set<long> seen;
    for (long k : nodes) {
        if (k == 0) throw DomainError("vandermonde_coefficients: zero node");
        if (!seen.insert(k).second) throw DomainError("vandermonde_coefficients: duplicate node");
    }
    // T * M = I with M(j, t) = k_j^(offset+t).
    return exact_inverse(power_matrix(nodes, offset));
}

Integer multinomial(std::span<const unsigned> counts) {
    const unsigned total = std::accumulate(counts.begin(), counts.end(), 0U);
    Integer r = factorial(total);
    for (unsigned c : counts) r /= factorial(c);
    return r;
}

}  // namespace tautring
