#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "tautring/rational.hpp"

namespace tautring {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Row s, column j holds the weight of node j in the level-s component.
using CoefficientTable = DenseMatrix<Rational>;

/// The power matrix M with M(j, t) = nodes[j]^(offset + t), square.
template <typename Scalar = Rational>
DenseMatrix<Scalar> power_matrix(std::span<const long> nodes, unsigned offset) {
    const auto n = static_cast<Eigen::Index>(nodes.size());
    DenseMatrix<Scalar> m(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index t = 0; t < n; ++t)
            m(j, t) = Scalar(ipow(nodes[j], offset + static_cast<unsigned>(t)));
    return m;
}

/// Exact inverse by Gauss-Jordan elimination. Pivot is the candidate with the
/// largest numerator magnitude. Throws DomainError when singular.
CoefficientTable exact_inverse(const CoefficientTable& m);

/// T with sum_j T(s, j) * nodes[j]^(offset + t) = [s == t].
/// Nodes must be pairwise distinct and nonzero.
CoefficientTable vandermonde_coefficients(std::span<const long> nodes, unsigned offset);

/// (sum counts)! / prod(counts_i!)
Integer multinomial(std::span<const unsigned> counts);

}  // namespace tautring
