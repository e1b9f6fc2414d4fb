#pragma once

#include "tautring/pontryagin.hpp"

namespace tautring {

/// theta . [k1,...,kr] as a combination of (r-1)-tuples:
///
///   sum_i (g k_i^2 + k_i (K - k_i)) [.., k_i omitted, ..]
///     - sum_{i<j} k_i k_j [.., k_i, k_j omitted, .., k_i + k_j]
///
/// with K = sum k_l. The first sum pushes forward the base-point divisors
/// x_i = o, the second the diagonals x_i = x_j. Merged entries equal to zero
/// are dropped. Equal tuples are combined and the result is sorted.
/// Throws DomainError on a zero entry.
KTupleCombination theta_mul_ktuple(const JacobianContext& ctx, const KTuple& kt);

/// theta . x on the convolution side: each monomial goes through the bridge
/// into k-tuples, through the recursion, and back through expand_ktuple.
PElement theta_mul(const PElement& x, const VandermondeBridge& bridge);
PElement theta_mul(const PElement& x);

/// theta^j, folded left from the fundamental class.
PElement theta_power(const JacobianContext& ctx, int j, const VandermondeBridge& bridge);
PElement theta_power(const JacobianContext& ctx, int j);

/// Degree of a codimension-g class: the coefficient of the point class.
/// Throws DomainError unless x is zero or homogeneous of codimension g.
Rational intersection_number(const PElement& x);

/// e^theta . x = sum_j theta^j x / j!
PElement exp_theta_mul(const PElement& x, const VandermondeBridge& bridge);
PElement exp_theta_mul(const PElement& x);

/// e^(sign theta) * x = sum_j sign^j (theta^j * x) / j!, sign = +1 or -1.
PElement exp_theta_convolve(const PElement& x, int sign, const VandermondeBridge& bridge);
PElement exp_theta_convolve(const PElement& x, int sign);

}  // namespace tautring
