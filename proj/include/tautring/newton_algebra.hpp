#pragma once

#include <compare>
#include <vector>

#include "tautring/element.hpp"

namespace tautring {

/// Monomial (N^1)^e1 (N^2)^e2 ... in the Newton classes N^i = N^i(w).
///
/// exponents[i-1] is the power of N^i; the vector has length genus-1 for
/// the owning context. Codimension p = sum i*e_i, level s = p - sum e_i.
struct NMonomial {
    std::vector<int> exponents;

    static NMonomial unit(const JacobianContext& ctx);
    /// N^i, 1 <= i <= genus-1.
    static NMonomial generator(const JacobianContext& ctx, int i);
    /// Builds from generator indices with repetition, e.g. {1,1,2} = (N^1)^2 N^2.
    /// Throws DomainError for indices outside [1, genus-1].
    static NMonomial from_indices(const JacobianContext& ctx, const std::vector<int>& indices);

    [[nodiscard]] int codimension() const;
    [[nodiscard]] int degree() const;  ///< number of generator factors
    [[nodiscard]] Bidegree bidegree(const JacobianContext&) const { return {codimension(), codimension() - degree()}; }
    [[nodiscard]] bool killed_in(const JacobianContext& ctx) const;
    /// Generator indices with repetition, ascending.
    [[nodiscard]] std::vector<int> indices() const;

    friend NMonomial operator*(const NMonomial& a, const NMonomial& b);
    friend bool operator==(const NMonomial&, const NMonomial&) = default;
    friend auto operator<=>(const NMonomial&, const NMonomial&) = default;
};

/// Intersection-side element: polynomial in N^1..N^{g-1} modulo the forced
/// vanishing rules. No curve-specific relations are imposed, so vanishing in
/// this ring implies vanishing in the tautological ring but not conversely.
using NElement = Element<NMonomial>;

NElement n_one(const JacobianContext& ctx);

/// Intersection product.
NElement n_mul(const NElement& a, const NElement& b);
NElement n_pow(const NElement& a, unsigned n);

/// N^k for 1 <= k <= g; N^g (and N^k for k >= gonality) is zero.
NElement newton_class(const JacobianContext& ctx, int k);

/// w^d in terms of N^1..N^{g-1}, 0 <= d <= g, via Newton's identities with
/// power sums p_k = k! N^k.
NElement w_class(const JacobianContext& ctx, int d);

/// The inverse conversion: N^k rebuilt from the classes w^1..w^k, 1 <= k <= g.
NElement newton_from_w(const JacobianContext& ctx, int k);

NElement n_bidegree_project(const NElement& x, int p, int s);

/// k^* multiplies a (p,s) term by k^(2p-s); k_* by k^(2g-2p+s). 0^0 = 1.
NElement n_scale(const NElement& x, long k, Direction direction);

}  // namespace tautring
