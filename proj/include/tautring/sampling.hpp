#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tautring/newton_algebra.hpp"
#include "tautring/pontryagin.hpp"

namespace tautring {

/// Every surviving intersection-side monomial, in canonical order.
std::vector<NMonomial> n_basis(const JacobianContext& ctx);
/// Every surviving Pontryagin monomial, in canonical order.
std::vector<PMonomial> p_basis(const JacobianContext& ctx);

/// Seeded generator of small random elements. Only the raw mt19937_64 stream
/// is used, so sequences are reproducible across standard libraries.
class ElementSampler {
public:
    explicit ElementSampler(const JacobianContext& ctx, std::uint64_t seed = 0x7461757472696e67ULL);

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    /// Numerator in [-9, 9] \ {0}, denominator in [1, 6].
    Rational coefficient();

    NElement nelement(int max_terms = 4);
    PElement pelement(int max_terms = 4);
    /// All terms of one bidegree, picked at random among those present.
    NElement homogeneous_nelement(int max_terms = 3);
    PElement homogeneous_pelement(int max_terms = 3);

private:
    JacobianContext ctx_;
    std::vector<NMonomial> nbasis_;
    std::vector<PMonomial> pbasis_;
    std::mt19937_64 rng_;
};

}  // namespace tautring
