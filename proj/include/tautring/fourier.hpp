#pragma once

#include <string>
#include <utility>

#include "tautring/newton_algebra.hpp"
#include "tautring/pontryagin.hpp"
#include "tautring/theta.hpp"

namespace tautring {

/// F on the intersection side: N^{p1}...N^{pr} -> (-1)^(g + sum p_i) <p1-1, ..., pr-1>.
PElement fourier_forward(const NElement& x);

/// F on the convolution side: <s1,...,sr> -> (-1)^r N^{s1+1}...N^{sr+1}.
NElement fourier_backward(const PElement& x);

/// Outcome of an identity check. `detail` is empty on success and holds a
/// readable difference otherwise.
struct Verdict {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// F(F x) == (-1)^g (-1)^* x.
Verdict verify_double_fourier(const NElement& x);
/// Same identity started from the convolution side.
Verdict verify_double_fourier(const PElement& x);

/// F(a * b) == F a . F b.
Verdict verify_convolution_law(const PElement& a, const PElement& b);
/// F(x . y) == (-1)^g F x * F y.
Verdict verify_product_law(const NElement& x, const NElement& y);

/// F x == e^theta ((xbar e^theta) * e^-theta) for x = <0^r>, 0 <= r <= g.
/// Both sides are evaluated on the convolution side.
Verdict verify_dual_formula(const JacobianContext& ctx, int r, const VandermondeBridge& bridge);
Verdict verify_dual_formula(const JacobianContext& ctx, int r);

/// (F(C^{*d} / d!), (-1)^d (N^1 + ... + N^{g-1})^d / d!) for 0 <= d <= g.
std::pair<NElement, NElement> fourier_of_wd(const JacobianContext& ctx, int d);

std::string to_string(const NElement& x);
std::string to_string(const PElement& x);

}  // namespace tautring
