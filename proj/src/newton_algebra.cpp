#include "tautring/newton_algebra.hpp"

#include <numeric>
#include <string>

namespace tautring {

NMonomial NMonomial::unit(const JacobianContext& ctx) {
    return NMonomial{std::vector<int>(static_cast<std::size_t>(ctx.genus() - 1), 0)};
}

NMonomial NMonomial::generator(const JacobianContext& ctx, int i) {
    if (i < 1 || i > ctx.genus() - 1)
        throw DomainError("generator N^" + std::to_string(i) + " out of range for genus " + std::to_string(ctx.genus()));
    NMonomial m = unit(ctx);
    m.exponents[static_cast<std::size_t>(i - 1)] = 1;
    return m;
}

NMonomial NMonomial::from_indices(const JacobianContext& ctx, const std::vector<int>& indices) {
    NMonomial m = unit(ctx);
    for (int i : indices) {
        if (i < 1 || i > ctx.genus() - 1)
            throw DomainError("generator index " + std::to_string(i) + " out of range for genus " +
                              std::to_string(ctx.genus()));
        ++m.exponents[static_cast<std::size_t>(i - 1)];
    }
    return m;
}

int NMonomial::codimension() const {
    int p = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) p += static_cast<int>(i + 1) * exponents[i];
    return p;
}

int NMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool NMonomial::killed_in(const JacobianContext& ctx) const {
    const int top = ctx.max_generator();
    for (std::size_t i = static_cast<std::size_t>(top); i < exponents.size(); ++i)
        if (exponents[i] > 0) return true;
    return ctx.killed(bidegree(ctx));
}

std::vector<int> NMonomial::indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.insert(out.end(), static_cast<std::size_t>(exponents[i]), static_cast<int>(i + 1));
    return out;
}

NMonomial operator*(const NMonomial& a, const NMonomial& b) {
    NMonomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
    return r;
}

NElement n_one(const JacobianContext& ctx) { return NElement(ctx, NMonomial::unit(ctx)); }

NElement n_mul(const NElement& a, const NElement& b) {
    require_same_context(a.context(), b.context(), "n_mul");
    NElement out(a.context());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
    return out;
}

NElement n_pow(const NElement& a, unsigned n) {
    NElement r = n_one(a.context());
    for (unsigned i = 0; i < n; ++i) r = n_mul(r, a);
    return r;
}

NElement newton_class(const JacobianContext& ctx, int k) {
    const int g = ctx.genus();
    if (k < 1 || k > g) throw DomainError("newton_class: k must lie in [1, g], got " + std::to_string(k));
    if (k == g) return NElement(ctx);
    return NElement(ctx, NMonomial::generator(ctx, k));
}

namespace {

// p_k = k! N^k
NElement power_sum(const JacobianContext& ctx, int k) { return newton_class(ctx, k) * Rational(factorial(static_cast<unsigned>(k))); }

}  // namespace

NElement w_class(const JacobianContext& ctx, int d) {
    const int g = ctx.genus();
    if (d < 0 || d > g) throw DomainError("w_class: d must lie in [0, g], got " + std::to_string(d));
    // d e_d = sum_{i=1}^d (-1)^(i-1) e_{d-i} p_i
    std::vector<NElement> e{n_one(ctx)};
    for (int n = 1; n <= d; ++n) {
        NElement acc(ctx);
        for (int i = 1; i <= n; ++i) {
            NElement term = n_mul(e[static_cast<std::size_t>(n - i)], power_sum(ctx, i));
            if (i % 2 == 0) term *= Rational(-1);
            acc += term;
        }
        e.push_back(acc * Rational(1, n));
    }
    return e.back();
}

NElement newton_from_w(const JacobianContext& ctx, int k) {
    const int g = ctx.genus();
    if (k < 1 || k > g) throw DomainError("newton_from_w: k must lie in [1, g], got " + std::to_string(k));
    // p_n = sum_{i=1}^{n-1} (-1)^(i-1) e_i p_{n-i} + (-1)^(n-1) n e_n
    std::vector<NElement> e, p;
    for (int n = 0; n <= k; ++n) e.push_back(w_class(ctx, n));
    p.push_back(NElement(ctx));
    for (int n = 1; n <= k; ++n) {
        NElement acc = e[static_cast<std::size_t>(n)] * Rational(n % 2 == 1 ? n : -n);
        for (int i = 1; i < n; ++i) {
            NElement term = n_mul(e[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(n - i)]);
            if (i % 2 == 0) term *= Rational(-1);
            acc += term;
        }
        p.push_back(acc);
    }
    return p.back() * Rational(factorial(static_cast<unsigned>(k))).inverse();
}

NElement n_bidegree_project(const NElement& x, int p, int s) { return bidegree_project(x, Bidegree{p, s}); }

NElement n_scale(const NElement& x, long k, Direction direction) {
    const int g = x.context().genus();
    NElement out(x.context());
    for (const auto& [m, c] : x.terms()) {
        const Bidegree b = m.bidegree(x.context());
        const int e = direction == Direction::pullback ? 2 * b.p - b.s : 2 * g - 2 * b.p + b.s;
        out.add(m, c * Rational(ipow(k, static_cast<unsigned>(e))));
    }
    return out;
}

}  // namespace tautring
