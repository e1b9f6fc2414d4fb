#include "tautring/fourier.hpp"

#include <sstream>

namespace tautring {

PElement fourier_forward(const NElement& x) {
    const JacobianContext& ctx = x.context();
    const int g = ctx.genus();
    PElement out(ctx);
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> parts = m.indices();
        for (int& i : parts) --i;
        const bool negative = (g + m.codimension()) % 2 != 0;
        out.add(PMonomial(std::move(parts)), negative ? -c : c);
    }
    return out;
}

NElement fourier_backward(const PElement& x) {
    const JacobianContext& ctx = x.context();
    NElement out(ctx);
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> indices = m.parts;
        for (int& s : indices) ++s;
        out.add(NMonomial::from_indices(ctx, indices), m.length() % 2 != 0 ? -c : c);
    }
    return out;
}

namespace {

template <typename E>
Verdict compare(const E& lhs, const E& rhs) {
    if (lhs == rhs) return {};
    return {false, "lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs)};
}

Rational sign_of_genus(const JacobianContext& ctx) { return Rational(ctx.genus() % 2 == 0 ? 1 : -1); }

}  // namespace

Verdict verify_double_fourier(const NElement& x) {
    return compare(fourier_backward(fourier_forward(x)), n_scale(x, -1, Direction::pullback) * sign_of_genus(x.context()));
}

Verdict verify_double_fourier(const PElement& x) {
    return compare(fourier_forward(fourier_backward(x)), p_scale(x, -1, Direction::pullback) * sign_of_genus(x.context()));
}

Verdict verify_convolution_law(const PElement& a, const PElement& b) {
    require_same_context(a.context(), b.context(), "verify_convolution_law");
    return compare(fourier_backward(p_star_mul(a, b)), n_mul(fourier_backward(a), fourier_backward(b)));
}

Verdict verify_product_law(const NElement& x, const NElement& y) {
    require_same_context(x.context(), y.context(), "verify_product_law");
    return compare(fourier_forward(n_mul(x, y)),
                   p_star_mul(fourier_forward(x), fourier_forward(y)) * sign_of_genus(x.context()));
}

Verdict verify_dual_formula(const JacobianContext& ctx, int r, const VandermondeBridge& bridge) {
    if (r < 0 || r > ctx.genus()) throw DomainError("verify_dual_formula: r must lie in [0, g]");
    // F<0^r> = (-1)^r (N^1)^r, i.e. (-1)^r theta^r on the convolution side.
    const PElement lhs = theta_power(ctx, r, bridge) * Rational(r % 2 == 0 ? 1 : -1);
    // <0^r> has level 0, so (-1)^* fixes it.
    const PElement x = p_scale(PElement(ctx, PMonomial::repeated(0, r)), -1, Direction::pullback);
    const PElement rhs = exp_theta_mul(exp_theta_convolve(exp_theta_mul(x, bridge), -1, bridge), bridge);
    return compare(lhs, rhs);
}

Verdict verify_dual_formula(const JacobianContext& ctx, int r) { return verify_dual_formula(ctx, r, VandermondeBridge(ctx)); }

std::pair<NElement, NElement> fourier_of_wd(const JacobianContext& ctx, int d) {
    if (d < 0 || d > ctx.genus()) throw DomainError("fourier_of_wd: d must lie in [0, g]");
    const Rational inv_fact = Rational(factorial(static_cast<unsigned>(d))).inverse();
    const NElement transformed = fourier_backward(p_star_pow(curve_class(ctx), static_cast<unsigned>(d)) * inv_fact);

    NElement sum(ctx);
    for (int k = 1; k <= ctx.genus() - 1; ++k) sum += newton_class(ctx, k);
    NElement closed = n_pow(sum, static_cast<unsigned>(d)) * inv_fact;
    if (d % 2 != 0) closed *= Rational(-1);
    return {transformed, closed};
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

template <typename E, typename F>
std::string render(const E& x, F&& monomial) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        os << (first ? "" : " + ") << c << "*" << monomial(m);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(const NElement& x) {
    return render(x, [](const NMonomial& m) { return "N[" + join(m.indices()) + "]"; });
}

std::string to_string(const PElement& x) {
    return render(x, [](const PMonomial& m) { return "<" + join(m.parts) + ">"; });
}

}  // namespace tautring
