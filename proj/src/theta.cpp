#include "tautring/theta.hpp"

#include <map>
#include <string>

namespace tautring {

KTupleCombination theta_mul_ktuple(const JacobianContext& ctx, const KTuple& kt) {
    if (kt.has_zero()) throw DomainError("theta_mul_ktuple: zero entry");
    const auto& k = kt.entries;
    const std::size_t r = k.size();
    const long g = ctx.genus();
    Integer total = 0;
    for (long v : k) total += v;

    std::map<KTuple, Rational> acc;
    auto accumulate = [&acc](KTuple t, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = acc.try_emplace(std::move(t), Rational(c));
        if (!inserted) it->second += Rational(c);
    };

    for (std::size_t i = 0; i < r; ++i) {
        const Integer ki = k[i];
        const Integer coeff = g * ki * ki + ki * (total - ki);
        std::vector<long> rest;
        for (std::size_t l = 0; l < r; ++l)
            if (l != i) rest.push_back(k[l]);
        accumulate(KTuple(std::move(rest)), coeff);
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const long merged = k[i] + k[j];
            if (merged == 0) continue;
            std::vector<long> rest;
            for (std::size_t l = 0; l < r; ++l)
                if (l != i && l != j) rest.push_back(k[l]);
            rest.push_back(merged);
            accumulate(KTuple(std::move(rest)), -(Integer(k[i]) * k[j]));
        }
    }

    KTupleCombination out;
    for (auto& [t, c] : acc)
        if (!c.is_zero()) out.emplace_back(c, t);
    return out;
}

PElement theta_mul(const PElement& x, const VandermondeBridge& bridge) {
    const JacobianContext& ctx = x.context();
    require_same_context(ctx, bridge.context(), "theta_mul");

    std::map<KTuple, Rational> image;
    for (const auto& [m, c] : x.terms()) {
        if (m.parts.empty()) continue;  // theta . [pt] = 0
        for (const auto& [kt, w] : bridge.monomial_in_ktuples(m)) {
            const Rational cw = c * w;
            for (const auto& [coeff, out] : theta_mul_ktuple(ctx, kt)) {
                auto [it, inserted] = image.try_emplace(out, cw * coeff);
                if (!inserted) it->second += cw * coeff;
            }
        }
    }

    PElement result(ctx);
    for (const auto& [kt, c] : image) {
        if (c.is_zero()) continue;
        result += expand_ktuple(ctx, kt) * c;
    }
    return result;
}

PElement theta_mul(const PElement& x) { return theta_mul(x, VandermondeBridge(x.context())); }

PElement theta_power(const JacobianContext& ctx, int j, const VandermondeBridge& bridge) {
    if (j < 0) throw DomainError("theta_power: negative exponent " + std::to_string(j));
    PElement acc = fundamental_class(ctx);
    for (int i = 0; i < j && !acc.is_zero(); ++i) acc = theta_mul(acc, bridge);
    return acc;
}

PElement theta_power(const JacobianContext& ctx, int j) { return theta_power(ctx, j, VandermondeBridge(ctx)); }

Rational intersection_number(const PElement& x) {
    if (x.is_zero()) return Rational(0);
    const auto b = x.homogeneous_bidegree();
    if (!b || b->p != x.context().genus())
        throw DomainError("intersection_number: argument is not homogeneous of codimension g");
    return x.coefficient(PMonomial{});
}

PElement exp_theta_mul(const PElement& x, const VandermondeBridge& bridge) {
    PElement sum = x;
    PElement term = x;
    // theta raises codimension by one, so at most g steps are nonzero.
    for (int j = 1; j <= x.context().genus() && !term.is_zero(); ++j) {
        term = theta_mul(term, bridge) * Rational(1, j);
        sum += term;
    }
    return sum;
}

PElement exp_theta_mul(const PElement& x) { return exp_theta_mul(x, VandermondeBridge(x.context())); }

PElement exp_theta_convolve(const PElement& x, int sign, const VandermondeBridge& bridge) {
    if (sign != 1 && sign != -1) throw DomainError("exp_theta_convolve: sign must be +1 or -1");
    const JacobianContext& ctx = x.context();
    PElement sum(ctx);
    PElement power = fundamental_class(ctx);  // theta^j / j! * sign^j
    for (int j = 0; j <= ctx.genus() && !power.is_zero(); ++j) {
        if (j > 0) power = theta_mul(power, bridge) * Rational(sign, j);
        sum += p_star_mul(power, x);
    }
    return sum;
}

PElement exp_theta_convolve(const PElement& x, int sign) {
    return exp_theta_convolve(x, sign, VandermondeBridge(x.context()));
}

}  // namespace tautring
