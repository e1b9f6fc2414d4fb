#include "tautring/gonality.hpp"

#include <algorithm>

#include "tautring/sampling.hpp"
#include "tautring/theta.hpp"

namespace tautring {

int DimensionTable::at(int p, int s) const {
    auto it = entries.find({p, s});
    return it == entries.end() ? 0 : it->second;
}

DimensionTable dimension_table(const JacobianContext& ctx) {
    DimensionTable t;
    t.genus = ctx.genus();
    t.gonality = ctx.gonality();
    for (int p = 0; p <= ctx.genus(); ++p)
        for (int s = 0; s <= ctx.genus() - 1; ++s) t.entries[{p, s}] = 0;
    for (const auto& m : p_basis(ctx)) {
        const Bidegree b = m.bidegree(ctx);
        ++t.entries[{b.p, b.s}];
    }
    return t;
}

int generator_bound(int genus) {
    if (genus < 2) throw DomainError("generator_bound: genus must be at least 2");
    return (genus + 1) / 2;
}

namespace {

std::string cell(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

PMonomial zeros_and_ones(int a, int b) {
    std::vector<int> parts(static_cast<std::size_t>(a), 0);
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return PMonomial(std::move(parts));
}

/// theta . <0^a 1^b> = lambda <0^(a-1) 1^b>; nullopt (plus a diagnostic) if
/// the product is not a multiple of that monomial.
std::optional<Rational> chain_coefficient(const JacobianContext& ctx, const VandermondeBridge& bridge, int a, int b,
                                          std::vector<std::string>& diagnostics) {
    const PElement image = theta_mul(PElement(ctx, zeros_and_ones(a, b)), bridge);
    const PMonomial target = zeros_and_ones(a - 1, b);
    const Rational lambda = image.coefficient(target);
    if (!(image == PElement(ctx, target, lambda))) {
        diagnostics.push_back("theta.<0^" + std::to_string(a) + " 1^" + std::to_string(b) +
                              "> is not a multiple of <0^" + std::to_string(a - 1) + " 1^" + std::to_string(b) + ">");
        return std::nullopt;
    }
    return lambda;
}

}  // namespace

PresentationReport hyperelliptic_report(int genus) {
    if (genus < 2) throw DomainError("hyperelliptic_report: genus must be at least 2");
    const JacobianContext ctx(genus, 2);
    const VandermondeBridge bridge(ctx);
    PresentationReport rep;
    rep.genus = genus;
    rep.gonality = 2;
    rep.generators = {{"theta", {1, 0}}};
    rep.dimensions = dimension_table(ctx);

    for (const auto& [ps, n] : rep.dimensions.entries) {
        const int expected = ps.second == 0 ? 1 : 0;
        if (n != expected)
            rep.diagnostics.push_back("dimension at " + cell(ps.first, ps.second) + " is " + std::to_string(n) +
                                      ", expected " + std::to_string(expected));
    }

    for (int a = 1; a <= genus; ++a) {
        const auto lambda = chain_coefficient(ctx, bridge, a, 0, rep.diagnostics);
        if (!lambda) continue;
        rep.lambda_table[{a, 0}] = *lambda;
        if (lambda->is_zero()) rep.diagnostics.push_back("chain coefficient lambda" + cell(a, 0) + " vanishes");
    }

    const PElement top = theta_power(ctx, genus, bridge);
    const Rational degree = intersection_number(top);
    if (degree != Rational(factorial(static_cast<unsigned>(genus))))
        rep.diagnostics.push_back("theta^g has degree " + degree.str() + ", expected g!");
    if (!theta_mul(top, bridge).is_zero()) rep.diagnostics.push_back("theta^(g+1) does not vanish");

    rep.relations = {{genus + 1, 0}};
    rep.verdict = rep.diagnostics.empty();
    return rep;
}

PresentationReport trigonal_report(int genus) {
    if (genus < 3) throw DomainError("trigonal_report: genus must be at least 3");
    const int g = genus;
    const JacobianContext ctx(g, 3);
    const VandermondeBridge bridge(ctx);
    PresentationReport rep;
    rep.genus = g;
    rep.gonality = 3;
    rep.generators = {{"theta", {1, 0}}, {"eta", {2, 1}}};
    rep.dimensions = dimension_table(ctx);

    // Pontryagin generators are C_(0), C_(1): a graded piece at (p, s) holds
    // only <0^(g-p-s) 1^s>, so nothing survives when p + s > g.
    for (const auto& [ps, n] : rep.dimensions.entries) {
        if (n > 1) rep.diagnostics.push_back("graded piece " + cell(ps.first, ps.second) + " has dimension " + std::to_string(n));
        if (n > 0 && ps.first + ps.second > g)
            rep.diagnostics.push_back("graded piece " + cell(ps.first, ps.second) + " survives although p+s > g");
    }

    auto survives = [&](int a, int b) { return a >= 0 && b >= 0 && !zeros_and_ones(a, b).killed_in(ctx); };

    // theta^r eta^s and <0^(g-r-3s) 1^s> span the same graded piece, and the
    // latter is reached from <0^(g-3s) 1^s> (a multiple of eta^s) by r steps
    // of the chain. Positions with a + 3b <= g are on such chains.
    for (int b = 0; b <= g; ++b) {
        for (int a = 1; a + b <= g; ++a) {
            if (!survives(a, b)) continue;
            const auto lambda = chain_coefficient(ctx, bridge, a, b, rep.diagnostics);
            if (!lambda) continue;
            rep.lambda_table[{a, b}] = *lambda;
            if (!lambda->is_zero()) continue;
            if (a + 3 * b <= g) {
                rep.diagnostics.push_back("chain coefficient lambda" + cell(a, b) + " vanishes on the theta-eta chain");
            } else {
                rep.findings.push_back("lambda" + cell(a, b) + " = 0 at <0^" + std::to_string(a) + " 1^" +
                                       std::to_string(b) + ">, which would be theta^" + std::to_string(g - a - 3 * b) +
                                       " eta^" + std::to_string(b) + " (outside the theta-eta span)");
            }
        }
    }

    int k = -1;
    for (int s = 0; 3 * s <= g; ++s)
        if (survives(g - 3 * s, s)) k = s;
    rep.k = k;

    // Vanishing of theta^r eta^s read off the chain.
    auto vanishes = [&](int r, int s) {
        const int base = g - 3 * s;
        if (!survives(base, s)) return true;
        if (r > base) return true;
        for (int a = base - r + 1; a <= base; ++a) {
            auto it = rep.lambda_table.find({a, s});
            if (it == rep.lambda_table.end() || it->second.is_zero()) return true;
        }
        return false;
    };

    // The chain ends in zero: theta . <1^s> must vanish for every base that exists.
    for (int s = 0; s <= k; ++s) {
        if (s == 0) continue;  // theta . [pt] = 0 trivially
        if (!theta_mul(PElement(ctx, zeros_and_ones(0, s)), bridge).is_zero())
            rep.diagnostics.push_back("theta.<1^" + std::to_string(s) + "> does not vanish");
    }

    for (int s = 0; s <= k + 1; ++s)
        for (int r = 0; r <= g + 1; ++r)
            if (vanishes(r, s) != (r + 3 * s > g))
                rep.diagnostics.push_back("theta^" + std::to_string(r) + " eta^" + std::to_string(s) +
                                          (vanishes(r, s) ? " vanishes" : " survives") + " against r+3s>g");

    // Minimal generators of the vanishing ideal.
    int previous = g + 2;
    for (int s = 0; s <= k + 1 && previous > 0; ++s) {
        int r = 0;
        while (r <= g + 1 && !vanishes(r, s)) ++r;
        if (r < previous) rep.relations.push_back({r, s});
        previous = std::min(previous, r);
    }

    std::vector<MonomialRelation> pattern;
    for (int s = 0; s <= k; ++s) pattern.push_back({g + 1 - 3 * s, s});
    pattern.push_back({0, k + 1});
    if (rep.relations != pattern) rep.diagnostics.push_back("relations do not match the displayed ideal pattern");
    if (3 * k > g) rep.diagnostics.push_back("k = " + std::to_string(k) + " exceeds g/3");
    if (k != g / 3) rep.diagnostics.push_back("model-maximal k differs from floor(g/3)");

    rep.verdict = rep.diagnostics.empty();
    return rep;
}

}  // namespace tautring
