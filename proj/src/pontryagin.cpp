#include "tautring/pontryagin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace tautring {

PMonomial::PMonomial(std::vector<int> p) : parts(std::move(p)) { std::sort(parts.begin(), parts.end()); }

PMonomial PMonomial::repeated(int s, int count) {
    PMonomial m;
    m.parts.assign(static_cast<std::size_t>(std::max(count, 0)), s);
    return m;
}

int PMonomial::level() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool PMonomial::killed_in(const JacobianContext& ctx) const {
    const int top = ctx.max_part();
    for (int s : parts)
        if (s < 0 || s > top) return true;
    return ctx.killed(bidegree(ctx));
}

PMonomial operator*(const PMonomial& a, const PMonomial& b) {
    PMonomial r;
    r.parts.reserve(a.parts.size() + b.parts.size());
    std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), std::back_inserter(r.parts));
    return r;
}

std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& b) {
    if (auto c = a.parts.size() <=> b.parts.size(); c != 0) return c;
    return a.parts <=> b.parts;
}

KTuple::KTuple(std::vector<long> e) : entries(std::move(e)) { std::sort(entries.begin(), entries.end()); }

bool KTuple::has_zero() const { return std::find(entries.begin(), entries.end(), 0L) != entries.end(); }

PElement point_class(const JacobianContext& ctx) { return PElement(ctx, PMonomial{}); }

PElement fundamental_class(const JacobianContext& ctx) {
    const int g = ctx.genus();
    return PElement(ctx, PMonomial::repeated(0, g), Rational(factorial(static_cast<unsigned>(g))).inverse());
}

PElement curve_class(const JacobianContext& ctx) {
    PElement c(ctx);
    for (int s = 0; s <= ctx.genus() - 2; ++s) c.add(PMonomial({s}), Rational(1));
    return c;
}

PElement p_star_mul(const PElement& a, const PElement& b) {
    require_same_context(a.context(), b.context(), "p_star_mul");
    PElement out(a.context());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
    return out;
}

PElement p_star_pow(const PElement& a, unsigned n) {
    PElement r = point_class(a.context());
    for (unsigned i = 0; i < n; ++i) r = p_star_mul(r, a);
    return r;
}

PElement p_scale(const PElement& x, long k, Direction direction) {
    const int g = x.context().genus();
    PElement out(x.context());
    for (const auto& [m, c] : x.terms()) {
        const int r = m.length();
        const int t = m.level();
        const int e = direction == Direction::pullback ? 2 * (g - r) - t : 2 * r + t;
        out.add(m, c * Rational(ipow(k, static_cast<unsigned>(e))));
    }
    return out;
}

PElement expand_ktuple(const JacobianContext& ctx, const KTuple& kt) {
    PElement out(ctx);
    const int g = ctx.genus();
    const int n = static_cast<int>(kt.entries.size());
    if (n > g || kt.has_zero()) return out;
    const int top = ctx.max_part();

    // Partial products over the first i slots. A partial level t with t > 0
    // and t >= g - n can only grow, so such states are dropped early.
    std::map<std::vector<int>, Rational> partial{{{}, Rational(1)}};
    for (long k : kt.entries) {
        std::vector<Rational> powers;
        for (int s = 0; s <= top; ++s) powers.emplace_back(ipow(k, static_cast<unsigned>(2 + s)));
        std::map<std::vector<int>, Rational> next;
        for (const auto& [parts, c] : partial) {
            const int t = std::accumulate(parts.begin(), parts.end(), 0);
            for (int s = 0; s <= top; ++s) {
                const int t2 = t + s;
                if (t2 > 0 && t2 >= g - n) break;
                std::vector<int> grown = parts;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), s), s);
                auto [it, inserted] = next.try_emplace(std::move(grown), c * powers[static_cast<std::size_t>(s)]);
                if (!inserted) it->second += c * powers[static_cast<std::size_t>(s)];
            }
        }
        partial = std::move(next);
    }
    for (auto& [parts, c] : partial) {
        PMonomial m;
        m.parts = parts;
        out.add(m, c);
    }
    return out;
}

std::vector<long> VandermondeBridge::default_nodes(const JacobianContext& ctx) {
    std::vector<long> nodes(static_cast<std::size_t>(ctx.max_part() + 1));
    std::iota(nodes.begin(), nodes.end(), 1L);
    return nodes;
}

VandermondeBridge::VandermondeBridge(const JacobianContext& ctx) : VandermondeBridge(ctx, default_nodes(ctx)) {}

VandermondeBridge::VandermondeBridge(const JacobianContext& ctx, std::vector<long> nodes)
    : ctx_(ctx), nodes_(std::move(nodes)) {
    const int n = static_cast<int>(nodes_.size());
    if (n < ctx.max_part() + 1 || n > ctx.genus() - 1)
        throw DomainError("bridge needs between " + std::to_string(ctx.max_part() + 1) + " and " +
                          std::to_string(ctx.genus() - 1) + " nodes, got " + std::to_string(n));
    table_ = vandermonde_coefficients(nodes_, 2);
}

KTupleCombination VandermondeBridge::component_in_ktuples(int s) const {
    if (s < 0 || s > ctx_.genus() - 2)
        throw DomainError("component_in_ktuples: level must lie in [0, g-2], got " + std::to_string(s));
    KTupleCombination out;
    if (s >= static_cast<int>(nodes_.size())) return out;  // C_(s) vanishes under the gonality
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        const Rational& c = table_(s, static_cast<Eigen::Index>(j));
        if (!c.is_zero()) out.emplace_back(c, KTuple({nodes_[j]}));
    }
    return out;
}

std::vector<std::pair<KTuple, Rational>> VandermondeBridge::monomial_in_ktuples(const PMonomial& m) const {
    std::map<std::vector<long>, Rational> acc{{{}, Rational(1)}};
    for (int s : m.parts) {
        const auto row = component_in_ktuples(s);
        std::map<std::vector<long>, Rational> next;
        for (const auto& [entries, c] : acc) {
            for (const auto& [w, kt] : row) {
                std::vector<long> grown = entries;
                const long k = kt.entries.front();
                grown.insert(std::upper_bound(grown.begin(), grown.end(), k), k);
                auto [it, inserted] = next.try_emplace(std::move(grown), c * w);
                if (!inserted) it->second += c * w;
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<KTuple, Rational>> out;
    for (auto& [entries, c] : acc)
        if (!c.is_zero()) out.emplace_back(KTuple(entries), c);
    return out;
}

KTupleCombination component_in_ktuples(const JacobianContext& ctx, int s) {
    return VandermondeBridge(ctx).component_in_ktuples(s);
}

}  // namespace tautring
