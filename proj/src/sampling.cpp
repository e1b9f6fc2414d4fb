#include "tautring/sampling.hpp"

#include <algorithm>

namespace tautring {

namespace {

void grow_n(const JacobianContext& ctx, NMonomial& m, std::size_t index, int codim, std::vector<NMonomial>& out) {
    if (index == m.exponents.size()) {
        if (!m.killed_in(ctx)) out.push_back(m);
        return;
    }
    const int weight = static_cast<int>(index + 1);
    for (int e = 0; codim + e * weight <= ctx.genus(); ++e) {
        m.exponents[index] = e;
        grow_n(ctx, m, index + 1, codim + e * weight, out);
    }
    m.exponents[index] = 0;
}

void grow_p(const JacobianContext& ctx, std::vector<int>& parts, int min_part, std::vector<PMonomial>& out) {
    PMonomial m;
    m.parts = parts;
    if (!m.killed_in(ctx)) out.push_back(m);
    if (static_cast<int>(parts.size()) == ctx.genus()) return;
    for (int s = min_part; s <= ctx.max_part(); ++s) {
        parts.push_back(s);
        grow_p(ctx, parts, s, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<NMonomial> n_basis(const JacobianContext& ctx) {
    std::vector<NMonomial> out;
    NMonomial m = NMonomial::unit(ctx);
    grow_n(ctx, m, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PMonomial> p_basis(const JacobianContext& ctx) {
    std::vector<PMonomial> out;
    std::vector<int> parts;
    grow_p(ctx, parts, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

ElementSampler::ElementSampler(const JacobianContext& ctx, std::uint64_t seed)
    : ctx_(ctx), nbasis_(n_basis(ctx)), pbasis_(p_basis(ctx)), rng_(seed) {}

long ElementSampler::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Rational ElementSampler::coefficient() {
    long num = uniform(1, 9);
    if (uniform(0, 1) == 1) num = -num;
    return Rational(num, uniform(1, 6));
}

NElement ElementSampler::nelement(int max_terms) {
    NElement x(ctx_);
    const long n = uniform(1, max_terms);
    for (long i = 0; i < n; ++i) x.add(nbasis_[static_cast<std::size_t>(uniform(0, static_cast<long>(nbasis_.size()) - 1))], coefficient());
    return x;
}

PElement ElementSampler::pelement(int max_terms) {
    PElement x(ctx_);
    const long n = uniform(1, max_terms);
    for (long i = 0; i < n; ++i) x.add(pbasis_[static_cast<std::size_t>(uniform(0, static_cast<long>(pbasis_.size()) - 1))], coefficient());
    return x;
}

NElement ElementSampler::homogeneous_nelement(int max_terms) {
    const auto& anchor = nbasis_[static_cast<std::size_t>(uniform(0, static_cast<long>(nbasis_.size()) - 1))];
    std::vector<NMonomial> same;
    for (const auto& m : nbasis_)
        if (m.bidegree(ctx_) == anchor.bidegree(ctx_)) same.push_back(m);
    NElement x(ctx_);
    const long n = uniform(1, max_terms);
    for (long i = 0; i < n; ++i) x.add(same[static_cast<std::size_t>(uniform(0, static_cast<long>(same.size()) - 1))], coefficient());
    return x;
}

PElement ElementSampler::homogeneous_pelement(int max_terms) {
    const auto& anchor = pbasis_[static_cast<std::size_t>(uniform(0, static_cast<long>(pbasis_.size()) - 1))];
    std::vector<PMonomial> same;
    for (const auto& m : pbasis_)
        if (m.bidegree(ctx_) == anchor.bidegree(ctx_)) same.push_back(m);
    PElement x(ctx_);
    const long n = uniform(1, max_terms);
    for (long i = 0; i < n; ++i) x.add(same[static_cast<std::size_t>(uniform(0, static_cast<long>(same.size()) - 1))], coefficient());
    return x;
}

}  // namespace tautring
