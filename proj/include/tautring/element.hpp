#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <utility>

#include "tautring/context.hpp"
#include "tautring/rational.hpp"

namespace tautring {

template <typename M>
concept BasisMonomial = std::totally_ordered<M> && requires(const M& m, const JacobianContext& ctx) {
    { m.killed_in(ctx) } -> std::convertible_to<bool>;
    { m.bidegree(ctx) } -> std::convertible_to<Bidegree>;
};

/// Sparse exact-rational combination of basis monomials in a fixed context.
///
/// Canonical at all times: no zero coefficients and no monomial that the
/// context's vanishing rules kill. Iteration follows Monomial's ordering, so
/// two equal elements are also equal term by term.
template <BasisMonomial Monomial>
class Element {
public:
    using monomial_type = Monomial;
    using term_map = std::map<Monomial, Rational>;

    explicit Element(JacobianContext ctx) : ctx_(ctx) {}
    Element(JacobianContext ctx, const Monomial& m, const Rational& c = Rational(1)) : ctx_(ctx) { add(m, c); }

    [[nodiscard]] const JacobianContext& context() const { return ctx_; }
    [[nodiscard]] const term_map& terms() const& { return terms_; }
    [[nodiscard]] term_map terms() && { return std::move(terms_); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c*m. Returns false when m is killed (nothing is added).
    bool add(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return true;
        if (m.killed_in(ctx_)) return false;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return true;
    }

    /// The common bidegree of all terms, or nullopt if empty or mixed.
    [[nodiscard]] std::optional<Bidegree> homogeneous_bidegree() const {
        std::optional<Bidegree> b;
        for (const auto& [m, c] : terms_) {
            const Bidegree mb = m.bidegree(ctx_);
            if (b && *b != mb) return std::nullopt;
            b = mb;
        }
        return b;
    }

    Element& operator+=(const Element& o) {
        require_same_context(ctx_, o.ctx_, "addition");
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        require_same_context(ctx_, o.ctx_, "subtraction");
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Element& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }

    friend bool operator==(const Element& a, const Element& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

private:
    JacobianContext ctx_;
    term_map terms_;
};

/// Sum of the terms of exactly bidegree b.
template <BasisMonomial Monomial>
Element<Monomial> bidegree_project(const Element<Monomial>& x, Bidegree b) {
    Element<Monomial> out(x.context());
    for (const auto& [m, c] : x.terms())
        if (m.bidegree(x.context()) == b) out.add(m, c);
    return out;
}

}  // namespace tautring
