#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "tautring/element.hpp"
#include "tautring/kernel.hpp"

namespace tautring {

/// Pontryagin monomial <s1,...,sr> = C_(s1) * ... * C_(sr), parts sorted
/// ascending. Codimension g - r, level s1 + ... + sr. The empty monomial is
/// the point class, the unit of *.
struct PMonomial {
    std::vector<int> parts;

    PMonomial() = default;
    /// Sorts the parts.
    explicit PMonomial(std::vector<int> parts);
    /// <s, s, ..., s> with `count` copies.
    static PMonomial repeated(int s, int count);

    [[nodiscard]] int length() const { return static_cast<int>(parts.size()); }
    [[nodiscard]] int level() const;
    [[nodiscard]] Bidegree bidegree(const JacobianContext& ctx) const { return {ctx.genus() - length(), level()}; }
    [[nodiscard]] bool killed_in(const JacobianContext& ctx) const;

    /// Concatenation, re-sorted.
    friend PMonomial operator*(const PMonomial& a, const PMonomial& b);
    friend bool operator==(const PMonomial&, const PMonomial&) = default;
    /// By length, then lexicographic on parts.
    friend std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& b);
};

using PElement = Element<PMonomial>;

/// The class (k1_* C) * ... * (kr_* C). Entries are kept sorted; any zero
/// entry makes the class zero.
struct KTuple {
    std::vector<long> entries;

    KTuple() = default;
    explicit KTuple(std::vector<long> entries);

    [[nodiscard]] bool has_zero() const;
    friend bool operator==(const KTuple&, const KTuple&) = default;
    friend auto operator<=>(const KTuple&, const KTuple&) = default;
};

using KTupleCombination = std::vector<std::pair<Rational, KTuple>>;

PElement point_class(const JacobianContext& ctx);
/// [J] = <0^g> / g!, the unit of the intersection product.
PElement fundamental_class(const JacobianContext& ctx);
/// C = sum_s C_(s).
PElement curve_class(const JacobianContext& ctx);

/// Pontryagin product; codimensions satisfy p = p_a + p_b - g termwise.
PElement p_star_mul(const PElement& a, const PElement& b);
PElement p_star_pow(const PElement& a, unsigned n);

/// k_* multiplies <s> by k^(2r+t); k^* by k^(2(g-r)-t). 0^0 = 1.
PElement p_scale(const PElement& x, long k, Direction direction);

/// prod_i (sum_s k_i^(2+s) C_(s)), collected with the vanishing rules applied.
PElement expand_ktuple(const JacobianContext& ctx, const KTuple& kt);

/// Inverts k_* C = sum_s k^(2+s) C_(s) over a node set: each level component
/// C_(s), 0 <= s <= g-2, becomes a rational combination of the classes k_* C.
///
/// Under gonality d only C_(0..d-2) survive, so fewer nodes suffice: the node
/// set holds between max_part+1 and g-1 distinct nonzero integers, and the
/// default is {1, ..., max_part+1} ({1, ..., g-1} without gonality). Results
/// of everything built on the bridge do not depend on the choice.
class VandermondeBridge {
public:
    explicit VandermondeBridge(const JacobianContext& ctx);
    VandermondeBridge(const JacobianContext& ctx, std::vector<long> nodes);

    [[nodiscard]] const JacobianContext& context() const { return ctx_; }
    [[nodiscard]] const std::vector<long>& nodes() const { return nodes_; }
    [[nodiscard]] const CoefficientTable& table() const { return table_; }

    /// C_(s) = sum_j c_{s,j} [nodes_j].
    [[nodiscard]] KTupleCombination component_in_ktuples(int s) const;

    /// <s1,...,sr> as a combination of sorted k-tuples, equal tuples merged.
    [[nodiscard]] std::vector<std::pair<KTuple, Rational>> monomial_in_ktuples(const PMonomial& m) const;

    static std::vector<long> default_nodes(const JacobianContext& ctx);

private:
    JacobianContext ctx_;
    std::vector<long> nodes_;
    CoefficientTable table_;
};

/// Convenience wrapper using the default node set.
KTupleCombination component_in_ktuples(const JacobianContext& ctx, int s);

}  // namespace tautring
