#pragma once

#include <optional>

namespace tautring {

/// Bidegree (codimension p, level s) of a homogeneous class.
struct Bidegree {
    int p = 0;
    int s = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

enum class Direction { pullback, pushforward };

/// Genus of the curve plus an optional gonality bound. Immutable.
///
/// The context owns the forced vanishing rules. They are stated on bidegrees
/// and shared verbatim by the intersection side and the convolution side, so
/// the rule set is carried into itself by the Fourier map (p, s) -> (g-p+s, s).
class JacobianContext {
public:
    /// Throws DomainError unless genus >= 2 and, if given, 2 <= gonality <= genus+1.
    explicit JacobianContext(int genus, std::optional<int> gonality = std::nullopt);

    [[nodiscard]] int genus() const { return genus_; }
    [[nodiscard]] std::optional<int> gonality() const { return gonality_; }

    /// Same genus, gonality replaced by d.
    [[nodiscard]] JacobianContext with_gonality(int d) const { return JacobianContext(genus_, d); }

    /// True when every class of this bidegree is forced to vanish.
    [[nodiscard]] bool killed(Bidegree b) const;

    /// Largest surviving generator index N^i (intersection side).
    [[nodiscard]] int max_generator() const;
    /// Largest surviving Pontryagin part C_(s) (convolution side); -1 if none.
    [[nodiscard]] int max_part() const;

    friend bool operator==(const JacobianContext&, const JacobianContext&) = default;

private:
    int genus_;
    std::optional<int> gonality_;
};

/// New context whose rules additionally kill N^k for k >= d and C_(s) for s >= d-1.
JacobianContext apply_gonality(const JacobianContext& ctx, int d);

/// Throws DomainError naming `what` when the contexts differ.
void require_same_context(const JacobianContext& a, const JacobianContext& b, const char* what);

}  // namespace tautring
