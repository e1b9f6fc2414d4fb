#include "tautring/context.hpp"

#include <algorithm>
#include <string>

#include "tautring/rational.hpp"

namespace tautring {

JacobianContext::JacobianContext(int genus, std::optional<int> gonality) : genus_(genus), gonality_(gonality) {
    if (genus < 2) throw DomainError("genus must be at least 2, got " + std::to_string(genus));
    if (gonality && (*gonality < 2 || *gonality > genus + 1))
        throw DomainError("gonality must lie in [2, genus+1], got " + std::to_string(*gonality));
}

bool JacobianContext::killed(Bidegree b) const {
    const int g = genus_;
    if (b.p < 0 || b.p > g) return true;
    if (b.s >= g) return true;
    if (b.s > 0 && b.s >= b.p) return true;
    if (b.p == g && b.s > 0) return true;
    if (b.p <= 1 && b.s > 0) return true;
    return false;
}

int JacobianContext::max_generator() const {
    int top = genus_ - 1;
    if (gonality_) top = std::min(top, *gonality_ - 1);
    return top;
}

int JacobianContext::max_part() const { return max_generator() - 1; }

JacobianContext apply_gonality(const JacobianContext& ctx, int d) { return ctx.with_gonality(d); }

void require_same_context(const JacobianContext& a, const JacobianContext& b, const char* what) {
    if (!(a == b)) throw DomainError(std::string(what) + ": elements belong to different contexts");
}

}  // namespace tautring
