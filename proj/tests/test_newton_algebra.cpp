#include <doctest.h>

#include "tautring/newton_algebra.hpp"
#include "tautring/sampling.hpp"

using namespace tautring;

namespace {

NElement N(const JacobianContext& ctx, std::vector<int> indices, Rational c = Rational(1)) {
    return NElement(ctx, NMonomial::from_indices(ctx, indices), c);
}

}  // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(JacobianContext(1), DomainError);
    CHECK_THROWS_AS(JacobianContext(4, 1), DomainError);
    CHECK_THROWS_AS(JacobianContext(4, 6), DomainError);
    CHECK_NOTHROW(JacobianContext(4, 5));
    CHECK(apply_gonality(JacobianContext(5), 3) == JacobianContext(5, 3));
}

TEST_CASE("kill rules on bidegrees") {
    const JacobianContext ctx(5);
    CHECK_FALSE(ctx.killed({0, 0}));
    CHECK_FALSE(ctx.killed({5, 0}));
    CHECK(ctx.killed({6, 0}));
    CHECK(ctx.killed({-1, 0}));
    CHECK(ctx.killed({5, 1}));
    CHECK(ctx.killed({1, 1}));
    CHECK(ctx.killed({2, 2}));
    CHECK_FALSE(ctx.killed({3, 2}));
    CHECK(ctx.killed({4, 5}));
}

TEST_CASE("n_mul") {
    const JacobianContext g4(4), g3(3);
    CHECK(n_mul(N(g4, {1}), N(g4, {1})) == N(g4, {1, 1}));
    CHECK(n_mul(N(g3, {1}), N(g3, {2})).is_zero());
    CHECK(n_mul(N(g4, {1}), N(g4, {2})) == N(g4, {1, 2}));
    CHECK(n_mul(N(g4, {1}), N(g4, {2})).homogeneous_bidegree() == Bidegree{3, 1});
    CHECK_THROWS_AS(n_mul(N(g4, {1}), N(JacobianContext(5), {1})), DomainError);
    CHECK(n_mul(n_one(g4), N(g4, {3})) == N(g4, {3}));
}

TEST_CASE("w_class via Newton's identities") {
    const JacobianContext g3(3), g4(4), g6(6);
    CHECK(w_class(g4, 0) == n_one(g4));
    CHECK(w_class(g4, 1) == N(g4, {1}));
    CHECK(w_class(g4, 2) == N(g4, {1, 1}, Rational(1, 2)) - N(g4, {2}));
    // e3 = (p1^3 - 3 p1 p2 + 2 p3)/6 with p_k = k! N^k
    CHECK(w_class(g4, 3) == N(g4, {1, 1, 1}, Rational(1, 6)) - N(g4, {1, 2}) + N(g4, {3}, Rational(2)));
    // At g = 3 the N^3 term is N^g = 0, and N^1 N^2 sits at bidegree (3,1) = (g, >0).
    CHECK(w_class(g3, 3) == N(g3, {1, 1, 1}, Rational(1, 6)));
    // w^g is the point class: only (N^1)^g / g! survives.
    CHECK(w_class(g6, 6) == N(g6, {1, 1, 1, 1, 1, 1}, Rational(1, 720)));
    CHECK_THROWS_AS(w_class(g4, 5), DomainError);
    CHECK_THROWS_AS(w_class(g4, -1), DomainError);
}

TEST_CASE("third Newton class in terms of w") {
    // N^3 = p3/6 with p3 = e1^3 - 3 e1 e2 + 3 e3.
    const JacobianContext ctx(5);
    const NElement theta = w_class(ctx, 1);
    const NElement expected = n_pow(theta, 3) * Rational(1, 6) - n_mul(theta, w_class(ctx, 2)) * Rational(1, 2) +
                              w_class(ctx, 3) * Rational(1, 2);
    CHECK(newton_class(ctx, 3) == expected);
    CHECK(newton_from_w(ctx, 3) == expected);
}

TEST_CASE("newton_class") {
    const JacobianContext g4(4);
    CHECK(newton_class(g4, 1) == N(g4, {1}));
    CHECK(newton_class(g4, 2) == N(g4, {2}));
    CHECK(newton_class(g4, 4).is_zero());
    CHECK_THROWS_AS(newton_class(g4, 0), DomainError);
    CHECK_THROWS_AS(newton_class(g4, 5), DomainError);
    const JacobianContext trigonal(6, 3);
    CHECK(newton_class(trigonal, 2) == N(trigonal, {2}));
    CHECK(newton_class(trigonal, 3).is_zero());
}

TEST_CASE("n_bidegree_project") {
    const JacobianContext ctx(5);
    CHECK(n_bidegree_project(N(ctx, {1}) + N(ctx, {2}), 1, 0) == N(ctx, {1}));
    CHECK(n_bidegree_project(w_class(ctx, 2), 2, 1) == -N(ctx, {2}));
    CHECK(n_bidegree_project(w_class(ctx, 3) + n_one(ctx), 2, 3).is_zero());
}

TEST_CASE("n_scale") {
    const JacobianContext g3(3), g4(4);
    CHECK(n_scale(N(g4, {1}), 2, Direction::pullback) == N(g4, {1}, Rational(4)));
    CHECK(n_scale(N(g4, {2}), -1, Direction::pullback) == -N(g4, {2}));
    CHECK(n_scale(N(g3, {1}), 3, Direction::pushforward) == N(g3, {1}, Rational(81)));
    // 0^0 = 1: the point class is fixed by 0_*
    const NElement pt = w_class(g4, 4);
    CHECK(n_scale(pt, 0, Direction::pushforward) == pt);
    CHECK(n_scale(n_one(g4), 0, Direction::pullback) == n_one(g4));
    CHECK(n_scale(N(g4, {1}), 0, Direction::pullback).is_zero());
}

TEST_CASE("products of homogeneous elements are homogeneous of the summed bidegree") {
    for (int g = 2; g <= 8; ++g) {
        const JacobianContext ctx(g);
        ElementSampler sampler(ctx, 100 + static_cast<unsigned>(g));
        for (int i = 0; i < 40; ++i) {
            const NElement a = sampler.homogeneous_nelement();
            const NElement b = sampler.homogeneous_nelement();
            const auto prod = n_mul(a, b).homogeneous_bidegree();
            const auto ba = a.homogeneous_bidegree(), bb = b.homogeneous_bidegree();
            if (!prod || !ba || !bb) continue;
            CHECK(*prod == Bidegree{ba->p + bb->p, ba->s + bb->s});
        }
    }
}

TEST_CASE("w <-> N conversion round trip") {
    for (int g = 2; g <= 12; ++g) {
        const JacobianContext ctx(g);
        for (int k = 1; k <= g; ++k) CHECK(newton_from_w(ctx, k) == newton_class(ctx, k));
    }
}

TEST_CASE("scaling composition, involution and support") {
    for (int g = 2; g <= 6; ++g) {
        const JacobianContext ctx(g);
        ElementSampler sampler(ctx, 200 + static_cast<unsigned>(g));
        for (long k = -3; k <= 3; ++k) {
            for (int i = 0; i < 10; ++i) {
                const NElement x = sampler.nelement();
                CHECK(n_scale(n_scale(x, k, Direction::pushforward), k, Direction::pullback) == x * Rational(ipow(k, 2 * static_cast<unsigned>(g))));
                const NElement y = sampler.nelement();
                CHECK(n_scale(n_mul(x, y), k, Direction::pullback) ==
                      n_mul(n_scale(x, k, Direction::pullback), n_scale(y, k, Direction::pullback)));
                for (const auto& [m, c] : n_scale(x, k, Direction::pushforward).terms()) CHECK(x.terms().count(m) == 1);
            }
        }
    }
}
