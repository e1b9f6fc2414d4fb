#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "tautring/sampling.hpp"
#include "tautring/theta.hpp"

using namespace tautring;

namespace {

PElement P(const JacobianContext& ctx, std::vector<int> parts, Rational c = Rational(1)) {
    return PElement(ctx, PMonomial(std::move(parts)), c);
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// Closed form read off the k-tuple recursion, applied monomial by monomial:
// theta.<s> = g sum_{s_i = 0} <s \ i> - sum_{i<j} C(s_i+s_j+2, s_i+1) <s \ {i,j}, s_i+s_j>
PElement theta_closed_form(const PElement& x) {
    const JacobianContext& ctx = x.context();
    PElement out(ctx);
    for (const auto& [m, c] : x.terms()) {
        const auto& s = m.parts;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != 0) continue;
            auto rest = s;
            rest.erase(rest.begin() + static_cast<long>(i));
            out.add(PMonomial(rest), c * Rational(ctx.genus()));
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                std::vector<int> rest;
                for (std::size_t l = 0; l < s.size(); ++l)
                    if (l != i && l != j) rest.push_back(s[l]);
                rest.push_back(s[i] + s[j]);
                const auto coeff = binomial(static_cast<unsigned>(s[i] + s[j] + 2), static_cast<unsigned>(s[i] + 1));
                out.add(PMonomial(rest), -c * Rational(coeff));
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("theta_mul_ktuple examples") {
    const JacobianContext g2(2), g5(5);
    const auto one = theta_mul_ktuple(g5, KTuple({1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::pair{Rational(5), KTuple()});

    const auto pair = theta_mul_ktuple(g2, KTuple({1, 1}));
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == std::pair{Rational(6), KTuple({1})});
    CHECK(pair[1] == std::pair{Rational(-1), KTuple({2})});

    for (long k = -4; k <= 4; ++k) {
        if (k == 0) continue;
        const auto single = theta_mul_ktuple(g5, KTuple({k}));
        REQUIRE(single.size() == 1);
        CHECK(single[0].first == Rational(5 * k * k));
    }

    // the merge 1 + (-1) = 0 is dropped
    for (const auto& [c, kt] : theta_mul_ktuple(g5, KTuple({1, -1}))) CHECK_FALSE(kt.has_zero());
    CHECK_THROWS_AS(theta_mul_ktuple(g5, KTuple({0, 2})), DomainError);
}

TEST_CASE("theta_mul_ktuple ignores entry order") {
    const JacobianContext ctx(6);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<long> ks(1 + rng() % 4);
        for (long& k : ks) k = static_cast<long>(rng() % 7) + 1 - static_cast<long>(rng() % 2) * 8;
        const auto a = theta_mul_ktuple(ctx, KTuple(ks));
        std::reverse(ks.begin(), ks.end());
        CHECK(theta_mul_ktuple(ctx, KTuple(ks)) == a);
    }
}

TEST_CASE("theta_mul examples") {
    const JacobianContext g2(2), g4(4);
    CHECK(theta_mul(P(g2, {0})) == P(g2, {}, Rational(2)));
    CHECK(theta_mul(point_class(g4)).is_zero());
    CHECK(theta_mul(PElement(g4)).is_zero());
    CHECK(theta_mul(P(g4, {0, 0})) == P(g4, {0}, Rational(6)));
    // g=4: theta.<0,1> = 4<1> - C(3,1)<1>
    CHECK(theta_mul(P(g4, {0, 1})) == P(g4, {1}));
}

TEST_CASE("theta_mul matches the closed form on every basis monomial") {
    for (int g = 2; g <= 8; ++g) {
        std::vector<std::optional<int>> gonalities{std::nullopt};
        for (int d = 2; d <= g + 1 && g <= 7; ++d) gonalities.push_back(d);
        for (const auto& d : gonalities) {
            const JacobianContext ctx(g, d);
            const VandermondeBridge bridge(ctx);
            for (const auto& m : p_basis(ctx)) {
                const PElement x(ctx, m);
                CHECK(theta_mul(x, bridge) == theta_closed_form(x));
            }
        }
    }
}

TEST_CASE("theta_mul does not depend on the node set") {
    for (int g = 3; g <= 7; ++g) {
        const JacobianContext ctx(g);
        std::vector<long> shifted(static_cast<std::size_t>(g - 1)), mixed;
        std::iota(shifted.begin(), shifted.end(), 2L);
        for (long k = 1; static_cast<int>(mixed.size()) < g - 1; ++k) {
            mixed.push_back(k % 2 == 0 ? -k : k);
        }
        const VandermondeBridge base(ctx), a(ctx, shifted), b(ctx, mixed);
        ElementSampler sampler(ctx, 500 + static_cast<unsigned>(g));
        for (int i = 0; i < 15; ++i) {
            const PElement x = sampler.pelement();
            const PElement expected = theta_mul(x, base);
            CHECK(theta_mul(x, a) == expected);
            CHECK(theta_mul(x, b) == expected);
        }
    }
}

TEST_CASE("theta_mul raises p by one and keeps the level") {
    for (int g = 2; g <= 7; ++g) {
        const JacobianContext ctx(g);
        ElementSampler sampler(ctx, 600 + static_cast<unsigned>(g));
        for (int i = 0; i < 20; ++i) {
            const PElement x = sampler.homogeneous_pelement();
            const auto b = x.homogeneous_bidegree();
            if (!b) continue;
            const auto image = theta_mul(x);
            const auto ib = image.homogeneous_bidegree();
            if (image.is_zero()) continue;
            REQUIRE(ib);
            CHECK(ib->p == b->p + 1);
            CHECK(ib->s == b->s);
        }
    }
}

TEST_CASE("theta_mul is linear") {
    const JacobianContext ctx(6);
    ElementSampler sampler(ctx, 77);
    for (int i = 0; i < 20; ++i) {
        const PElement x = sampler.pelement(), y = sampler.pelement();
        const Rational c = sampler.coefficient();
        CHECK(theta_mul(x * c + y) == theta_mul(x) * c + theta_mul(y));
    }
}

TEST_CASE("theta powers") {
    for (int g = 2; g <= 8; ++g) {
        const JacobianContext ctx(g);
        const VandermondeBridge bridge(ctx);
        CHECK(theta_power(ctx, 0, bridge) == fundamental_class(ctx));
        PElement power = fundamental_class(ctx);
        for (int j = 0; j <= g; ++j) {
            // theta^j = j!/(g-j)! <0^(g-j)>
            const Rational c = Rational(factorial(static_cast<unsigned>(j))) / Rational(factorial(static_cast<unsigned>(g - j)));
            CHECK(power == P(ctx, std::vector<int>(static_cast<std::size_t>(g - j), 0), c));
            power = theta_mul(power, bridge);
        }
        CHECK(intersection_number(theta_power(ctx, g, bridge)) == Rational(factorial(static_cast<unsigned>(g))));
        CHECK(theta_power(ctx, g + 1, bridge).is_zero());
    }
    CHECK_THROWS_AS(theta_power(JacobianContext(3), -1), DomainError);
}

TEST_CASE("chain coefficients on <0^a 1^b>") {
    for (int g = 3; g <= 8; ++g) {
        const JacobianContext ctx(g, 3);
        for (int b = 0; b <= g; ++b) {
            for (int a = 1; a + b <= g; ++a) {
                std::vector<int> parts(static_cast<std::size_t>(a), 0), lower(static_cast<std::size_t>(a - 1), 0);
                parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
                lower.insert(lower.end(), static_cast<std::size_t>(b), 1);
                const PMonomial m(parts);
                if (m.killed_in(ctx)) continue;
                CHECK(theta_mul(PElement(ctx, m)) == P(ctx, lower, Rational(a * (g - a + 1 - 3 * b))));
            }
        }
    }
}

TEST_CASE("intersection_number") {
    const JacobianContext ctx(3);
    CHECK(intersection_number(point_class(ctx) * Rational(5, 2)) == Rational(5, 2));
    CHECK(intersection_number(PElement(ctx)) == Rational(0));
    CHECK_THROWS_AS(intersection_number(P(ctx, {0})), DomainError);
    CHECK_THROWS_AS(intersection_number(P(ctx, {0}) + point_class(ctx)), DomainError);
}

TEST_CASE("exponentials of theta") {
    const JacobianContext g2(2), g4(4);
    CHECK(exp_theta_mul(point_class(g4)) == point_class(g4));
    CHECK(exp_theta_mul(P(g2, {0})) == P(g2, {0}) + P(g2, {}, Rational(2)));
    CHECK(exp_theta_convolve(P(g2, {0}) + P(g2, {}, Rational(2)), -1) == -P(g2, {0}) + P(g2, {}, Rational(2)));
    for (int g = 2; g <= 6; ++g) {
        const JacobianContext ctx(g);
        ElementSampler sampler(ctx, 900 + static_cast<unsigned>(g));
        for (int i = 0; i < 10; ++i) {
            const PElement x = sampler.pelement();
            for (int sign : {1, -1}) {
                PElement expected(ctx);
                for (int j = 0; j <= g; ++j)
                    expected += p_star_mul(theta_power(ctx, j), x) * (Rational(j % 2 == 1 ? sign : 1) / Rational(factorial(static_cast<unsigned>(j))));
                CHECK(exp_theta_convolve(x, sign) == expected);
            }
        }
        // e^theta . fundamental class = sum_j theta^j / j!
        PElement expected(ctx);
        for (int j = 0; j <= g; ++j) expected += theta_power(ctx, j) * Rational(factorial(static_cast<unsigned>(j))).inverse();
        CHECK(exp_theta_mul(fundamental_class(ctx)) == expected);
    }
}

TEST_CASE("a gonality context gives the same products with the full node set") {
    for (int g = 3; g <= 7; ++g) {
        for (int d = 2; d <= g; ++d) {
            const JacobianContext ctx(g, d);
            std::vector<long> full(static_cast<std::size_t>(g - 1));
            std::iota(full.begin(), full.end(), 1L);
            const VandermondeBridge small(ctx), large(ctx, full);
            CHECK(small.nodes().size() == static_cast<std::size_t>(std::min(g - 1, d - 1)));
            for (const auto& m : p_basis(ctx)) CHECK(theta_mul(PElement(ctx, m), small) == theta_mul(PElement(ctx, m), large));
        }
    }
    CHECK_THROWS_AS(VandermondeBridge(JacobianContext(5, 3), {1}), DomainError);
}
