#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "tautring/kernel.hpp"

using namespace tautring;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Independent check of T * M = I, one scalar sum at a time.
bool inverts_power_matrix(const CoefficientTable& t, const std::vector<long>& nodes, unsigned offset) {
    const auto n = nodes.size();
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t col = 0; col < n; ++col) {
            Rational sum;
            for (std::size_t j = 0; j < n; ++j)
                sum += t(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)) * Rational(ipow(nodes[j], offset + static_cast<unsigned>(col)));
            if (sum != Rational(s == col ? 1 : 0)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("rational normal form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("10/4") == q(5, 2));
    CHECK(Rational::parse("-7") == q(-7));
    CHECK(Rational::parse("+3/9").str() == "1/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(q(1) / q(0), DomainError);
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK(ipow(0, 0) == 1);
    CHECK(ipow(-3, 3) == -27);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(42);
    auto pick = [&] {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 12) + 1;
        return q(num, den);
    };
    for (int i = 0; i < 300; ++i) {
        const Rational a = pick(), b = pick(), c = pick();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == q(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == q(1));
        CHECK(Rational::parse((a * b).str()) == a * b);
    }
}

TEST_CASE("vandermonde_coefficients examples") {
    const std::vector<long> one{1};
    CHECK(vandermonde_coefficients(one, 2)(0, 0) == q(1));

    const std::vector<long> two{1, 2};
    const auto t2 = vandermonde_coefficients(two, 2);
    CHECK(t2(0, 0) == q(2));
    CHECK(t2(0, 1) == q(-1, 4));
    CHECK(t2(1, 0) == q(-1));
    CHECK(t2(1, 1) == q(1, 4));

    // frozen from an independent symbolic inversion
    const std::vector<long> three{1, 2, 3};
    const auto t3 = vandermonde_coefficients(three, 2);
    const Rational expected[3][3] = {{q(3), q(-3, 4), q(1, 9)}, {q(-5, 2), q(1), q(-1, 6)}, {q(1, 2), q(-1, 4), q(1, 18)}};
    for (int s = 0; s < 3; ++s)
        for (int j = 0; j < 3; ++j) CHECK(t3(s, j) == expected[s][j]);
    // row 0 against k^2, k^3, k^4
    CHECK(t3(0, 0) * q(1) + t3(0, 1) * q(4) + t3(0, 2) * q(9) == q(1));
    CHECK(t3(0, 0) * q(1) + t3(0, 1) * q(8) + t3(0, 2) * q(27) == q(0));
    CHECK(t3(0, 0) * q(1) + t3(0, 1) * q(16) + t3(0, 2) * q(81) == q(0));

    const std::vector<long> shifted{2, 3, 4};
    const auto t4 = vandermonde_coefficients(shifted, 2);
    CHECK(t4(0, 0) == q(3, 2));
    CHECK(t4(1, 2) == q(-5, 32));
}

TEST_CASE("vandermonde_coefficients inverts the power matrix for many node sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        std::vector<long> nodes;
        while (nodes.size() < n) {
            const long k = static_cast<long>(rng() % 21) - 10;
            if (k != 0 && std::find(nodes.begin(), nodes.end(), k) == nodes.end()) nodes.push_back(k);
        }
        const unsigned offset = static_cast<unsigned>(rng() % 4);
        const auto t = vandermonde_coefficients(nodes, offset);
        CHECK(inverts_power_matrix(t, nodes, offset));
        // the same identity through Eigen's product
        const CoefficientTable id = t * power_matrix(nodes, offset);
        CHECK((id.array() == CoefficientTable::Identity(id.rows(), id.cols()).array()).all());
    }
}

TEST_CASE("vandermonde_coefficients rejects bad nodes") {
    const std::vector<long> dup{1, 2, 1};
    const std::vector<long> zero{0, 1};
    const std::vector<long> none;
    CHECK_THROWS_AS(vandermonde_coefficients(dup, 2), DomainError);
    CHECK_THROWS_AS(vandermonde_coefficients(zero, 2), DomainError);
    CHECK_THROWS_AS(vandermonde_coefficients(none, 2), DomainError);
}

TEST_CASE("exact_inverse rejects singular matrices") {
    CoefficientTable m(2, 2);
    m << q(1), q(2), q(2), q(4);
    CHECK_THROWS_AS(exact_inverse(m), DomainError);
}

TEST_CASE("multinomial") {
    const std::vector<unsigned> a{1, 1}, b{3}, c{2, 1, 1}, empty;
    CHECK(multinomial(a) == 2);
    CHECK(multinomial(b) == 1);
    CHECK(multinomial(c) == 12);
    CHECK(multinomial(empty) == 1);
}
