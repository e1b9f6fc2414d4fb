#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace tautring {

using Integer = mpz_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that no
/// gmpxx expression templates escape into generic code (Eigen, std::map
/// values), and so that the canonical "a/b" string form lives in one place.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a/b" or "a". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational inverse() const;

    /// Always "num/den", e.g. "2/1", "-1/4".
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);

/// Integer power with 0^0 = 1.
Integer ipow(long base, unsigned exponent);

Integer factorial(unsigned n);

}  // namespace tautring

namespace Eigen {

template <>
struct NumTraits<tautring::Rational> : GenericNumTraits<tautring::Rational> {
    using Real = tautring::Rational;
    using NonInteger = tautring::Rational;
    using Literal = tautring::Rational;
    using Nested = tautring::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
