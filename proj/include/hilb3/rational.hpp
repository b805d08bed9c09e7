#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hilb3 {

// Exact rational backed by mpq_class. Every constructor and operator leaves
// the value canonical (lowest terms, positive denominator, zero as 0/1).
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            q_ = mpq_class(static_cast<long>(n));
        } else {
            q_ = mpq_class(static_cast<unsigned long>(n));
        }
    }

    Rational(long num, long den);
    explicit Rational(const mpz_class& n);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    // Accepts "p" or "p/q" with an optional sign; surrounding whitespace ok.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    Rational inverse() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    // Throws std::overflow_error when not an integer or out of range.
    long to_long() const;

    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
std::string to_string(const Vec& v);

// C(x, k) = x(x-1)...(x-k+1)/k! for any rational x.
Rational binomial(const Rational& x, unsigned k);

mpz_class gcd_of(const std::vector<mpz_class>& xs);

}  // namespace hilb3
