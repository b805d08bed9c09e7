#pragma once

#include "hilb3/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilb3 {

// Dense univariate polynomial over Q in one named variable.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(Vec coeffs, std::string var = "d");

    static UniPoly constant(const Rational& c, std::string var = "d");
    static UniPoly variable(std::string var = "d");

    // Parses sums of terms like "3/2*d^3 - d + 7". The variable may be
    // omitted after a coefficient only when the term is a constant.
    static UniPoly parse(std::string_view text, std::string var = "d");

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(std::size_t k) const;
    Rational leading() const;
    const Vec& coeffs() const { return c_; }
    const std::string& var() const { return var_; }

    Rational eval(const Rational& x) const;
    UniPoly compose(const UniPoly& inner) const;

    std::string str() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator+(UniPoly a, const Rational& s) { return a += constant(s, a.var_); }
    friend UniPoly operator-(UniPoly a, const Rational& s) { return a -= constant(s, a.var_); }
    friend UniPoly operator+(const Rational& s, UniPoly a) { return a += constant(s, a.var_); }
    friend UniPoly operator-(const Rational& s, const UniPoly& a) { return constant(s, a.var_) - a; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    void unify_var(const UniPoly& o);

    Vec c_;
    std::string var_ = "d";
};

UniPoly binomial(const UniPoly& x, unsigned k);

// Sparse multivariate polynomial; variables are addressed by name only.
class MultiPoly {
public:
    using Monomial = std::map<std::string, unsigned>;
    using Terms = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    MultiPoly(T c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly var(const std::string& name);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int total_degree() const;
    bool is_homogeneous(const std::map<std::string, int>& weights, int degree) const;
    std::vector<std::string> variables() const;
    Rational coeff(const Monomial& m) const;

    // Evaluates into any ring R that supports R + R, R * R and Rational * R.
    // `one` fixes the multiplicative identity (e.g. a constant UniPoly in d).
    template <class R>
    R evaluate(const std::map<std::string, R>& values, const R& one) const {
        R acc = Rational(0) * one;
        for (const auto& [mono, coef] : t_) {
            R term = coef * one;
            for (const auto& [name, exp] : mono) {
                auto it = values.find(name);
                if (it == values.end())
                    throw std::invalid_argument("no value supplied for variable '" + name + "'");
                for (unsigned e = 0; e < exp; ++e) term = term * it->second;
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

private:
    Terms t_;
};

MultiPoly pow(const MultiPoly& x, unsigned e);
MultiPoly binomial(const MultiPoly& x, unsigned k);

}  // namespace hilb3
