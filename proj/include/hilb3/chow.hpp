#pragma once

#include "hilb3/matrix.hpp"
#include "hilb3/poly.hpp"
#include "hilb3/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilb3 {

inline constexpr int kDim = 6;
inline constexpr std::array<std::size_t, kDim + 1> kBasisSize{1, 2, 5, 6, 5, 2, 1};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Codim {
public:
    Codim(int v);  // NOLINT(google-explicit-constructor); throws DimensionError outside 0..6
    int value() const { return v_; }
    Codim complement() const { return Codim(kDim - v_); }
    std::size_t basis_size() const { return kBasisSize[static_cast<std::size_t>(v_)]; }
    friend auto operator<=>(const Codim&, const Codim&) = default;

private:
    int v_;
};

struct BasisElement {
    int codim;
    std::size_t index;
    std::string_view name;     // ascii, used on the wire
    std::string_view unicode;  // display form; equals name for latin letters
};

const std::vector<BasisElement>& basis(Codim k);
// Accepts ascii or unicode spellings.
std::optional<BasisElement> find_basis_element(std::string_view name);

class GradedClass {
public:
    explicit GradedClass(Codim k);
    GradedClass(Codim k, Vec coords);

    static GradedClass unit(Codim k, std::size_t index);
    static GradedClass named(std::string_view basis_name);

    Codim codim() const { return k_; }
    const Vec& coords() const { return x_; }
    const Rational& operator[](std::size_t i) const { return x_[i]; }
    bool is_zero() const { return hilb3::is_zero(x_); }

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const Rational& s);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
    friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
    GradedClass operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const GradedClass& a, const GradedClass& b) = default;

private:
    Codim k_;
    Vec x_;
};

// Rows index codim k, columns codim 6-k.
const ExactMatrix& pairing_matrix(Codim k);

Rational pair(const GradedClass& x, const GradedClass& y);

// Scales to the primitive integer vector with the same direction (positive multiple).
GradedClass primitive(const GradedClass& x);

class ClassFamily {
public:
    explicit ClassFamily(Codim k, std::string var = "d");
    ClassFamily(Codim k, std::vector<UniPoly> coords);

    static ClassFamily constant(const GradedClass& x, std::string var = "d");

    Codim codim() const { return k_; }
    const std::vector<UniPoly>& coords() const { return p_; }
    const UniPoly& operator[](std::size_t i) const { return p_[i]; }
    bool is_zero() const;
    int max_degree() const;

    GradedClass eval(const Rational& d) const;
    // The vector of d^power coefficients.
    GradedClass slice(std::size_t power) const;

    ClassFamily& operator+=(const ClassFamily& o);
    ClassFamily& operator-=(const ClassFamily& o);
    friend ClassFamily operator+(ClassFamily a, const ClassFamily& b) { return a += b; }
    friend ClassFamily operator-(ClassFamily a, const ClassFamily& b) { return a -= b; }
    friend ClassFamily operator*(const UniPoly& s, const ClassFamily& a);

    friend bool operator==(const ClassFamily& a, const ClassFamily& b) = default;

private:
    Codim k_;
    std::vector<UniPoly> p_;
};

UniPoly pair(const ClassFamily& x, const ClassFamily& y);
UniPoly pair(const ClassFamily& x, const GradedClass& y);

GradedClass leading_ray(const ClassFamily& f);

enum class NameStyle { Ascii, Unicode };

// Canonical text such as "2A + B - 2C + 4D + 2E"; non-integral coefficients
// are written "p/q*name". The zero class prints as "0".
std::string format_class(const GradedClass& x, NameStyle style = NameStyle::Ascii);

// Inverse of format_class. `hint` is required only to parse "0".
GradedClass parse_class(std::string_view text, std::optional<Codim> hint = std::nullopt);

std::string format_family(const ClassFamily& f, NameStyle style = NameStyle::Ascii);

}  // namespace hilb3
