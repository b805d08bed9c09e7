#include "hilb3/matrix.hpp"
#include "hilb3/poly.hpp"
#include "hilb3/rational.hpp"

#include <doctest.h>

#include <random>

using namespace hilb3;

namespace {

ExactMatrix random_matrix(std::mt19937& g, std::size_t r, std::size_t c, int spread) {
    std::uniform_int_distribution<int> d(-spread, spread);
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(g), 1 + std::abs(d(g)) % 3);
    return m;
}

}  // namespace

TEST_CASE("rational parse and format round trip") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse(" 12 ").str() == "12");
    CHECK(Rational::parse("0/7").str() == "0");
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789012345678901234567891/2"})
        CHECK(Rational::parse(Rational::parse(s).str()).str() == std::string(s));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("rational arithmetic stays normalised") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - a).is_zero());
    CHECK((a / b) == Rational(2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
}

TEST_CASE("polynomial parse, print and evaluate") {
    UniPoly p = UniPoly::parse("3/2*d^3 - d + 7");
    CHECK(UniPoly::parse(p.str()) == p);
    CHECK(p.eval(2) == Rational(17));
    CHECK(p.degree() == 3);
    UniPoly d = UniPoly::variable();
    CHECK(binomial(d, 3).eval(5) == Rational(10));
    CHECK(binomial(d, 2).eval(-1) == Rational(1));
}

TEST_CASE("rref is idempotent and rank agrees with pivots") {
    std::mt19937 g(20261015);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + g() % 6, c = 1 + g() % 7;
        ExactMatrix m = random_matrix(g, r, c, 2);
        if (t % 3 == 0 && r > 1)  // force a dependent row
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(3) - m(r > 2 ? 1 : 0, j);
        Echelon e = m.rref();
        Echelon e2 = e.form.rref();
        CHECK(e2.form == e.form);
        CHECK(e2.pivots == e.pivots);
        CHECK(m.rank() == e.pivots.size());
        for (const auto& w : m.nullspace()) CHECK(is_zero(m.apply(w)));
        CHECK(m.nullspace().size() == c - m.rank());
    }
}

TEST_CASE("solve returns a solution or proves inconsistency") {
    std::mt19937 g(7);
    for (int t = 0; t < 40; ++t) {
        ExactMatrix m = random_matrix(g, 4, 3, 3);
        Vec x0{Rational(g() % 5), Rational(-1), Rational(1, 2)};
        Vec b = m.apply(x0);
        auto x = m.solve(b);
        REQUIRE(x);
        CHECK(m.apply(*x) == b);
    }
    ExactMatrix m{{1, 0}, {1, 0}};
    CHECK_FALSE(m.solve(Vec{Rational(1), Rational(2)}));
}

TEST_CASE("row space membership comes with a certificate") {
    std::mt19937 g(99);
    for (int t = 0; t < 60; ++t) {
        ExactMatrix m = random_matrix(g, 3, 5, 2);
        Vec v(5);
        if (t % 2 == 0) {
            Vec y{Rational(1), Rational(-2), Rational(1, 3)};
            v = m.apply_left(y);
        } else {
            for (auto& x : v) x = Rational(static_cast<int>(g() % 7) - 3);
        }
        RowSpaceResult r = in_row_space(m, v);
        if (r.member) {
            CHECK(m.apply_left(r.combination) == v);
        } else {
            CHECK(is_zero(m.apply(r.witness)));
            CHECK_FALSE(dot(v, r.witness).is_zero());
        }
        if (t % 2 == 0) CHECK(r.member);
    }
}
