#include "hilb3/chow.hpp"
#include "hilb3/registry.hpp"

#include <doctest.h>

#include <random>

using namespace hilb3;

TEST_CASE("basis sizes") {
    std::size_t total = 0;
    for (int k = 0; k <= 6; ++k) total += basis(k).size();
    CHECK(total == 22);
    CHECK(basis(3).size() == 6);
}

TEST_CASE("unicode and ascii names agree") {
    CHECK(find_basis_element("α")->name == "alpha");
    CHECK(find_basis_element("epsilon")->codim == 4);
    CHECK(parse_class("2α + ε") == parse_class("2alpha + epsilon"));
    CHECK(format_class(parse_class("alpha"), NameStyle::Unicode) == "α");
}

TEST_CASE("class text round trip") {
    std::mt19937 g(3);
    for (int k = 0; k <= 6; ++k)
        for (int t = 0; t < 30; ++t) {
            Vec v(Codim(k).basis_size());
            for (auto& x : v) x = Rational(static_cast<int>(g() % 9) - 4, 1 + g() % 3);
            GradedClass c(k, v);
            CHECK(parse_class(format_class(c), Codim(k)) == c);
            CHECK(parse_class(format_class(c, NameStyle::Unicode), Codim(k)) == c);
        }
    CHECK_THROWS_AS(parse_class("A + U"), std::invalid_argument);
}

TEST_CASE("pairing is symmetric and perfect") {
    for (int k = 0; k <= 6; ++k) {
        const ExactMatrix& p = pairing_matrix(k);
        CHECK(p == pairing_matrix(6 - k).transpose());
        CHECK(p.rank() == Codim(k).basis_size());
    }
    // Divisors against curves.
    CHECK(pair(GradedClass::named("H"), GradedClass::named("phi")) == Rational(1));
    CHECK(pair(GradedClass::named("F"), GradedClass::named("phi")) == Rational(2));
    CHECK(pair(GradedClass::named("F"), GradedClass::named("psi")) == Rational(1));
    CHECK(pair(GradedClass::named("C"), GradedClass::named("alpha")) == Rational(1));
}

TEST_CASE("registry lookups") {
    CHECK(registry_lookup("Eff2.1").codim().value() == 4);
    CHECK(format_class(registry_lookup("O4")) == "3alpha + 3delta + 3epsilon");
    try {
        registry_lookup("Foo");
        FAIL("lookup should fail");
    } catch (const LookupError& e) {
        CHECK_FALSE(e.near_matches().empty());
    }
    CHECK(cone_fixture("Pl2").generators.size() == 15);
    CHECK(cone_fixture("Pl3").generators.size() == 14);
    CHECK(cone_fixture("Pl4").generators.size() == 10);
}

TEST_CASE("leading ray of a family") {
    ClassFamily f(2, {UniPoly::parse("d^2 - 1"), UniPoly::parse("3*d"), UniPoly::parse("2*d^2"),
                      UniPoly::parse("0"), UniPoly::parse("7")});
    CHECK(format_class(leading_ray(f)) == "A + 2C");
}
