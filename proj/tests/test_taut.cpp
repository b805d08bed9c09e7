#include "hilb3/taut.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hilb3;

TEST_CASE("line bundle Chern classes at small twists") {
    CHECK(format_class(chern_line(2).eval(2)) == "A + B + D");
    CHECK(format_class(chern_line(1).eval(0)) == "-2H + F");
    for (int i = 4; i <= 6; ++i) CHECK(chern_line(i).is_zero());
    CHECK_THROWS(chern_line(0));
    CHECK_THROWS(chern_line(7));
}

TEST_CASE("general formulas on the spec bundles") {
    CHECK(format_class(chern_general(2, BundleData(2, 5, 7))) == "5A + 5B + C + 7D + 5E");
    CHECK(format_class(chern_general(2, BundleData(5, 13, 70))) == "35A + 30B + 6C + 52D + 50E");
    CHECK(format_class(chern_general(1, BundleData(1, -3, 0))) == "-5H + F");
}

TEST_CASE("general formulas restrict to line bundles") {
    for (int d = -4; d <= 6; ++d)
        for (int i = 1; i <= 6; ++i)
            CHECK(chern_general(i, BundleData::line(d)) == chern_line(i).eval(d));
}

TEST_CASE("degrees against complementary classes, checked pointwise") {
    // Oracle: hand binomials, evaluated at integers.
    for (long d = 0; d <= 9; ++d) {
        CHECK(pair(chern_line(1).eval(d), GradedClass::named("phi")) == Rational(d));
        CHECK(pair(chern_line(2).eval(d), GradedClass::named("gamma")) == Rational(d * d));
        CHECK(pair(chern_line(2).eval(d), GradedClass::named("alpha")) == oracle::binom(d - 1, 2));
        CHECK(pair(chern_line(3).eval(d), GradedClass::named("Y")) == oracle::binom(d, 3));
        CHECK(pair(chern_line(3).eval(d), GradedClass::named("W")) == Rational(d * d * d));
        // c3 . c3 = 6C(d,3)^2 + 12C(d,3)C(d,2) + 4C(d,2)^2 + 2d C(d,3)
        Rational b3 = oracle::binom(d, 3), b2 = oracle::binom(d, 2);
        CHECK(pair(chern_line(3).eval(d), chern_line(3).eval(d)) ==
              Rational(6) * b3 * b3 + Rational(12) * b3 * b2 + Rational(4) * b2 * b2 + Rational(2 * d) * b3);
    }
}

TEST_CASE("partitions and Pieri successors") {
    CHECK(partitions_of(6, 3).size() == 7);
    CHECK(partitions_of(4, 3).size() == 4);
    auto s = pieri_successors(Partition{2, 1}, 1);
    std::vector<std::string> names;
    for (const auto& p : s) names.push_back(p.str());
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"2,1,1", "2,2", "3,1"});
    CHECK(Partition::parse("2,1^2") == Partition{2, 1, 1});
    CHECK(Partition::parse("(3,1)") == Partition{3, 1});
    CHECK(Partition{2, 1, 1}.compact() == "2,1^2");
}

TEST_CASE("Schur classes of a rank-3 bundle vanish past the rank") {
    CHECK(schur_line(Partition{4}).is_zero());
    CHECK_THROWS(schur_line(Partition{3, 3, 1}));
    CHECK(schur_line(Partition{1}) == chern_line(1));
    CHECK(schur_line(Partition{3}) == chern_line(3));
}

TEST_CASE("Giambelli determinants") {
    // s_{1,1} = c1^2 - c2, s_{2,1} = c1 c2 - c3
    MultiPoly c1 = MultiPoly::var("c1"), c2 = MultiPoly::var("c2"), c3 = MultiPoly::var("c3");
    CHECK(schur_giambelli(Partition{1, 1}) == c1 * c1 - c2);
    CHECK(schur_giambelli(Partition{2, 1}) == c1 * c2 - c3);
    CHECK(schur_giambelli(Partition{3, 3}) == c3 * c3);
}

TEST_CASE("printed and corrected tables differ exactly at the erratum") {
    const auto& printed = SchurTable::builtin(SchurTable::Variant::Printed);
    const auto& fixed = SchurTable::builtin(SchurTable::Variant::Corrected);
    CHECK(verify_pieri(Partition{3, 1}, 2, printed).status == Status::Fail);
    CHECK(verify_pieri(Partition{3, 1}, 2, fixed).status == Status::Pass);
    for (const auto& p : fixed.partitions())
        if (!(p == Partition{3, 1})) CHECK(printed.row(p) == fixed.row(p));
    CHECK(fixed.partitions().size() == 19);
}

TEST_CASE("suites pass on the corrected table") {
    CHECK(verify_intersection_identities().ok());
    CHECK(verify_pieri_suite().ok());
    CHECK(verify_lr_suite().ok());
    CHECK(verify_errata().ok());
    CHECK(verify_general_specialization().ok());
    CHECK(verify_degree_conjecture().ok());
}
