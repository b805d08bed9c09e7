#include "hilb3/registry.hpp"
#include "hilb3/ring.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hilb3;

namespace {

GradedClass cls(const char* s) { return parse_class(s); }

}  // namespace

TEST_CASE("divisor products recovered from point evaluations") {
    // c1(O(d)^[3]) = (d-2)H + F, and c1^2 = c_{1,1} + c2. Evaluate at
    // d = 0, 1, 2 and solve each codim-2 coordinate for (H^2, HF, F^2).
    const ClassFamily c11 = schur_line(Partition{1, 1}), c2 = chern_line(2);
    std::vector<oracle::Vec> cols(3, oracle::Vec(3));
    std::vector<GradedClass> rhs;
    for (int d = 0; d < 3; ++d) {
        Rational a = d - 2;
        cols[0][static_cast<std::size_t>(d)] = a * a;
        cols[1][static_cast<std::size_t>(d)] = Rational(2) * a;
        cols[2][static_cast<std::size_t>(d)] = 1;
        rhs.push_back(c11.eval(d) + c2.eval(d));
    }
    Vec hh(5), hf(5), ff(5);
    for (std::size_t j = 0; j < 5; ++j) {
        oracle::Vec b{rhs[0][j], rhs[1][j], rhs[2][j]};
        auto x = oracle::unique_solution(cols, b);
        REQUIRE(x);
        hh[j] = (*x)[0];
        hf[j] = (*x)[1];
        ff[j] = (*x)[2];
    }
    auto dp = divisor_products();
    CHECK(dp.HH == GradedClass(2, hh));
    CHECK(dp.HF == GradedClass(2, hf));
    CHECK(dp.FF == GradedClass(2, ff));
    CHECK(dp.HH == cls("C + E"));
    CHECK(dp.HF == cls("B + 2D + 2E"));
    CHECK(dp.FF == cls("3A + B + 2D + 2E"));

    // The solved products must also hold at every other twist.
    for (int d = -5; d <= 8; ++d) {
        GradedClass c1 = chern_line(1).eval(d);
        CHECK(square_divisor_class(c1) == c11.eval(d) + c2.eval(d));
    }
}

TEST_CASE("divisor product identities") {
    const auto& ring = PartialRing::standard();
    GradedClass h = cls("H"), f = cls("F");
    CHECK(ring.divisor_product(f - h, Rational(2) * h - f) == cls("-3A + 2B - 2C + 4D + 2E"));
    CHECK(ring.divisor_product(h, f) == ring.divisor_product(f, h));
    GradedClass c1 = cls("H + 2F");
    GradedClass c2 = chern_general(2, BundleData(2, 5, 7));
    CHECK(square_divisor_class(c1) - c2 == cls("7A + 3B + 9D + 12E"));
}

TEST_CASE("constraint system shape") {
    const auto& ring = PartialRing::standard();
    CHECK(ring.divisor_system().rows() == 4);
    CHECK(ring.divisor_system().cols() == 3);
    CHECK(ring.divisor_system().rank() == 3);
    CHECK(ring.constraint_matrix().rows() == 8);
    CHECK(ring.constraint_matrix().cols() == 10);
    CHECK(PartialRing::unknown_name(0) == "H*A");
}

TEST_CASE("determined and undetermined products") {
    const auto& ring = PartialRing::standard();
    auto hc = ring.product({cls("H"), cls("C")});
    REQUIRE(hc.is_determined());
    CHECK(hc.value() == cls("2U + W"));
    CHECK(ring.product({cls("C"), cls("H")}).value() == hc.value());
    CHECK(ring.product({cls("H"), cls("E")}).value() == cls("U"));

    auto ha = ring.product({cls("H"), cls("A")});
    REQUIRE_FALSE(ha.is_determined());
    CHECK_FALSE(ha.reason().empty());
    REQUIRE(ha.witness().size() == 10);
    // The witness is a direction the constraints cannot see.
    CHECK(is_zero(ring.constraint_matrix().apply(ha.witness())));
    CHECK_FALSE(is_zero(ha.witness()));

    CHECK(ring.product({cls("H"), cls("H"), registry_lookup("O4")}).value().coords()[0] == Rational(9));
    CHECK_THROWS_AS(ring.product({cls("C"), cls("C"), cls("C"), cls("H")}), DimensionError);
}

TEST_CASE("Segre classes of line bundles are signed dual Schur classes") {
    // s_i(O(d)^[3]) = (-1)^i c_{1^i}(O(d)^[3])
    for (int d : {0, 1, 2, 3, 5})
        for (int i = 1; i <= 3; ++i) {
            auto s = segre(i, BundleData::line(d));
            REQUIRE(s.is_determined());
            ClassFamily c = schur_line(Partition(std::vector<int>(static_cast<std::size_t>(i), 1)));
            CHECK(s.value() == c.eval(d) * Rational(i % 2 ? -1 : 1));
        }
}

TEST_CASE("ring suites have no failures") {
    CHECK(verify_ring().ok());
    CHECK(verify_orbit_identities().ok());
}
