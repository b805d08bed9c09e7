#include "hilb3/cone.hpp"
#include "hilb3/registry.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hilb3;

namespace {

Cone fixture(const char* id) {
    const auto& f = cone_fixture(id);
    return Cone(Codim(f.codim), f.generators);
}

Vec random_vec(std::mt19937& g, std::size_t n, int spread) {
    Vec v(n);
    for (auto& x : v) x = Rational(static_cast<int>(g() % (2 * spread + 1)) - spread);
    return v;
}

Vec combine(const std::vector<Vec>& gens, const Vec& w) {
    Vec out(gens.front().size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[j] * gens[j][i];
    return out;
}

}  // namespace

TEST_CASE("simplex membership agrees with brute force in dimensions 1 to 3") {
    std::mt19937 g(4242);
    for (std::size_t dim = 1; dim <= 3; ++dim)
        for (int t = 0; t < 150; ++t) {
            std::vector<Vec> gens;
            for (int j = 0; j < 3; ++j) gens.push_back(random_vec(g, dim, 2));
            for (int q = 0; q < 6; ++q) {
                Vec x = random_vec(g, dim, 3);
                auto sol = nonnegative_solution(gens, x);
                CHECK(sol.has_value() == oracle::cone_member_bruteforce(gens, x));
                if (sol) {
                    for (const auto& w : *sol) CHECK(w.sign() >= 0);
                    CHECK(combine(gens, *sol) == x);
                }
            }
        }
}

TEST_CASE("contains gives a separator when it says no") {
    // Codim 1 and 5 are 2-dimensional, small enough for the oracle.
    std::mt19937 g(17);
    for (int k : {1, 5})
        for (int t = 0; t < 100; ++t) {
            std::vector<GradedClass> gens;
            std::vector<Vec> raw;
            for (int j = 0; j < 3; ++j) {
                raw.push_back(random_vec(g, 2, 2));
                gens.emplace_back(k, raw.back());
            }
            Cone c(k, gens);
            GradedClass x(k, random_vec(g, 2, 3));
            Membership m = contains(c, x);
            CHECK(m.member == oracle::cone_member_bruteforce(raw, x.coords()));
            if (m.member) {
                if (!c.rays().empty()) CHECK(combine(c.rays(), m.combination) == x.coords());
            } else {
                REQUIRE(m.separator);
                CHECK(pair(x, *m.separator).sign() < 0);
                for (const auto& r : c.classes()) CHECK(pair(r, *m.separator).sign() >= 0);
            }
        }
}

TEST_CASE("duality of the effective and nef cones") {
    for (auto [eff, nef] : {std::pair{"Eff2", "Nef2"}, std::pair{"Eff3", "Nef3"}}) {
        Cone e = fixture(eff), n = fixture(nef);
        CHECK(same_cone(dual_cone(e), n));
        CHECK(same_cone(dual_cone(n), e));
        CHECK(same_cone(dual_cone(dual_cone(e)), e));
        // Every nef ray is nonnegative on every effective ray, with a zero
        // on each extremal ray.
        for (const auto& a : n.classes()) {
            int zeros = 0;
            for (const auto& b : e.classes()) {
                CHECK(pair(b, a).sign() >= 0);
                zeros += pair(b, a).is_zero();
            }
            CHECK(zeros >= 1);
        }
    }
    CHECK(extreme_rays(dual_cone(fixture("Eff2"))).size() == 6);
    CHECK(extreme_rays(dual_cone(fixture("Eff3"))).size() == 8);
}

TEST_CASE("extreme rays are idempotent and order independent") {
    std::mt19937 g(5);
    Cone pl = fixture("Pl3");
    auto base = extreme_rays(pl);
    CHECK(same_ray_set(extreme_rays(Cone::from_vectors(pl.codim(), base)), base));
    for (int t = 0; t < 5; ++t) {
        auto rays = pl.rays();
        std::shuffle(rays.begin(), rays.end(), g);
        // A redundant generator should disappear.
        rays.push_back(combine({rays[0], rays[1]}, Vec{Rational(1), Rational(2)}));
        CHECK(same_ray_set(extreme_rays(Cone::from_vectors(pl.codim(), rays)), base));
    }
}

TEST_CASE("inequality description with a lineality space") {
    // x >= 0 in the plane: one ray and the y-axis as a line.
    ExactMatrix a{{1, 0}};
    auto gens = inequality_cone_generators(a, 2);
    CHECK(gens.size() == 3);
    CHECK(std::find(gens.begin(), gens.end(), Vec{Rational(1), Rational(0)}) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), Vec{Rational(0), Rational(1)}) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), Vec{Rational(0), Rational(-1)}) != gens.end());

    // The dual of the empty cone is the whole space.
    Cone whole = dual_cone(Cone(Codim(1)));
    CHECK(whole.rays().size() == 4);
    for (const auto& v : {Vec{Rational(3), Rational(-7)}, Vec{Rational(-1), Rational(-1)}})
        CHECK(contains(whole, GradedClass(5, v)).member);
}

TEST_CASE("primitive rays keep orientation") {
    CHECK(primitive_ray(Vec{Rational(-2), Rational(4)}) == Vec{Rational(-1), Rational(2)});
    CHECK(canonical_line(Vec{Rational(-2), Rational(4)}) == Vec{Rational(1), Rational(-2)});
    CHECK(primitive_ray(Vec{Rational(1, 2), Rational(1, 3)}) == Vec{Rational(3), Rational(2)});
}

TEST_CASE("pliant bounds") {
    Cone computed = pliant_inner_bound(2);
    for (const auto& g : cone_fixture("Pl2").generators) CHECK(contains(computed, g).member);
    CHECK(verify_pliant_bound().ok());
    CHECK(verify_pliant_in_nef().ok());
    CHECK(verify_cone_duality(2).ok());
    CHECK(verify_cone_duality(3).ok());
    CHECK_THROWS(pliant_inner_bound(3));
}
