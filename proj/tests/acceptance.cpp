// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero when any criterion fails.

#include "hilb3/cone.hpp"
#include "hilb3/exceptional.hpp"
#include "hilb3/registry.hpp"
#include "hilb3/ring.hpp"
#include "hilb3/taut.hpp"

#include "oracles.hpp"

#include <functional>
#include <iostream>

using namespace hilb3;

namespace {

GradedClass cls(const char* s) { return parse_class(s); }

std::string first_failure(const Report& r) {
    for (const auto& e : r.entries)
        if (e.status == Status::Fail) return e.id + ": expected " + e.expected + ", got " + e.actual;
    return {};
}

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome prop34() {
    Report r = verify_intersection_identities();
    if (!r.ok()) return {false, first_failure(r)};
    return {r.entries.size() == 15, std::to_string(r.entries.size() - 2) + " identities and 2 spot values"};
}

Outcome pieri_printed() {
    // The table as printed, without the erratum correction.
    Report r = verify_pieri_suite(SchurTable::builtin(SchurTable::Variant::Printed));
    if (!r.ok()) return {false, first_failure(r)};
    return {true, std::to_string(r.entries.size()) + " checks on the printed table"};
}

Outcome ring() {
    auto dp = divisor_products();
    const auto& pr = PartialRing::standard();
    bool ok = pr.divisor_system().rank() == 3 && dp.HH == cls("C + E") && dp.HF == cls("B + 2D + 2E") &&
              dp.FF == cls("3A + B + 2D + 2E");
    GradedClass h = cls("H"), f = cls("F");
    GradedClass o2col = pr.divisor_product(f - h, Rational(2) * h - f) * Rational(2);
    ok = ok && o2col == cls("-6A + 4B - 4C + 8D + 4E") && o2col == registry_lookup("O2col");
    GradedClass t = square_divisor_class(cls("H + 2F")) - chern_general(2, BundleData(2, 5, 7));
    ok = ok && t == cls("7A + 3B + 9D + 12E");
    return {ok, "H^2 = " + format_class(dp.HH) + ", HF = " + format_class(dp.HF) + ", F^2 = " + format_class(dp.FF) +
                    "; 2(F-H)(2H-F) = " + format_class(o2col) + "; c1^2 - c2 of T(1) = " + format_class(t)};
}

Outcome orbits() {
    const auto& pr = PartialRing::standard();
    GradedClass o4 = registry_lookup("O4");
    auto a = pr.product({cls("H"), cls("H"), o4});
    Rational d = pair(o4, cls("D")), b = pair(o4, cls("B"));
    bool ok = a.is_determined() && a.value().coords()[0] == Rational(9) && d.is_zero() && b == Rational(3);
    return {ok, "H^2 O4 = " + (a.is_determined() ? a.value().coords()[0].str() : "undetermined") + ", O4 D = " +
                    d.str() + ", O4 B = " + b.str()};
}

Outcome cones() {
    Report r2 = verify_cone_duality(2), r3 = verify_cone_duality(3);
    const auto& e2 = cone_fixture("Eff2");
    const auto& e3 = cone_fixture("Eff3");
    Cone c2(Codim(e2.codim), e2.generators), c3(Codim(e3.codim), e3.generators);
    std::size_t n2 = extreme_rays(dual_cone(c2)).size(), n3 = extreme_rays(dual_cone(c3)).size();
    bool ok = r2.ok() && r3.ok() && n2 == 6 && n3 == 8 && same_cone(dual_cone(dual_cone(c2)), c2) &&
              same_cone(dual_cone(dual_cone(c3)), c3);
    return {ok, "extreme rays " + std::to_string(n2) + " and " + std::to_string(n3) + "; double duals recovered"};
}

Outcome exceptional() {
    bool ok = epsilon(DyadicRational(1, 2)).slope == Rational(2, 5) &&
              epsilon(DyadicRational(3, 2)).slope == Rational(3, 5) &&
              epsilon(DyadicRational(1, 3)).slope == Rational(5, 13);
    auto v = enumerate_slopes(100, 0, 1);
    std::set<long> ranks;
    for (const auto& e : v) ranks.insert(e.rank);
    ok = ok && v.size() == 13 && ranks == std::set<long>{1, 2, 5, 13, 29, 34, 89};
    Report r = verify_epsilon();
    if (!r.ok()) return {false, first_failure(r)};
    return {ok, std::to_string(v.size()) + " slopes in [0,1], ranks {1, 2, 5, 13, 29, 34, 89}"};
}

Outcome pliant() {
    Report b = verify_pliant_bound(), n = verify_pliant_in_nef();
    std::size_t listed = 0;
    for (const auto& e : b.entries)
        if (e.id.rfind("Pl2 ", 0) == 0 && e.id.find("extremal") == std::string::npos && e.status == Status::Pass)
            ++listed;
    if (!b.ok()) return {false, first_failure(b)};
    if (!n.ok()) return {false, first_failure(n)};
    return {listed == 15 && n.entries.size() == 39,
            std::to_string(listed) + " of 15 codim-2 classes reproduced; " + std::to_string(n.entries.size()) +
                " nef pairing checks"};
}

Outcome very_ample() {
    using T = AmpleVerdict::Tag;
    using F = GaetaResolution::Form;
    bool ok = classify_2va(BundleData(1, 3, 0)).tag == T::Yes && classify_2va(BundleData(2, 5, 7)).tag == T::Yes &&
              classify_2va(BundleData(1, -3, 0)).tag == T::No;
    BundleData fx(2, 3, 3);
    ok = ok && gaeta(fx).d == -1 && classify_2va(fx).tag == T::Unknown;
    GaetaResolution g = gaeta(BundleData(2, 5, 7));
    ok = ok && g == GaetaResolution{F::FirstForm, 0, 0, 1, 3};
    return {ok, "gaeta(2,5,7) = " + g.str()};
}

// Every 3-subset of the nonzero {-1,0,1} vectors in dimensions 1, 2, 3,
// against a grid of test points (sampled in dimension 3).
bool cone_oracle_agrees(std::size_t& cases) {
    using oracle::Vec;
    bool ok = true;
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        std::vector<Vec> pool, grid;
        std::size_t total = 1;
        for (std::size_t i = 0; i < dim; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Vec v(dim);
            std::size_t c = code;
            bool zero = true;
            for (std::size_t i = 0; i < dim; ++i) {
                v[i] = Rational(static_cast<long>(c % 3) - 1);
                zero = zero && v[i].is_zero();
                c /= 3;
            }
            if (!zero) pool.push_back(v);
        }
        for (std::size_t code = 0; code < total * total; ++code) {
            Vec v(dim);
            std::size_t c = code;
            for (std::size_t i = 0; i < dim; ++i) {
                v[i] = Rational(static_cast<long>(c % 5) - 2);
                c /= 5;
            }
            if (dim < 3 || code % 61 == 0) grid.push_back(v);
        }
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                for (std::size_t k = j + 1; k < pool.size(); ++k) {
                    std::vector<Vec> gens{pool[i], pool[j], pool[k]};
                    for (const auto& x : grid) {
                        ++cases;
                        if (nonnegative_solution(gens, x).has_value() != oracle::cone_member_bruteforce(gens, x))
                            ok = false;
                    }
                }
    }
    return ok;
}

Outcome properties() {
    Report a = verify_general_specialization(), d = verify_degree_conjecture();
    if (!a.ok()) return {false, first_failure(a)};
    if (!d.ok()) return {false, first_failure(d)};
    std::size_t cases = 0;
    bool cones = cone_oracle_agrees(cases);
    return {cones, "specialization and " + std::to_string(d.entries.size()) + " degree bounds hold; " +
                       std::to_string(cases) + " membership cases match brute force"};
}

}  // namespace

int main() {
    struct Criterion {
        int n;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "intersection identities of c1, c2, c3", prop34},
        {2, "Pieri identities on the table as printed", pieri_printed},
        {3, "ring reconstruction", ring},
        {4, "orbit identities", orbits},
        {5, "cone duality", cones},
        {6, "exceptional slope calculus", exceptional},
        {7, "pliant bounds", pliant},
        {8, "2-very ampleness", very_ample},
        {9, "property suites", properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << "criterion " << c.n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << " -- " << o.detail
                  << "\n";
        if (c.n == 2 && !o.ok) {
            Report fixed = verify_pieri_suite(SchurTable::builtin(SchurTable::Variant::Corrected));
            std::cout << "  note: with the corrected (3,1) row the same suite gives "
                      << fixed.count(Status::Pass) << " pass, " << fixed.count(Status::Fail) << " fail\n";
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
