#include "hilb3/exceptional.hpp"

#include <algorithm>
#include <set>

namespace hilb3 {

namespace {

std::string slope_list(const std::vector<ExcSlope>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + e.slope.str();
    return "{" + s + "}";
}

std::string slope_list(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& r : v) s += (s.empty() ? "" : ", ") + r.str();
    return "{" + s + "}";
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Fractional parts of the exceptional bundles of rank below 100 with slope in [0,1].
const std::vector<Rational>& named_fractional_slopes() {
    static const std::vector<Rational> v = {
        Rational(1, 2),   Rational(2, 5),   Rational(3, 5),   Rational(5, 13),
        Rational(8, 13),  Rational(12, 29), Rational(17, 29), Rational(13, 34),
        Rational(21, 34), Rational(34, 89), Rational(55, 89)};
    return v;
}

std::string verdict_str(const AmpleVerdict& v) { return to_string(v.tag) + " (" + v.reason + ")"; }

}  // namespace

Report verify_epsilon() {
    Report rep;
    rep.suite = "epsilon";

    struct Case {
        const char* x;
        Rational slope;
        long rank;
    };
    for (const Case& c : {Case{"3", 3, 1}, Case{"1/4", Rational(2, 5), 5}, Case{"3/4", Rational(3, 5), 5},
                          Case{"1/8", Rational(5, 13), 13}, Case{"-1/2", Rational(-1, 2), 2}}) {
        ExcSlope e = epsilon(DyadicRational::parse(c.x));
        Rational d = (Rational(1) - Rational(1) / Rational(c.rank * c.rank)) / 2;
        rep.add(std::string("epsilon(") + c.x + ")", e.slope == c.slope && e.rank == c.rank && e.delta == d,
                c.slope.str() + " rank " + std::to_string(c.rank) + " delta " + d.str(),
                e.slope.str() + " rank " + std::to_string(e.rank) + " delta " + e.delta.str(), "derived");
    }

    struct DotCase {
        const char* a;
        const char* b;
        Rational want;
    };
    for (const DotCase& c : {DotCase{"0", "1", Rational(1, 2)}, DotCase{"0", "1/2", Rational(2, 5)},
                             DotCase{"1/2", "1", Rational(3, 5)}}) {
        Rational got = dot(epsilon(DyadicRational::parse(c.a)), epsilon(DyadicRational::parse(c.b)));
        rep.add(std::string("dot(") + c.a + ", " + c.b + ")", got == c.want, c.want.str(), got.str(), "derived");
    }

    const auto unit = enumerate_slopes(100, 0, 1);
    {
        std::vector<Rational> want = {0, 1};
        for (const auto& r : named_fractional_slopes()) want.push_back(r);
        want = sorted(want);
        std::vector<Rational> got;
        for (const auto& e : unit) got.push_back(e.slope);
        rep.add("enumerate(100, [0,1])", got == want, slope_list(want), slope_list(got), "cross-check");

        std::set<long> dens, want_dens = {1, 2, 5, 13, 29, 34, 89};
        for (const auto& e : unit) dens.insert(e.rank);
        std::string ds;
        for (long d : dens) ds += (ds.empty() ? "" : ", ") + std::to_string(d);
        rep.add("enumerate(100, [0,1]) ranks", dens == want_dens, "{1, 2, 5, 13, 29, 34, 89}", "{" + ds + "}",
                "derived");
    }
    {
        auto got = enumerate_slopes(2, 0, 1);
        rep.add("enumerate(2, [0,1])", got.size() == 2 && got[0].slope == 0 && got[1].slope == 1, "{0, 1}",
                slope_list(got), "derived");
    }
    {
        // Twisting by O(2) shifts the slope by 2 and keeps rank and discriminant.
        auto got = enumerate_slopes(100, 2, 3);
        std::vector<Rational> want;
        for (const auto& e : unit) want.push_back(e.slope + 2);
        bool ok = got.size() == unit.size();
        for (std::size_t i = 0; ok && i < got.size(); ++i)
            ok = got[i].slope == want[i] && got[i].rank == unit[i].rank && got[i].delta == unit[i].delta;
        rep.add("enumerate(100, [2,3]) = shift of [0,1]", ok, slope_list(want), slope_list(got), "derived");
    }

    // Order isomorphism: ascending slopes come from ascending preimages.
    {
        auto wide = enumerate_slopes(300, -2, 2);
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i + 1 < wide.size(); ++i)
            if (!(wide[i].preimage < wide[i + 1].preimage) || !(wide[i].slope < wide[i + 1].slope)) {
                ok = false;
                bad = wide[i].preimage.str() + " vs " + wide[i + 1].preimage.str();
                break;
            }
        rep.add("order-preserving on [-2,2], rank < 300", ok, "strictly increasing",
                ok ? std::to_string(wide.size()) + " slopes increasing" : bad, "derived");

        bool dok = true, mok = true, rok = true;
        for (const auto& e : wide) {
            Rational want = (Rational(1) - Rational(1) / Rational(e.rank * e.rank)) / 2;
            if (e.delta != want) dok = false;
            if (e.slope.denominator() != e.rank) rok = false;
            ExcSlope u = epsilon_uncached(e.preimage);
            if (u.slope != e.slope || u.rank != e.rank || u.delta != e.delta) mok = false;
        }
        rep.add("delta = (1 - 1/r^2)/2", dok, "all", dok ? "all" : "mismatch", "derived");
        rep.add("rank = denominator of slope", rok, "all", rok ? "all" : "mismatch", "derived");
        rep.add("memoized = uncached", mok, "all", mok ? "all" : "mismatch", "derived");
    }

    struct VaCase {
        Rational slope;
        long n;
        bool want;
    };
    for (const VaCase& c : {VaCase{Rational(5, 2), 2, true}, VaCase{Rational(3, 2), 2, false},
                            VaCase{Rational(13, 5), 2, true}}) {
        ExcSlope e;
        e.slope = c.slope;
        e.rank = c.slope.denominator().get_si();
        bool got = n_very_ample_exceptional(e, c.n);
        rep.add("very ample(" + c.slope.str() + ", n=" + std::to_string(c.n) + ")", got == c.want,
                c.want ? "true" : "false", got ? "true" : "false", "derived");
    }
    return rep;
}

Report verify_gaeta() {
    Report rep;
    rep.suite = "gaeta";
    using F = GaetaResolution::Form;
    using T = AmpleVerdict::Tag;

    struct Case {
        BundleData b;
        GaetaResolution want;
    };
    for (const Case& c : {Case{BundleData(2, 5, 7), {F::FirstForm, 0, 0, 1, 3}},
                          Case{BundleData(1, 3, 0), {F::FirstForm, 1, 0, 0, 1}},
                          Case{BundleData(3, 2, 2), {F::SecondForm, -1, 1, 3, 1}}}) {
        std::string got;
        bool ok = false;
        try {
            auto g = gaeta(c.b);
            got = g.str();
            ok = g == c.want && gaeta_bundle(g) == c.b;
        } catch (const NotGaetaGeneral& e) {
            got = e.what();
        }
        rep.add("gaeta" + c.b.str(), ok, c.want.str(), got, "fixture");
    }

    struct VCase {
        BundleData b;
        T want;
    };
    for (const VCase& c : {VCase{BundleData(1, 3, 0), T::Yes}, VCase{BundleData(2, 5, 7), T::Yes},
                           VCase{BundleData(1, -3, 0), T::No}, VCase{BundleData(2, 3, 3), T::Unknown}}) {
        AmpleVerdict v = classify_2va(c.b);
        rep.add("classify_2va" + c.b.str(), v.tag == c.want, to_string(c.want), verdict_str(v), "fixture");
    }

    struct PCase {
        Rational sub;
        std::vector<long> mid;
        T want;
        const char* id;
    };
    for (const PCase& c : {PCase{1, {2, 2, 2}, T::Yes, "kernel slope 1, middle O(2)^3"},
                           PCase{1, {1, 1, 1}, T::Unknown, "kernel slope 1, middle O(1)^3"},
                           PCase{-2, {3, 3, 3, 3, 3}, T::Yes, "kernel slope -2, middle O(3)^5"}}) {
        AmpleVerdict v = check_sequence_criterion(c.sub, c.mid, 2);
        rep.add(std::string("sequence criterion: ") + c.id, v.tag == c.want, to_string(c.want), verdict_str(v),
                "derived");
    }

    // Bookkeeping and the classifier on the exceptional bundles used for the pliant bound.
    for (const auto& e : enumerate_slopes(100, 2, 3)) {
        BundleData b = e.bundle();
        ReportEntry r;
        r.id = "bookkeeping E(" + e.slope.str() + ")";
        r.provenance = "derived";
        r.expected = "resolution with matching rank, c1, ch2; verdict not No";
        try {
            auto g = gaeta(b);
            auto v = classify_2va(b);
            bool ok = gaeta_bundle(g) == b && v.tag != T::No;
            r.status = ok ? Status::Pass : Status::Fail;
            r.actual = g.str() + "; " + to_string(v.tag);
        } catch (const NotGaetaGeneral& ex) {
            r.status = Status::Fail;
            r.actual = ex.what();
        }
        rep.add(std::move(r));
    }
    return rep;
}

}  // namespace hilb3
