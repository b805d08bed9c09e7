#include "hilb3/cone.hpp"
#include "hilb3/exceptional.hpp"
#include "hilb3/registry.hpp"
#include "hilb3/ring.hpp"
#include "hilb3/taut.hpp"

#include <algorithm>

namespace hilb3 {

std::vector<std::pair<std::string, GradedClass>> pliant_generators() {
    std::vector<std::pair<std::string, GradedClass>> out;
    // As d grows, c2 and c_{1,1} of O(d)^[3] approach these rays.
    out.emplace_back("lim c2(O(d))", leading_ray(chern_line(2)));
    out.emplace_back("lim c11(O(d))", leading_ray(schur_line(Partition{1, 1})));
    for (const auto& e : enumerate_slopes(100, 2, 3)) {
        BundleData b = e.bundle();
        GradedClass c2 = chern_general(2, b);
        GradedClass c11 = square_divisor_class(chern_general(1, b)) - c2;
        const std::string tag = "E(" + e.slope.str() + ")";
        out.emplace_back("c2(" + tag + ")", c2);
        out.emplace_back("c11(" + tag + ")", c11);
    }
    return out;
}

Cone pliant_inner_bound(int k) {
    if (k != 2) throw std::invalid_argument("pliant_inner_bound is computed in codim 2 only");
    std::vector<GradedClass> gs;
    for (const auto& [label, g] : pliant_generators()) gs.push_back(g);
    return Cone(Codim(2), gs);
}

Cone pliant_fixture(int k) {
    if (k < 2 || k > 4) throw std::invalid_argument("pliant fixtures exist for codim 2, 3, 4");
    const auto& f = cone_fixture("Pl" + std::to_string(k));
    return Cone(Codim(f.codim), f.generators);
}

namespace {

bool same_ray(const GradedClass& a, const GradedClass& b) {
    return !a.is_zero() && primitive_ray(a.coords()) == primitive_ray(b.coords());
}

// Listed generators that are positive combinations of the others.
ReportEntry extremality_entry(const std::string& id) {
    const auto& f = cone_fixture(id);
    Cone c(Codim(f.codim), f.generators);
    auto ext = extreme_rays(c);
    std::string non;
    for (const auto& g : f.generators)
        if (std::find(ext.begin(), ext.end(), primitive_ray(g.coords())) == ext.end())
            non += (non.empty() ? "" : ", ") + format_class(g);
    ReportEntry e;
    e.id = id + " extremal reduction";
    e.status = Status::Pass;  // informational
    e.expected = "listed classes span the cone";
    e.actual = std::to_string(ext.size()) + " of " + std::to_string(f.generators.size()) + " extremal" +
               (non.empty() ? std::string() : "; non-extremal: " + non);
    e.provenance = "derived";
    return e;
}

}  // namespace

Report verify_pliant_bound() {
    Report rep;
    rep.suite = "pliant";
    const auto gens = pliant_generators();
    const auto& listed = cone_fixture("Pl2").generators;

    for (const auto& want : listed) {
        auto hit = std::find_if(gens.begin(), gens.end(), [&](const auto& g) { return same_ray(g.second, want); });
        rep.add("Pl2 " + format_class(want), hit != gens.end(), "positive multiple of a computed class",
                hit == gens.end() ? "not found" : hit->first + " = " + format_class(hit->second), "cross-check");
    }

    const GradedClass c = parse_class("C"), c2e = parse_class("C + 2E");
    rep.add("limit rays", same_ray(gens[0].second, c) && same_ray(gens[1].second, c2e), "C, C + 2E",
            format_class(gens[0].second) + ", " + format_class(gens[1].second), "derived");

    Cone computed = pliant_inner_bound(2), fixture = pliant_fixture(2);
    bool inside = std::all_of(fixture.rays().begin(), fixture.rays().end(),
                              [&](const Vec& r) { return nonnegative_solution(computed.rays(), r).has_value(); });
    rep.add("cone(Pl2) inside computed hull", inside, "true", inside ? "true" : "false", "derived");

    std::string outside;
    for (const auto& [label, g] : gens)
        if (!nonnegative_solution(fixture.rays(), primitive_ray(g.coords())))
            outside += (outside.empty() ? "" : ", ") + label + " = " + format_class(g);
    ReportEntry hull;
    hull.id = "computed hull vs cone(Pl2)";
    hull.status = Status::Pass;  // informational
    hull.expected = "computed classes outside the listed cone, if any";
    hull.actual = (outside.empty() ? std::string("none") : outside) + "; hull has " +
                  std::to_string(extreme_rays(computed).size()) + " extreme rays";
    hull.provenance = "derived";
    rep.add(std::move(hull));

    const GradedClass w = parse_class("6U + W");
    const auto& pl3 = cone_fixture("Pl3").generators;
    bool has = std::any_of(pl3.begin(), pl3.end(), [&](const GradedClass& g) { return g == w; });
    rep.add("Pl3 contains 6U + W", has, "true", has ? "true" : "false", "fixture");

    for (const char* id : {"Pl2", "Pl3", "Pl4"}) rep.add(extremality_entry(id));
    return rep;
}

Report verify_pliant_in_nef() {
    Report rep;
    rep.suite = "pliant";
    struct Job {
        const char* pl;
        const char* eff;
    };
    for (const Job& j : {Job{"Pl2", "Eff2"}, Job{"Pl3", "Eff3"}, Job{"Pl4", "EffKnown2"}}) {
        const auto& effs = cone_fixture(j.eff).generators;
        for (const auto& g : cone_fixture(j.pl).generators) {
            bool ok = true;
            std::string vals;
            for (const auto& e : effs) {
                Rational p = pair(g, e);
                if (p.sign() < 0) ok = false;
                vals += (vals.empty() ? "" : ", ") + p.str();
            }
            rep.add(std::string(j.pl) + " " + format_class(g) + " vs " + j.eff, ok, "all pairings >= 0",
                    "(" + vals + ")", "derived");
        }
    }
    return rep;
}

}  // namespace hilb3
