#include "hilb3/cone.hpp"
#include "hilb3/registry.hpp"

namespace hilb3 {

namespace {

std::string ray_list(const Cone& c) {
    std::string s;
    for (const auto& g : c.classes()) s += (s.empty() ? "" : ", ") + format_class(g);
    return "{" + s + "}";
}

// One direction of a duality statement: dual(from) should be `to`, with
// exactly `rays` extreme rays.
ReportEntry duality_entry(const std::string& id, const ConeFixture& from, const ConeFixture& to) {
    Cone src(from.codim, from.generators);
    Cone want(to.codim, to.generators);
    Cone got = dual_cone(src);
    std::vector<Vec> ext = extreme_rays(got);
    bool ok = same_cone(got, want) && same_ray_set(ext, extreme_rays(want)) &&
              ext.size() == want.rays().size();
    ReportEntry e;
    e.id = id;
    e.status = ok ? Status::Pass : Status::Fail;
    e.expected = ray_list(want) + " (" + std::to_string(want.rays().size()) + " rays)";
    e.actual = ray_list(got) + " (" + std::to_string(ext.size()) + " extreme rays from " +
               std::to_string(src.rays().size()) + " generators)";
    e.provenance = "derived";
    return e;
}

}  // namespace

Report verify_cone_duality(int k) {
    if (k != 2 && k != 3) throw std::invalid_argument("verify_cone_duality takes k = 2 or 3");
    Report rep;
    rep.suite = "cones";
    const std::string eff = "Eff" + std::to_string(k), nef = "Nef" + std::to_string(k);
    rep.add(duality_entry("dual(" + eff + ") = " + nef, cone_fixture(eff), cone_fixture(nef)));
    rep.add(duality_entry("dual(" + nef + ") = " + eff, cone_fixture(nef), cone_fixture(eff)));
    return rep;
}

}  // namespace hilb3
