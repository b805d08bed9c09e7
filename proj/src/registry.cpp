#include "hilb3/registry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hilb3 {

namespace {

GradedClass C(std::string_view s) { return parse_class(s); }

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> r;
    auto add = [&](std::string id, std::string_view cls, std::string note) {
        r.push_back({std::move(id), C(cls), std::move(note)});
    };

    add("O1col", "F - H", "divisor of collinear triples");
    add("O1nonred", "4H - 2F", "divisor of non-reduced schemes");
    add("O2col", "-6A + 4B - 4C + 8D + 4E", "collinear schemes with a double point");
    add("O2nonred", "3A - 3B + 3C - 3D", "curvilinear schemes supported at one point");
    add("O3", "9U - 6V - 3W + 12X - 18Y - 3Z", "collinear schemes supported at one point");
    add("O4", "3alpha + 3delta + 3epsilon", "fat points (square of a maximal ideal)");

    add("S1", "3beta - 3gamma + 6delta + 3epsilon", "");
    add("S2", "-18alpha + 9beta", "");
    add("S3", "3alpha - 3beta + 3gamma - 3delta", "");
    add("S4", "-6alpha + 3beta", "");
    add("S5", "-2alpha + 2beta - 2delta", "");
    add("S6", "12alpha", "");
    add("S7", "-2alpha + 2beta - 2gamma + 4delta + 2epsilon", "");
    add("S8", "-6alpha + 7beta - gamma + 2delta + epsilon", "");
    add("S9", "-4alpha + 2beta - 2gamma + 4delta + 2epsilon", "");
    add("S10", "-2alpha + 2delta", "");
    add("S11", "2epsilon", "");
    add("S12", "alpha", "");
    add("S13", "beta - gamma + 2delta + epsilon", "");
    add("S14", "3beta", "");

    add("T1", "3W - 9X + 9Y", "");
    add("T2", "9U - 6V - 3W + 12X - 18Y - 3Z", "equal to O3");
    add("T3", "-12U + 12V + 18Y + 12Z", "");
    add("T4", "4U - 2V - 2W + 8X - 6Y", "");
    add("T5", "2U - 2W + 8X - 12Y + 2Z", "");
    add("T6", "2U - 2V", "");
    add("T7", "2U - 2Z", "");
    add("T8", "Y", "");
    add("T9", "U - W + 4X + Z", "");
    add("T10", "-U + V + Z", "");

    add("Ccurve1", "9psi", "");
    add("Ccurve2", "9phi - 9psi", "");
    add("Ccurve3", "-3phi + 6psi", "");
    add("Ccurve4", "-4phi + 8psi", "");
    add("Ccurve5", "-2phi + 4psi", "");
    add("Ccurve6", "2phi + 2psi", "");
    add("Ccurve7", "4phi - 2psi", "");
    add("Ccurve8", "-phi + 2psi", "");

    add("F1", "-2B + 2C", "");
    add("F2", "2C - 4D", "");
    add("F3", "A", "");
    add("F4", "B - C + 2D + E", "");
    add("F5", "-6A + 4B - 4C + 8D + 4E", "equal to O2col");
    return r;
}

std::vector<ConeFixture> build_cones() {
    auto list = [](std::initializer_list<std::string_view> xs) {
        std::vector<GradedClass> out;
        for (auto x : xs) out.push_back(C(x));
        return out;
    };
    std::vector<ConeFixture> c;
    c.push_back({"Eff2", 4,
                 list({"alpha", "epsilon", "-alpha + delta", "-alpha + beta - delta",
                       "alpha - beta + gamma - delta", "-2alpha + beta - gamma + 2delta + epsilon"}),
                 "effective surfaces"});
    c.push_back({"Nef2", 2, list({"B", "C", "D", "E", "A + B", "A + E"}), "nef codim-2 classes"});
    c.push_back({"Eff3", 3,
                 list({"Y", "-U + V + Z", "3U - 2V - W + 4X - 6Y - Z", "W - 3X + 3Y", "X - 3Y",
                       "U - V", "U - Z"}),
                 "effective threefolds"});
    c.push_back({"Nef3", 3, list({"U", "V", "W", "X", "Z", "V + Y", "X + Y", "2Y + Z"}),
                 "nef codim-3 classes"});
    c.push_back({"Pl2", 2,
                 list({"C", "C + 2E", "A + B + D", "2A + D + 2E", "2A + B + 4D + 7E",
                       "5A + 5B + C + 7D + 5E", "7A + 3B + 9D + 12E",
                       "35A + 30B + 6C + 52D + 50E", "40A + 25B + 3C + 58D + 69E",
                       "247A + 195B + 36C + 369D + 384E", "260A + 182B + 28C + 385D + 434E",
                       "1717A + 1309B + 231C + 2563D + 2739E",
                       "1751A + 1275B + 210C + 2605D + 2870E",
                       "11837A + 8900B + 1540C + 17656D + 19052E",
                       "11926A + 8811B + 1485C + 17766D + 19395E"}),
                 "listed pliant codim-2 classes"});
    c.push_back({"Pl3", 3,
                 list({"2Y + Z", "X + Y", "W", "W + 6X + 3Y", "2V + X + 7Y + 2Z",
                       "5V + 2X + 12Y + 10Z", "5U + 10V + W + 24X + 32Y + 10Z", "6U + W",
                       "6U + 7V + 10X + 15Y + 8Z", "8U + 30V + 35X + 85Y + 38Z",
                       "24U + 90V + 2W + 132X + 276Y + 105Z",
                       "69U + 390V + 2W + 447X + 1203Y + 501Z",
                       "96U + 230V + 10W + 368X + 643Y + 276Z",
                       "648U + 3250V + 35W + 4078X + 10093Y + 4028Z"}),
                 "listed pliant codim-3 classes"});
    c.push_back({"Pl4", 4,
                 list({"gamma", "gamma + epsilon", "alpha + delta + epsilon", "alpha + beta + delta",
                       "2alpha + beta + epsilon", "2alpha + beta + 4delta + 4epsilon",
                       "3alpha + 5beta + 2gamma + 4epsilon", "5alpha + 4beta + 4delta + 4epsilon",
                       "7alpha + 2beta + 2delta + 5epsilon",
                       "8alpha + 8beta + 2gamma + 12delta + 5epsilon"}),
                 "listed pliant codim-4 classes"});
    c.push_back({"EffKnown2", 2,
                 list({"A", "B", "C", "D", "E", "3A - 3B + 3C - 3D", "-6A + 4B - 4C + 8D + 4E"}),
                 "basis surfaces plus the two codim-2 orbit closures"});
    return c;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t sub = prev[j - 1] + (std::tolower(a[i - 1]) == std::tolower(b[j - 1]) ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    for (int k = 0; k <= kDim; ++k)
        for (const auto& b : basis(k)) ids.emplace_back(b.name);
    for (const auto& c : cone_fixtures()) ids.push_back(c.id);
    return ids;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> r = build_registry();
    return r;
}

const std::vector<ConeFixture>& cone_fixtures() {
    static const std::vector<ConeFixture> c = build_cones();
    return c;
}

const ConeFixture& cone_fixture(std::string_view id) {
    for (const auto& c : cone_fixtures())
        if (c.id == id) return c;
    std::vector<std::string> near;
    for (const auto& c : cone_fixtures())
        if (edit_distance(c.id, id) <= 2) near.push_back(c.id);
    throw LookupError("unknown cone '" + std::string(id) + "'", near);
}

GradedClass registry_lookup(std::string_view id) {
    for (const auto& e : registry())
        if (e.id == id) return e.value;
    if (auto b = find_basis_element(id)) return GradedClass::unit(b->codim, b->index);

    auto dot = id.find('.');
    if (dot != std::string_view::npos) {
        std::string_view cone = id.substr(0, dot), idx = id.substr(dot + 1);
        std::size_t n = 0;
        auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), n);
        if (ec == std::errc() && p == idx.data() + idx.size()) {
            for (const auto& c : cone_fixtures())
                if (c.id == cone && n >= 1 && n <= c.generators.size()) return c.generators[n - 1];
        }
    }

    std::vector<std::pair<std::size_t, std::string>> scored;
    for (auto& s : all_ids()) {
        std::size_t d = edit_distance(s, id);
        if (d <= 2) scored.emplace_back(d, s);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> near;
    for (std::size_t i = 0; i < scored.size() && i < 5; ++i) near.push_back(scored[i].second);
    std::string msg = "unknown class '" + std::string(id) + "'";
    if (!near.empty()) {
        msg += "; did you mean";
        for (std::size_t i = 0; i < near.size(); ++i) msg += (i ? ", " : " ") + near[i];
        msg += "?";
    }
    throw LookupError(msg, near);
}

}  // namespace hilb3
