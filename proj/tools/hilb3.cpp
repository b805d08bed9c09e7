// hilb3: tables, classes, cones, resolutions and verification reports for
// the Hilbert scheme of three points in the plane.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include "hilb3/cone.hpp"
#include "hilb3/exceptional.hpp"
#include "hilb3/io.hpp"
#include "hilb3/registry.hpp"
#include "hilb3/ring.hpp"
#include "hilb3/taut.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>

using namespace hilb3;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "md";
    std::string fixtures;
    std::string table_variant = "corrected";
    bool timing = false;
};

SchurTable load_table(const Options& o) {
    const auto variant = o.table_variant == "printed" ? SchurTable::Variant::Printed : SchurTable::Variant::Corrected;
    SchurTable t = SchurTable::builtin(variant);
    if (o.fixtures.empty()) return t;
    std::ifstream in(o.fixtures);
    if (!in) throw SpecError("cannot open fixture file " + o.fixtures);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SpecError("fixture file is not valid json: " + std::string(e.what()));
    }
    return schur_table_with_overrides(t, j);
}

Report merged(std::string suite, std::initializer_list<Report> parts) {
    Report r;
    r.suite = std::move(suite);
    for (const auto& p : parts) r.entries.insert(r.entries.end(), p.entries.begin(), p.entries.end());
    return r;
}

using SuiteFn = std::function<std::vector<Report>(const SchurTable&)>;

// Order here is the order of `verify all`.
const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"prop34", [](const SchurTable&) { return std::vector<Report>{verify_intersection_identities()}; }},
        {"pieri", [](const SchurTable& t) { return std::vector<Report>{verify_pieri_suite(t), verify_errata()}; }},
        {"lr", [](const SchurTable& t) { return std::vector<Report>{verify_lr_suite(t)}; }},
        {"appA", [](const SchurTable&) { return std::vector<Report>{verify_general_specialization()}; }},
        {"degrees", [](const SchurTable& t) { return std::vector<Report>{verify_degree_conjecture(t)}; }},
        {"ring", [](const SchurTable&) { return std::vector<Report>{verify_ring()}; }},
        {"orbits", [](const SchurTable&) { return std::vector<Report>{verify_orbit_identities()}; }},
        {"cones", [](const SchurTable&) { return std::vector<Report>{merged("cones", {verify_cone_duality(2), verify_cone_duality(3)})}; }},
        {"pliant",
         [](const SchurTable&) {
             return std::vector<Report>{merged("pliant", {verify_pliant_bound(), verify_pliant_in_nef()})};
         }},
        {"epsilon", [](const SchurTable&) { return std::vector<Report>{verify_epsilon()}; }},
        {"gaeta", [](const SchurTable&) { return std::vector<Report>{verify_gaeta()}; }},
    };
    return s;
}

std::vector<Report> timed(const SuiteFn& fn, const SchurTable& t) {
    auto t0 = std::chrono::steady_clock::now();
    auto reps = fn(t);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : reps) r.wall_ms = ms / static_cast<double>(reps.size());
    return reps;
}

int run_verify(const std::string& name, const Options& o) {
    const SchurTable table = load_table(o);
    std::vector<Report> out;
    if (name == "all") {
        // Suites are independent; collect in the fixed order above.
        std::vector<std::future<std::vector<Report>>> jobs;
        for (const auto& [id, fn] : suites())
            jobs.push_back(std::async(std::launch::async, [&fn = fn, &table] { return timed(fn, table); }));
        for (auto& j : jobs)
            for (auto& r : j.get()) out.push_back(std::move(r));
    } else {
        auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& s) { return s.first == name; });
        if (it == suites().end()) {
            std::string known;
            for (const auto& s : suites()) known += s.first + ", ";
            throw SpecError("unknown suite '" + name + "' (" + known + "all)");
        }
        out = timed(it->second, table);
    }
    std::cout << render_reports(out, parse_format(o.format), o.timing);
    for (const auto& r : out)
        if (!r.ok()) return kExitFail;
    return 0;
}

GradedClass class_arg(const std::string& s) {
    try {
        return registry_lookup(s);
    } catch (const LookupError&) {
        return parse_class(s);
    }
}

Cone named_cone(const std::string& name) {
    static const std::map<std::string, std::string> fixtures = {
        {"eff2", "Eff2"}, {"nef2", "Nef2"}, {"eff3", "Eff3"}, {"nef3", "Nef3"}};
    if (auto it = fixtures.find(name); it != fixtures.end()) {
        const auto& f = cone_fixture(it->second);
        return Cone(Codim(f.codim), f.generators);
    }
    if (name == "pliant2") return pliant_inner_bound(2);
    if (name == "pliant3") return pliant_fixture(3);
    if (name == "pliant4") return pliant_fixture(4);
    throw SpecError("unknown cone '" + name + "' (eff2, nef2, eff3, nef3, pliant2, pliant3, pliant4)");
}

std::string render_query(const ProductQueryResult& q, Format f) {
    if (q.is_determined()) return render_class(q.value(), f);
    std::string w;
    for (const auto& x : q.witness()) w += (w.empty() ? "" : " ") + x.str();
    switch (f) {
        case Format::Json: {
            Json wj = Json::array();
            for (const auto& x : q.witness()) wj.push_back(x.str());
            return Json{{"schema", kSchemaVersion}, {"status", "undetermined"}, {"reason", q.reason()}, {"witness", wj}}
                       .dump(2) +
                   "\n";
        }
        case Format::Markdown: return "undetermined: " + q.reason() + (w.empty() ? "" : "\nwitness: " + w) + "\n";
        case Format::Csv: return csv_row({"status", "reason", "witness"}) + csv_row({"undetermined", q.reason(), w});
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chow-ring calculator for the Hilbert scheme of three points in the plane"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options o;
    app.add_option("--format", o.format, "json, md or csv")
        ->check(CLI::IsMember({"json", "md", "markdown", "csv"}))
        ->capture_default_str();
    app.add_option("--fixtures", o.fixtures, "json file overriding Schur table rows");
    app.add_option("--schur-table", o.table_variant, "corrected or printed")
        ->check(CLI::IsMember({"corrected", "printed"}))
        ->capture_default_str();
    app.add_flag("--timing", o.timing, "include wall-clock times in reports");

    std::string table_name;
    auto* tables = app.add_subcommand("tables", "print a stored table");
    tables->add_option("name", table_name, "pairing1, pairing2, pairing3, schur, prop34")->required();

    std::string bundle;
    int index = 0;
    auto* chern = app.add_subcommand("chern", "Chern class of a tautological bundle");
    chern->add_option("--bundle", bundle, "O(d), exc:p/2^q+t or chern:r,c1,c2")->required();
    chern->add_option("--i", index, "degree 1..6")->required()->check(CLI::Range(1, 6));

    auto* segre_cmd = app.add_subcommand("segre", "Segre class of a tautological bundle");
    segre_cmd->add_option("--bundle", bundle, "O(d), exc:p/2^q+t or chern:r,c1,c2")->required();
    segre_cmd->add_option("--i", index, "degree 1..6")->required()->check(CLI::Range(1, 6));

    std::string lambda;
    std::optional<std::string> dval;
    auto* schur = app.add_subcommand("schur", "Schur class of O(d)^[3]");
    schur->add_option("--lambda", lambda, "partition, e.g. 2,1")->required();
    schur->add_option("--d", dval, "twist; omitted prints the family in d");

    std::string class_name;
    auto* cls = app.add_subcommand("class", "look up a named class");
    cls->add_option("name", class_name)->required();

    std::vector<std::string> factors;
    auto* product = app.add_subcommand("product", "product of classes, when the known ring data fixes it");
    product->add_option("factors", factors, "classes, e.g. H C")->required()->expected(2, 6);

    std::string cone_name;
    bool cone_verify = false;
    auto* cones = app.add_subcommand("cones", "generators of a cone");
    cones->add_option("name", cone_name, "eff2, nef2, eff3, nef3, pliant2, pliant3, pliant4")->required();
    cones->add_flag("--verify", cone_verify, "run the duality or pliant checks for this cone");

    long max_rank = 100;
    std::string lo = "0", hi = "1";
    auto* exc = app.add_subcommand("exceptional", "exceptional bundles");
    exc->require_subcommand(1);
    auto* exc_enum = exc->add_subcommand("enum", "exceptional slopes in an interval");
    exc_enum->add_option("--max-rank", max_rank, "ranks below this")->capture_default_str();
    exc_enum->add_option("--min", lo)->capture_default_str();
    exc_enum->add_option("--max", hi)->capture_default_str();

    std::string r = "1", c1 = "0", c2 = "0";
    auto* gaeta_cmd = app.add_subcommand("gaeta", "Gaeta-type resolution and 2-very-ampleness");
    gaeta_cmd->add_option("--r", r)->required();
    gaeta_cmd->add_option("--c1", c1)->required();
    gaeta_cmd->add_option("--c2", c2)->required();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "prop34, pieri, lr, appA, degrees, ring, orbits, cones, pliant, epsilon, gaeta, all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const Format fmt = parse_format(o.format);
        if (*tables) {
            std::cout << render_table(table_name, fmt, load_table(o));
        } else if (*chern) {
            std::cout << render_class(chern_general(index, parse_bundle_spec(bundle)), fmt);
        } else if (*segre_cmd) {
            std::cout << render_query(segre(index, parse_bundle_spec(bundle)), fmt);
        } else if (*schur) {
            const SchurTable t = load_table(o);
            ClassFamily f = schur_line(Partition::parse(lambda), t);
            if (dval)
                std::cout << render_class(f.eval(Rational::parse(*dval)), fmt);
            else
                std::cout << render_family(f, fmt);
        } else if (*cls) {
            std::cout << render_class(registry_lookup(class_name), fmt);
        } else if (*product) {
            std::vector<GradedClass> gs;
            for (const auto& s : factors) gs.push_back(class_arg(s));
            std::cout << render_query(PartialRing::standard().product(gs), fmt);
        } else if (*cones) {
            Cone c = named_cone(cone_name);
            if (!cone_verify) {
                std::cout << render_cone(cone_name, c, fmt);
            } else {
                std::vector<Report> reps;
                if (cone_name == "eff2" || cone_name == "nef2") reps.push_back(verify_cone_duality(2));
                else if (cone_name == "eff3" || cone_name == "nef3") reps.push_back(verify_cone_duality(3));
                else if (cone_name == "pliant2") reps.push_back(verify_pliant_bound());
                if (cone_name.rfind("pliant", 0) == 0) reps.push_back(verify_pliant_in_nef());
                std::cout << render_reports(reps, fmt, o.timing);
                for (const auto& rep : reps)
                    if (!rep.ok()) return kExitFail;
            }
        } else if (*exc_enum) {
            if (max_rank < 1) throw SpecError("--max-rank must be at least 1");
            std::cout << render_slopes(enumerate_slopes(max_rank, Rational::parse(lo), Rational::parse(hi)), fmt);
        } else if (*gaeta_cmd) {
            BundleData b(Rational::parse(r), Rational::parse(c1), Rational::parse(c2));
            try {
                auto g = gaeta(b);
                std::cout << render_gaeta(b, g, classify_2va(b), fmt);
            } catch (const NotGaetaGeneral& e) {
                std::cerr << "hilb3: " << e.what() << "\n";
                return kExitFail;
            }
        } else if (*verify) {
            return run_verify(suite, o);
        }
    } catch (const LookupError& e) {
        std::cerr << "hilb3: " << e.what() << "\n";  // the message carries the near matches
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hilb3: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "hilb3: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
