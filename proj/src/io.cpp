#include "hilb3/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace hilb3 {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

Rational parse_integer(std::string_view s, const char* what) {
    Rational r;
    try {
        r = Rational::parse(trim(s));
    } catch (const std::exception&) {
        throw SpecError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    }
    if (!r.is_integer()) throw SpecError(std::string(what) + " must be an integer");
    return r;
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string md_row(const std::vector<std::string>& cells) {
    std::string s = "|";
    for (const auto& c : cells) s += " " + md_cell(c) + " |";
    return s + "\n";
}

std::string md_rule(std::size_t n) {
    std::string s = "|";
    for (std::size_t i = 0; i < n; ++i) s += "---|";
    return s + "\n";
}

std::vector<std::string> basis_names(Codim k) {
    std::vector<std::string> out;
    for (const auto& b : basis(k)) out.emplace_back(b.name);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json counts_json(const Report& r) {
    return Json{{"pass", r.count(Status::Pass)},
                {"fail", r.count(Status::Fail)},
                {"undetermined", r.count(Status::Undetermined)}};
}

std::string ms_str(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "md" || s == "markdown") return Format::Markdown;
    if (s == "csv") return Format::Csv;
    throw SpecError("unknown format '" + std::string(s) + "' (json, md, csv)");
}

BundleData parse_bundle_spec(std::string_view spec) {
    const std::string s = trim(spec);
    if (s.size() >= 3 && s.rfind("O(", 0) == 0 && s.back() == ')')
        return BundleData::line(parse_integer(std::string_view(s).substr(2, s.size() - 3), "twist"));

    if (s.rfind("exc:", 0) == 0) {
        std::string body = s.substr(4);
        long twist = 0;
        // The twist is a signed suffix after the dyadic part; a leading sign
        // belongs to the dyadic itself.
        std::size_t cut = body.find_first_of("+-", 1);
        if (cut != std::string::npos) {
            twist = parse_integer(std::string_view(body).substr(cut), "twist").numerator().get_si();
            body.resize(cut);
        }
        DyadicRational x;
        try {
            x = DyadicRational::parse(trim(body));
        } catch (const std::exception& e) {
            throw SpecError("bad dyadic '" + body + "': " + e.what());
        }
        return epsilon(x).bundle(twist);
    }

    if (s.rfind("chern:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(s.substr(6));
        for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
        if (parts.size() != 3) throw SpecError("chern spec needs r,c1,c2");
        Rational r = parse_integer(parts[0], "rank");
        if (r.sign() <= 0) throw SpecError("rank must be positive");
        Rational c2;
        try {
            c2 = Rational::parse(trim(parts[2]));
        } catch (const std::exception&) {
            throw SpecError("bad c2: '" + parts[2] + "'");
        }
        return BundleData(r, parse_integer(parts[1], "c1"), c2);
    }
    throw SpecError("unrecognised bundle spec '" + s + "' (O(d), exc:p/2^q+t, chern:r,c1,c2)");
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
    return s + "\r\n";
}

Json class_to_json(const GradedClass& x) {
    Json coords = Json::object();
    const auto& b = basis(x.codim());
    for (std::size_t i = 0; i < b.size(); ++i) coords[std::string(b[i].name)] = x[i].str();
    return Json{{"codim", x.codim().value()}, {"coords", coords}, {"text", format_class(x)}};
}

GradedClass class_from_json(const Json& j) {
    Codim k(j.at("codim").get<int>());
    Vec v(k.basis_size());
    for (const auto& [name, val] : j.at("coords").items()) {
        auto e = find_basis_element(name);
        if (!e || e->codim != k.value()) throw SpecError("basis name '" + name + "' not in codim " +
                                                         std::to_string(k.value()));
        v[e->index] = Rational::parse(val.get<std::string>());
    }
    return GradedClass(k, std::move(v));
}

std::string render_class(const GradedClass& x, Format f) {
    switch (f) {
        case Format::Json: {
            Json j{{"schema", kSchemaVersion}};
            j.update(class_to_json(x));
            return dump(j);
        }
        case Format::Markdown: return format_class(x) + "\n";
        case Format::Csv: {
            std::vector<std::string> vals;
            for (const auto& c : x.coords()) vals.push_back(c.str());
            return csv_row(basis_names(x.codim())) + csv_row(vals);
        }
    }
    return {};
}

std::string render_family(const ClassFamily& x, Format f) {
    switch (f) {
        case Format::Json: {
            Json coords = Json::object();
            const auto& b = basis(x.codim());
            for (std::size_t i = 0; i < b.size(); ++i) coords[std::string(b[i].name)] = x[i].str();
            return dump(Json{{"schema", kSchemaVersion}, {"codim", x.codim().value()}, {"variable", "d"},
                             {"coords", coords}, {"text", format_family(x)}});
        }
        case Format::Markdown: return format_family(x) + "\n";
        case Format::Csv: {
            std::vector<std::string> vals;
            for (const auto& c : x.coords()) vals.push_back(c.str());
            return csv_row(basis_names(x.codim())) + csv_row(vals);
        }
    }
    return {};
}

std::string render_reports(const std::vector<Report>& reports, Format f, bool timing) {
    Report total;
    for (const auto& r : reports) total.entries.insert(total.entries.end(), r.entries.begin(), r.entries.end());

    switch (f) {
        case Format::Json: {
            Json suites = Json::array();
            for (const auto& r : reports) {
                Json entries = Json::array();
                for (const auto& e : r.entries)
                    entries.push_back(Json{{"id", e.id},
                                           {"status", to_string(e.status)},
                                           {"expected", e.expected},
                                           {"actual", e.actual},
                                           {"provenance", e.provenance}});
                Json s{{"suite", r.suite}, {"counts", counts_json(r)}, {"entries", entries}};
                if (timing && r.wall_ms) s["wall_ms"] = *r.wall_ms;
                suites.push_back(std::move(s));
            }
            return dump(Json{{"schema", kSchemaVersion},
                             {"ok", total.ok()},
                             {"counts", counts_json(total)},
                             {"suites", suites}});
        }
        case Format::Markdown: {
            std::string out;
            for (const auto& r : reports) {
                out += "## " + r.suite + "\n\n";
                out += md_row({"check", "status", "expected", "actual", "provenance"}) + md_rule(5);
                for (const auto& e : r.entries)
                    out += md_row({e.id, to_string(e.status), e.expected, e.actual, e.provenance});
                out += "\n" + std::to_string(r.count(Status::Pass)) + " pass, " +
                       std::to_string(r.count(Status::Fail)) + " fail, " +
                       std::to_string(r.count(Status::Undetermined)) + " undetermined";
                if (timing && r.wall_ms) out += " (" + ms_str(*r.wall_ms) + " ms)";
                out += "\n\n";
            }
            out += "total: " + std::to_string(total.count(Status::Pass)) + " pass, " +
                   std::to_string(total.count(Status::Fail)) + " fail, " +
                   std::to_string(total.count(Status::Undetermined)) + " undetermined\n";
            return out;
        }
        case Format::Csv: {
            std::vector<std::string> head{"suite", "id", "status", "expected", "actual", "provenance"};
            if (timing) head.push_back("wall_ms");
            std::string out = csv_row(head);
            for (const auto& r : reports)
                for (const auto& e : r.entries) {
                    std::vector<std::string> row{r.suite, e.id, to_string(e.status), e.expected, e.actual,
                                                 e.provenance};
                    if (timing) row.push_back(r.wall_ms ? ms_str(*r.wall_ms) : "");
                    out += csv_row(row);
                }
            return out;
        }
    }
    return {};
}

namespace {

std::string render_pairing(int k, Format f) {
    const ExactMatrix& p = pairing_matrix(Codim(k));
    auto rows = basis_names(Codim(k)), cols = basis_names(Codim(k).complement());
    switch (f) {
        case Format::Json: {
            Json j = Json::object();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Json r = Json::object();
                for (std::size_t c = 0; c < cols.size(); ++c) r[cols[c]] = p(i, c).str();
                j[rows[i]] = r;
            }
            return j.dump() + "\n";
        }
        case Format::Markdown: {
            std::vector<std::string> head{""};
            head.insert(head.end(), cols.begin(), cols.end());
            std::string out = md_row(head) + md_rule(head.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::vector<std::string> r{rows[i]};
                for (std::size_t c = 0; c < cols.size(); ++c) r.push_back(p(i, c).str());
                out += md_row(r);
            }
            return out;
        }
        case Format::Csv: {
            std::string out = csv_row(cols);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::vector<std::string> r;
                for (std::size_t c = 0; c < cols.size(); ++c) r.push_back(p(i, c).str());
                out += csv_row(r);
            }
            return out;
        }
    }
    return {};
}

std::string render_schur(const SchurTable& table, Format f) {
    switch (f) {
        case Format::Json: {
            Json rows = Json::object();
            for (const auto& p : table.partitions()) {
                const auto& fam = table.row(p);
                Json coords = Json::object();
                const auto& b = basis(fam.codim());
                for (std::size_t i = 0; i < b.size(); ++i) coords[std::string(b[i].name)] = fam[i].str();
                rows[p.str()] = coords;
            }
            return dump(Json{{"schema", kSchemaVersion}, {"variable", "d"}, {"schur", rows}});
        }
        case Format::Markdown: {
            std::string out = md_row({"partition", "codim", "class in O(d)"}) + md_rule(3);
            for (const auto& p : table.partitions()) {
                const auto& fam = table.row(p);
                out += md_row({p.str(), std::to_string(fam.codim().value()), format_family(fam)});
            }
            return out;
        }
        case Format::Csv: {
            std::string out = csv_row({"partition", "basis", "coefficient"});
            for (const auto& p : table.partitions()) {
                const auto& fam = table.row(p);
                const auto& b = basis(fam.codim());
                for (std::size_t i = 0; i < b.size(); ++i)
                    out += csv_row({p.str(), std::string(b[i].name), fam[i].str()});
            }
            return out;
        }
    }
    return {};
}

// c_i(O(d)^[3]) against the codim-(6-i) basis, i = 1, 2, 3.
std::string render_intersection_table(Format f) {
    struct Row {
        int i;
        std::string basis;
        UniPoly value;
    };
    std::vector<Row> rows;
    for (int i = 1; i <= 3; ++i) {
        ClassFamily c = chern_line(i);
        for (const auto& b : basis(Codim(kDim - i)))
            rows.push_back({i, std::string(b.name), pair(c, GradedClass::named(b.name))});
    }
    switch (f) {
        case Format::Json: {
            Json j = Json::object();
            for (const auto& r : rows) j["c" + std::to_string(r.i)][r.basis] = r.value.str();
            return dump(Json{{"schema", kSchemaVersion}, {"variable", "d"}, {"prop34", j}});
        }
        case Format::Markdown: {
            std::string out = md_row({"class", "against", "degree in d"}) + md_rule(3);
            for (const auto& r : rows) out += md_row({"c" + std::to_string(r.i), r.basis, r.value.str()});
            return out;
        }
        case Format::Csv: {
            std::string out = csv_row({"class", "against", "value"});
            for (const auto& r : rows) out += csv_row({"c" + std::to_string(r.i), r.basis, r.value.str()});
            return out;
        }
    }
    return {};
}

}  // namespace

std::string render_table(std::string_view which, Format f, const SchurTable& table) {
    if (which == "pairing1") return render_pairing(1, f);
    if (which == "pairing2") return render_pairing(2, f);
    if (which == "pairing3") return render_pairing(3, f);
    if (which == "schur") return render_schur(table, f);
    if (which == "prop34") return render_intersection_table(f);
    throw SpecError("unknown table '" + std::string(which) + "' (pairing1, pairing2, pairing3, schur, prop34)");
}

std::string render_cone(const std::string& name, const Cone& c, Format f) {
    auto classes = c.classes();
    switch (f) {
        case Format::Json: {
            Json rays = Json::array();
            for (const auto& g : classes) rays.push_back(class_to_json(g));
            return dump(Json{{"schema", kSchemaVersion},
                             {"cone", name},
                             {"codim", c.codim().value()},
                             {"rays", rays}});
        }
        case Format::Markdown: {
            std::string out = md_row({"#", name + " generator"}) + md_rule(2);
            for (std::size_t i = 0; i < classes.size(); ++i)
                out += md_row({std::to_string(i + 1), format_class(classes[i])});
            return out;
        }
        case Format::Csv: {
            std::string out = csv_row(basis_names(c.codim()));
            for (const auto& r : c.rays()) {
                std::vector<std::string> vals;
                for (const auto& x : r) vals.push_back(x.str());
                out += csv_row(vals);
            }
            return out;
        }
    }
    return {};
}

std::string render_slopes(const std::vector<ExcSlope>& v, Format f) {
    switch (f) {
        case Format::Json: {
            Json a = Json::array();
            for (const auto& e : v) {
                BundleData b = e.bundle();
                a.push_back(Json{{"slope", e.slope.str()},
                                 {"preimage", e.preimage.str()},
                                 {"rank", e.rank},
                                 {"delta", e.delta.str()},
                                 {"c1", b.c1().str()},
                                 {"c2", b.c2().str()}});
            }
            return dump(Json{{"schema", kSchemaVersion}, {"slopes", a}});
        }
        case Format::Markdown: {
            std::string out = md_row({"slope", "preimage", "rank", "delta", "c1", "c2"}) + md_rule(6);
            for (const auto& e : v) {
                BundleData b = e.bundle();
                out += md_row({e.slope.str(), e.preimage.str(), std::to_string(e.rank), e.delta.str(),
                               b.c1().str(), b.c2().str()});
            }
            return out;
        }
        case Format::Csv: {
            std::string out = csv_row({"slope", "preimage", "rank", "delta", "c1", "c2"});
            for (const auto& e : v) {
                BundleData b = e.bundle();
                out += csv_row({e.slope.str(), e.preimage.str(), std::to_string(e.rank), e.delta.str(),
                                b.c1().str(), b.c2().str()});
            }
            return out;
        }
    }
    return {};
}

std::string render_gaeta(const BundleData& b, const GaetaResolution& g, const AmpleVerdict& v, Format f) {
    switch (f) {
        case Format::Json:
            return dump(Json{{"schema", kSchemaVersion},
                             {"bundle", {{"r", b.r().str()}, {"c1", b.c1().str()}, {"c2", b.c2().str()}}},
                             {"form", to_string(g.form)},
                             {"d", g.d},
                             {"a", g.a},
                             {"b", g.b},
                             {"c", g.c},
                             {"resolution", g.str()},
                             {"two_very_ample", to_string(v.tag)},
                             {"reason", v.reason}});
        case Format::Markdown:
            return "bundle: " + b.str() + "\nresolution: " + g.str() + "\n2-very ample: " + to_string(v.tag) +
                   " (" + v.reason + ")\n";
        case Format::Csv:
            return csv_row({"r", "c1", "c2", "form", "d", "a", "b", "c", "two_very_ample"}) +
                   csv_row({b.r().str(), b.c1().str(), b.c2().str(), to_string(g.form), std::to_string(g.d),
                            std::to_string(g.a), std::to_string(g.b), std::to_string(g.c), to_string(v.tag)});
    }
    return {};
}

SchurTable schur_table_with_overrides(const SchurTable& base, const Json& fixtures) {
    if (fixtures.contains("schema") && fixtures.at("schema").get<int>() != kSchemaVersion)
        throw SpecError("fixture file has schema " + fixtures.at("schema").dump() + ", expected " +
                        std::to_string(kSchemaVersion));
    SchurTable t = base;
    if (!fixtures.contains("schur")) return t;
    for (const auto& [key, coords] : fixtures.at("schur").items()) {
        Partition p = Partition::parse(key);
        if (!t.has(p)) throw SpecError("fixture row " + key + " is not a table row");
        Codim k(p.weight());
        std::vector<UniPoly> polys(k.basis_size(), UniPoly(Vec{}, "d"));
        for (const auto& [name, val] : coords.items()) {
            auto e = find_basis_element(name);
            if (!e || e->codim != k.value()) throw SpecError("fixture row " + key + ": bad basis name " + name);
            polys[e->index] = UniPoly::parse(val.get<std::string>(), "d");
        }
        t = t.with_row(p, ClassFamily(k, std::move(polys)));
    }
    return t;
}

}  // namespace hilb3
