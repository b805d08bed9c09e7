#include "hilb3/chow.hpp"

#include <algorithm>
#include <cctype>

namespace hilb3 {

namespace {

const std::vector<std::vector<BasisElement>>& basis_table() {
    static const std::vector<std::vector<BasisElement>> t = [] {
        const std::vector<std::vector<std::pair<std::string_view, std::string_view>>> names{
            {{"1", "1"}},
            {{"H", "H"}, {"F", "F"}},
            {{"A", "A"}, {"B", "B"}, {"C", "C"}, {"D", "D"}, {"E", "E"}},
            {{"U", "U"}, {"V", "V"}, {"W", "W"}, {"X", "X"}, {"Y", "Y"}, {"Z", "Z"}},
            {{"alpha", "α"}, {"beta", "β"}, {"gamma", "γ"}, {"delta", "δ"}, {"epsilon", "ε"}},
            {{"phi", "φ"}, {"psi", "ψ"}},
            {{"pt", "pt"}},
        };
        std::vector<std::vector<BasisElement>> out(names.size());
        for (std::size_t k = 0; k < names.size(); ++k)
            for (std::size_t i = 0; i < names[k].size(); ++i)
                out[k].push_back({static_cast<int>(k), i, names[k][i].first, names[k][i].second});
        return out;
    }();
    return t;
}

const std::vector<ExactMatrix>& pairing_tables() {
    static const std::vector<ExactMatrix> t = [] {
        ExactMatrix t1{{1, 1}, {2, 1}};
        ExactMatrix t2{{0, 0, 1, 0, 0},
                       {0, 1, 2, 1, 0},
                       {1, 2, 2, 1, 0},
                       {0, 1, 1, 0, 0},
                       {0, 0, 0, 0, 1}};
        ExactMatrix t3{{1, 1, 0, 0, 0, 1},
                       {1, 1, 0, 0, 0, 0},
                       {0, 0, 6, 3, 1, 0},
                       {0, 0, 3, 1, 0, 0},
                       {0, 0, 1, 0, 0, 0},
                       {1, 0, 0, 0, 0, 1}};
        ExactMatrix one{{1}};
        return std::vector<ExactMatrix>{one, t1, t2, t3, t2.transpose(), t1.transpose(), one};
    }();
    return t;
}

std::string coef_prefix(const Rational& mag) {
    if (mag == Rational(1)) return "";
    if (mag.is_integer()) return mag.str();
    return mag.str() + "*";
}

}  // namespace

Codim::Codim(int v) : v_(v) {
    if (v < 0 || v > kDim)
        throw DimensionError("codimension " + std::to_string(v) + " outside 0..6");
}

const std::vector<BasisElement>& basis(Codim k) {
    return basis_table()[static_cast<std::size_t>(k.value())];
}

std::optional<BasisElement> find_basis_element(std::string_view name) {
    for (const auto& row : basis_table())
        for (const auto& e : row)
            if (e.name == name || e.unicode == name) return e;
    return std::nullopt;
}

GradedClass::GradedClass(Codim k) : k_(k), x_(k.basis_size()) {}

GradedClass::GradedClass(Codim k, Vec coords) : k_(k), x_(std::move(coords)) {
    if (x_.size() != k_.basis_size())
        throw DimensionError("codim " + std::to_string(k_.value()) + " needs " +
                             std::to_string(k_.basis_size()) + " coordinates, got " +
                             std::to_string(x_.size()));
}

GradedClass GradedClass::unit(Codim k, std::size_t index) {
    GradedClass g(k);
    g.x_.at(index) = 1;
    return g;
}

GradedClass GradedClass::named(std::string_view basis_name) {
    auto e = find_basis_element(basis_name);
    if (!e) throw std::invalid_argument("unknown basis element '" + std::string(basis_name) + "'");
    return unit(e->codim, e->index);
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    if (o.k_ != k_) throw DimensionError("adding classes of different codimension");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += o.x_[i];
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    if (o.k_ != k_) throw DimensionError("subtracting classes of different codimension");
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= o.x_[i];
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& s) {
    for (auto& x : x_) x *= s;
    return *this;
}

const ExactMatrix& pairing_matrix(Codim k) {
    return pairing_tables()[static_cast<std::size_t>(k.value())];
}

Rational pair(const GradedClass& x, const GradedClass& y) {
    if (x.codim().value() + y.codim().value() != kDim)
        throw DimensionError("pairing needs complementary codimensions, got " +
                             std::to_string(x.codim().value()) + " and " +
                             std::to_string(y.codim().value()));
    return dot(x.coords(), pairing_matrix(x.codim()).apply(y.coords()));
}

GradedClass primitive(const GradedClass& x) {
    if (x.is_zero()) return x;
    mpz_class l = 1;
    for (const auto& c : x.coords()) l = lcm(l, c.denominator());
    std::vector<mpz_class> ints;
    for (const auto& c : x.coords()) ints.push_back((c * Rational(l)).numerator());
    mpz_class g = gcd_of(ints);
    return x * Rational(l, g);
}

// ---------------------------------------------------------------------------

ClassFamily::ClassFamily(Codim k, std::string var)
    : k_(k), p_(k.basis_size(), UniPoly(Vec{}, var)) {}

ClassFamily::ClassFamily(Codim k, std::vector<UniPoly> coords) : k_(k), p_(std::move(coords)) {
    if (p_.size() != k_.basis_size())
        throw DimensionError("family coordinate count does not match codimension");
}

ClassFamily ClassFamily::constant(const GradedClass& x, std::string var) {
    std::vector<UniPoly> p;
    for (const auto& c : x.coords()) p.push_back(UniPoly::constant(c, var));
    return ClassFamily(x.codim(), std::move(p));
}

bool ClassFamily::is_zero() const {
    return std::all_of(p_.begin(), p_.end(), [](const UniPoly& q) { return q.is_zero(); });
}

int ClassFamily::max_degree() const {
    int d = UniPoly::kZeroDegree;
    for (const auto& q : p_) d = std::max(d, q.degree());
    return d;
}

GradedClass ClassFamily::eval(const Rational& d) const {
    Vec x;
    for (const auto& q : p_) x.push_back(q.eval(d));
    return GradedClass(k_, std::move(x));
}

GradedClass ClassFamily::slice(std::size_t power) const {
    Vec x;
    for (const auto& q : p_) x.push_back(q.coeff(power));
    return GradedClass(k_, std::move(x));
}

ClassFamily& ClassFamily::operator+=(const ClassFamily& o) {
    if (o.k_ != k_) throw DimensionError("adding families of different codimension");
    for (std::size_t i = 0; i < p_.size(); ++i) p_[i] += o.p_[i];
    return *this;
}

ClassFamily& ClassFamily::operator-=(const ClassFamily& o) {
    if (o.k_ != k_) throw DimensionError("subtracting families of different codimension");
    for (std::size_t i = 0; i < p_.size(); ++i) p_[i] -= o.p_[i];
    return *this;
}

ClassFamily operator*(const UniPoly& s, const ClassFamily& a) {
    ClassFamily r = a;
    for (auto& q : r.p_) q = s * q;
    return r;
}

UniPoly pair(const ClassFamily& x, const ClassFamily& y) {
    if (x.codim().value() + y.codim().value() != kDim)
        throw DimensionError("pairing needs complementary codimensions");
    const ExactMatrix& m = pairing_matrix(x.codim());
    UniPoly acc;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) acc += m(i, j) * (x[i] * y[j]);
    return acc;
}

UniPoly pair(const ClassFamily& x, const GradedClass& y) {
    return pair(x, ClassFamily::constant(y, x.coords().front().var()));
}

GradedClass leading_ray(const ClassFamily& f) {
    if (f.is_zero()) throw std::invalid_argument("leading_ray of the zero family");
    return primitive(f.slice(static_cast<std::size_t>(f.max_degree())));
}

// ---------------------------------------------------------------------------

std::string format_class(const GradedClass& x, NameStyle style) {
    const auto& names = basis(x.codim());
    std::string out;
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        const Rational& c = x[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (x.codim().value() == 0) {
            out += c.abs().str();
            continue;
        }
        out += coef_prefix(c.abs());
        out += style == NameStyle::Ascii ? names[i].name : names[i].unicode;
    }
    return out.empty() ? "0" : out;
}

std::string format_family(const ClassFamily& f, NameStyle style) {
    const auto& names = basis(f.codim());
    std::string out;
    for (std::size_t i = 0; i < f.coords().size(); ++i) {
        const UniPoly& p = f[i];
        if (p.is_zero()) continue;
        std::string name(style == NameStyle::Ascii ? names[i].name : names[i].unicode);
        if (p.is_constant()) {
            GradedClass g = GradedClass::unit(f.codim(), i) * p.coeff(0);
            std::string t = format_class(g, style);
            if (out.empty()) {
                out = t;
            } else if (t.front() == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
            continue;
        }
        if (!out.empty()) out += " + ";
        out += "(" + p.str() + ")";
        if (f.codim().value() != 0) out += "*" + name;
    }
    return out.empty() ? "0" : out;
}

GradedClass parse_class(std::string_view text, std::optional<Codim> hint) {
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("cannot parse class '" + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) fail("empty input");

    std::optional<int> codim;
    std::vector<std::pair<Rational, std::optional<BasisElement>>> terms;
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        Rational coef(sign);
        bool have_coef = false;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) {
            std::size_t k = j;
            while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
            if (k < text.size() && text[k] == '/') {
                ++k;
                while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
                std::size_t m = k;
                while (m < text.size() && std::isdigit(static_cast<unsigned char>(text[m]))) ++m;
                if (m == k) fail("missing denominator");
                coef *= Rational::parse(text.substr(i, m - i));
                i = m;
            } else {
                coef *= Rational::parse(text.substr(i, j - i));
                i = j;
            }
            have_coef = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
        }

        std::optional<BasisElement> elem;
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t k = i;
            while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
            std::string_view word = text.substr(i, k - i);
            elem = find_basis_element(word);
            if (!elem) fail("unknown basis name '" + std::string(word) + "'");
            i = k;
        } else if (i < text.size() && static_cast<unsigned char>(text[i]) >= 0x80) {
            for (const auto& row : basis_table())
                for (const auto& e : row)
                    if (!elem && e.unicode != e.name && text.substr(i, e.unicode.size()) == e.unicode)
                        elem = e;
            if (!elem) fail("unknown symbol at offset " + std::to_string(i));
            i += elem->unicode.size();
        } else if (!have_coef) {
            fail("expected a coefficient or basis name");
        }

        int k = elem ? elem->codim : 0;
        if (elem && elem->codim == 0) fail("write codimension-0 terms as bare numbers");
        if (!elem && !coef.is_zero()) k = 0;
        if (elem || !coef.is_zero()) {
            if (codim && *codim != k) fail("mixes codimensions " + std::to_string(*codim) + " and " + std::to_string(k));
            codim = k;
        }
        terms.emplace_back(coef, elem);
    }

    if (!codim) {
        if (!hint) fail("zero class needs a codimension hint");
        codim = hint->value();
    }
    if (hint && hint->value() != *codim) fail("expected codimension " + std::to_string(hint->value()));
    GradedClass out{Codim(*codim)};
    for (const auto& [c, e] : terms) out += GradedClass::unit(*codim, e ? e->index : 0) * c;
    return out;
}

}  // namespace hilb3
