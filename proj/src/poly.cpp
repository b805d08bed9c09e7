#include "hilb3/poly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace hilb3 {

namespace {

const Rational kZero;

// Appends "+ c*x" style text for one term; shared by both polynomial printers.
void append_term(std::string& out, const Rational& coef, const std::string& mono) {
    bool neg = coef.sign() < 0;
    Rational mag = coef.abs();
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        out += mag.str();
    } else if (mag == Rational(1)) {
        out += mono;
    } else {
        out += mag.str() + "*" + mono;
    }
}

class PolyLexer {
public:
    explicit PolyLexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        std::size_t j = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return std::string(s_.substr(j, i_ - j));
    }
    std::string ident() {
        skip_ws();
        std::size_t j = i_;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
            ++i_;
        return std::string(s_.substr(j, i_ - j));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i_) +
                                    ": " + what + " in '" + std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

UniPoly::UniPoly(Vec coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) {
    return UniPoly(Vec{c}, std::move(var));
}

UniPoly UniPoly::variable(std::string var) {
    return UniPoly(Vec{Rational(0), Rational(1)}, std::move(var));
}

UniPoly UniPoly::parse(std::string_view text, std::string var) {
    PolyLexer lx(text);
    if (lx.done()) lx.fail("empty input");
    UniPoly out(Vec{}, var);
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('+')) {
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;

        Rational coef(sign);
        bool have_coef = false;
        std::string num = lx.digits();
        if (!num.empty()) {
            mpz_class n(num), d(1);
            if (lx.accept('/')) {
                std::string den = lx.digits();
                if (den.empty()) lx.fail("missing denominator");
                d = mpz_class(den);
            }
            coef *= Rational(n, d);
            have_coef = true;
            lx.accept('*');
        }
        unsigned exp = 0;
        if (std::isalpha(static_cast<unsigned char>(lx.peek()))) {
            std::string name = lx.ident();
            if (name != var) lx.fail("unknown variable '" + name + "'");
            exp = 1;
            if (lx.accept('^')) {
                std::string e = lx.digits();
                if (e.empty()) lx.fail("missing exponent");
                exp = static_cast<unsigned>(std::stoul(e));
            }
        } else if (!have_coef) {
            lx.fail("expected a term");
        }
        Vec c(exp + 1);
        c[exp] = coef;
        out += UniPoly(c, var);
    }
    return out;
}

const Rational& UniPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc(Vec{}, inner.var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it, inner.var_);
    }
    return acc;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var_ : var_ + "^" + std::to_string(k));
        append_term(out, c_[k], mono);
    }
    return out;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::unify_var(const UniPoly& o) {
    if (var_ == o.var_) return;
    if (o.is_constant()) return;
    if (is_constant()) {
        var_ = o.var_;
        return;
    }
    throw std::invalid_argument("polynomials in different variables: " + var_ + ", " + o.var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    unify_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    unify_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    unify_var(o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    Vec r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly binomial(const UniPoly& x, unsigned k) {
    UniPoly r = UniPoly::constant(1, x.var());
    for (unsigned i = 0; i < k; ++i) r = r * (x - Rational(i)) * Rational(1, i + 1);
    return r;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) t_[Monomial{}] = c;
}

MultiPoly MultiPoly::var(const std::string& name) {
    MultiPoly p;
    p.t_[Monomial{{name, 1u}}] = Rational(1);
    return p;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [m, c] : t_) {
        int deg = 0;
        for (const auto& [v, e] : m) deg += static_cast<int>(e);
        best = std::max(best, deg);
    }
    return best;
}

bool MultiPoly::is_homogeneous(const std::map<std::string, int>& weights, int degree) const {
    for (const auto& [m, c] : t_) {
        int deg = 0;
        for (const auto& [v, e] : m) {
            auto it = weights.find(v);
            if (it == weights.end()) return false;
            deg += it->second * static_cast<int>(e);
        }
        if (deg != degree) return false;
    }
    return true;
}

std::vector<std::string> MultiPoly::variables() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    // Highest total degree first, then reverse lexicographic on the monomial map.
    std::vector<std::pair<Monomial, Rational>> items(t_.begin(), t_.end());
    auto deg = [](const Monomial& m) {
        int d = 0;
        for (const auto& [v, e] : m) d += static_cast<int>(e);
        return d;
    };
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        int da = deg(a.first), db = deg(b.first);
        if (da != db) return da > db;
        return b.first < a.first;
    });
    std::string out;
    for (const auto& [m, c] : items) {
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        append_term(out, c, mono);
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, inserted] = t_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly r;
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            MultiPoly term;
            term.t_[m] = ca * cb;
            r += term;
        }
    }
    t_ = std::move(r.t_);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MultiPoly pow(const MultiPoly& x, unsigned e) {
    MultiPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

MultiPoly binomial(const MultiPoly& x, unsigned k) {
    MultiPoly r(1);
    for (unsigned i = 0; i < k; ++i) r = r * (x - MultiPoly(Rational(i))) * MultiPoly(Rational(1, i + 1));
    return r;
}

}  // namespace hilb3
