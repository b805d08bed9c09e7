#include "hilb3/taut.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace hilb3 {

namespace {

// Determinant by cofactor expansion along the first row; matrices here are at most 6x6.
MultiPoly det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    if (n == 1) return m[0][0];
    MultiPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * det(minor);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

MultiPoly generator(int m) {
    if (m == 0) return MultiPoly(1);
    if (m < 0 || m > 3) return MultiPoly();
    return MultiPoly::var("c" + std::to_string(m));
}

UniPoly P(std::string_view s) { return UniPoly::parse(s, "d"); }

ClassFamily fixture_row(int codim, std::initializer_list<std::string_view> coords) {
    std::vector<UniPoly> c;
    for (auto s : coords) c.push_back(P(s));
    return ClassFamily(codim, std::move(c));
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    if (s.empty()) throw std::invalid_argument("empty partition");
    std::vector<int> parts;
    bool has_sep = s.find(',') != std::string::npos || s.find('^') != std::string::npos;
    if (!has_sep) {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
            parts.push_back(c - '0');
        }
        return Partition(std::move(parts));
    }
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        std::string tok = s.substr(i, j == std::string::npos ? std::string::npos : j - i);
        auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            int part = std::stoi(tok.substr(0, caret), &used);
            if (used != tok.substr(0, caret).size()) throw std::invalid_argument("");
            int rep = 1;
            if (caret != std::string::npos) {
                std::string e = tok.substr(caret + 1);
                rep = std::stoi(e, &used);
                if (used != e.size() || rep < 1) throw std::invalid_argument("");
            }
            for (int k = 0; k < rep; ++k) parts.push_back(part);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    int w = 0;
    for (int x : p_) w += x;
    return w;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s;
}

std::string Partition::compact() const {
    std::string s;
    for (std::size_t i = 0; i < p_.size();) {
        std::size_t j = i;
        while (j < p_.size() && p_[j] == p_[i]) ++j;
        if (!s.empty()) s += ",";
        s += std::to_string(p_[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

SchurPoly schur_giambelli(const Partition& lambda) {
    const auto& l = lambda.parts();
    const std::size_t n = l.size();
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = generator(l[i] + static_cast<int>(j) - static_cast<int>(i));
    return det(m);
}

std::vector<Partition> pieri_successors(const Partition& lambda, int k) {
    const auto& l = lambda.parts();
    std::vector<Partition> out;
    std::vector<int> mu(l.size() + 1, 0);
    // Row i of the result lies between l[i] and l[i-1] (row 0 is capped at 3).
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == mu.size()) {
            if (left == 0) {
                std::vector<int> parts;
                for (int x : mu)
                    if (x > 0) parts.push_back(x);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        int lo = i < l.size() ? l[i] : 0;
        int hi = i == 0 ? 3 : l[i - 1];
        for (int v = std::min(hi, lo + left); v >= lo; --v) {
            mu[i] = v;
            rec(i + 1, left - (v - lo));
        }
    };
    if (l.empty() || l.front() <= 3) rec(0, k);
    return out;
}

std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

const std::vector<SchurTable::Erratum>& SchurTable::errata() {
    static const std::vector<Erratum> e{
        {Partition{3, 1}, 1, P("3/2*d^3 - 7/2*d^2 + 2"), P("3/2*d^3 - 7/2*d^2 + 2*d"),
         "c_{3,1} = c1*c3 - c4 must vanish at d = 0 because c3(O^[3]) = 0; the printed beta "
         "coefficient is 2 there. Its Pieri product with c2 misses by -2d(d-1)^2 and its LR "
         "product with c_{1,1} by -2(d-1)(d^2-d-1); the linear term 2d repairs all three."},
    };
    return e;
}

const SchurTable& SchurTable::builtin(Variant v) {
    static const SchurTable printed = [] {
        SchurTable t;
        auto add = [&](Partition p, ClassFamily f) {
            t.order_.push_back(std::move(p));
            t.rows_.push_back(std::move(f));
        };
        const UniPoly d = UniPoly::variable("d");
        add({1, 1}, ClassFamily(2, {P("2"), d - 2, binomial(d - 2, 2), P("3*d - 5"), P("d^2 - 2")}));
        add({2, 1}, fixture_row(3, {"d^3 - 5/2*d^2 - 1/2*d + 3", "d^2 - 2", "1/3*d^3 - 2*d^2 + 11/3*d - 2",
                            "4*d^2 - 11*d + 7", "8*d - 9", "3/2*d^2 - 3/2*d - 1"}));
        add({1, 1, 1}, fixture_row(3, {"d^3 - 4*d^2 + d + 6", "d^2 - 4", "1/6*d^3 - 3/2*d^2 + 13/3*d - 4",
                               "3*d^2 - 13*d + 14", "10*d - 18", "3*d^2 - 6*d + 1"}));
        add({3, 1}, fixture_row(4, {"2*d^2 - 3*d", "3/2*d^3 - 7/2*d^2 + 2", "1/2*d^4 - 2*d^3 + 5/2*d^2 - d",
                            "d^3 - 2*d^2 + d", "0"}));
        add({2, 2}, fixture_row(4, {"4*d^2 - 9*d + 5", "3/2*d^3 - 11/2*d^2 + 6*d - 2",
                            "1/2*d^4 - 3*d^3 + 11/2*d^2 - 3*d", "3*d^3 - 7*d^2 + 3*d + 1",
                            "1/2*d^4 - 3/2*d^2 + 1"}));
        add({2, 1, 1}, fixture_row(4, {"10*d^2 - 27*d + 16", "9/2*d^3 - 35/2*d^2 + 21*d - 7",
                               "d^4 - 13/2*d^3 + 27/2*d^2 - 9*d", "4*d^3 - 13*d^2 + 9*d + 2",
                               "1/2*d^4 - 3*d^2 + 3/2*d + 2"}));
        add({1, 1, 1, 1}, fixture_row(4, {"10*d^2 - 36*d + 32", "3*d^3 - 16*d^2 + 27*d - 14",
                                  "1/2*d^4 - 9/2*d^3 + 13*d^2 - 12*d", "3*d^3 - 13*d^2 + 12*d + 4",
                                  "1/2*d^4 - 6*d^2 + 15/2*d + 1"}));
        add({3, 2}, fixture_row(5, {"1/2*d^5 - 3/2*d^4 + 3*d^2 - 2*d", "3/2*d^4 - 3/2*d^3 - 3*d^2 + 3*d"}));
        add({3, 1, 1}, fixture_row(5, {"1/2*d^5 - 3/2*d^4 - 3/2*d^3 + 17/2*d^2 - 7*d",
                               "3/2*d^4 - 3/2*d^3 - 7*d^2 + 9*d"}));
        add({2, 2, 1}, fixture_row(5, {"d^5 - 9/2*d^4 + 45/2*d^2 - 31*d + 12",
                               "9/2*d^4 - 15/2*d^3 - 18*d^2 + 42*d - 21"}));
        add({2, 1, 1, 1}, fixture_row(5, {"d^5 - 9/2*d^4 - 9/2*d^3 + 48*d^2 - 73*d + 30",
                                  "9/2*d^4 - 15/2*d^3 - 36*d^2 + 90*d - 48"}));
        add({1, 1, 1, 1, 1}, fixture_row(5, {"1/2*d^5 - 3*d^4 - 3*d^3 + 99/2*d^2 - 101*d + 60",
                                     "3*d^4 - 6*d^3 - 39*d^2 + 126*d - 96"}));
        add({3, 3}, fixture_row(6, {"1/6*d^6 - 1/2*d^4 + 1/3*d^2"}));
        add({3, 2, 1}, fixture_row(6, {"1/3*d^6 - 5/2*d^4 + 3/2*d^3 + 11/3*d^2 - 3*d"}));
        add({3, 1, 1, 1}, fixture_row(6, {"1/6*d^6 - 2*d^4 + 3/2*d^3 + 16/3*d^2 - 6*d"}));
        add({2, 2, 2}, fixture_row(6, {"1/6*d^6 - 2*d^4 + 3/2*d^3 + 22/3*d^2 - 12*d + 5"}));
        add({2, 2, 1, 1}, fixture_row(6, {"1/2*d^6 - 15/2*d^4 + 9*d^3 + 18*d^2 - 36*d + 16"}));
        add({2, 1, 1, 1, 1}, fixture_row(6, {"1/3*d^6 - 7*d^4 + 9*d^3 + 89/3*d^2 - 66*d + 32"}));
        add({1, 1, 1, 1, 1, 1}, fixture_row(6, {"1/6*d^6 - 5*d^4 + 15/2*d^3 + 103/3*d^2 - 96*d + 64"}));
        return t;
    }();
    static const SchurTable corrected = [] {
        SchurTable t = printed;
        for (const auto& e : errata()) {
            std::vector<UniPoly> c = t.row(e.row).coords();
            if (c[e.coord] != e.printed) throw std::logic_error("erratum does not match stored row");
            c[e.coord] = e.corrected;
            t = t.with_row(e.row, ClassFamily(t.row(e.row).codim(), std::move(c)));
        }
        return t;
    }();
    return v == Variant::Printed ? printed : corrected;
}

bool SchurTable::has(const Partition& p) const {
    return std::find(order_.begin(), order_.end(), p) != order_.end();
}

const ClassFamily& SchurTable::row(const Partition& p) const {
    auto it = std::find(order_.begin(), order_.end(), p);
    if (it == order_.end()) throw std::out_of_range("no table row for partition " + p.str());
    return rows_[static_cast<std::size_t>(it - order_.begin())];
}

SchurTable SchurTable::with_row(const Partition& p, ClassFamily f) const {
    if (f.codim().value() != p.weight())
        throw DimensionError("row codimension must equal the partition weight");
    SchurTable t = *this;
    auto it = std::find(t.order_.begin(), t.order_.end(), p);
    if (it == t.order_.end()) {
        t.order_.push_back(p);
        t.rows_.push_back(std::move(f));
    } else {
        t.rows_[static_cast<std::size_t>(it - t.order_.begin())] = std::move(f);
    }
    return t;
}

ClassFamily schur_line(const Partition& lambda, const SchurTable& table) {
    int w = lambda.weight();
    if (w > kDim) throw DimensionError("partition " + lambda.str() + " has weight above 6");
    if (lambda.empty()) return ClassFamily::constant(GradedClass(0, Vec{1}));
    if (lambda.first() > 3) return ClassFamily(w, "d");
    if (lambda.length() == 1) return chern_line(lambda.first());
    return table.row(lambda);
}

}  // namespace hilb3
