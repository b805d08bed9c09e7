#include "hilb3/taut.hpp"

#include <stdexcept>

namespace hilb3 {

namespace {

using M = MultiPoly;

Rational Q(long a, long b = 1) { return Rational(a, b); }

std::vector<std::vector<MultiPoly>> build_appendix() {
    const M r = M::var("r"), c1 = M::var("c1"), c2 = M::var("c2");
    const M mu = M::var("mu"), De = M::var("Delta");
    auto p = [](const M& x, unsigned e) { return pow(x, e); };

    std::vector<std::vector<M>> c(7);
    c[1] = {c1 - 2 * r, r};

    c[2] = {
        M(Q(1, 2)) * r * (3 * r - 1),
        c1 * r - M(Q(1, 2)) * (3 * r - 1) * r,
        binomial(c1 - 2 * r + 1, 2),
        c1 * (2 * r - 1) - r * (3 * r - 2),
        c2 - 2 * binomial(r, 2),
    };

    c[3] = {
        (c1 - 2 * r + 1) * (c2 - (r - 1) * (c1 + 2 * r)),
        r * (c2 - M(Q(2, 3)) * (r - 1) * (2 * r - 1)),
        binomial(c1 - 2 * r + 2, 3),
        M(Q(7, 3)) * (2 * r - 1) * r * (r - 1) + c1 * ((2 * r - 1) * c1 - 6 * p(r, 2) + 6 * r - 1),
        c1 * binomial(3 * r - 1, 2) - 6 * binomial(r, 2) * (2 * r - 1),
        (r - 1) * (c2 + M(Q(1, 6)) * (3 * c1 * (c1 - 3 * r + 3) - r * (r + 4))),
    };

    // The epsilon coordinate is kept exactly as catalogued, including its c2^3 term.
    c[4] = {
        M(Q(1, 4)) * (r - 1) *
                (-24 * c1 * p(r, 2) + 6 * p(c1, 2) * r + 36 * c1 * r - 4 * p(c1, 2) - 12 * c1 +
                 15 * p(r, 3) - 33 * p(r, 2) + 16 * r) +
            M(Q(1, 2)) * (3 * r - 2) * (r - 1) * c2,
        M(Q(-1, 8)) * (r - 1) *
                (-36 * c1 * p(r, 2) + 24 * p(c1, 2) * r + 56 * c1 * r - 4 * p(c1, 3) -
                 20 * p(c1, 2) - 16 * c1 + 13 * p(r, 3) - 29 * p(r, 2) + 14 * r) +
            ((r - 1) * c1 - M(Q(1, 2)) * (3 * r - 2) * (r - 1)) * c2,
        (c2 - c1 * (r - 1)) * binomial(-c1 + 2 * r - 1, 2),
        M(Q(1, 2)) * (r - 1) * (c1 * (2 * (2 * r - 1) * (r - 1) - (3 * r - 2) * c1) + p(r - 1, 2) * r) +
            ((2 * r - 1) * c1 - (3 * r - 1) * (r - 1)) * c2,
        M(Q(1, 8)) * (r - 1) * (3 * p(r, 3) - 3 * p(r, 2) - 2 * r - 2 * c1 * (r - 2) * (c1 - 2 * r + 3)) +
            M(Q(1, 2)) * (p(c2, 2) - 2 * p(r, 2) + 4 * r - 3) * c2,
    };

    c[5] = {
        6 * binomial(r, 3) * (r - 1) * (2 * r - 3) -
            M(Q(1, 4)) * c1 * (r - 1) *
                (p(c1, 2) * (r - 2) - (5 * r - 6) * (2 * r - 3) * c1 + 20 * p(r, 3) - 72 * p(r, 2) +
                 82 * r - 28) +
            M(Q(1, 2)) * c2 * (-c1 + 2 * r - 2) * (c1 * (r - 1) + 2 * p(r, 2) - 5 * r + 4) +
            (M(Q(1, 2)) * c1 - (r - 1)) * p(c2, 2),
        M(Q(-1, 40)) * (r - 1) *
                (40 * (r - 1) * (2 * r - 3) * p(c1, 2) +
                 (-255 * p(r, 3) + 895 * p(r, 2) - 1010 * r + 360) * c1 +
                 r * (r - 2) * (131 * p(r, 2) - 317 * r + 192)) -
            M(Q(1, 2)) * c2 * (r - 1) * (-p(c1, 2) + 3 * (r - 1) * c1 + 3 * p(r, 2) - 8 * r + 8) +
            (r - 1) * p(c2, 2),
    };

    auto t = [&](long a, long b, unsigned er, unsigned em) {
        return M(Q(a, b)) * p(r, er) * p(mu, em);
    };
    M c6 = t(1, 48, 6, 6) - t(1, 16, 5, 6) - t(1, 4, 6, 4) + t(1, 16, 4, 6) + t(1, 4, 6, 3) +
           t(9, 8, 5, 4) - t(1, 48, 3, 6) + t(11, 16, 6, 2) - t(11, 8, 5, 3) - t(15, 8, 4, 4) -
           t(51, 40, 6, 1) - t(65, 16, 5, 2) + t(11, 4, 4, 3) + t(11, 8, 3, 4) + t(131, 240, 6, 0) +
           t(71, 8, 5, 1) + t(461, 48, 4, 2) - t(19, 8, 3, 3) - t(3, 8, 2, 4) - t(71, 16, 5, 0) -
           t(195, 8, 4, 1) - t(183, 16, 3, 2) + t(3, 4, 2, 3) + t(679, 48, 4, 0) +
           t(265, 8, 3, 1) + t(55, 8, 2, 2) - t(1067, 48, 3, 0) - t(447, 20, 2, 1) -
           t(5, 3, 1, 2) + t(2077, 120, 2, 0) + t(6, 1, 1, 1) - t(16, 3, 1, 0);
    c6 += (t(1, 8, 5, 4) - t(1, 4, 4, 4) - t(3, 4, 5, 2) + t(1, 8, 3, 4) + t(1, 2, 5, 1) +
           t(11, 4, 4, 2) + t(3, 8, 5, 0) - t(9, 4, 4, 1)) *
          De;
    c6 += (-t(7, 2, 3, 2) - t(25, 12, 4, 0) + t(13, 4, 3, 1) + t(3, 2, 2, 2) + t(41, 8, 3, 0) -
           t(3, 2, 2, 1) - t(77, 12, 2, 0) + t(10, 3, 1, 0)) *
          De;
    c6 += (t(1, 4, 4, 2) - t(1, 4, 3, 2) - t(1, 2, 4, 0) + t(3, 2, 3, 0) - t(3, 2, 2, 0)) * p(De, 2);
    c6 += t(1, 6, 3, 0) * p(De, 3);
    c[6] = {c6};
    return c;
}

void check_index(int i) {
    if (i < 1 || i > kDim) throw std::out_of_range("Chern class index must be in 1..6");
}

}  // namespace

BundleData::BundleData(Rational r, Rational c1, Rational c2)
    : r_(std::move(r)), c1_(std::move(c1)), c2_(std::move(c2)) {
    if (!r_.is_integer() || r_.sign() <= 0) throw std::invalid_argument("rank must be a positive integer");
    if (!c1_.is_integer()) throw std::invalid_argument("c1 must be an integer");
}

BundleData BundleData::from_slope(const Rational& r, const Rational& mu, const Rational& delta) {
    Rational c1 = r * mu;
    Rational ch2 = r * (mu * mu / 2 - delta);
    return BundleData(r, c1, c1 * c1 / 2 - ch2);
}

std::string BundleData::str() const {
    return "(r=" + r_.str() + ", c1=" + c1_.str() + ", c2=" + c2_.str() + ")";
}

ClassFamily chern_line(int i) {
    check_index(i);
    const UniPoly d = UniPoly::variable("d");
    const UniPoly zero(Vec{}, "d");
    auto k = [](const Rational& c) { return UniPoly::constant(c, "d"); };
    switch (i) {
        case 1: return ClassFamily(1, {d - 2, k(1)});
        case 2: return ClassFamily(2, {k(1), d - 1, binomial(d - 1, 2), d - 1, zero});
        case 3:
            return ClassFamily(3, {zero, zero, binomial(d, 3), Rational(2) * binomial(d, 2), d, zero});
        default: return ClassFamily(i, "d");
    }
}

const std::vector<MultiPoly>& chern_general_poly(int i) {
    check_index(i);
    static const std::vector<std::vector<MultiPoly>> table = build_appendix();
    return table[static_cast<std::size_t>(i)];
}

GradedClass chern_general(int i, const BundleData& b) {
    const auto& polys = chern_general_poly(i);
    std::map<std::string, Rational> vals{{"r", b.r()},   {"c1", b.c1()},  {"c2", b.c2()},
                                         {"mu", b.mu()}, {"Delta", b.delta()}};
    Vec x;
    for (const auto& q : polys) x.push_back(q.evaluate(vals, Rational(1)));
    return GradedClass(i, std::move(x));
}

ClassFamily chern_general_family(int i, const Rational& r, const UniPoly& c1, const UniPoly& c2) {
    const auto& polys = chern_general_poly(i);
    const std::string& var = c1.is_constant() ? c2.var() : c1.var();
    UniPoly rr = UniPoly::constant(r, var);
    UniPoly mu = c1 * r.inverse();
    UniPoly ch2 = c1 * c1 * Rational(1, 2) - c2;
    UniPoly delta = mu * mu * Rational(1, 2) - ch2 * r.inverse();
    std::map<std::string, UniPoly> vals{{"r", rr}, {"c1", c1}, {"c2", c2}, {"mu", mu}, {"Delta", delta}};
    std::vector<UniPoly> coords;
    for (const auto& q : polys) coords.push_back(q.evaluate(vals, UniPoly::constant(1, var)));
    return ClassFamily(i, std::move(coords));
}

}  // namespace hilb3
