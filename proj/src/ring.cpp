#include "hilb3/ring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <variant>

namespace hilb3 {

namespace {

constexpr std::size_t kUnknowns = 10;  // {H,F} x {A..E}
constexpr std::size_t kTarget = 6;     // codim-3 coordinates of each unknown
constexpr int kPowers = 4;             // d^0..d^3

std::size_t unknown_index(std::size_t u, std::size_t v) { return u * 5 + v; }

// A scalar that is affine in the unknown structure constants:
// c + sum g(ij, k) * X_{ij,k}.
struct Affine {
    Rational c;
    ExactMatrix g{kUnknowns, kTarget};
    bool linear = false;

    Affine& operator+=(const Affine& o) {
        c += o.c;
        if (o.linear) {
            linear = true;
            for (std::size_t i = 0; i < kUnknowns; ++i)
                for (std::size_t k = 0; k < kTarget; ++k) g(i, k) += o.g(i, k);
        }
        return *this;
    }
};

struct Unsupported {
    std::string reason;
};

using Degree = std::variant<Affine, Unsupported>;

}  // namespace

PartialRing::PartialRing(const SchurTable& table) {
    const ClassFamily c1 = schur_line({1}, table);
    const ClassFamily c2 = schur_line({2}, table);
    const ClassFamily c11 = schur_line({1, 1}, table);

    // c1(d)^2 = c_{1,1}(d) + c2(d)
    div_m_ = ExactMatrix(kPowers, 3);
    ClassFamily div_target = c11 + c2;
    const UniPoly hh = c1[0] * c1[0], hf = Rational(2) * c1[0] * c1[1], ff = c1[1] * c1[1];
    for (int p = 0; p < kPowers; ++p) {
        auto n = static_cast<std::size_t>(p);
        div_m_(n, 0) = hh.coeff(n);
        div_m_(n, 1) = hf.coeff(n);
        div_m_(n, 2) = ff.coeff(n);
        div_rhs_.push_back(div_target.slice(n));
    }
    if (div_m_.rank() != 3) throw std::logic_error("divisor system is not of full rank");

    // Solve coordinate by coordinate; consistency is part of the contract.
    std::vector<GradedClass> sol(3, GradedClass(2));
    for (std::size_t k = 0; k < kBasisSize[2]; ++k) {
        Vec b(kPowers);
        for (std::size_t p = 0; p < kPowers; ++p) b[p] = div_rhs_[p][k];
        auto x = div_m_.solve(b);
        if (!x) throw std::logic_error("divisor system is inconsistent");
        for (std::size_t j = 0; j < 3; ++j) {
            Vec v = sol[j].coords();
            v[k] = (*x)[j];
            sol[j] = GradedClass(2, v);
        }
    }
    dp_ = {{sol[0], sol[1]}, {sol[1], sol[2]}};

    const ClassFamily c21 = schur_line({2, 1}, table);
    const ClassFamily c3 = schur_line({3}, table);
    const ClassFamily c111 = schur_line({1, 1, 1}, table);
    struct Family {
        const ClassFamily& v;
        ClassFamily rhs;
    };
    const std::vector<Family> families{{c2, c21 + c3}, {c11, c21 + c111}};

    m_ = ExactMatrix(families.size() * kPowers, kUnknowns);
    std::size_t row = 0;
    for (const auto& fam : families) {
        for (std::size_t p = 0; p < kPowers; ++p, ++row) {
            for (std::size_t u = 0; u < 2; ++u)
                for (std::size_t v = 0; v < 5; ++v)
                    m_(row, unknown_index(u, v)) = (c1[u] * fam.v[v]).coeff(p);
            rhs_.push_back(fam.rhs.slice(p));
        }
    }
}

const PartialRing& PartialRing::standard() {
    static const PartialRing ring(SchurTable::builtin());
    return ring;
}

std::string PartialRing::unknown_name(std::size_t col) {
    return std::string(basis(1)[col / 5].name) + "*" + std::string(basis(2)[col % 5].name);
}

GradedClass PartialRing::divisor_product(const GradedClass& u, const GradedClass& w) const {
    if (u.codim().value() != 1 || w.codim().value() != 1)
        throw DimensionError("divisor_product expects two divisors");
    GradedClass out(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!u[i].is_zero() && !w[j].is_zero()) out += (u[i] * w[j]) * dp_[i][j];
    return out;
}

namespace {

// Degree of a product of constant classes whose codimensions sum to 6.
Degree degree(const PartialRing& ring, std::vector<GradedClass> fs) {
    Rational scale(1);
    std::erase_if(fs, [&](const GradedClass& f) {
        if (f.codim().value() != 0) return false;
        scale *= f[0];
        return true;
    });
    if (scale.is_zero() || std::any_of(fs.begin(), fs.end(), [](auto& f) { return f.is_zero(); }))
        return Affine{};
    if (fs.empty()) return Affine{scale};

    auto codim_of = [](const GradedClass& f) { return f.codim().value(); };
    auto divisors = [&] {
        return std::count_if(fs.begin(), fs.end(), [&](auto& f) { return codim_of(f) == 1; });
    };
    while (fs.size() > 2 && divisors() >= 2) {
        auto a = std::find_if(fs.begin(), fs.end(), [&](auto& f) { return codim_of(f) == 1; });
        auto b = std::find_if(a + 1, fs.end(), [&](auto& f) { return codim_of(f) == 1; });
        GradedClass prod = ring.divisor_product(*a, *b);
        fs.erase(b);
        *a = prod;
    }

    if (fs.size() == 1) return Affine{scale * (fs[0].codim().value() == kDim ? fs[0][0] : Rational(0))};
    if (fs.size() == 2) return Affine{scale * pair(fs[0], fs[1])};

    if (fs.size() == 3) {
        std::sort(fs.begin(), fs.end(), [&](auto& x, auto& y) { return codim_of(x) < codim_of(y); });
        if (codim_of(fs[0]) == 1 && codim_of(fs[1]) == 2 && codim_of(fs[2]) == 3) {
            const GradedClass &u = fs[0], &v = fs[1], &t = fs[2];
            // pair(X, t) = X . (P t)
            Vec pt = pairing_matrix(3).apply(t.coords());
            Affine a;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 5; ++j) {
                    Rational w = scale * u[i] * v[j];
                    if (w.is_zero()) continue;
                    for (std::size_t k = 0; k < kTarget; ++k) a.g(unknown_index(i, j), k) += w * pt[k];
                }
            a.linear = true;
            return a;
        }
    }
    std::string shape;
    for (auto& f : fs) shape += (shape.empty() ? "" : ",") + std::to_string(codim_of(f));
    return Unsupported{"needs a product of two codim-2 classes or of two unknown products "
                       "(factor codims " + shape + ")"};
}

}  // namespace

ProductQueryResult PartialRing::product(const std::vector<GradedClass>& factors) const {
    return product_sum({ProductTerm{Rational(1), factors}});
}

ProductQueryResult PartialRing::product_sum(const std::vector<ProductTerm>& terms) const {
    std::optional<int> total;
    for (const auto& t : terms) {
        int c = 0;
        for (const auto& f : t.factors) c += f.codim().value();
        if (total && *total != c) throw DimensionError("product_sum: terms of different codimension");
        total = c;
    }
    if (!total) throw std::invalid_argument("product_sum: no terms");
    if (*total > kDim)
        throw DimensionError("product of codimension " + std::to_string(*total) + " exceeds 6");

    const Codim k(*total);
    const auto& dual = basis(k.complement());
    Vec values(dual.size());
    for (std::size_t j = 0; j < dual.size(); ++j) {
        Affine acc;
        for (const auto& t : terms) {
            if (t.coeff.is_zero()) continue;
            std::vector<GradedClass> fs = t.factors;
            fs.push_back(GradedClass::unit(k.complement(), j));
            Degree d = degree(*this, fs);
            if (auto* u = std::get_if<Unsupported>(&d))
                return ProductQueryResult::undetermined({}, "pairing with " + std::string(dual[j].name) +
                                                                ": " + u->reason);
            Affine a = std::get<Affine>(d);
            a.c *= t.coeff;
            for (std::size_t r = 0; r < kUnknowns; ++r)
                for (std::size_t c = 0; c < kTarget; ++c) a.g(r, c) *= t.coeff;
            acc += a;
        }
        values[j] = acc.c;
        if (!acc.linear) continue;
        for (std::size_t c = 0; c < kTarget; ++c) {
            Vec col = acc.g.col(c);
            if (is_zero(col)) continue;
            RowSpaceResult rs = in_row_space(m_, col);
            if (!rs.member) {
                std::string reason = "pairing with " + std::string(dual[j].name) +
                                     " depends on structure constants left free by the Pieri "
                                     "constraints (coordinate " + std::string(basis(3)[c].name) + ")";
                return ProductQueryResult::undetermined(rs.witness, reason);
            }
            for (std::size_t r = 0; r < rhs_.size(); ++r)
                if (!rs.combination[r].is_zero()) values[j] += rs.combination[r] * rhs_[r][c];
        }
    }
    // values = P^T z
    auto z = pairing_matrix(k).transpose().solve(values);
    if (!z) throw std::logic_error("pairing matrix is singular");
    return ProductQueryResult::determined(GradedClass(k, *z));
}

DivisorProducts divisor_products() {
    const auto& r = PartialRing::standard();
    return {r.divisor_basis_product(0, 0), r.divisor_basis_product(0, 1), r.divisor_basis_product(1, 1)};
}

GradedClass square_divisor_class(const GradedClass& u) {
    return PartialRing::standard().divisor_product(u, u);
}

ProductQueryResult product_query(const GradedClass& u, const GradedClass& v) {
    if (u.codim().value() != 1 || v.codim().value() != 2)
        throw DimensionError("product_query expects a divisor and a codim-2 class");
    return PartialRing::standard().product({u, v});
}

}  // namespace hilb3
