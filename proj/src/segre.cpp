#include "hilb3/ring.hpp"
#include "hilb3/taut.hpp"

#include <algorithm>
#include <map>

namespace hilb3 {

namespace {

// Degree-i part of 1/(1 + c1 + c2 + ...), as a polynomial in the c_j:
// keys are sorted multisets of indices.
using ChernMonomials = std::map<std::vector<int>, Rational>;

const std::vector<ChernMonomials>& inverse_expansion() {
    static const std::vector<ChernMonomials> s = [] {
        std::vector<ChernMonomials> out(kDim + 1);
        out[0][{}] = 1;
        for (int i = 1; i <= kDim; ++i)
            for (int j = 1; j <= i; ++j)
                for (const auto& [mono, c] : out[static_cast<std::size_t>(i - j)]) {
                    auto m = mono;
                    m.insert(std::upper_bound(m.begin(), m.end(), j), j);
                    out[static_cast<std::size_t>(i)][m] -= c;
                }
        return out;
    }();
    return s;
}

}  // namespace

ProductQueryResult segre(int i, const BundleData& b) {
    if (i < 1 || i > kDim) throw DimensionError("segre index must be in 1..6");
    std::vector<GradedClass> c;
    for (int j = 1; j <= kDim; ++j) c.push_back(chern_general(j, b));

    std::vector<ProductTerm> terms;
    for (const auto& [mono, coeff] : inverse_expansion()[static_cast<std::size_t>(i)]) {
        if (coeff.is_zero()) continue;
        ProductTerm t{coeff, {}};
        bool vanishes = false;
        for (int j : mono) {
            const GradedClass& f = c[static_cast<std::size_t>(j - 1)];
            vanishes = vanishes || f.is_zero();
            t.factors.push_back(f);
        }
        if (!vanishes) terms.push_back(std::move(t));
    }
    if (terms.empty()) return ProductQueryResult::determined(GradedClass(i));
    return PartialRing::standard().product_sum(terms);
}

}  // namespace hilb3
