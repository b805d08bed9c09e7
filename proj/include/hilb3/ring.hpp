#pragma once

#include "hilb3/chow.hpp"
#include "hilb3/matrix.hpp"
#include "hilb3/query.hpp"
#include "hilb3/report.hpp"
#include "hilb3/taut.hpp"

#include <vector>

namespace hilb3 {

// coeff * factors[0] * factors[1] * ...
struct ProductTerm {
    Rational coeff{1};
    std::vector<GradedClass> factors;
};

// The part of the Chow ring fixed by the O(d) Pieri identities.
//
// Divisor products come from c1(d)^2 = c_{1,1}(d) + c2(d), which pins them down.
// The ten products {H,F} x {A..E} are unknown codim-3 vectors X_{u,v}; the
// families c1*c2 = c_{2,1} + c3 and c1*c_{1,1} = c_{2,1} + c_{1,1,1}, matched
// on each power of d, give 8 linear equations between them. Any product is
// reduced to degrees deg(f1...fn) that are affine in the X's, and is
// Determined exactly when every such functional lies in the constraint row space.
class PartialRing {
public:
    explicit PartialRing(const SchurTable& table);

    // Built once from the builtin table; safe to call from several threads.
    static const PartialRing& standard();

    // Rows: powers d^0..d^3. Columns: H^2, HF, F^2.
    const ExactMatrix& divisor_system() const { return div_m_; }
    const std::vector<GradedClass>& divisor_rhs() const { return div_rhs_; }

    // Rows: (family, power d^0..d^3). Columns: unknowns X_{u,v}, u-major.
    const ExactMatrix& constraint_matrix() const { return m_; }
    const std::vector<GradedClass>& constraint_rhs() const { return rhs_; }
    static std::string unknown_name(std::size_t col);

    const GradedClass& divisor_basis_product(std::size_t i, std::size_t j) const { return dp_[i][j]; }
    GradedClass divisor_product(const GradedClass& u, const GradedClass& w) const;

    ProductQueryResult product(const std::vector<GradedClass>& factors) const;
    // All terms must share one total codimension (at most 6).
    ProductQueryResult product_sum(const std::vector<ProductTerm>& terms) const;

private:
    ExactMatrix div_m_;
    std::vector<GradedClass> div_rhs_;
    std::vector<std::vector<GradedClass>> dp_;
    ExactMatrix m_;
    std::vector<GradedClass> rhs_;
};

struct DivisorProducts {
    GradedClass HH, HF, FF;
};

DivisorProducts divisor_products();
GradedClass square_divisor_class(const GradedClass& u);
ProductQueryResult product_query(const GradedClass& u, const GradedClass& v);

Report verify_ring();
Report verify_orbit_identities();

}  // namespace hilb3
