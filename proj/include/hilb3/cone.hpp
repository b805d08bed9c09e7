#pragma once

#include "hilb3/chow.hpp"
#include "hilb3/report.hpp"

#include <optional>
#include <vector>

namespace hilb3 {

// Primitive integer vector (content 1) in the same direction, orientation kept.
Vec primitive_ray(const Vec& v);
// Primitive, first nonzero entry positive; used for lines where sign is meaningless.
Vec canonical_line(const Vec& v);

// Finitely generated cone. Generators are stored as primitive rays without
// duplicates; zero generators are dropped.
class Cone {
public:
    explicit Cone(Codim k, const std::vector<GradedClass>& generators = {});
    static Cone from_vectors(Codim k, const std::vector<Vec>& generators);

    Codim codim() const { return k_; }
    std::size_t dim() const { return k_.basis_size(); }
    const std::vector<Vec>& rays() const { return rays_; }
    std::vector<GradedClass> classes() const;

private:
    Codim k_;
    std::vector<Vec> rays_;
};

// Solutions of A x >= 0, one row per inequality, by double description.
// Lines of the lineality space appear in both orientations.
std::vector<Vec> inequality_cone_generators(const ExactMatrix& a, std::size_t dim);

// { x in codim 6-k : pair(g, x) >= 0 for every generator g }.
Cone dual_cone(const Cone& c);

// A minimal generating subset; for pointed cones, the extreme rays.
std::vector<Vec> extreme_rays(const Cone& c);

struct Membership {
    bool member = false;
    Vec combination;                      // nonnegative weights on c.rays(), when member
    std::optional<GradedClass> separator;  // complementary codim, pair(g, s) >= 0 > pair(x, s)
};

Membership contains(const Cone& c, const GradedClass& x);

// Mutual containment.
bool same_cone(const Cone& a, const Cone& b);

// The same rays up to order (both sides primitive).
bool same_ray_set(const std::vector<Vec>& a, const std::vector<Vec>& b);

// Non-negative weights with sum_j w_j cols_j = b, by an exact phase-1 simplex
// (Bland's rule); nullopt when infeasible.
std::optional<Vec> nonnegative_solution(const std::vector<Vec>& cols, const Vec& b);

Report verify_cone_duality(int k);

// Codim 2 is computed from the exceptional bundles with slope in [2,3] and the
// two limit rays; codim 3 and 4 are the catalogued lists.
Cone pliant_inner_bound(int k = 2);
Cone pliant_fixture(int k);
// Generators of the codim-2 bound before reduction, with a label for each.
std::vector<std::pair<std::string, GradedClass>> pliant_generators();

Report verify_pliant_bound();
Report verify_pliant_in_nef();

}  // namespace hilb3
