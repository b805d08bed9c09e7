#pragma once

#include "hilb3/chow.hpp"
#include "hilb3/poly.hpp"
#include "hilb3/query.hpp"
#include "hilb3/report.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hilb3 {

// Numerical invariants of a bundle on the plane.
class BundleData {
public:
    // r must be a positive integer and c1 an integer; c2 may be any rational.
    BundleData(Rational r, Rational c1, Rational c2);

    static BundleData line(const Rational& d) { return {1, d, 0}; }
    // Rank, slope and discriminant determine c1 and c2.
    static BundleData from_slope(const Rational& r, const Rational& mu, const Rational& delta);

    const Rational& r() const { return r_; }
    const Rational& c1() const { return c1_; }
    const Rational& c2() const { return c2_; }
    Rational mu() const { return c1_ / r_; }
    Rational ch2() const { return c1_ * c1_ / 2 - c2_; }
    Rational delta() const { return mu() * mu() / 2 - ch2() / r_; }

    std::string str() const;

    friend bool operator==(const BundleData&, const BundleData&) = default;

private:
    Rational r_, c1_, c2_;
};

// c_i of the tautological bundle of O(d) as a family in d; zero for i > 3.
ClassFamily chern_line(int i);

// Symbolic coordinates of c_i(V^[3]). For i <= 5 the variables are r, c1, c2;
// c_6 is written in r, mu, Delta.
const std::vector<MultiPoly>& chern_general_poly(int i);

GradedClass chern_general(int i, const BundleData& b);

// Same formulas with c1 and c2 given as polynomials in one parameter.
ClassFamily chern_general_family(int i, const Rational& r, const UniPoly& c1, const UniPoly& c2);

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // "2,1,1", "2,1^2", "(2,1,1)" or "211" for single-digit parts.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return p_; }
    int weight() const;
    std::size_t length() const { return p_.size(); }
    bool empty() const { return p_.empty(); }
    int first() const { return p_.empty() ? 0 : p_.front(); }

    std::string str() const;  // "2,1,1"
    std::string compact() const;  // "2,1^2"

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> p_;
};

// Polynomial in c1, c2, c3 with c_m = 0 outside 0..3.
using SchurPoly = MultiPoly;

SchurPoly schur_giambelli(const Partition& lambda);

// Partitions obtained by adding a horizontal strip of size k with first part <= 3.
std::vector<Partition> pieri_successors(const Partition& lambda, int k);

// Partitions of n with parts at most max_part, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part);

// Schur classes of the tautological bundle of O(d), keyed by partition.
class SchurTable {
public:
    enum class Variant { Corrected, Printed };

    struct Erratum {
        Partition row;
        std::size_t coord;
        UniPoly printed;
        UniPoly corrected;
        std::string reason;
    };

    static const SchurTable& builtin(Variant v = Variant::Corrected);
    static const std::vector<Erratum>& errata();

    const std::vector<Partition>& partitions() const { return order_; }
    bool has(const Partition& p) const;
    const ClassFamily& row(const Partition& p) const;
    SchurTable with_row(const Partition& p, ClassFamily f) const;

private:
    std::vector<Partition> order_;
    std::vector<ClassFamily> rows_;
};

// Single rows come from chern_line, first part > 3 gives zero, weight > 6 throws.
ClassFamily schur_line(const Partition& lambda, const SchurTable& table = SchurTable::builtin());

// Coefficient of degree i in 1/c(V^[3]) (so s_1 = -c_1). Undetermined when a
// Chow product it needs is not fixed by the reconstructed ring data.
ProductQueryResult segre(int i, const BundleData& b);

Report verify_intersection_identities();
ReportEntry verify_pieri(const Partition& lambda, int k,
                         const SchurTable& table = SchurTable::builtin());
// All twelve (lambda, k) identities, the closed-form check and the spot value.
Report verify_pieri_suite(const SchurTable& table = SchurTable::builtin());
// Littlewood-Richardson products of every complementary pair of rows.
Report verify_lr_suite(const SchurTable& table = SchurTable::builtin());
Report verify_errata();
Report verify_general_specialization();
Report verify_degree_conjecture(const SchurTable& table = SchurTable::builtin());

}  // namespace hilb3
