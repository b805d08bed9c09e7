#pragma once

#include "hilb3/rational.hpp"
#include "hilb3/report.hpp"
#include "hilb3/taut.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hilb3 {

// p / 2^q with q minimal (p odd when q > 0).
class DyadicRational {
public:
    DyadicRational(long long p = 0, unsigned q = 0);
    // "p/2^q", "p/q" with q a power of two, or an integer.
    static DyadicRational parse(std::string_view text);

    long long p() const { return p_; }
    unsigned q() const { return q_; }
    Rational value() const;
    std::string str() const;

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
    friend auto operator<=>(const DyadicRational& a, const DyadicRational& b) {
        return a.value() <=> b.value();
    }

private:
    long long p_;
    unsigned q_;
};

struct ExcSlope {
    Rational slope;
    DyadicRational preimage;
    long rank = 1;
    Rational delta;

    // Numerical data of the exceptional bundle, optionally twisted by O(twist).
    BundleData bundle(long twist = 0) const;
};

// (alpha + beta)/2 + (delta_beta - delta_alpha)/(3 + alpha - beta)
Rational dot(const ExcSlope& a, const ExcSlope& b);

ExcSlope epsilon(const DyadicRational& x);
// Same recursion without the shared memo table.
ExcSlope epsilon_uncached(const DyadicRational& x);

// Exceptional slopes of rank < max_rank in [lo, hi], ascending.
std::vector<ExcSlope> enumerate_slopes(long max_rank, const Rational& lo, const Rational& hi);

bool n_very_ample_exceptional(const ExcSlope& e, long n);

class NotGaetaGeneral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// FirstForm:  0 -> O(d)^a + O(d+1)^b -> O(d+2)^c -> V -> 0
// SecondForm: 0 -> O(d)^a -> O(d+1)^b + O(d+2)^c -> V -> 0
struct GaetaResolution {
    enum class Form { FirstForm, SecondForm };
    Form form = Form::FirstForm;
    long d = 0;
    long a = 0, b = 0, c = 0;

    std::string str() const;
    friend bool operator==(const GaetaResolution&, const GaetaResolution&) = default;
};

std::string to_string(GaetaResolution::Form f);

// Rank, c1 and ch2 of the alternating sum of the resolution's terms.
BundleData gaeta_bundle(const GaetaResolution& g);

// Throws NotGaetaGeneral when no candidate twist gives nonnegative integral
// exponents, or when two candidates with different terms both do.
GaetaResolution gaeta(const BundleData& b);

struct AmpleVerdict {
    enum class Tag { Yes, No, Unknown };
    Tag tag = Tag::Unknown;
    std::string reason;
};

std::string to_string(AmpleVerdict::Tag t);

AmpleVerdict classify_2va(const BundleData& b);

// 0 -> A -> B -> V -> 0 with B = sum of O(e) for e in middle_twists.
AmpleVerdict check_sequence_criterion(const Rational& sub_slope, const std::vector<long>& middle_twists, long k);

Report verify_epsilon();
Report verify_gaeta();

}  // namespace hilb3
