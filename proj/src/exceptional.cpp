#include "hilb3/exceptional.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>

namespace hilb3 {

DyadicRational::DyadicRational(long long p, unsigned q) : p_(p), q_(q) {
    if (q_ > 62) throw std::overflow_error("dyadic exponent too large");
    while (q_ > 0 && p_ % 2 == 0) {
        p_ /= 2;
        --q_;
    }
}

DyadicRational DyadicRational::parse(std::string_view text) {
    const std::string bad = "malformed dyadic '" + std::string(text) + "'";
    std::string plain(text);
    // "p/2^q" is rewritten as "p/<2^q>".
    if (auto caret = text.find('^'); caret != std::string_view::npos) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos || slash > caret || text.substr(slash + 1, caret - slash - 1) != "2")
            throw std::invalid_argument(bad);
        unsigned q = 0;
        auto e = text.substr(caret + 1);
        auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), q);
        if (ec != std::errc() || ptr != e.data() + e.size() || q > 62) throw std::invalid_argument(bad);
        mpz_class den = 1;
        den <<= q;
        plain = std::string(text.substr(0, slash)) + "/" + den.get_str();
    }
    Rational v = Rational::parse(plain);
    const mpz_class& den = v.denominator();
    if ((den & (den - 1)) != 0) throw std::invalid_argument("'" + std::string(text) + "' is not dyadic");
    auto q = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
    if (!v.numerator().fits_slong_p()) throw std::overflow_error("dyadic numerator too large");
    return DyadicRational(v.numerator().get_si(), q);
}

Rational DyadicRational::value() const {
    mpz_class den = 1;
    den <<= q_;
    return Rational(mpz_class(static_cast<long>(p_)), den);
}

std::string DyadicRational::str() const {
    if (q_ == 0) return std::to_string(p_);
    return std::to_string(p_) + "/2^" + std::to_string(q_);
}

BundleData ExcSlope::bundle(long twist) const {
    return BundleData::from_slope(rank, slope + Rational(twist), delta);
}

Rational dot(const ExcSlope& a, const ExcSlope& b) {
    Rational den = Rational(3) + a.slope - b.slope;
    if (den.is_zero()) throw std::domain_error("alpha.beta undefined: 3 + alpha - beta = 0");
    return (a.slope + b.slope) / 2 + (b.delta - a.delta) / den;
}

namespace {

ExcSlope make_slope(const Rational& s, const DyadicRational& x) {
    ExcSlope e;
    e.slope = s;
    e.preimage = x;
    if (!s.denominator().fits_slong_p()) throw std::overflow_error("exceptional rank too large");
    e.rank = s.denominator().get_si();
    Rational r(e.rank);
    e.delta = (Rational(1) - Rational(1) / (r * r)) / 2;
    return e;
}

template <class Rec>
ExcSlope epsilon_step(const DyadicRational& x, Rec&& rec) {
    if (x.q() == 0) return make_slope(Rational(static_cast<long>(x.p())), x);
    ExcSlope a = rec(DyadicRational(x.p() - 1, x.q()));
    ExcSlope b = rec(DyadicRational(x.p() + 1, x.q()));
    return make_slope(dot(a, b), x);
}

}  // namespace

ExcSlope epsilon_uncached(const DyadicRational& x) {
    return epsilon_step(x, [](const DyadicRational& y) { return epsilon_uncached(y); });
}

ExcSlope epsilon(const DyadicRational& x) {
    static std::mutex mu;
    static std::map<std::pair<long long, unsigned>, ExcSlope> memo;
    const auto key = std::make_pair(x.p(), x.q());
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    // Computed outside the lock; racing threads produce the same value.
    ExcSlope e = epsilon_step(x, [](const DyadicRational& y) { return epsilon(y); });
    std::lock_guard lock(mu);
    return memo.emplace(key, e).first->second;
}

std::vector<ExcSlope> enumerate_slopes(long max_rank, const Rational& lo, const Rational& hi) {
    if (max_rank < 1) throw std::invalid_argument("max_rank must be at least 1");
    std::vector<ExcSlope> out;
    if (hi < lo) return out;
    auto keep = [&](const ExcSlope& e) {
        if (e.rank < max_rank && lo <= e.slope && e.slope <= hi) out.push_back(e);
    };

    const long first = lo.floor().get_si(), last = hi.ceil().get_si();
    for (long n = first; n <= last; ++n) keep(epsilon(DyadicRational(n)));

    // Between consecutive dyadics l < r at depth q, the midpoint has rank
    // r_l * r_r * (3 + l - r) >= 2 max(r_l, r_r), so once a midpoint reaches
    // max_rank nothing below it can come back under.
    std::function<void(const DyadicRational&, const DyadicRational&, const ExcSlope&, const ExcSlope&)> walk =
        [&](const DyadicRational& l, const DyadicRational& r, const ExcSlope& el, const ExcSlope& er) {
            unsigned q = std::max(l.q(), r.q()) + 1;
            long long lp = l.p() << (q - l.q());
            DyadicRational mid(lp + 1, q);
            ExcSlope em = epsilon(mid);
            Rational expect = Rational(el.rank) * Rational(er.rank) * (Rational(3) + el.slope - er.slope);
            if (expect != Rational(em.rank) || em.rank <= std::max(el.rank, er.rank))
                throw std::logic_error("rank growth fails at " + mid.str());
            if (em.rank >= max_rank) return;
            if (em.slope < lo && er.slope < lo) return;
            if (em.slope > hi && el.slope > hi) return;
            keep(em);
            walk(l, mid, el, em);
            walk(mid, r, em, er);
        };
    for (long n = first; n < last; ++n) {
        DyadicRational l(n), r(n + 1);
        walk(l, r, epsilon(l), epsilon(r));
    }
    std::sort(out.begin(), out.end(), [](const ExcSlope& a, const ExcSlope& b) { return a.slope < b.slope; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const ExcSlope& a, const ExcSlope& b) { return a.slope == b.slope; }),
              out.end());
    return out;
}

bool n_very_ample_exceptional(const ExcSlope& e, long n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return e.slope >= Rational(n);
}

std::string to_string(GaetaResolution::Form f) {
    return f == GaetaResolution::Form::FirstForm ? "FirstForm" : "SecondForm";
}

std::string GaetaResolution::str() const {
    auto o = [](long e, long n) {
        std::string s = "O(" + std::to_string(e) + ")";
        return n == 1 ? s : s + "^" + std::to_string(n);
    };
    auto sum = [](std::vector<std::string> xs) {
        std::string s;
        for (auto& x : xs) s += (s.empty() ? "" : " + ") + x;
        return s.empty() ? std::string("0") : s;
    };
    std::vector<std::string> left, right;
    if (a) left.push_back(o(d, a));
    if (b) (form == Form::FirstForm ? left : right).push_back(o(d + 1, b));
    if (c) right.push_back(o(d + 2, c));
    return to_string(form) + " d=" + std::to_string(d) + " (a,b,c)=(" + std::to_string(a) + "," +
           std::to_string(b) + "," + std::to_string(c) + "): 0 -> " + sum(left) + " -> " + sum(right) +
           " -> V -> 0";
}

BundleData gaeta_bundle(const GaetaResolution& g) {
    // Signed multiplicities of O(d), O(d+1), O(d+2).
    long sa = -g.a, sb = g.form == GaetaResolution::Form::FirstForm ? -g.b : g.b, sc = g.c;
    Rational r(sa + sb + sc);
    Rational c1(sa * g.d + sb * (g.d + 1) + sc * (g.d + 2));
    auto sq = [](long e) { return Rational(e * e, 2); };
    Rational ch2 = Rational(sa) * sq(g.d) + Rational(sb) * sq(g.d + 1) + Rational(sc) * sq(g.d + 2);
    return BundleData(r, c1, c1 * c1 / 2 - ch2);
}

GaetaResolution gaeta(const BundleData& bd) {
    const Rational mu = bd.mu();
    const long top = mu.ceil().get_si();

    struct Candidate {
        GaetaResolution g;
        std::map<std::pair<int, long>, long> terms;  // (side, twist) -> exponent
    };
    std::vector<Candidate> found;
    std::string fractional;

    for (long d = top - 3; d <= top + 1; ++d) {
        // x_a O(d) + x_b O(d+1) + x_c O(d+2) must have the ranks and Chern
        // characters of V; x_a enters negatively in both forms.
        ExactMatrix m(3, 3);
        for (long j = 0; j < 3; ++j) {
            Rational e(d + j);
            m(0, static_cast<std::size_t>(j)) = 1;
            m(1, static_cast<std::size_t>(j)) = e;
            m(2, static_cast<std::size_t>(j)) = e * e / 2;
        }
        auto x = m.solve({bd.r(), bd.c1(), bd.ch2()});
        if (!x) continue;
        Rational xa = -(*x)[0], xb = (*x)[1], xc = (*x)[2];
        if (xa.sign() < 0 || xc.sign() < 0) continue;
        if (!xa.is_integer() || !xb.is_integer() || !xc.is_integer()) {
            if (fractional.empty())
                fractional = "d=" + std::to_string(d) + " gives (a, b, c) = (" + xa.str() + ", " +
                             xb.abs().str() + ", " + xc.str() + ")";
            continue;
        }
        Candidate cand;
        cand.g.d = d;
        cand.g.a = xa.to_long();
        cand.g.b = xb.abs().to_long();
        cand.g.c = xc.to_long();
        cand.g.form = xb.sign() > 0 ? GaetaResolution::Form::SecondForm : GaetaResolution::Form::FirstForm;
        if (cand.g.a) cand.terms[{0, d}] = cand.g.a;
        if (cand.g.b) cand.terms[{xb.sign() > 0 ? 1 : 0, d + 1}] = cand.g.b;
        if (cand.g.c) cand.terms[{1, d + 2}] = cand.g.c;
        found.push_back(std::move(cand));
    }

    if (found.empty()) {
        std::string msg = "no Gaeta-type resolution for " + bd.str();
        if (!fractional.empty()) msg += "; nearest is non-integral: " + fractional;
        throw NotGaetaGeneral(msg);
    }
    // Candidates are scanned by increasing d, so the first one is the
    // smallest twist; others must describe the same sequence.
    for (const auto& c : found)
        if (c.terms != found.front().terms)
            throw NotGaetaGeneral("ambiguous Gaeta resolution for " + bd.str() + ": " +
                                  found.front().g.str() + " and " + c.g.str());
    GaetaResolution g = found.front().g;
    if (!(gaeta_bundle(g) == bd)) throw std::logic_error("Gaeta bookkeeping mismatch for " + g.str());
    return g;
}

std::string to_string(AmpleVerdict::Tag t) {
    switch (t) {
        case AmpleVerdict::Tag::Yes: return "Yes";
        case AmpleVerdict::Tag::No: return "No";
        case AmpleVerdict::Tag::Unknown: return "Unknown";
    }
    return "Unknown";
}

AmpleVerdict classify_2va(const BundleData& b) {
    GaetaResolution g = gaeta(b);
    const std::string res = g.str();
    using T = AmpleVerdict::Tag;
    if (g.d >= 1) return {T::Yes, res + "; every middle line bundle is 2-very ample"};
    if (g.d == 0 && g.form == GaetaResolution::Form::FirstForm)
        return {T::Yes, res + "; middle term O(2)^c is 2-very ample"};
    if (g.d <= -3) return {T::No, res + "; no global sections"};
    return {T::Unknown, res + "; not decided by the resolution criterion"};
}

AmpleVerdict check_sequence_criterion(const Rational& sub_slope, const std::vector<long>& middle_twists, long k) {
    using T = AmpleVerdict::Tag;
    if (middle_twists.empty()) return {T::Unknown, "empty middle term"};
    long low = *std::min_element(middle_twists.begin(), middle_twists.end());
    if (low < k)
        return {T::Unknown, "middle term contains O(" + std::to_string(low) + "), which is not " +
                                std::to_string(k) + "-very ample"};
    if (!(sub_slope > Rational(-3)))
        return {T::Unknown, "slope of the kernel is " + sub_slope.str() + " <= -3; h^2 vanishing not guaranteed"};
    return {T::Yes, "kernel slope " + sub_slope.str() + " > -3 and every middle twist >= " + std::to_string(k) +
                        "; assumes the middle bundle is general in its moduli space"};
}

}  // namespace hilb3
