#include "hilb3/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilb3 {

Vec primitive_ray(const Vec& v) {
    mpz_class l = 1;
    for (const auto& x : v) l = lcm(l, x.denominator());
    std::vector<mpz_class> ints;
    for (const auto& x : v) ints.push_back(x.numerator() * (l / x.denominator()));
    mpz_class g = gcd_of(ints);
    if (g == 0) return v;
    Vec out;
    for (const auto& n : ints) out.emplace_back(mpz_class(n / g));
    return out;
}

Vec canonical_line(const Vec& v) {
    Vec p = primitive_ray(v);
    for (const auto& x : p) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : p) y = -y;
        break;
    }
    return p;
}

Cone::Cone(Codim k, const std::vector<GradedClass>& generators) : k_(k) {
    for (const auto& g : generators) {
        if (g.codim() != k) throw DimensionError("cone generator of the wrong codimension");
        if (g.is_zero()) continue;
        Vec r = primitive_ray(g.coords());
        if (std::find(rays_.begin(), rays_.end(), r) == rays_.end()) rays_.push_back(std::move(r));
    }
}

Cone Cone::from_vectors(Codim k, const std::vector<Vec>& generators) {
    std::vector<GradedClass> gs;
    for (const auto& v : generators) gs.emplace_back(k, v);
    return Cone(k, gs);
}

std::vector<GradedClass> Cone::classes() const {
    std::vector<GradedClass> out;
    for (const auto& r : rays_) out.emplace_back(k_, r);
    return out;
}

std::vector<Vec> inequality_cone_generators(const ExactMatrix& a, std::size_t dim) {
    if (a.cols() != dim) throw std::invalid_argument("inequality matrix has the wrong width");
    std::vector<Vec> lines, rays;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim);
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<Vec> done;  // constraints already imposed

    auto axpy = [](Vec& x, const Rational& s, const Vec& y) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= s * y[i];
    };

    for (std::size_t r = 0; r < a.rows(); ++r) {
        const Vec row = a.row(r);
        if (is_zero(row)) continue;

        auto hit = std::find_if(lines.begin(), lines.end(), [&](const Vec& l) { return !dot(row, l).is_zero(); });
        if (hit != lines.end()) {
            // The constraint cuts the lineality space: one line becomes a ray.
            Vec l = *hit;
            lines.erase(hit);
            Rational al = dot(row, l);
            for (auto& m : lines) axpy(m, dot(row, m) / al, l);
            for (auto& x : rays) axpy(x, dot(row, x) / al, l);
            if (al.sign() < 0)
                for (auto& y : l) y = -y;
            rays.push_back(primitive_ray(l));
            for (auto& x : rays) x = primitive_ray(x);
            done.push_back(row);
            continue;
        }

        std::vector<Vec> pos, zero, neg;
        for (auto& x : rays) {
            int s = dot(row, x).sign();
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(x);
        }
        std::vector<Vec> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());

        // p and n are adjacent when the constraints tight on both, together
        // with the lineality space, leave a 2-dimensional face.
        if (dim < lines.size() + 2) {
            rays = std::move(next);
            done.push_back(row);
            continue;
        }
        const std::size_t need = dim - lines.size() - 2;
        for (const auto& p : pos)
            for (const auto& n : neg) {
                std::vector<Vec> tight;
                for (const auto& c : done)
                    if (dot(c, p).is_zero() && dot(c, n).is_zero()) tight.push_back(c);
                if (tight.size() < need) continue;
                if (ExactMatrix::from_rows(tight, dim).rank() != need) continue;
                Vec v(dim);
                Rational ap = dot(row, p), an = dot(row, n);
                for (std::size_t i = 0; i < dim; ++i) v[i] = ap * n[i] - an * p[i];
                v = primitive_ray(v);
                if (std::find(next.begin(), next.end(), v) == next.end()) next.push_back(std::move(v));
            }
        rays = std::move(next);
        done.push_back(row);
    }

    std::vector<Vec> out = rays;
    for (const auto& l : lines) {
        Vec c = canonical_line(l);
        Vec m = c;
        for (auto& y : m) y = -y;
        out.push_back(c);
        out.push_back(m);
    }
    return out;
}

Cone dual_cone(const Cone& c) {
    const Codim k = c.codim();
    const ExactMatrix& p = pairing_matrix(k);  // pair(g, x) = g . P x
    ExactMatrix a(c.rays().size(), k.complement().basis_size());
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
        Vec row = p.apply_left(c.rays()[i]);
        for (std::size_t j = 0; j < row.size(); ++j) a(i, j) = row[j];
    }
    return Cone::from_vectors(k.complement(), inequality_cone_generators(a, a.cols()));
}

std::optional<Vec> nonnegative_solution(const std::vector<Vec>& cols, const Vec& b) {
    const std::size_t n = b.size(), m = cols.size();
    for (const auto& c : cols)
        if (c.size() != n) throw std::invalid_argument("nonnegative_solution: length mismatch");

    // Tableau [A | I | b] with b >= 0; artificials are columns m..m+n-1.
    const std::size_t width = m + n + 1;
    ExactMatrix t(n, width);
    for (std::size_t i = 0; i < n; ++i) {
        bool flip = b[i].sign() < 0;
        for (std::size_t j = 0; j < m; ++j) t(i, j) = flip ? -cols[j][i] : cols[j][i];
        t(i, m + i) = 1;
        t(i, width - 1) = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basic(n);
    for (std::size_t i = 0; i < n; ++i) basic[i] = m + i;

    // Phase-1 objective: minimise the sum of artificials. Reduced costs of the
    // structural columns are minus the column sums.
    Vec cost(width);
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= m && j < m + n) continue;
        for (std::size_t i = 0; i < n; ++i) cost[j] -= t(i, j);
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = n;
        Rational best;
        for (std::size_t i = 0; i < n; ++i) {
            if (t(i, enter).sign() <= 0) continue;
            Rational ratio = t(i, width - 1) / t(i, enter);
            if (leave == n || ratio < best || (ratio == best && basic[i] < basic[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == n) break;  // cannot happen in phase 1: objective is bounded below

        Rational piv = t(leave, enter);
        for (std::size_t j = 0; j < width; ++j) t(leave, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == leave || t(i, enter).is_zero()) continue;
            Rational f = t(i, enter);
            for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
        }
        Rational f = cost[enter];
        for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t(leave, j);
        basic[leave] = enter;
    }

    // cost[width-1] is minus the artificial sum.
    if (!cost[width - 1].is_zero()) return std::nullopt;
    Vec x(m);
    for (std::size_t i = 0; i < n; ++i)
        if (basic[i] < m) x[basic[i]] = t(i, width - 1);
    return x;
}

Membership contains(const Cone& c, const GradedClass& x) {
    if (x.codim() != c.codim()) throw DimensionError("contains: codimension mismatch");
    Membership res;
    if (auto w = nonnegative_solution(c.rays(), x.coords())) {
        res.member = true;
        res.combination = std::move(*w);
        return res;
    }
    for (const auto& s : dual_cone(c).classes()) {
        if (pair(x, s).sign() < 0) {
            res.separator = s;
            return res;
        }
    }
    throw std::logic_error("contains: infeasible but no separating functional found");
}

std::vector<Vec> extreme_rays(const Cone& c) {
    std::vector<Vec> keep = c.rays();
    for (std::size_t i = 0; i < keep.size();) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (j != i) others.push_back(keep[j]);
        if (nonnegative_solution(others, keep[i]))
            keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return keep;
}

bool same_cone(const Cone& a, const Cone& b) {
    if (a.codim() != b.codim()) return false;
    for (const auto& r : a.rays())
        if (!nonnegative_solution(b.rays(), r)) return false;
    for (const auto& r : b.rays())
        if (!nonnegative_solution(a.rays(), r)) return false;
    return true;
}

bool same_ray_set(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& r : a)
        if (std::find(b.begin(), b.end(), primitive_ray(r)) == b.end() &&
            std::find(b.begin(), b.end(), r) == b.end())
            return false;
    return true;
}

}  // namespace hilb3
