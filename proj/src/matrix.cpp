#include "hilb3/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hilb3 {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec ExactMatrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec ExactMatrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

Vec ExactMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Vec ExactMatrix::apply_left(const Vec& y) const {
    if (y.size() != rows_) throw std::invalid_argument("apply_left: length mismatch");
    Vec r(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (y[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) r[j] += y[i] * (*this)(i, j);
    }
    return r;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack: row count mismatch");
    ExactMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

Echelon ExactMatrix::rref() const {
    Echelon e{*this, {}};
    ExactMatrix& m = e.form;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t ExactMatrix::rank() const { return rref().pivots.size(); }

std::vector<Vec> ExactMatrix::nullspace() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec w(cols_);
        w[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) w[e.pivots[k]] = -e.form(k, f);
        basis.push_back(std::move(w));
    }
    return basis;
}

std::optional<Vec> ExactMatrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: length mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    Echelon e = aug.rref();
    if (!e.pivots.empty() && e.pivots.back() == cols_) return std::nullopt;
    Vec x(cols_);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.form(k, cols_);
    return x;
}

RowSpaceResult in_row_space(const ExactMatrix& m, const Vec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    RowSpaceResult res;
    if (auto y = m.transpose().solve(v)) {
        res.member = true;
        res.combination = std::move(*y);
        return res;
    }
    // v is not orthogonal to ker(M), so some kernel basis vector detects it.
    for (auto& w : m.nullspace()) {
        if (!dot(v, w).is_zero()) {
            res.witness = std::move(w);
            return res;
        }
    }
    throw std::logic_error("in_row_space: no witness found for a non-member");
}

}  // namespace hilb3
