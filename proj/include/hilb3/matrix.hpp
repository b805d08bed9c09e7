#pragma once

#include "hilb3/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace hilb3 {

struct Echelon;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    // All rows must have length `cols`; `cols` matters only when rows is empty.
    static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    Vec apply(const Vec& v) const;          // M v
    Vec apply_left(const Vec& y) const;     // y^T M
    ExactMatrix hstack(const ExactMatrix& o) const;

    Echelon rref() const;
    std::size_t rank() const;

    // Basis of { w : M w = 0 }, one vector per free column.
    std::vector<Vec> nullspace() const;

    // Some x with M x = b, free variables set to zero; nullopt if inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec a_;
};

struct Echelon {
    ExactMatrix form;
    std::vector<std::size_t> pivots;
};

struct RowSpaceResult {
    bool member = false;
    Vec combination;  // y with y^T M = v, when member
    Vec witness;      // w with M w = 0 and v.w != 0, when not
};

RowSpaceResult in_row_space(const ExactMatrix& m, const Vec& v);

}  // namespace hilb3
