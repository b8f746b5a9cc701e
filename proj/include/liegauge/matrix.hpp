#pragma once

#include <vector>

#include "liegauge/fraction.hpp"

namespace liegauge {

// Dense matrix over the exact coefficient field.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const FieldElem& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const FieldElem& c) const;

    bool operator==(const Mat& o) const;

    // Entrywise derivation.
    Mat derive() const;

    FieldElem trace() const;
    bool is_zero() const;

private:
    size_t rows_, cols_;
    std::vector<FieldElem> e_;
};

// Exact determinant of a square polynomial matrix by fraction-free (Bareiss)
// elimination with row pivoting.
Poly bareiss_det(std::vector<Poly> m, size_t n);

// Exact determinant over the field: denominators are cleared row by row and
// the polynomial core is handled by Bareiss elimination.
FieldElem ff_det(const Mat& m);

// Exact inverse via adjugate / determinant. Throws SingularGauge when the
// determinant vanishes.
Mat inverse(const Mat& m);

} // namespace liegauge
