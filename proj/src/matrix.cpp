#include "liegauge/matrix.hpp"

#include "liegauge/errors.hpp"

namespace liegauge {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem(1);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    Mat out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const FieldElem& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

Mat Mat::operator*(const FieldElem& c) const {
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
    return out;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

Mat Mat::derive() const {
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].derive();
    return out;
}

FieldElem Mat::trace() const {
    FieldElem t;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

Poly bareiss_det(std::vector<Poly> m, size_t n) {
    if (n == 0) return Poly(Scalar(1));
    auto at = [&](size_t i, size_t j) -> Poly& { return m[i * n + j]; };
    Poly prev(Scalar(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            size_t p = k + 1;
            while (p < n && at(p, k).is_zero()) ++p;
            if (p == n) return Poly(); // zero column: singular
            for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                auto q = v.divide_exact(prev);
                if (!q) throw Error("internal: Bareiss division not exact");
                at(i, j) = *q;
            }
            at(i, k) = Poly();
        }
        prev = at(k, k);
    }
    Poly det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

FieldElem ff_det(const Mat& m) {
    if (m.rows() != m.cols()) throw DegenerateInput("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return FieldElem(1);
    // Clear denominators row by row, tracking the overall scale.
    std::vector<Poly> cleared(n * n);
    Poly scale(Scalar(1));
    for (size_t i = 0; i < n; ++i) {
        std::vector<Poly> dens;
        Poly row_den(Scalar(1));
        for (size_t j = 0; j < n; ++j) {
            dens.push_back(m.at(i, j).den());
            row_den *= dens.back();
        }
        scale *= row_den;
        for (size_t j = 0; j < n; ++j) {
            Poly e = m.at(i, j).num();
            for (size_t k = 0; k < n; ++k)
                if (k != j) e *= dens[k];
            cleared[i * n + j] = e;
        }
    }
    Poly det = bareiss_det(std::move(cleared), n);
    return FieldElem(det, scale);
}

namespace {

Mat minor_matrix(const Mat& m, size_t drop_row, size_t drop_col) {
    size_t n = m.rows();
    Mat out(n - 1, n - 1);
    size_t r = 0;
    for (size_t i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        size_t c = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            out.at(r, c) = m.at(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

} // namespace

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DegenerateInput("inverse of non-square matrix");
    size_t n = m.rows();
    FieldElem det = ff_det(m);
    if (det.is_zero()) throw SingularGauge("matrix is singular");
    Mat inv(n, n);
    if (n == 1) {
        inv.at(0, 0) = FieldElem(1) / det;
        return inv;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldElem cof = ff_det(minor_matrix(m, i, j));
            if (((i + j) & 1) != 0) cof = -cof;
            inv.at(j, i) = cof / det; // adjugate transposes
        }
    return inv;
}

} // namespace liegauge
