#include "llab/linalg.hpp"

#include "llab/errors.hpp"

#include <cassert>
#include <utility>

namespace llab {

Vec Vec::unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool Vec::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

Vec& Vec::operator+=(const Vec& rhs) {
    assert(size() == rhs.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& rhs) {
    assert(size() == rhs.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= rhs.e_[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

Vec operator-(Vec v) {
    for (auto& x : v.e_) x = -x;
    return v;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_cols(std::span<const Vec> cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j].size() == m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        assert(r.size() == m.cols_);
        std::size_t j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat& Mat::operator+=(const Mat& rhs) {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec operator*(const Mat& m, const Vec& v) {
    assert(m.cols_ == v.size());
    Vec r(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j)
            if (m(i, j) != 0) r[i] += m(i, j) * v[j];
    return r;
}

Mat operator*(const Scalar& c, Mat m) {
    for (auto& x : m.a_) x *= c;
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

namespace {

struct Echelon {
    Mat m;                          // row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
    int det_sign = 1;               // sign from row swaps (square input only)
    Scalar det_product = 1;         // product of pivots while square & full
};

// Fraction-free style is unnecessary with GMP rationals; plain division
// pivoting keeps entries reduced at every step.
Echelon echelon(Mat m) {
    Echelon e{Mat(0, 0), {}, 1, Scalar(1)};
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
            e.det_sign = -e.det_sign;
        }
        e.det_product *= m(r, c);
        const Scalar inv_pivot = Scalar(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

std::size_t Mat::rank() const {
    return echelon(*this).pivots.size();
}

Scalar Mat::det() const {
    assert(rows_ == cols_);
    const Echelon e = echelon(*this);
    if (e.pivots.size() < rows_) return Scalar(0);
    return e.det_sign > 0 ? e.det_product : -e.det_product;
}

std::optional<Mat> Mat::inverse() const {
    assert(rows_ == cols_);
    Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = 1;
    }
    const Echelon e = echelon(std::move(aug));
    if (e.pivots.size() < rows_ || e.pivots[rows_ - 1] >= cols_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = e.m(i, cols_ + j);
    return inv;
}

std::vector<Vec> Mat::nullspace() const {
    const Echelon e = echelon(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_);
        v[free] = 1;
        for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
            v[e.pivots[pr]] = -e.m(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
    assert(b.size() == rows_);
    Mat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    const Echelon e = echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == cols_) return std::nullopt; // 0 = 1 row
    Vec x(cols_);
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr) x[e.pivots[pr]] = e.m(pr, cols_);
    return x;
}

bool in_span(std::span<const Vec> vectors, const Vec& target) {
    if (target.is_zero()) return true;
    if (vectors.empty()) return false;
    const Mat a = Mat::from_cols(vectors);
    return a.solve(target).has_value();
}

} // namespace llab
