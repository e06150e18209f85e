#pragma once

#include "llab/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace llab {

/// Column vector of exact rationals with a fixed length.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : e_(n, Scalar(0)) {}
    Vec(std::initializer_list<Scalar> init) : e_(init) {}

    static Vec unit(std::size_t n, std::size_t i);

    std::size_t size() const { return e_.size(); }
    Scalar& operator[](std::size_t i) { return e_[i]; }
    const Scalar& operator[](std::size_t i) const { return e_[i]; }

    auto begin() { return e_.begin(); }
    auto end() { return e_.end(); }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool is_zero() const;

    Vec& operator+=(const Vec& rhs);
    Vec& operator-=(const Vec& rhs);
    Vec& operator*=(const Scalar& c);

    friend Vec operator+(Vec lhs, const Vec& rhs) { return lhs += rhs; }
    friend Vec operator-(Vec lhs, const Vec& rhs) { return lhs -= rhs; }
    friend Vec operator*(const Scalar& c, Vec v) { return v *= c; }
    friend Vec operator-(Vec v);

    friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }

private:
    std::vector<Scalar> e_;
};

/// Dense rational matrix. All reductions (rank, solve, inverse, nullspace,
/// determinant) run exact fraction-pivoted Gaussian elimination.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

    static Mat identity(std::size_t n);
    static Mat from_cols(std::span<const Vec> cols);
    static Mat from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;

    Mat transpose() const;

    Mat& operator+=(const Mat& rhs);
    Mat& operator-=(const Mat& rhs);
    friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
    friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& m, const Vec& v);
    friend Mat operator*(const Scalar& c, Mat m);

    friend bool operator==(const Mat& a, const Mat& b);

    bool is_zero() const;

    std::size_t rank() const;
    Scalar det() const;
    std::optional<Mat> inverse() const;

    /// Basis of {x : A x = 0}; each vector has a leading 1 at its free column.
    std::vector<Vec> nullspace() const;

    /// One exact solution of A x = b (free variables set to 0), or nullopt
    /// when the system is inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// True iff target is a rational combination of the given vectors.
bool in_span(std::span<const Vec> vectors, const Vec& target);

} // namespace llab
