#pragma once

#include "llab/check_report.hpp"
#include "llab/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace llab {

/// Rank-3 array of rationals, c[i][j][k], dense over a fixed dimension.
class Tensor3 {
public:
    Tensor3() : dim_(0) {}
    explicit Tensor3(std::size_t dim) : dim_(dim), a_(dim * dim * dim, Scalar(0)) {}

    std::size_t dim() const { return dim_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * dim_ + j) * dim_ + k];
    }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * dim_ + j) * dim_ + k];
    }

    /// The vector c[i][j][.].
    Vec slice(std::size_t i, std::size_t j) const;

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

private:
    std::size_t dim_;
    std::vector<Scalar> a_;
};

/// Lie algebra of left-invariant fields, fixed basis, structure constants
/// c[i][j][k] meaning [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieAlgebraData {
    std::size_t dim = 0;
    Tensor3 c;

    explicit LieAlgebraData(std::size_t dimension) : dim(dimension), c(dimension) {}

    bool is_abelian() const;
};

/// Bilinear extension of the structure constants; antisymmetric by
/// antisymmetry of c. Throws math_error on dimension mismatch.
Vec bracket(const LieAlgebraData& alg, const Vec& x, const Vec& y);

/// Antisymmetry and Jacobi, both exhaustive over basis tuples. Failures are
/// report entries carrying the first violating tuple.
CheckReport validate(const LieAlgebraData& alg);

/// True iff the bracket of every pair of span vectors stays inside
/// span(span). Throws math_error("dependent span") on dependent input.
bool is_subalgebra(const LieAlgebraData& alg, std::span<const Vec> span);

} // namespace llab
