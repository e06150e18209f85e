#pragma once

#include "llab/linalg.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace llab {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// Symmetric bilinear form given by its Gram matrix on a basis.
class SymForm {
public:
    explicit SymForm(Mat gram);

    std::size_t dim() const { return gram_.rows(); }
    const Mat& gram() const { return gram_; }

    Scalar eval(const Vec& x, const Vec& y) const;

    /// Gram matrix of the form restricted to the given vectors.
    SymForm restricted(std::span<const Vec> basis) const;

    friend bool operator==(const SymForm&, const SymForm&) = default;

private:
    Mat gram_;
};

/// Counts of positive/negative/zero directions, computed by exact symmetric
/// congruence reduction (no square roots, no eigenvalues).
Signature signature(const SymForm& form);

/// Basis of the null space of `form` restricted to span(restricted_to),
/// returned in ambient coordinates. Throws math_error("degenerate frame
/// input") when the input vectors are linearly dependent.
std::vector<Vec> kernel(const SymForm& form, std::span<const Vec> restricted_to);

/// Metric trace of a vector-valued bilinear form via the inverse Gram matrix:
/// sum_ij G^{-1}[i][j] * values[i][j]. Throws math_error("trace over
/// degenerate form") when the Gram matrix is singular.
Vec signed_trace(const SymForm& form_on_basis, const std::vector<std::vector<Vec>>& values);

/// Scalar-valued variant of the same trace.
Scalar signed_trace(const SymForm& form_on_basis, const Mat& values);

} // namespace llab
