#include "llab/symform.hpp"

#include "llab/errors.hpp"

#include <cassert>
#include <utility>

namespace llab {

std::string to_string(const Signature& s) {
    return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
           std::to_string(s.zero) + ")";
}

SymForm::SymForm(Mat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw math_error("Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i)) throw math_error("Gram matrix must be symmetric");
}

Scalar SymForm::eval(const Vec& x, const Vec& y) const {
    assert(x.size() == dim() && y.size() == dim());
    Scalar r(0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (gram_(i, j) != 0) r += x[i] * gram_(i, j) * y[j];
    }
    return r;
}

SymForm SymForm::restricted(std::span<const Vec> basis) const {
    Mat g(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            g(a, b) = eval(basis[a], basis[b]);
            g(b, a) = g(a, b);
        }
    return SymForm(std::move(g));
}

Signature signature(const SymForm& form) {
    Mat d = form.gram();
    const std::size_t n = d.rows();

    const auto swap_basis = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(d(i, a), d(i, b));
    };
    // basis_a += basis_b, applied as a congruence (row then column update)
    const auto add_basis = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) d(a, j) += d(b, j);
        for (std::size_t i = 0; i < n; ++i) d(i, a) += d(i, b);
    };

    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (d(k, k) == 0) {
            std::size_t p = k;
            while (p < n && d(p, p) == 0) ++p;
            if (p < n) {
                swap_basis(k, p);
            } else {
                // all remaining diagonal entries vanish; look off-diagonal
                std::size_t i = n, j = n;
                for (std::size_t a = k; a < n && i == n; ++a)
                    for (std::size_t b = a + 1; b < n; ++b)
                        if (d(a, b) != 0) {
                            i = a;
                            j = b;
                            break;
                        }
                if (i == n) {
                    sig.zero = n - k; // zero block
                    break;
                }
                add_basis(i, j); // makes d(i,i) = 2 d(i,j) != 0
                if (i != k) swap_basis(k, i);
            }
        }
        const Scalar pivot = d(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (d(i, k) == 0) continue;
            const Scalar f = d(i, k) / pivot;
            for (std::size_t j = 0; j < n; ++j) d(i, j) -= f * d(k, j);
            for (std::size_t r = 0; r < n; ++r) d(r, i) -= f * d(r, k);
        }
        if (sgn(pivot) > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

std::vector<Vec> kernel(const SymForm& form, std::span<const Vec> restricted_to) {
    const Mat span_matrix = Mat::from_cols(restricted_to);
    if (span_matrix.rank() != restricted_to.size()) throw math_error("degenerate frame input");

    const SymForm g = form.restricted(restricted_to);
    std::vector<Vec> out;
    for (const Vec& coeff : g.gram().nullspace()) {
        Vec ambient(form.dim());
        for (std::size_t a = 0; a < restricted_to.size(); ++a)
            if (coeff[a] != 0) ambient += coeff[a] * restricted_to[a];
        out.push_back(std::move(ambient));
    }
    return out;
}

Vec signed_trace(const SymForm& form_on_basis, const std::vector<std::vector<Vec>>& values) {
    const auto inv = form_on_basis.gram().inverse();
    if (!inv) throw math_error("trace over degenerate form");
    const std::size_t n = form_on_basis.dim();
    assert(values.size() == n);
    Vec acc(values[0][0].size());
    for (std::size_t i = 0; i < n; ++i) {
        assert(values[i].size() == n);
        for (std::size_t j = 0; j < n; ++j)
            if ((*inv)(i, j) != 0) acc += (*inv)(i, j) * values[i][j];
    }
    return acc;
}

Scalar signed_trace(const SymForm& form_on_basis, const Mat& values) {
    const auto inv = form_on_basis.gram().inverse();
    if (!inv) throw math_error("trace over degenerate form");
    Scalar acc(0);
    for (std::size_t i = 0; i < form_on_basis.dim(); ++i)
        for (std::size_t j = 0; j < form_on_basis.dim(); ++j) acc += (*inv)(i, j) * values(i, j);
    return acc;
}

} // namespace llab
