#include "llab/lie_algebra.hpp"

#include "llab/errors.hpp"

namespace llab {

Vec Tensor3::slice(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
    return v;
}

bool LieAlgebraData::is_abelian() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (c(i, j, k) != 0) return false;
    return true;
}

Vec bracket(const LieAlgebraData& alg, const Vec& x, const Vec& y) {
    if (x.size() != alg.dim || y.size() != alg.dim)
        throw math_error("bracket: vector length does not match algebra dimension");
    Vec r(alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (y[j] == 0) continue;
            const Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < alg.dim; ++k)
                if (alg.c(i, j, k) != 0) r[k] += f * alg.c(i, j, k);
        }
    }
    return r;
}

CheckReport validate(const LieAlgebraData& alg) {
    CheckReport report;
    const std::size_t n = alg.dim;

    bool antisym = true;
    std::string antisym_detail;
    for (std::size_t i = 0; i < n && antisym; ++i)
        for (std::size_t j = 0; j < n && antisym; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.c(i, j, k) != -alg.c(j, i, k)) {
                    antisym = false;
                    antisym_detail = "first violation at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
                    break;
                }
    report.add("c[i][j][k] = -c[j][i][k]", antisym, antisym_detail);

    bool jacobi = true;
    std::string jacobi_detail;
    for (std::size_t i = 0; i < n && jacobi; ++i)
        for (std::size_t j = i + 1; j < n && jacobi; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                const Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j), el = Vec::unit(n, l);
                Vec sum = bracket(alg, bracket(alg, ei, ej), el);
                sum += bracket(alg, bracket(alg, ej, el), ei);
                sum += bracket(alg, bracket(alg, el, ei), ej);
                if (!sum.is_zero()) {
                    jacobi = false;
                    jacobi_detail = "first violation at triple (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + "," + std::to_string(l + 1) + ")";
                    break;
                }
            }
    report.add("[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", jacobi, jacobi_detail);

    return report;
}

bool is_subalgebra(const LieAlgebraData& alg, std::span<const Vec> span) {
    const Mat m = Mat::from_cols(span);
    if (m.rank() != span.size()) throw math_error("dependent span");
    for (std::size_t a = 0; a < span.size(); ++a)
        for (std::size_t b = a + 1; b < span.size(); ++b)
            if (!in_span(span, bracket(alg, span[a], span[b]))) return false;
    return true;
}

} // namespace llab
