#include "llab/bstructure.hpp"

#include "llab/errors.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace llab {

Scalar AcbmStructure::eta_of(const Vec& x) const {
    Scalar r(0);
    for (std::size_t i = 0; i < dim(); ++i)
        if (eta[i] != 0) r += eta[i] * x[i];
    return r;
}

Vec AcbmStructure::phi_of(const Vec& x) const {
    return phi * x;
}

Vec Connection::covariant(const Vec& x, const Vec& y) const {
    const std::size_t n = gamma.dim();
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (gamma(i, j, k) != 0) r[k] += f * gamma(i, j, k);
        }
    }
    return r;
}

CheckReport check_structure(const AcbmStructure& s) {
    CheckReport report;
    const std::size_t n = s.dim();
    const Mat& g = s.g.gram();

    {
        // phi^2 = -id + xi eta^T
        Mat expected = Mat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) expected(i, j) = -expected(i, j) + s.xi[i] * s.eta[j];
        const Mat phi2 = s.phi * s.phi;
        std::string detail;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            if (phi2.col(j) != expected.col(j)) {
                ok = false;
                detail = "fails on basis vector " + std::to_string(j + 1);
            }
        report.add("phi^2 x = -x + eta(x) xi", ok, detail);
    }

    report.add("eta(xi) = 1", s.eta_of(s.xi) == 1);

    {
        // g(phi x, phi y) = -g(x,y) + eta(x) eta(y), as matrices
        const Mat lhs = s.phi.transpose() * g * s.phi;
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (lhs(i, j) != -g(i, j) + s.eta[i] * s.eta[j]) {
                    ok = false;
                    detail = "fails at basis pair (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")";
                    break;
                }
        report.add("g(phi x, phi y) = -g(x,y) + eta(x) eta(y)", ok, detail);
    }

    {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc(0);
            for (std::size_t i = 0; i < n; ++i) acc += s.eta[i] * s.phi(i, j);
            if (acc != 0) ok = false;
        }
        report.add("eta(phi x) = 0", ok);
    }

    report.add("phi xi = 0", s.phi_of(s.xi).is_zero());

    {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j)
            if (s.eta[j] != s.g.eval(Vec::unit(n, j), s.xi)) ok = false;
        report.add("eta(x) = g(x, xi)", ok);
    }

    report.add("g(xi, xi) = 1", s.g.eval(s.xi, s.xi) == 1);

    report.add("dim = 2n + 1", n % 2 == 1, "dim = " + std::to_string(n));
    report.add("rank phi = dim - 1", s.phi.rank() == n - 1);

    {
        const Signature sig = signature(s.g);
        const Signature expected{n / 2 + 1, n / 2, 0};
        report.add("signature of g = (n+1, n)", sig == expected, to_string(sig));
    }

    return report;
}

SymForm associated_metric(const AcbmStructure& s) {
    const std::size_t n = s.dim();
    const Mat gp = s.g.gram() * s.phi;
    Mat gt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gt(i, j) = gp(i, j) + s.eta[i] * s.eta[j];
    return SymForm(std::move(gt));
}

Connection levi_civita(const LieAlgebraData& alg, const SymForm& g) {
    const std::size_t n = alg.dim;
    const auto ginv = g.gram().inverse();
    if (!ginv) throw math_error("metric is degenerate");

    Connection conn{Tensor3(n)};
    // brackets of basis vectors, then one linear solve per pair
    std::vector<std::vector<Vec>> bk(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) bk[i][j] = alg.c.slice(i, j);

    const auto pair_with = [&](const Vec& v, std::size_t l) {
        // g(v, e_l)
        Scalar r(0);
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] != 0) r += v[k] * g.gram()(k, l);
        return r;
    };

    const Scalar half = rat(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec rhs(n);
            for (std::size_t l = 0; l < n; ++l)
                rhs[l] = half * (pair_with(bk[i][j], l) - pair_with(bk[j][l], i) +
                                 pair_with(bk[l][i], j));
            const Vec coeffs = *ginv * rhs;
            for (std::size_t k = 0; k < n; ++k) conn.gamma(i, j, k) = coeffs[k];
        }
    return conn;
}

Connection levi_civita(const AcbmStructure& s) {
    return levi_civita(s.alg, s.g);
}

Scalar f_tensor(const AcbmStructure& s, const Connection& conn, const Vec& x, const Vec& y,
                const Vec& z) {
    const Vec nabla_phi_y = conn.covariant(x, s.phi_of(y)) - s.phi_of(conn.covariant(x, y));
    return s.g.eval(nabla_phi_y, z);
}

namespace {

// (nabla_{e_i} phi)(e_j) in ambient coordinates; F(e_i,e_j,e_k) pairs it with e_k.
Vec nabla_phi(const AcbmStructure& s, const Connection& conn, std::size_t i, std::size_t j) {
    const std::size_t n = s.dim();
    return conn.covariant(Vec::unit(n, i), s.phi.col(j)) -
           s.phi_of(conn.covariant(Vec::unit(n, i), Vec::unit(n, j)));
}

} // namespace

std::optional<std::array<std::size_t, 3>> f_tensor_witness(const AcbmStructure& s,
                                                           const Connection& conn, Exec exec) {
    const std::size_t n = s.dim();
    const std::size_t total = n * n;

    std::int64_t best = -1; // flattened (i,j,k) of the lowest witness
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t flat = 0; flat < static_cast<std::int64_t>(total); ++flat) {
            const std::size_t i = static_cast<std::size_t>(flat) / n;
            const std::size_t j = static_cast<std::size_t>(flat) % n;
            const Vec w = nabla_phi(s, conn, i, j);
            if (w.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (s.g.eval(w, Vec::unit(n, k)) != 0) {
                    const std::int64_t idx = flat * static_cast<std::int64_t>(n) +
                                             static_cast<std::int64_t>(k);
#pragma omp critical(llab_f_witness)
                    {
                        if (best < 0 || idx < best) best = idx;
                    }
                    break;
                }
            }
        }
        if (best < 0) return std::nullopt;
        const std::size_t k = static_cast<std::size_t>(best) % n;
        const std::size_t j = (static_cast<std::size_t>(best) / n) % n;
        const std::size_t i = static_cast<std::size_t>(best) / (n * n);
        return std::array<std::size_t, 3>{i, j, k};
    }
#else
    (void)exec;
#endif

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec w = nabla_phi(s, conn, i, j);
            if (w.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (s.g.eval(w, Vec::unit(n, k)) != 0) return std::array<std::size_t, 3>{i, j, k};
        }
    (void)best;
    return std::nullopt;
}

F0Report classify_f0(const AcbmStructure& s, const Connection& conn, Exec exec) {
    F0Report report;
    report.witness = f_tensor_witness(s, conn, exec);
    report.f_vanishes = !report.witness.has_value();

    const std::size_t n = s.dim();
    bool structure_non_abelian = !s.alg.is_abelian();
    bool bracket_holds = true;
    for (std::size_t i = 0; i < n && structure_non_abelian; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j);
            // non-Abelian structure: [phi x, phi y] = -[x, y]
            if (bracket(s.alg, s.phi_of(ei), s.phi_of(ej)) != -bracket(s.alg, ei, ej)) {
                structure_non_abelian = false;
                break;
            }
        }
    report.bracket_criterion_applicable = structure_non_abelian;
    if (structure_non_abelian) {
        for (std::size_t i = 0; i < n && bracket_holds; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j);
                // membership test: [x, y] = -phi [phi x, y]
                if (bracket(s.alg, ei, ej) != -s.phi_of(bracket(s.alg, s.phi_of(ei), ej))) {
                    bracket_holds = false;
                    break;
                }
            }
        report.bracket_criterion_holds = bracket_holds;
    }
    return report;
}

} // namespace llab
