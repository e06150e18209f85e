#pragma once

#include "llab/check_report.hpp"
#include "llab/lie_algebra.hpp"
#include "llab/symform.hpp"

#include <array>
#include <optional>

namespace llab {

/// Execution policy for the exhaustive scans. The serial path is the
/// reference; the parallel path must produce identical results.
enum class Exec { serial, parallel };

/// Almost contact B-metric structure (phi, xi, eta, g) on a Lie algebra.
/// Conventions: phi's column j holds the coordinates of phi(e_j); eta is a
/// covector stored as its coefficient vector.
struct AcbmStructure {
    LieAlgebraData alg;
    Mat phi;
    Vec xi;
    Vec eta;
    SymForm g;

    std::size_t dim() const { return alg.dim; }

    Scalar eta_of(const Vec& x) const;
    Vec phi_of(const Vec& x) const;
};

/// Left-invariant connection, gamma[i][j][k] = coefficient of e_k in
/// nabla_{e_i} e_j.
struct Connection {
    Tensor3 gamma;

    /// Bilinear extension nabla_x y.
    Vec covariant(const Vec& x, const Vec& y) const;
};

/// Verifies every structure axiom:
///   phi^2 = -id + eta (x) xi,   eta(xi) = 1,
///   g(phi x, phi y) = -g(x,y) + eta(x) eta(y),
/// plus the consequences eta o phi = 0, phi xi = 0, eta = g(., xi),
/// g(xi, xi) = 1, rank phi = dim - 1, and signature (n+1, n).
CheckReport check_structure(const AcbmStructure& s);

/// Associated metric ~g(x,y) = g(x, phi y) + eta(x) eta(y).
SymForm associated_metric(const AcbmStructure& s);

/// Levi-Civita connection of g from the Koszul formula for left-invariant
/// fields: 2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
Connection levi_civita(const LieAlgebraData& alg, const SymForm& g);
Connection levi_civita(const AcbmStructure& s);

/// Fundamental tensor F(x,y,z) = g(nabla_x(phi y) - phi(nabla_x y), z).
Scalar f_tensor(const AcbmStructure& s, const Connection& conn, const Vec& x, const Vec& y,
                const Vec& z);

/// First basis triple (i,j,k) with F(e_i,e_j,e_k) != 0, if any. The parallel
/// path returns the same (lowest-index) witness as the serial one.
std::optional<std::array<std::size_t, 3>> f_tensor_witness(const AcbmStructure& s,
                                                           const Connection& conn,
                                                           Exec exec = Exec::serial);

struct F0Report {
    bool f_vanishes = false;
    std::optional<std::array<std::size_t, 3>> witness; // 0-based triple
    // The bracket test [x,y] = -phi[phi x, y] decides membership only for
    // non-Abelian structures ([phi x, phi y] = -[x,y] with some bracket
    // nonzero); for Abelian algebras it is reported as not applicable.
    bool bracket_criterion_applicable = false;
    bool bracket_criterion_holds = false;

    bool is_f0() const { return f_vanishes; }
    bool criteria_agree() const {
        return !bracket_criterion_applicable || bracket_criterion_holds == f_vanishes;
    }
};

F0Report classify_f0(const AcbmStructure& s, const Connection& conn, Exec exec = Exec::serial);

} // namespace llab
