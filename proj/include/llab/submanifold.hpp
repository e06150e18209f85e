#pragma once

#include "llab/bstructure.hpp"
#include "llab/check_report.hpp"

#include <optional>
#include <vector>

namespace llab {

/// Complete frame of a half lightlike submanifold:
///   TM = Rad(TM) (+) S(TM),   ambient = TM (+) span{N} (+) span{L},
/// with rad spanning Rad(TM), N the null transversal pairing with rad
/// (g(N, rad) = 1, g(N, N) = 0) and L the unit screen transversal.
/// For radical-screen-transversal frames phi(rad) = mu L with mu != 0 and
/// the sign convention eta(rad) = +mu.
struct SubmanifoldFrame {
    std::vector<Vec> tangent_basis; // as supplied, ambient coordinates
    Vec rad;
    std::vector<Vec> screen;
    Vec N;
    Vec L;
    Scalar mu;       // 0 when the frame is not radical screen transversal
    Scalar eps;      // g(L, L), +1 or -1
    bool rsthl = false;

    /// Tabulation basis of TM used by every induced-object table: rad first,
    /// then the screen vectors.
    std::vector<Vec> tm_basis() const;

    /// Basis of the ambient space: rad, screen..., N, L.
    std::vector<Vec> full_frame() const;
};

struct RadicalResult {
    std::size_t rank = 0;
    std::vector<Vec> basis; // ambient coordinates
};

/// Kernel of the induced metric on a Lie subalgebra. Throws
/// math_error("not a Lie subalgebra") when the span is not closed under the
/// bracket, math_error("dependent span") on dependent input.
RadicalResult radical(const AcbmStructure& s, std::span<const Vec> tangent_basis);

/// Builds the half lightlike frame. The radical generator is normalized to
/// leading coefficient 1 over the tangent basis, then flipped so that
/// eta(rad) >= 0. N solves g(N, screen) = 0, g(N, L) = 0, g(N, rad) = 1
/// followed by the null correction N -> N - (1/2) g(N,N) rad, which keeps
/// the linear constraints because rad is radical.
/// Throws math_error("not half lightlike") unless the radical has rank 1 and
/// the codimension is 2; math_error("screen must be non-degenerate") for a
/// bad screen hint.
SubmanifoldFrame build_frame(const AcbmStructure& s, std::span<const Vec> tangent_basis,
                             std::optional<std::vector<Vec>> screen_hint = std::nullopt);

/// Re-checks every frame invariant; throws math_error on the first violation.
/// Runs automatically at the end of build_frame.
void audit_frame(const AcbmStructure& s, const SubmanifoldFrame& frame);

struct Classification {
    bool rsthl = false;       // phi(Rad(TM)) = S(TM^perp)
    bool tangential = false;  // ambient Reeb field tangent to M
    bool ascreen = false;     // ambient Reeb field in Rad(TM) (+) ltr(TM)
    bool generic_screen = false; // phi(rad) falls inside the screen ([J]-style)
    Scalar mu;
    CheckReport consistency;  // structural consequences of the flags
};

Classification classify(const AcbmStructure& s, const SubmanifoldFrame& frame);

/// Exact checks of the ascreen radical-screen-transversal frame relations:
///   phi rad = mu L, eta(L) = 0, g(L,L) = 1, eta(rad) = mu,
///   xibar = (1/(2mu)) rad + mu N, eta(N) = 1/(2mu),
///   phi N = -(1/(2mu)) L, phi L = -(1/(2mu)) rad + mu N,
/// plus phi(ltr) = S(TM^perp) and phi(S(TM)) = S(TM).
/// Throws math_error unless classify reports an ascreen RSTHL frame.
CheckReport verify_ascreen_relations(const AcbmStructure& s, const SubmanifoldFrame& frame);

/// Normal bundle of (M, ~g) as a codimension-2 semi-Riemannian submanifold:
/// N1 = xibar - L and N2 = 2 xibar - 2 mu N - L form a ~g-orthonormal normal
/// frame with ~g(N1,N1) = -~g(N2,N2) = 1; TM splits ~g-orthogonally into the
/// screen and the (spacelike) radical with ~g(rad, rad) = mu^2 and screen
/// signature (n-1, n-1).
struct NormalBundleReport {
    Vec n1, n2;
    CheckReport checks;
};

NormalBundleReport normal_bundle_check(const AcbmStructure& s, const SubmanifoldFrame& frame);

} // namespace llab
