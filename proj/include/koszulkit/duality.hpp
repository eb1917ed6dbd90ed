#pragma once

// The duality complexes over A = A_0 |x H and A^* = H^! |x A_0^cop.
//
// Hom spaces are modelled k-linearly: Hom_{A_0}(K_r (x) A_i, X) is stored as
// Hom(K_r (x) H_i, X), a matrix f with dim X rows, vectorized row-major (so
// vec(f) lives in X (x) (K_r (x) H_i)^*).
//
// Grading conventions:
//   I^r(X)_s     = sum_{j - i = r + s} Hom(K_r (x) H_i, X_j),  cell (r, s)
//   P^{-r}(X)_s  = sum_{i + j + r = s} H_i (x) K_r (x) X_j,     cell (-r, s)
//   socI^r(X)_s  = Hom(K_r, X_{r+s})
//   topP^{-r}(Y)_s = K^!_r (x) Y_{s-r}
// Differentials raise the first index.

#include "koszulkit/action.hpp"
#include "koszulkit/graded.hpp"
#include "koszulkit/quadratic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszulkit {

/// A graded module over A (act1 maps V (x) X_j -> X_{j+1}) or over A^*
/// (act1 maps V* (x) X_j -> X_{j+1}). Zero outside [s_min, s_max].
struct GradedAModule {
    int s_min = 0;
    std::vector<A0Module> components;
    std::map<int, Mat> act1;
    // Whether the module is known to vanish below s_min / above s_max, as
    // opposed to being truncated there.
    bool zero_below = true, zero_above = true;

    int s_max() const noexcept { return s_min + static_cast<int>(components.size()) - 1; }
    std::size_t dim(int j) const;
    /// Zero matrix when degree j carries no stored action.
    Mat act(int j, std::size_t n) const;
};

GradedAModule concentrated(const A0Module& x, int degree = 0);

enum class ModuleSide { over_a, over_dual };

/// act1 kills the relations and is A_0-equivariant:
///   over A:   v.(a.x) = a_(1).((v <| a_(2)).x)
///   over A^*: a.(xi.x) = (a_(2).xi).(a_(1).x)
AxiomCheck validate_graded_module(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& m,
                                  ModuleSide side);

/// A map (r, s) -> (r + dr, s + ds) family with d o act = sign * act o d.
struct RecordedAction {
    std::string name;
    int dr = 0, ds = 0;
    Rat sign = 1;
    std::map<Cell, Mat> maps;
};

struct DualityComplex {
    std::string construction;
    BigradedComplex complex;
    std::vector<RecordedAction> actions;
};

struct CheckResult {
    bool ok = true;
    std::string detail;
    std::optional<Cell> cell;
};

CheckResult check_equivariance(const DualityComplex& c);

/// I^r(X) for r in [-1, N], with recorded actions of the A_0 generators and
/// of V (the H_1-action (v.f)(u (x) h) = f(u (x) h v)).
DualityComplex I_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x);

/// P^{-r}(X) for r in [-1, N] with the H_1-action by left multiplication.
DualityComplex P_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x);

/// (soc I)^r(X) with differential sign (-1)^r ρ (signed, the restriction of the
/// I^• differential) or ρ (unsigned). Records the A_0 generators and the H^!_1
/// basis acting by xi |> f = f( . <| xi).
DualityComplex socI_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x,
                            bool signed_rho = true);

/// Module law a |> (xi |> f) = (a_(2).xi) |> (a_(1) |> f) and the H^!
/// action law on every cell.
CheckResult check_socI_module_laws(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x);

/// Inclusion socI -> I^• is a chain map.
CheckResult check_socI_subcomplex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x);

struct Identification {
    bool bijective = true;
    bool chain_map = true;
    bool equivariant = true;
    std::optional<Cell> first_failure;
    std::string detail;
    std::size_t cells_checked = 0;
    bool ok() const noexcept { return bijective && chain_map && equivariant; }
};

/// Theta : (H^! (x) X_j) -> Hom(K_r, X_j), xi (x) x -> (u -> <xi, u> x).
Identification identify_socI(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x);

/// (Top P)^•(Y) for a graded A^*-module Y, with the A-action (left
/// contraction by V on K^! and a.(zeta (x) y) = (a_(2).zeta) (x) a_(1) y).
DualityComplex topP_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& y);

/// zeta (x) y -> (h -> <zeta, h> y) onto I^0(Y).
Identification identify_topP(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& y);

/// A^* (x)_{A_0} X, graded by the H^! degree.
GradedAModule free_dual_module(const ActionProvider& p, const KoszulPair& kp, const A0Module& x);

/// I^•(X) against (Top P^*)^•((soc I)^•(X)) via psi-bar (X in degree 0).
Identification roundtrip_A(const ActionProvider& p, const KoszulPair& kp, const A0Module& x);
/// (soc I)^•((Top P^*)^•(X)) against P^*(X) via psi-bar (X in degree 0).
Identification roundtrip_B(const ActionProvider& p, const KoszulPair& kp, const A0Module& x);

/// P^*(X) over A^*: cells (-r, s) = H^!_{s-r} (x) K^!_r (x) X.
DualityComplex Pstar_complex(const ActionProvider& p, const KoszulPair& kp, const A0Module& x);

struct Gen85Result {
    CheckResult h0_I, h0_P, diagonal_I, diagonal_P, vanishing_I, vanishing_P;
    bool ok() const noexcept {
        return h0_I.ok && h0_P.ok && diagonal_I.ok && diagonal_P.ok && vanishing_I.ok && vanishing_P.ok;
    }
};

/// X concentrated in degree 0.
Gen85Result gen85_checks(const ActionProvider& p, const KoszulPair& kp, const A0Module& x, unsigned jobs = 1);

struct DualityVerdict {
    KoszulVerdict via_I;      // degree d read from I^• column s = -d
    KoszulVerdict via_Pstar;  // degree d read from P^* column d
    KoszulVerdict via_koszul;
    bool agree = true;
    std::optional<int> disagreement;
};

DualityVerdict koszulity_via_duality(const ActionProvider& p, const KoszulPair& kp, const A0Module& x,
                                     unsigned jobs = 1);

struct AdjunctionResult {
    std::string target;
    std::size_t hom_a = 0;     // dim hom_A(P^0(X), Y)
    std::size_t hom_a0 = 0;    // dim Hom_{A_0}(X, Y_0)
    bool ok() const noexcept { return hom_a == hom_a0; }
};

/// P^0(X) built as the quotient of A (x) X by the balancing relations, and
/// hom spaces solved as linear systems. Bialgebra providers only; targets
/// are each Z placed in degree 0 and the truncated regular module A/A_{>N}.
std::vector<AdjunctionResult> adjunction_check(const ActionProvider& p, const TruncatedGradedAlgebra& h,
                                               const A0Module& x, const std::vector<A0Module>& zs);

} // namespace koszulkit
