#pragma once

// The A_0 side: bialgebras given by structure constants, Lie algebras acting
// by derivations (standing in for U(g) through PBW monomials), module
// algebras, smash products and Takiff algebras.
//
// Elements of A_0 are sparse combinations of keys:
//  - bialgebra: key {i} is basis element e_i;
//  - Lie: key {a_1 <= ... <= a_k} is the PBW monomial x_{a_1} ... x_{a_k}.
// Right actions on V are stored as matrices acting on column vectors, so
// v <| (ab) = R(b) R(a) v.

#include "koszulkit/exactlin.hpp"
#include "koszulkit/quadratic.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace koszulkit {

using A0Key = std::vector<int>;
using A0Elem = std::map<A0Key, Rat>;
using A0Tensor = std::map<std::pair<A0Key, A0Key>, Rat>;

/// Structure constants. mult[i * dim + j] holds the coordinates of e_i e_j,
/// comult[i] the coordinates of Delta(e_i) in the flattened A (x) A.
struct Bialgebra {
    std::size_t dim = 0;
    std::vector<Vec> mult;
    Vec unit;
    std::vector<Vec> comult;
    Vec counit;
};

struct AxiomCheck {
    bool ok = true;
    std::string axiom;               // name of the first violated axiom
    std::vector<std::size_t> where;  // basis indices involved
};

AxiomCheck validate_bialgebra(const Bialgebra& b);

struct LieAlgebra {
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> bracket;  // bracket[a][b] = coordinates of [x_a, x_b]
    std::size_t dim() const noexcept { return basis.size(); }
};

/// Parities 0/1 per basis element; all even gives the plain Jacobi identity.
/// Checks (super-)antisymmetry and (super-)Jacobi on all basis triples.
AxiomCheck validate_lie(const LieAlgebra& g, const std::vector<int>& parity = {});

/// A finite-dimensional left A_0-module, by the action of generators
/// (bialgebra basis elements, or Lie basis elements).
struct A0Module {
    std::size_t dim = 0;
    std::vector<Mat> action;
};

class ActionProvider {
public:
    enum class Kind { bialgebra, lie };

    /// `action[i]` is the right action matrix of e_i on V.
    static ActionProvider from_bialgebra(Bialgebra b, std::vector<Mat> action);
    /// `rho[a]` is the left representation matrix of x_a on V; the right
    /// action is v <| x = -rho(x) v.
    static ActionProvider from_lie(LieAlgebra g, std::vector<Mat> rho);

    Kind kind() const noexcept { return kind_; }
    std::size_t v_dim() const noexcept { return v_dim_; }
    const Bialgebra& bialgebra() const { return bialg_; }
    const LieAlgebra& lie() const { return lie_; }

    A0Elem one() const;
    A0Elem multiply(const A0Elem& x, const A0Elem& y) const;
    A0Tensor coproduct(const A0Key& k) const;
    Rat counit(const A0Key& k) const;
    bool cocommutative() const;

    /// Generators of A_0 as an algebra (used for validation loops).
    std::vector<A0Key> generators() const;
    /// Spanning set used for associativity checks: the bialgebra basis, or
    /// {1} together with the Lie generators.
    std::vector<A0Key> test_basis() const;

    /// R(k): v -> v <| k on V.
    Mat act_on_v(const A0Key& k) const;
    /// Left action of k on a test module.
    Mat act_on_module(const A0Module& m, const A0Key& k) const;

    std::vector<std::pair<std::string, A0Module>> modules;

private:
    Kind kind_ = Kind::bialgebra;
    std::size_t v_dim_ = 0;
    Bialgebra bialg_;
    LieAlgebra lie_;
    std::vector<Mat> gen_action_;  // right action on V of each generator
    mutable std::map<std::vector<int>, A0Elem> pbw_cache_;
    A0Elem pbw_normal_form(const std::vector<int>& word) const;
};

AxiomCheck validate_module(const ActionProvider& p, const A0Module& m);

/// Right action of k on V^{(x) r} via the iterated coproduct.
Mat act_on_tensor(const ActionProvider& p, const A0Key& k, int r);

/// Left action of k on (V*)^{(x) r} dual to the right action under the
/// reversed pairing: <k . zeta, u> = <zeta, u <| k>.
Mat dual_act_on_tensor(const ActionProvider& p, const A0Key& k, int r);

/// Induced action of k on H_i (projection . act . section).
Mat act_on_h(const ActionProvider& p, const TruncatedGradedAlgebra& h, const A0Key& k, int i);
/// Induced left action of k on H^!_i.
Mat dual_act_on_h(const ActionProvider& p, const TruncatedGradedAlgebra& dual, const A0Key& k, int i);

struct ModuleAlgebraCheck {
    bool ok = true;
    std::string reason;
    std::optional<A0Key> generator;
    Vec offending;  // relation vector mapped outside R
};

/// R stable under every generator and the unit law in degree 0.
ModuleAlgebraCheck validate_module_algebra(const ActionProvider& p, const QuadraticPresentation& q);
/// Same for the dual relations under the dual action.
ModuleAlgebraCheck validate_dual_module_algebra(const ActionProvider& p, const QuadraticPresentation& q);

/// Sparse smash element keyed by (A_0 key, H degree, H basis index).
using SmashKey = std::tuple<A0Key, int, std::size_t>;
using SmashElem = std::map<SmashKey, Rat>;

/// right:  A_0 |x H    (a (x) h)(a' (x) h') = a a'_(1) (x) (h <| a'_(2)) h'
/// left:   H^! |x A_0^cop, stored as (b, h) for h (x) b,
///         (h (x) b)(h' (x) b') = h (b_(2) . h') (x) b_(1) b'
class SmashAlgebra {
public:
    enum class Side { right, left };
    SmashAlgebra(const ActionProvider& p, const TruncatedGradedAlgebra& h, Side side);

    Side side() const noexcept { return side_; }
    int max_degree() const noexcept { return h_->max_degree(); }

    /// Terms whose H-degree exceeds the truncation throw WindowError.
    SmashElem multiply(const SmashElem& x, const SmashElem& y) const;
    SmashElem basis_element(const A0Key& a, int deg, std::size_t idx) const;

    struct AssocResult {
        bool ok = true;
        std::size_t triples = 0;
        std::optional<std::tuple<SmashKey, SmashKey, SmashKey>> failure;
    };
    /// All triples of test-basis (x) H-basis elements with total degree <= N.
    AssocResult check_associativity() const;

private:
    const ActionProvider* p_;
    const TruncatedGradedAlgebra* h_;
    Side side_;
    mutable std::map<std::pair<A0Key, int>, Mat> action_cache_;
    const Mat& h_action(const A0Key& k, int i) const;
};

// ---------------------------------------------------------------- Takiff

enum class Parity { even, super };

struct TakiffLie {
    LieAlgebra algebra;      // basis: g then V
    std::vector<int> parity; // 0 on g, 0 or 1 on V
    std::size_t g_dim = 0, v_dim = 0;
    Parity kind = Parity::even;
};

/// g |x V with V abelian. Even: [x, v] = x v = -[v, x]. Super: V odd, with
/// the super-antisymmetric extension of [x, v] = x v.
TakiffLie takiff(const LieAlgebra& g, const std::vector<Mat>& rho, Parity parity);

/// The bracket obtained by reading [(x,v),(x',v')] = ([x,x'], x v' + x' v)
/// bilinearly on basis vectors. It is not super-antisymmetric.
LieAlgebra literal_super_takiff(const LieAlgebra& g, const std::vector<Mat>& rho);

struct EnvelopingCheck {
    bool ok = true;
    std::vector<std::size_t> dims;      // V-degree dims of the algebra of V-relations
    std::vector<std::size_t> expected;  // S(V) or Lambda(V)
    bool commutators_ok = true;         // [x, v] equals the smash commutator
};

/// Compares U(s) graded by V-degree (k <= max_k) with U(g) |x S(V) (even)
/// or Lambda(V) |x U(g) (super) by dimension, and checks [x, v] against the
/// commutator x v - v x computed in the smash product.
EnvelopingCheck check_enveloping(const TakiffLie& t, const std::vector<Mat>& rho, int max_k = 3);

} // namespace koszulkit
