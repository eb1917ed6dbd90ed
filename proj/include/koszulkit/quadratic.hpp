#pragma once

// Quadratic algebras T(V)/(R), their Koszul subspaces, and quadratic duals.
//
// V^{(x) i} carries the monomial basis e_{a_1} (x) ... (x) e_{a_i}, flat index
// sum_k a_k n^{i-k} (leftmost factor slowest). H_i is presented by the classes
// of its normal monomials (the non-pivot monomials of the degree-i relation
// subspace).
//
// Duals use the order-reversing pairing
//     <xi_1 (x) ... (x) xi_r, v_1 (x) ... (x) v_r> = prod_k xi_k(v_{r+1-k}),
// which in coordinates pairs monomial index a with its reversal.

#include "koszulkit/exactlin.hpp"
#include "koszulkit/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koszulkit {

struct Term {
    Rat coeff;
    std::size_t left = 0, right = 0;  // generator indices of e_left (x) e_right
};

struct QuadraticPresentation {
    std::vector<std::string> gen_names;
    Subspace relations;  // inside V (x) V

    std::size_t num_generators() const noexcept { return gen_names.size(); }

    static QuadraticPresentation make(std::vector<std::string> names,
                                      const std::vector<std::vector<Term>>& relations);
    static QuadraticPresentation make(std::vector<std::string> names, const Mat& relation_rows);
};

/// S(V), relations x_a x_b - x_b x_a for a < b. Generators x0, x1, ...
QuadraticPresentation symmetric_presentation(std::size_t n);
/// Lambda(V), relations x_a x_a and x_a x_b + x_b x_a.
QuadraticPresentation exterior_presentation(std::size_t n);
/// T(V), no relations.
QuadraticPresentation free_presentation(std::size_t n);
/// k<t>/(t t).
QuadraticPresentation dual_numbers_presentation();

/// n^r, checked against overflow.
std::size_t tensor_power_dim(std::size_t n, int r);
/// Flat index of the reversed monomial.
std::size_t reversed_index(std::size_t n, int r, std::size_t flat);
/// Apply the reversal permutation of V^{(x) r} to the rows of m.
Mat reverse_rows(const Mat& m, std::size_t n, int r);
/// Same on columns.
Mat reverse_cols(const Mat& m, std::size_t n, int r);

class TruncatedGradedAlgebra {
public:
    int max_degree() const noexcept { return N_; }
    std::size_t num_generators() const noexcept { return n_; }
    const QuadraticPresentation& presentation() const noexcept { return pres_; }

    std::size_t h_dim(int i) const;
    std::size_t k_dim(int i) const;
    /// T^i -> H_i, h_i x n^i.
    const Mat& projection(int i) const;
    /// H_i -> T^i, n^i x h_i (normal monomials).
    const Mat& section(int i) const;
    const std::vector<std::size_t>& normal_monomials(int i) const;
    /// (K_H)_i inside T^i.
    const Subspace& koszul(int i) const;
    /// m_{i,j} : H_i (x) H_j -> H_{i+j}, defined for i + j <= N.
    const Mat& mult(int i, int j) const;

    /// K_i -> K_{i-1} (x) V in coordinates, (k_{i-1} n) x k_i.
    const Mat& split_right(int i) const;
    /// K_i -> V (x) K_{i-1} in coordinates, (n k_{i-1}) x k_i.
    const Mat& split_left(int i) const;

    GradedSpace hilbert_space() const;
    GradedSpace koszul_space() const;

    friend TruncatedGradedAlgebra grow(const QuadraticPresentation& p, int N);

private:
    int N_ = 0;
    std::size_t n_ = 0;
    QuadraticPresentation pres_;
    std::vector<Mat> proj_, sect_;
    std::vector<std::vector<std::size_t>> normal_;
    std::vector<Subspace> koszul_;
    std::vector<std::vector<Mat>> mult_;  // mult_[i][j]
    std::vector<Mat> split_right_, split_left_;
};

TruncatedGradedAlgebra grow(const QuadraticPresentation& p, int N);

/// Generators xi_a = e_a^*, relations = annihilator of R under the reversed
/// pairing (the image of the dual of the degree-2 multiplication).
QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);

/// H together with H^!, both grown to the same degree.
struct KoszulPair {
    TruncatedGradedAlgebra h;
    TruncatedGradedAlgebra dual;
};
/// Runs psi_bar_identity for i + j <= self_test_degree and throws
/// ContractViolation on failure.
KoszulPair make_koszul_pair(const QuadraticPresentation& p, int N, int self_test_degree = 3);

/// m-bar_{j,i} : K_j (x) H_i -> K_{j-1} (x) H_{i+1}, the right Koszul
/// differential.
Mat koszul_right_map(const TruncatedGradedAlgebra& a, int j, int i);
/// H_i (x) K_j -> H_{i+1} (x) K_{j-1}, the left Koszul differential.
Mat koszul_left_map(const TruncatedGradedAlgebra& a, int i, int j);

/// Components (-i, j) = K_i (x) H_{j-i} for 0 <= j <= N.
BigradedComplex right_koszul_complex(const TruncatedGradedAlgebra& a);
/// Components (-i, j) = H_{j-i} (x) K_i.
BigradedComplex left_koszul_complex(const TruncatedGradedAlgebra& a);

struct DegreeVerdict {
    int degree = 0;
    bool exact = true;
    std::optional<Cell> failing_cell;
};

struct KoszulVerdict {
    int max_degree = 0;
    std::vector<DegreeVerdict> degrees;
    bool koszul_up_to_max() const;
    std::optional<Cell> first_failure() const;
    std::string summary() const;
};

/// Exactness of a column of a complex away from the unit cell.
/// `unit_cell` is expected to carry homology of dimension `unit_dim`.
DegreeVerdict column_verdict(const HomologyReport& h, int s, std::optional<Cell> unit_cell,
                             std::size_t unit_dim);

KoszulVerdict koszulity_check(const TruncatedGradedAlgebra& a);
KoszulVerdict koszulity_check(const QuadraticPresentation& p, int N);

struct EulerResult {
    bool ok = true;
    std::vector<long> values;  // sum_i (-1)^i dim H^!_i dim H_{s-i}, s = 0..N
};
EulerResult euler_identity(const KoszulPair& kp);

/// Matrix of u -> u <| xi on T^i (xi in T^r(V*)), landing in T^{i-r}.
Mat right_contraction(std::size_t n, int i, const Vec& xi, int r);
/// Matrix of zeta -> h |> zeta on T^i(V*) (h in T^r(V)), landing in T^{i-r}(V*).
Mat left_contraction(std::size_t n, int i, const Vec& h, int r);

/// Contraction of an element of K_i (coordinates) by xi in T^r(V*).
/// Returns coordinates in K_{i-r} (zero vector of length 0 when r > i).
/// Throws ContractViolation if the result depends on the representative of
/// xi modulo the dual relations, or leaves K.
Vec contract_right(const KoszulPair& kp, int i, const Vec& k_coords, const Vec& xi, int r);
/// Contraction of an element of (K_{H^!})_i by h in T^r(V).
Vec contract_left(const KoszulPair& kp, int i, const Vec& kdual_coords, const Vec& h, int r);

/// Pairing matrix H^!_r x K_r: entry (a, b) = <normal monomial a, K basis b>.
Mat dual_pairing_hdual_k(const KoszulPair& kp, int r);
/// Pairing matrix (K_{H^!})_r x H_r.
Mat dual_pairing_kdual_h(const KoszulPair& kp, int r);

/// psi-bar_{i,j} : (K_j (x) H_i)^* -> (K_{H^!})_i (x) H^!_j on coordinate
/// columns of functionals.
Mat psi_bar(const KoszulPair& kp, int i, int j);
/// psi-bar_{i-1,j+1}(f o m-bar_{j+1,i-1}) == m-bar^!_{i,j}(psi-bar_{i,j}(f))
/// for every functional f. Requires i > 0 and i + j <= N.
bool psi_bar_identity(const KoszulPair& kp, int i, int j);

} // namespace koszulkit
