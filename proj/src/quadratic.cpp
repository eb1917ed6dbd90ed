#include "koszulkit/quadratic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace koszulkit {

namespace {

void require_degree(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) {
        std::ostringstream msg;
        msg << what << ": degree " << i << " outside [" << lo << ", " << hi << "]";
        throw WindowError(msg.str());
    }
}

/// kron(I_left, a) * x without materializing the Kronecker product.
Mat apply_block_diagonal(const Mat& a, const Mat& x, std::size_t left) {
    if (x.rows() != left * a.cols()) throw DimensionMismatch("apply_block_diagonal: shape");
    Mat out(left * a.rows(), x.cols());
    for (std::size_t p = 0; p < left; ++p)
        for (std::size_t t = 0; t < a.rows(); ++t)
            for (std::size_t q = 0; q < a.cols(); ++q) {
                const Rat& atq = a(t, q);
                if (sgn(atq) == 0) continue;
                for (std::size_t c = 0; c < x.cols(); ++c) {
                    const Rat& xv = x(p * a.cols() + q, c);
                    if (sgn(xv) != 0) out(p * a.rows() + t, c) += atq * xv;
                }
            }
    return out;
}

} // namespace

// ---------------------------------------------------------------- presentation

QuadraticPresentation QuadraticPresentation::make(std::vector<std::string> names,
                                                  const std::vector<std::vector<Term>>& relations) {
    const std::size_t n = names.size();
    Mat rows(relations.size(), n * n);
    for (std::size_t k = 0; k < relations.size(); ++k)
        for (const auto& t : relations[k]) {
            if (t.left >= n || t.right >= n)
                throw std::invalid_argument("relation term refers to an unknown generator");
            rows(k, t.left * n + t.right) += t.coeff;
        }
    return make(std::move(names), rows);
}

QuadraticPresentation QuadraticPresentation::make(std::vector<std::string> names,
                                                  const Mat& relation_rows) {
    const std::size_t n = names.size();
    QuadraticPresentation p;
    p.gen_names = std::move(names);
    if (relation_rows.rows() == 0)
        p.relations = Subspace::zero(n * n);
    else
        p.relations = Subspace::span(n * n, relation_rows);
    return p;
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
    if (n <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        return std::vector<std::string>(xyz, xyz + n);
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) names.push_back("x" + std::to_string(a));
    return names;
}

} // namespace

QuadraticPresentation symmetric_presentation(std::size_t n) {
    std::vector<std::vector<Term>> rel;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) rel.push_back({{Rat(1), a, b}, {Rat(-1), b, a}});
    return QuadraticPresentation::make(default_names(n), rel);
}

QuadraticPresentation exterior_presentation(std::size_t n) {
    std::vector<std::vector<Term>> rel;
    for (std::size_t a = 0; a < n; ++a) {
        rel.push_back({{Rat(1), a, a}});
        for (std::size_t b = a + 1; b < n; ++b) rel.push_back({{Rat(1), a, b}, {Rat(1), b, a}});
    }
    return QuadraticPresentation::make(default_names(n), rel);
}

QuadraticPresentation free_presentation(std::size_t n) {
    return QuadraticPresentation::make(default_names(n), std::vector<std::vector<Term>>{});
}

QuadraticPresentation dual_numbers_presentation() {
    return QuadraticPresentation::make({"t"}, {{{Rat(1), 0, 0}}});
}

// ---------------------------------------------------------------- tensor indexing

std::size_t tensor_power_dim(std::size_t n, int r) {
    if (r < 0) throw std::invalid_argument("tensor_power_dim: negative power");
    std::size_t d = 1;
    for (int k = 0; k < r; ++k) {
        if (n != 0 && d > std::numeric_limits<std::size_t>::max() / n)
            throw std::overflow_error("tensor power dimension overflows");
        d *= n;
    }
    return d;
}

std::size_t reversed_index(std::size_t n, int r, std::size_t flat) {
    std::size_t out = 0;
    for (int k = 0; k < r; ++k) {
        out = out * n + flat % n;
        flat /= n;
    }
    return out;
}

Mat reverse_rows(const Mat& m, std::size_t n, int r) {
    if (m.rows() != tensor_power_dim(n, r)) throw DimensionMismatch("reverse_rows: shape");
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t src = reversed_index(n, r, i);
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(src, c);
    }
    return out;
}

Mat reverse_cols(const Mat& m, std::size_t n, int r) {
    return reverse_rows(m.transpose(), n, r).transpose();
}

// ---------------------------------------------------------------- algebra

std::size_t TruncatedGradedAlgebra::h_dim(int i) const {
    if (i < 0) return 0;
    require_degree(i, 0, N_, "h_dim");
    return sect_[static_cast<std::size_t>(i)].cols();
}

std::size_t TruncatedGradedAlgebra::k_dim(int i) const {
    if (i < 0) return 0;
    require_degree(i, 0, N_, "k_dim");
    return koszul_[static_cast<std::size_t>(i)].dim();
}

const Mat& TruncatedGradedAlgebra::projection(int i) const {
    require_degree(i, 0, N_, "projection");
    return proj_[static_cast<std::size_t>(i)];
}

const Mat& TruncatedGradedAlgebra::section(int i) const {
    require_degree(i, 0, N_, "section");
    return sect_[static_cast<std::size_t>(i)];
}

const std::vector<std::size_t>& TruncatedGradedAlgebra::normal_monomials(int i) const {
    require_degree(i, 0, N_, "normal_monomials");
    return normal_[static_cast<std::size_t>(i)];
}

const Subspace& TruncatedGradedAlgebra::koszul(int i) const {
    require_degree(i, 0, N_, "koszul");
    return koszul_[static_cast<std::size_t>(i)];
}

const Mat& TruncatedGradedAlgebra::mult(int i, int j) const {
    if (i < 0 || j < 0 || i + j > N_) {
        std::ostringstream msg;
        msg << "mult: (" << i << "," << j << ") outside truncation " << N_;
        throw WindowError(msg.str());
    }
    return mult_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

const Mat& TruncatedGradedAlgebra::split_right(int i) const {
    require_degree(i, 1, N_, "split_right");
    return split_right_[static_cast<std::size_t>(i)];
}

const Mat& TruncatedGradedAlgebra::split_left(int i) const {
    require_degree(i, 1, N_, "split_left");
    return split_left_[static_cast<std::size_t>(i)];
}

GradedSpace TruncatedGradedAlgebra::hilbert_space() const {
    std::vector<std::size_t> d;
    for (int i = 0; i <= N_; ++i) d.push_back(h_dim(i));
    return GradedSpace(0, d);
}

GradedSpace TruncatedGradedAlgebra::koszul_space() const {
    std::vector<std::size_t> d;
    for (int i = 0; i <= N_; ++i) d.push_back(k_dim(i));
    return GradedSpace(0, d);
}

TruncatedGradedAlgebra grow(const QuadraticPresentation& p, int N) {
    if (N < 0) throw std::invalid_argument("grow: negative truncation degree");
    const std::size_t n = p.num_generators();
    TruncatedGradedAlgebra a;
    a.N_ = N;
    a.n_ = n;
    a.pres_ = p;

    // Degrees 0 and 1 are free.
    a.proj_.push_back(Mat::identity(1));
    a.sect_.push_back(Mat::identity(1));
    a.normal_.push_back({0});
    a.koszul_.push_back(Subspace::full(1));
    if (N >= 1) {
        a.proj_.push_back(Mat::identity(n));
        a.sect_.push_back(Mat::identity(n));
        std::vector<std::size_t> mon(n);
        for (std::size_t b = 0; b < n; ++b) mon[b] = b;
        a.normal_.push_back(mon);
        a.koszul_.push_back(Subspace::full(n));
    }

    const Subspace& R = p.relations;
    const Mat ann_r = R.annihilator().basis();
    for (int i = 2; i <= N; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const Mat& prev_proj = a.proj_[ui - 1];
        const std::size_t hprev = prev_proj.rows();
        const std::size_t amb = hprev * n;

        // H_i = (H_{i-1} (x) V) / image(H_{i-2} (x) R).
        const auto& lower = a.normal_[ui - 2];
        Mat span(lower.size() * R.dim(), amb);
        for (std::size_t w = 0; w < lower.size(); ++w)
            for (std::size_t k = 0; k < R.dim(); ++k) {
                const std::size_t row = w * R.dim() + k;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d) {
                        const Rat& coeff = R.basis()(k, c * n + d);
                        if (sgn(coeff) == 0) continue;
                        const std::size_t col = lower[w] * n + c;
                        for (std::size_t h = 0; h < hprev; ++h)
                            if (sgn(prev_proj(h, col)) != 0)
                                span(row, h * n + d) += coeff * prev_proj(h, col);
                    }
            }
        Quotient q = quotient(amb, Subspace::span(amb, span));
        a.proj_.push_back(q.projection * kron(prev_proj, Mat::identity(n)));
        a.sect_.push_back(kron(a.sect_[ui - 1], Mat::identity(n)) * q.section);
        std::vector<std::size_t> mon;
        for (auto c : q.basis_coords) mon.push_back(a.normal_[ui - 1][c / n] * n + c % n);
        a.normal_.push_back(mon);

        // K_i = (K_{i-1} (x) V) ∩ (T^{i-2} (x) R).
        const Subspace& kprev = a.koszul_[ui - 1];
        const std::size_t ti = tensor_power_dim(n, i);
        Mat candidates = kron(kprev.inclusion(), Mat::identity(n));  // ti x (k n)
        Subspace coeffs = ann_r.rows() == 0
                              ? Subspace::full(candidates.cols())
                              : kernel(apply_block_diagonal(ann_r, candidates,
                                                            tensor_power_dim(n, i - 2)));
        a.koszul_.push_back(Subspace::span(ti, coeffs.basis() * candidates.transpose()));
    }

    // Multiplication tables; columns of sect are monomials so m_{i,j} just
    // reads projection columns.
    a.mult_.assign(static_cast<std::size_t>(N) + 1, {});
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            const auto& mi = a.normal_[static_cast<std::size_t>(i)];
            const auto& mj = a.normal_[static_cast<std::size_t>(j)];
            const Mat& pr = a.proj_[static_cast<std::size_t>(i + j)];
            const std::size_t tj = tensor_power_dim(n, j);
            Mat m(pr.rows(), mi.size() * mj.size());
            for (std::size_t x = 0; x < mi.size(); ++x)
                for (std::size_t y = 0; y < mj.size(); ++y) {
                    const std::size_t col = mi[x] * tj + mj[y];
                    for (std::size_t r = 0; r < pr.rows(); ++r) m(r, x * mj.size() + y) = pr(r, col);
                }
            a.mult_[static_cast<std::size_t>(i)].push_back(std::move(m));
        }

    a.split_right_.assign(static_cast<std::size_t>(N) + 1, Mat());
    a.split_left_.assign(static_cast<std::size_t>(N) + 1, Mat());
    for (int i = 1; i <= N; ++i) {
        const Subspace& k = a.koszul_[static_cast<std::size_t>(i)];
        const Subspace& kprev = a.koszul_[static_cast<std::size_t>(i - 1)];
        const Mat cols = k.inclusion();
        Mat right = kron(kprev.pivot_selector(), Mat::identity(n)) * cols;
        Mat left = kron(Mat::identity(n), kprev.pivot_selector()) * cols;
        if (!(kron(kprev.inclusion(), Mat::identity(n)) * right == cols) ||
            !(kron(Mat::identity(n), kprev.inclusion()) * left == cols))
            throw ContractViolation("grow: K_i is not contained in K_{i-1} (x) V and V (x) K_{i-1}");
        a.split_right_[static_cast<std::size_t>(i)] = std::move(right);
        a.split_left_[static_cast<std::size_t>(i)] = std::move(left);
    }
    return a;
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p) {
    const std::size_t n = p.num_generators();
    std::vector<std::string> names;
    for (const auto& g : p.gen_names) {
        if (!g.empty() && g.back() == '*')
            names.push_back(g.substr(0, g.size() - 1));
        else
            names.push_back(g + "*");
    }
    // <zeta, r> under the reversed pairing is the dot product of zeta with
    // the swapped r.
    Subspace swapped = Subspace::span(n * n, reverse_cols(p.relations.basis(), n, 2));
    QuadraticPresentation d;
    d.gen_names = std::move(names);
    d.relations = swapped.annihilator();
    return d;
}

KoszulPair make_koszul_pair(const QuadraticPresentation& p, int N, int self_test_degree) {
    KoszulPair kp{grow(p, N), grow(quadratic_dual(p), N)};
    const int top = std::min(N, self_test_degree);
    for (int i = 1; i <= top; ++i)
        for (int j = 0; i + j <= top; ++j)
            if (!psi_bar_identity(kp, i, j))
                throw ContractViolation("pairing convention self-test failed at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
    return kp;
}

// ---------------------------------------------------------------- Koszul complexes

Mat koszul_right_map(const TruncatedGradedAlgebra& a, int j, int i) {
    return kron(Mat::identity(a.k_dim(j - 1)), a.mult(1, i)) *
           kron(a.split_right(j), Mat::identity(a.h_dim(i)));
}

Mat koszul_left_map(const TruncatedGradedAlgebra& a, int i, int j) {
    return kron(a.mult(i, 1), Mat::identity(a.k_dim(j - 1))) *
           kron(Mat::identity(a.h_dim(i)), a.split_left(j));
}

namespace {

BigradedComplex koszul_complex(const TruncatedGradedAlgebra& a, bool right) {
    BigradedComplex c;
    const int N = a.max_degree();
    for (int s = 0; s <= N; ++s) {
        c.set_component(1, s, 0);
        for (int r = 0; r <= s + 1; ++r)
            c.set_component(-r, s, r <= s ? a.k_dim(r) * a.h_dim(s - r) : 0);
        for (int r = 1; r <= s; ++r)
            c.set_differential(-r, s, right ? koszul_right_map(a, r, s - r)
                                            : koszul_left_map(a, s - r, r));
    }
    return c;
}

} // namespace

BigradedComplex right_koszul_complex(const TruncatedGradedAlgebra& a) {
    return koszul_complex(a, true);
}

BigradedComplex left_koszul_complex(const TruncatedGradedAlgebra& a) {
    return koszul_complex(a, false);
}

bool KoszulVerdict::koszul_up_to_max() const {
    for (const auto& d : degrees)
        if (!d.exact) return false;
    return true;
}

std::optional<Cell> KoszulVerdict::first_failure() const {
    for (const auto& d : degrees)
        if (!d.exact) return d.failing_cell;
    return std::nullopt;
}

std::string KoszulVerdict::summary() const {
    std::ostringstream out;
    if (koszul_up_to_max()) {
        out << "Koszul up to " << max_degree;
    } else {
        auto f = *first_failure();
        out << "not Koszul: homology at (" << f.first << "," << f.second << ")";
    }
    return out.str();
}

DegreeVerdict column_verdict(const HomologyReport& h, int s, std::optional<Cell> unit_cell,
                             std::size_t unit_dim) {
    DegreeVerdict v;
    v.degree = s;
    for (const auto& c : h.cells) {
        if (c.s != s || !c.valid) continue;
        const bool unit = unit_cell && unit_cell->first == c.r && unit_cell->second == c.s;
        if (c.dim != (unit ? unit_dim : 0)) {
            v.exact = false;
            v.failing_cell = Cell{c.r, c.s};
            return v;
        }
    }
    return v;
}

KoszulVerdict koszulity_check(const TruncatedGradedAlgebra& a) {
    HomologyReport h = homology(right_koszul_complex(a));
    KoszulVerdict v;
    v.max_degree = a.max_degree();
    for (int s = 0; s <= a.max_degree(); ++s)
        v.degrees.push_back(column_verdict(h, s, Cell{0, 0}, 1));
    return v;
}

KoszulVerdict koszulity_check(const QuadraticPresentation& p, int N) {
    return koszulity_check(grow(p, N));
}

EulerResult euler_identity(const KoszulPair& kp) {
    EulerResult res;
    const int N = kp.h.max_degree();
    for (int s = 0; s <= N; ++s) {
        long v = 0;
        for (int i = 0; i <= s; ++i)
            v += (i % 2 ? -1 : 1) * static_cast<long>(kp.dual.h_dim(i) * kp.h.h_dim(s - i));
        res.values.push_back(v);
        if (v != (s == 0 ? 1 : 0)) res.ok = false;
    }
    return res;
}

// ---------------------------------------------------------------- contractions

namespace {

Vec reversed_functional(std::size_t n, const Vec& v, int r) {
    if (v.size() != tensor_power_dim(n, r)) throw DimensionMismatch("contraction: wrong length");
    Vec f(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) f[c] = v[reversed_index(n, r, c)];
    return f;
}

} // namespace

Mat right_contraction(std::size_t n, int i, const Vec& xi, int r) {
    if (r > i) return Mat(0, tensor_power_dim(n, i));
    return kron(Mat::identity(tensor_power_dim(n, i - r)), Mat::row(reversed_functional(n, xi, r)));
}

Mat left_contraction(std::size_t n, int i, const Vec& h, int r) {
    if (r > i) return Mat(0, tensor_power_dim(n, i));
    return kron(Mat::row(reversed_functional(n, h, r)), Mat::identity(tensor_power_dim(n, i - r)));
}

namespace {

Vec contract(const TruncatedGradedAlgebra& acting_on, const TruncatedGradedAlgebra& acting,
             int i, const Vec& coords, const Vec& elem, int r, bool right) {
    if (r > i) return {};
    const std::size_t n = acting_on.num_generators();
    const Subspace& k = acting_on.koszul(i);
    Vec u = k.inclusion() * coords;
    Vec normal = acting.section(r) * (acting.projection(r) * elem);
    auto apply = [&](const Vec& e) {
        return (right ? right_contraction(n, i, e, r) : left_contraction(n, i, e, r)) * u;
    };
    Vec w = apply(elem);
    if (apply(normal) != w)
        throw ContractViolation("contraction depends on the representative modulo the relations");
    try {
        return acting_on.koszul(i - r).coordinates(Mat::column(w)).col_vec(0);
    } catch (const DimensionMismatch&) {
        throw ContractViolation("contraction leaves the Koszul subspace");
    }
}

} // namespace

Vec contract_right(const KoszulPair& kp, int i, const Vec& k_coords, const Vec& xi, int r) {
    return contract(kp.h, kp.dual, i, k_coords, xi, r, true);
}

Vec contract_left(const KoszulPair& kp, int i, const Vec& kdual_coords, const Vec& h, int r) {
    return contract(kp.dual, kp.h, i, kdual_coords, h, r, false);
}

Mat dual_pairing_hdual_k(const KoszulPair& kp, int r) {
    const std::size_t n = kp.h.num_generators();
    return kp.dual.section(r).transpose() * reverse_rows(kp.h.koszul(r).inclusion(), n, r);
}

Mat dual_pairing_kdual_h(const KoszulPair& kp, int r) {
    const std::size_t n = kp.h.num_generators();
    return kp.dual.koszul(r).basis() * reverse_rows(kp.h.section(r), n, r);
}

// ---------------------------------------------------------------- psi-bar

Mat psi_bar(const KoszulPair& kp, int i, int j) {
    const std::size_t n = kp.h.num_generators();
    const Subspace& kj = kp.h.koszul(j);
    const Subspace& kdi = kp.dual.koszul(i);
    // Lift f to T^j (x) T^i via the pivot retraction onto K_j and the
    // projection onto H_i, then reverse into T^i(V*) (x) T^j(V*).
    Mat lifted = kron(kj.pivot_selector(), kp.h.projection(i)).transpose();
    Mat reversed = reverse_rows(lifted, n, i + j);
    Mat in_kdual = kron(kdi.inclusion() * kdi.pivot_selector(), Mat::identity(tensor_power_dim(n, j)));
    if (!(in_kdual * reversed == reversed))
        throw ContractViolation("psi_bar: dual of H_i does not land in the dual Koszul subspace");
    return kron(kdi.pivot_selector(), kp.dual.projection(j)) * reversed;
}

bool psi_bar_identity(const KoszulPair& kp, int i, int j) {
    if (i <= 0 || j < 0 || i + j > kp.h.max_degree())
        throw WindowError("psi_bar_identity: degrees outside truncation");
    Mat lhs = psi_bar(kp, i - 1, j + 1) * koszul_right_map(kp.h, j + 1, i - 1).transpose();
    Mat rhs = koszul_right_map(kp.dual, i, j) * psi_bar(kp, i, j);
    return lhs == rhs;
}

} // namespace koszulkit
