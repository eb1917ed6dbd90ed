#include "koszulkit/duality.hpp"

#include "duality_internal.hpp"

namespace koszulkit {

using namespace detail;

namespace {

struct Comparison {
    Cell target;
    Mat map;
};

/// Checks a cellwise map src -> tgt: bijective, chain map, and intertwining
/// the recorded actions pairwise (same order in both complexes).
Identification compare(const DualityComplex& src, const DualityComplex& tgt, const std::map<Cell, Comparison>& phi) {
    Identification res;
    auto fail = [&](bool Identification::*flag, Cell c, const std::string& why) {
        if (!(res.*flag)) return;
        res.*flag = false;
        if (!res.first_failure) {
            res.first_failure = c;
            res.detail = why;
        }
    };
    if (src.actions.size() != tgt.actions.size()) fail(&Identification::equivariant, {0, 0}, "action count differs");
    for (const auto& [cell, cmp] : phi) {
        ++res.cells_checked;
        const Mat& m = cmp.map;
        if (m.rows() != tgt.complex.dim(cmp.target.first, cmp.target.second) ||
            m.cols() != src.complex.dim(cell.first, cell.second) || m.rows() != m.cols() || rank(m) != m.rows())
            fail(&Identification::bijective, cell, "comparison not invertible");
        auto next = phi.find({cell.first + 1, cell.second});
        if (next != phi.end() && src.complex.materialized(cell.first + 1, cell.second)) {
            Mat lhs = next->second.map * src.complex.differential(cell.first, cell.second);
            Mat rhs = tgt.complex.differential(cmp.target.first, cmp.target.second) * m;
            if (lhs != rhs) fail(&Identification::chain_map, cell, "comparison is not a chain map");
        }
        for (std::size_t k = 0; k < src.actions.size() && k < tgt.actions.size(); ++k) {
            const auto& sa = src.actions[k];
            const auto& ta = tgt.actions[k];
            auto s_it = sa.maps.find(cell);
            auto t_it = ta.maps.find(cmp.target);
            auto dest = phi.find({cell.first + sa.dr, cell.second + sa.ds});
            if (s_it == sa.maps.end() || t_it == ta.maps.end() || dest == phi.end()) continue;
            if (dest->second.map * s_it->second != t_it->second * m)
                fail(&Identification::equivariant, cell, "comparison does not intertwine " + sa.name);
        }
    }
    return res;
}

/// f in (K_r (x) H_i)^* (x) X stored as X (x) (K_r (x) H_i)^*, to K^!_i (x) H^!_r (x) X.
Mat psi_on_hom(const KoszulPair& kp, std::size_t x, int i, int r) {
    return kron(psi_bar(kp, i, r), Mat::identity(x)) * swap_factors(x, kp.h.k_dim(r) * kp.h.h_dim(i));
}

} // namespace

DualityComplex Pstar_complex(const ActionProvider& p, const KoszulPair& kp, const A0Module& x) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    const TruncatedGradedAlgebra& d = kp.dual;
    DualityComplex dc;
    dc.construction = "P*";
    auto dim = [&](int i, int r) -> std::size_t {
        if (i < 0 || r < 0) return 0;
        return d.h_dim(r) * d.k_dim(i) * x.dim;
    };
    std::vector<std::pair<int, int>> cells;  // (i, r)
    for (int i = -1; i <= N + 1; ++i)
        for (int s = -1; s <= 2 * N + 2; ++s) {
            const int r = s - i;
            const bool known = i < 0 || r < 0 || (i <= N && r <= N);
            if (!known) continue;
            dc.complex.set_component(-i, s, dim(i, r));
            cells.emplace_back(i, r);
        }
    for (auto [i, r] : cells) {
        if (!dc.complex.materialized(-i + 1, i + r) || dim(i, r) == 0 || dim(i - 1, r + 1) == 0) continue;
        dc.complex.set_differential(-i, i + r, sign_mat(i, kron(koszul_left_map(d, r, i), Mat::identity(x.dim))));
    }
    for (const auto& g : p.generators()) {
        RecordedAction act{key_name(g), 0, 0, 1, {}};
        for (auto [i, r] : cells) {
            Mat m(dim(i, r), dim(i, r));
            if (!m.rows()) {
                act.maps[{-i, i + r}] = std::move(m);
                continue;
            }
            for (const auto& [a1, a2, a3, c] : coproduct3(p, g))
                m += c * kron(kron(h_act(p, d, a3, r, true), k_act(p, d, a2, i, true)), p.act_on_module(x, a1));
            act.maps[{-i, i + r}] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    for (std::size_t b = 0; b < n; ++b) {
        RecordedAction act{"xi" + std::to_string(b), 0, 1, 1, {}};
        for (auto [i, r] : cells) {
            if (!dc.complex.materialized(-i, i + r + 1)) continue;
            Mat m(dim(i, r + 1), dim(i, r));
            if (m.rows() && m.cols()) m = kron(left_mult(d, b, r), Mat::identity(d.k_dim(i) * x.dim));
            act.maps[{-i, i + r}] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    return dc;
}

Identification roundtrip_A(const ActionProvider& p, const KoszulPair& kp, const A0Module& x) {
    const int N = kp.h.max_degree();
    DualityComplex I = I_complex(p, kp, concentrated(x));
    DualityComplex T = topP_complex(p, kp, free_dual_module(p, kp, x));
    std::map<Cell, Comparison> phi;
    for (int r = 0; r <= N; ++r)
        for (int i = 0; i + r <= N; ++i) phi[{r, -r - i}] = {{-i, r + i}, psi_on_hom(kp, x.dim, i, r)};
    return compare(I, T, phi);
}

namespace {

/// I^0(X) for X in degree 0: degree -i holds Hom(H_i, X).
GradedAModule injective_hull(const ActionProvider& p, const KoszulPair& kp, const A0Module& x) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    GradedAModule m;
    m.s_min = -N;
    m.zero_below = false;
    for (int t = 0; t <= N; ++t) {
        const int i = N - t;
        A0Module c{x.dim * kp.h.h_dim(i), {}};
        for (const auto& g : p.generators()) {
            Mat a(c.dim, c.dim);
            for (const auto& [pr, co] : p.coproduct(g))
                a += co * kron(p.act_on_module(x, pr.first), h_act(p, kp.h, pr.second, i, false).transpose());
            c.action.push_back(std::move(a));
        }
        m.components.push_back(std::move(c));
        if (i >= 1) {
            Mat act(x.dim * kp.h.h_dim(i - 1), 0);
            for (std::size_t b = 0; b < n; ++b)
                act = hstack(act, hom_map(Mat::identity(x.dim), right_mult(kp.h, b, i - 1)));
            m.act1[-i] = std::move(act);
        }
    }
    return m;
}

} // namespace

Identification roundtrip_B(const ActionProvider& p, const KoszulPair& kp, const A0Module& x) {
    const int N = kp.h.max_degree();
    GradedAModule m = injective_hull(p, kp, x);
    auto valid = validate_graded_module(p, kp, m, ModuleSide::over_a);
    if (!valid.ok) {
        Identification res;
        res.equivariant = false;
        res.detail = "I^0(X) is not a graded A-module: " + valid.axiom;
        return res;
    }
    DualityComplex S = socI_complex(p, kp, m, false);
    DualityComplex P = Pstar_complex(p, kp, x);
    const std::size_t xd = x.dim;
    std::map<Cell, Comparison> phi;
    for (int r = 0; r <= N; ++r)
        for (int i = 0; i + r <= N; ++i) {
            Mat reorder = kron(Mat::identity(xd), swap_factors(kp.h.h_dim(i), kp.h.k_dim(r)));
            Mat to_p = kron(swap_factors(kp.dual.k_dim(i), kp.dual.h_dim(r)), Mat::identity(xd));
            Mat cmp = to_p * psi_on_hom(kp, xd, i, r) * reorder;
            if ((i * (i + 1) / 2) % 2) cmp *= Rat(-1);
            phi[{r, -r - i}] = {{-i, r + i}, std::move(cmp)};
        }
    return compare(S, P, phi);
}

} // namespace koszulkit
