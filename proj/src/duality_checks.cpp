#include "koszulkit/duality.hpp"

#include "duality_internal.hpp"

#include <stdexcept>

namespace koszulkit {

using namespace detail;

namespace {

/// H_0 is concentrated at the unit cell (0, 0) = X. Builds representatives
/// of every H(0, s) and the evaluation onto X, and requires the assembled
/// map to be invertible and A_0-equivariant.
CheckResult h0_certificate(const ActionProvider& p, const DualityComplex& dc, const HomologyReport& h,
                           const A0Module& x, bool records_a0) {
    const auto& c = dc.complex;
    Mat ev_total(x.dim, 0);
    for (const auto& cell : h.cells) {
        if (cell.r != 0 || !cell.valid) continue;
        const std::size_t dim = cell.component_dim;
        Subspace ker = c.has_differential(0, cell.s) ? kernel(c.differential(0, cell.s)) : Subspace::full(dim);
        Subspace im = c.has_differential(-1, cell.s) ? image(c.differential(-1, cell.s)) : Subspace::zero(dim);
        Mat ev = cell.s == 0 ? Mat::identity(x.dim) : Mat(x.dim, dim);
        if (cell.s == 0 && dim != x.dim) return {false, "unit cell has the wrong dimension", Cell{0, 0}};
        if (c.has_differential(-1, cell.s) && !(ev * c.differential(-1, cell.s)).is_zero())
            return {false, "evaluation does not kill boundaries", Cell{0, cell.s}};
        // representatives: kernel vectors independent modulo the image
        Subspace acc = im;
        const Mat kb = ker.basis();
        for (std::size_t t = 0; t < kb.rows(); ++t) {
            Vec v = kb.row_vec(t);
            if (acc.contains(v)) continue;
            acc = sum(acc, Subspace::span(dim, Mat(1, dim, v)));
            ev_total = hstack(ev_total, ev * Mat::column(v));
        }
        if (cell.s == 0 && records_a0)
            for (std::size_t k = 0; k < dc.actions.size() && k < p.generators().size(); ++k)
                if (ev * dc.actions[k].maps.at({0, 0}) != p.act_on_module(x, p.generators()[k]) * ev)
                    return {false, "evaluation is not equivariant", Cell{0, 0}};
    }
    if (ev_total.rows() != ev_total.cols() || rank(ev_total) != x.dim)
        return {false, "H_0 is not isomorphic to X (" + std::to_string(ev_total.cols()) + " classes)", std::nullopt};
    return {};
}

CheckResult vanishing(const HomologyReport& h, bool negative_r) {
    for (const auto& cell : h.cells) {
        if (!cell.valid || cell.dim == 0) continue;
        const int r = negative_r ? -cell.r : cell.r;
        if (r >= 1 && cell.s == (negative_r ? r : -r))
            return {false, "diagonal homology does not vanish", Cell{cell.r, cell.s}};
    }
    return {};
}

CheckResult diagonal(const BigradedComplex& c, const TruncatedGradedAlgebra& h, bool negative_r) {
    for (const auto& [cell, dim] : c.components()) {
        const int r = negative_r ? -cell.first : cell.first;
        if (r < 0 || r > h.max_degree()) continue;
        const int s0 = negative_r ? cell.second - r : cell.second + r;
        if (!c.materialized(0, s0)) continue;
        if (dim != h.k_dim(r) * c.dim(0, s0)) return {false, "component is not a shifted copy of degree 0", cell};
    }
    return {};
}

} // namespace

Gen85Result gen85_checks(const ActionProvider& p, const KoszulPair& kp, const A0Module& x, unsigned jobs) {
    GradedAModule gx = concentrated(x);
    DualityComplex I = I_complex(p, kp, gx);
    DualityComplex P = P_complex(p, kp, gx);
    HomologyReport hi = homology(I.complex, jobs);
    HomologyReport hp = homology(P.complex, jobs);
    Gen85Result res;
    res.h0_I = h0_certificate(p, I, hi, x, true);
    // P records no A_0-action; its unit cell H_0 (x) K_0 (x) X is X itself.
    res.h0_P = h0_certificate(p, P, hp, x, false);
    res.diagonal_I = diagonal(I.complex, kp.h, false);
    res.diagonal_P = diagonal(P.complex, kp.h, true);
    res.vanishing_I = vanishing(hi, false);
    res.vanishing_P = vanishing(hp, true);
    return res;
}

DualityVerdict koszulity_via_duality(const ActionProvider& p, const KoszulPair& kp, const A0Module& x,
                                     unsigned jobs) {
    const int N = kp.h.max_degree();
    DualityVerdict v;
    HomologyReport hi = homology(I_complex(p, kp, concentrated(x)).complex, jobs);
    HomologyReport hp = homology(Pstar_complex(p, kp, x).complex, jobs);
    v.via_I.max_degree = v.via_Pstar.max_degree = N;
    for (int d = 0; d <= N; ++d) {
        DegreeVerdict a = column_verdict(hi, -d, Cell{0, 0}, x.dim);
        a.degree = d;
        v.via_I.degrees.push_back(a);
        DegreeVerdict b = column_verdict(hp, d, Cell{0, 0}, x.dim);
        b.degree = d;
        v.via_Pstar.degrees.push_back(b);
    }
    v.via_koszul = koszulity_check(kp.h);
    for (int d = 0; d <= N; ++d) {
        const bool e = v.via_koszul.degrees[static_cast<std::size_t>(d)].exact;
        if (v.via_I.degrees[static_cast<std::size_t>(d)].exact != e ||
            v.via_Pstar.degrees[static_cast<std::size_t>(d)].exact != e) {
            v.agree = false;
            v.disagreement = d;
            break;
        }
    }
    return v;
}

// ---------------------------------------------------------------- adjunction

namespace {

struct TargetModule {
    std::string name;
    std::vector<std::size_t> dims;           // degrees 0..N
    std::vector<std::vector<Mat>> left;      // [i][c]
    std::vector<std::vector<Mat>> v;         // [i][b] : Y_i -> Y_{i+1}, i < N
};

void put_rows(std::vector<Mat>& rows, std::size_t width, std::size_t off_a, const Mat& a, std::size_t off_b,
              const Mat& b) {
    Mat m(a.rows(), width);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, off_a + c) += a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, off_b + c) += b(r, c);
    }
    rows.push_back(std::move(m));
}

std::size_t solution_dim(const std::vector<Mat>& rows, std::size_t width) {
    Mat all(0, width);
    for (const auto& r : rows) all = vstack(all, r);
    return width - rank(all);
}

} // namespace

std::vector<AdjunctionResult> adjunction_check(const ActionProvider& p, const TruncatedGradedAlgebra& h,
                                               const A0Module& x, const std::vector<A0Module>& zs) {
    if (p.kind() != ActionProvider::Kind::bialgebra)
        throw std::invalid_argument("adjunction_check: bialgebra providers only");
    const Bialgebra& bi = p.bialgebra();
    const std::size_t d = bi.dim, n = h.num_generators(), xd = x.dim;
    const int N = h.max_degree();
    SmashAlgebra sa(p, h, SmashAlgebra::Side::right);

    auto to_vec = [&](const SmashElem& e, int i) {
        Vec v(d * h.h_dim(i));
        for (const auto& [k, c] : e) v[static_cast<std::size_t>(std::get<0>(k)[0]) * h.h_dim(i) + std::get<2>(k)] += c;
        return v;
    };
    auto a0_left = [&](std::size_t c) {
        Mat m(d, d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t t = 0; t < d; ++t) m(t, k) = bi.mult[c * d + k][t];
        return m;
    };
    // (1 (x) e_b) . _ and _ . (e_c (x) 1) on A_0 (x) H_i
    auto v_mat = [&](std::size_t b, int i) {
        SmashElem vb;
        for (std::size_t u = 0; u < d; ++u)
            if (sgn(bi.unit[u]) != 0) vb[SmashKey{A0Key{static_cast<int>(u)}, 1, b}] += bi.unit[u];
        Mat m(d * h.h_dim(i + 1), d * h.h_dim(i));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t t = 0; t < h.h_dim(i); ++t) {
                Vec col = to_vec(sa.multiply(vb, sa.basis_element({static_cast<int>(k)}, i, t)), i + 1);
                for (std::size_t q = 0; q < col.size(); ++q) m(q, k * h.h_dim(i) + t) = col[q];
            }
        return m;
    };
    auto right_mat = [&](std::size_t c, int i) {
        Mat m(d * h.h_dim(i), d * h.h_dim(i));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t t = 0; t < h.h_dim(i); ++t) {
                Vec col = to_vec(sa.multiply(sa.basis_element({static_cast<int>(k)}, i, t),
                                             sa.basis_element({static_cast<int>(c)}, 0, 0)),
                                 i);
                for (std::size_t q = 0; q < col.size(); ++q) m(q, k * h.h_dim(i) + t) = col[q];
            }
        return m;
    };

    std::vector<TargetModule> targets;
    for (std::size_t z = 0; z < zs.size(); ++z) {
        TargetModule t{"Z" + std::to_string(z), {}, {}, {}};
        for (int i = 0; i <= N; ++i) {
            t.dims.push_back(i == 0 ? zs[z].dim : 0);
            std::vector<Mat> l;
            for (std::size_t c = 0; c < d; ++c) l.push_back(i == 0 ? zs[z].action[c] : Mat(0, 0));
            t.left.push_back(std::move(l));
            if (i < N) t.v.push_back(std::vector<Mat>(n, Mat(0, i == 0 ? zs[z].dim : 0)));
        }
        targets.push_back(std::move(t));
    }
    {
        TargetModule t{"A/A_>N", {}, {}, {}};
        for (int i = 0; i <= N; ++i) {
            t.dims.push_back(d * h.h_dim(i));
            std::vector<Mat> l;
            for (std::size_t c = 0; c < d; ++c) l.push_back(kron(a0_left(c), Mat::identity(h.h_dim(i))));
            t.left.push_back(std::move(l));
            if (i < N) {
                std::vector<Mat> vs;
                for (std::size_t b = 0; b < n; ++b) vs.push_back(v_mat(b, i));
                t.v.push_back(std::move(vs));
            }
        }
        targets.push_back(std::move(t));
    }

    std::vector<AdjunctionResult> out;
    for (const auto& t : targets) {
        std::vector<std::size_t> dom, off;
        std::size_t width = 0;
        for (int i = 0; i <= N; ++i) {
            dom.push_back(d * h.h_dim(i) * xd);
            off.push_back(width);
            width += t.dims[i] * dom.back();
        }
        std::vector<Mat> rows;
        for (int i = 0; i <= N; ++i) {
            const std::size_t y = t.dims[i], D = dom[i];
            if (y == 0) continue;
            const Mat empty(0, 0);
            for (std::size_t c = 0; c < d; ++c) {
                Mat lc = kron(kron(a0_left(c), Mat::identity(h.h_dim(i))), Mat::identity(xd));
                put_rows(rows, width, off[i], kron(Mat::identity(y), lc.transpose()), off[i],
                         Rat(-1) * kron(t.left[i][c], Mat::identity(D)));
                Mat bal = kron(right_mat(c, i), Mat::identity(xd)) -
                          kron(Mat::identity(d * h.h_dim(i)), p.act_on_module(x, {static_cast<int>(c)}));
                put_rows(rows, width, off[i], kron(Mat::identity(y), bal.transpose()), 0, Mat(y * D, 0));
            }
        }
        for (int i = 0; i < N; ++i)
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t y0 = t.dims[i], y1 = t.dims[i + 1], D0 = dom[i];
                if (y1 == 0 && y0 == 0) continue;
                // phi_{i+1} V_b - Y(v_b) phi_i = 0, as equations in Y_{i+1} (x) D_i
                Mat vb = kron(v_mat(b, i), Mat::identity(xd));
                Mat a = kron(Mat::identity(y1), vb.transpose());
                Mat c = y0 ? Rat(-1) * kron(t.v[i][b], Mat::identity(D0)) : Mat(y1 * D0, 0);
                put_rows(rows, width, off[i + 1], a, off[i], c);
            }
        AdjunctionResult r;
        r.target = t.name;
        r.hom_a = solution_dim(rows, width);
        std::vector<Mat> rows0;
        const std::size_t y = t.dims[0];
        for (std::size_t c = 0; c < d; ++c)
            put_rows(rows0, y * xd, 0, kron(t.left[0][c], Mat::identity(xd)), 0,
                     Rat(-1) * kron(Mat::identity(y), p.act_on_module(x, {static_cast<int>(c)}).transpose()));
        r.hom_a0 = solution_dim(rows0, y * xd);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace koszulkit
