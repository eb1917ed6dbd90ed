#include "koszulkit/duality.hpp"

#include "duality_internal.hpp"

#include <sstream>

namespace koszulkit {

using namespace detail;

// ---------------------------------------------------------------- modules

std::size_t GradedAModule::dim(int j) const {
    if (j < s_min || j > s_max()) return 0;
    return components[static_cast<std::size_t>(j - s_min)].dim;
}

Mat GradedAModule::act(int j, std::size_t n) const {
    auto it = act1.find(j);
    if (it != act1.end()) return it->second;
    return Mat(dim(j + 1), n * dim(j));
}

GradedAModule concentrated(const A0Module& x, int degree) {
    GradedAModule m;
    m.s_min = degree;
    m.components = {x};
    return m;
}

namespace {

bool known(const GradedAModule& m, int j) {
    if (j < m.s_min) return m.zero_below;
    if (j > m.s_max()) return m.zero_above;
    return true;
}

Mat module_act(const ActionProvider& p, const GradedAModule& m, int j, const A0Key& k) {
    if (j < m.s_min || j > m.s_max()) return Mat();
    return p.act_on_module(m.components[static_cast<std::size_t>(j - m.s_min)], k);
}

std::string cell_str(int r, int s) {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

} // namespace

AxiomCheck validate_graded_module(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& m,
                                  ModuleSide side) {
    const std::size_t n = kp.h.num_generators();
    const bool dual = side == ModuleSide::over_dual;
    const Subspace& rel = dual ? kp.dual.presentation().relations : kp.h.presentation().relations;
    auto where = [&](int j) { return std::vector<std::size_t>{static_cast<std::size_t>(j - m.s_min)}; };
    for (int j = m.s_min; j <= m.s_max(); ++j) {
        const auto& comp = m.components[static_cast<std::size_t>(j - m.s_min)];
        auto mc = validate_module(p, comp);
        if (!mc.ok) return {false, "component module: " + mc.axiom, where(j)};
        if (j == m.s_max() && !m.zero_above) continue;
        Mat a = m.act(j, n);
        if (a.rows() != m.dim(j + 1) || a.cols() != n * m.dim(j)) return {false, "act1 shape", where(j)};
        if (j + 1 <= m.s_max() && !(j + 1 == m.s_max() && !m.zero_above)) {
            Mat twice = m.act(j + 1, n) * kron(Mat::identity(n), a);
            if (!(twice * kron(rel.inclusion(), Mat::identity(m.dim(j)))).is_zero())
                return {false, "relations act nontrivially", where(j)};
        }
        for (const auto& g : p.generators()) {
            Mat lhs, rhs(a.rows(), a.cols());
            if (!dual) {
                lhs = a * kron(Mat::identity(n), module_act(p, m, j, g));
                for (const auto& [pr, c] : p.coproduct(g)) {
                    Mat up = m.dim(j + 1) ? module_act(p, m, j + 1, pr.first) : Mat(0, 0);
                    Mat term = a * kron(p.act_on_v(pr.second), Mat::identity(m.dim(j)));
                    rhs += c * (m.dim(j + 1) ? up * term : term);
                }
            } else {
                lhs = m.dim(j + 1) ? module_act(p, m, j + 1, g) * a : a;
                for (const auto& [pr, c] : p.coproduct(g))
                    rhs += c * (a * kron(dual_act_on_tensor(p, pr.second, 1), module_act(p, m, j, pr.first)));
            }
            if (lhs != rhs) return {false, "act1 not equivariant under " + key_name(g), where(j)};
        }
    }
    return {};
}

CheckResult check_equivariance(const DualityComplex& dc) {
    const auto& c = dc.complex;
    for (const auto& act : dc.actions)
        for (const auto& [cell, m] : act.maps) {
            auto [r, s] = cell;
            const Cell tgt{r + act.dr, s + act.ds};
            if (!c.materialized(r + 1, s) || !c.materialized(tgt.first + 1, tgt.second)) continue;
            auto next = act.maps.find({r + 1, s});
            if (next == act.maps.end()) continue;
            Mat lhs = c.differential(tgt.first, tgt.second) * m;
            Mat rhs = act.sign * (next->second * c.differential(r, s));
            if (lhs != rhs) return {false, dc.construction + ": " + act.name + " does not commute with d", cell};
        }
    return {};
}

// ---------------------------------------------------------------- layouts

namespace {

struct Part {
    int j = 0, i = 0;
    std::size_t off = 0, dim = 0;
};

struct Layout {
    bool materialized = false;
    std::vector<Part> parts;
    std::size_t dim = 0;
    const Part* find(int j, int i) const {
        for (const auto& p : parts)
            if (p.j == j && p.i == i) return &p;
        return nullptr;
    }
};

void put(Mat& m, std::size_t ro, std::size_t co, const Mat& blk) {
    for (std::size_t a = 0; a < blk.rows(); ++a)
        for (std::size_t b = 0; b < blk.cols(); ++b)
            if (sgn(blk(a, b)) != 0) m(ro + a, co + b) += blk(a, b);
}

/// f -> act o (id_V (x) f) o b, for f : W -> X_j, with act : V (x) X_j -> Y
/// and b : W' -> V (x) W.
Mat rho_map(const Mat& act, const Mat& b, std::size_t n, std::size_t xj, std::size_t w) {
    const std::size_t y = act.rows(), w2 = b.cols();
    Mat out(y * w2, xj * w);
    for (std::size_t yy = 0; yy < y; ++yy)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t x = 0; x < xj; ++x) {
                const Rat& av = act(yy, v * xj + x);
                if (sgn(av) == 0) continue;
                for (std::size_t ww = 0; ww < w; ++ww)
                    for (std::size_t w2i = 0; w2i < w2; ++w2i) {
                        const Rat& bv = b(v * w + ww, w2i);
                        if (sgn(bv) != 0) out(yy * w2 + w2i, x * w + ww) += av * bv;
                    }
            }
    return out;
}

Layout i_layout(const KoszulPair& kp, const GradedAModule& x, int r, int s) {
    Layout l;
    const int N = kp.h.max_degree();
    if (r < -1 || r > N + 1) return l;
    if (!x.zero_below && r >= 0 && x.s_min - 1 - r - s >= 0) return l;
    for (int j = x.s_min; j <= x.s_max(); ++j) {
        const int i = j - r - s;
        if (i < 0 || r < 0 || x.dim(j) == 0) continue;
        if (i > N || r > N) return l;
        Part p{j, i, l.dim, x.dim(j) * kp.h.k_dim(r) * kp.h.h_dim(i)};
        l.dim += p.dim;
        l.parts.push_back(p);
    }
    l.materialized = true;
    return l;
}

Layout p_layout(const KoszulPair& kp, const GradedAModule& x, int r, int s) {
    Layout l;
    const int N = kp.h.max_degree();
    if (r < -1 || r > N + 1) return l;
    if (!x.zero_above && r >= 0 && s - (x.s_max() + 1) - r >= 0) return l;
    for (int j = x.s_min; j <= x.s_max(); ++j) {
        const int i = s - j - r;
        if (i < 0 || r < 0 || x.dim(j) == 0) continue;
        if (i > N || r > N) return l;
        Part p{j, i, l.dim, kp.h.h_dim(i) * kp.h.k_dim(r) * x.dim(j)};
        l.dim += p.dim;
        l.parts.push_back(p);
    }
    l.materialized = true;
    return l;
}

} // namespace

// ---------------------------------------------------------------- I^•

DualityComplex I_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x) {
    if (!x.zero_above) throw WindowError("I_complex: module must be bounded above");
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    DualityComplex dc;
    dc.construction = "I";
    std::map<Cell, Layout> lay;
    const int s_lo = x.s_min - 2 * N - 2, s_hi = x.s_max() + 2;
    for (int r = -1; r <= N + 1; ++r)
        for (int s = s_lo; s <= s_hi; ++s) {
            Layout l = i_layout(kp, x, r, s);
            if (!l.materialized) continue;
            dc.complex.set_component(r, s, l.dim);
            lay[{r, s}] = l;
        }
    for (const auto& [cell, src] : lay) {
        auto [r, s] = cell;
        auto tit = lay.find({r + 1, s});
        if (tit == lay.end() || src.dim == 0 || tit->second.dim == 0) continue;
        const Layout& tgt = tit->second;
        Mat d(tgt.dim, src.dim);
        for (const auto& part : src.parts) {
            const std::size_t xj = x.dim(part.j);
            if (const Part* t = tgt.find(part.j, part.i - 1))
                put(d, t->off, part.off,
                    hom_map(Mat::identity(xj), koszul_right_map(kp.h, r + 1, part.i - 1)));
            if (const Part* t = tgt.find(part.j + 1, part.i)) {
                Mat b = kron(kp.h.split_left(r + 1), Mat::identity(kp.h.h_dim(part.i)));
                put(d, t->off, part.off,
                    sign_mat(r, rho_map(x.act(part.j, n), b, n, xj, kp.h.k_dim(r) * kp.h.h_dim(part.i))));
            }
        }
        dc.complex.set_differential(r, s, std::move(d));
    }
    for (const auto& g : p.generators()) {
        RecordedAction act{key_name(g), 0, 0, 1, {}};
        for (const auto& [cell, l] : lay) {
            Mat m(l.dim, l.dim);
            for (const auto& part : l.parts)
                for (const auto& [pr, c] : p.coproduct(g))
                    put(m, part.off, part.off,
                        c * kron(module_act(p, x, part.j, pr.first),
                                 kh_act(p, kp, pr.second, cell.first, part.i).transpose()));
            act.maps[cell] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    for (std::size_t b = 0; b < n; ++b) {
        RecordedAction act{"v" + std::to_string(b), 0, 1, 1, {}};
        for (const auto& [cell, l] : lay) {
            auto tit = lay.find({cell.first, cell.second + 1});
            if (tit == lay.end()) continue;
            Mat m(tit->second.dim, l.dim);
            for (const auto& part : l.parts)
                if (const Part* t = tit->second.find(part.j, part.i - 1))
                    put(m, t->off, part.off,
                        hom_map(Mat::identity(x.dim(part.j)),
                                kron(Mat::identity(kp.h.k_dim(cell.first)), right_mult(kp.h, b, part.i - 1))));
            act.maps[cell] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    return dc;
}

// ---------------------------------------------------------------- P^•

DualityComplex P_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x) {
    (void)p;
    if (!x.zero_below) throw WindowError("P_complex: module must be bounded below");
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    DualityComplex dc;
    dc.construction = "P";
    std::map<Cell, Layout> lay;  // keyed by (-r, s)
    const int s_lo = x.s_min - 2, s_hi = x.s_max() + 2 * N + 2;
    for (int r = -1; r <= N + 1; ++r)
        for (int s = s_lo; s <= s_hi; ++s) {
            Layout l = p_layout(kp, x, r, s);
            if (!l.materialized) continue;
            dc.complex.set_component(-r, s, l.dim);
            lay[{-r, s}] = l;
        }
    for (const auto& [cell, src] : lay) {
        const int r = -cell.first, s = cell.second;
        auto tit = lay.find({-r + 1, s});
        if (tit == lay.end() || src.dim == 0 || tit->second.dim == 0) continue;
        const Layout& tgt = tit->second;
        Mat d(tgt.dim, src.dim);
        for (const auto& part : src.parts) {
            const std::size_t xj = x.dim(part.j);
            if (const Part* t = tgt.find(part.j, part.i + 1))
                put(d, t->off, part.off, sign_mat(r, kron(koszul_left_map(kp.h, part.i, r), Mat::identity(xj))));
            if (const Part* t = tgt.find(part.j + 1, part.i)) {
                Mat lam = kron(Mat::identity(kp.h.k_dim(r - 1)), x.act(part.j, n)) *
                          kron(kp.h.split_right(r), Mat::identity(xj));
                put(d, t->off, part.off, kron(Mat::identity(kp.h.h_dim(part.i)), lam));
            }
        }
        dc.complex.set_differential(-r, s, std::move(d));
    }
    for (std::size_t b = 0; b < n; ++b) {
        RecordedAction act{"v" + std::to_string(b), 0, 1, 1, {}};
        for (const auto& [cell, l] : lay) {
            auto tit = lay.find({cell.first, cell.second + 1});
            if (tit == lay.end()) continue;
            Mat m(tit->second.dim, l.dim);
            for (const auto& part : l.parts)
                if (const Part* t = tit->second.find(part.j, part.i + 1))
                    put(m, t->off, part.off,
                        kron(left_mult(kp.h, b, part.i), Mat::identity(kp.h.k_dim(-cell.first) * x.dim(part.j))));
            act.maps[cell] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    return dc;
}

// ---------------------------------------------------------------- soc I

namespace {

bool soc_materialized(const KoszulPair& kp, const GradedAModule& x, int r, int s) {
    const int N = kp.h.max_degree();
    const int j = r + s;
    if (r < -1 || r > N + 1) return false;
    if (!known(x, j)) return false;
    if (r == N + 1 && x.dim(j) != 0) return false;
    return true;
}

std::size_t soc_dim(const KoszulPair& kp, const GradedAModule& x, int r, int s) {
    if (r < 0 || r > kp.h.max_degree()) return 0;
    return kp.h.k_dim(r) * x.dim(r + s);
}

/// Contraction by xi (coordinates in H^!_q) as a map K_{r+q} -> K_r.
Mat k_contraction(const KoszulPair& kp, int r, const Vec& xi, int q) {
    const std::size_t n = kp.h.num_generators();
    const Subspace& big = kp.h.koszul(r + q);
    const Subspace& small = kp.h.koszul(r);
    Mat img = right_contraction(n, r + q, kp.dual.section(q) * xi, q) * big.inclusion();
    Mat c = small.pivot_selector() * img;
    if (!(small.inclusion() * c == img)) throw ContractViolation("contraction leaves the Koszul subspace");
    return c;
}

Mat soc_a0(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x, const A0Key& k, int r, int j) {
    const std::size_t d = soc_dim(kp, x, r, j - r);
    Mat m(d, d);
    if (d == 0) return m;
    for (const auto& [pr, c] : p.coproduct(k))
        m += c * kron(module_act(p, x, j, pr.first), k_act(p, kp.h, pr.second, r, false).transpose());
    return m;
}

Vec unit(std::size_t n, std::size_t b) {
    Vec v(n);
    v[b] = 1;
    return v;
}

} // namespace

DualityComplex socI_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x, bool signed_rho) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    DualityComplex dc;
    dc.construction = signed_rho ? "socI" : "socI(unsigned)";
    std::vector<Cell> cells;
    for (int r = -1; r <= N + 1; ++r)
        for (int s = x.s_min - N - 2; s <= x.s_max() + 2; ++s)
            if (soc_materialized(kp, x, r, s)) {
                dc.complex.set_component(r, s, soc_dim(kp, x, r, s));
                cells.emplace_back(r, s);
            }
    for (auto [r, s] : cells) {
        if (!dc.complex.materialized(r + 1, s) || soc_dim(kp, x, r, s) == 0 || soc_dim(kp, x, r + 1, s) == 0)
            continue;
        const int j = r + s;
        Mat m = rho_map(x.act(j, n), kp.h.split_left(r + 1), n, x.dim(j), kp.h.k_dim(r));
        dc.complex.set_differential(r, s, signed_rho ? sign_mat(r, std::move(m)) : std::move(m));
    }
    for (const auto& g : p.generators()) {
        RecordedAction act{key_name(g), 0, 0, 1, {}};
        for (auto [r, s] : cells)
            act.maps[{r, s}] = soc_a0(p, kp, x, g, r, r + s);
        dc.actions.push_back(std::move(act));
    }
    for (std::size_t b = 0; b < n; ++b) {
        RecordedAction act{"xi" + std::to_string(b), 1, -1, signed_rho ? Rat(-1) : Rat(1), {}};
        for (auto [r, s] : cells) {
            if (!dc.complex.materialized(r + 1, s - 1)) continue;
            const int j = r + s;
            Mat m(soc_dim(kp, x, r + 1, s - 1), soc_dim(kp, x, r, s));
            if (r >= 0 && r + 1 <= N && x.dim(j) > 0)
                m = hom_map(Mat::identity(x.dim(j)), k_contraction(kp, r, unit(n, b), 1));
            act.maps[{r, s}] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    return dc;
}

CheckResult check_socI_module_laws(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    for (int r = 0; r + 1 <= N; ++r) {
        std::vector<Mat> xi;
        for (std::size_t b = 0; b < n; ++b) xi.push_back(k_contraction(kp, r, unit(n, b), 1));
        // H^! acts: xi_b |> (xi_c |> f) = (xi_b xi_c) |> f
        if (r + 2 <= N)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    Vec prod = kp.dual.mult(1, 1) * kron(unit(n, b), unit(n, c));
                    Mat lhs = xi[c] * k_contraction(kp, r + 1, unit(n, b), 1);
                    if (lhs != k_contraction(kp, r, prod, 2))
                        return {false, "H^! action law fails", Cell{r, 0}};
                }
        for (int j = x.s_min; j <= x.s_max(); ++j) {
            const std::size_t xj = x.dim(j);
            if (xj == 0) continue;
            for (const auto& g : p.generators())
                for (std::size_t b = 0; b < n; ++b) {
                    Mat lhs = soc_a0(p, kp, x, g, r + 1, j) * hom_map(Mat::identity(xj), xi[b]);
                    Mat rhs(lhs.rows(), lhs.cols());
                    for (const auto& [pr, c] : p.coproduct(g)) {
                        Vec moved = dual_act_on_h(p, kp.dual, pr.second, 1).col_vec(b);
                        Mat xs(kp.h.k_dim(r), kp.h.k_dim(r + 1));
                        for (std::size_t t = 0; t < n; ++t)
                            if (sgn(moved[t]) != 0) xs += moved[t] * xi[t];
                        rhs += c * (hom_map(Mat::identity(xj), xs) * soc_a0(p, kp, x, pr.first, r, j));
                    }
                    if (lhs != rhs) return {false, "A* module law fails for " + key_name(g), Cell{r, j - r}};
                }
        }
    }
    return {};
}

CheckResult check_socI_subcomplex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x) {
    DualityComplex I = I_complex(p, kp, x);
    DualityComplex S = socI_complex(p, kp, x, true);
    const int N = kp.h.max_degree();
    auto incl = [&](int r, int s) {
        Layout l = i_layout(kp, x, r, s);
        Mat m(l.dim, soc_dim(kp, x, r, s));
        if (const Part* part = l.find(r + s, 0))
            for (std::size_t t = 0; t < part->dim; ++t) m(part->off + t, t) = 1;
        return m;
    };
    for (const auto& [cell, d] : S.complex.components()) {
        auto [r, s] = cell;
        if (r < 0 || r + 1 > N) continue;
        if (!I.complex.materialized(r, s) || !I.complex.materialized(r + 1, s)) continue;
        if (!S.complex.materialized(r + 1, s)) continue;
        if (I.complex.differential(r, s) * incl(r, s) != incl(r + 1, s) * S.complex.differential(r, s))
            return {false, "socle inclusion is not a chain map", cell};
    }
    return {};
}

// ---------------------------------------------------------------- Theta

Identification identify_socI(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& x) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    DualityComplex S = socI_complex(p, kp, x, true);
    Identification res;
    auto theta = [&](int r, int j) {
        const std::size_t xj = x.dim(j), kr = kp.h.k_dim(r);
        Mat g = dual_pairing_hdual_k(kp, r);
        Mat t(xj * kr, kp.dual.h_dim(r) * xj);
        for (std::size_t xi = 0; xi < g.rows(); ++xi)
            for (std::size_t u = 0; u < kr; ++u)
                for (std::size_t xx = 0; xx < xj; ++xx) t(xx * kr + u, xi * xj + xx) = g(xi, u);
        return t;
    };
    auto fail = [&](bool Identification::*flag, int r, int s, const std::string& why) {
        if (res.*flag) {
            res.*flag = false;
            if (!res.first_failure) {
                res.first_failure = Cell{r, s};
                res.detail = why;
            }
        }
    };
    for (int r = 0; r <= N; ++r)
        for (int j = x.s_min; j <= x.s_max(); ++j) {
            const int s = j - r;
            const std::size_t xj = x.dim(j);
            if (xj == 0) continue;
            ++res.cells_checked;
            Mat t = theta(r, j);
            if (t.rows() != t.cols() || rank(t) != t.rows()) fail(&Identification::bijective, r, s, "Theta not invertible");
            if (r + 1 <= N && x.dim(j + 1) > 0 && S.complex.materialized(r + 1, s)) {
                Mat dm(kp.dual.h_dim(r + 1) * x.dim(j + 1), kp.dual.h_dim(r) * xj);
                const Mat a = x.act(j, n);
                for (std::size_t b = 0; b < n; ++b)
                    dm += kron(right_mult(kp.dual, b, r), a * kron(unit_column(n, b), Mat::identity(xj)));
                dm = sign_mat(r, std::move(dm));
                if (theta(r + 1, j + 1) * dm != S.complex.differential(r, s) * t)
                    fail(&Identification::chain_map, r, s, "Theta is not a chain map");
            }
            for (std::size_t k = 0; k < p.generators().size(); ++k) {
                const A0Key g = p.generators()[k];
                Mat model(t.cols(), t.cols());
                for (const auto& [pr, c] : p.coproduct(g))
                    model += c * kron(dual_act_on_h(p, kp.dual, pr.second, r), module_act(p, x, j, pr.first));
                if (t * model != S.actions[k].maps.at({r, s}) * t)
                    fail(&Identification::equivariant, r, s, "Theta not A_0-equivariant");
            }
            if (r + 1 <= N)
                for (std::size_t b = 0; b < n; ++b) {
                    Mat model = kron(left_mult(kp.dual, b, r), Mat::identity(xj));
                    const auto& xs = S.actions[p.generators().size() + b].maps.at({r, s});
                    if (theta(r + 1, j) * model != xs * t)
                        fail(&Identification::equivariant, r, s, "Theta not H^!-equivariant");
                }
        }
    return res;
}

// ---------------------------------------------------------------- Top P

namespace {

bool top_materialized(const KoszulPair& kp, const GradedAModule& y, int r, int s) {
    const int N = kp.h.max_degree();
    const int j = s - r;
    if (r < -1 || r > N + 1) return false;
    if (!known(y, j)) return false;
    if (r == N + 1 && y.dim(j) != 0) return false;
    return true;
}

std::size_t top_dim(const KoszulPair& kp, const GradedAModule& y, int r, int s) {
    if (r < 0 || r > kp.h.max_degree()) return 0;
    return kp.dual.k_dim(r) * y.dim(s - r);
}

Mat kdual_left_contraction(const KoszulPair& kp, int r, std::size_t b) {
    const std::size_t n = kp.h.num_generators();
    const Subspace& big = kp.dual.koszul(r);
    const Subspace& small = kp.dual.koszul(r - 1);
    Mat img = left_contraction(n, r, unit(n, b), 1) * big.inclusion();
    Mat c = small.pivot_selector() * img;
    if (!(small.inclusion() * c == img)) throw ContractViolation("left contraction leaves the dual Koszul subspace");
    return c;
}

} // namespace

DualityComplex topP_complex(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& y) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    DualityComplex dc;
    dc.construction = "topP";
    std::vector<Cell> cells;  // (r, s) with r >= -1, stored at (-r, s)
    for (int r = -1; r <= N + 1; ++r)
        for (int s = y.s_min - 2; s <= y.s_max() + N + 2; ++s)
            if (top_materialized(kp, y, r, s)) {
                dc.complex.set_component(-r, s, top_dim(kp, y, r, s));
                cells.emplace_back(r, s);
            }
    for (auto [r, s] : cells) {
        if (!dc.complex.materialized(-r + 1, s) || top_dim(kp, y, r, s) == 0 || top_dim(kp, y, r - 1, s) == 0)
            continue;
        const int j = s - r;
        dc.complex.set_differential(-r, s, kron(Mat::identity(kp.dual.k_dim(r - 1)), y.act(j, n)) *
                                               kron(kp.dual.split_right(r), Mat::identity(y.dim(j))));
    }
    for (const auto& g : p.generators()) {
        RecordedAction act{key_name(g), 0, 0, 1, {}};
        for (auto [r, s] : cells) {
            const std::size_t d = top_dim(kp, y, r, s);
            Mat m(d, d);
            if (d > 0)
                for (const auto& [pr, c] : p.coproduct(g))
                    m += c * kron(k_act(p, kp.dual, pr.second, r, true), module_act(p, y, s - r, pr.first));
            act.maps[{-r, s}] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    for (std::size_t b = 0; b < n; ++b) {
        RecordedAction act{"v" + std::to_string(b), 1, -1, 1, {}};
        for (auto [r, s] : cells) {
            if (!dc.complex.materialized(-r + 1, s - 1)) continue;
            Mat m(top_dim(kp, y, r - 1, s - 1), top_dim(kp, y, r, s));
            if (r >= 1 && r <= N && y.dim(s - r) > 0)
                m = kron(kdual_left_contraction(kp, r, b), Mat::identity(y.dim(s - r)));
            act.maps[{-r, s}] = std::move(m);
        }
        dc.actions.push_back(std::move(act));
    }
    return dc;
}

Identification identify_topP(const ActionProvider& p, const KoszulPair& kp, const GradedAModule& y) {
    const int N = kp.h.max_degree();
    const std::size_t n = kp.h.num_generators();
    DualityComplex T = topP_complex(p, kp, y);
    Identification res;
    auto phi = [&](int r, int j) {
        const std::size_t yj = y.dim(j), hr = kp.h.h_dim(r);
        Mat pr = dual_pairing_kdual_h(kp, r);
        Mat t(yj * hr, kp.dual.k_dim(r) * yj);
        for (std::size_t z = 0; z < pr.rows(); ++z)
            for (std::size_t h = 0; h < hr; ++h)
                for (std::size_t yy = 0; yy < yj; ++yy) t(yy * hr + h, z * yj + yy) = pr(z, h);
        return t;
    };
    auto fail = [&](bool Identification::*flag, int r, int s, const std::string& why) {
        if (res.*flag) {
            res.*flag = false;
            if (!res.first_failure) {
                res.first_failure = Cell{-r, s};
                res.detail = why;
            }
        }
    };
    for (int r = 0; r <= N; ++r)
        for (int j = y.s_min; j <= y.s_max(); ++j) {
            const int s = j + r;
            const std::size_t yj = y.dim(j);
            if (yj == 0) continue;
            ++res.cells_checked;
            Mat t = phi(r, j);
            if (t.rows() != t.cols() || rank(t) != t.rows()) fail(&Identification::bijective, r, s, "Phi not invertible");
            if (r >= 1 && T.complex.materialized(-r + 1, s) && y.dim(j + 1) > 0) {
                // g(h') = sum_b e_b^* . f(e_b h')
                const Mat a = y.act(j, n);
                Mat di(y.dim(j + 1) * kp.h.h_dim(r - 1), yj * kp.h.h_dim(r));
                for (std::size_t b = 0; b < n; ++b)
                    di += hom_map(a * kron(unit_column(n, b), Mat::identity(yj)), left_mult(kp.h, b, r - 1));
                if (di * t != phi(r - 1, j + 1) * T.complex.differential(-r, s))
                    fail(&Identification::chain_map, r, s, "Phi is not a chain map");
            }
            for (std::size_t k = 0; k < p.generators().size(); ++k) {
                const A0Key g = p.generators()[k];
                Mat target(t.rows(), t.rows());
                for (const auto& [pr, c] : p.coproduct(g))
                    target += c * kron(module_act(p, y, j, pr.first), h_act(p, kp.h, pr.second, r, false).transpose());
                if (target * t != t * T.actions[k].maps.at({-r, s}))
                    fail(&Identification::equivariant, r, s, "Phi not A_0-equivariant");
            }
            if (r >= 1)
                for (std::size_t b = 0; b < n; ++b) {
                    Mat target = hom_map(Mat::identity(yj), right_mult(kp.h, b, r - 1));
                    const auto& vs = T.actions[p.generators().size() + b].maps.at({-r, s});
                    if (target * t != phi(r - 1, j) * vs) fail(&Identification::equivariant, r, s, "Phi not H-equivariant");
                }
        }
    return res;
}

GradedAModule free_dual_module(const ActionProvider& p, const KoszulPair& kp, const A0Module& x) {
    const int N = kp.h.max_degree();
    GradedAModule y;
    y.s_min = 0;
    y.zero_above = false;
    for (int j = 0; j <= N; ++j) {
        A0Module c{kp.dual.h_dim(j) * x.dim, {}};
        for (const auto& g : p.generators()) {
            Mat m(c.dim, c.dim);
            for (const auto& [pr, co] : p.coproduct(g))
                m += co * kron(dual_act_on_h(p, kp.dual, pr.second, j), p.act_on_module(x, pr.first));
            c.action.push_back(std::move(m));
        }
        y.components.push_back(std::move(c));
        if (j < N) y.act1[j] = kron(kp.dual.mult(1, j), Mat::identity(x.dim));
    }
    return y;
}

} // namespace koszulkit
