#include "koszulkit/action.hpp"

#include <algorithm>
#include <sstream>

namespace koszulkit {

namespace {

void add_to(A0Elem& e, const A0Key& k, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = e.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) e.erase(it);
    }
}

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec bilinear(const std::vector<Vec>& table, std::size_t d, const Vec& x, const Vec& y) {
    Vec out(table.empty() ? 0 : table[0].size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (sgn(y[j]) == 0) continue;
            const Vec& t = table[i * d + j];
            for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * y[j] * t[k];
        }
    }
    return out;
}

Vec lie_bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
    Vec out(g.dim());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (sgn(x[a]) == 0) continue;
        for (std::size_t b = 0; b < y.size(); ++b) {
            if (sgn(y[b]) == 0) continue;
            for (std::size_t c = 0; c < out.size(); ++c) out[c] += x[a] * y[b] * g.bracket[a][b][c];
        }
    }
    return out;
}

Mat from_coords(const std::vector<Mat>& mats, const Vec& coords, std::size_t n) {
    Mat out(n, n);
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (sgn(coords[k]) != 0) out += coords[k] * mats[k];
    return out;
}

AxiomCheck fail(std::string axiom, std::vector<std::size_t> where) {
    return {false, std::move(axiom), std::move(where)};
}

} // namespace

// ---------------------------------------------------------------- validation

AxiomCheck validate_bialgebra(const Bialgebra& b) {
    const std::size_t d = b.dim;
    if (b.mult.size() != d * d || b.unit.size() != d || b.comult.size() != d || b.counit.size() != d)
        return fail("shape", {});
    for (const auto& v : b.mult)
        if (v.size() != d) return fail("shape", {});
    for (const auto& v : b.comult)
        if (v.size() != d * d) return fail("shape", {});

    auto mul = [&](const Vec& x, const Vec& y) { return bilinear(b.mult, d, x, y); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (mul(mul(basis_vec(d, i), basis_vec(d, j)), basis_vec(d, k)) !=
                    mul(basis_vec(d, i), mul(basis_vec(d, j), basis_vec(d, k))))
                    return fail("associativity", {i, j, k});
    for (std::size_t i = 0; i < d; ++i)
        if (mul(b.unit, basis_vec(d, i)) != basis_vec(d, i) || mul(basis_vec(d, i), b.unit) != basis_vec(d, i))
            return fail("unit", {i});

    Mat D(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < d * d; ++r) D(r, i) = b.comult[i][r];
    const Mat I = Mat::identity(d);
    Mat lhs = kron(D, I) * D, rhs = kron(I, D) * D;
    for (std::size_t i = 0; i < d; ++i)
        if (lhs.col_vec(i) != rhs.col_vec(i)) return fail("coassociativity", {i});
    const Mat eps = Mat::row(b.counit);
    Mat cl = kron(eps, I) * D, cr = kron(I, eps) * D;
    for (std::size_t i = 0; i < d; ++i)
        if (cl.col_vec(i) != I.col_vec(i) || cr.col_vec(i) != I.col_vec(i)) return fail("counit", {i});

    // Delta and epsilon are algebra maps; (a (x) b)(c (x) e) = ac (x) be.
    auto tensor_mul = [&](const Vec& x, const Vec& y) {
        Vec out(d * d);
        for (std::size_t p = 0; p < d * d; ++p) {
            if (sgn(x[p]) == 0) continue;
            for (std::size_t q = 0; q < d * d; ++q) {
                if (sgn(y[q]) == 0) continue;
                Vec l = mul(basis_vec(d, p / d), basis_vec(d, q / d));
                Vec r = mul(basis_vec(d, p % d), basis_vec(d, q % d));
                Vec lr = kron(l, r);
                for (std::size_t t = 0; t < d * d; ++t) out[t] += x[p] * y[q] * lr[t];
            }
        }
        return out;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec prod = mul(basis_vec(d, i), basis_vec(d, j));
            if (D * prod != tensor_mul(b.comult[i], b.comult[j])) return fail("comultiplication is multiplicative", {i, j});
            Rat e = 0;
            for (std::size_t k = 0; k < d; ++k) e += b.counit[k] * prod[k];
            if (e != b.counit[i] * b.counit[j]) return fail("counit is multiplicative", {i, j});
        }
    if (D * b.unit != kron(b.unit, b.unit)) return fail("comultiplication is unital", {});
    Rat eu = 0;
    for (std::size_t k = 0; k < d; ++k) eu += b.counit[k] * b.unit[k];
    if (eu != 1) return fail("counit is unital", {});
    return {};
}

AxiomCheck validate_lie(const LieAlgebra& g, const std::vector<int>& parity) {
    const std::size_t n = g.dim();
    if (g.bracket.size() != n) return fail("shape", {});
    for (const auto& row : g.bracket) {
        if (row.size() != n) return fail("shape", {});
        for (const auto& v : row)
            if (v.size() != n) return fail("shape", {});
    }
    auto par = [&](std::size_t a) { return parity.empty() ? 0 : parity[a]; };
    auto sign = [](int e) { return (e % 2) ? Rat(-1) : Rat(1); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Rat s = sign(par(a) * par(b));
            for (std::size_t c = 0; c < n; ++c)
                if (g.bracket[a][b][c] + s * g.bracket[b][a][c] != 0) return fail("antisymmetry", {a, b});
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Vec ea = basis_vec(n, a), eb = basis_vec(n, b), ec = basis_vec(n, c);
                Vec t1 = lie_bracket(g, ea, g.bracket[b][c]);
                Vec t2 = lie_bracket(g, eb, g.bracket[c][a]);
                Vec t3 = lie_bracket(g, ec, g.bracket[a][b]);
                const Rat s1 = sign(par(a) * par(c)), s2 = sign(par(b) * par(a)), s3 = sign(par(c) * par(b));
                for (std::size_t k = 0; k < n; ++k)
                    if (s1 * t1[k] + s2 * t2[k] + s3 * t3[k] != 0) return fail("Jacobi", {a, b, c});
            }
    return {};
}

// ---------------------------------------------------------------- provider

ActionProvider ActionProvider::from_bialgebra(Bialgebra b, std::vector<Mat> action) {
    if (action.size() != b.dim) throw DimensionMismatch("bialgebra action: one matrix per basis element");
    ActionProvider p;
    p.kind_ = Kind::bialgebra;
    p.v_dim_ = action.empty() ? 0 : action[0].rows();
    for (const auto& m : action)
        if (m.rows() != p.v_dim_ || m.cols() != p.v_dim_) throw DimensionMismatch("bialgebra action: shape");
    p.bialg_ = std::move(b);
    p.gen_action_ = std::move(action);
    return p;
}

ActionProvider ActionProvider::from_lie(LieAlgebra g, std::vector<Mat> rho) {
    if (rho.size() != g.dim()) throw DimensionMismatch("lie action: one matrix per basis element");
    ActionProvider p;
    p.kind_ = Kind::lie;
    p.v_dim_ = rho.empty() ? 0 : rho[0].rows();
    for (auto& m : rho) {
        if (m.rows() != p.v_dim_ || m.cols() != p.v_dim_) throw DimensionMismatch("lie action: shape");
        p.gen_action_.push_back(Rat(-1) * m);
    }
    p.lie_ = std::move(g);
    return p;
}

A0Elem ActionProvider::one() const {
    A0Elem e;
    if (kind_ == Kind::lie) {
        e[{}] = 1;
    } else {
        for (std::size_t i = 0; i < bialg_.dim; ++i) add_to(e, {static_cast<int>(i)}, bialg_.unit[i]);
    }
    return e;
}

A0Elem ActionProvider::pbw_normal_form(const std::vector<int>& word) const {
    auto it = pbw_cache_.find(word);
    if (it != pbw_cache_.end()) return it->second;
    A0Elem out;
    std::size_t i = 0;
    while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
    if (i + 1 >= word.size()) {
        out[word] = 1;
    } else {
        // x_b x_a = x_a x_b + [x_b, x_a]
        std::vector<int> swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        out = pbw_normal_form(swapped);
        const Vec& br = lie_.bracket[static_cast<std::size_t>(word[i])][static_cast<std::size_t>(word[i + 1])];
        for (std::size_t c = 0; c < br.size(); ++c) {
            if (sgn(br[c]) == 0) continue;
            std::vector<int> shorter(word.begin(), word.begin() + static_cast<long>(i));
            shorter.push_back(static_cast<int>(c));
            shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 2, word.end());
            for (const auto& [k, v] : pbw_normal_form(shorter)) add_to(out, k, br[c] * v);
        }
    }
    pbw_cache_[word] = out;
    return out;
}

A0Elem ActionProvider::multiply(const A0Elem& x, const A0Elem& y) const {
    A0Elem out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            if (kind_ == Kind::lie) {
                std::vector<int> w = kx;
                w.insert(w.end(), ky.begin(), ky.end());
                for (const auto& [k, c] : pbw_normal_form(w)) add_to(out, k, cx * cy * c);
            } else {
                const std::size_t d = bialg_.dim;
                const Vec& t = bialg_.mult[static_cast<std::size_t>(kx[0]) * d + static_cast<std::size_t>(ky[0])];
                for (std::size_t k = 0; k < d; ++k) add_to(out, {static_cast<int>(k)}, cx * cy * t[k]);
            }
        }
    return out;
}

A0Tensor ActionProvider::coproduct(const A0Key& k) const {
    A0Tensor out;
    if (kind_ == Kind::lie) {
        // product of x (x) 1 + 1 (x) x over the letters; subsequences of a
        // sorted word stay sorted
        const std::size_t len = k.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            A0Key l, r;
            for (std::size_t t = 0; t < len; ++t) (mask >> t & 1 ? l : r).push_back(k[t]);
            out[{l, r}] += 1;
        }
    } else {
        const std::size_t d = bialg_.dim;
        const Vec& c = bialg_.comult[static_cast<std::size_t>(k[0])];
        for (std::size_t p = 0; p < d * d; ++p)
            if (sgn(c[p]) != 0) out[{{static_cast<int>(p / d)}, {static_cast<int>(p % d)}}] = c[p];
    }
    return out;
}

Rat ActionProvider::counit(const A0Key& k) const {
    if (kind_ == Kind::lie) return k.empty() ? Rat(1) : Rat(0);
    return bialg_.counit[static_cast<std::size_t>(k[0])];
}

bool ActionProvider::cocommutative() const {
    if (kind_ == Kind::lie) return true;
    const std::size_t d = bialg_.dim;
    for (const auto& c : bialg_.comult)
        for (std::size_t p = 0; p < d * d; ++p)
            if (c[p] != c[(p % d) * d + p / d]) return false;
    return true;
}

std::vector<A0Key> ActionProvider::generators() const {
    std::vector<A0Key> g;
    const std::size_t n = kind_ == Kind::lie ? lie_.dim() : bialg_.dim;
    for (std::size_t i = 0; i < n; ++i) g.push_back({static_cast<int>(i)});
    return g;
}

std::vector<A0Key> ActionProvider::test_basis() const {
    std::vector<A0Key> g = generators();
    if (kind_ == Kind::lie) g.insert(g.begin(), A0Key{});
    return g;
}

Mat ActionProvider::act_on_v(const A0Key& k) const {
    if (kind_ == Kind::bialgebra) return gen_action_[static_cast<std::size_t>(k[0])];
    Mat r = Mat::identity(v_dim_);
    for (int a : k) r = gen_action_[static_cast<std::size_t>(a)] * r;
    return r;
}

Mat ActionProvider::act_on_module(const A0Module& m, const A0Key& k) const {
    if (kind_ == Kind::bialgebra) return m.action[static_cast<std::size_t>(k[0])];
    Mat r = Mat::identity(m.dim);
    for (int a : k) r = r * m.action[static_cast<std::size_t>(a)];
    return r;
}

AxiomCheck validate_module(const ActionProvider& p, const A0Module& m) {
    const auto gens = p.generators();
    if (m.action.size() != gens.size()) return fail("shape", {});
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim) return fail("shape", {});
    if (p.kind() == ActionProvider::Kind::lie) {
        const auto& g = p.lie();
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b)
                if (from_coords(m.action, g.bracket[a][b], m.dim) !=
                    m.action[a] * m.action[b] - m.action[b] * m.action[a])
                    return fail("representation", {a, b});
        return {};
    }
    const auto& bi = p.bialgebra();
    if (from_coords(m.action, bi.unit, m.dim) != Mat::identity(m.dim)) return fail("unit acts trivially", {});
    for (std::size_t i = 0; i < bi.dim; ++i)
        for (std::size_t j = 0; j < bi.dim; ++j)
            if (from_coords(m.action, bi.mult[i * bi.dim + j], m.dim) != m.action[i] * m.action[j])
                return fail("module law", {i, j});
    return {};
}

// ---------------------------------------------------------------- tensor actions

Mat act_on_tensor(const ActionProvider& p, const A0Key& k, int r) {
    if (r < 0) throw std::invalid_argument("act_on_tensor: negative power");
    if (r == 0) return Mat::from({{p.counit(k)}});
    if (r == 1) return p.act_on_v(k);
    const std::size_t dim = tensor_power_dim(p.v_dim(), r);
    Mat out(dim, dim);
    for (const auto& [pair, c] : p.coproduct(k))
        out += c * kron(p.act_on_v(pair.first), act_on_tensor(p, pair.second, r - 1));
    return out;
}

Mat dual_act_on_tensor(const ActionProvider& p, const A0Key& k, int r) {
    const std::size_t n = p.v_dim();
    return reverse_rows(reverse_cols(act_on_tensor(p, k, r).transpose(), n, r), n, r);
}

Mat act_on_h(const ActionProvider& p, const TruncatedGradedAlgebra& h, const A0Key& k, int i) {
    return h.projection(i) * act_on_tensor(p, k, i).select_cols(h.normal_monomials(i));
}

Mat dual_act_on_h(const ActionProvider& p, const TruncatedGradedAlgebra& dual, const A0Key& k, int i) {
    return dual.projection(i) * dual_act_on_tensor(p, k, i).select_cols(dual.normal_monomials(i));
}

namespace {

ModuleAlgebraCheck stability(const ActionProvider& p, const Subspace& rel, bool dual) {
    ModuleAlgebraCheck res;
    const std::size_t n = p.v_dim();
    if (rel.ambient_dim() != n * n) {
        res.ok = false;
        res.reason = "presentation and action have different generator counts";
        return res;
    }
    // V must be a right module first.
    if (p.kind() == ActionProvider::Kind::bialgebra) {
        const auto& b = p.bialgebra();
        std::vector<Mat> acts;
        for (const auto& k : p.generators()) acts.push_back(p.act_on_v(k));
        if (b.dim > 0 && from_coords(acts, b.unit, n) != Mat::identity(n)) {
            res.ok = false;
            res.reason = "unit does not act as the identity on V";
            return res;
        }
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                if (from_coords(acts, b.mult[i * b.dim + j], n) != acts[j] * acts[i]) {
                    res.ok = false;
                    res.reason = "V is not a right module";
                    res.generator = A0Key{static_cast<int>(i), static_cast<int>(j)};
                    return res;
                }
    } else {
        A0Module v{n, {}};
        for (const auto& k : p.generators()) v.action.push_back(Rat(-1) * p.act_on_v(k));
        if (!validate_module(p, v).ok) {
            res.ok = false;
            res.reason = "V is not a representation";
            return res;
        }
    }
    for (const auto& g : p.generators()) {
        Mat a = dual ? dual_act_on_tensor(p, g, 2) : act_on_tensor(p, g, 2);
        for (std::size_t r = 0; r < rel.dim(); ++r) {
            Vec img = a * rel.basis().row_vec(r);
            if (!rel.contains(img)) {
                res.ok = false;
                res.reason = dual ? "dual relations not stable" : "relations not stable";
                res.generator = g;
                res.offending = rel.basis().row_vec(r);
                return res;
            }
        }
    }
    return res;
}

} // namespace

ModuleAlgebraCheck validate_module_algebra(const ActionProvider& p, const QuadraticPresentation& q) {
    return stability(p, q.relations, false);
}

ModuleAlgebraCheck validate_dual_module_algebra(const ActionProvider& p, const QuadraticPresentation& q) {
    return stability(p, quadratic_dual(q).relations, true);
}

// ---------------------------------------------------------------- smash products

SmashAlgebra::SmashAlgebra(const ActionProvider& p, const TruncatedGradedAlgebra& h, Side side)
    : p_(&p), h_(&h), side_(side) {
    if (h.num_generators() != p.v_dim()) throw DimensionMismatch("smash: action and algebra disagree on dim V");
}

const Mat& SmashAlgebra::h_action(const A0Key& k, int i) const {
    auto key = std::make_pair(k, i);
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;
    Mat m = side_ == Side::right ? act_on_h(*p_, *h_, k, i) : dual_act_on_h(*p_, *h_, k, i);
    return action_cache_.emplace(key, std::move(m)).first->second;
}

SmashElem SmashAlgebra::basis_element(const A0Key& a, int deg, std::size_t idx) const {
    return {{SmashKey{a, deg, idx}, Rat(1)}};
}

SmashElem SmashAlgebra::multiply(const SmashElem& x, const SmashElem& y) const {
    SmashElem out;
    auto add = [&](const A0Elem& a, int deg, const Vec& h, const Rat& c) {
        for (const auto& [ka, ca] : a)
            for (std::size_t t = 0; t < h.size(); ++t) {
                if (sgn(h[t]) == 0) continue;
                SmashKey key{ka, deg, t};
                Rat v = c * ca * h[t];
                auto [it, ins] = out.emplace(key, v);
                if (!ins) {
                    it->second += v;
                    if (sgn(it->second) == 0) out.erase(it);
                }
            }
    };
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const auto& [ax, dx, ix] = kx;
            const auto& [ay, dy, iy] = ky;
            if (dx + dy > h_->max_degree()) throw WindowError("smash product leaves the truncation window");
            const Mat& m = h_->mult(dx, dy);
            if (side_ == Side::right) {
                // a a'_(1) (x) (h <| a'_(2)) h'
                for (const auto& [pr, c] : p_->coproduct(ay)) {
                    Vec acted = h_action(pr.second, dx).col_vec(ix);
                    Vec prod = m * kron(acted, basis_vec(h_->h_dim(dy), iy));
                    add(p_->multiply({{ax, Rat(1)}}, {{pr.first, Rat(1)}}), dx + dy, prod, cx * cy * c);
                }
            } else {
                // h (b_(2) . h') (x) b_(1) b'
                for (const auto& [pr, c] : p_->coproduct(ax)) {
                    Vec acted = h_action(pr.second, dy).col_vec(iy);
                    Vec prod = m * kron(basis_vec(h_->h_dim(dx), ix), acted);
                    add(p_->multiply({{pr.first, Rat(1)}}, {{ay, Rat(1)}}), dx + dy, prod, cx * cy * c);
                }
            }
        }
    return out;
}

SmashAlgebra::AssocResult SmashAlgebra::check_associativity() const {
    AssocResult res;
    std::vector<SmashKey> basis;
    const int N = h_->max_degree();
    for (const auto& a : p_->test_basis())
        for (int d = 0; d <= N; ++d)
            for (std::size_t i = 0; i < h_->h_dim(d); ++i) basis.emplace_back(a, d, i);
    std::map<std::pair<std::size_t, std::size_t>, SmashElem> pair_products;
    auto product = [&](std::size_t u, std::size_t v) -> const SmashElem& {
        auto key = std::make_pair(u, v);
        auto it = pair_products.find(key);
        if (it != pair_products.end()) return it->second;
        return pair_products.emplace(key, multiply({{basis[u], Rat(1)}}, {{basis[v], Rat(1)}})).first->second;
    };
    for (std::size_t u = 0; u < basis.size(); ++u)
        for (std::size_t v = 0; v < basis.size(); ++v) {
            const int duv = std::get<1>(basis[u]) + std::get<1>(basis[v]);
            if (duv > N) continue;
            for (std::size_t w = 0; w < basis.size(); ++w) {
                if (duv + std::get<1>(basis[w]) > N) continue;
                ++res.triples;
                SmashElem left = multiply(product(u, v), {{basis[w], Rat(1)}});
                SmashElem right = multiply({{basis[u], Rat(1)}}, product(v, w));
                if (left != right) {
                    res.ok = false;
                    res.failure = std::make_tuple(basis[u], basis[v], basis[w]);
                    return res;
                }
            }
        }
    return res;
}

// ---------------------------------------------------------------- Takiff

namespace {

TakiffLie takiff_impl(const LieAlgebra& g, const std::vector<Mat>& rho, Parity parity, bool literal) {
    if (rho.size() != g.dim()) throw DimensionMismatch("takiff: one matrix per basis element");
    const std::size_t G = g.dim();
    const std::size_t n = rho.empty() ? 0 : rho[0].rows();
    const std::size_t D = G + n;
    TakiffLie t;
    t.g_dim = G;
    t.v_dim = n;
    t.kind = parity;
    t.algebra.basis = g.basis;
    for (std::size_t k = 0; k < n; ++k) t.algebra.basis.push_back("v" + std::to_string(k));
    t.parity.assign(D, 0);
    if (parity == Parity::super)
        for (std::size_t k = 0; k < n; ++k) t.parity[G + k] = 1;
    t.algebra.bracket.assign(D, std::vector<Vec>(D, Vec(D)));
    for (std::size_t a = 0; a < G; ++a) {
        for (std::size_t b = 0; b < G; ++b)
            for (std::size_t c = 0; c < G; ++c) t.algebra.bracket[a][b][c] = g.bracket[a][b][c];
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                t.algebra.bracket[a][G + k][G + l] = rho[a](l, k);
                t.algebra.bracket[G + k][a][G + l] = literal ? rho[a](l, k) : Rat(-rho[a](l, k));
            }
    }
    return t;
}

} // namespace

TakiffLie takiff(const LieAlgebra& g, const std::vector<Mat>& rho, Parity parity) {
    return takiff_impl(g, rho, parity, false);
}

LieAlgebra literal_super_takiff(const LieAlgebra& g, const std::vector<Mat>& rho) {
    return takiff_impl(g, rho, Parity::super, true).algebra;
}

EnvelopingCheck check_enveloping(const TakiffLie& t, const std::vector<Mat>& rho, int max_k) {
    EnvelopingCheck res;
    const std::size_t G = t.g_dim, n = t.v_dim;
    // Degree-2 relations of U(s) restricted to V: v v' - (-1)^{|v||v'|} v' v = [v, v'].
    std::vector<std::vector<Term>> rels;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(t.algebra.basis[G + k]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            for (std::size_t c = 0; c < G + n; ++c)
                if (sgn(t.algebra.bracket[G + k][G + l][c]) != 0) {
                    res.ok = false;  // V is not abelian
                    return res;
                }
            const Rat s = (t.parity[G + k] * t.parity[G + l]) % 2 ? Rat(1) : Rat(-1);
            if (k == l && s == -1) continue;
            rels.push_back({{Rat(1), k, l}, {s, l, k}});
        }
    auto pres = QuadraticPresentation::make(names, rels);
    auto hv = grow(pres, max_k);
    for (int k = 0; k <= max_k; ++k) {
        res.dims.push_back(hv.h_dim(k));
        long e = 1;
        const long nn = static_cast<long>(n);
        if (t.kind == Parity::even) {
            for (long i = 1; i <= k; ++i) e = e * (nn + k - i) / i;
        } else {
            e = k > nn ? 0 : 1;
            for (long i = 1; i <= k && k <= nn; ++i) e = e * (nn - i + 1) / i;
        }
        res.expected.push_back(static_cast<std::size_t>(e));
    }
    if (res.dims != res.expected) res.ok = false;

    // [x, v] against the commutator in U(g) |x H_V.
    if (max_k >= 1 && G > 0) {
        LieAlgebra g;
        g.basis.assign(t.algebra.basis.begin(), t.algebra.basis.begin() + static_cast<long>(G));
        g.bracket.assign(G, std::vector<Vec>(G, Vec(G)));
        for (std::size_t a = 0; a < G; ++a)
            for (std::size_t b = 0; b < G; ++b)
                for (std::size_t c = 0; c < G; ++c) g.bracket[a][b][c] = t.algebra.bracket[a][b][c];
        ActionProvider p = ActionProvider::from_lie(g, rho);
        SmashAlgebra s(p, hv, SmashAlgebra::Side::right);
        for (std::size_t a = 0; a < G; ++a)
            for (std::size_t k = 0; k < n; ++k) {
                SmashElem x = s.basis_element({static_cast<int>(a)}, 0, 0);
                SmashElem v = s.basis_element({}, 1, k);
                SmashElem comm = s.multiply(x, v);
                for (const auto& [key, c] : s.multiply(v, x)) {
                    comm[key] -= c;
                    if (sgn(comm[key]) == 0) comm.erase(key);
                }
                SmashElem expect;
                for (std::size_t l = 0; l < n; ++l) {
                    const Rat& c = t.algebra.bracket[a][G + k][G + l];
                    if (sgn(c) != 0) expect[SmashKey{A0Key{}, 1, l}] = c;
                }
                if (comm != expect) res.commutators_ok = res.ok = false;
            }
    }
    return res;
}

} // namespace koszulkit
