#pragma once

// Matrix helpers shared by the duality translation units.

#include "koszulkit/duality.hpp"

#include <tuple>
#include <vector>

namespace koszulkit::detail {

/// Matrix of f -> a f b on row-major vec(f).
inline Mat hom_map(const Mat& a, const Mat& b) { return kron(a, b.transpose()); }

inline Mat unit_column(std::size_t n, std::size_t b) {
    Mat e(n, 1);
    e(b, 0) = 1;
    return e;
}

/// Permutation U (x) W -> W (x) U.
inline Mat swap_factors(std::size_t u, std::size_t w) {
    Mat s(u * w, u * w);
    for (std::size_t a = 0; a < u; ++a)
        for (std::size_t b = 0; b < w; ++b) s(b * u + a, a * w + b) = 1;
    return s;
}

/// h -> e_b h : H_i -> H_{i+1}.
inline Mat left_mult(const TruncatedGradedAlgebra& h, std::size_t b, int i) {
    return h.mult(1, i) * kron(unit_column(h.num_generators(), b), Mat::identity(h.h_dim(i)));
}

/// h -> h e_b : H_i -> H_{i+1}.
inline Mat right_mult(const TruncatedGradedAlgebra& h, std::size_t b, int i) {
    return h.mult(i, 1) * kron(Mat::identity(h.h_dim(i)), unit_column(h.num_generators(), b));
}

/// Action of k on the Koszul subspace K_r of `alg` (right action for H,
/// left dual action for H^!).
inline Mat k_act(const ActionProvider& p, const TruncatedGradedAlgebra& alg, const A0Key& k, int r, bool dual) {
    const Subspace& K = alg.koszul(r);
    Mat t = dual ? dual_act_on_tensor(p, k, r) : act_on_tensor(p, k, r);
    return K.pivot_selector() * t * K.inclusion();
}

inline Mat h_act(const ActionProvider& p, const TruncatedGradedAlgebra& alg, const A0Key& k, int i, bool dual) {
    return dual ? dual_act_on_h(p, alg, k, i) : act_on_h(p, alg, k, i);
}

/// Right action of k on K_r (x) H_i via Delta.
inline Mat kh_act(const ActionProvider& p, const KoszulPair& kp, const A0Key& k, int r, int i) {
    Mat out(kp.h.k_dim(r) * kp.h.h_dim(i), kp.h.k_dim(r) * kp.h.h_dim(i));
    for (const auto& [pr, c] : p.coproduct(k))
        out += c * kron(k_act(p, kp.h, pr.first, r, false), h_act(p, kp.h, pr.second, i, false));
    return out;
}

/// (a_(1), a_(2), a_(3), coefficient).
inline std::vector<std::tuple<A0Key, A0Key, A0Key, Rat>> coproduct3(const ActionProvider& p, const A0Key& k) {
    std::vector<std::tuple<A0Key, A0Key, A0Key, Rat>> out;
    for (const auto& [pr, c] : p.coproduct(k))
        for (const auto& [pr2, c2] : p.coproduct(pr.first))
            out.emplace_back(pr2.first, pr2.second, pr.second, c * c2);
    return out;
}

inline std::string key_name(const A0Key& k) {
    std::string s = "a[";
    for (std::size_t t = 0; t < k.size(); ++t) s += (t ? "," : "") + std::to_string(k[t]);
    return s + "]";
}

inline Mat sign_mat(int e, Mat m) {
    if (e % 2) m *= Rat(-1);
    return m;
}

} // namespace koszulkit::detail
