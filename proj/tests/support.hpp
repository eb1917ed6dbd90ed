#pragma once

// Seeded generators and brute-force oracles shared by the unit tests.

#include "koszulkit/exactlin.hpp"
#include "koszulkit/quadratic.hpp"

#include <random>

namespace testsupport {

using koszulkit::Mat;
using koszulkit::Rat;
using koszulkit::Subspace;

inline Rat random_rat(std::mt19937_64& rng, int span = 3) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 3), zero(0, 2);
    if (zero(rng) == 0) return Rat(0);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rat(rng);
    return m;
}

/// Low-rank random matrix so that kernels and images are nontrivial.
inline Mat random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
    return random_mat(rng, r, k) * random_mat(rng, k, c);
}

inline long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long b = 1;
    for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

/// The degree-i part of the two-sided ideal generated by R, spanned
/// directly by all w (x) r (x) w' with w, w' monomials.
inline Subspace ideal_oracle(const koszulkit::QuadraticPresentation& p, int i) {
    const std::size_t n = p.num_generators();
    const std::size_t ti = koszulkit::tensor_power_dim(n, i);
    if (i < 2) return Subspace::zero(ti);
    const Mat& R = p.relations.basis();
    std::vector<Mat> blocks;
    Mat span(0, ti);
    for (int a = 0; a + 2 <= i; ++a) {
        Mat left = Mat::identity(koszulkit::tensor_power_dim(n, a));
        Mat right = Mat::identity(koszulkit::tensor_power_dim(n, i - a - 2));
        // rows: kron(e_w, r, e_w') for every w, r, w'
        span = koszulkit::vstack(span, koszulkit::kron(koszulkit::kron(left, R), right));
    }
    return Subspace::span(ti, span);
}

/// K_i as the plain intersection of V^{j} (x) R (x) V^{i-j-2}.
inline Subspace koszul_oracle(const koszulkit::QuadraticPresentation& p, int i) {
    const std::size_t n = p.num_generators();
    const std::size_t ti = koszulkit::tensor_power_dim(n, i);
    if (i < 2) return Subspace::full(ti);
    Subspace acc = Subspace::full(ti);
    for (int a = 0; a + 2 <= i; ++a) {
        Mat left = Mat::identity(koszulkit::tensor_power_dim(n, a));
        Mat right = Mat::identity(koszulkit::tensor_power_dim(n, i - a - 2));
        acc = koszulkit::intersect(
            acc, Subspace::span(ti, koszulkit::kron(koszulkit::kron(left, p.relations.basis()), right)));
    }
    return acc;
}

} // namespace testsupport
