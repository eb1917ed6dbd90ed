#include "koszulkit/exactlin.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace koszulkit;

TEST_CASE("parse and print rationals") {
    CHECK(parse_rat("3") == Rat(3));
    CHECK(parse_rat("-2/4") == Rat(-1, 2));
    CHECK(to_string(parse_rat("6/3")) == "2");
    CHECK(to_string(Rat(-1, 3)) == "-1/3");
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("abc"));
    CHECK_THROWS(parse_rat(""));
}

TEST_CASE("rref is canonical") {
    Mat a = Mat::from({{2, 4, 0}, {1, 2, 1}});
    Mat b = Mat::from({{1, 2, 1}, {3, 6, 1}, {0, 0, 5}});
    CHECK(rref(a).reduced == rref(b).reduced);
    CHECK(rref(a).pivots == std::vector<std::size_t>{0, 2});
    CHECK(Subspace::span(3, a) == Subspace::span(3, b));
}

TEST_CASE("kernel, image, annihilator on a fixed matrix") {
    Mat m = Mat::from({{1, 1, 0}, {0, 0, 0}});
    CHECK(kernel(m).dim() == 2);
    CHECK(image(m).dim() == 1);
    Subspace s = Subspace::span(3, Mat::from({{1, -1, 0}}));
    CHECK(s.annihilator().dim() == 2);
    CHECK(s.annihilator().annihilator() == s);
}

TEST_CASE("empty shapes flow through") {
    Mat z(0, 3);
    CHECK(rank(z) == 0);
    CHECK(kernel(z).dim() == 3);
    CHECK(Subspace::zero(0).dim() == 0);
    Quotient q = quotient(0, Subspace::zero(0));
    CHECK(q.dim() == 0);
    CHECK(kron(Mat(0, 2), Mat::identity(2)).rows() == 0);
}

TEST_CASE("inverse") {
    Mat m = Mat::from({{2, 1}, {1, 1}});
    CHECK((m * inverse(m)).is_identity());
    CHECK_THROWS_AS(inverse(Mat::from({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("coordinates reject vectors outside") {
    Subspace s = Subspace::span(3, Mat::from({{1, 0, 1}}));
    CHECK(s.coordinates(Mat::column({2, 0, 2})) == Mat::from({{2}}));
    CHECK_THROWS_AS(s.coordinates(Mat::column({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("random properties") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> sz(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = sz(rng), c = sz(rng), k = sz(rng);
        Mat m = testsupport::random_low_rank(rng, r, c, k);
        Subspace ker = kernel(m);
        // rank-nullity and the kernel really is killed
        CHECK(rank(m) + ker.dim() == c);
        CHECK((m * ker.inclusion()).is_zero());
        CHECK(image(m).dim() == rank(m));

        // kron functoriality
        Mat a = testsupport::random_mat(rng, sz(rng), r), b = testsupport::random_mat(rng, sz(rng), c);
        Mat x = testsupport::random_mat(rng, r, sz(rng)), y = testsupport::random_mat(rng, c, sz(rng));
        CHECK(kron(a, b) * kron(x, y) == kron(a * x, b * y));

        // quotient laws
        Subspace s = Subspace::span(c, testsupport::random_low_rank(rng, sz(rng), c, k));
        Quotient q = quotient(c, s);
        CHECK(q.dim() + s.dim() == c);
        CHECK((q.projection * q.section).is_identity());
        CHECK((q.projection * s.inclusion()).is_zero());
        Mat back = q.section * q.projection;
        for (std::size_t col = 0; col < c; ++col) {
            Vec e(c);
            e[col] = 1;
            Vec diff = e;
            Vec img = back * e;
            for (std::size_t t = 0; t < c; ++t) diff[t] -= img[t];
            CHECK(s.contains(diff));
        }

        // intersection against dimension formula
        Subspace u = Subspace::span(c, testsupport::random_low_rank(rng, sz(rng), c, k));
        Subspace inter = intersect(s, u);
        CHECK(inter.dim() + sum(s, u).dim() == s.dim() + u.dim());
        CHECK(s.contains(inter));
        CHECK(u.contains(inter));
    }
}
