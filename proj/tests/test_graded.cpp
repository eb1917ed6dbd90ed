#include "koszulkit/graded.hpp"
#include "koszulkit/quadratic.hpp"

#include <doctest.h>

using namespace koszulkit;

TEST_CASE("window semantics") {
    GradedSpace g(0, {1, 2, 0});
    CHECK(g.dim(2) == 0);
    CHECK_THROWS_AS(g.dim(3), WindowError);
    CHECK(g.shift(1).dim(1) == g.dim(2));
    CHECK(g.shift(-2).dim(2) == g.dim(0));
    CHECK_THROWS_AS(hilbert(g, 4), WindowError);
    CHECK(hilbert(g, 2) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("zero and identity complexes") {
    BigradedComplex z;
    z.set_component(0, 0, 2);
    z.set_component(1, 0, 3);
    z.set_component(2, 0, 1);
    CHECK(check_d_squared(z).ok);

    BigradedComplex id;
    id.set_component(-1, 0, 0);
    id.set_component(0, 0, 1);
    id.set_component(1, 0, 1);
    id.set_component(2, 0, 0);
    id.set_differential(0, 0, Mat::identity(1));
    auto h = homology(id);
    CHECK(h.find(0, 0)->dim == 0);
    CHECK(h.find(1, 0)->dim == 0);
    CHECK(h.find(0, 0)->valid);
    CHECK_FALSE(h.find(-1, 0)->valid);
}

TEST_CASE("d squared violation is a contract violation") {
    BigradedComplex c;
    c.set_component(0, 0, 1);
    c.set_component(1, 0, 1);
    c.set_component(2, 0, 1);
    c.set_differential(0, 0, Mat::identity(1));
    c.set_differential(1, 0, Mat::identity(1));
    auto r = check_d_squared(c);
    CHECK_FALSE(r.ok);
    CHECK(r.first_failure == Cell{0, 0});
    CHECK_THROWS_AS(homology(c), ContractViolation);
    CHECK_THROWS_AS(c.set_differential(0, 0, Mat(2, 1)), DimensionMismatch);
}

TEST_CASE("hilbert series of small algebras") {
    CHECK(hilbert(grow(symmetric_presentation(1), 4).hilbert_space(), 4) ==
          std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(hilbert(grow(exterior_presentation(3), 5).hilbert_space(), 5) ==
          std::vector<std::size_t>{1, 3, 3, 1, 0, 0});
    CHECK(hilbert(grow(symmetric_presentation(3), 6).hilbert_space(), 6) ==
          std::vector<std::size_t>{1, 3, 6, 10, 15, 21, 28});
}

TEST_CASE("Euler characteristic of components equals that of homology") {
    auto alg = grow(symmetric_presentation(2), 4);
    auto c = right_koszul_complex(alg);
    CHECK(check_d_squared(c).ok);
    auto h = homology(c, 3);
    for (int s = 0; s <= 4; ++s) CHECK(euler_components(c, s) == euler_homology(h, s));
    auto js = h.to_json();
    CHECK(js["cells"].size() == h.cells.size());
    CHECK(homology(c, 1).to_json() == js);
}
