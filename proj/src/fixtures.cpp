#include "koszulkit/fixtures.hpp"

#include <stdexcept>

namespace koszulkit {

namespace {

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec tensor_vec(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> terms, std::vector<int> coeffs) {
    Vec v(n * n);
    for (std::size_t t = 0; t < terms.size(); ++t) v[terms[t].first * n + terms[t].second] += coeffs[t];
    return v;
}

A0Module scalar_module(std::vector<Rat> values) {
    A0Module m{1, {}};
    for (auto& v : values) m.action.push_back(Mat(1, 1, {v}));
    return m;
}

// Group algebra of a finite group from its multiplication table.
Bialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t d = table.size();
    Bialgebra b;
    b.dim = d;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b.mult.push_back(basis_vec(d, table[i][j]));
    b.unit = basis_vec(d, 0);
    for (std::size_t i = 0; i < d; ++i) b.comult.push_back(tensor_vec(d, {{i, i}}, {1}));
    b.counit = Vec(d, Rat(1));
    return b;
}

LieAlgebra sl2() {
    LieAlgebra g;
    g.basis = {"e", "h", "f"};
    auto vec = [](int e, int h, int f) { return Vec{Rat(e), Rat(h), Rat(f)}; };
    g.bracket = {{vec(0, 0, 0), vec(-2, 0, 0), vec(0, 1, 0)},
                 {vec(2, 0, 0), vec(0, 0, 0), vec(0, 0, -2)},
                 {vec(0, -1, 0), vec(0, 0, 2), vec(0, 0, 0)}};
    return g;
}

std::vector<Mat> adjoint(const LieAlgebra& g) {
    std::vector<Mat> out;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        Mat m(g.dim(), g.dim());
        for (std::size_t b = 0; b < g.dim(); ++b)
            for (std::size_t c = 0; c < g.dim(); ++c) m(c, b) = g.bracket[a][b][c];
        out.push_back(std::move(m));
    }
    return out;
}

QuadraticPresentation renamed(QuadraticPresentation p, std::vector<std::string> names) {
    p.gen_names = std::move(names);
    return p;
}

} // namespace

ActionProvider Fixture::provider() const {
    return action ? *action : trivial_provider(presentation.num_generators());
}

ActionProvider trivial_provider(std::size_t n) {
    Bialgebra b;
    b.dim = 1;
    b.mult = {Vec{Rat(1)}};
    b.unit = {Rat(1)};
    b.comult = {Vec{Rat(1)}};
    b.counit = {Rat(1)};
    ActionProvider p = ActionProvider::from_bialgebra(std::move(b), {Mat::identity(n)});
    p.modules = {{"trivial", scalar_module({1})}};
    return p;
}

Fixture c2_sign_takiff() {
    ActionProvider p = ActionProvider::from_bialgebra(group_algebra({{0, 1}, {1, 0}}),
                                                      {Mat::identity(1), Mat(1, 1, {Rat(-1)})});
    p.modules = {{"trivial", scalar_module({1, 1})}, {"sign", scalar_module({1, -1})}};
    return {"c2_sign_takiff", renamed(symmetric_presentation(1), {"t"}), std::move(p)};
}

Fixture sl2_adjoint_takiff() {
    LieAlgebra g = sl2();
    auto rho = adjoint(g);
    ActionProvider p = ActionProvider::from_lie(g, rho);
    A0Module triv{1, {Mat(1, 1), Mat(1, 1), Mat(1, 1)}};
    p.modules = {{"trivial", triv}, {"adjoint", A0Module{3, rho}}};
    return {"sl2_adjoint_takiff", renamed(symmetric_presentation(3), g.basis), std::move(p)};
}

Fixture sweedler_optional() {
    // basis 1, g, x, gx with g^2 = 1, x^2 = 0, x g = -g x
    Bialgebra b;
    b.dim = 4;
    const std::size_t one = 0, g = 1, x = 2, gx = 3;
    auto e = [](std::size_t i, int c = 1) {
        Vec v(4);
        v[i] = c;
        return v;
    };
    const Vec zero(4);
    b.mult = {e(one), e(g), e(x), e(gx),       // 1 * _
              e(g), e(one), e(gx), e(x),       // g * _
              e(x), e(gx, -1), zero, zero,     // x * _
              e(gx), e(x, -1), zero, zero};    // gx * _
    b.unit = e(one);
    b.comult = {tensor_vec(4, {{one, one}}, {1}), tensor_vec(4, {{g, g}}, {1}),
                tensor_vec(4, {{x, one}, {g, x}}, {1, 1}), tensor_vec(4, {{gx, g}, {one, gx}}, {1, 1})};
    b.counit = {Rat(1), Rat(1), Rat(0), Rat(0)};
    ActionProvider p = ActionProvider::from_bialgebra(
        std::move(b), {Mat::identity(1), Mat(1, 1, {Rat(-1)}), Mat(1, 1), Mat(1, 1)});
    A0Module two{2,
                 {Mat::identity(2), Mat::from({{1, 0}, {0, -1}}), Mat::from({{0, 0}, {1, 0}}),
                  Mat::from({{0, 0}, {-1, 0}})}};
    p.modules = {{"trivial", scalar_module({1, 1, 0, 0})}, {"two", two}};
    return {"sweedler_optional", renamed(dual_numbers_presentation(), {"t"}), std::move(p)};
}

Fixture builtin_fixture(const std::string& name) {
    auto sized = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
        std::size_t n = 0;
        for (char c : name.substr(prefix.size())) {
            if (c < '0' || c > '9') return std::nullopt;
            n = n * 10 + static_cast<std::size_t>(c - '0');
            if (n > 64) throw std::invalid_argument("fixture size too large: " + name);
        }
        return n;
    };
    if (auto n = sized("sym_")) return {name, symmetric_presentation(*n), std::nullopt};
    if (auto n = sized("ext_")) return {name, exterior_presentation(*n), std::nullopt};
    if (auto n = sized("free_")) return {name, free_presentation(*n), std::nullopt};
    if (name == "dual_numbers") return {name, dual_numbers_presentation(), std::nullopt};
    if (name == "c2_sign_takiff") return c2_sign_takiff();
    if (name == "sl2_adjoint_takiff") return sl2_adjoint_takiff();
    if (name == "sweedler_optional") return sweedler_optional();
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> builtin_fixture_names() {
    return {"sym_n", "ext_n", "free_n", "dual_numbers", "c2_sign_takiff", "sl2_adjoint_takiff", "sweedler_optional"};
}

} // namespace koszulkit
