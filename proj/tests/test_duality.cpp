#include "koszulkit/duality.hpp"
#include "koszulkit/fixtures.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace koszulkit;

namespace {

struct Case {
    const char* fixture;
    int N;
};

const Case kCases[] = {{"sym_2", 4}, {"ext_2", 4}, {"dual_numbers", 4}, {"c2_sign_takiff", 4},
                       {"sweedler_optional", 4}, {"sl2_adjoint_takiff", 3}};

template <class F>
void for_each_case(F&& f) {
    for (const auto& c : kCases) {
        Fixture fx = builtin_fixture(c.fixture);
        ActionProvider p = fx.provider();
        KoszulPair kp = make_koszul_pair(fx.presentation, c.N);
        for (const auto& [mname, m] : p.modules) {
            CAPTURE(std::string(c.fixture));
            CAPTURE(mname);
            f(p, kp, m);
        }
    }
}

void check_complex(const DualityComplex& dc) {
    CAPTURE(dc.construction);
    auto d2 = check_d_squared(dc.complex);
    CHECK(d2.ok);
    auto eq = check_equivariance(dc);
    CHECK_MESSAGE(eq.ok, eq.detail);
}

} // namespace

TEST_CASE("I and P complexes square to zero and carry their actions") {
    for_each_case([](const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        GradedAModule x = concentrated(m);
        CHECK(validate_graded_module(p, kp, x, ModuleSide::over_a).ok);
        check_complex(I_complex(p, kp, x));
        check_complex(P_complex(p, kp, x));
    });
}

TEST_CASE("socle complex") {
    for_each_case([](const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        GradedAModule x = concentrated(m);
        check_complex(socI_complex(p, kp, x, true));
        check_complex(socI_complex(p, kp, x, false));
        auto laws = check_socI_module_laws(p, kp, x);
        CHECK_MESSAGE(laws.ok, laws.detail);
        auto sub = check_socI_subcomplex(p, kp, x);
        CHECK_MESSAGE(sub.ok, sub.detail);
        auto id = identify_socI(p, kp, x);
        CHECK_MESSAGE(id.ok(), id.detail);
        CHECK(id.cells_checked > 0);
    });
}

TEST_CASE("top of P on free dual modules") {
    for_each_case([](const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        GradedAModule y = free_dual_module(p, kp, m);
        auto v = validate_graded_module(p, kp, y, ModuleSide::over_dual);
        CHECK_MESSAGE(v.ok, v.axiom);
        check_complex(topP_complex(p, kp, y));
        auto id = identify_topP(p, kp, y);
        CHECK_MESSAGE(id.ok(), id.detail);
    });
}

TEST_CASE("I complex of k over S(V) in low degrees") {
    KoszulPair kp = make_koszul_pair(symmetric_presentation(2), 4);
    ActionProvider p = trivial_provider(2);
    DualityComplex I = I_complex(p, kp, concentrated(p.modules[0].second));
    // I^r_s = Hom(K_r (x) H_{-r-s}, k)
    CHECK(I.complex.dim(0, 0) == 1);
    CHECK(I.complex.dim(1, -2) == 4);
    CHECK(I.complex.dim(0, -2) == 3);
    CHECK(I.complex.dim(2, -3) == 2);
    CHECK_FALSE(I.complex.materialized(0, -5));
}

TEST_CASE("graded module validation catches a non-equivariant action") {
    Fixture f = c2_sign_takiff();
    KoszulPair kp = make_koszul_pair(f.presentation, 3);
    const auto& triv = f.action->modules[0].second;
    GradedAModule x;
    x.s_min = 0;
    x.components = {triv, triv};
    x.act1[0] = Mat::identity(1);  // t . x = x' but t <| g = -t while g acts trivially
    CHECK_FALSE(validate_graded_module(*f.action, kp, x, ModuleSide::over_a).ok);
    x.components[1] = f.action->modules[1].second;
    CHECK(validate_graded_module(*f.action, kp, x, ModuleSide::over_a).ok);
    check_complex(I_complex(*f.action, kp, x));
    check_complex(P_complex(*f.action, kp, x));
    auto id = identify_socI(*f.action, kp, x);
    CHECK_MESSAGE(id.ok(), id.detail);
}

TEST_CASE("round trips") {
    for_each_case([](const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        DualityComplex ps = Pstar_complex(p, kp, m);
        check_complex(ps);
        auto a = roundtrip_A(p, kp, m);
        CHECK_MESSAGE(a.ok(), a.detail);
        auto b = roundtrip_B(p, kp, m);
        CHECK_MESSAGE(b.ok(), b.detail);
        CHECK(a.cells_checked > 0);
    });
}

TEST_CASE("homology in degree zero and the diagonal") {
    for_each_case([](const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        Gen85Result g = gen85_checks(p, kp, m, 2);
        for (const CheckResult* c : {&g.h0_I, &g.h0_P, &g.diagonal_I, &g.diagonal_P, &g.vanishing_I, &g.vanishing_P})
            CHECK_MESSAGE(c->ok, c->detail);
        CHECK(g.ok());
    });
}

namespace {

// x y + z z, z x: Koszul in degrees <= 3 but not in degree 4, since the
// degree-4 coefficient of H(t) H^!(-t) is 2.
QuadraticPresentation non_koszul() {
    return QuadraticPresentation::make({"x", "y", "z"}, {{Term{1, 2, 0}}, {Term{1, 0, 1}, Term{1, 2, 2}}});
}

} // namespace

TEST_CASE("three verdicts agree") {
    for_each_case([](const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        DualityVerdict v = koszulity_via_duality(p, kp, m);
        CHECK(v.agree);
        CHECK(v.via_koszul.koszul_up_to_max());
    });
    KoszulPair kp = make_koszul_pair(non_koszul(), 5);
    CHECK(euler_identity(kp).values[4] == 2);
    ActionProvider p = trivial_provider(3);
    DualityVerdict v = koszulity_via_duality(p, kp, p.modules[0].second);
    CHECK(v.agree);
    for (int d = 0; d <= 3; ++d) CHECK(v.via_I.degrees[d].exact);
    CHECK_FALSE(v.via_I.degrees[4].exact);
    CHECK_FALSE(v.via_Pstar.degrees[4].exact);
    CHECK_FALSE(v.via_koszul.degrees[4].exact);
}

TEST_CASE("P0 is left adjoint to degree zero") {
    for (const char* name : {"c2_sign_takiff", "sweedler_optional"}) {
        Fixture f = builtin_fixture(name);
        TruncatedGradedAlgebra h = grow(f.presentation, 3);
        std::vector<A0Module> zs;
        for (const auto& [mn, m] : f.action->modules) zs.push_back(m);
        for (const auto& [mn, m] : f.action->modules) {
            CAPTURE(std::string(name));
            CAPTURE(mn);
            for (const auto& r : adjunction_check(*f.action, h, m, zs)) {
                CAPTURE(r.target);
                CHECK(r.hom_a == r.hom_a0);
            }
        }
    }
    CHECK_THROWS(adjunction_check(*sl2_adjoint_takiff().action, grow(symmetric_presentation(3), 2),
                                  sl2_adjoint_takiff().action->modules[0].second, {}));
}
