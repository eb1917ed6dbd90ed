// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact over Q; the only tolerances are the wall-clock limits below.

#include "koszulkit/duality.hpp"
#include "koszulkit/fixtures.hpp"
#include "koszulkit/io.hpp"
#include "koszulkit/report.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace koszulkit;
using testsupport::binomial;

namespace {

constexpr double kKoszulFixtureLimitSeconds = 60.0;
constexpr double kRoundTripLimitSeconds = 300.0;
constexpr int kRandomMatrixCases = 1000;
constexpr std::uint64_t kSeed = 20240611;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            note << why;
        }
    }
};

// Every complex built anywhere in the suite goes through here.
std::size_t g_complexes = 0;
std::string g_d2_failure;
void track(const BigradedComplex& c, const std::string& what) {
    ++g_complexes;
    if (!check_d_squared(c).ok && g_d2_failure.empty()) g_d2_failure = what;
}

const std::vector<std::string> kFixtures = {"sym_1", "sym_2", "sym_3", "ext_1", "ext_2", "ext_3",
                                            "free_2", "dual_numbers", "c2_sign_takiff", "sweedler_optional",
                                            "sl2_adjoint_takiff"};

int fixture_degree(const std::string& name) { return name == "sl2_adjoint_takiff" || name == "ext_3" ? 4 : 5; }

// Three generators, relations z x and x y + z z. The degree-4 coefficient
// of H(t) H^!(-t) is 2, so it is not Koszul.
QuadraticPresentation non_koszul() {
    return QuadraticPresentation::make({"x", "y", "z"}, {{Term{1, 2, 0}}, {Term{1, 0, 1}, Term{1, 2, 2}}});
}

Outcome criterion1() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto t0 = Clock::now();
        const int N = 6;
        QuadraticPresentation p = symmetric_presentation(n);
        TruncatedGradedAlgebra h = grow(p, N);
        BigradedComplex c = right_koszul_complex(h);
        track(c, "right Koszul complex of S(V)");
        HomologyReport hr = homology(c);
        for (int j = 0; j <= N; ++j)
            for (int i = 0; i <= j; ++i) {
                // oracle: brute-force intersection for K_i, brute-force ideal for H_{j-i}
                const std::size_t k_or = testsupport::koszul_oracle(p, i).dim();
                const std::size_t h_or =
                    tensor_power_dim(n, j - i) - testsupport::ideal_oracle(p, j - i).dim();
                const long formula = binomial(n, i) * binomial(n + j - i - 1, j - i);
                o.require(static_cast<long>(k_or * h_or) == formula, "oracle disagrees with the binomial formula");
                o.require(c.dim(-i, j) == k_or * h_or, "component dimension mismatch at n=" + std::to_string(n));
            }
        for (const auto& cell : hr.cells) {
            if (!cell.valid) continue;
            const std::size_t expect = (cell.r == 0 && cell.s == 0) ? 1 : 0;
            o.require(cell.dim == expect, "homology at (" + std::to_string(cell.r) + "," + std::to_string(cell.s) + ")");
        }
        const double t = seconds_since(t0);
        o.require(t < kKoszulFixtureLimitSeconds, "n=" + std::to_string(n) + " too slow");
        o.note << (n > 1 ? ", " : "") << "n=" << n << " in " << std::fixed << std::setprecision(1) << t << "s";
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        TruncatedGradedAlgebra d = grow(quadratic_dual(symmetric_presentation(n)), static_cast<int>(n) + 2);
        for (int i = 0; i <= d.max_degree(); ++i)
            o.require(static_cast<long>(d.h_dim(i)) == binomial(n, i), "dual Hilbert series of S(V), n=" + std::to_string(n));
    }
    std::vector<QuadraticPresentation> ps;
    for (std::size_t n = 1; n <= 3; ++n) {
        ps.push_back(symmetric_presentation(n));
        ps.push_back(exterior_presentation(n));
    }
    ps.push_back(free_presentation(2));
    ps.push_back(dual_numbers_presentation());
    for (const auto& p : ps)
        o.require(quadratic_dual(quadratic_dual(p)).relations.basis() == p.relations.basis(), "double dual differs");
    if (o.ok) o.note << ps.size() << " presentations, n <= 3";
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& name : kFixtures) {
        Fixture f = builtin_fixture(name);
        const int N = fixture_degree(name);
        KoszulPair kp = make_koszul_pair(f.presentation, N);
        for (int i = 0; i <= N; ++i) {
            const std::size_t k_or = testsupport::koszul_oracle(f.presentation, i).dim();
            o.require(kp.h.k_dim(i) == kp.dual.h_dim(i) && k_or == kp.h.k_dim(i), name + " degree " + std::to_string(i));
            ++checked;
        }
    }
    if (o.ok) o.note << kFixtures.size() << " fixtures, " << checked << " degrees";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t count = 0;
    for (QuadraticPresentation p : {symmetric_presentation(2), exterior_presentation(2)}) {
        KoszulPair kp = make_koszul_pair(p, 5);
        for (int i = 1; i <= 5; ++i)
            for (int j = 0; i + j <= 5; ++j) {
                o.require(psi_bar_identity(kp, i, j), "identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                ++count;
            }
    }
    if (o.ok) o.note << count << " matrix identities";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t triples = 0;
    for (const char* name : {"sl2_adjoint_takiff", "c2_sign_takiff"}) {
        Fixture f = builtin_fixture(name);
        KoszulPair kp = make_koszul_pair(f.presentation, 4);
        o.require(validate_module_algebra(*f.action, f.presentation).ok, std::string(name) + ": R not stable");
        o.require(validate_dual_module_algebra(*f.action, f.presentation).ok, std::string(name) + ": R^! not stable");
        auto r = SmashAlgebra(*f.action, kp.h, SmashAlgebra::Side::right).check_associativity();
        auto l = SmashAlgebra(*f.action, kp.dual, SmashAlgebra::Side::left).check_associativity();
        o.require(r.ok && l.ok, std::string(name) + ": smash product not associative");
        triples += r.triples + l.triples;
    }
    if (o.ok) o.note << triples << " basis triples";
    return o;
}

Outcome criterion6() {
    Outcome o;
    Fixture f = sl2_adjoint_takiff();
    const LieAlgebra& g = f.action->lie();
    const std::vector<Mat>& rho = f.action->modules[1].second.action;
    TakiffLie even = takiff(g, rho, Parity::even);
    TakiffLie sup = takiff(g, rho, Parity::super);
    o.require(validate_lie(even.algebra, even.parity).ok, "Jacobi fails");
    o.require(validate_lie(sup.algebra, sup.parity).ok, "super-Jacobi fails");
    auto ee = check_enveloping(even, rho, 3);
    auto es = check_enveloping(sup, rho, 3);
    for (int k = 0; k <= 3; ++k) {
        o.require(ee.dims[k] == static_cast<std::size_t>(binomial(3 + k - 1, k)), "S(V) dimension in V-degree " + std::to_string(k));
        o.require(es.dims[k] == static_cast<std::size_t>(binomial(3, k)), "Lambda(V) dimension in V-degree " + std::to_string(k));
    }
    o.require(ee.commutators_ok && es.commutators_ok, "[x, v] differs from the smash commutator");
    if (o.ok) o.note << "super V-degree dims 1,3,3,1";
    return o;
}

template <class F>
void for_each_fixture_module(F&& f) {
    for (const auto& name : kFixtures) {
        Fixture fx = builtin_fixture(name);
        ActionProvider p = fx.provider();
        KoszulPair kp = make_koszul_pair(fx.presentation, 4);
        for (const auto& [mname, m] : p.modules) f(name + "/" + mname, p, kp, m);
    }
}

Outcome criterion7() {
    Outcome o;
    std::size_t count = 0;
    for_each_fixture_module([&](const std::string& what, const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        track(I_complex(p, kp, concentrated(m)).complex, "I");
        track(P_complex(p, kp, concentrated(m)).complex, "P");
        Gen85Result g = gen85_checks(p, kp, m, 2);
        o.require(g.h0_I.ok && g.h0_P.ok, what + ": H_0 not isomorphic to X");
        o.require(g.diagonal_I.ok && g.diagonal_P.ok, what + ": not diagonal");
        o.require(g.vanishing_I.ok && g.vanishing_P.ok, what + ": diagonal homology nonzero");
        ++count;
    });
    if (o.ok) o.note << count << " fixture modules";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t cells = 0;
    for (const char* name : {"c2_sign_takiff", "sl2_adjoint_takiff"}) {
        Fixture f = builtin_fixture(name);
        KoszulPair kp = make_koszul_pair(f.presentation, 4);
        for (const auto& [mname, m] : f.action->modules) {
            const std::string what = std::string(name) + "/" + mname;
            GradedAModule x = concentrated(m);
            DualityComplex s = socI_complex(*f.action, kp, x);
            track(s.complex, "socI");
            o.require(check_equivariance(s).ok && check_socI_module_laws(*f.action, kp, x).ok &&
                          check_socI_subcomplex(*f.action, kp, x).ok,
                      what + ": socle structure");
            Identification t = identify_socI(*f.action, kp, x);
            o.require(t.ok(), what + ": Theta " + t.detail);
            GradedAModule y = free_dual_module(*f.action, kp, m);
            DualityComplex tp = topP_complex(*f.action, kp, y);
            track(tp.complex, "topP");
            o.require(check_equivariance(tp).ok, what + ": topP equivariance");
            Identification ph = identify_topP(*f.action, kp, y);
            o.require(ph.ok(), what + ": topP to I^0 " + ph.detail);
            cells += t.cells_checked + ph.cells_checked;
        }
    }
    if (o.ok) o.note << cells << " bidegrees";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t cells = 0;
    auto run = [&](const std::string& what, const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        track(Pstar_complex(p, kp, m).complex, "P*");
        Identification a = roundtrip_A(p, kp, m);
        Identification b = roundtrip_B(p, kp, m);
        o.require(a.ok(), what + ": round trip A " + a.detail);
        o.require(b.ok(), what + ": round trip B " + b.detail);
        cells += a.cells_checked + b.cells_checked;
    };
    {
        ActionProvider p = trivial_provider(2);
        run("S(V) dim 2", p, make_koszul_pair(symmetric_presentation(2), 5), p.modules[0].second);
    }
    Fixture f = sl2_adjoint_takiff();
    KoszulPair kp = make_koszul_pair(f.presentation, 4);
    for (const auto& [mname, m] : f.action->modules) run("sl2/" + mname, *f.action, kp, m);
    const double t = seconds_since(t0);
    o.require(t < kRoundTripLimitSeconds, "too slow");
    if (o.ok) o.note << cells << " bidegrees, " << std::fixed << std::setprecision(1) << t << "s";
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::size_t count = 0;
    auto check = [&](const std::string& what, const ActionProvider& p, const KoszulPair& kp, const A0Module& m) {
        DualityVerdict v = koszulity_via_duality(p, kp, m);
        o.require(v.agree, what + ": verdicts differ in degree " + std::to_string(v.disagreement.value_or(-1)));
        ++count;
    };
    for_each_fixture_module(check);
    ActionProvider p = trivial_provider(3);
    KoszulPair kp = make_koszul_pair(non_koszul(), 5);
    DualityVerdict v = koszulity_via_duality(p, kp, p.modules[0].second);
    o.require(v.agree && !v.via_koszul.koszul_up_to_max(), "non-Koszul control");
    if (o.ok) o.note << count + 1 << " fixture modules, including a non-Koszul control";
    return o;
}

Outcome criterion11() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> size(0, 4);
    for (int t = 0; t < kRandomMatrixCases; ++t) {
        const std::size_t r = size(rng), c = size(rng), k = size(rng);
        Mat m = testsupport::random_low_rank(rng, r, c, k);
        o.require(rank(m) + kernel(m).dim() == c, "rank-nullity");
        Mat a = testsupport::random_mat(rng, 2, size(rng) % 3 + 1), b = testsupport::random_mat(rng, 2, 2);
        Mat a2 = testsupport::random_mat(rng, a.cols(), 2), b2 = testsupport::random_mat(rng, 2, size(rng) % 3);
        o.require(kron(a, b) * kron(a2, b2) == kron(a * a2, b * b2), "kron functoriality");
        Subspace s = Subspace::span(c, testsupport::random_mat(rng, size(rng), c));
        Quotient q = quotient(c, s);
        o.require(q.projection * q.section == Mat::identity(q.dim()), "projection o section");
        o.require((q.projection * s.inclusion()).is_zero(), "projection kills the subspace");
        o.require(q.dim() + s.dim() == c, "quotient dimension");
    }
    for (const auto& name : kFixtures) {
        TruncatedGradedAlgebra h = grow(builtin_fixture(name).presentation, 4);
        track(right_koszul_complex(h), name + " right Koszul");
        track(left_koszul_complex(h), name + " left Koszul");
    }
    o.require(g_d2_failure.empty(), "d^2 != 0 for " + g_d2_failure);
    JobSpec job;
    Fixture f = c2_sign_takiff();
    job.presentation_json = presentation_to_json(f.presentation);
    job.action_json = action_to_json(*f.action);
    job.max_degree = 3;
    job.checks = {"all"};
    nlohmann::json a = run_job(job).report, b = run_job(job).report;
    a.erase("timing");
    b.erase("timing");
    o.require(a.dump() == b.dump(), "report bytes differ between runs");
    if (o.ok) o.note << kRandomMatrixCases << " matrix cases, " << g_complexes << " complexes";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Koszul complex of S(V) exact, N = 6", criterion1},
        {"quadratic dual of S(V) and double duals", criterion2},
        {"dim K_i = dim H^!_i", criterion3},
        {"psi-bar intertwines the Koszul differentials", criterion4},
        {"module algebras and smash associativity", criterion5},
        {"Takiff brackets and enveloping dimensions", criterion6},
        {"degree-zero homology of I and P", criterion7},
        {"socle and top identifications", criterion8},
        {"round trips", criterion9},
        {"verdict agreement", criterion10},
        {"infrastructure properties", criterion11},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        if (!o.ok) ++failures;
        std::cout << "criterion " << (k + 1) << " " << (o.ok ? "PASS" : "FAIL") << ": " << criteria[k].first << " ("
                  << o.note.str() << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
