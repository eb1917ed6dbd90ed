#include "koszulkit/report.hpp"

#include "koszulkit/duality.hpp"
#include "koszulkit/fixtures.hpp"
#include "koszulkit/io.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace koszulkit {

using nlohmann::json;

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {"validate", "hilbert", "dual",    "koszul",
                                                   "smash",    "takiff",  "duality", "roundtrip"};
    return names;
}

std::vector<std::string> expand_checks(const std::vector<std::string>& requested) {
    if (requested.empty()) throw UsageError("no checks requested");
    std::set<std::string> want;
    for (const auto& r : requested) {
        if (r == "all") {
            want.insert(check_names().begin(), check_names().end());
            continue;
        }
        if (std::find(check_names().begin(), check_names().end(), r) == check_names().end())
            throw UsageError("unknown check \"" + r + "\"");
        want.insert(r);
    }
    std::vector<std::string> out;
    for (const auto& n : check_names())
        if (want.count(n)) out.push_back(n);
    return out;
}

namespace {

json cell_json(const std::optional<Cell>& c) {
    if (!c) return nullptr;
    return json::array({c->first, c->second});
}

json check_json(const CheckResult& c) { return {{"ok", c.ok}, {"detail", c.detail}, {"cell", cell_json(c.cell)}}; }

json ident_json(const Identification& id) {
    return {{"ok", id.ok()},           {"bijective", id.bijective},        {"chain_map", id.chain_map},
            {"equivariant", id.equivariant}, {"cells_checked", id.cells_checked},
            {"first_failure", cell_json(id.first_failure)}, {"detail", id.detail}};
}

json verdict_json(const KoszulVerdict& v) {
    json degs = json::array();
    for (const auto& d : v.degrees)
        degs.push_back({{"degree", d.degree}, {"exact", d.exact}, {"failing_cell", cell_json(d.failing_cell)}});
    return {{"summary", v.summary()}, {"koszul", v.koszul_up_to_max()}, {"degrees", degs}};
}

json axiom_json(const AxiomCheck& a) { return {{"ok", a.ok}, {"axiom", a.axiom}, {"where", a.where}}; }

/// d^2 = 0 is an internal invariant: a failure aborts the job with exit 3.
json complex_json(const DualityComplex& dc) {
    auto d2 = check_d_squared(dc.complex);
    if (!d2.ok)
        throw ContractViolation(dc.construction + ": d^2 != 0 at (" + std::to_string(d2.first_failure->first) + "," +
                                std::to_string(d2.first_failure->second) + ")");
    auto eq = check_equivariance(dc);
    return {{"d_squared_zero", true}, {"cells", dc.complex.components().size()}, {"equivariance", check_json(eq)}};
}

std::vector<std::size_t> dims(int N, auto&& f) {
    std::vector<std::size_t> out;
    for (int i = 0; i <= N; ++i) out.push_back(f(i));
    return out;
}

A0Module trivial_module(const ActionProvider& p) {
    A0Module m{1, {}};
    for (const auto& g : p.generators())
        m.action.push_back(Mat(1, 1, {p.kind() == ActionProvider::Kind::lie ? Rat(0) : p.counit(g)}));
    return m;
}

SmashElem random_smash(std::mt19937_64& rng, const ActionProvider& p, const TruncatedGradedAlgebra& h, int max_deg) {
    auto basis = p.test_basis();
    std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), deg(0, std::max(0, max_deg));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    SmashElem e;
    for (int t = terms(rng); t > 0; --t) {
        const int dg = deg(rng);
        if (h.h_dim(dg) == 0) continue;
        std::uniform_int_distribution<std::size_t> idx(0, h.h_dim(dg) - 1);
        e[SmashKey{basis[pick(rng)], dg, idx(rng)}] += coef(rng);
    }
    return e;
}

bool smash_equal(SmashElem a, SmashElem b) {
    std::erase_if(a, [](const auto& kv) { return sgn(kv.second) == 0; });
    std::erase_if(b, [](const auto& kv) { return sgn(kv.second) == 0; });
    return a == b;
}

struct Context {
    const JobSpec& job;
    QuadraticPresentation pres;
    ActionProvider provider;
    bool trivial_a0 = true;
    std::optional<KoszulPair> kp;
    bool valid = true;
};

json run_validate(Context& c) {
    json r;
    r["presentation"] = {{"generators", c.pres.num_generators()}, {"relations", c.pres.relations.dim()}};
    bool ok = true;
    AxiomCheck a0 = c.provider.kind() == ActionProvider::Kind::lie ? validate_lie(c.provider.lie())
                                                                     : validate_bialgebra(c.provider.bialgebra());
    r["a0"] = axiom_json(a0);
    r["a0"]["kind"] = c.trivial_a0 ? "trivial"
                      : c.provider.kind() == ActionProvider::Kind::lie ? "lie" : "bialgebra";
    ok = ok && a0.ok;
    json mods = json::object();
    for (const auto& [name, m] : c.provider.modules) {
        auto v = validate_module(c.provider, m);
        mods[name] = axiom_json(v);
        ok = ok && v.ok;
    }
    r["modules"] = mods;
    if (a0.ok) {
        auto ma = validate_module_algebra(c.provider, c.pres);
        auto da = validate_dual_module_algebra(c.provider, c.pres);
        r["module_algebra"] = {{"ok", ma.ok}, {"reason", ma.reason}};
        r["dual_module_algebra"] = {{"ok", da.ok}, {"reason", da.reason}};
        ok = ok && ma.ok && da.ok;
    }
    r["pass"] = ok;
    c.valid = ok;
    return r;
}

json run_hilbert(Context& c) {
    const int N = c.kp->h.max_degree();
    return {{"pass", true}, {"h", dims(N, [&](int i) { return c.kp->h.h_dim(i); })}};
}

json run_dual(Context& c) {
    const KoszulPair& kp = *c.kp;
    const int N = kp.h.max_degree();
    auto hd = dims(N, [&](int i) { return kp.dual.h_dim(i); });
    auto kd = dims(N, [&](int i) { return kp.h.k_dim(i); });
    QuadraticPresentation dd = quadratic_dual(quadratic_dual(c.pres));
    const bool double_dual = dd.relations.basis() == c.pres.relations.basis();
    // psi-bar on T^{i+j}; keep the tensor power moderate
    bool psi = true;
    int psi_max = 0;
    for (int t = 1; t <= std::min(N, 5); ++t) {
        if (tensor_power_dim(kp.h.num_generators(), t) > 4096) break;
        psi_max = t;
        for (int i = 1; i <= t; ++i) psi = psi && psi_bar_identity(kp, i, t - i);
    }
    return {{"pass", hd == kd && double_dual && psi},
            {"hdual", hd},
            {"k", kd},
            {"k_equals_hdual", hd == kd},
            {"double_dual", double_dual},
            {"psi_bar", {{"ok", psi}, {"max_total_degree", psi_max}}},
            {"dual_relations", quadratic_dual(c.pres).relations.dim()}};
}

json run_koszul(Context& c) {
    KoszulVerdict v = koszulity_check(c.kp->h);
    HomologyReport h = homology(right_koszul_complex(c.kp->h), c.job.jobs);
    EulerResult e = euler_identity(*c.kp);
    return {{"pass", v.koszul_up_to_max()},
            {"verdict", verdict_json(v)},
            {"homology", h.to_json()},
            {"euler", {{"ok", e.ok}, {"values", e.values}}}};
}

json run_smash(Context& c) {
    const KoszulPair& kp = *c.kp;
    auto right = SmashAlgebra(c.provider, kp.h, SmashAlgebra::Side::right);
    auto left = SmashAlgebra(c.provider, kp.dual, SmashAlgebra::Side::left);
    auto ra = right.check_associativity();
    auto la = left.check_associativity();
    std::mt19937_64 rng(c.job.seed);
    const int third = kp.h.max_degree() / 3;
    bool rand_ok = true;
    const int cases = 20;
    for (int t = 0; t < cases; ++t)
        for (const SmashAlgebra* a : {&right, &left}) {
            const auto& alg = a == &right ? kp.h : kp.dual;
            auto x = random_smash(rng, c.provider, alg, third), y = random_smash(rng, c.provider, alg, third),
                 z = random_smash(rng, c.provider, alg, third);
            rand_ok = rand_ok && smash_equal(a->multiply(a->multiply(x, y), z), a->multiply(x, a->multiply(y, z)));
        }
    return {{"pass", ra.ok && la.ok && rand_ok},
            {"right", {{"ok", ra.ok}, {"triples", ra.triples}}},
            {"left", {{"ok", la.ok}, {"triples", la.triples}}},
            {"random", {{"ok", rand_ok}, {"cases", 2 * cases}}}};
}

json run_takiff(Context& c) {
    if (c.provider.kind() != ActionProvider::Kind::lie) return {{"pass", true}, {"applicable", false}};
    const LieAlgebra& g = c.provider.lie();
    std::vector<Mat> rho;
    for (std::size_t a = 0; a < g.dim(); ++a) rho.push_back(Rat(-1) * c.provider.act_on_v({static_cast<int>(a)}));
    json r{{"applicable", true}};
    bool ok = true;
    for (Parity par : {Parity::even, Parity::super}) {
        TakiffLie t = takiff(g, rho, par);
        auto jac = validate_lie(t.algebra, t.parity);
        auto env = check_enveloping(t, rho, 3);
        ok = ok && jac.ok && env.ok;
        r[par == Parity::even ? "even" : "super"] = {{"jacobi", axiom_json(jac)},
                                                     {"dims", env.dims},
                                                     {"expected", env.expected},
                                                     {"commutators_ok", env.commutators_ok},
                                                     {"ok", env.ok}};
    }
    TakiffLie sup = takiff(g, rho, Parity::super);
    r["literal_super_bracket_is_super_lie"] = validate_lie(literal_super_takiff(g, rho), sup.parity).ok;
    r["pass"] = ok;
    return r;
}

bool all_ok(const json& j) {
    if (j.is_object()) {
        if (j.contains("ok") && j.at("ok").is_boolean() && !j.at("ok").get<bool>()) return false;
        for (const auto& [k, v] : j.items())
            if (!all_ok(v)) return false;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (!all_ok(v)) return false;
    }
    return true;
}

json run_duality(Context& c) {
    const KoszulPair& kp = *c.kp;
    json mods = json::object();
    for (const auto& [name, m] : c.provider.modules) {
        GradedAModule x = concentrated(m);
        json e;
        e["I"] = complex_json(I_complex(c.provider, kp, x));
        e["P"] = complex_json(P_complex(c.provider, kp, x));
        e["socI"] = complex_json(socI_complex(c.provider, kp, x, true));
        e["socI_module_laws"] = check_json(check_socI_module_laws(c.provider, kp, x));
        e["socI_subcomplex"] = check_json(check_socI_subcomplex(c.provider, kp, x));
        e["theta"] = ident_json(identify_socI(c.provider, kp, x));
        GradedAModule y = free_dual_module(c.provider, kp, m);
        e["topP"] = complex_json(topP_complex(c.provider, kp, y));
        e["phi"] = ident_json(identify_topP(c.provider, kp, y));
        Gen85Result g = gen85_checks(c.provider, kp, m, c.job.jobs);
        e["degree_zero"] = {{"h0_I", check_json(g.h0_I)},           {"h0_P", check_json(g.h0_P)},
                            {"diagonal_I", check_json(g.diagonal_I)}, {"diagonal_P", check_json(g.diagonal_P)},
                            {"vanishing_I", check_json(g.vanishing_I)}, {"vanishing_P", check_json(g.vanishing_P)}};
        DualityVerdict v = koszulity_via_duality(c.provider, kp, m, c.job.jobs);
        e["verdicts"] = {{"ok", v.agree},
                         {"disagreement", v.disagreement ? json(*v.disagreement) : json(nullptr)},
                         {"via_I", verdict_json(v.via_I)},
                         {"via_Pstar", verdict_json(v.via_Pstar)},
                         {"via_koszul", verdict_json(v.via_koszul)}};
        mods[name] = std::move(e);
    }
    json r{{"modules", mods}};
    if (c.provider.kind() == ActionProvider::Kind::bialgebra) {
        TruncatedGradedAlgebra h = grow(c.pres, std::min(kp.h.max_degree(), 3));
        std::vector<A0Module> zs;
        for (const auto& [n, m] : c.provider.modules) zs.push_back(m);
        json adj = json::array();
        for (const auto& [name, m] : c.provider.modules)
            for (const auto& a : adjunction_check(c.provider, h, m, zs))
                adj.push_back({{"module", name}, {"target", a.target}, {"hom_A", a.hom_a}, {"hom_A0", a.hom_a0},
                               {"ok", a.ok()}});
        r["adjunction"] = adj;
    }
    r["pass"] = all_ok(r);
    return r;
}

json run_roundtrip(Context& c) {
    json table = json::array();
    for (const auto& [name, m] : c.provider.modules)
        table.push_back({{"module", name},
                         {"A", ident_json(roundtrip_A(c.provider, *c.kp, m))},
                         {"B", ident_json(roundtrip_B(c.provider, *c.kp, m))}});
    json r{{"table", table}};
    r["pass"] = all_ok(r);
    return r;
}

} // namespace

JobResult run_job(const JobSpec& job) {
    JobResult res;
    json& rep = res.report;
    rep["schema"] = kSchema;
    rep["tool"] = {{"name", "koszulkit"}, {"version", kVersion}};
    rep["assumptions"] = json::array({"condition (II), Ext-vanishing in the completed category, is assumed and not checked"});
    std::vector<std::string> checks;
    try {
        checks = expand_checks(job.checks);
        if (job.max_degree < 0) throw UsageError("max degree must be non-negative");
    } catch (const UsageError& e) {
        rep["error"] = {{"kind", "usage"}, {"message", e.what()}};
        res.exit_code = 2;
        return res;
    }
    rep["checks"] = checks;
    rep["max_degree"] = job.max_degree;
    rep["seed"] = job.seed;

    std::optional<Context> ctx;
    try {
        json pj = job.presentation_json ? *job.presentation_json : read_json_file(job.input);
        QuadraticPresentation pres = presentation_from_json(pj);
        rep["inputs"]["presentation"] = {{"sha256", digest(pj)}};
        bool trivial = true;
        ActionProvider prov;
        if (job.action_json || !job.action.empty()) {
            json aj = job.action_json ? *job.action_json : read_json_file(job.action);
            rep["inputs"]["action"] = {{"sha256", digest(aj)}};
            prov = action_from_json(aj, pres.num_generators());
            trivial = false;
            if (prov.modules.empty()) prov.modules.emplace_back("trivial", trivial_module(prov));
        } else {
            prov = trivial_provider(pres.num_generators());
        }
        ctx.emplace(Context{job, std::move(pres), std::move(prov), trivial, std::nullopt, true});
    } catch (const ParseError& e) {
        rep["error"] = {{"kind", "parse"}, {"message", e.what()}};
        res.exit_code = 2;
        return res;
    } catch (const DimensionMismatch& e) {
        rep["error"] = {{"kind", "parse"}, {"message", e.what()}};
        res.exit_code = 2;
        return res;
    } catch (const nlohmann::json::exception& e) {
        rep["error"] = {{"kind", "parse"}, {"message", e.what()}};
        res.exit_code = 2;
        return res;
    }

    Context& c = *ctx;
    json results = json::object();
    json timing = json::object();
    bool all_pass = true;
    auto timed = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        json r = fn();
        timing[name + "_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0).count();
        all_pass = all_pass && r.value("pass", false);
        results[name] = std::move(r);
    };
    try {
        timed("validate", [&] { return run_validate(c); });
        timed("grow", [&] {
            c.kp = make_koszul_pair(c.pres, job.max_degree, std::min(job.max_degree, 3));
            return json{{"pass", true}};
        });
        for (const auto& name : checks) {
            if (name == "validate") continue;
            const bool needs_valid = name == "smash" || name == "takiff" || name == "duality" || name == "roundtrip";
            if (needs_valid && !c.valid) {
                results[name] = {{"pass", false}, {"skipped", "validation failed"}};
                all_pass = false;
                continue;
            }
            if (name == "hilbert") timed(name, [&] { return run_hilbert(c); });
            if (name == "dual") timed(name, [&] { return run_dual(c); });
            if (name == "koszul") timed(name, [&] { return run_koszul(c); });
            if (name == "smash") timed(name, [&] { return run_smash(c); });
            if (name == "takiff") timed(name, [&] { return run_takiff(c); });
            if (name == "duality") timed(name, [&] { return run_duality(c); });
            if (name == "roundtrip") timed(name, [&] { return run_roundtrip(c); });
        }
        results.erase("grow");
        res.exit_code = all_pass ? 0 : 1;
    } catch (const ContractViolation& e) {
        rep["error"] = {{"kind", "internal"}, {"message", e.what()}};
        res.exit_code = 3;
    } catch (const WindowError& e) {
        rep["error"] = {{"kind", "internal"}, {"message", e.what()}};
        res.exit_code = 3;
    } catch (const DimensionMismatch& e) {
        rep["error"] = {{"kind", "internal"}, {"message", e.what()}};
        res.exit_code = 3;
    }
    rep["results"] = std::move(results);
    rep["pass"] = res.exit_code == 0;
    rep["timing"] = std::move(timing);
    return res;
}

bool reports_equal(const json& a, const json& b, std::vector<std::string>* diffs) {
    json x = a, y = b;
    if (x.is_object()) x.erase("timing");
    if (y.is_object()) y.erase("timing");
    if (x == y) return true;
    if (diffs)
        for (const auto& op : json::diff(x, y)) diffs->push_back(op.value("op", "") + " " + op.value("path", ""));
    return false;
}

} // namespace koszulkit
