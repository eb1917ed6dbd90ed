#include "koszulkit/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace koszulkit {

using nlohmann::json;

namespace {

Rat rat_from(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t size_from(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names, const char* what) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!idx.emplace(names[i], i).second) throw ParseError(std::string("duplicate ") + what + " \"" + names[i] + "\"");
    return idx;
}

std::vector<std::string> names_from(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of names");
    std::vector<std::string> out;
    for (const auto& n : j) {
        if (!n.is_string() || n.get<std::string>().empty()) throw ParseError(std::string(what) + ": bad name");
        out.push_back(n.get<std::string>());
    }
    return out;
}

A0Module module_from(const json& j, std::size_t n_gens, const std::vector<std::string>* lie_names) {
    A0Module m;
    m.dim = size_from(field(j, "dim"), "module dim");
    const json& act = field(j, "action");
    if (lie_names) {
        if (!act.is_object()) throw ParseError("Lie module action must be an object keyed by basis name");
        for (const auto& name : *lie_names)
            m.action.push_back(act.contains(name) ? mat_from_json(act.at(name), m.dim, m.dim) : Mat(m.dim, m.dim));
        for (const auto& [k, v] : act.items())
            if (std::find(lie_names->begin(), lie_names->end(), k) == lie_names->end())
                throw ParseError("module action for unknown basis element \"" + k + "\"");
    } else {
        if (!act.is_array() || act.size() != n_gens) throw ParseError("module action: one matrix per basis element");
        for (const auto& a : act) m.action.push_back(mat_from_json(a, m.dim, m.dim));
    }
    return m;
}

} // namespace

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix must have " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat_from(j[r][c]);
    }
    return m;
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

Vec vec_from_json(const json& j, std::size_t len) {
    if (!j.is_array() || j.size() != len) throw ParseError("vector must have " + std::to_string(len) + " entries");
    Vec v;
    for (const auto& e : j) v.push_back(rat_from(e));
    return v;
}

json presentation_to_json(const QuadraticPresentation& p) {
    const std::size_t n = p.num_generators();
    json rels = json::array();
    const Mat& b = p.relations.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        json terms = json::array();
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (sgn(b(r, c)) != 0)
                terms.push_back({{"c", to_string(b(r, c))}, {"m", {p.gen_names[c / n], p.gen_names[c % n]}}});
        rels.push_back({{"terms", terms}});
    }
    return {{"generators", p.gen_names}, {"relations", rels}};
}

QuadraticPresentation presentation_from_json(const json& j) {
    auto names = names_from(field(j, "generators"), "generators");
    auto idx = name_index(names, "generator");
    std::vector<std::vector<Term>> rels;
    const json& rj = j.contains("relations") ? j.at("relations") : json::array();
    if (!rj.is_array()) throw ParseError("relations must be an array");
    for (const auto& rel : rj) {
        std::vector<Term> terms;
        for (const auto& t : field(rel, "terms")) {
            const json& m = field(t, "m");
            if (!m.is_array() || m.size() != 2) throw ParseError("a relation monomial is a pair of generator names");
            std::size_t ab[2];
            for (int k = 0; k < 2; ++k) {
                if (!m[k].is_string() || !idx.count(m[k].get<std::string>()))
                    throw ParseError("unknown generator in relation: " + m[k].dump());
                ab[k] = idx.at(m[k].get<std::string>());
            }
            terms.push_back(Term{rat_from(field(t, "c")), ab[0], ab[1]});
        }
        rels.push_back(std::move(terms));
    }
    return QuadraticPresentation::make(std::move(names), rels);
}

json action_to_json(const ActionProvider& p) {
    json out;
    json modules = json::object();
    if (p.kind() == ActionProvider::Kind::bialgebra) {
        const Bialgebra& b = p.bialgebra();
        json mult = json::array(), comult = json::array(), action = json::array();
        for (const auto& v : b.mult) mult.push_back(vec_to_json(v));
        for (const auto& v : b.comult) comult.push_back(vec_to_json(v));
        for (std::size_t i = 0; i < b.dim; ++i) action.push_back(mat_to_json(p.act_on_v({static_cast<int>(i)})));
        out["bialgebra"] = {{"dim", b.dim},      {"mult", mult},     {"unit", vec_to_json(b.unit)},
                            {"comult", comult},  {"counit", vec_to_json(b.counit)}, {"action", action}};
        for (const auto& [name, m] : p.modules) {
            json acts = json::array();
            for (const auto& a : m.action) acts.push_back(mat_to_json(a));
            modules[name] = {{"dim", m.dim}, {"action", acts}};
        }
    } else {
        const LieAlgebra& g = p.lie();
        json brackets = json::object(), action = json::object();
        for (std::size_t a = 0; a < g.dim(); ++a) {
            for (std::size_t b = a + 1; b < g.dim(); ++b) {
                json terms = json::array();
                for (std::size_t c = 0; c < g.dim(); ++c)
                    if (sgn(g.bracket[a][b][c]) != 0)
                        terms.push_back({{"c", to_string(g.bracket[a][b][c])}, {"b", g.basis[c]}});
                if (!terms.empty()) brackets[g.basis[a] + "," + g.basis[b]] = terms;
            }
            action[g.basis[a]] = mat_to_json(Rat(-1) * p.act_on_v({static_cast<int>(a)}));
        }
        out["lie"] = {{"basis", g.basis}, {"brackets", brackets}, {"action", action}};
        for (const auto& [name, m] : p.modules) {
            json acts = json::object();
            for (std::size_t a = 0; a < g.dim(); ++a) acts[g.basis[a]] = mat_to_json(m.action[a]);
            modules[name] = {{"dim", m.dim}, {"action", acts}};
        }
    }
    out["modules"] = modules;
    return out;
}

ActionProvider action_from_json(const json& j, std::size_t v_dim) {
    if (!j.is_object()) throw ParseError("action file must be an object");
    const bool bialg = j.contains("bialgebra"), lie = j.contains("lie");
    if (bialg == lie) throw ParseError("action file needs exactly one of \"bialgebra\" and \"lie\"");
    ActionProvider p;
    std::vector<std::string> lie_names;
    std::size_t n_gens = 0;
    if (bialg) {
        const json& bj = j.at("bialgebra");
        Bialgebra b;
        b.dim = size_from(field(bj, "dim"), "bialgebra dim");
        n_gens = b.dim;
        const json& mult = field(bj, "mult");
        if (!mult.is_array() || mult.size() != b.dim * b.dim) throw ParseError("mult needs dim^2 vectors");
        for (const auto& v : mult) b.mult.push_back(vec_from_json(v, b.dim));
        b.unit = vec_from_json(field(bj, "unit"), b.dim);
        const json& comult = field(bj, "comult");
        if (!comult.is_array() || comult.size() != b.dim) throw ParseError("comult needs dim vectors");
        for (const auto& v : comult) b.comult.push_back(vec_from_json(v, b.dim * b.dim));
        b.counit = vec_from_json(field(bj, "counit"), b.dim);
        const json& act = field(bj, "action");
        if (!act.is_array() || act.size() != b.dim) throw ParseError("bialgebra action: one matrix per basis element");
        std::vector<Mat> mats;
        for (const auto& a : act) mats.push_back(mat_from_json(a, v_dim, v_dim));
        p = ActionProvider::from_bialgebra(std::move(b), std::move(mats));
    } else {
        const json& lj = j.at("lie");
        LieAlgebra g;
        g.basis = names_from(field(lj, "basis"), "basis");
        lie_names = g.basis;
        n_gens = g.dim();
        auto idx = name_index(g.basis, "basis element");
        const std::size_t d = g.dim();
        g.bracket.assign(d, std::vector<Vec>(d, Vec(d)));
        std::vector<std::vector<bool>> given(d, std::vector<bool>(d, false));
        const json& br = lj.contains("brackets") ? lj.at("brackets") : json::object();
        if (!br.is_object()) throw ParseError("brackets must be an object");
        for (const auto& [key, terms] : br.items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw ParseError("bracket key must be \"a,b\": " + key);
            auto a = key.substr(0, comma), b = key.substr(comma + 1);
            if (!idx.count(a) || !idx.count(b)) throw ParseError("bracket of unknown basis elements: " + key);
            for (const auto& t : terms) {
                const json& bn = field(t, "b");
                if (!bn.is_string() || !idx.count(bn.get<std::string>()))
                    throw ParseError("bracket value names an unknown basis element");
                g.bracket[idx[a]][idx[b]][idx[bn.get<std::string>()]] += rat_from(field(t, "c"));
            }
            given[idx[a]][idx[b]] = true;
        }
        // an unlisted [b, a] is taken to be -[a, b]
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                if (given[a][b] && !given[b][a])
                    for (std::size_t c = 0; c < d; ++c) g.bracket[b][a][c] = -g.bracket[a][b][c];
        const json& act = field(lj, "action");
        if (!act.is_object()) throw ParseError("Lie action must be an object keyed by basis name");
        std::vector<Mat> rho;
        for (const auto& name : g.basis)
            rho.push_back(act.contains(name) ? mat_from_json(act.at(name), v_dim, v_dim) : Mat(v_dim, v_dim));
        p = ActionProvider::from_lie(std::move(g), std::move(rho));
    }
    if (j.contains("modules")) {
        const json& mj = j.at("modules");
        if (!mj.is_object()) throw ParseError("modules must be an object");
        for (const auto& [name, m] : mj.items())
            p.modules.emplace_back(name, module_from(m, n_gens, lie ? &lie_names : nullptr));
    }
    return p;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string digest(const json& j) {
    const std::string s = j.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

} // namespace koszulkit
