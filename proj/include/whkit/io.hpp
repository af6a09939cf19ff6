#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "whkit/frobenius.hpp"
#include "whkit/groupoid.hpp"
#include "whkit/report.hpp"
#include "whkit/weak_hopf.hpp"

namespace whkit {

using json = nlohmann::ordered_json;

// ---- groupoid files --------------------------------------------------------

/// Groupoid file: units, arrows {id, src, tgt}, comp triples [p, q, pq],
/// inv map. Unit arrows may be omitted; they are then inferred with ids
/// "id:<unit>" and their composition rules are filled in.
inline Groupoid parse_groupoid(const json& j) {
    if (!j.contains("units") || !j.contains("arrows"))
        throw error("groupoid file: missing 'units' or 'arrows'");
    std::vector<std::string> units = j.at("units").get<std::vector<std::string>>();
    std::vector<std::string> arrows;
    std::map<std::string, std::string> src, tgt, inv;
    for (const auto& a : j.at("arrows")) {
        std::string id = a.at("id").get<std::string>();
        arrows.push_back(id);
        src[id] = a.at("src").get<std::string>();
        tgt[id] = a.at("tgt").get<std::string>();
    }
    std::map<std::pair<std::string, std::string>, std::string> comp;
    if (j.contains("comp"))
        for (const auto& t : j.at("comp")) {
            if (!t.is_array() || t.size() != 3)
                throw error("groupoid file: comp entries must be [p, q, pq] triples");
            comp[{t[0].get<std::string>(), t[1].get<std::string>()}] = t[2].get<std::string>();
        }
    if (j.contains("inv"))
        for (const auto& [k, v] : j.at("inv").items()) inv[k] = v.get<std::string>();

    // infer missing unit arrows by the id:<unit> convention
    for (const auto& u : units) {
        std::string id = "id:" + u;
        bool have_unit_arrow = false;
        for (const auto& a : arrows)
            if (a == id) have_unit_arrow = true;
        bool some_loop = false;
        for (const auto& a : arrows)
            if (src.at(a) == u && tgt.at(a) == u && comp.count({a, a}) && comp[{a, a}] == a)
                some_loop = true;
        if (!have_unit_arrow && !some_loop) {
            arrows.push_back(id);
            src[id] = u;
            tgt[id] = u;
            inv[id] = id;
        }
    }
    // fill composition rules involving inferred identity arrows
    for (const auto& u : units) {
        std::string id = "id:" + u;
        if (!src.count(id)) continue;
        for (const auto& a : arrows) {
            if (src.at(a) == u && !comp.count({a, id})) comp[{a, id}] = a;
            if (tgt.at(a) == u && !comp.count({id, a})) comp[{id, a}] = a;
        }
    }
    return Groupoid(units, arrows, src, tgt, comp, inv);
}

inline json serialize_groupoid(const Groupoid& g) {
    json j;
    j["kind"] = "groupoid";
    j["units"] = g.units();
    json arrows = json::array();
    for (std::size_t p = 0; p < g.arrow_count(); ++p)
        arrows.push_back({{"id", g.arrow_name(p)},
                          {"src", g.unit_name(g.src(p))},
                          {"tgt", g.unit_name(g.tgt(p))}});
    j["arrows"] = arrows;
    json comp = json::array();
    for (std::size_t p = 0; p < g.arrow_count(); ++p)
        for (std::size_t q = 0; q < g.arrow_count(); ++q)
            if (g.composable(p, q))
                comp.push_back({g.arrow_name(p), g.arrow_name(q), g.arrow_name(g.compose(p, q))});
    j["comp"] = comp;
    json inv = json::object();
    for (std::size_t p = 0; p < g.arrow_count(); ++p)
        inv[g.arrow_name(p)] = g.arrow_name(g.inv(p));
    j["inv"] = inv;
    return j;
}

// ---- algebra files ---------------------------------------------------------

/// Structure-constant file: basis labels, sparse triples
/// [i, j, k, scalar] meaning e_i e_j += scalar e_k, optional unit vector.
inline Algebra parse_algebra(const json& j) {
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    const std::size_t n = basis.size();
    std::vector<Vector> table(n * n, zero_vector(n));
    for (const auto& t : j.at("consts")) {
        if (!t.is_array() || t.size() != 4)
            throw error("algebra file: consts entries must be [i, j, k, scalar]");
        std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>(),
                    k = t[2].get<std::size_t>();
        if (i >= n || jj >= n || k >= n) throw error("algebra file: basis index out of range");
        table[i * n + jj][k] += Scalar::parse(t[3].get<std::string>());
    }
    std::optional<Vector> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) {
        Vector u;
        for (const auto& s : j.at("unit")) u.push_back(Scalar::parse(s.get<std::string>()));
        if (u.size() != n) throw error("algebra file: unit vector has wrong length");
        unit = std::move(u);
    }
    return Algebra(std::move(basis), std::move(table), std::move(unit));
}

inline json serialize_algebra(const Algebra& a) {
    json j;
    j["kind"] = "algebra";
    j["basis"] = a.basis();
    json consts = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t jj = 0; jj < a.dim(); ++jj) {
            const Vector& p = a.basis_product(i, jj);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!p[k].is_zero()) consts.push_back({i, jj, k, p[k].str()});
        }
    j["consts"] = consts;
    if (a.unit()) {
        json u = json::array();
        for (const auto& s : *a.unit()) u.push_back(s.str());
        j["unit"] = u;
    }
    return j;
}

// ---- weak Hopf bundles -----------------------------------------------------

inline WeakHopf parse_weak_hopf(const json& j) {
    Algebra alg = parse_algebra(j.at("algebra"));
    const std::size_t n = alg.dim();
    Matrix delta(n * n, n);
    for (const auto& t : j.at("delta")) {
        if (!t.is_array() || t.size() != 4)
            throw error("wmha file: delta entries must be [a, i, j, scalar]");
        std::size_t a = t[0].get<std::size_t>(), i = t[1].get<std::size_t>(),
                    jj = t[2].get<std::size_t>();
        if (a >= n || i >= n || jj >= n) throw error("wmha file: delta index out of range");
        delta(i * n + jj, a) += Scalar::parse(t[3].get<std::string>());
    }
    Functional counit = zero_vector(n);
    for (const auto& t : j.at("counit")) {
        std::size_t i = t[0].get<std::size_t>();
        if (i >= n) throw error("wmha file: counit index out of range");
        counit[i] += Scalar::parse(t[1].get<std::string>());
    }
    Matrix antipode(n, n);
    for (const auto& t : j.at("antipode")) {
        std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>();
        if (i >= n || jj >= n) throw error("wmha file: antipode index out of range");
        antipode(i, jj) += Scalar::parse(t[2].get<std::string>());
    }
    Vector e(n * n, Scalar::zero());
    for (const auto& t : j.at("E")) {
        std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>();
        if (i >= n || jj >= n) throw error("wmha file: E index out of range");
        e[i * n + jj] += Scalar::parse(t[2].get<std::string>());
    }
    return WeakHopf(std::move(alg), std::move(delta), std::move(counit), std::move(antipode),
                    std::move(e));
}

inline json serialize_weak_hopf(const WeakHopf& w) {
    const std::size_t n = w.dim();
    json j;
    j["kind"] = "wmha";
    j["algebra"] = serialize_algebra(w.algebra());
    json delta = json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj) {
                const Scalar& s = w.delta_matrix()(i * n + jj, a);
                if (!s.is_zero()) delta.push_back({a, i, jj, s.str()});
            }
    j["delta"] = delta;
    json counit = json::array();
    for (std::size_t i = 0; i < n; ++i)
        if (!w.counit()[i].is_zero()) counit.push_back({i, w.counit()[i].str()});
    j["counit"] = counit;
    json antipode = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj)
            if (!w.antipode_matrix()(i, jj).is_zero())
                antipode.push_back({i, jj, w.antipode_matrix()(i, jj).str()});
    j["antipode"] = antipode;
    json e = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj)
            if (!w.E()[i * n + jj].is_zero()) e.push_back({i, jj, w.E()[i * n + jj].str()});
    j["E"] = e;
    return j;
}

// ---- separability bundles --------------------------------------------------

inline SeparabilityIdempotent parse_separability(const json& j) {
    Algebra b = parse_algebra(j.at("B"));
    Algebra c = parse_algebra(j.at("C"));
    const std::size_t nb = b.dim(), nc = c.dim();
    Vector e(nb * nc, Scalar::zero());
    for (const auto& t : j.at("E")) {
        std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>();
        if (i >= nb || jj >= nc) throw error("separability file: E index out of range");
        e[i * nc + jj] += Scalar::parse(t[2].get<std::string>());
    }
    auto parse_matrix = [&](const json& arr, std::size_t rows, std::size_t cols,
                            const char* what) {
        Matrix m(rows, cols);
        for (const auto& t : arr) {
            std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>();
            if (i >= rows || jj >= cols)
                throw error(std::string("separability file: ") + what + " index out of range");
            m(i, jj) += Scalar::parse(t[2].get<std::string>());
        }
        return m;
    };
    Matrix sb = parse_matrix(j.at("S_B"), nc, nb, "S_B");
    Matrix sc = parse_matrix(j.at("S_C"), nb, nc, "S_C");
    auto parse_functional = [&](const json& arr, std::size_t n, const char* what) {
        Functional f = zero_vector(n);
        for (const auto& t : arr) {
            std::size_t i = t[0].get<std::size_t>();
            if (i >= n) throw error(std::string("separability file: ") + what + " index out of range");
            f[i] += Scalar::parse(t[1].get<std::string>());
        }
        return f;
    };
    Functional pb = parse_functional(j.at("phi_B"), nb, "phi_B");
    Functional pc = parse_functional(j.at("phi_C"), nc, "phi_C");
    return SeparabilityIdempotent{std::move(b), std::move(c), std::move(e),
                                  std::move(sb), std::move(sc), std::move(pb), std::move(pc)};
}

inline json serialize_separability(const SeparabilityIdempotent& s) {
    json j;
    j["kind"] = "separability";
    j["B"] = serialize_algebra(s.B);
    j["C"] = serialize_algebra(s.C);
    const std::size_t nb = s.B.dim(), nc = s.C.dim();
    json e = json::array();
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t jj = 0; jj < nc; ++jj)
            if (!s.E[i * nc + jj].is_zero()) e.push_back({i, jj, s.E[i * nc + jj].str()});
    j["E"] = e;
    auto dump_matrix = [](const Matrix& m) {
        json arr = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t jj = 0; jj < m.cols(); ++jj)
                if (!m(i, jj).is_zero()) arr.push_back({i, jj, m(i, jj).str()});
        return arr;
    };
    j["S_B"] = dump_matrix(s.S_B);
    j["S_C"] = dump_matrix(s.S_C);
    auto dump_functional = [](const Functional& f) {
        json arr = json::array();
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!f[i].is_zero()) arr.push_back({i, f[i].str()});
        return arr;
    };
    j["phi_B"] = dump_functional(s.phi_B);
    j["phi_C"] = dump_functional(s.phi_C);
    return j;
}

// ---- reports ---------------------------------------------------------------

inline json serialize_report(const Report& rep) {
    json j;
    j["title"] = rep.title;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["paper_ref"] = c.ref;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    return j;
}

// ---- file helpers ----------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(path + ": cannot open file");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error(path + ": parse error: " + e.what());
    }
    return j;
}

inline std::string detect_kind(const json& j) {
    if (j.contains("kind")) return j.at("kind").get<std::string>();
    if (j.contains("arrows")) return "groupoid";
    if (j.contains("delta")) return "wmha";
    if (j.contains("S_B")) return "separability";
    if (j.contains("consts")) return "algebra";
    throw error("cannot detect input kind (no 'kind' field and no recognizable shape)");
}

}  // namespace whkit
