#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "whkit/duality.hpp"
#include "whkit/frobenius.hpp"
#include "whkit/groupoid_algebras.hpp"
#include "whkit/integrals.hpp"
#include "whkit/io.hpp"
#include "whkit/rng.hpp"

namespace whkit {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string format = "text";            // text | json
    std::string side = "left";              // left | right
    std::string construction = "function";  // function | convolution (groupoid inputs)
    std::string kind_override;              // skip auto-detection when set
    std::string filter;                     // keep only checks whose name contains this
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_ideals = 20;
};

struct RunResult {
    int exit_code = 0;
    json report;
    std::string first_failure;
};

inline std::string element_str(const Algebra& alg, const Vector& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + v[k].str() + ")*" + alg.basis()[k];
    }
    return out.empty() ? "0" : out;
}

/// Deterministic search for a faithful cointegral: the solver basis, its
/// sum, then seeded small combinations.
inline std::optional<Vector> find_faithful_cointegral(const WeakHopf& w,
                                                      std::uint64_t seed = kDefaultSeed) {
    auto space = cointegral_space(w, Side::left);
    if (space.dim() == 0) return std::nullopt;
    for (const auto& h : space.basis)
        if (is_faithful_cointegral(w, h)) return h;
    Vector sum = zero_vector(w.dim());
    for (const auto& h : space.basis) sum = sum + h;
    if (is_faithful_cointegral(w, sum)) return sum;
    Rng rng(seed);
    for (int tries = 0; tries < 64; ++tries) {
        Vector cand = zero_vector(w.dim());
        for (const auto& h : space.basis) add_scaled(cand, Scalar(rng.range(-3, 3)), h);
        if (!is_zero(cand) && is_left_cointegral(w, cand) && is_faithful_cointegral(w, cand))
            return cand;
    }
    return std::nullopt;
}

/// Idempotent faithful cointegral, when one is reachable by rescaling a
/// faithful one with h^2 proportional to h.
inline std::optional<Vector> find_idempotent_faithful_cointegral(const WeakHopf& w,
                                                                 std::uint64_t seed = kDefaultSeed) {
    auto h = find_faithful_cointegral(w, seed);
    if (!h) return std::nullopt;
    Vector h2 = w.algebra().product(*h, *h);
    // h^2 = c h for a scalar c?
    std::optional<Scalar> c;
    for (std::size_t k = 0; k < h->size(); ++k) {
        if ((*h)[k].is_zero()) {
            if (!h2[k].is_zero()) return std::nullopt;
            continue;
        }
        Scalar ratio = h2[k] / (*h)[k];
        if (!c)
            c = ratio;
        else if (*c != ratio)
            return std::nullopt;
    }
    if (!c || c->is_zero()) return std::nullopt;
    Vector out = *h;
    Scalar inv = c->inverse();
    for (auto& x : out) x *= inv;
    if (w.algebra().product(out, out) != out || !is_faithful_cointegral(w, out))
        return std::nullopt;
    return out;
}

namespace suites {

inline Report cointegral_suite(const WeakHopf& w, const RunConfig& cfg) {
    Report rep;
    rep.title = "cointegrals";
    const char* ref = "cointegral-equivalences";
    auto left = cointegral_space(w, Side::left);
    auto right = cointegral_space(w, Side::right);

    bool six_true = true;
    std::string wit;
    for (const auto& h : left.basis) {
        auto eq = check_equivalences(w, h);
        if (!eq.all_true()) {
            six_true = false;
            if (wit.empty()) wit = element_str(w.algebra(), h);
        }
    }
    rep.add("six equivalences all hold on the cointegral basis", ref, six_true, wit);

    {
        Rng rng(cfg.seed);
        bool six_false = true;
        std::string wit2;
        std::size_t found = 0;
        int guard = 0;
        while (found < 10 && guard++ < 1000) {
            Vector v = rng.element(w.dim());
            if (left.contains(v)) continue;
            ++found;
            auto eq = check_equivalences(w, v);
            if (eq.statements[0] || !eq.all_agree()) {
                six_false = false;
                if (wit2.empty()) wit2 = element_str(w.algebra(), v);
            }
        }
        rep.add("six equivalences all fail on seeded non-cointegrals", ref,
                six_false && (found == 10 || left.dim() == w.dim()), wit2);
    }

    {
        bool cor = true;
        for (const auto& h : left.basis)
            if (!is_zero(h) && !corollary_ys(w, h)) cor = false;
        rep.add("y h = S(y) h on A_s and A_s h = A_t h", ref, cor);
        bool rcor = true;
        for (const auto& k : right.basis)
            if (!is_zero(k) && !right_corollary_xs(w, k)) rcor = false;
        rep.add("k x = k S(x) on A_t for right cointegrals", ref, rcor);
    }

    {
        bool gmaps = true;
        Matrix gm = gamma_matrix(w);
        for (const auto& h : left.basis)
            if (!left.contains(gm.apply(h))) gmaps = false;
        rep.add("gamma maps cointegrals to cointegrals", "gamma-map", gmaps);
    }

    {
        bool ranks = true;
        for (const auto& h : left.basis)
            if (rank(f1_matrix(w, h)) != rank(f2_matrix(w, h))) ranks = false;
        rep.add("rank F1 = rank F2 on the cointegral basis", "faithful-cointegral", ranks);
    }

    rep.add("balanced tensor injectivity", "balanced-injectivity", balanced_injectivity_check(w));

    {
        auto crit = faithful_criteria(w);
        rep.add("leg criterion matches the A_s annihilator criterion", "faithful-set",
                crit.right_leg_full == crit.as_annihilator_trivial);
        rep.add("leg criterion matches the A_t annihilator criterion", "faithful-set",
                crit.left_leg_full == crit.at_annihilator_trivial);
    }

    rep.merge(uniqueness_props(w));
    return rep;
}

inline Report integral_suite(const WeakHopf& w, const RunConfig& cfg) {
    Report rep;
    rep.title = "integrals";
    const char* ref = "integral-characterization";
    bool discrete = is_discrete(w);
    if (discrete) {
        bool agree = true;
        std::string wit;
        for (std::size_t k = 0; k < w.dim(); ++k) {
            auto [direct, via] = integral_char_via_cointegrals(w, unit_vector(w.dim(), k));
            if (direct != via) {
                agree = false;
                if (wit.empty()) wit = "dual basis functional #" + std::to_string(k);
            }
        }
        rep.add("integral membership matches the cointegral criterion", ref, agree, wit);
    }
    auto h = find_faithful_cointegral(w, cfg.seed);
    if (h) {
        CanonicalIntegrals ci = existence_of_integrals(w, *h);
        rep.merge(ci.checks);
        SingleCointegralMaps maps = single_h_maps(w, *h);
        rep.merge(maps.checks);
        rep.merge(check_collection(w, *h, maps));
        rep.merge(integral_faithfulness_report(w, maps));
    }
    return rep;
}

inline Report duality_suite(const WeakHopf& w, const RunConfig& cfg, bool verify_input) {
    Report rep;
    rep.title = "duality";
    DualPair pair = dual_weak_hopf(w, verify_input);
    rep.merge(pair.checks);
    rep.add("double dual equals the original", "dual-construction", double_dual_is_identity(w));
    {
        bool ok = true;
        std::string wit;
        for (const auto& h : cointegral_space(w, Side::left).basis) {
            if (is_zero(h)) continue;
            try {
                transfer_cointegral(w, pair.dual, h);
            } catch (const error& e) {
                ok = false;
                if (wit.empty()) wit = e.what();
            }
        }
        rep.add("cointegrals transfer to left integrals on the dual", "cointegral-transfer", ok,
                wit);
    }
    rep.add("dual cointegral space dimension = left integral space dimension",
            "cointegral-transfer",
            cointegral_space(pair.dual, Side::left).dim() == integral_space(w, Side::left).dim());
    rep.merge(compact_implies_dual_discrete(w, pair.dual));
    if (auto h = find_faithful_cointegral(w, cfg.seed))
        rep.merge(single_faithful_implies_dual_compact(w, pair.dual, *h, cfg.seed));
    return rep;
}

inline Report frobenius_suite(const WeakHopf& w, const RunConfig& cfg) {
    Report rep;
    rep.title = "Frobenius / quasi-Frobenius / separability";
    auto h = find_faithful_cointegral(w, cfg.seed);
    if (h) {
        FrobeniusMap fm = frobenius_map(w, *h);
        rep.merge(fm.checks);
        {
            bool ok = true;
            std::vector<std::vector<Vector>> ideals;
            // Ker eps is a left ideal only in special cases; include it
            // when it is one
            auto ker_eps = kernel_basis(Matrix::from_rows({w.counit()}));
            if (is_left_ideal(w.algebra(), ker_eps)) ideals.push_back(ker_eps);
            ideals.push_back({});  // zero ideal
            for (std::size_t k = 0; k < w.dim(); ++k)
                ideals.push_back(principal_left_ideal(w.algebra(), unit_vector(w.dim(), k)));
            for (const auto& ideal : ideals)
                if (!iperp_equals_rI(w, fm.F, ideal)) ok = false;
            rep.add("F(I-perp) = r(I) on the tested ideal family", "annihilator-duality", ok);
            bool nonzero = true;
            for (const auto& ideal : ideals) {
                if (span_dim(ideal) == w.dim()) continue;  // proper ideals only
                if (right_annihilator(w.algebra(), ideal).empty()) nonzero = false;
            }
            rep.add("proper principal left ideals have nonzero right annihilators",
                    "annihilator-duality", nonzero);
        }
    }
    rep.merge(is_quasi_frobenius(w.algebra(), cfg.seed, cfg.random_ideals));
    {
        bool ok = true;
        std::string note;
        try {
            auto c = counit_kernel_cointegral(w);
            note = c ? "cointegral found: " + element_str(w.algebra(), *c)
                     : "r(Ker eps) = 0";
        } catch (const error& e) {
            ok = false;
            note = e.what();
        }
        rep.add("elements of r(Ker eps) are cointegrals", "counit-kernel", ok, ok ? "" : note);
    }
    {
        FrobeniusConverse fc = frobenius_converse(w, cfg.seed);
        rep.merge(fc.checks);
    }
    if (auto hi = find_idempotent_faithful_cointegral(w, cfg.seed)) {
        SeparabilityIdempotent s = delta_h_separability(w, *hi);
        rep.merge(check_separability(s));
    }
    return rep;
}

}  // namespace suites

namespace detail {

struct LoadedInput {
    std::string kind;
    std::optional<Groupoid> groupoid;
    std::optional<Algebra> algebra;
    std::optional<WeakHopf> wmha;
    std::optional<SeparabilityIdempotent> separability;
};

inline LoadedInput load_input(const RunConfig& cfg) {
    json j = load_json_file(cfg.input_path);
    LoadedInput in;
    in.kind = cfg.kind_override.empty() ? detect_kind(j) : cfg.kind_override;
    try {
        if (in.kind == "groupoid")
            in.groupoid = parse_groupoid(j);
        else if (in.kind == "algebra")
            in.algebra = parse_algebra(j);
        else if (in.kind == "wmha")
            in.wmha = parse_weak_hopf(j);
        else if (in.kind == "separability")
            in.separability = parse_separability(j);
        else
            throw error("unknown input kind '" + in.kind + "'");
    } catch (const std::exception& e) {
        throw error(cfg.input_path + ": " + e.what());
    }
    return in;
}

/// All commands except the raw-algebra paths operate on a WeakHopf.
inline WeakHopf to_weak_hopf(const LoadedInput& in, const RunConfig& cfg) {
    if (in.wmha) return *in.wmha;
    if (in.groupoid) {
        if (cfg.construction == "function") return function_algebra(*in.groupoid);
        if (cfg.construction == "convolution") return groupoid_algebra(*in.groupoid);
        throw error("unknown construction '" + cfg.construction +
                    "' (expected function|convolution)");
    }
    if (in.separability) return wmha_from_separability(*in.separability);
    throw error("a bare algebra file carries no coalgebra data; provide a groupoid, "
                "wmha bundle or separability bundle");
}

}  // namespace detail

inline RunResult run_command(const RunConfig& cfg) {
    RunResult res;
    json& out = res.report;
    out["command"] = cfg.command;
    out["input"] = cfg.input_path;
    out["seed"] = cfg.seed;

    auto in = detail::load_input(cfg);
    out["input_kind"] = in.kind;
    std::vector<Report> reports;

    if (cfg.command == "build") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        out["bundle"] = serialize_weak_hopf(w);
    } else if (cfg.command == "verify") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        reports.push_back(verify_axioms(w));
    } else if (cfg.command == "cointegrals") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        Side side = cfg.side == "right" ? Side::right : Side::left;
        auto space = cointegral_space(w, side);
        out["side"] = cfg.side;
        out["dimension"] = space.dim();
        json basis = json::array();
        for (const auto& h : space.basis) basis.push_back(element_str(w.algebra(), h));
        out["basis"] = basis;
        reports.push_back(suites::cointegral_suite(w, cfg));
    } else if (cfg.command == "integrals") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        Side side = cfg.side == "right" ? Side::right : Side::left;
        auto space = integral_space(w, side);
        out["side"] = cfg.side;
        out["dimension"] = space.dim();
        auto [lf, rf] = integral_set_faithfulness(w, space.basis);
        out["left_faithful"] = lf;
        out["right_faithful"] = rf;
        reports.push_back(suites::integral_suite(w, cfg));
    } else if (cfg.command == "classify") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        Classification c = classify(w);
        out["compact"] = c.compact;
        out["discrete"] = c.discrete;
        out["note"] = c.note;
    } else if (cfg.command == "dual") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        DualPair pair = dual_weak_hopf(w, true);
        out["bundle"] = serialize_weak_hopf(pair.dual);
        reports.push_back(pair.checks);
    } else if (cfg.command == "frobenius") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        reports.push_back(suites::frobenius_suite(w, cfg));
    } else if (cfg.command == "check-all") {
        WeakHopf w = detail::to_weak_hopf(in, cfg);
        Report axioms = verify_axioms(w);
        reports.push_back(axioms);
        if (axioms.all_pass()) {
            reports.push_back(suites::cointegral_suite(w, cfg));
            reports.push_back(suites::integral_suite(w, cfg));
            reports.push_back(suites::duality_suite(w, cfg, false));
            reports.push_back(suites::frobenius_suite(w, cfg));
            Classification c = classify(w);
            out["compact"] = c.compact;
            out["discrete"] = c.discrete;
        }
    } else {
        throw error("unknown command '" + cfg.command + "'");
    }

    if (!cfg.filter.empty()) {
        for (auto& r : reports) {
            std::vector<CheckResult> kept;
            for (auto& c : r.checks)
                if (c.name.find(cfg.filter) != std::string::npos) kept.push_back(c);
            r.checks = std::move(kept);
        }
        out["filter"] = cfg.filter;
    }
    json jreports = json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        jreports.push_back(serialize_report(r));
        if (!r.all_pass()) {
            all_pass = false;
            if (res.first_failure.empty()) res.first_failure = r.first_failure()->name;
        }
    }
    out["reports"] = jreports;
    out["all_pass"] = all_pass;
    res.exit_code = all_pass ? 0 : 1;
    return res;
}

inline std::string render_text(const json& report) {
    std::ostringstream os;
    os << "== " << report.at("command").get<std::string>() << " "
       << report.at("input").get<std::string>() << " (kind: "
       << report.at("input_kind").get<std::string>() << ", seed "
       << report.at("seed").get<std::uint64_t>() << ")\n";
    for (const char* key : {"side", "dimension", "compact", "discrete", "left_faithful",
                            "right_faithful", "note"})
        if (report.contains(key)) os << "   " << key << ": " << report.at(key).dump() << "\n";
    if (report.contains("basis"))
        for (const auto& b : report.at("basis")) os << "   basis: " << b.get<std::string>() << "\n";
    if (report.contains("reports"))
        for (const auto& r : report.at("reports")) {
            os << "-- " << r.at("title").get<std::string>() << "\n";
            for (const auto& c : r.at("checks")) {
                os << (c.at("pass").get<bool>() ? "  [PASS] " : "  [FAIL] ")
                   << c.at("name").get<std::string>();
                if (c.contains("witness"))
                    os << "  -- " << c.at("witness").get<std::string>();
                os << "\n";
            }
        }
    if (report.contains("bundle")) os << report.at("bundle").dump(2) << "\n";
    if (report.contains("all_pass"))
        os << (report.at("all_pass").get<bool>() ? "ALL CHECKS PASSED\n" : "FAILURES PRESENT\n");
    return os.str();
}

}  // namespace whkit
