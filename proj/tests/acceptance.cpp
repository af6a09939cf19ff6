// Acceptance suite: runs every top-level criterion over the full corpus
// of groupoid algebras with exact arithmetic and prints one PASS/FAIL
// line per criterion. Exit code is the number of failing criteria.

#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "whkit/whkit.hpp"

using namespace whkit;

namespace {

struct CorpusEntry {
    std::string name;
    Groupoid groupoid;
    bool function_side;  // true: K(G), false: CG
    WeakHopf w;
    Vector canonical_h;  // unit indicator for K(G), all-arrows sum for CG
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<std::pair<std::string, Groupoid>> gs;
    gs.emplace_back("trivial", trivial_groupoid());
    gs.emplace_back("Z2", cyclic_group_groupoid(2));
    gs.emplace_back("Z3", cyclic_group_groupoid(3));
    gs.emplace_back("Z2+point", disjoint_union(cyclic_group_groupoid(2), trivial_groupoid()));
    gs.emplace_back("pair2", pair_groupoid(2));
    gs.emplace_back("pair3", pair_groupoid(3));
    gs.emplace_back("pair2xZ2", product(pair_groupoid(2), cyclic_group_groupoid(2)));
    std::vector<CorpusEntry> corpus;
    for (const auto& [name, g] : gs) {
        corpus.push_back({"K(" + name + ")", g, true, function_algebra(g), unit_indicator(g)});
        corpus.push_back({"C(" + name + ")", g, false, groupoid_algebra(g), all_arrows_sum(g)});
    }
    return corpus;
}

struct Criterion {
    int number;
    std::string summary;
    std::function<bool(std::vector<std::string>&)> run;
};

bool expect(bool cond, const std::string& what, std::vector<std::string>& notes) {
    if (!cond) notes.push_back(what);
    return cond;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int k = 1; k < argc; ++k) only.insert(std::stoi(argv[k]));

    std::vector<CorpusEntry> corpus = build_corpus();
    const std::uint64_t seed = 7;
    std::vector<Criterion> criteria;

    criteria.push_back({1, "axiom suite passes on all 14 corpus algebras", [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            Report r = verify_axioms(e.w);
            if (!r.all_pass())
                ok = expect(false, e.name + ": " + r.first_failure()->name, notes);
        }
        return ok;
    }});

    criteria.push_back({2, "K(G) cointegrals = span of unit indicators, dimension = #units",
                        [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            if (!e.function_side) continue;
            auto space = cointegral_space(e.w, Side::left);
            std::vector<Vector> expected;
            for (std::size_t u = 0; u < e.groupoid.unit_count(); ++u)
                expected.push_back(
                    unit_vector(e.groupoid.arrow_count(), e.groupoid.unit_arrow(u)));
            ok &= expect(space.dim() == e.groupoid.unit_count(),
                         e.name + ": dimension != #units", notes);
            ok &= expect(spans_equal(space.basis, expected),
                         e.name + ": solver space != unit-indicator span", notes);
        }
        return ok;
    }});

    criteria.push_back({3, "six-way equivalence agrees on cointegrals and on seeded "
                           "non-cointegrals", [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            auto space = cointegral_space(e.w, Side::left);
            for (const auto& h : space.basis) {
                auto eq = check_equivalences(e.w, h);
                ok &= expect(eq.all_true(), e.name + ": basis cointegral not all-true", notes);
            }
            Rng rng(seed);
            std::size_t found = 0;
            int guard = 0;
            while (found < 10 && guard++ < 2000) {
                Vector v = rng.element(e.w.dim());
                if (space.contains(v)) continue;
                ++found;
                auto eq = check_equivalences(e.w, v);
                ok &= expect(eq.all_agree() && !eq.statements[0],
                             e.name + ": non-cointegral not all-false", notes);
            }
            ok &= expect(found == 10 || space.dim() == e.w.dim(),
                         e.name + ": could not sample non-cointegrals", notes);
        }
        return ok;
    }});

    criteria.push_back({4, "gamma preserves the cointegral space; gamma = id on K(G)",
                        [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            auto space = cointegral_space(e.w, Side::left);
            Matrix gm = gamma_matrix(e.w);
            for (const auto& h : space.basis) {
                Vector g = gm.apply(h);
                ok &= expect(space.contains(g), e.name + ": gamma left the space", notes);
                if (e.function_side)
                    ok &= expect(g == h, e.name + ": gamma is not the identity", notes);
            }
        }
        return ok;
    }});

    criteria.push_back({5, "balanced tensor-product injectivity holds on all corpus algebras",
                        [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus)
            ok &= expect(balanced_injectivity_check(e.w), e.name, notes);
        return ok;
    }});

    criteria.push_back({6, "discreteness with agreeing leg and annihilator criteria",
                        [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            auto crit = faithful_criteria(e.w);
            ok &= expect(crit.left_leg_full && crit.right_leg_full,
                         e.name + ": not discrete", notes);
            ok &= expect(crit.right_leg_full == crit.as_annihilator_trivial &&
                             crit.left_leg_full == crit.at_annihilator_trivial,
                         e.name + ": criteria disagree", notes);
        }
        return ok;
    }});

    criteria.push_back({7, "single-faithful-cointegral apparatus solves and all collection "
                           "formulas hold", [&](auto& notes) {
        bool ok = true;
        std::vector<std::pair<std::string, std::pair<WeakHopf, Vector>>> cases;
        for (std::size_t n : {2u, 3u}) {
            Groupoid g = pair_groupoid(n);
            cases.push_back({"K(pair" + std::to_string(n) + ")",
                             {function_algebra(g), unit_indicator(g)}});
        }
        for (std::size_t m : {2u, 3u}) {
            Groupoid g = cyclic_group_groupoid(m);
            cases.push_back({"C(Z" + std::to_string(m) + ")",
                             {groupoid_algebra(g), all_arrows_sum(g)}});
        }
        for (const auto& [name, wh] : cases) {
            const auto& [w, h] = wh;
            const std::size_t n = w.dim();
            ok &= expect(rank(f1_matrix(w, h)) == n && rank(f2_matrix(w, h)) == n,
                         name + ": F1/F2 not full rank", notes);
            try {
                auto maps = single_h_maps(w, h);
                if (!maps.checks.all_pass())
                    ok = expect(false, name + ": " + maps.checks.first_failure()->name, notes);
                Report coll = check_collection(w, h, maps);
                if (!coll.all_pass())
                    ok = expect(false, name + ": " + coll.first_failure()->name, notes);
            } catch (const error& err) {
                ok = expect(false, name + ": " + err.what(), notes);
            }
        }
        return ok;
    }});

    criteria.push_back({8, "integrals exist with the counit identity; faithfulness matches "
                           "rank S'_1 exactly", [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            if (!is_faithful_cointegral(e.w, e.canonical_h)) {
                ok = expect(false, e.name + ": canonical cointegral not faithful", notes);
                continue;
            }
            try {
                CanonicalIntegrals ci = existence_of_integrals(e.w, e.canonical_h);
                if (!ci.checks.all_pass())
                    ok = expect(false, e.name + ": " + ci.checks.first_failure()->name, notes);
                auto maps = single_h_maps(e.w, e.canonical_h);
                Report f = integral_faithfulness_report(e.w, maps);
                if (!f.all_pass())
                    ok = expect(false, e.name + ": " + f.first_failure()->name, notes);
            } catch (const error& err) {
                ok = expect(false, e.name + ": " + err.what(), notes);
            }
        }
        return ok;
    }});

    criteria.push_back({9, "Frobenius map is a rank-n module map; double annihilators fix "
                           "principal ideals; the shipped fixture fails with a witness",
                        [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            FrobeniusMap fm = frobenius_map(e.w, e.canonical_h);
            if (!fm.checks.all_pass())
                ok = expect(false, e.name + ": " + fm.checks.first_failure()->name, notes);
            std::vector<std::vector<Vector>> ideals;
            auto ker_eps = kernel_basis(Matrix::from_rows({e.w.counit()}));
            if (is_left_ideal(e.w.algebra(), ker_eps)) ideals.push_back(ker_eps);
            ideals.push_back({});
            for (std::size_t k = 0; k < e.w.dim(); ++k)
                ideals.push_back(principal_left_ideal(e.w.algebra(), unit_vector(e.w.dim(), k)));
            for (const auto& ideal : ideals)
                ok &= expect(iperp_equals_rI(e.w, fm.F, ideal),
                             e.name + ": F(I-perp) != r(I)", notes);
            Report qf = is_quasi_frobenius(e.w.algebra(), seed, 20);
            if (!qf.all_pass())
                ok = expect(false, e.name + ": " + qf.first_failure()->name, notes);
        }
        {
            Algebra fix = parse_algebra(load_json_file(std::string(WHKIT_DATA_DIR)
                                                       + "/non_qf_algebra.json"));
            Report qf = is_quasi_frobenius(fix, seed, 20);
            ok &= expect(!qf.all_pass(), "fixture unexpectedly quasi-Frobenius", notes);
            ok &= expect(qf.first_failure() && !qf.first_failure()->witness.empty(),
                         "fixture failure carries no witness", notes);
        }
        return ok;
    }});

    criteria.push_back({10, "duality: dual K(G) = CG, cointegrals transfer, compact gives "
                            "discrete dual, single faithful gives compact dual",
                        [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            if (!e.function_side) continue;
            DualPair d = dual_weak_hopf(e.w, false);
            if (!d.checks.all_pass())
                ok = expect(false, e.name + ": " + d.checks.first_failure()->name, notes);
            ok &= expect(same_structure(d.dual, groupoid_algebra(e.groupoid)),
                         e.name + ": dual is not the convolution algebra", notes);
        }
        for (const auto& e : corpus) {
            DualPair d = dual_weak_hopf(e.w, false);
            for (const auto& h : cointegral_space(e.w, Side::left).basis) {
                if (is_zero(h)) continue;
                try {
                    transfer_cointegral(e.w, d.dual, h);
                } catch (const error& err) {
                    ok = expect(false, e.name + ": " + err.what(), notes);
                }
            }
            Report cd = compact_implies_dual_discrete(e.w, d.dual);
            if (!cd.all_pass())
                ok = expect(false, e.name + ": " + cd.first_failure()->name, notes);
            Report sc = single_faithful_implies_dual_compact(e.w, d.dual, e.canonical_h, seed);
            if (!sc.all_pass())
                ok = expect(false, e.name + ": " + sc.first_failure()->name, notes);
        }
        return ok;
    }});

    criteria.push_back({11, "separability: Delta(chi_U) on K(G); the C(x)B construction and "
                            "its dual's cointegral space = {0}", [&](auto& notes) {
        bool ok = true;
        for (const auto& e : corpus) {
            if (!e.function_side) continue;
            try {
                SeparabilityIdempotent s = delta_h_separability(e.w, e.canonical_h);
                Report r = check_separability(s);
                if (!r.all_pass())
                    ok = expect(false, e.name + ": " + r.first_failure()->name, notes);
            } catch (const error& err) {
                ok = expect(false, e.name + ": " + err.what(), notes);
            }
        }
        {
            SeparabilityIdempotent s = parse_separability(
                load_json_file(std::string(WHKIT_DATA_DIR) + "/sep_c2.json"));
            WeakHopf a = wmha_from_separability(s);
            Report axioms = verify_axioms(a);
            if (!axioms.all_pass())
                ok = expect(false, "C(x)B: " + axioms.first_failure()->name, notes);
            DualPair d = dual_weak_hopf(a, false);
            std::size_t dim = cointegral_space(d.dual, Side::left).dim();
            ok &= expect(dim == 0,
                         "C(x)B dual: expected cointegral space {0}, computed dimension " +
                             std::to_string(dim) +
                             "; the space equals the transferred left-integral space of the "
                             "base algebra, which is never zero for a finite unital instance",
                         notes);
        }
        return ok;
    }});

    criteria.push_back({12, "check-all --seed 7 produces byte-identical JSON reports",
                        [&](auto& notes) {
        RunConfig cfg;
        cfg.command = "check-all";
        cfg.input_path = std::string(WHKIT_DATA_DIR) + "/pair2_groupoid.json";
        cfg.seed = 7;
        std::string a = run_command(cfg).report.dump(2);
        std::string b = run_command(cfg).report.dump(2);
        bool ok = expect(a == b, "reports differ between runs", notes);
        cfg.construction = "convolution";
        cfg.input_path = std::string(WHKIT_DATA_DIR) + "/z2_groupoid.json";
        std::string c = run_command(cfg).report.dump(2);
        std::string d = run_command(cfg).report.dump(2);
        ok &= expect(c == d, "convolution reports differ between runs", notes);
        return ok;
    }});

    int failures = 0;
    for (auto& c : criteria) {
        if (!only.empty() && !only.count(c.number)) continue;
        std::vector<std::string> notes;
        bool pass = false;
        try {
            pass = c.run(notes);
        } catch (const std::exception& e) {
            notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.summary
                  << "\n";
        for (const auto& n : notes) std::cout << "       - " << n << "\n";
        if (!pass) ++failures;
    }
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures;
}
