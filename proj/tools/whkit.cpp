// whkit command line: build weak Hopf algebras from groupoid or bundle
// files and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "whkit/whkit.hpp"

namespace {

std::uint64_t env_seed() {
    if (const char* s = std::getenv("WHKIT_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            std::cerr << "warning: ignoring malformed WHKIT_SEED\n";
        }
    }
    return whkit::kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"whkit: finite weak Hopf algebras, cointegrals and integrals"};
    app.require_subcommand(1);

    whkit::RunConfig cfg;
    cfg.seed = env_seed();
    std::string output_path;
    bool seed_given = false;
    std::uint64_t seed_flag = 0;

    app.add_option("--format", cfg.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output_path, "write the report to a file instead of stdout");
    app.add_option("--construction", cfg.construction,
                   "weak Hopf structure for groupoid inputs: function|convolution")
        ->check(CLI::IsMember({"function", "convolution"}));
    app.add_option("--kind", cfg.kind_override,
                   "override input-kind auto-detection")
        ->check(CLI::IsMember({"groupoid", "algebra", "wmha", "separability"}));
    app.add_option("--filter", cfg.filter, "keep only checks whose name contains this text");
    auto* seed_opt = app.add_option("--seed", seed_flag, "seed for the randomized families");

    const char* names[] = {"build",    "verify", "cointegrals", "integrals",
                           "classify", "dual",   "frobenius",   "check-all"};
    const char* descs[] = {"construct and emit a weak Hopf bundle",
                           "run the full axiom suite",
                           "cointegral space and its property suite",
                           "integral space and its property suite",
                           "compact/discrete classification",
                           "emit the dual bundle and duality reports",
                           "Frobenius, quasi-Frobenius and separability suites",
                           "every suite in dependency order"};
    for (int k = 0; k < 8; ++k) {
        CLI::App* sub = app.add_subcommand(names[k], descs[k]);
        sub->fallthrough();
        sub->add_option("input", cfg.input_path, "input file (groupoid, algebra, wmha or "
                                                 "separability JSON)")
            ->required();
        std::string name = names[k];
        if (name == "cointegrals" || name == "integrals")
            sub->add_option("--side", cfg.side, "left|right")
                ->check(CLI::IsMember({"left", "right"}));
        if (name == "frobenius")
            sub->add_option("--random-ideals", cfg.random_ideals,
                            "number of seeded random ideal generators");
        sub->callback([&cfg, name]() { cfg.command = name; });
    }

    CLI11_PARSE(app, argc, argv);
    seed_given = seed_opt->count() > 0;
    if (seed_given) cfg.seed = seed_flag;

    try {
        whkit::RunResult res = whkit::run_command(cfg);
        std::string rendered = cfg.format == "json" ? res.report.dump(2) + "\n"
                                                    : whkit::render_text(res.report);
        if (output_path.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(output_path);
            if (!out) {
                std::cerr << "error: cannot write " << output_path << "\n";
                return 2;
            }
            out << rendered;
        }
        if (res.exit_code != 0)
            std::cerr << "first failing check: " << res.first_failure << "\n";
        return res.exit_code;
    } catch (const whkit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
