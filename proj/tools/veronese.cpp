#include "veronese/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace veronese;

namespace {

void add_common(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--n", cfg.n, "number of variables")->capture_default_str();
    app->add_option("--char", cfg.characteristic, "field characteristic, 0 or a prime")->capture_default_str();
    app->add_option("--imax", cfg.imax, "largest homological degree");
    app->add_option("--jmax", cfg.jmax, "largest internal degree");
    app->add_option("--t", cfg.t, "cycle size t")->capture_default_str();
    app->add_option("--seed", cfg.seed, "seed for random cases")->capture_default_str();
    app->add_flag("--json", cfg.json, "print the JSON report");
    app->add_option("--out", cfg.out, "write output to PATH");
    app->add_flag("--torsion", cfg.torsion, "Smith normal form over Z for torsion");
    app->add_flag("--check-cycle", cfg.check_cycle, "fail unless the element is a cycle");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Koszul homology of the second Veronese: computations and checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* betti = app.add_subcommand("betti", "homology dimensions with the self-conjugate prediction");
    add_common(betti, cfg);

    std::string which;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", which, "suite name")->required()->check(CLI::IsMember(verify_suites()));
    add_common(verify, cfg);

    std::string kind, arg;
    auto* cycle = app.add_subcommand("cycle", "print Z i, z a|b or product S");
    cycle->add_option("kind", kind, "Z, z or product")->required()->check(CLI::IsMember({"Z", "z", "product"}));
    cycle->add_option("arg", arg, "index, pair a|b or subset s1,s2,..")->required();
    add_common(cycle, cfg);

    std::string what;
    int dim = 0;
    auto* matching = app.add_subcommand("matching", "matching complex faces, boundary maps and homology");
    matching->add_option("what", what, "faces, boundary or homology")
        ->required()
        ->check(CLI::IsMember({"faces", "boundary", "homology"}));
    matching->add_option("--dim", dim, "boundary map dimension")->capture_default_str();
    add_common(matching, cfg);

    CLI11_PARSE(app, argc, argv);

    CommandResult res;
    try {
        cfg.validate();
        if (betti->parsed())
            res = cmd_betti(cfg);
        else if (verify->parsed())
            res = cmd_verify(cfg, which);
        else if (cycle->parsed())
            res = cmd_cycle(cfg, kind, arg);
        else
            res = cmd_matching(cfg, what, dim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = res.output(cfg.json);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
        f << text;
    }
    return res.exit_code;
}
