#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli.hpp"

namespace {

// Registers the shared option set on a subcommand; every flag writes straight
// into the RunConfig.
void add_common_options(CLI::App* cmd, kirchcert::cli::RunConfig& config) {
    cmd->add_option("--graph", [&config](const std::vector<std::string>& v) {
        config.graph_name = v.front();
        return true;
    }, "builtin graph name (K2..K9)")->expected(1);
    cmd->add_option("--file", [&config](const std::vector<std::string>& v) {
        config.file_path = v.front();
        return true;
    }, "graph file path")->expected(1);
    cmd->add_option("--poly", [&config](const std::vector<std::string>& v) {
        config.poly_text = v.front();
        return true;
    }, "inline polynomial, e.g. \"x1 x2 + x2 x3\"")->expected(1);
    cmd->add_option("--point", [&config](const std::vector<std::string>& v) {
        config.point_text = v.front();
        return true;
    }, "comma-separated rationals, e.g. 1,3/7,2")->expected(1);
    cmd->add_option("--s", [&config](const std::vector<std::string>& v) {
        config.s_text = v.front();
        return true;
    }, "rational parameter s")->expected(1);
    cmd->add_option("--r", [&config](const std::vector<std::string>& v) {
        config.r = std::stoi(v.front());
        return true;
    }, "complete-graph parameter r")->expected(1);
    cmd->add_option("--mode", [&config](const std::vector<std::string>& v) {
        config.mode = v.front();
        return true;
    }, "command-specific mode")->expected(1);
    cmd->add_option("--seed", config.seed, "random seed (default 0)");
    cmd->add_option("--trials", config.trials, "trial count for sampled checks (default 20)");
    cmd->add_option("--format", [&config](const std::vector<std::string>& v) {
        if (v.front() == "json") config.format = kirchcert::cli::OutputFormat::Json;
        else if (v.front() == "text") config.format = kirchcert::cli::OutputFormat::Text;
        else throw CLI::ValidationError("--format", "expected text or json");
        return true;
    }, "output format: text (default) or json")->expected(1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of spanning-tree polynomial positivity claims"};
    app.require_subcommand(1);
    kirchcert::cli::RunConfig config;

    struct CommandSpec {
        const char* name;
        const char* help;
    };
    const CommandSpec commands[] = {
        {"kirchhoff", "spanning tree polynomial by both routes, checked for equality"},
        {"trees", "spanning tree count (--mode list for the full listing)"},
        {"logconcavity", "log-concavity verdict at a point (--mode plain|strict|homogeneous|strict-homogeneous)"},
        {"hessian-identity", "complete-graph Hessian determinant law (--r, --mode symbolic|evaluation)"},
        {"slp", "degree-one Lefschetz report at a point"},
        {"hodge-riemann", "degree-one Hodge-Riemann relation at a point"},
        {"euler", "symbolic Euler identities for the input polynomial"},
        {"identity1", "determinant connection between the concavity form and the Hessian"},
        {"cayley", "spanning tree count of a complete graph against the closed form"},
        {"sweep", "corpus property suites (positional: suite name or 'all')"},
    };
    for (const CommandSpec& spec : commands) {
        CLI::App* cmd = app.add_subcommand(spec.name, spec.help);
        add_common_options(cmd, config);
        if (std::string(spec.name) == "sweep") {
            cmd->add_option("name", config.sweep_name,
                            "suite: signature, strict-homogeneous, degeneracy, agv, interlacing, "
                            "sylvester, equivalence, restriction, scaling, or all");
            cmd->add_option("--max-vertices", config.max_vertices,
                            "corpus bound for graph-driven suites (default 5)");
            cmd->add_option("--points", config.points_per_graph,
                            "points per graph in the sweeps (default 5)");
        }
        cmd->callback([&config, spec]() { config.command = spec.name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return kirchcert::cli::run(config, std::cout, std::cerr);
}
