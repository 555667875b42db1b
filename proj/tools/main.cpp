#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "gdrazin/errors.hpp"

using namespace gdrazin;

int main(int argc, char** argv) {
    CLI::App app{"Exact Drazin inverses and verification of closed-form formulas for sums and block matrices"};
    app.require_subcommand(1);

    std::string file, case_id;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::optional<std::size_t> n, m;
    std::optional<std::string> fixtures;

    auto* drazin = app.add_subcommand("drazin", "Drazin inverse, index and spectral idempotent of a matrix file");
    drazin->add_option("file", file, "Matrix JSON")->required();

    auto* check = app.add_subcommand("check", "Evaluate a case's hypotheses on a spec file");
    check->add_option("case", case_id, "Case id, e.g. T2.2, C3.4, T4.1")->required();
    check->add_option("file", file, "Pair, block or Schur spec JSON, or a bundle from gen")->required();

    auto* verify = app.add_subcommand("verify", "Compare closed forms with the oracle on generated instances");
    verify->add_option("case", case_id, "Case id")->required();
    verify->add_option("--count", count, "Number of instances")->capture_default_str();
    verify->add_option("--seed", seed, "First instance seed")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Print a generated instance bundle");
    gen->add_option("case", case_id, "Case id")->required();
    gen->add_option("--seed", seed, "Instance seed")->capture_default_str();
    gen->add_option("--n", n, "A-block (or pair) dimension");
    gen->add_option("--m", m, "Second block dimension");

    auto* selftest = app.add_subcommand("selftest", "Fixtures, algebra checks and a short verify run per case");
    selftest->add_option("--fixtures", fixtures, "Read the fixture files from this directory");

    CLI11_PARSE(app, argc, argv);

    try {
        cli::CommandResult result;
        if (*drazin) {
            result = cli::cmd_drazin(file);
        } else if (*check) {
            result = cli::cmd_check(case_id, file);
        } else if (*verify) {
            result = cli::cmd_verify(case_id, count, seed);
        } else if (*gen) {
            result = cli::cmd_gen(case_id, seed, n, m);
        } else {
            std::optional<std::filesystem::path> dir;
            if (fixtures) dir = *fixtures;
            result = cli::cmd_selftest(dir);
        }
        std::cout << io::dump(result.report, result.print_depth);
        return result.exit_code;
    } catch (const cli::UsageError& e) {
        std::cerr << "gdrazin: " << e.what() << "\n";
    } catch (const ParseError& e) {
        std::cerr << "gdrazin: parse error: " << e.what() << "\n";
    } catch (const DimensionError& e) {
        std::cerr << "gdrazin: rejected input: " << e.what() << "\n";
    } catch (const GeneratorExhausted& e) {
        std::cerr << "gdrazin: " << e.what() << "\n";
    }
    return cli::kExitInput;
}
