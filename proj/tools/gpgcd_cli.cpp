// Command-line front end: solve one instance, run seeded benchmark
// sweeps, scan for the exact GCD degree, or emit generated instances.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpgcd/gpgcd.hpp"

namespace {

// Exit codes: 0 success/converged, 1 other runtime failure,
// 2 parse or validation error, 3 non-convergence, 4 singular system.
constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitSingular = 4;

struct SolveArgs {
    std::string input;
    std::string output;
    double epsilon = -1.0;  // negative: keep the file/default value
    int max_iter = -1;
    bool monic = false;
};

void scale_to_monic(gpgcd::ApproxGcdResult& result) {
    const double lead = result.gcd.leading();
    std::vector<double> h = result.gcd.coeffs();
    for (double& c : h) c /= lead;
    result.gcd = gpgcd::Poly(std::move(h));
    for (gpgcd::Poly& v : result.cofactors) {
        std::vector<double> c = v.coeffs();
        for (double& x : c) x *= lead;
        v = gpgcd::Poly(std::move(c));
    }
}

int run_solve(const SolveArgs& args) {
    gpgcd::ProblemFile file = gpgcd::parse_input(args.input);
    if (args.epsilon > 0.0) file.options.epsilon = args.epsilon;
    if (args.max_iter > 0) file.options.max_iterations = args.max_iter;
    const gpgcd::ProblemInstance problem = file.instance();

    gpgcd::ApproxGcdResult result = gpgcd::approx_gcd(problem, file.options);
    if (result.outcome.converged && args.monic) scale_to_monic(result);

    if (args.output.empty()) {
        std::cout << gpgcd::result_to_json(result).dump(2) << '\n';
    } else {
        gpgcd::write_output(result, args.output);
    }
    if (!result.outcome.converged) {
        std::cerr << "gpgcd: no convergence within " << file.options.max_iterations
                  << " iterations (last step norm "
                  << (result.outcome.trace.empty() ? 0.0
                                                   : result.outcome.trace.back().step_norm)
                  << ")\n";
        return kExitNoConvergence;
    }
    return kExitOk;
}

int run_bench(const gpgcd::BenchConfig& config, const gpgcd::SolverOptions& options,
              bool no_time, const std::string& output) {
    const gpgcd::BenchReport report = gpgcd::run_benchmark(config, options);
    const std::string table = gpgcd::format_report({report}, !no_time);
    if (output.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        out << table;
    }
    return kExitOk;
}

int run_estimate(const std::string& input, double rank_tol) {
    const gpgcd::ProblemFile file = gpgcd::parse_input(input);
    for (const gpgcd::Poly& p : file.polynomials)
        if (p.leading() == 0.0)
            throw gpgcd::ParseError("problem file: leading coefficient is zero");
    if (file.polynomials.size() < 2)
        throw gpgcd::ParseError("problem file: need at least two polynomials");
    std::cout << gpgcd::gcd_degree_estimate(file.polynomials, rank_tol) << '\n';
    return kExitOk;
}

int run_generate(const gpgcd::BenchConfig& config, const std::string& prefix) {
    for (int index = 0; index < config.cases; ++index) {
        const gpgcd::ProblemInstance problem = gpgcd::generate_test_case(config, index);
        const nlohmann::json j = gpgcd::problem_to_json(problem);
        if (prefix.empty()) {
            std::cout << j.dump(2) << '\n';
        } else {
            char name[32];
            std::snprintf(name, sizeof name, "%03d.json", index);
            const std::string path = prefix + name;
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            out << j.dump(2) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate GCD of multiple real univariate polynomials"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "Compute the approximate GCD for one problem file");
    solve->add_option("input", solve_args.input, "Problem file (JSON)")->required();
    solve->add_option("--output", solve_args.output, "Result file (default: stdout)");
    solve->add_option("--epsilon", solve_args.epsilon, "Step-norm stopping threshold");
    solve->add_option("--max-iter", solve_args.max_iter, "Iteration budget");
    solve->add_flag("--monic-gcd", solve_args.monic,
                    "Rescale the GCD to be monic (cofactors absorb the scale)");

    gpgcd::BenchConfig bench_config;
    gpgcd::SolverOptions bench_options;
    bool bench_no_time = false;
    std::string bench_output;
    CLI::App* bench = app.add_subcommand("bench", "Run a seeded benchmark class");
    bench->add_option("-m,--degree", bench_config.degree, "Degree of each input polynomial");
    bench->add_option("-d,--gcd-degree", bench_config.gcd_degree, "Target GCD degree");
    bench->add_option("-n,--num-polys", bench_config.num_polys, "Number of polynomials");
    bench->add_option("--cases", bench_config.cases, "Number of random cases");
    bench->add_option("--noise", bench_config.noise, "Noise 2-norm per polynomial");
    bench->add_option("--seed", bench_config.seed, "RNG seed");
    bench->add_option("--epsilon", bench_options.epsilon, "Step-norm stopping threshold");
    bench->add_option("--max-iter", bench_options.max_iterations, "Iteration budget");
    bench->add_flag("--no-time", bench_no_time,
                    "Omit the timing column (reproducible output)");
    bench->add_option("--output", bench_output, "Write the table to a file");

    std::string estimate_input;
    double rank_tol = 1e-10;
    CLI::App* estimate = app.add_subcommand(
        "estimate-degree", "Exact-input GCD degree via subresultant rank scan");
    estimate->add_option("input", estimate_input, "Problem file (JSON)")->required();
    estimate->add_option("--rank-tol", rank_tol, "Relative singular-value threshold");

    gpgcd::BenchConfig gen_config;
    std::string gen_prefix;
    CLI::App* generate = app.add_subcommand("generate", "Emit random problem instances");
    generate->add_option("-m,--degree", gen_config.degree, "Degree of each input polynomial");
    generate->add_option("-d,--gcd-degree", gen_config.gcd_degree, "Planted GCD degree");
    generate->add_option("-n,--num-polys", gen_config.num_polys, "Number of polynomials");
    generate->add_option("--cases", gen_config.cases, "Number of instances");
    generate->add_option("--noise", gen_config.noise, "Noise 2-norm per polynomial");
    generate->add_option("--seed", gen_config.seed, "RNG seed");
    generate->add_option("--output", gen_prefix,
                         "Filename prefix; writes <prefix><index>.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (bench->parsed()) return run_bench(bench_config, bench_options,
                                              bench_no_time, bench_output);
        if (estimate->parsed()) return run_estimate(estimate_input, rank_tol);
        if (generate->parsed()) return run_generate(gen_config, gen_prefix);
    } catch (const gpgcd::ParseError& e) {
        std::cerr << "gpgcd: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gpgcd: " << e.what() << '\n';
        return kExitParse;
    } catch (const gpgcd::SingularSystemError& e) {
        std::cerr << "gpgcd: " << e.what() << '\n';
        return kExitSingular;
    } catch (const std::exception& e) {
        std::cerr << "gpgcd: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
