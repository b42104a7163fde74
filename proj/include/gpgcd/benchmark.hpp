#ifndef GPGCD_BENCHMARK_HPP
#define GPGCD_BENCHMARK_HPP

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gpgcd/extract.hpp"
#include "gpgcd/generator.hpp"
#include "gpgcd/solver.hpp"

namespace gpgcd {

/**
 * Aggregated benchmark statistics.  A case counts as failed when the
 * iteration does not converge within the budget (a singular-system
 * abort is folded into the same count); means cover converged cases
 * only.
 */
struct BenchReport {
    BenchConfig config;
    int fail_count = 0;
    double mean_perturbation = 0.0;
    double mean_iterations = 0.0;
    double mean_time_sec = 0.0;
};

inline BenchReport run_benchmark(const BenchConfig& config,
                                 const SolverOptions& options = SolverOptions{}) {
    validate(config);
    BenchReport report;
    report.config = config;

    double pert_sum = 0.0;
    double iter_sum = 0.0;
    double time_sum = 0.0;
    int ok = 0;

    for (int index = 0; index < config.cases; ++index) {
        const ProblemInstance problem = generate_test_case(config, index);
        const auto start = std::chrono::steady_clock::now();
        bool converged = false;
        try {
            const ApproxGcdResult result = approx_gcd(problem, options);
            converged = result.outcome.converged;
            if (converged) {
                pert_sum += result.perturbation;
                iter_sum += result.outcome.iterations;
            }
        } catch (const SingularSystemError&) {
            converged = false;
        } catch (const DegenerateCofactorError&) {
            converged = false;
        } catch (const KernelError&) {
            converged = false;
        }
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        if (converged) {
            time_sum += elapsed.count();
            ++ok;
        } else {
            ++report.fail_count;
        }
    }

    if (ok > 0) {
        report.mean_perturbation = pert_sum / ok;
        report.mean_iterations = iter_sum / ok;
        report.mean_time_sec = time_sum / ok;
    }
    return report;
}

/// Tab-delimited table row(s) with a header line: class, #Fail, mean
/// Error, mean #Iterations, mean Time.  Timing can be suppressed to get
/// a run-to-run reproducible document.
inline std::string format_report(const std::vector<BenchReport>& reports,
                                 bool include_time = true) {
    std::string out = "class\t#Fail\tError\t#Iterations";
    if (include_time) out += "\tTime(s)";
    out += '\n';
    char buf[160];
    for (const BenchReport& r : reports) {
        std::snprintf(buf, sizeof buf, "(%d,%d,%d)\t%d\t%.6e\t%.3f",
                      r.config.degree, r.config.gcd_degree, r.config.num_polys,
                      r.fail_count, r.mean_perturbation, r.mean_iterations);
        out += buf;
        if (include_time) {
            std::snprintf(buf, sizeof buf, "\t%.4f", r.mean_time_sec);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace gpgcd

#endif
