#ifndef GPGCD_EXTRACT_HPP
#define GPGCD_EXTRACT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gpgcd/numeric_kernel.hpp"
#include "gpgcd/polynomial.hpp"
#include "gpgcd/solver.hpp"

namespace gpgcd {

/// A converged iterate produced a cofactor that is numerically zero, so
/// no GCD candidate can be divided out of it.
struct DegenerateCofactorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApproxGcdResult {
    Poly gcd;                                 // degree d
    std::vector<Poly> cofactors;              // V_i, degree d_i - d
    std::vector<Poly> corrected;              // P~_i = gcd * V_i
    double perturbation = 0.0;                // sum ||P~_i - P_i||_2^2
    std::vector<double> residual_per_candidate;
    SolverOutcome outcome;
};

/**
 * Fix one sign convention across the cofactors: the iteration satisfies
 * U_1 P~_i + U_i P~_1 = 0, so P~_1 / U_1 = -P~_i / U_i.  Returning
 * V_1 = U_1 and V_i = -U_i (i >= 2) makes P~_i ~ H V_i hold for all i.
 */
inline std::vector<Poly> normalize_cofactors(const std::vector<Poly>& u_polys) {
    std::vector<Poly> v;
    v.reserve(u_polys.size());
    for (std::size_t i = 0; i < u_polys.size(); ++i) {
        if (std::sqrt(norm2_sq(u_polys[i])) <= 1e-12)
            throw DegenerateCofactorError("normalize_cofactors: cofactor is numerically zero");
        std::vector<double> c = u_polys[i].coeffs();
        if (i > 0)
            for (double& x : c) x = -x;
        v.push_back(Poly(std::move(c)));
    }
    return v;
}

/**
 * Least-squares division: the quotient of target by V of degree d,
 * computed as argmin_h ||C_d(V) h - coeffvec(target)||_2 instead of by
 * long division.
 */
inline Poly least_squares_division(const Poly& v, const Poly& target, int d) {
    if (std::sqrt(norm2_sq(v)) <= 1e-12)
        throw DegenerateCofactorError("least_squares_division: divisor is numerically zero");
    const Matrix c = conv_matrix(v, d);
    if (c.rows() != static_cast<Eigen::Index>(target.coeffs().size()))
        throw std::invalid_argument(
            "least_squares_division: deg V + d must equal the target degree");
    return poly_from_vec(least_squares_solve(c, coeffvec(target)));
}

/**
 * Post-iteration extraction: build a GCD candidate H_i from every
 * cofactor by least-squares division of the converged P~_i, score each
 * candidate by the total residual against the original polynomials,
 *
 *     r_i = sum_j ||P_j - H_i V_j||_2^2,
 *
 * keep the best one (ties break to the smallest index) and rebuild the
 * corrected polynomials as exact products gcd * V_j.
 */
inline ApproxGcdResult select_and_correct(const ProblemInstance& problem,
                                          const VariableVector& x_final) {
    const int n = problem.count();
    const int d = problem.target_degree();
    const std::vector<Poly> v = normalize_cofactors(x_final.cofactors_all());

    std::vector<double> residuals(static_cast<std::size_t>(n));
    std::vector<Poly> candidates;
    candidates.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Poly hi = least_squares_division(v[static_cast<std::size_t>(i)],
                                               x_final.perturbed(i), d);
        double r = 0.0;
        for (int j = 0; j < n; ++j)
            r += norm2_sq(sub(problem.poly(j), mul(hi, v[static_cast<std::size_t>(j)])));
        candidates.push_back(hi);
        residuals[static_cast<std::size_t>(i)] = r;
    }

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (residuals[static_cast<std::size_t>(i)] < residuals[static_cast<std::size_t>(best)])
            best = i;

    const Poly& h = candidates[static_cast<std::size_t>(best)];
    if (h.leading() == 0.0)
        throw DegenerateCofactorError("select_and_correct: extracted GCD lost its degree");

    ApproxGcdResult result;
    result.gcd = h;
    result.cofactors = v;
    result.residual_per_candidate = residuals;
    double pert = 0.0;
    for (int j = 0; j < n; ++j) {
        result.corrected.push_back(mul(h, v[static_cast<std::size_t>(j)]));
        pert += norm2_sq(sub(result.corrected.back(), problem.poly(j)));
    }
    result.perturbation = pert;
    return result;
}

/// Convenience wrapper: solve, then extract.  The outcome is embedded
/// in the result; extraction only runs on converged iterates.
inline ApproxGcdResult approx_gcd(const ProblemInstance& problem, const SolverOptions& options) {
    SolverOutcome outcome = solve(problem, options);
    if (!outcome.converged) {
        ApproxGcdResult result;
        result.outcome = std::move(outcome);
        return result;
    }
    ApproxGcdResult result = select_and_correct(problem, outcome.final_x);
    result.outcome = std::move(outcome);
    return result;
}

}  // namespace gpgcd

#endif
