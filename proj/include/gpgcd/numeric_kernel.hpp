#ifndef GPGCD_NUMERIC_KERNEL_HPP
#define GPGCD_NUMERIC_KERNEL_HPP

#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "gpgcd/polynomial.hpp"

namespace gpgcd {

/// Dense linear-algebra failure (SVD non-convergence, rank-deficient
/// least-squares system).
struct KernelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The bordered Newton system is singular, i.e. the constraint Jacobian
/// lost row rank.  For this problem that means the current polynomials
/// have a common factor of degree exceeding the target, or a cofactor
/// degenerated to a constant.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SvdResult {
    Vector singular_values;  // descending, nonnegative
    Matrix left_vectors;     // orthonormal columns (thin U)
    Matrix right_vectors;    // orthonormal columns (thin V)
};

inline SvdResult svd(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw KernelError("svd: decomposition did not converge");
    return SvdResult{dec.singularValues(), dec.matrixU(), dec.matrixV()};
}

/// Singular values only; cheaper when the vectors are not needed.
inline Vector singular_values(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> dec(m);
    if (dec.info() != Eigen::Success)
        throw KernelError("svd: decomposition did not converge");
    return dec.singularValues();
}

/// Number of singular values above tol * sigma_max.
inline int numeric_rank(const Matrix& m, double tol) {
    const Vector sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = tol * sv(0);
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return r;
}

struct MinSingularPair {
    double sigma_min;
    Vector v_min;  // unit right singular vector
    Vector w_min;  // unit left singular vector
};

/// Last singular triple of M, satisfying M * v_min = sigma_min * w_min.
inline MinSingularPair min_singular_pair(const Matrix& m) {
    SvdResult s = svd(m);
    const Eigen::Index last = s.singular_values.size() - 1;
    return MinSingularPair{s.singular_values(last), s.right_vectors.col(last),
                           s.left_vectors.col(last)};
}

/**
 * Minimum-norm residual solution of the overdetermined system A x = b.
 * A must have full column rank; rank deficiency raises KernelError.
 */
inline Vector least_squares_solve(const Matrix& a, const Vector& b) {
    if (a.rows() < a.cols())
        throw KernelError("least_squares_solve: system is underdetermined");
    Eigen::ColPivHouseholderQR<Matrix> qr(a);
    if (qr.rank() < a.cols())
        throw KernelError("least_squares_solve: matrix is rank-deficient");
    return qr.solve(b);
}

/**
 * Modified Newton step: solves the symmetric bordered system
 *
 *     [ I   J^t ] [dx]   [ -grad ]
 *     [ J   0   ] [ l ] = [ -g   ]
 *
 * and returns the dx block, so that J dx = -g and dx + J^t l = -grad.
 *
 * When J loses row rank the system can still be consistent (for three
 * or more polynomials the constraint rows become dependent on the
 * solution manifold); the minimum-norm solution then still has a unique
 * dx block and is returned.  SingularSystemError is raised only when no
 * step satisfies the system, which is the Jacobian degeneracy the
 * full-rank guard warns about (common factor degree beyond the target,
 * or a cofactor degenerated to zero).
 */
inline Vector solve_bordered(const Matrix& jac, const Vector& grad, const Vector& g) {
    const Eigen::Index n = jac.cols();
    const Eigen::Index m = jac.rows();
    if (grad.size() != n || g.size() != m)
        throw std::invalid_argument("solve_bordered: dimension mismatch");

    Matrix k = Matrix::Zero(n + m, n + m);
    k.topLeftCorner(n, n).setIdentity();
    k.topRightCorner(n, m) = jac.transpose();
    k.bottomLeftCorner(m, n) = jac;

    Vector rhs(n + m);
    rhs.head(n) = -grad;
    rhs.tail(m) = -g;

    // Residual rhs - K sol accumulated in extended precision; the plain
    // double-precision residual caps how far refinement can push the
    // step accuracy when the system is poorly scaled.
    const auto residual_of = [&](const Vector& sol) {
        Vector r(n + m);
        for (Eigen::Index i = 0; i < n + m; ++i) {
            long double acc = rhs(i);
            for (Eigen::Index j = 0; j < n + m; ++j)
                acc -= static_cast<long double>(k(i, j)) * static_cast<long double>(sol(j));
            r(i) = static_cast<double>(acc);
        }
        return r;
    };

    // Plain LU with iterative refinement handles the common case, where
    // the bordered matrix is invertible but poorly conditioned (its
    // small eigenvalues scale like sigma(J)^2).  At exactly singular
    // points the LU solution degenerates, and the rank-revealing
    // minimum-norm solve takes over; the smaller residual wins.
    const auto refine = [&](auto& dec, Vector sol) {
        if (!sol.allFinite()) return std::pair{sol, std::numeric_limits<double>::infinity()};
        Vector r = residual_of(sol);
        double residual = r.lpNorm<Eigen::Infinity>();
        for (int pass = 0; pass < 8; ++pass) {
            const Vector refined = sol + dec.solve(r);
            if (!refined.allFinite()) break;
            const Vector refined_r = residual_of(refined);
            const double refined_residual = refined_r.lpNorm<Eigen::Infinity>();
            if (refined_residual >= residual) break;
            sol = refined;
            r = refined_r;
            residual = refined_residual;
        }
        return std::pair{sol, residual};
    };

    Eigen::PartialPivLU<Matrix> lu(k);
    auto [sol, residual] = refine(lu, lu.solve(rhs));

    const double scale = 1.0 + rhs.lpNorm<Eigen::Infinity>();
    if (residual > 1e-12 * scale) {
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(k);
        auto [cod_sol, cod_residual] = refine(cod, cod.solve(rhs));
        if (cod_residual < residual) {
            sol = cod_sol;
            residual = cod_residual;
        }
    }

    if (residual > 1e-6 * scale)
        throw SingularSystemError(
            "solve_bordered: bordered system is inconsistent; the Jacobian is "
            "rank-deficient (common factor degree exceeds the target GCD "
            "degree, or a cofactor is constant)");

    // Correct the step within range(J^t), where the multiplier block can
    // absorb the change: the pair still solves the bordered system, and
    // J dx = -g tightens to the conditioning of J itself instead of the
    // squared conditioning the assembled matrix carries.
    Vector dx = sol.head(n);
    const auto step_residual = [&](const Vector& d) {
        Vector r(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            long double acc = -g(i);
            for (Eigen::Index j = 0; j < n; ++j)
                acc -= static_cast<long double>(jac(i, j)) * static_cast<long double>(d(j));
            r(i) = static_cast<double>(acc);
        }
        return r;
    };
    const Vector r = step_residual(dx);
    if (r.lpNorm<Eigen::Infinity>() > 1e-13 * (1.0 + g.lpNorm<Eigen::Infinity>())) {
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod_j(jac);
        const Vector polished = dx + cod_j.solve(r);
        if (polished.allFinite() &&
            step_residual(polished).lpNorm<Eigen::Infinity>() <
                r.lpNorm<Eigen::Infinity>())
            dx = polished;
    }
    return dx;
}

}  // namespace gpgcd

#endif
