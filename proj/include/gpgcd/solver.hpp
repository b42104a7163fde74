#ifndef GPGCD_SOLVER_HPP
#define GPGCD_SOLVER_HPP

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpgcd/numeric_kernel.hpp"
#include "gpgcd/polynomial.hpp"
#include "gpgcd/sylvester.hpp"

namespace gpgcd {

/**
 * The n input polynomials P_1..P_n together with the prescribed GCD
 * degree d.  Construction enforces n >= 2, min deg P_i > d > 0 and
 * nonzero leading coefficients; everything downstream relies on that.
 */
class ProblemInstance {
public:
    ProblemInstance(std::vector<Poly> polys, int target_degree)
        : polys_(std::move(polys)), target_degree_(target_degree) {
        if (polys_.size() < 2)
            throw std::invalid_argument("ProblemInstance: need at least two polynomials");
        int dmin = polys_[0].degree();
        for (const Poly& p : polys_) {
            if (p.leading() == 0.0)
                throw std::invalid_argument("ProblemInstance: leading coefficient is zero");
            dmin = std::min(dmin, p.degree());
        }
        if (!(dmin > target_degree_ && target_degree_ > 0))
            throw std::invalid_argument(
                "ProblemInstance: GCD degree must satisfy min deg P_i > d > 0");
    }

    const std::vector<Poly>& polys() const { return polys_; }
    const Poly& poly(int i) const { return polys_[static_cast<std::size_t>(i)]; }
    int count() const { return static_cast<int>(polys_.size()); }
    int target_degree() const { return target_degree_; }

    std::vector<int> degrees() const {
        std::vector<int> d;
        d.reserve(polys_.size());
        for (const Poly& p : polys_) d.push_back(p.degree());
        return d;
    }

private:
    std::vector<Poly> polys_;
    int target_degree_;
};

/**
 * Layout of the flat optimization vector: for i = 1..n the perturbed
 * coefficients (descending, d_i + 1 each), then for i = 1..n the
 * cofactor coefficients (descending, d_i - d + 1 each).  Total length
 * is 2 * sum d_i + (2 - d) * n.
 */
class VariableLayout {
public:
    VariableLayout() : gcd_degree_(0), offsets_(1, 0) {}

    VariableLayout(std::vector<int> degrees, int gcd_degree)
        : degrees_(std::move(degrees)), gcd_degree_(gcd_degree) {
        offsets_.reserve(2 * degrees_.size() + 1);
        int off = 0;
        for (int d : degrees_) {
            offsets_.push_back(off);
            off += d + 1;
        }
        for (int d : degrees_) {
            offsets_.push_back(off);
            off += d - gcd_degree_ + 1;
        }
        offsets_.push_back(off);
    }

    int count() const { return static_cast<int>(degrees_.size()); }
    int gcd_degree() const { return gcd_degree_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return offsets_.back(); }

    int perturbed_offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
    int perturbed_len(int i) const { return degrees_[static_cast<std::size_t>(i)] + 1; }
    int cofactor_offset(int i) const {
        return offsets_[degrees_.size() + static_cast<std::size_t>(i)];
    }
    int cofactor_len(int i) const {
        return degrees_[static_cast<std::size_t>(i)] - gcd_degree_ + 1;
    }

    friend bool operator==(const VariableLayout& a, const VariableLayout& b) {
        return a.degrees_ == b.degrees_ && a.gcd_degree_ == b.gcd_degree_;
    }

private:
    std::vector<int> degrees_;
    int gcd_degree_;
    std::vector<int> offsets_;
};

/// Flat optimization vector plus its layout; accessors rebuild the
/// perturbed polynomials and cofactors losslessly.
class VariableVector {
public:
    VariableVector() = default;

    VariableVector(VariableLayout layout, Vector data)
        : layout_(std::move(layout)), data_(std::move(data)) {
        if (data_.size() != layout_.size())
            throw std::invalid_argument("VariableVector: data length does not match layout");
    }

    static VariableVector pack(const VariableLayout& layout,
                               const std::vector<Poly>& perturbed,
                               const std::vector<Poly>& cofactors) {
        Vector x(layout.size());
        for (int i = 0; i < layout.count(); ++i) {
            const auto& pc = perturbed[static_cast<std::size_t>(i)].coeffs();
            const auto& uc = cofactors[static_cast<std::size_t>(i)].coeffs();
            if (static_cast<int>(pc.size()) != layout.perturbed_len(i) ||
                static_cast<int>(uc.size()) != layout.cofactor_len(i))
                throw std::invalid_argument("VariableVector::pack: degree mismatch");
            for (int j = 0; j < layout.perturbed_len(i); ++j)
                x(layout.perturbed_offset(i) + j) = pc[static_cast<std::size_t>(j)];
            for (int j = 0; j < layout.cofactor_len(i); ++j)
                x(layout.cofactor_offset(i) + j) = uc[static_cast<std::size_t>(j)];
        }
        return VariableVector(layout, std::move(x));
    }

    const VariableLayout& layout() const { return layout_; }
    const Vector& data() const { return data_; }
    Vector& data() { return data_; }

    /// Perturbed polynomial P~_i  (i is 0-based).
    Poly perturbed(int i) const {
        return poly_from_vec(data_.segment(layout_.perturbed_offset(i), layout_.perturbed_len(i)));
    }

    /// Cofactor polynomial U_i  (i is 0-based).
    Poly cofactor(int i) const {
        return poly_from_vec(data_.segment(layout_.cofactor_offset(i), layout_.cofactor_len(i)));
    }

    std::vector<Poly> perturbed_all() const {
        std::vector<Poly> out;
        out.reserve(static_cast<std::size_t>(layout_.count()));
        for (int i = 0; i < layout_.count(); ++i) out.push_back(perturbed(i));
        return out;
    }

    std::vector<Poly> cofactors_all() const {
        std::vector<Poly> out;
        out.reserve(static_cast<std::size_t>(layout_.count()));
        for (int i = 0; i < layout_.count(); ++i) out.push_back(cofactor(i));
        return out;
    }

private:
    VariableLayout layout_;
    Vector data_;
};

inline VariableLayout layout_of(const ProblemInstance& problem) {
    return VariableLayout(problem.degrees(), problem.target_degree());
}

struct SolverOptions {
    double epsilon = 1e-8;    // stop when ||dx||_2 <= epsilon
    int max_iterations = 100;
    double rank_tol = 1e-10;  // relative threshold for rank diagnostics
};

struct IterationStat {
    double step_norm;            // ||dx||_2
    double constraint_norm;      // ||g||_2 before the step
    double constraint_norm_inf;  // ||g||_inf before the step
    double lin_residual;         // ||J dx + g||_inf for the accepted step
};

struct SolverOutcome {
    VariableVector final_x;
    int iterations = 0;
    bool converged = false;
    double constraint_residual = 0.0;  // ||g(final_x)||_inf
    std::vector<IterationStat> trace;
};

/// Number of constraint equations:
/// d_bar = sum d_i - (n-1)(d-1) + (n-2) d_1 + 1.
inline int constraint_count(const ProblemInstance& problem) {
    const std::vector<int> degs = problem.degrees();
    const int n = problem.count();
    const int d = problem.target_degree();
    const int dsum = std::accumulate(degs.begin(), degs.end(), 0);
    return dsum - (n - 1) * (d - 1) + (n - 2) * degs[0] + 1;
}

/// Objective f_bar(x) = 1/2 * sum_i ||P~_i - P_i||_2^2.
inline double objective(const VariableVector& x, const ProblemInstance& problem) {
    double s = 0.0;
    for (int i = 0; i < problem.count(); ++i) {
        const Vector diff = coeffvec(x.perturbed(i)) - coeffvec(problem.poly(i));
        s += diff.squaredNorm();
    }
    return 0.5 * s;
}

/// Gradient of f_bar: (p~ - p) on the perturbed blocks, zero on the
/// cofactor blocks.
inline Vector gradient(const VariableVector& x, const ProblemInstance& problem) {
    const VariableLayout& lay = x.layout();
    Vector grad = Vector::Zero(lay.size());
    for (int i = 0; i < problem.count(); ++i) {
        const int off = lay.perturbed_offset(i);
        const int len = lay.perturbed_len(i);
        grad.segment(off, len) =
            x.data().segment(off, len) - coeffvec(problem.poly(i));
    }
    return grad;
}

/**
 * Constraint vector g(x) of length constraint_count(problem).
 *
 * Entry 0 is the cofactor normalization sum_i ||u_i||^2 - 1; the
 * remaining entries are N_{d-1}(P~_1,...,P~_n) * (u_1,...,u_n)^t, whose
 * block i-1 equals the coefficient vector of U_1 P~_i + U_i P~_1.
 */
inline Vector constraints(const VariableVector& x, const ProblemInstance& problem) {
    const VariableLayout& lay = x.layout();
    const int dbar = constraint_count(problem);
    Vector g(dbar);

    double unorm = 0.0;
    Vector u(lay.size() - lay.cofactor_offset(0));
    int pos = 0;
    for (int i = 0; i < problem.count(); ++i) {
        const Vector ui = x.data().segment(lay.cofactor_offset(i), lay.cofactor_len(i));
        unorm += ui.squaredNorm();
        u.segment(pos, ui.size()) = ui;
        pos += static_cast<int>(ui.size());
    }
    g(0) = unorm - 1.0;

    const Matrix nk = subresultant_matrix(x.perturbed_all(), problem.target_degree() - 1);
    g.tail(dbar - 1) = nk * u;
    return g;
}

/**
 * Analytic Jacobian of the constraints, d_bar x dim(x).
 *
 * Top row: zeros on the perturbed blocks, 2 u_i^t on the cofactor
 * blocks.  Body block row i-1: C_{d_1}(U_i) against p~_1, C_{d_i}(U_1)
 * against p~_i, C_{d_1-d}(P~_i) against u_1 and C_{d_i-d}(P~_1) against
 * u_i, with the perturbed polynomials taken at the current iterate.
 */
inline Matrix jacobian(const VariableVector& x, const ProblemInstance& problem) {
    const VariableLayout& lay = x.layout();
    const int n = problem.count();
    const int d = problem.target_degree();
    const std::vector<int> degs = problem.degrees();

    Matrix jac = Matrix::Zero(constraint_count(problem), lay.size());
    for (int i = 0; i < n; ++i)
        jac.block(0, lay.cofactor_offset(i), 1, lay.cofactor_len(i)) =
            2.0 * x.data().segment(lay.cofactor_offset(i), lay.cofactor_len(i)).transpose();

    const Poly p1 = x.perturbed(0);
    const Poly u1 = x.cofactor(0);
    int row = 1;
    for (int i = 1; i < n; ++i) {
        const Poly pi = x.perturbed(i);
        const Poly ui = x.cofactor(i);
        const int h = degs[0] + degs[static_cast<std::size_t>(i)] - d + 1;
        jac.block(row, lay.perturbed_offset(0), h, lay.perturbed_len(0)) =
            conv_matrix(ui, degs[0]);
        jac.block(row, lay.perturbed_offset(i), h, lay.perturbed_len(i)) =
            conv_matrix(u1, degs[static_cast<std::size_t>(i)]);
        jac.block(row, lay.cofactor_offset(0), h, lay.cofactor_len(0)) =
            conv_matrix(pi, degs[0] - d);
        jac.block(row, lay.cofactor_offset(i), h, lay.cofactor_len(i)) =
            conv_matrix(p1, degs[static_cast<std::size_t>(i)] - d);
        row += h;
    }
    return jac;
}

/**
 * Initial iterate: the perturbed blocks carry the original
 * coefficients, the cofactor blocks the right singular vector of the
 * smallest singular value of N_{d-1}(P_1,...,P_n).  The normalization
 * constraint holds at this point since the singular vector has unit
 * norm.
 */
inline VariableVector initial_point(const ProblemInstance& problem) {
    const VariableLayout lay = layout_of(problem);
    Vector x(lay.size());
    for (int i = 0; i < problem.count(); ++i)
        x.segment(lay.perturbed_offset(i), lay.perturbed_len(i)) =
            coeffvec(problem.poly(i));

    const Matrix nd1 = subresultant_matrix(problem.polys(), problem.target_degree() - 1);
    const MinSingularPair pair = min_singular_pair(nd1);
    x.segment(lay.cofactor_offset(0), lay.size() - lay.cofactor_offset(0)) = pair.v_min;
    return VariableVector(lay, std::move(x));
}

/**
 * Modified Newton iteration: repeatedly solve the bordered system for
 * dx, take the full step, and stop once ||dx||_2 <= epsilon or the
 * iteration budget is exhausted.  SingularSystemError from the bordered
 * solve propagates to the caller.
 */
inline SolverOutcome solve(const ProblemInstance& problem, const SolverOptions& options) {
    if (options.epsilon <= 0.0)
        throw std::invalid_argument("solve: epsilon must be positive");
    if (options.max_iterations < 1)
        throw std::invalid_argument("solve: max_iterations must be at least 1");

    VariableVector x = initial_point(problem);
    SolverOutcome out;
    out.final_x = x;
    out.trace.reserve(static_cast<std::size_t>(options.max_iterations));

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        const Vector g = constraints(x, problem);
        const Matrix jac = jacobian(x, problem);
        const Vector grad = gradient(x, problem);
        const Vector dx = solve_bordered(jac, grad, g);

        x.data() += dx;
        out.iterations = iter;
        out.trace.push_back(IterationStat{dx.norm(), g.norm(),
                                          g.lpNorm<Eigen::Infinity>(),
                                          (jac * dx + g).lpNorm<Eigen::Infinity>()});
        if (dx.norm() <= options.epsilon) {
            out.converged = true;
            break;
        }
    }

    out.final_x = x;
    out.constraint_residual =
        constraints(x, problem).lpNorm<Eigen::Infinity>();
    return out;
}

}  // namespace gpgcd

#endif
