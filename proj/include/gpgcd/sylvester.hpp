#ifndef GPGCD_SYLVESTER_HPP
#define GPGCD_SYLVESTER_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gpgcd/numeric_kernel.hpp"
#include "gpgcd/polynomial.hpp"

namespace gpgcd {

struct SubresDims {
    int rows;  // r_k
    int cols;  // c_k
};

namespace detail {

inline void check_subres_args(const std::vector<int>& degrees, int k) {
    if (degrees.size() < 2)
        throw std::invalid_argument("subresultant: need at least two polynomials");
    const int dmin = *std::min_element(degrees.begin(), degrees.end());
    if (k < 0 || k >= dmin)
        throw std::invalid_argument("subresultant: k must satisfy 0 <= k < min degree");
}

inline std::vector<int> degrees_of(const std::vector<Poly>& polys) {
    std::vector<int> d;
    d.reserve(polys.size());
    for (const Poly& p : polys) d.push_back(p.degree());
    return d;
}

}  // namespace detail

/// Row and column counts of the k-th subresultant matrix for the given
/// degree tuple:  r_k = sum d_i - (n-1)k + (n-2)d_1,  c_k = sum d_i - n k.
inline SubresDims subres_dims(const std::vector<int>& degrees, int k) {
    detail::check_subres_args(degrees, k);
    const int n = static_cast<int>(degrees.size());
    int dsum = 0;
    for (int d : degrees) dsum += d;
    return SubresDims{dsum - (n - 1) * k + (n - 2) * degrees[0],
                      dsum - n * k};
}

/**
 * k-th subresultant matrix N_k(P_1,...,P_n).
 *
 * Block row i-1 (for i = 2..n) holds C_{d_1-1-k}(P_i) in the first
 * column block and C_{d_i-1-k}(P_1) in column block i; all other blocks
 * are zero.  k = 0 gives the generalized Sylvester matrix N, whose rank
 * deficiency certifies a nontrivial common divisor.
 */
inline Matrix subresultant_matrix(const std::vector<Poly>& polys, int k) {
    const std::vector<int> degs = detail::degrees_of(polys);
    detail::check_subres_args(degs, k);
    for (const Poly& p : polys)
        if (p.leading() == 0.0)
            throw std::invalid_argument("subresultant: leading coefficient is zero");

    const int n = static_cast<int>(polys.size());
    const SubresDims dims = subres_dims(degs, k);
    Matrix m = Matrix::Zero(dims.rows, dims.cols);

    // Column block i starts after widths d_1-k, ..., d_{i-1}-k.
    std::vector<int> col_off(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        col_off[static_cast<std::size_t>(i)] =
            col_off[static_cast<std::size_t>(i - 1)] + degs[static_cast<std::size_t>(i - 1)] - k;

    int row = 0;
    for (int i = 2; i <= n; ++i) {
        const int di = degs[static_cast<std::size_t>(i - 1)];
        const Matrix left = conv_matrix(polys[static_cast<std::size_t>(i - 1)], degs[0] - 1 - k);
        const Matrix right = conv_matrix(polys[0], di - 1 - k);
        m.block(row, 0, left.rows(), left.cols()) = left;
        m.block(row, col_off[static_cast<std::size_t>(i - 1)], right.rows(), right.cols()) = right;
        row += static_cast<int>(left.rows());
    }
    return m;
}

/**
 * Smallest k in [0, min d_i - 1] for which N_k has full numeric column
 * rank (singular values above tol * sigma_max); returns min d_i when no
 * such k exists.  For exact inputs this equals deg gcd(P_1,...,P_n).
 */
inline int gcd_degree_estimate(const std::vector<Poly>& polys, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("gcd_degree_estimate: tol must be positive");
    const std::vector<int> degs = detail::degrees_of(polys);
    if (degs.size() < 2)
        throw std::invalid_argument("gcd_degree_estimate: need at least two polynomials");
    const int dmin = *std::min_element(degs.begin(), degs.end());
    for (int k = 0; k < dmin; ++k) {
        const Matrix nk = subresultant_matrix(polys, k);
        if (numeric_rank(nk, tol) == static_cast<int>(nk.cols())) return k;
    }
    return dmin;
}

}  // namespace gpgcd

#endif
