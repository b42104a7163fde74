#ifndef GPGCD_POLYNOMIAL_HPP
#define GPGCD_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace gpgcd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/**
 * Real univariate polynomial with coefficients stored in descending
 * degree order: coeffs()[0] is the leading coefficient.
 *
 * Storage is positional and never pruned automatically, so a polynomial
 * keeps the coefficient slots it was built with even when the leading
 * entries are zero.  degree() reports the storage degree
 * (coeffs().size() - 1); callers that need the strict mathematical
 * degree must check the leading coefficient themselves.
 */
template <class T>
class Polynomial {
public:
    Polynomial() : coeffs_(1, T(0)) {}

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("Polynomial: coefficient list must be non-empty");
    }

    Polynomial(std::initializer_list<T> coeffs)
        : Polynomial(std::vector<T>(coeffs)) {}

    const std::vector<T>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const T& leading() const { return coeffs_.front(); }

    /// Coefficient of x^k (0 for k beyond the stored degree).
    T coeff_of(int k) const {
        int idx = degree() - k;
        if (k < 0 || idx < 0) return T(0);
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const T& c) { return c == T(0); });
    }

    /// Copy with leading zeros removed (at least one coefficient is kept).
    Polynomial trimmed() const {
        std::size_t lead = 0;
        while (lead + 1 < coeffs_.size() && coeffs_[lead] == T(0)) ++lead;
        return Polynomial(std::vector<T>(coeffs_.begin() + lead, coeffs_.end()));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.trimmed().coeffs() == b.trimmed().coeffs();
    }

private:
    std::vector<T> coeffs_;
};

using Poly = Polynomial<double>;

/// Coefficient convolution. Result length is deg P + deg Q + 1; no pruning.
template <class T>
Polynomial<T> mul(const Polynomial<T>& p, const Polynomial<T>& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return Polynomial<T>(std::move(out));
}

/// Coefficientwise difference; the shorter operand is padded with
/// leading zeros, so the result keeps max(len P, len Q) slots.
template <class T>
Polynomial<T> sub(const Polynomial<T>& p, const Polynomial<T>& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    const std::size_t len = std::max(a.size(), b.size());
    std::vector<T> out(len, T(0));
    const std::size_t pa = len - a.size();
    const std::size_t pb = len - b.size();
    for (std::size_t i = 0; i < a.size(); ++i) out[pa + i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[pb + i] -= b[i];
    return Polynomial<T>(std::move(out));
}

/// Squared 2-norm of the coefficient vector.
template <class T>
T norm2_sq(const Polynomial<T>& p) {
    T s(0);
    for (const T& c : p.coeffs()) s += c * c;
    return s;
}

inline double norm2(const Poly& p) { return std::sqrt(norm2_sq(p)); }

/// Coefficient vector in descending degree order.
inline Vector coeffvec(const Poly& p) {
    return Eigen::Map<const Vector>(p.coeffs().data(),
                                    static_cast<Eigen::Index>(p.coeffs().size()));
}

inline Poly poly_from_vec(const Vector& v) {
    return Poly(std::vector<double>(v.data(), v.data() + v.size()));
}

/**
 * Convolution (coefficient-shift) matrix C_k(P).
 *
 * For deg P = m the matrix has m+k+1 rows and k+1 columns; column j
 * carries the coefficients of P shifted down by j rows.  Multiplying by
 * the coefficient vector of a degree-k polynomial Q gives the
 * coefficient vector of P*Q.
 */
inline Matrix conv_matrix(const Poly& p, int k) {
    if (k < 0) throw std::invalid_argument("conv_matrix: k must be nonnegative");
    const int m = p.degree();
    Matrix c = Matrix::Zero(m + k + 1, k + 1);
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= m; ++i)
            c(i + j, j) = p.coeffs()[static_cast<std::size_t>(i)];
    return c;
}

}  // namespace gpgcd

#endif
