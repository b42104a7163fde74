#ifndef GPGCD_GENERATOR_HPP
#define GPGCD_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gpgcd/polynomial.hpp"
#include "gpgcd/solver.hpp"

namespace gpgcd {

/// One benchmark class: n polynomials of degree m sharing a GCD of
/// degree d, contaminated with noise of 2-norm e_P per polynomial.
struct BenchConfig {
    int degree = 10;       // m
    int gcd_degree = 5;    // d
    int num_polys = 3;     // n
    int cases = 10;
    double noise = 0.1;    // e_P
    std::uint64_t seed = 0;
};

inline void validate(const BenchConfig& config) {
    if (!(config.degree > config.gcd_degree && config.gcd_degree > 0))
        throw std::invalid_argument("BenchConfig: need m > d > 0");
    if (config.num_polys < 2)
        throw std::invalid_argument("BenchConfig: need at least two polynomials");
    if (config.cases < 1)
        throw std::invalid_argument("BenchConfig: need at least one case");
    if (config.noise < 0.0)
        throw std::invalid_argument("BenchConfig: noise must be nonnegative");
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [-10, 10) built from the top 53 bits of the
/// engine output, so the stream does not depend on the standard
/// library's distribution implementation.
inline double uniform_coeff(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return -10.0 + 20.0 * u;
}

inline Poly random_monic(std::mt19937_64& rng, int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    c[0] = 1.0;
    for (int i = 1; i <= degree; ++i) c[static_cast<std::size_t>(i)] = uniform_coeff(rng);
    return Poly(std::move(c));
}

inline Poly random_dense(std::mt19937_64& rng, int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (double& x : c) x = uniform_coeff(rng);
    return Poly(std::move(c));
}

}  // namespace detail

/**
 * Deterministic random instance for (config, case_index): one shared
 * monic GCD of degree d, per-polynomial monic prime parts of degree
 * m - d, all non-leading coefficients uniform in [-10, 10], plus a
 * fresh degree m-1 noise polynomial per input scaled so that
 * ||P - P_0||_2 equals the configured noise exactly.
 */
inline ProblemInstance generate_test_case(const BenchConfig& config, int case_index) {
    validate(config);
    std::mt19937_64 rng(detail::splitmix64(
        config.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(case_index + 1)));

    const Poly shared_gcd = detail::random_monic(rng, config.gcd_degree);
    std::vector<Poly> polys;
    polys.reserve(static_cast<std::size_t>(config.num_polys));
    for (int i = 0; i < config.num_polys; ++i) {
        const Poly prime_part =
            detail::random_monic(rng, config.degree - config.gcd_degree);
        const Poly exact = mul(shared_gcd, prime_part);
        const Poly noise_poly = detail::random_dense(rng, config.degree - 1);

        const double scale =
            config.noise == 0.0 ? 0.0 : config.noise / norm2(noise_poly);
        std::vector<double> c = exact.coeffs();
        const auto& nc = noise_poly.coeffs();
        for (std::size_t j = 0; j < nc.size(); ++j)
            c[j + 1] += scale * nc[j];
        polys.push_back(Poly(std::move(c)));
    }
    return ProblemInstance(std::move(polys), config.gcd_degree);
}

}  // namespace gpgcd

#endif
