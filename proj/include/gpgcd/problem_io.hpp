#ifndef GPGCD_PROBLEM_IO_HPP
#define GPGCD_PROBLEM_IO_HPP

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpgcd/extract.hpp"
#include "gpgcd/polynomial.hpp"
#include "gpgcd/solver.hpp"

namespace gpgcd {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * On-disk problem document (JSON):
 *
 *   {
 *     "polynomials": [[1.0, -3.0, 2.0], ...],   // descending degree
 *     "gcd_degree": 1,                           // optional for rank scans
 *     "epsilon": 1e-8,                           // optional
 *     "max_iterations": 100                      // optional
 *   }
 */
struct ProblemFile {
    std::vector<Poly> polynomials;
    std::optional<int> gcd_degree;
    SolverOptions options;

    /// Validated instance; requires gcd_degree to be present.
    ProblemInstance instance() const {
        if (!gcd_degree)
            throw ParseError("problem file: missing field 'gcd_degree'");
        return ProblemInstance(polynomials, *gcd_degree);
    }
};

namespace detail {

inline std::vector<Poly> parse_poly_list(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array() || j[field].empty())
        throw ParseError(std::string("problem file: '") + field +
                         "' must be a non-empty array of coefficient arrays");
    std::vector<Poly> polys;
    int index = 0;
    for (const auto& entry : j[field]) {
        if (!entry.is_array() || entry.empty())
            throw ParseError(std::string("problem file: '") + field + "[" +
                             std::to_string(index) + "]' must be a non-empty number array");
        std::vector<double> coeffs;
        coeffs.reserve(entry.size());
        for (const auto& c : entry) {
            if (!c.is_number())
                throw ParseError(std::string("problem file: '") + field + "[" +
                                 std::to_string(index) + "]' contains a non-numeric entry");
            const double v = c.get<double>();
            if (!std::isfinite(v))
                throw ParseError(std::string("problem file: '") + field + "[" +
                                 std::to_string(index) + "]' contains a non-finite entry");
            coeffs.push_back(v);
        }
        polys.push_back(Poly(std::move(coeffs)));
        ++index;
    }
    return polys;
}

}  // namespace detail

inline ProblemFile parse_problem(const nlohmann::json& j) {
    ProblemFile file;
    file.polynomials = detail::parse_poly_list(j, "polynomials");
    if (j.contains("gcd_degree")) {
        if (!j["gcd_degree"].is_number_integer())
            throw ParseError("problem file: 'gcd_degree' must be an integer");
        file.gcd_degree = j["gcd_degree"].get<int>();
    }
    if (j.contains("epsilon")) {
        file.options.epsilon = j["epsilon"].get<double>();
        if (!(file.options.epsilon > 0.0))
            throw ParseError("problem file: 'epsilon' must be positive");
    }
    if (j.contains("max_iterations")) {
        file.options.max_iterations = j["max_iterations"].get<int>();
        if (file.options.max_iterations < 1)
            throw ParseError("problem file: 'max_iterations' must be at least 1");
    }
    return file;
}

/// Parse and validate a problem file; invariant violations are reported
/// with the offending field.
inline ProblemFile parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open problem file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("problem file " + path + ": " + e.what());
    }
    return parse_problem(j);
}

inline nlohmann::json poly_to_json(const Poly& p) {
    return nlohmann::json(p.coeffs());
}

inline nlohmann::json problem_to_json(const ProblemInstance& problem) {
    nlohmann::json j;
    j["polynomials"] = nlohmann::json::array();
    for (const Poly& p : problem.polys()) j["polynomials"].push_back(poly_to_json(p));
    j["gcd_degree"] = problem.target_degree();
    return j;
}

/// Structured result document; coefficient arrays round-trip through
/// the problem parser bit-exactly.
inline nlohmann::json result_to_json(const ApproxGcdResult& result) {
    nlohmann::json j;
    j["converged"] = result.outcome.converged;
    j["iterations"] = result.outcome.iterations;
    j["constraint_residual"] = result.outcome.constraint_residual;
    if (result.outcome.converged) {
        j["gcd"] = poly_to_json(result.gcd);
        j["cofactors"] = nlohmann::json::array();
        for (const Poly& p : result.cofactors) j["cofactors"].push_back(poly_to_json(p));
        j["corrected"] = nlohmann::json::array();
        for (const Poly& p : result.corrected) j["corrected"].push_back(poly_to_json(p));
        j["perturbation"] = result.perturbation;
        j["residual_per_candidate"] = result.residual_per_candidate;
    } else {
        nlohmann::json diag;
        diag["reason"] = "iteration limit reached before the step norm fell below epsilon";
        if (!result.outcome.trace.empty()) {
            diag["final_step_norm"] = result.outcome.trace.back().step_norm;
            diag["final_constraint_norm"] = result.outcome.trace.back().constraint_norm;
        }
        j["diagnostics"] = diag;
    }
    return j;
}

inline void write_output(const ApproxGcdResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << result_to_json(result).dump(2) << '\n';
    if (!out)
        throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace gpgcd

#endif
