#pragma once

/*
 * Exception types shared across the library.
 *
 * ReducibleModulusError is load-bearing: number-field inversion detects a
 * reducible modulus as a side effect of the extended Euclid run and hands the
 * nontrivial factor back to the caller, which can then split the component
 * and retry on each piece.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagsolve {

/// A configured budget (basis size, pair count, subset count, ...) ran out.
/// Computations fail loudly instead of silently truncating.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when arithmetic modulo f(Y) discovers that f splits; carries the
/// coefficients of a proper monic factor of the modulus.
class ReducibleModulusError : public std::runtime_error {
public:
    ReducibleModulusError(const std::string& what, std::vector<std::string> factor_coeffs)
        : std::runtime_error(what), factor_coeffs_(std::move(factor_coeffs)) {}

    /// Decimal strings of the factor's coefficients, low-to-high.
    const std::vector<std::string>& factor_coeffs() const { return factor_coeffs_; }

private:
    std::vector<std::string> factor_coeffs_;
};

}  // namespace flagsolve
