#pragma once

/*
 * Factorization of univariate polynomials over Q.
 *
 * Pipeline: strip content -> Yun squarefree decomposition -> for each
 * squarefree piece, factor modulo a suitable machine prime (distinct-degree
 * plus Cantor-Zassenhaus equal-degree splitting), Hensel-lift the modular
 * factorization past the Landau-Mignotte bound, and recombine factor subsets
 * (Zassenhaus).  Randomized steps draw from a fixed-seed generator, so the
 * output is deterministic.
 */

#include <utility>
#include <vector>

#include "flagsolve/unipoly.hpp"

namespace flagsolve {

struct RatFactorization {
    /// p = unit * prod factors[i].first ^ factors[i].second.
    Rat unit;
    /// Irreducible, integer-primitive, positive leading coefficient,
    /// ordered by (degree, then coefficient sequence high-to-low).
    std::vector<std::pair<UniPoly, int>> factors;
};

/// Factor p into irreducibles over Q.  Throws ResourceError if the
/// recombination search exceeds its candidate budget.
RatFactorization factor_rational(const UniPoly& p);

/// True if p (deg >= 1) is irreducible over Q.
bool is_irreducible(const UniPoly& p);

/// True if p is (a rational multiple of) a cyclotomic polynomial; used to
/// recognize algebraic numbers of finite multiplicative order.  If so and
/// order != nullptr, *order receives the root order n (p ~ the minimal
/// polynomial of a primitive n-th root of unity).
bool is_cyclotomic(const UniPoly& p, unsigned* order = nullptr);

}  // namespace flagsolve
