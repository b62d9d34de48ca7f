#pragma once

/*
 * Groebner bases over Q: Buchberger's algorithm with the Gebauer-Moeller
 * pair criteria and sugar-driven selection, plus the ideal operations built
 * on top of it (elimination through block orders, saturation through the
 * Rabinowitsch trick, dimension and degree of the leading-term staircase).
 *
 * All entry points return fully reduced, monic, deterministically sorted
 * bases, so equal ideals yield byte-identical output.  Budgets make runaway
 * computations fail loudly instead of spinning.
 */

#include <vector>

#include "flagsolve/multipoly.hpp"

namespace flagsolve {

struct GroebnerBudget {
    long max_basis = 4000;         // polynomials ever added to the basis
    long max_pair_steps = 400000;  // s-pair reductions attempted
};

/// Reduced Groebner basis in the ring (and order) of the generators, sorted
/// by increasing leading monomial.  The unit ideal comes back as {1}.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const GroebnerBudget& budget = {});

/// Remainder of full multivariate division of p by the (ordered) basis.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

/// Generators of the elimination ideal I cap Q[x_k, ..., x_{n-1}], returned
/// in the degrevlex ring on the remaining names.
std::vector<MultiPoly> eliminate_first(const std::vector<MultiPoly>& gens, std::size_t k,
                                       const GroebnerBudget& budget = {});

/// Saturation (I : f^infinity), as a reduced basis in the original ring.
std::vector<MultiPoly> saturate(const std::vector<MultiPoly>& gens, const MultiPoly& f,
                                const GroebnerBudget& budget = {});

struct DimensionInfo {
    int dimension;  // -1 for the empty variety, nvars for the zero ideal
    long degree;    // number of standard monomials when dimension == 0, else -1
};

/// Krull dimension (and degree if zero-dimensional) of the ideal with the
/// given reduced basis.
DimensionInfo dimension_degree(const std::vector<MultiPoly>& gb);

bool is_zero_dimensional(const std::vector<MultiPoly>& gb);

/// Monomials outside the leading-term ideal, sorted increasing; requires a
/// zero-dimensional reduced basis.
std::vector<Monomial> quotient_monomial_basis(const std::vector<MultiPoly>& gb);

}  // namespace flagsolve
