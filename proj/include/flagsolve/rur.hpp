#pragma once

/*
 * Rational univariate representation of a zero-dimensional system.
 *
 * Every solution of the input ideal is encoded by one irreducible component:
 * a separating linear form lambda takes a distinct value at each solution,
 * its minimal polynomial over the component is the eliminant f(T), and every
 * original coordinate equals a polynomial c_j(T) evaluated at the matching
 * root of f.  Multiplicities of the (possibly non-radical) input ideal are
 * carried along per component.  Everything is exact over Q.
 */

#include <string>
#include <vector>

#include "flagsolve/groebner.hpp"
#include "flagsolve/multipoly.hpp"
#include "flagsolve/numberfield.hpp"
#include "flagsolve/unipoly.hpp"

namespace flagsolve {

struct RurComponent {
    /// Irreducible over Q, integer-primitive, positive leading coefficient.
    UniPoly eliminant;
    /// One polynomial per ring variable, degree < deg(eliminant): the value
    /// of that variable at the solution with lambda = T.
    std::vector<UniPoly> coordinates;
    /// Multiplicity of each of this component's solutions in the input ideal.
    long multiplicity = 1;
};

struct RurResult {
    std::vector<std::string> variables;
    /// lambda = sum separating[i] * x_i.
    std::vector<Rat> separating;
    std::vector<RurComponent> components;
    /// dim_Q of the full quotient algebra (counts multiplicity).
    long quotient_dimension = 0;
    /// Number of distinct solutions = sum of component degrees.
    long solution_count = 0;
};

/// Computes the representation from a reduced, zero-dimensional basis.
/// Throws std::invalid_argument if the ideal is not zero-dimensional and
/// ResourceError if no separating form is found within the candidate budget.
RurResult rational_univariate_representation(const std::vector<MultiPoly>& gb,
                                             const GroebnerBudget& budget = {});

/// Q[T]/(eliminant) with a monic modulus.
NumberField component_field(const RurComponent& c);

/// The component's solution as elements of its field, in variable order.
std::vector<NumberFieldElem> component_point(const RurComponent& c,
                                             const NumberField& field);

/// Evaluate a polynomial at a point with coordinates in one field.
NumberFieldElem evaluate_at_point(const MultiPoly& p,
                                  const std::vector<NumberFieldElem>& point,
                                  const NumberField& field);

}  // namespace flagsolve
