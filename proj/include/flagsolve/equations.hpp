#pragma once

/*
 * The polynomial system attached to a decorated ideal triangulation.
 *
 * Coordinates: twelve cross-ratios z^t_{ij} (i != j) per tetrahedron t, one
 * for each vertex i and adjacent edge (i,j).  Relations come in three
 * groups:
 *   - cross-ratio relations: at each vertex the three coordinates are related
 *     by x -> 1/(1-x), so two of the three are rational in the third;
 *   - edge equations: the product of the coordinates met when walking around
 *     a geometric edge equals 1 (one binomial per oriented edge cycle);
 *   - face equations: the triple ratios of the two sides of a glued face
 *     (with the correct ordering convention) multiply to 1, again binomials.
 *
 * Boundary-holonomy rows are supplied by the holonomy layer as additional
 * polynomials in the same ring.  reduce_system() then eliminates variables:
 * first the per-vertex rational dependents, then any variable appearing
 * linearly with a single-term coefficient (a unit on the torus where all
 * coordinates are nonzero).  Every elimination is logged in a ledger so full
 * solutions can be reconstructed, and the nonvanishing constraints are
 * carried along as explicit "forbidden factors" for saturation.
 */

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagsolve/multipoly.hpp"
#include "flagsolve/numberfield.hpp"
#include "flagsolve/triangulation.hpp"
#include "flagsolve/unipoly.hpp"

namespace flagsolve {

/// Canonical variable name for the cross-ratio at vertex i along edge (i,j).
std::string cross_ratio_name(int tet, int i, int j);

/// Ring with all 12 * num_tets cross-ratio variables (tetrahedron-major,
/// (i,j) lexicographic) followed by any extra names.
Ring system_ring(const Triangulation& t, const std::vector<std::string>& extra = {});

std::size_t cross_ratio_index(const Ring& ring, int tet, int i, int j);

struct GluingSystem {
    Ring ring;
    std::vector<MultiPoly> cross_ratio;  // 8 per tetrahedron
    std::vector<MultiPoly> edge;         // one binomial per edge cycle
    std::vector<MultiPoly> face;         // one binomial per face pairing
    std::vector<EdgeClass> cycles;       // parallel to `edge`
};

GluingSystem build_gluing_system(const Triangulation& t, const Ring& ring);

/// Constraint on the boundary-holonomy eigenvalues of every cusp.  Unipotent
/// sets all four eigenvalues to 1.  FixedValues adjoins one algebraic
/// constant (name + irreducible minimal polynomial) and equates chosen
/// eigenvalues to polynomials in it; eigenvalues left unset are free.
struct HolonomyCondition {
    enum class Kind { Unipotent, FixedValues };
    Kind kind = Kind::Unipotent;

    std::string constant_name;  // FixedValues only
    UniPoly constant_minpoly;   // irreducible over Q

    struct CuspTargets {
        std::optional<UniPoly> A, Astar, B, Bstar;  // polynomials in the constant
    };
    std::vector<CuspTargets> targets;  // one entry per cusp (FixedValues)

    static HolonomyCondition unipotent() { return {}; }
};

/// Polynomial rows expressing a holonomy condition: for each constrained
/// eigenvalue value = num/den the row is num - target * den, plus the
/// constant's minimal polynomial when one is adjoined.  `cleared` records the
/// denominators that were multiplied away (all products of coordinates).
struct HolonomyRows {
    std::vector<MultiPoly> equations;
    std::vector<MultiPoly> cleared;
};

HolonomyRows holonomy_equations(const Triangulation& t, const Ring& ring,
                                const HolonomyCondition& cond);

/// The complete polynomial system for a decorated triangulation under a
/// holonomy condition, before any reduction.
struct SystemSpec {
    Ring ring;
    GluingSystem glue;
    HolonomyRows holonomy;
};

SystemSpec build_system(const Triangulation& t, const HolonomyCondition& cond);

/// Record of one eliminated variable: var = num / den, where num and den are
/// polynomials in the full ring involving only variables that survive longer.
struct LedgerEntry {
    std::size_t var;
    MultiPoly num;
    MultiPoly den;
};

struct ReducedSystem {
    Ring big;
    Ring small;
    std::vector<std::string> kept;      // small-ring variable names
    std::vector<MultiPoly> equations;   // small ring
    std::vector<LedgerEntry> ledger;    // in elimination order
    std::vector<MultiPoly> forbidden;   // small ring; must not vanish
    bool empty_system = false;          // a contradiction was found
    std::string contradiction;          // witness when empty_system is set
};

struct ReduceOptions {
    /// Per tetrahedron, per vertex i (index i-1): the j for which z_ij
    /// survives the per-vertex elimination.  Empty = the default choice
    /// (z12, z21, z34, z43).
    std::vector<std::array<int, 4>> survivors;

    /// Abort (ResourceError) if a substitution pushes the maximum total
    /// degree of the system beyond this multiple of its initial value.
    unsigned degree_growth = 8;
};

/// Builds gluing + boundary rows and eliminates variables as described above.
/// Names listed in `protect` are never eliminated (e.g. adjoined parameters).
ReducedSystem reduce_system(const Triangulation& t, const Ring& big,
                            const std::vector<MultiPoly>& boundary_rows,
                            const std::vector<std::string>& protect = {},
                            const ReduceOptions& options = {});

/// p with `var` replaced by num/den and the denominator cleared:
/// den^deg * p(..., num/den, ...).
MultiPoly rational_substitute(const MultiPoly& p, std::size_t var, const MultiPoly& num,
                              const MultiPoly& den);

/// Values of every ring variable given values for the kept ones (ordered as
/// rs.kept), replaying the ledger backwards.  Throws std::domain_error if a
/// ledger denominator vanishes (excluded by saturation for true solutions).
std::vector<NumberFieldElem> evaluate_ledger(const ReducedSystem& rs,
                                             const std::vector<NumberFieldElem>& kept_values,
                                             const NumberField& field);

/// Evaluate a big-ring polynomial at a full assignment (indexed by big-ring
/// variable position).
NumberFieldElem evaluate_big(const MultiPoly& p, const std::vector<NumberFieldElem>& values,
                             const NumberField& field);

}  // namespace flagsolve
