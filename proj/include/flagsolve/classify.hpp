#pragma once
/**
 * Classification of zero-dimensional solution components and certified
 * volumes.
 *
 * A component is an irreducible eliminant f over Q together with the value of
 * every cross-ratio coordinate as an element of Q[Y]/(f).  Classification
 * decides, exactly where possible and by certified interval arithmetic where
 * not, which of the component's conjugate solutions are real, carry the
 * geometry of a hyperbolic structure, or carry a CR structure, and computes a
 * certified enclosure of the volume of each solution.
 */

#include <vector>

#include "flagsolve/groebner.hpp"
#include "flagsolve/holonomy.hpp"
#include "flagsolve/interval.hpp"
#include "flagsolve/multipoly.hpp"
#include "flagsolve/numberfield.hpp"
#include "flagsolve/rational.hpp"
#include "flagsolve/roots.hpp"
#include "flagsolve/unipoly.hpp"

namespace flagsolve {

/// The twelve cross-ratio coordinates of every tetrahedron at the solutions
/// of one irreducible component.  coords[12*t + k] lies in Q[Y]/(eliminant);
/// k runs over the ordered vertex pairs of tetrahedron t in lexicographic
/// order (1,2),(1,3),(1,4),(2,1),(2,3),(2,4),(3,1),(3,2),(3,4),(4,1),(4,2),
/// (4,3).
struct ComponentSolutions {
    UniPoly eliminant;
    std::vector<NumberFieldElem> coords;
};

/// Number of tetrahedra described by the coordinate vector.
std::size_t component_tets(const ComponentSolutions& comp);

/// Index of coordinate (i,j) of tetrahedron t inside ComponentSolutions.
std::size_t coord_index(int tet, int i, int j);

struct ClassificationFlags {
    bool is_real = false;
    bool is_hyperbolic = false;
    bool is_cr = false;
    bool is_pu21_verified = false;
};

/// Per-root real flags, aligned with isolate_roots(eliminant).  Cross-checks
/// the box count against the Sturm count and throws std::logic_error on a
/// mismatch.  Every coordinate is a rational polynomial in the eliminant
/// variable, so a real root forces every coordinate real.
std::vector<bool> classify_real(const UniPoly& eliminant,
                                const std::vector<AlgebraicRoot>& roots);

/// Exact component-level test: in every tetrahedron the four survivor
/// coordinates z12, z21, z34, z43 coincide as elements of Q[Y]/(f).
bool classify_hyperbolic(const ComponentSolutions& comp);

/// Outcome of the CR subsystem for one component.
struct CrResult {
    /// Q[x, y] with Y = x + i y.
    Ring ring;
    /// Real/imaginary splits of the eliminant plus the opposite-edge rows.
    std::vector<MultiPoly> equations;
    /// True when some face's triple ratio equals -1 identically on the
    /// component (an exact field computation); no root is then CR.
    bool degenerate = false;
    /// Aligned with isolate_roots(eliminant).
    std::vector<bool> cr_root;
};

/// Decides which roots carry a CR structure.  The real and imaginary parts of
/// every opposite-edge condition z_ij z_ji = conj(z_kl z_lk), together with
/// the split of the eliminant itself, form a system over Q[x, y]; its real
/// solutions with y != 0 are matched back to the isolated roots.  Faces with
/// triple ratio -1 disqualify the whole component.  `roots` may be refined.
CrResult classify_cr(const ComponentSolutions& comp, std::vector<AlgebraicRoot>& roots,
                     const GroebnerBudget& budget = {});

/// Certified enclosure of the Bloch-Wigner function
///     D(z) = arg(1 - z) log|z| + Im Li_2(z)
/// with width at most target_width.  Boxes that are exactly real (including
/// the points 0 and 1) give the exact interval [0, 0].  Throws
/// std::domain_error when the box contains 0 or 1 without being that point,
/// or is too wide to resolve; callers refine the box and retry.
RatInterval bloch_wigner(const ComplexBox& z, const Rat& target_width);

/// Certified volume of the solution at `root`: one quarter of the sum of D
/// over the survivor coordinates z12, z21, z34, z43 of every tetrahedron.
/// Refines the root as needed; result width is at most target_width.
RatInterval solution_volume(const ComponentSolutions& comp, AlgebraicRoot& root,
                            const Rat& target_width);

/// Certified-numeric check that every generator carries the hermitian form J
/// to a scalar multiple of itself at the given root: each entry of
/// g^H J g - mu J is enclosed in [-tolerance, tolerance] for the witness
/// scalar mu read off a provably nonzero entry of J.  Layered on top of the
/// exact CR classification; returns false when the defect cannot be bounded.
bool certify_form_preservation(const std::vector<FieldMatrix3>& generators,
                               const FieldMatrix3& form, AlgebraicRoot& root,
                               const Rat& tolerance);

/// Full per-root classification of a component: real flags, the exact
/// hyperbolic verdict broadcast to every root, CR flags, and certified
/// volumes.  PU(2,1) verification needs holonomy data and is left false here;
/// callers with generator matrices layer it on with
/// certify_form_preservation.
struct ComponentClassification {
    std::vector<AlgebraicRoot> roots;
    std::vector<ClassificationFlags> flags;
    std::vector<RatInterval> volumes;
};

ComponentClassification classify_component(const ComponentSolutions& comp,
                                           const Rat& volume_width = Rat(1, 1000000),
                                           const GroebnerBudget& budget = {});

}  // namespace flagsolve
