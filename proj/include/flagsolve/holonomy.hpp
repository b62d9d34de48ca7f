#pragma once

/*
 * Coordinate-change matrices along paths in a decorated triangulation.
 *
 * Each elementary step between path states (cyclic rotation or transposition
 * of a face triple, a turn around an edge to the opposite face, or a crossing
 * through a face pairing) acts on the projective basis attached to the state
 * by an explicit 3x3 matrix whose entries are cross-ratio monomials or their
 * simple combinations.  Multiplying these matrices along a path (last step
 * first) gives the holonomy of the path; the group element of a closed loop
 * is the inverse of that product.
 *
 * All symbolic entries are quotients of a polynomial by a single monomial:
 * denominators only ever pick up cross-ratio factors, which are units on the
 * solution torus.  This class of fractions is closed under the matrix
 * operations used here, including inverses (every step matrix has monomial
 * determinant).
 *
 * The evaluated layer works over Q[Y]/(f): peripheral products become upper
 * triangular with middle eigenvalue 1, boundary eigenvalues are read off the
 * diagonal, and the rank of the peripheral subgroup is decided exactly, both
 * in the unipotent case (row-echelon test plus rational-dependence witness)
 * and in the general torsion-eigenvalue case (relation-lattice computation).
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flagsolve/multipoly.hpp"
#include "flagsolve/numberfield.hpp"
#include "flagsolve/triangulation.hpp"

namespace flagsolve {

/// Quotient num/den of multivariate polynomials where den is a single
/// monomial with coefficient 1 (kept normalised: common monomial factors
/// cancelled, the denominator's coefficient folded into the numerator).
class PolyFraction {
public:
    PolyFraction() = default;

    /// den must be a single-term polynomial; normalises.
    PolyFraction(MultiPoly num, MultiPoly den);

    static PolyFraction zero(const Ring& ring);
    static PolyFraction one(const Ring& ring);
    static PolyFraction constant(const Ring& ring, const Rat& c);
    static PolyFraction from_poly(MultiPoly p);
    static PolyFraction variable(const Ring& ring, std::size_t i);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Ring& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    PolyFraction operator+(const PolyFraction& o) const;
    PolyFraction operator-(const PolyFraction& o) const;
    PolyFraction operator*(const PolyFraction& o) const;
    PolyFraction operator-() const;

    /// Reciprocal; requires a single-term numerator (throws
    /// std::domain_error otherwise -- zero or a genuinely polynomial
    /// numerator has no monomial-denominator reciprocal).
    PolyFraction inverse() const;

    /// Exact equality as rational functions (cross-multiplied).
    bool operator==(const PolyFraction& o) const;
    bool operator!=(const PolyFraction& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalise();

    MultiPoly num_;
    MultiPoly den_;  // single term, coefficient 1
};

/// 3x3 matrix of PolyFraction entries, row-major.
class SymbolicMatrix3 {
public:
    SymbolicMatrix3() = default;

    static SymbolicMatrix3 identity(const Ring& ring);
    static SymbolicMatrix3 zero(const Ring& ring);

    const PolyFraction& at(int i, int j) const { return e_[3 * i + j]; }
    PolyFraction& at(int i, int j) { return e_[3 * i + j]; }

    SymbolicMatrix3 operator*(const SymbolicMatrix3& o) const;
    bool operator==(const SymbolicMatrix3& o) const;
    bool operator!=(const SymbolicMatrix3& o) const { return !(*this == o); }

    PolyFraction det() const;
    /// Adjugate over determinant; requires the determinant to have a
    /// single-term numerator (true for every path matrix).
    SymbolicMatrix3 inverse() const;

    /// Equal up to one nonzero rational-function scalar.
    bool projectively_equal(const SymbolicMatrix3& o) const;

    bool is_upper_triangular() const;

    std::string str() const;

private:
    std::array<PolyFraction, 9> e_;
};

/// Sign of the permutation (a,b,c,d) of {1,2,3,4}: +1 even, -1 odd.
int permutation_sign(int a, int b, int c, int d);

/// Sign of (triple, missing vertex) -- the orientation class of the state.
int state_sign(const PathState& s);

/// Triple ratio of the ordered face (a,b,c) of tetrahedron `tet` (fourth
/// vertex d): -z_ad z_bd z_cd when (a,b,c,d) is even, its reciprocal
/// otherwise.  Invariant under cyclic rotation, inverted by transposition.
PolyFraction triple_ratio(const Ring& ring, int tet, int a, int b, int c);

/// The matrix of the rotation (abc) -> (bca), as a function of the face's
/// triple ratio X: [[X, X+1, 1], [-X, -X, 0], [X, 0, 0]].
SymbolicMatrix3 cyclic_matrix(const PolyFraction& X);

/// The matrix of the transposition (abc) -> (bac): the antidiagonal
/// permutation matrix.
SymbolicMatrix3 transposition_matrix(const Ring& ring);

/// Turn (i,j,k) -> (i,j,l) around the edge (i,j): diag(1/z_ji, 1, z_ij) when
/// the source state is even, the inverse diagonal when it is odd.
SymbolicMatrix3 left_turn_matrix(const Ring& ring, int tet, int i, int j, bool even_source);

/// Turn (i,l,j) -> (i,k,j) around the edge (i,j), for an even source
/// ((i,j,k,l) even): upper triangular with rows
///   [ z_kl z_lk / z_ij,  -z_kl/(z_ij z_lj) - 1/z_ki,  -z_il/z_ki ]
///   [ 0,                 1,                           z_il       ]
///   [ 0,                 0,                           1/z_ij     ].
/// For an odd source the inverse of the reversed turn is used.
SymbolicMatrix3 right_turn_matrix(const Ring& ring, int tet, int i, int j, int k, int l,
                                  bool even_source);

/// Matrix of one elementary step between consecutive path states; throws
/// std::runtime_error naming both states when the transition is not one of
/// the legal step shapes.
SymbolicMatrix3 step_matrix(const Triangulation& t, const Ring& ring, const PathState& from,
                            const PathState& to);

/// Ordered product of the step matrices of a path, last step leftmost.
/// Empty and single-state paths give the identity.
SymbolicMatrix3 path_matrix(const Triangulation& t, const Ring& ring,
                            const std::vector<PathState>& path);

/// True when the path closes up: last state equal to the first, or glued to
/// it by a face pairing.
bool path_closes(const Triangulation& t, const std::vector<PathState>& path);

/// The four boundary eigenvalue functions of a cusp: the (1,1) and (3,3)
/// entries of the meridian and longitude products, normalised so the middle
/// diagonal entry is 1.  Requires both products upper triangular.
struct BoundaryEigenvalues {
    PolyFraction A;      // meridian (1,1)
    PolyFraction Astar;  // meridian (3,3)
    PolyFraction B;      // longitude (1,1)
    PolyFraction Bstar;  // longitude (3,3)
};
BoundaryEigenvalues boundary_eigenvalues(const Triangulation& t, const Ring& ring,
                                         std::size_t cusp);

/// Group generators from the stored generator paths: each open path is a
/// loop at its start face, dragged to the base face by its conjugator; the
/// group element is the inverse of the conjugated coordinate-change product,
/// i.e. M(c)^-1 M(p)^-1 M(c).
std::vector<SymbolicMatrix3> fundamental_group_generators(const Triangulation& t,
                                                          const Ring& ring);

/// ----- evaluated layer -----

/// 3x3 matrix over Q[Y]/(f).
class FieldMatrix3 {
public:
    FieldMatrix3() = default;

    static FieldMatrix3 identity(const NumberField& field);
    /// Nine entries, row-major, all in the same field.
    static FieldMatrix3 from_entries(const NumberField& field,
                                     std::vector<NumberFieldElem> entries);

    const NumberField& field() const { return field_; }
    const NumberFieldElem& at(int i, int j) const { return a_[3 * i + j]; }

    FieldMatrix3 operator*(const FieldMatrix3& o) const;
    bool operator==(const FieldMatrix3& o) const;
    bool operator!=(const FieldMatrix3& o) const { return !(*this == o); }

    NumberFieldElem det() const;
    FieldMatrix3 inverse() const;  // throws std::domain_error when singular
    FieldMatrix3 pow(long n) const;

    bool is_identity() const;
    bool is_upper_triangular() const;
    /// Upper triangular with all diagonal entries 1.
    bool is_unit_upper_triangular() const;

    std::string str(const std::string& var = "y") const;

private:
    NumberField field_;
    std::vector<NumberFieldElem> a_;  // nine entries, row-major
};

/// Scalar r with m == r * n, when one exists (projective equality witness).
std::optional<NumberFieldElem> projective_ratio(const FieldMatrix3& m, const FieldMatrix3& n);

/// Evaluate a symbolic matrix at a full variable assignment (indexed like
/// the symbolic ring's variables); throws std::domain_error when an entry's
/// denominator vanishes.
FieldMatrix3 evaluate_matrix(const SymbolicMatrix3& m,
                             const std::vector<NumberFieldElem>& values,
                             const NumberField& field);

/// The strict upper entries (a, b, c) of a unit upper-triangular matrix
/// [[1,a,c],[0,1,b],[0,0,1]]; throws std::domain_error on non-unipotent
/// input.
struct UnipotentUpperTriangular {
    NumberFieldElem a;
    NumberFieldElem b;
    NumberFieldElem c;
};
UnipotentUpperTriangular unipotent_entries(const FieldMatrix3& m);

/// Result of the peripheral-subgroup rank computation.  When has_witness is
/// set, gM^meridian_power == gL^longitude_power is an exact nontrivial
/// relation (for rank 0 both matrices are the identity and no witness is
/// reported).
struct PeripheralRank {
    int rank = 0;
    bool has_witness = false;
    long meridian_power = 0;
    long longitude_power = 0;
};

/// Unipotent pair: rank of [[a,a'],[b,b'],[2c-ab,2c'-a'b']] over the field;
/// on rank 1 the rational-dependence test yields the power witness.
PeripheralRank peripheral_rank(const UnipotentUpperTriangular& gM,
                               const UnipotentUpperTriangular& gL);

/// General upper-triangular pair with middle eigenvalue 1: computes the full
/// lattice of relations gM^n = gL^n' exactly (torsion eigenvalues resolved
/// through cyclotomic minimal polynomials, unipotent parts through the
/// rational-dependence lattice) and returns the minimal number of generators
/// of the peripheral image.  Throws std::logic_error when both matrices have
/// infinite-order eigenvalues (no relation decision procedure here).
PeripheralRank peripheral_rank_general(const FieldMatrix3& gM, const FieldMatrix3& gL);

/// ----- hermitian machinery (degree <= 2 coefficient fields) -----

/// The nontrivial automorphism of a degree-2 field Q[Y]/(Y^2+pY+q)
/// (Y -> -p-Y), the identity on the rationals; complex conjugation under
/// either embedding when the field is imaginary quadratic.  Throws
/// std::domain_error for degree > 2.
NumberFieldElem quadratic_conjugate(const NumberFieldElem& x);

/// Conjugate-transpose entrywise via quadratic_conjugate.
FieldMatrix3 conjugate_transpose(const FieldMatrix3& m);

/// The change of coordinates diag(-(1+Z0)/Z0, -1, 1) built from the base
/// face's triple ratio, and the transported hermitian form
/// J0 = conj(A)^-T J A^-1 with J the antidiagonal unit form.  Requires
/// Z0 != 0, -1 and a coefficient field of degree <= 2.
struct HermitianData {
    FieldMatrix3 conjugator;
    FieldMatrix3 form;
};
HermitianData hermitian_conjugator(const NumberFieldElem& Z0);

/// Whether g^* . form . g is a nonzero scalar multiple of form (projective
/// preservation of the hermitian form).
bool preserves_form_projectively(const FieldMatrix3& g, const FieldMatrix3& form);

}  // namespace flagsolve
