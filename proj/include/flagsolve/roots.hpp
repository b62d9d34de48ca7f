#pragma once

/*
 * Exact real and complex root isolation for rational-coefficient univariate
 * polynomials, plus certified refinement and evaluation.
 *
 * Real roots: Sturm chains with sign-preserving primitive scaling, bisection
 * isolation.  Complex roots: exact winding numbers of p(boundary) around 0,
 * computed edge-by-edge as Cauchy indices of Im/Re via generalized Sturm
 * chains; rectangles touching the real axis are counted through their
 * conjugate-symmetric doubles.  No floating point is involved; every count is
 * exact and every returned region provably isolates one root.
 */

#include <vector>

#include "flagsolve/interval.hpp"
#include "flagsolve/unipoly.hpp"

namespace flagsolve {

/// Generalized Sturm chain of (a, b): s0 = a, s1 = b, s_{i+1} = -rem(s_{i-1},
/// s_i), each rescaled by a positive rational to a primitive integer
/// polynomial (signs preserved, so sign-variation counts are unchanged).
std::vector<UniPoly> sturm_chain(const UniPoly& a, const UniPoly& b);

/// Sign variations of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<UniPoly>& chain, const Rat& x);

/// Sign variations at +infinity (dir > 0) or -infinity (dir < 0).
int sign_variations_at_infinity(const std::vector<UniPoly>& chain, int dir);

/// Number of distinct real roots of p.
int count_real_roots(const UniPoly& p);

/// Number of distinct real roots of p in the closed interval [iv.lo, iv.hi].
int count_real_roots_in(const UniPoly& p, const RatInterval& iv);

/// Disjoint isolating intervals for the distinct real roots of p, sorted
/// increasing.  A point interval marks an exact rational root; otherwise the
/// root is interior and p changes sign between the endpoints.
std::vector<RatInterval> isolate_real_roots(const UniPoly& p);

/// Exact number of roots of p (distinct; multiplicity ignored) in a closed
/// rectangle of positive area.  Throws std::domain_error if a root lies on
/// the boundary or the winding computation degenerates there; callers should
/// perturb the rectangle.  Requires deg p >= 1.
int count_roots_in_box(const UniPoly& p, const ComplexBox& box);

/// One isolated root of a squarefree polynomial, refinable on demand.
class AlgebraicRoot {
public:
    /// `box` must isolate one root of the squarefree part of p: either a real
    /// point / sign-change interval on the axis (im == [0,0]) or a rectangle
    /// of positive area containing one nonreal root and not meeting the axis.
    AlgebraicRoot(const UniPoly& p, ComplexBox box);

    const UniPoly& poly() const { return p_; }
    const ComplexBox& box() const { return box_; }
    bool is_real() const { return real_; }
    /// For real roots: the isolating interval (im is exactly [0,0]).
    RatInterval real_interval() const { return box_.re(); }

    /// Shrink the box until both sides have width <= bound.
    void refine(const Rat& bound);

    /// Certified evaluation of g at the root: refines until the enclosure of
    /// g(root) has both widths <= bound.
    ComplexBox evaluate(const UniPoly& g, const Rat& bound);

private:
    UniPoly p_;  // squarefree, primitive integer coefficients
    ComplexBox box_;
    bool real_;
};

/// Isolate every distinct root of p (real and complex; conjugates included).
/// Boxes are pairwise disjoint; order is by (Re lower bound, Im lower bound).
std::vector<AlgebraicRoot> isolate_roots(const UniPoly& p);

/// Convenience: the boxes of isolate_roots(p).
std::vector<ComplexBox> isolate_complex_roots(const UniPoly& p);

/// Interval Horner evaluation with outward rounding at precision `prec`.
RatInterval poly_eval_interval(const UniPoly& p, const RatInterval& x, unsigned prec);
ComplexBox poly_eval_box(const UniPoly& p, const ComplexBox& z, unsigned prec);

/// Strict upper bound on the modulus of every root (Cauchy bound), rounded up
/// to an integer >= 2.
Int root_modulus_bound(const UniPoly& p);

}  // namespace flagsolve
