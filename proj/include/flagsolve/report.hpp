#pragma once
/**
 * Census report structures and their serialization.
 *
 * A report captures one full run over a triangulation: the holonomy
 * condition, the reduced system, the saturated ideal's dimension and degree,
 * and for zero-dimensional ideals the per-component solution data with flags,
 * certified volumes, peripheral ranks, and evaluated group generators.
 * Identical inputs produce byte-identical reports in both renderings.
 */

#include <string>
#include <vector>

#include "flagsolve/classify.hpp"
#include "flagsolve/equations.hpp"
#include "flagsolve/holonomy.hpp"
#include "flagsolve/interval.hpp"
#include "flagsolve/numberfield.hpp"
#include "flagsolve/roots.hpp"
#include "flagsolve/unipoly.hpp"

namespace flagsolve {

/// Rank of the image of one cusp's peripheral subgroup at one component.
struct CuspRankRecord {
    bool resolved = false;  // false: no decision procedure applied
    PeripheralRank rank;
};

/// One irreducible component of the saturated zero-dimensional ideal.
struct ComponentRecord {
    UniPoly eliminant;
    long multiplicity = 1;
    /// Values of every system variable as elements of Q[Y]/(eliminant),
    /// aligned with `variables` in the parent report.
    std::vector<NumberFieldElem> values;
    std::vector<AlgebraicRoot> roots;
    std::vector<ClassificationFlags> flags;
    std::vector<RatInterval> volumes;
    std::vector<CuspRankRecord> cusp_ranks;
    /// Fundamental-group generators evaluated on this component.
    std::vector<FieldMatrix3> generators;
};

struct SolutionReport {
    std::string input_name;
    std::string input_digest;
    int num_tets = 0;
    std::size_t num_cusps = 0;
    HolonomyCondition condition;

    /// Big-ring variable names; component values align with this list.
    std::vector<std::string> variables;
    std::vector<std::string> kept;
    std::size_t equation_count = 0;
    bool empty_system = false;
    std::string contradiction;

    long dimension = -1;
    long degree = 0;
    bool decomposed = false;  // true when a zero-dimensional ideal was split
    std::vector<ComponentRecord> components;

    std::string status = "complete";
    std::vector<std::string> dumped_equations;  // --dump-system only
};

/// 64-bit FNV-1a content digest, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

/// Deterministic JSON rendering (schema_version 1).
std::string report_json(const SolutionReport& r);

/// Human-readable rendering of the same data.
std::string report_text(const SolutionReport& r);

}  // namespace flagsolve
