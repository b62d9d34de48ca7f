#pragma once

/*
 * Ideal triangulations with peripheral-curve data.
 *
 * A triangulation is a set of tetrahedra with vertices labelled 1..4 and a
 * perfect matching of their faces; each face pairing lists the two faces as
 * ordered triples, giving the vertex correspondence explicitly.  Peripheral
 * curves (and optional fundamental-group generator paths) are sequences of
 * "states": a tetrahedron together with an ordered face triple.  Consecutive
 * states differ by a reordering of the same face, by swapping one vertex for
 * the tetrahedron's fourth vertex, or by a face pairing (a crossing).
 *
 * Edge classes are derived, not stated: walking around an edge alternates
 * "exit through the other face containing the edge" with "cross to the glued
 * tetrahedron", and the resulting oriented-edge cycles drive the gluing
 * equations.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagsolve {

/// A tetrahedron plus an ordered triple of its vertex labels (1..4).
struct PathState {
    int tet = 0;
    std::array<int, 3> triple = {0, 0, 0};

    bool operator==(const PathState& o) const { return tet == o.tet && triple == o.triple; }
    bool operator!=(const PathState& o) const { return !(*this == o); }
    /// The vertex of the tetrahedron not named in the triple.
    int missing_vertex() const;
    std::string str() const;  // e.g. "(0:324)"
};

/// Face (a,b,c) of tet_a glued to face (a',b',c') of tet_b, sending a to a',
/// b to b', c to c' and fourth vertex to fourth vertex.
struct FacePairing {
    int tet_a = 0;
    std::array<int, 3> face_a = {0, 0, 0};
    int tet_b = 0;
    std::array<int, 3> face_b = {0, 0, 0};
};

struct Cusp {
    std::vector<PathState> meridian;
    std::vector<PathState> longitude;
};

/// A fundamental-group generator: an open path plus the conjugator that
/// drags its endpoints back to the common base face.
struct GeneratorPath {
    std::vector<PathState> path;
    std::vector<PathState> conjugator;
};

struct Triangulation {
    std::string name;
    int num_tets = 0;
    std::vector<FacePairing> pairings;
    std::vector<Cusp> cusps;
    std::optional<PathState> base_face;
    std::vector<GeneratorPath> generators;
};

/// An oriented edge of one tetrahedron.
struct TetEdge {
    int tet = 0;
    int from = 0;
    int to = 0;
    bool operator==(const TetEdge& o) const {
        return tet == o.tet && from == o.from && to == o.to;
    }
};

/// Oriented edges met in order when walking once around a geometric edge.
struct EdgeClass {
    std::vector<TetEdge> cycle;
};

/// Parse the plain-text format; throws std::runtime_error with a line number
/// on malformed input.
Triangulation parse_triangulation(const std::string& text);

/// Reads a file, dispatching on extension: ".json" uses the JSON mirror,
/// anything else the plain-text format.
Triangulation load_triangulation(const std::string& path);

std::string triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& json_text);

/// Structural checks: labels in range, every face glued exactly once,
/// orientation-compatible pairings, legal and closed peripheral paths.
/// Throws std::runtime_error describing the first violation.
void validate_triangulation(const Triangulation& t);

/// Orbits of oriented edges; every oriented edge of every tetrahedron occurs
/// in exactly one cycle.  Deterministic order.
std::vector<EdgeClass> edge_classes(const Triangulation& t);

/// The pairing (with orientation: false = stated direction, true = reverse)
/// that glues the given face triple, if any.
struct PairingSide {
    std::size_t index;
    bool reversed;
};
std::optional<PairingSide> find_pairing(const Triangulation& t, int tet,
                                        const std::array<int, 3>& face);

/// Image of an ordered triple under the pairing side's vertex map; the triple
/// need not be the stated one, only supported on the glued face (the fourth
/// vertex also maps across).
PathState map_across(const Triangulation& t, const PairingSide& side,
                     const PathState& state);

}  // namespace flagsolve
