#pragma once

#include "cubetri/simplex.hpp"
#include "cubetri/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cubetri {

enum class AngleTag { Degenerate, Obtuse, NonobtuseRight, Acute };

/// Dihedral-angle classification of a simplex. The dihedral angle between two
/// facets equals pi minus the angle between their outward normals, so the sign
/// pattern of pairwise normal dot products decides everything: some positive
/// product means an obtuse pair, a zero product an exactly right pair.
struct AngleClass {
    AngleTag tag = AngleTag::Degenerate;
    std::vector<std::pair<int, int>> right_pairs;  // facet indices (= opposite-vertex indices)

    bool nonobtuse() const { return tag == AngleTag::Acute || tag == AngleTag::NonobtuseRight; }
};

const char* to_string(AngleTag tag);

/// Outward normal of the facet opposite one vertex: gcd-reduced integer vector,
/// orthogonal to every edge inside the facet, with normal . (v_opposite - f) < 0.
struct FacetNormal {
    int opposite_vertex = 0;
    IntVector normal;
};

struct FacetProjection {
    std::vector<Rational> point;        // orthogonal projection onto the facet's affine hull
    std::vector<Rational> barycentric;  // coordinates of the point within the facet
    bool inside = false;                // all barycentric coordinates >= 0 (closed facet)
};

/// Determinant of the n x n matrix whose columns are v_i - v_0 in canonical
/// vertex order. Zero iff the simplex is degenerate; |det|/n! is the volume.
std::int64_t determinant(const BinarySimplex& s);

/// One FacetNormal per vertex. Throws std::domain_error on degenerate input.
std::vector<FacetNormal> outward_normals(const BinarySimplex& s);

AngleClass angle_class(const BinarySimplex& s);

/// Same verdict as angle_class(s).nonobtuse(), with early exit on the first
/// obtuse pair; degenerate simplices count as not nonobtuse.
bool nonobtuse(const BinarySimplex& s);

/// Orthogonal projection of vertex k onto the affine hull of its opposite
/// facet, in exact rationals. `inside` is membership in the closed facet.
FacetProjection project_vertex_onto_facet(const BinarySimplex& s, int k);

/// Barycentric coordinates of `point` with respect to the affinely independent
/// vertex masks `facet` (count may be anywhere in 1..dim+1). Returns nullopt if
/// the point is outside the affine hull.
std::optional<std::vector<Rational>> barycentric_coordinates(
    int dim, const std::vector<std::uint32_t>& facet, const std::vector<Rational>& point);

namespace detail {

// Raw-mask entry points used by the tight enumeration loops; `m` holds n+1
// masks. Same results as the BinarySimplex overloads.
std::int64_t det_masks(const std::uint32_t* m, int n);
bool nonobtuse_masks(const std::uint32_t* m, int n);

// Gcd-reduced outward normal of the facet opposite vertex `opposite`.
IntVector facet_normal_masks(const std::uint32_t* m, int n, int opposite);

}  // namespace detail

}  // namespace cubetri
