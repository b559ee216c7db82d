#pragma once

#include "cubetri/types.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cubetri {

/// A vertex of the unit cube I^n as an n-bit vector. Bit j (0-based) holds
/// coordinate x_{j+1}, so the vertex string "110" (x_1=1, x_2=1, x_3=0) is the
/// mask 0b011.
class VertexMask {
  public:
    VertexMask() = default;
    VertexMask(std::uint32_t bits, int dim);

    static VertexMask zero(int dim) { return VertexMask(0, dim); }
    static VertexMask ones(int dim);            // e^n, the all-ones vertex
    static VertexMask unit(int axis, int dim);  // e_{axis+1}, 0-based axis

    std::uint32_t bits() const { return bits_; }
    int dim() const { return dim_; }
    bool bit(int axis) const { return (bits_ >> axis) & 1u; }
    int popcount() const;
    VertexMask complement() const;  // the antipodal vertex

    friend auto operator<=>(const VertexMask&, const VertexMask&) = default;

  private:
    std::uint32_t bits_ = 0;
    int dim_ = 0;
};

/// An n-simplex whose n+1 vertices are vertices of I^n. Vertices are stored in
/// strictly increasing order of mask value, so equal vertex sets compare equal.
class BinarySimplex {
  public:
    /// Sorts and validates: masks pairwise distinct, within dim bits,
    /// kMinDim <= dim <= kMaxDim, exactly dim+1 vertices.
    BinarySimplex(int dim, std::vector<std::uint32_t> masks);

    static BinarySimplex from_vertices(const std::vector<VertexMask>& vertices);

    int dim() const { return dim_; }
    int vertex_count() const { return dim_ + 1; }
    const std::vector<std::uint32_t>& masks() const { return masks_; }
    VertexMask vertex(int i) const { return VertexMask(masks_[static_cast<std::size_t>(i)], dim_); }
    std::vector<VertexMask> vertices() const;

    bool contains_mask(std::uint32_t m) const;
    int index_of(std::uint32_t m) const;  // -1 if absent

    /// Masks of the facet opposite vertex `opposite` (still sorted).
    std::vector<std::uint32_t> facet_masks(int opposite) const;

    /// True iff two vertices are bitwise complements within dim bits.
    bool has_long_diagonal() const;

    friend auto operator<=>(const BinarySimplex&, const BinarySimplex&) = default;

  private:
    int dim_ = 0;
    std::vector<std::uint32_t> masks_;
};

/// K^n anchored at `corner`: the convex hull of a cube vertex and its n
/// neighbors along the axes.
BinarySimplex make_cube_corner(VertexMask corner);

/// The antipodal simplex of the corner at `corner`: the convex hull of the n
/// neighbors of `corner` with the vertex opposite `corner`.
BinarySimplex make_antipodal(VertexMask corner);

/// Delete coordinate `axis` from a mask (dimension reduction for exterior
/// facets): bits below `axis` stay, bits above shift down by one.
std::uint32_t delete_coordinate(std::uint32_t mask, int axis);

/// Inverse of delete_coordinate: insert `value` as coordinate `axis`.
std::uint32_t insert_coordinate(std::uint32_t mask, int axis, int value);

}  // namespace cubetri
