#include "cubetri/simplex.hpp"

#include <algorithm>
#include <bit>

namespace cubetri {

VertexMask::VertexMask(std::uint32_t bits, int dim) : bits_(bits), dim_(dim) {
    if (dim < kMinDim || dim > kMaxDim)
        throw std::invalid_argument("VertexMask: dimension " + std::to_string(dim) +
                                    " outside supported range [" + std::to_string(kMinDim) + ", " +
                                    std::to_string(kMaxDim) + "]");
    if (bits >> dim)
        throw std::invalid_argument("VertexMask: bits set above dimension " + std::to_string(dim));
}

VertexMask VertexMask::ones(int dim) {
    if (dim < kMinDim || dim > kMaxDim)
        throw std::invalid_argument("VertexMask: dimension out of range");
    return VertexMask((1u << dim) - 1u, dim);
}

VertexMask VertexMask::unit(int axis, int dim) {
    if (axis < 0 || axis >= dim)
        throw std::invalid_argument("VertexMask: axis out of range");
    return VertexMask(1u << axis, dim);
}

int VertexMask::popcount() const { return std::popcount(bits_); }

VertexMask VertexMask::complement() const {
    return VertexMask(~bits_ & ((1u << dim_) - 1u), dim_);
}

BinarySimplex::BinarySimplex(int dim, std::vector<std::uint32_t> masks)
    : dim_(dim), masks_(std::move(masks)) {
    if (dim < kMinDim || dim > kMaxDim)
        throw std::invalid_argument("BinarySimplex: dimension " + std::to_string(dim) +
                                    " outside supported range");
    if (masks_.size() != static_cast<std::size_t>(dim) + 1)
        throw std::invalid_argument("BinarySimplex: expected " + std::to_string(dim + 1) +
                                    " vertices, got " + std::to_string(masks_.size()));
    std::sort(masks_.begin(), masks_.end());
    const std::uint32_t limit = (dim == 32) ? ~0u : (1u << dim);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (masks_[i] >= limit)
            throw std::invalid_argument("BinarySimplex: vertex mask above dimension");
        if (i > 0 && masks_[i] == masks_[i - 1])
            throw std::invalid_argument("BinarySimplex: duplicate vertex");
    }
}

BinarySimplex BinarySimplex::from_vertices(const std::vector<VertexMask>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("BinarySimplex: no vertices");
    const int dim = vertices.front().dim();
    std::vector<std::uint32_t> masks;
    masks.reserve(vertices.size());
    for (const auto& v : vertices) {
        if (v.dim() != dim) throw std::invalid_argument("BinarySimplex: mixed vertex dimensions");
        masks.push_back(v.bits());
    }
    return BinarySimplex(dim, std::move(masks));
}

std::vector<VertexMask> BinarySimplex::vertices() const {
    std::vector<VertexMask> out;
    out.reserve(masks_.size());
    for (std::uint32_t m : masks_) out.emplace_back(m, dim_);
    return out;
}

bool BinarySimplex::contains_mask(std::uint32_t m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

int BinarySimplex::index_of(std::uint32_t m) const {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), m);
    if (it == masks_.end() || *it != m) return -1;
    return static_cast<int>(it - masks_.begin());
}

std::vector<std::uint32_t> BinarySimplex::facet_masks(int opposite) const {
    std::vector<std::uint32_t> out;
    out.reserve(masks_.size() - 1);
    for (int i = 0; i < static_cast<int>(masks_.size()); ++i)
        if (i != opposite) out.push_back(masks_[static_cast<std::size_t>(i)]);
    return out;
}

bool BinarySimplex::has_long_diagonal() const {
    const std::uint32_t all = (1u << dim_) - 1u;
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (std::size_t j = i + 1; j < masks_.size(); ++j)
            if ((masks_[i] ^ masks_[j]) == all) return true;
    return false;
}

BinarySimplex make_cube_corner(VertexMask corner) {
    const int n = corner.dim();
    std::vector<std::uint32_t> masks{corner.bits()};
    for (int a = 0; a < n; ++a) masks.push_back(corner.bits() ^ (1u << a));
    return BinarySimplex(n, std::move(masks));
}

BinarySimplex make_antipodal(VertexMask corner) {
    const int n = corner.dim();
    std::vector<std::uint32_t> masks{corner.complement().bits()};
    for (int a = 0; a < n; ++a) masks.push_back(corner.bits() ^ (1u << a));
    return BinarySimplex(n, std::move(masks));
}

std::uint32_t delete_coordinate(std::uint32_t mask, int axis) {
    const std::uint32_t low = mask & ((1u << axis) - 1u);
    return low | ((mask >> (axis + 1)) << axis);
}

std::uint32_t insert_coordinate(std::uint32_t mask, int axis, int value) {
    const std::uint32_t low = mask & ((1u << axis) - 1u);
    std::uint32_t out = low | ((mask >> axis) << (axis + 1));
    if (value) out |= 1u << axis;
    return out;
}

}  // namespace cubetri
