#include "cubetri/geometry.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cubetri {

namespace {

using Buf = std::array<std::int64_t, static_cast<std::size_t>(kMaxDim) * kMaxDim>;

// Fraction-free Gaussian elimination (Bareiss); exact for integer input.
std::int64_t bareiss(std::int64_t* a, int n) {
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i * n + k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

std::int64_t det_dense(const std::int64_t* a, int n) {
    switch (n) {
        case 0: return 1;
        case 1: return a[0];
        case 2: return a[0] * a[3] - a[1] * a[2];
        case 3:
            return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                   a[2] * (a[3] * a[7] - a[4] * a[6]);
        default: {
            Buf buf;
            std::copy(a, a + n * n, buf.begin());
            return bareiss(buf.data(), n);
        }
    }
}

// Edge matrix M[r][c] = coordinate r of (v_{c+1} - v_0), row-major.
void edge_matrix(const std::uint32_t* m, int n, std::int64_t* out) {
    for (int r = 0; r < n; ++r) {
        const std::int64_t v0 = (m[0] >> r) & 1u;
        for (int c = 0; c < n; ++c)
            out[r * n + c] = static_cast<std::int64_t>((m[c + 1] >> r) & 1u) - v0;
    }
}

// Row k of the adjugate of M: adj[k][c] = (-1)^(k+c) * minor(M without row c, column k).
void adjugate_row(const std::int64_t* mat, int n, int k, std::int64_t* out) {
    Buf minor;
    for (int c = 0; c < n; ++c) {
        int mr = 0;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            int mc = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[static_cast<std::size_t>(mr) * (n - 1) + mc] = mat[r * n + j];
                ++mc;
            }
            ++mr;
        }
        const std::int64_t d = det_dense(minor.data(), n - 1);
        out[c] = ((k + c) % 2 == 0) ? d : -d;
    }
}

// All n+1 outward normals, not gcd-reduced, indexed by opposite vertex. The
// normal opposite vertex 0 is minus the sum of the others, which saves its
// cofactor pass.
bool normals_unreduced(const std::uint32_t* m, int n, std::vector<IntVector>& out,
                       std::int64_t* det_out) {
    Buf mat;
    edge_matrix(m, n, mat.data());
    Buf detbuf = mat;
    const std::int64_t det = bareiss(detbuf.data(), n);
    if (det_out) *det_out = det;
    if (det == 0) return false;
    const std::int64_t s = det > 0 ? 1 : -1;

    out.assign(static_cast<std::size_t>(n) + 1, IntVector(static_cast<std::size_t>(n), 0));
    std::int64_t row[kMaxDim];
    for (int k = 1; k <= n; ++k) {
        adjugate_row(mat.data(), n, k - 1, row);
        for (int c = 0; c < n; ++c) {
            out[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = -s * row[c];
            out[0][static_cast<std::size_t>(c)] += s * row[c];
        }
    }
    return true;
}

void gcd_reduce(IntVector& v) {
    std::int64_t g = 0;
    for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (std::int64_t& x : v) x /= g;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

const char* to_string(AngleTag tag) {
    switch (tag) {
        case AngleTag::Degenerate: return "Degenerate";
        case AngleTag::Obtuse: return "Obtuse";
        case AngleTag::NonobtuseRight: return "NonobtuseRight";
        case AngleTag::Acute: return "Acute";
    }
    return "?";
}

std::int64_t determinant(const BinarySimplex& s) {
    return detail::det_masks(s.masks().data(), s.dim());
}

std::vector<FacetNormal> outward_normals(const BinarySimplex& s) {
    std::vector<IntVector> raw;
    if (!normals_unreduced(s.masks().data(), s.dim(), raw, nullptr))
        throw std::domain_error("outward_normals: degenerate simplex");
    std::vector<FacetNormal> out;
    out.reserve(raw.size());
    for (int k = 0; k <= s.dim(); ++k) {
        gcd_reduce(raw[static_cast<std::size_t>(k)]);
        out.push_back(FacetNormal{k, std::move(raw[static_cast<std::size_t>(k)])});
    }
    return out;
}

AngleClass angle_class(const BinarySimplex& s) {
    std::vector<IntVector> raw;
    if (!normals_unreduced(s.masks().data(), s.dim(), raw, nullptr))
        return AngleClass{AngleTag::Degenerate, {}};
    AngleClass out;
    bool obtuse = false;
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            const std::int64_t d = dot(raw[i], raw[j]);
            if (d > 0)
                obtuse = true;
            else if (d == 0)
                out.right_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    if (obtuse) {
        out.tag = AngleTag::Obtuse;
        out.right_pairs.clear();
    } else {
        out.tag = out.right_pairs.empty() ? AngleTag::Acute : AngleTag::NonobtuseRight;
    }
    return out;
}

bool nonobtuse(const BinarySimplex& s) {
    return detail::nonobtuse_masks(s.masks().data(), s.dim());
}

FacetProjection project_vertex_onto_facet(const BinarySimplex& s, int k) {
    const int n = s.dim();
    if (k < 0 || k > n) throw std::invalid_argument("project_vertex_onto_facet: bad vertex index");
    const IntVector nu = detail::facet_normal_masks(s.masks().data(), n, k);

    const std::uint32_t vk = s.masks()[static_cast<std::size_t>(k)];
    const std::uint32_t f0 = s.masks()[k == 0 ? 1 : 0];
    std::int64_t num = 0, den = 0;
    for (int c = 0; c < n; ++c) {
        const std::int64_t diff =
            static_cast<std::int64_t>((vk >> c) & 1u) - static_cast<std::int64_t>((f0 >> c) & 1u);
        num += nu[static_cast<std::size_t>(c)] * diff;
        den += nu[static_cast<std::size_t>(c)] * nu[static_cast<std::size_t>(c)];
    }
    const Rational t(num, den);

    FacetProjection out;
    out.point.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        out.point.push_back(Rational(static_cast<int>((vk >> c) & 1u)) -
                            t * nu[static_cast<std::size_t>(c)]);

    auto lambda = barycentric_coordinates(n, s.facet_masks(k), out.point);
    if (!lambda)
        throw std::domain_error("project_vertex_onto_facet: projection left the affine hull");
    out.barycentric = std::move(*lambda);
    out.inside = true;
    for (const Rational& l : out.barycentric)
        if (l < 0) out.inside = false;
    return out;
}

std::optional<std::vector<Rational>> barycentric_coordinates(
    int dim, const std::vector<std::uint32_t>& facet, const std::vector<Rational>& point) {
    const std::size_t k = facet.size();
    const std::size_t rows = static_cast<std::size_t>(dim) + 1;
    // Augmented system: coordinate equations plus the affine sum-to-one row.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k + 1));
    for (int r = 0; r < dim; ++r) {
        for (std::size_t i = 0; i < k; ++i)
            a[static_cast<std::size_t>(r)][i] = static_cast<int>((facet[i] >> r) & 1u);
        a[static_cast<std::size_t>(r)][k] = point[static_cast<std::size_t>(r)];
    }
    for (std::size_t i = 0; i <= k; ++i) a[rows - 1][i] = 1;

    std::vector<int> pivot_row(k, -1);
    std::size_t next = 0;
    for (std::size_t col = 0; col < k && next < rows; ++col) {
        std::size_t sel = next;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows)
            throw std::invalid_argument("barycentric_coordinates: affinely dependent facet");
        std::swap(a[next], a[sel]);
        const Rational inv = a[next][col];
        for (std::size_t j = col; j <= k; ++j) a[next][j] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j <= k; ++j) a[r][j] -= f * a[next][j];
        }
        pivot_row[col] = static_cast<int>(next);
        ++next;
    }
    for (std::size_t r = next; r < rows; ++r)
        if (a[r][k] != 0) return std::nullopt;  // inconsistent: point outside the affine hull

    std::vector<Rational> lambda(k);
    for (std::size_t col = 0; col < k; ++col) lambda[col] = a[static_cast<std::size_t>(pivot_row[col])][k];
    return lambda;
}

namespace detail {

std::int64_t det_masks(const std::uint32_t* m, int n) {
    Buf mat;
    edge_matrix(m, n, mat.data());
    return det_dense(mat.data(), n);
}

bool nonobtuse_masks(const std::uint32_t* m, int n) {
    Buf mat;
    edge_matrix(m, n, mat.data());
    Buf detbuf = mat;
    const std::int64_t det = bareiss(detbuf.data(), n);
    if (det == 0) return false;
    const std::int64_t s = det > 0 ? 1 : -1;

    // Normals opposite vertices 1..n first, checking signs as we go; the one
    // opposite vertex 0 is minus their (unreduced) sum. Positive scaling does
    // not change dot-product signs, so no gcd reduction here.
    std::int64_t normals[kMaxDim + 1][kMaxDim];
    std::int64_t sum[kMaxDim] = {0};
    std::int64_t row[kMaxDim];
    for (int k = 1; k <= n; ++k) {
        adjugate_row(mat.data(), n, k - 1, row);
        for (int c = 0; c < n; ++c) {
            normals[k][c] = -s * row[c];
            sum[c] += normals[k][c];
        }
        for (int prev = 1; prev < k; ++prev) {
            std::int64_t d = 0;
            for (int c = 0; c < n; ++c) d += normals[k][c] * normals[prev][c];
            if (d > 0) return false;
        }
    }
    for (int c = 0; c < n; ++c) normals[0][c] = -sum[c];
    for (int k = 1; k <= n; ++k) {
        std::int64_t d = 0;
        for (int c = 0; c < n; ++c) d += normals[0][c] * normals[k][c];
        if (d > 0) return false;
    }
    return true;
}

IntVector facet_normal_masks(const std::uint32_t* m, int n, int opposite) {
    std::vector<IntVector> raw;
    std::int64_t det = 0;
    if (!normals_unreduced(m, n, raw, &det))
        throw std::domain_error("facet_normal_masks: degenerate simplex");
    IntVector out = std::move(raw[static_cast<std::size_t>(opposite)]);
    gcd_reduce(out);
    return out;
}

}  // namespace detail

}  // namespace cubetri
