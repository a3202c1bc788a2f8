#include "fealab/element.hpp"

#include "fealab/errors.hpp"

#include <cmath>

namespace fealab {

int node_count(CellTag tag) {
    switch (tag) {
    case CellTag::tet4: return 4;
    case CellTag::pyr5: return 5;
    case CellTag::pri6: return 6;
    case CellTag::hex8: return 8;
    }
    return 0;
}

int default_gauss_count(CellTag tag) {
    switch (tag) {
    case CellTag::tet4: return 4;
    case CellTag::pyr5: return 8;
    case CellTag::pri6: return 6;
    case CellTag::hex8: return 8;
    }
    return 0;
}

const char* tag_name(CellTag tag) {
    switch (tag) {
    case CellTag::tet4: return "TET4";
    case CellTag::pyr5: return "PYR5";
    case CellTag::pri6: return "PRI6";
    case CellTag::hex8: return "HEX8";
    }
    return "?";
}

CellTag tag_from_name(const std::string& name) {
    if (name == "TET4") return CellTag::tet4;
    if (name == "PYR5") return CellTag::pyr5;
    if (name == "PRI6") return CellTag::pri6;
    if (name == "HEX8") return CellTag::hex8;
    throw argument_error("unknown element kind: " + name);
}

ElementKind element_kind(CellTag tag) { return element_kind(tag, default_gauss_count(tag)); }

ElementKind element_kind(CellTag tag, int gauss_count) {
    if (gauss_count < 1) throw argument_error("gauss_count must be >= 1");
    return ElementKind{tag, node_count(tag), gauss_count};
}

namespace {

// 1D Gauss-Legendre on [-1,1].
struct Rule1d {
    std::vector<double> x, w;
};

Rule1d gauss_1d(int n) {
    switch (n) {
    case 1: return {{0.0}, {2.0}};
    case 2: {
        const double g = 1.0 / std::sqrt(3.0);
        return {{-g, g}, {1.0, 1.0}};
    }
    case 3: {
        const double g = std::sqrt(3.0 / 5.0);
        return {{-g, 0.0, g}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
    }
    default: throw argument_error("unsupported 1d gauss order");
    }
}

std::vector<GaussPoint> tensor_cube(int n1d) {
    const Rule1d r = gauss_1d(n1d);
    std::vector<GaussPoint> pts;
    pts.reserve(static_cast<std::size_t>(n1d) * n1d * n1d);
    for (int k = 0; k < n1d; ++k)
        for (int j = 0; j < n1d; ++j)
            for (int i = 0; i < n1d; ++i)
                pts.push_back({{r.x[i], r.x[j], r.x[k]}, r.w[i] * r.w[j] * r.w[k]});
    return pts;
}

std::vector<GaussPoint> tet_rule(int n) {
    if (n == 1) return {{{0.25, 0.25, 0.25}, 1.0 / 6.0}};
    if (n == 4) {
        const double a = 0.585410196624968454; // (5 + 3*sqrt(5)) / 20
        const double b = 0.138196601125010515; // (5 - sqrt(5)) / 20
        const double w = 1.0 / 24.0;
        return {{{a, b, b}, w}, {{b, a, b}, w}, {{b, b, a}, w}, {{b, b, b}, w}};
    }
    throw argument_error("unsupported tet4 gauss count");
}

std::vector<GaussPoint> prism_rule(int n) {
    // Triangle rule (area 1/2) tensor a 1D line rule on [-1,1].
    std::vector<std::array<double, 2>> tx;
    std::vector<double> tw;
    int nline = 0;
    if (n == 1) {
        tx = {{1.0 / 3.0, 1.0 / 3.0}};
        tw = {0.5};
        nline = 1;
    } else if (n == 2) {
        tx = {{1.0 / 3.0, 1.0 / 3.0}};
        tw = {0.5};
        nline = 2;
    } else if (n == 6) {
        tx = {{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}};
        tw = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
        nline = 2;
    } else {
        throw argument_error("unsupported pri6 gauss count");
    }
    const Rule1d line = gauss_1d(nline);
    std::vector<GaussPoint> pts;
    for (int l = 0; l < nline; ++l)
        for (std::size_t t = 0; t < tx.size(); ++t)
            pts.push_back({{tx[t][0], tx[t][1], line.x[l]}, tw[t] * line.w[l]});
    return pts;
}

std::vector<GaussPoint> cube_rule(int n) {
    if (n == 1) return tensor_cube(1);
    if (n == 8) return tensor_cube(2);
    if (n == 27) return tensor_cube(3);
    throw argument_error("unsupported hex8/pyr5 gauss count");
}

} // namespace

std::vector<GaussPoint> gauss_rule(const ElementKind& kind) {
    switch (kind.tag) {
    case CellTag::tet4: return tet_rule(kind.gauss_count);
    case CellTag::pri6: return prism_rule(kind.gauss_count);
    case CellTag::pyr5:
    case CellTag::hex8: return cube_rule(kind.gauss_count);
    }
    throw argument_error("unknown element tag");
}

namespace {

void hex_shape(const std::array<double, 3>& xi, std::span<double> N,
               std::span<std::array<double, 3>> dN) {
    static constexpr int sx[8] = {-1, 1, 1, -1, -1, 1, 1, -1};
    static constexpr int sy[8] = {-1, -1, 1, 1, -1, -1, 1, 1};
    static constexpr int sz[8] = {-1, -1, -1, -1, 1, 1, 1, 1};
    for (int i = 0; i < 8; ++i) {
        const double fx = 1.0 + sx[i] * xi[0];
        const double fy = 1.0 + sy[i] * xi[1];
        const double fz = 1.0 + sz[i] * xi[2];
        N[i] = 0.125 * fx * fy * fz;
        dN[i] = {0.125 * sx[i] * fy * fz, 0.125 * fx * sy[i] * fz, 0.125 * fx * fy * sz[i]};
    }
}

} // namespace

void shape_functions(CellTag tag, const std::array<double, 3>& xi,
                     std::span<double> N, std::span<std::array<double, 3>> dN) {
    switch (tag) {
    case CellTag::tet4: {
        N[0] = 1.0 - xi[0] - xi[1] - xi[2];
        N[1] = xi[0];
        N[2] = xi[1];
        N[3] = xi[2];
        dN[0] = {-1.0, -1.0, -1.0};
        dN[1] = {1.0, 0.0, 0.0};
        dN[2] = {0.0, 1.0, 0.0};
        dN[3] = {0.0, 0.0, 1.0};
        return;
    }
    case CellTag::pri6: {
        const double l0 = 1.0 - xi[0] - xi[1];
        const double zm = 0.5 * (1.0 - xi[2]);
        const double zp = 0.5 * (1.0 + xi[2]);
        N[0] = l0 * zm;
        N[1] = xi[0] * zm;
        N[2] = xi[1] * zm;
        N[3] = l0 * zp;
        N[4] = xi[0] * zp;
        N[5] = xi[1] * zp;
        dN[0] = {-zm, -zm, -0.5 * l0};
        dN[1] = {zm, 0.0, -0.5 * xi[0]};
        dN[2] = {0.0, zm, -0.5 * xi[1]};
        dN[3] = {-zp, -zp, 0.5 * l0};
        dN[4] = {zp, 0.0, 0.5 * xi[0]};
        dN[5] = {0.0, zp, 0.5 * xi[1]};
        return;
    }
    case CellTag::pyr5: {
        // Collapsed hexahedron: the four top trilinear functions merge at
        // the apex node.
        double hn[8];
        std::array<double, 3> hd[8];
        hex_shape(xi, hn, hd);
        for (int i = 0; i < 4; ++i) {
            N[i] = hn[i];
            dN[i] = hd[i];
        }
        N[4] = hn[4] + hn[5] + hn[6] + hn[7];
        dN[4] = {hd[4][0] + hd[5][0] + hd[6][0] + hd[7][0],
                 hd[4][1] + hd[5][1] + hd[6][1] + hd[7][1],
                 hd[4][2] + hd[5][2] + hd[6][2] + hd[7][2]};
        return;
    }
    case CellTag::hex8: hex_shape(xi, N, dN); return;
    }
    throw argument_error("unknown element tag");
}

} // namespace fealab
