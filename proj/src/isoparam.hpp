#pragma once

#include "fealab/element.hpp"

#include <array>
#include <span>

namespace fealab::detail {

struct Jacobian {
    double det;
    std::array<std::array<double, 3>, 3> inv; // inverse of J, J[p][q] = dx_p/dxi_q
};

/// Jacobian of the isoparametric map at one quadrature point.
/// dN holds the reference gradients of the element's shape functions.
inline Jacobian jacobian_at(std::span<const std::array<double, 3>> xyz,
                            std::span<const std::array<double, 3>> dN, int n_nodes) {
    double J[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (int i = 0; i < n_nodes; ++i)
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                J[p][q] += xyz[i][p] * dN[i][q];

    const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                       J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                       J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);

    Jacobian out;
    out.det = det;
    const double s = 1.0 / det;
    out.inv[0][0] = s * (J[1][1] * J[2][2] - J[1][2] * J[2][1]);
    out.inv[0][1] = s * (J[0][2] * J[2][1] - J[0][1] * J[2][2]);
    out.inv[0][2] = s * (J[0][1] * J[1][2] - J[0][2] * J[1][1]);
    out.inv[1][0] = s * (J[1][2] * J[2][0] - J[1][0] * J[2][2]);
    out.inv[1][1] = s * (J[0][0] * J[2][2] - J[0][2] * J[2][0]);
    out.inv[1][2] = s * (J[0][2] * J[1][0] - J[0][0] * J[1][2]);
    out.inv[2][0] = s * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    out.inv[2][1] = s * (J[0][1] * J[2][0] - J[0][0] * J[2][1]);
    out.inv[2][2] = s * (J[0][0] * J[1][1] - J[0][1] * J[1][0]);
    return out;
}

} // namespace fealab::detail
