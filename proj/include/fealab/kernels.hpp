#pragma once

#include "fealab/element.hpp"
#include "fealab/mesh.hpp"

#include <array>
#include <span>

namespace fealab {

/// Dense element system for the scalar diffusion operator:
///   A_ij = sum_g w_g |J_g| grad(phi_i) . grad(phi_j)
///   b_i  = sum_g w_g |J_g| source phi_i
/// A is symmetric with ~zero row sums (constant-field null space).
struct ElementSystem {
    int n = 0;
    std::array<double, kMaxElemNodes * kMaxElemNodes> A{};
    std::array<double, kMaxElemNodes> b{};

    double a(int i, int j) const { return A[i * kMaxElemNodes + j]; }
};

/// Synthetic work multiplier: the kernel is recomputed repeat_factor times
/// (timing only, the result is independent of it). Emulates the gap between
/// a cheap fluid kernel and an expensive constitutive model.
struct WorkModel {
    int repeat_factor = 1;
};

ElementSystem compute_element_diffusion(std::span<const std::array<double, 3>> xyz,
                                        const ElementKind& kind, double source,
                                        const WorkModel& work = {});

/// Convenience wrapper pulling coordinates from the mesh. elem is reported
/// in geometry errors.
ElementSystem element_system(const Mesh& mesh, int elem, double source,
                             const WorkModel& work = {});

/// Element loop without scatter: gathers the nodal field on one element and
/// returns its volume-weighted mean, sum_g w_g |J_g| u(x_g) / vol(e).
/// Writes belong in slot `elem` of an element-indexed array only.
double subgrid_update(const Mesh& mesh, int elem, std::span<const double> nodal_field,
                      const WorkModel& work = {});

} // namespace fealab
