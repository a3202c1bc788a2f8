#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fealab {

enum class CellTag : std::uint8_t { tet4, pyr5, pri6, hex8 };

constexpr int kMaxElemNodes = 8;

int node_count(CellTag tag);
int default_gauss_count(CellTag tag);
const char* tag_name(CellTag tag);
CellTag tag_from_name(const std::string& name);

/// Element kind descriptor. gauss_count selects among the supported rules
/// for the tag and doubles as the default partition weight of the element.
struct ElementKind {
    CellTag tag = CellTag::tet4;
    int node_count = 4;
    int gauss_count = 4;
};

ElementKind element_kind(CellTag tag);
ElementKind element_kind(CellTag tag, int gauss_count);

struct GaussPoint {
    std::array<double, 3> xi;
    double weight;
};

/// Quadrature rule on the reference element. Weights sum to the reference
/// volume: 1/6 (tet), 1 (prism), 8 (hex and collapsed-hex pyramid).
/// Supported point counts: tet4 {1,4}, pri6 {1,2,6}, hex8/pyr5 {1,8,27}.
std::vector<GaussPoint> gauss_rule(const ElementKind& kind);

/// Shape function values and reference-coordinate gradients at xi.
/// Pyramids use the collapsed-hexahedron basis (N4 = sum of the four top
/// trilinear functions), so their reference domain is the cube [-1,1]^3.
void shape_functions(CellTag tag, const std::array<double, 3>& xi,
                     std::span<double> values, std::span<std::array<double, 3>> gradients);

} // namespace fealab
