#pragma once

#include "fealab/adjacency.hpp"
#include "fealab/element.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace fealab {

struct Element {
    CellTag tag;
    std::array<int, kMaxElemNodes> nodes; // first node_count(tag) entries valid

    int node_count() const { return fealab::node_count(tag); }
};

struct Mesh {
    std::vector<std::array<double, 3>> coords;
    std::vector<Element> elements;

    int nnode() const { return static_cast<int>(coords.size()); }
    int nelem() const { return static_cast<int>(elements.size()); }
};

/// Hybrid box mesh of nx*ny*nz unit cells: `layers` prism sheets on the
/// z=0 face, a pyramid/tet transition sheet above them, a tetrahedral core,
/// and a hexahedral block on the x-max wall. All interfaces are conforming
/// and every element has positive volume. Deterministic in its arguments.
Mesh generate_box_mesh(int nx, int ny, int nz, int layers);

/// node -> elements containing it.
AdjacencyList build_node_to_elem(const Mesh& mesh);

/// element -> elements sharing at least one node (symmetric, irreflexive).
AdjacencyList build_element_adjacency(const Mesh& mesh);
AdjacencyList build_element_adjacency(const Mesh& mesh, const AdjacencyList& node_to_elem);

/// Signed volume by quadrature (sum of w*det(J) over the element's rule).
double element_volume(const Mesh& mesh, int elem);

/// Nodes lying on the bounding box of the mesh coordinates.
std::vector<int> boundary_nodes(const Mesh& mesh);

/// Plain-text format: "nnode nelem" header, one coordinate triple per line,
/// then one element per line as "KIND n0 n1 ...". Round-trips exactly.
void write_mesh(const Mesh& mesh, std::ostream& out);
void write_mesh_file(const Mesh& mesh, const std::string& path);
Mesh read_mesh(std::istream& in);
Mesh read_mesh_file(const std::string& path);

} // namespace fealab
