#include "fealab/mesh.hpp"

#include "fealab/errors.hpp"
#include "isoparam.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace fealab {

AdjacencyList compress(const std::vector<std::vector<int>>& buckets) {
    AdjacencyList out;
    out.offsets.resize(buckets.size() + 1, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        total += buckets[i].size();
        out.offsets[i + 1] = static_cast<int>(total);
    }
    out.items.reserve(total);
    for (const auto& b : buckets) out.items.insert(out.items.end(), b.begin(), b.end());
    return out;
}

namespace {

enum class CellClass { hex, prism, transition, tet };

struct BoxGrid {
    int nx, ny, nz, layers;

    CellClass classify(int i, int k) const {
        if (i == nx - 1) return CellClass::hex;
        if (k < layers) return CellClass::prism;
        if (k == layers) return CellClass::transition;
        if (i == nx - 2) return CellClass::transition;
        return CellClass::tet;
    }

    bool in_range(int i, int j, int k) const {
        return i >= 0 && i < nx && j >= 0 && j < ny && k >= 0 && k < nz;
    }

    int gid(int i, int j, int k) const { return (k * (ny + 1) + j) * (nx + 1) + i; }
};

struct Offset {
    int dx, dy, dz;
};

// Quad corner loops per face, ordered counterclockwise as seen from the
// cell interior (so a pyramid with its apex at the cell center has a
// positive Jacobian). Face order: -z +z -y +y -x +x.
constexpr Offset kQuadLoop[6][4] = {
    {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, // -z
    {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 0, 1}}, // +z
    {{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 0, 0}}, // -y
    {{0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}}, // +y
    {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}}, // -x
    {{1, 0, 0}, {1, 0, 1}, {1, 1, 1}, {1, 1, 0}}, // +x
};

// Same faces with corners listed as (min, a, max, b): the min->max diagonal
// splits the quad into triangles (min,a,max) and (min,max,b). This is the
// diagonal the Kuhn tetrahedral split exposes on every cube face, so the
// two presentations conform.
constexpr Offset kDiagLoop[6][4] = {
    {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, // -z
    {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}, // +z
    {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}, // -y
    {{0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}}, // +y
    {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}}, // -x
    {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, // +x
};

constexpr Offset kFaceStep[6] = {{0, 0, -1}, {0, 0, 1}, {0, -1, 0}, {0, 1, 0}, {-1, 0, 0}, {1, 0, 0}};

// Kuhn subdivision: six tets around the main diagonal c000-c111, one per
// axis permutation. Conforms across identically split neighbors.
constexpr int kKuhnPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

double tet_signed_volume(const std::array<double, 3>& a, const std::array<double, 3>& b,
                         const std::array<double, 3>& c, const std::array<double, 3>& d) {
    const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    const double w[3] = {d[0] - a[0], d[1] - a[1], d[2] - a[2]};
    return (u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
            u[2] * (v[0] * w[1] - v[1] * w[0])) /
           6.0;
}

class BoxMeshBuilder {
public:
    BoxMeshBuilder(int nx, int ny, int nz, int layers) : g_{nx, ny, nz, layers} {}

    Mesh build() {
        make_grid_nodes();
        allocate_centers();
        // Sheet-ordered element groups: prisms, pyramids, tets, hexes.
        for_cells([&](int i, int j, int k) {
            switch (g_.classify(i, k)) {
            case CellClass::prism: emit_prisms(i, j, k); break;
            case CellClass::transition: emit_transition(i, j, k); break;
            case CellClass::tet: emit_kuhn(i, j, k); break;
            case CellClass::hex: emit_hex(i, j, k); break;
            }
        });
        for (auto& group : {&prisms_, &pyramids_, &tets_, &hexes_})
            mesh_.elements.insert(mesh_.elements.end(), group->begin(), group->end());
        return std::move(mesh_);
    }

private:
    template <typename F>
    void for_cells(F&& f) const {
        for (int k = 0; k < g_.nz; ++k)
            for (int j = 0; j < g_.ny; ++j)
                for (int i = 0; i < g_.nx; ++i) f(i, j, k);
    }

    void make_grid_nodes() {
        mesh_.coords.reserve(static_cast<std::size_t>(g_.nx + 1) * (g_.ny + 1) * (g_.nz + 1));
        for (int k = 0; k <= g_.nz; ++k)
            for (int j = 0; j <= g_.ny; ++j)
                for (int i = 0; i <= g_.nx; ++i)
                    mesh_.coords.push_back({double(i), double(j), double(k)});
    }

    void allocate_centers() {
        center_of_.assign(static_cast<std::size_t>(g_.nx) * g_.ny * g_.nz, -1);
        for_cells([&](int i, int j, int k) {
            if (g_.classify(i, k) != CellClass::transition) return;
            center_of_[cell_index(i, j, k)] = mesh_.nnode();
            mesh_.coords.push_back({i + 0.5, j + 0.5, k + 0.5});
        });
    }

    std::size_t cell_index(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * g_.ny + j) * g_.nx + i;
    }

    int corner(int i, int j, int k, const Offset& o) const {
        return g_.gid(i + o.dx, j + o.dy, k + o.dz);
    }

    void emit_hex(int i, int j, int k) {
        Element e{CellTag::hex8, {}};
        const Offset loop[8] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
        for (int n = 0; n < 8; ++n) e.nodes[n] = corner(i, j, k, loop[n]);
        hexes_.push_back(e);
    }

    // Two prisms per cell, split in the xz plane along the min->max
    // diagonal and extruded in y. Horizontal cell faces stay quads.
    void emit_prisms(int i, int j, int k) {
        const int a = corner(i, j, k, {0, 0, 0});
        const int b = corner(i, j, k, {1, 0, 0});
        const int c = corner(i, j, k, {1, 0, 1});
        const int d = corner(i, j, k, {0, 0, 1});
        const int a1 = corner(i, j, k, {0, 1, 0});
        const int b1 = corner(i, j, k, {1, 1, 0});
        const int c1 = corner(i, j, k, {1, 1, 1});
        const int d1 = corner(i, j, k, {0, 1, 1});
        prisms_.push_back({CellTag::pri6, {a, c, b, a1, c1, b1}});
        prisms_.push_back({CellTag::pri6, {a, d, c, a1, d1, c1}});
    }

    void emit_kuhn(int i, int j, int k) {
        auto bump = [](Offset& o, int axis) {
            if (axis == 0)
                o.dx = 1;
            else if (axis == 1)
                o.dy = 1;
            else
                o.dz = 1;
        };
        for (const auto& perm : kKuhnPerm) {
            Offset o1{0, 0, 0}, o2{0, 0, 0};
            bump(o1, perm[0]);
            o2 = o1;
            bump(o2, perm[1]);
            push_tet(corner(i, j, k, {0, 0, 0}), corner(i, j, k, o1), corner(i, j, k, o2),
                     corner(i, j, k, {1, 1, 1}));
        }
    }

    // Center-split cell: a cone from the cell center over each face. Faces
    // toward hexes, prisms and lateral transition cells stay quads and
    // become pyramids; faces toward tet cells and stacked transition cells
    // take the Kuhn diagonal and become two tets.
    void emit_transition(int i, int j, int k) {
        const int center = center_of_[cell_index(i, j, k)];
        for (int f = 0; f < 6; ++f) {
            const int ni = i + kFaceStep[f].dx;
            const int nj = j + kFaceStep[f].dy;
            const int nk = k + kFaceStep[f].dz;
            bool split = false;
            if (g_.in_range(ni, nj, nk)) {
                const CellClass nb = g_.classify(ni, nk);
                const bool z_face = (f < 2);
                split = (nb == CellClass::tet) || (nb == CellClass::transition && z_face);
            }
            if (!split) {
                Element e{CellTag::pyr5, {}};
                for (int n = 0; n < 4; ++n) e.nodes[n] = corner(i, j, k, kQuadLoop[f][n]);
                e.nodes[4] = center;
                pyramids_.push_back(e);
            } else {
                const int c0 = corner(i, j, k, kDiagLoop[f][0]);
                const int c1 = corner(i, j, k, kDiagLoop[f][1]);
                const int c2 = corner(i, j, k, kDiagLoop[f][2]);
                const int c3 = corner(i, j, k, kDiagLoop[f][3]);
                push_tet(c0, c1, c2, center);
                push_tet(c0, c2, c3, center);
            }
        }
    }

    void push_tet(int a, int b, int c, int d) {
        if (tet_signed_volume(mesh_.coords[a], mesh_.coords[b], mesh_.coords[c],
                              mesh_.coords[d]) < 0.0)
            std::swap(c, d);
        tets_.push_back({CellTag::tet4, {a, b, c, d}});
    }

    BoxGrid g_;
    Mesh mesh_;
    std::vector<int> center_of_;
    std::vector<Element> prisms_, pyramids_, tets_, hexes_;
};

} // namespace

Mesh generate_box_mesh(int nx, int ny, int nz, int layers) {
    if (nx < 1 || ny < 1 || nz < 1) throw argument_error("generate_box_mesh: dimensions must be >= 1");
    if (layers < 0 || layers >= nz) throw argument_error("generate_box_mesh: need 0 <= layers < nz");
    return BoxMeshBuilder(nx, ny, nz, layers).build();
}

AdjacencyList build_node_to_elem(const Mesh& mesh) {
    std::vector<int> count(mesh.nnode(), 0);
    for (const auto& e : mesh.elements)
        for (int n = 0; n < e.node_count(); ++n) ++count[e.nodes[n]];

    AdjacencyList out;
    out.offsets.resize(mesh.nnode() + 1, 0);
    for (int n = 0; n < mesh.nnode(); ++n) out.offsets[n + 1] = out.offsets[n] + count[n];
    out.items.resize(out.offsets.back());
    std::vector<int> cursor(out.offsets.begin(), out.offsets.end() - 1);
    for (int e = 0; e < mesh.nelem(); ++e)
        for (int n = 0; n < mesh.elements[e].node_count(); ++n)
            out.items[cursor[mesh.elements[e].nodes[n]]++] = e;
    return out;
}

AdjacencyList build_element_adjacency(const Mesh& mesh) {
    return build_element_adjacency(mesh, build_node_to_elem(mesh));
}

AdjacencyList build_element_adjacency(const Mesh& mesh, const AdjacencyList& node_to_elem) {
    std::vector<std::vector<int>> neigh(mesh.nelem());
    for (int e = 0; e < mesh.nelem(); ++e) {
        auto& list = neigh[e];
        const Element& el = mesh.elements[e];
        for (int n = 0; n < el.node_count(); ++n)
            for (int other : node_to_elem[el.nodes[n]])
                if (other != e) list.push_back(other);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return compress(neigh);
}

double element_volume(const Mesh& mesh, int elem) {
    const Element& el = mesh.elements[elem];
    const ElementKind kind = element_kind(el.tag);
    std::array<std::array<double, 3>, kMaxElemNodes> xyz;
    for (int n = 0; n < kind.node_count; ++n) xyz[n] = mesh.coords[el.nodes[n]];

    double vol = 0.0;
    std::array<double, kMaxElemNodes> N;
    std::array<std::array<double, 3>, kMaxElemNodes> dN;
    for (const GaussPoint& gp : gauss_rule(kind)) {
        shape_functions(el.tag, gp.xi, N, dN);
        vol += gp.weight * detail::jacobian_at({xyz.data(), xyz.size()}, {dN.data(), dN.size()},
                                               kind.node_count)
                               .det;
    }
    return vol;
}

std::vector<int> boundary_nodes(const Mesh& mesh) {
    std::array<double, 3> lo = mesh.coords.at(0), hi = mesh.coords.at(0);
    for (const auto& c : mesh.coords)
        for (int d = 0; d < 3; ++d) {
            lo[d] = std::min(lo[d], c[d]);
            hi[d] = std::max(hi[d], c[d]);
        }
    std::vector<int> out;
    for (int n = 0; n < mesh.nnode(); ++n) {
        const auto& c = mesh.coords[n];
        for (int d = 0; d < 3; ++d)
            if (c[d] == lo[d] || c[d] == hi[d]) {
                out.push_back(n);
                break;
            }
    }
    return out;
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
    out << mesh.nnode() << ' ' << mesh.nelem() << '\n';
    char buf[96];
    for (const auto& c : mesh.coords) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", c[0], c[1], c[2]);
        out << buf;
    }
    for (const auto& e : mesh.elements) {
        out << tag_name(e.tag);
        for (int n = 0; n < e.node_count(); ++n) out << ' ' << e.nodes[n];
        out << '\n';
    }
}

void write_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io_error("cannot open for writing: " + path);
    write_mesh(mesh, f);
    if (!f) throw io_error("write failed: " + path);
}

Mesh read_mesh(std::istream& in) {
    Mesh mesh;
    int nnode = 0, nelem = 0;
    if (!(in >> nnode >> nelem) || nnode < 0 || nelem < 0)
        throw io_error("mesh file: bad header");
    mesh.coords.resize(nnode);
    for (auto& c : mesh.coords)
        if (!(in >> c[0] >> c[1] >> c[2])) throw io_error("mesh file: bad coordinate line");
    mesh.elements.reserve(nelem);
    for (int e = 0; e < nelem; ++e) {
        std::string kind;
        if (!(in >> kind)) throw io_error("mesh file: missing element line");
        Element el{tag_from_name(kind), {}};
        for (int n = 0; n < el.node_count(); ++n) {
            if (!(in >> el.nodes[n])) throw io_error("mesh file: bad element line");
            if (el.nodes[n] < 0 || el.nodes[n] >= nnode)
                throw io_error("mesh file: node index out of range");
        }
        mesh.elements.push_back(el);
    }
    return mesh;
}

Mesh read_mesh_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open for reading: " + path);
    return read_mesh(f);
}

} // namespace fealab
