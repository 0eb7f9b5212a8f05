#pragma once

// Built-in complexes, subcomplex checks and regular neighborhoods.

#include <vector>

#include "plmorse/complex.hpp"

namespace plmorse {

/// Boundary of the cyclic d-polytope with n vertices labelled 1..n, with
/// facets selected by Gale's evenness condition: every two vertices outside
/// a facet are separated by an even number of facet vertices.
inline SimplicialComplex cyclic_polytope_boundary(int d, int n) {
    if (d < 1) throw Error("cyclic polytope dimension must be positive");
    if (n <= d + 1) throw Error("cyclic polytope needs n >= d + 2 vertices");
    std::vector<std::vector<Label>> facets;
    Simplex all;
    for (int i = 1; i <= n; ++i) all.push_back(static_cast<VertexId>(i));
    for_each_subset(all, static_cast<std::size_t>(d), [&](const Simplex& s) {
        std::vector<char> in(static_cast<std::size_t>(n + 1), 0);
        for (auto v : s) in[v] = 1;
        int last_out = -1;
        for (int i = 1; i <= n; ++i) {
            if (in[static_cast<std::size_t>(i)]) continue;
            if (last_out > 0) {
                int between = 0;
                for (int k = last_out + 1; k < i; ++k) between += in[static_cast<std::size_t>(k)];
                if (between % 2) return;
            }
            last_out = i;
        }
        std::vector<Label> f;
        for (auto v : s) f.emplace_back(static_cast<std::int64_t>(v));
        facets.push_back(std::move(f));
    });
    return SimplicialComplex::from_facets(facets);
}

/// The 8-vertex dunce hat.
inline SimplicialComplex dunce_hat8() {
    const int triangles[17][3] = {{1, 2, 4}, {2, 3, 4}, {3, 4, 6}, {1, 3, 6}, {1, 2, 6}, {2, 5, 6},
                                  {2, 3, 5}, {1, 3, 5}, {1, 2, 7}, {1, 4, 7}, {2, 7, 8}, {4, 5, 7},
                                  {5, 7, 8}, {2, 3, 8}, {1, 3, 8}, {1, 5, 8}, {4, 5, 6}};
    std::vector<std::vector<Label>> facets;
    for (const auto& t : triangles) facets.push_back({t[0], t[1], t[2]});
    return SimplicialComplex::from_facets(facets);
}

/// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7() {
    std::vector<std::vector<Label>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(facets);
}

/// 6-vertex real projective plane (hemi-icosahedron).
inline SimplicialComplex rp2_6() {
    const int triangles[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                  {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
    std::vector<std::vector<Label>> facets;
    for (const auto& t : triangles) facets.push_back({t[0], t[1], t[2]});
    return SimplicialComplex::from_facets(facets);
}

/// The full d-simplex on vertices 1..d+1.
inline SimplicialComplex simplex(int d) {
    if (d < 0) throw Error("simplex dimension must be nonnegative");
    std::vector<Label> f;
    for (int i = 1; i <= d + 1; ++i) f.emplace_back(i);
    return SimplicialComplex::from_facets({f});
}

/// Boundary of the d-simplex on vertices 1..d+1 (a (d-1)-sphere).
inline SimplicialComplex simplex_boundary(int d) {
    if (d < 1) throw Error("simplex boundary needs d >= 1");
    std::vector<std::vector<Label>> facets;
    for (int skip = 1; skip <= d + 1; ++skip) {
        std::vector<Label> f;
        for (int i = 1; i <= d + 1; ++i)
            if (i != skip) f.emplace_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

/// Boundary cycle on labels 1..n.
inline SimplicialComplex cycle(int n) {
    if (n < 3) throw Error("a cycle needs at least three vertices");
    std::vector<std::vector<Label>> facets;
    for (int i = 1; i <= n; ++i) facets.push_back({i, i % n + 1});
    return SimplicialComplex::from_facets(facets);
}

/// Every facet of k (by label) is a face of c.
inline bool is_subcomplex(const SimplicialComplex& c, const SimplicialComplex& k) {
    for (const auto& f : k.facets()) {
        Simplex s;
        for (auto v : f) {
            auto id = c.find(k.label(v));
            if (!id) return false;
            s.push_back(*id);
        }
        std::sort(s.begin(), s.end());
        if (!c.contains(s)) return false;
    }
    return true;
}

/// k is a subcomplex of c and equals the span of its vertex set.
inline bool is_full_subcomplex(const SimplicialComplex& c, const SimplicialComplex& k) {
    if (!is_subcomplex(c, k)) return false;
    return span(c, k.labels()) == k;
}

/// Regular neighborhood of k in the second derived subdivision of c.
struct NeighborhoodResult {
    SimplicialComplex neighborhood;  // M, pure of dimension dim c
    SimplicialComplex boundary;      // boundary of M
    Subdivision first;               // c' = bsd(c), carriers into c
    Subdivision second;              // c'' = bsd(c'), carriers into c'
    std::vector<char> core;          // per vertex of c': carrier lies in k
    // For each vertex of M: the vertex id in c''.
    std::vector<VertexId> vertex_in_second;
};

/// M is the closure of all facets of c'' whose chain has its minimal element
/// (a vertex of c') inside the subdivided k'. A closed simplex of c'' meets
/// |k'| exactly when that minimal element lies in k'.
inline NeighborhoodResult regular_neighborhood(const SimplicialComplex& c, const SimplicialComplex& k) {
    if (!is_subcomplex(c, k)) throw Error("neighborhood core is not a subcomplex");
    NeighborhoodResult out;
    out.first = barycentric_subdivision(c);
    const auto& c1 = out.first.complex;
    out.core.assign(c1.num_vertices(), 0);
    for (VertexId v = 0; v < c1.num_vertices(); ++v) {
        Simplex s;
        for (auto w : out.first.carrier[v]) {
            auto id = k.find(c.label(w));
            if (!id) {
                s.clear();
                break;
            }
            s.push_back(*id);
        }
        // carrier vertex ids of c map monotonically to k ids
        std::sort(s.begin(), s.end());
        out.core[v] = !s.empty() && k.contains(s);
    }
    out.second = barycentric_subdivision(c1);
    const auto& c2 = out.second.complex;
    std::vector<Simplex> selected;
    for (const auto& f : c2.facets()) {
        // minimal chain element: the carrier of smallest dimension
        VertexId best = f.front();
        for (auto v : f)
            if (out.second.carrier[v].size() < out.second.carrier[best].size()) best = v;
        const auto& tau0 = out.second.carrier[best];
        if (tau0.size() == 1 && out.core[tau0.front()]) selected.push_back(f);
    }
    std::vector<char> used(c2.num_vertices(), 0);
    for (const auto& f : selected)
        for (auto v : f) used[v] = 1;
    for (VertexId v = 0; v < c2.num_vertices(); ++v)
        if (used[v]) out.vertex_in_second.push_back(v);
    out.neighborhood = c2.subcomplex(std::move(selected));
    out.boundary = boundary_subcomplex(out.neighborhood);
    return out;
}

}  // namespace plmorse
