#pragma once

#include <queue>
#include <vector>

#include "plmorse/complex.hpp"

namespace plmorse {

/// Face poset restricted to codimension-one incidences. Cells are numbered
/// dimension by dimension, each dimension in lexicographic order.
struct HasseDiagram {
    std::vector<Simplex> cells;
    std::vector<int> dim;
    std::vector<std::vector<std::size_t>> facets;    // codim-1 faces
    std::vector<std::vector<std::size_t>> cofacets;  // codim-1 cofaces
    std::vector<std::size_t> offset;                 // first cell of each dimension

    std::size_t size() const { return cells.size(); }

    std::size_t index_of(const Simplex& s, const SimplicialComplex& c) const {
        auto i = c.face_index(s);
        if (!i) throw Error("simplex is not a face of the complex");
        return offset[s.size() - 1] + *i;
    }

    explicit HasseDiagram(const SimplicialComplex& c) {
        const int d = c.dimension();
        for (int k = 0; k <= d; ++k) {
            offset.push_back(cells.size());
            const auto& fk = c.faces(k);
            cells.insert(cells.end(), fk.begin(), fk.end());
            dim.insert(dim.end(), fk.size(), k);
        }
        offset.push_back(cells.size());
        facets.resize(cells.size());
        cofacets.resize(cells.size());
        for (int k = 1; k <= d; ++k) {
            const auto& lower = c.face_map(k - 1);
            for (std::size_t i = offset[k]; i < offset[k + 1]; ++i) {
                const Simplex& s = cells[i];
                Simplex t(s.size() - 1);
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    for (std::size_t j = 0, w = 0; j < s.size(); ++j)
                        if (j != drop) t[w++] = s[j];
                    const std::size_t f = offset[k - 1] + lower.at(t);
                    facets[i].push_back(f);
                    cofacets[f].push_back(i);
                }
            }
        }
    }
};

/// Greedy elementary collapses: repeatedly removes a free face together with
/// its unique coface, lowest cell index first. Preserves homotopy type.
inline SimplicialComplex collapse_simplify(const SimplicialComplex& c) {
    if (c.empty()) return c;
    HasseDiagram h(c);
    const std::size_t n = h.size();
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> live_cofaces(n);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> free;
    for (std::size_t i = 0; i < n; ++i) {
        live_cofaces[i] = h.cofacets[i].size();
        if (live_cofaces[i] == 1) free.push(i);
    }
    auto drop = [&](std::size_t cell) {
        alive[cell] = 0;
        for (auto f : h.facets[cell])
            if (alive[f] && --live_cofaces[f] == 1) free.push(f);
    };
    while (!free.empty()) {
        const std::size_t s = free.top();
        free.pop();
        if (!alive[s] || live_cofaces[s] != 1) continue;
        std::size_t t = SIZE_MAX;
        for (auto cf : h.cofacets[s])
            if (alive[cf]) t = cf;
        alive[s] = 0;
        // t is maximal: a live coface of t would give s a second cofacet.
        drop(t);
        for (auto f : h.facets[s])
            if (alive[f] && --live_cofaces[f] == 1) free.push(f);
    }
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i] && live_cofaces[i] == 0) maximal.push_back(h.cells[i]);
    return c.subcomplex(std::move(maximal));
}

/// Complex with one facet removed (its proper faces stay).
inline SimplicialComplex remove_facet(const SimplicialComplex& c, std::size_t facet_index) {
    std::vector<Simplex> out;
    const auto& f = c.facets().at(facet_index);
    for (std::size_t i = 0; i < c.facets().size(); ++i)
        if (i != facet_index) out.push_back(c.facets()[i]);
    if (f.size() > 1)
        for_each_subset(f, f.size() - 1, [&](const Simplex& s) { out.push_back(s); });
    return c.subcomplex(std::move(out));
}

}  // namespace plmorse
