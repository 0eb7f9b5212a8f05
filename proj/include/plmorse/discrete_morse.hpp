#pragma once

// Forman discrete Morse functions and their induced PL functions on the
// barycentric subdivision.

#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plmorse/collapse.hpp"
#include "plmorse/manifold.hpp"
#include "plmorse/morse.hpp"

namespace plmorse {

/// One value per cell, indexed like the cells of a HasseDiagram.
using CellValues = std::vector<double>;

/// (face, coface) cell indices of a codimension-one pair.
using CellPair = std::pair<std::size_t, std::size_t>;

/// Cell values from a map keyed by simplices of c; every cell must appear.
inline CellValues values_from_map(const SimplicialComplex& c, const HasseDiagram& h, const SimplexMap<double>& g) {
    CellValues out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto it = g.find(h.cells[i]);
        if (it == g.end()) throw Error("missing value for cell " + tuple_label(c.labels_of(h.cells[i])));
        out[i] = it->second;
    }
    return out;
}

/// g(S) = dim S.
inline CellValues dimension_function(const HasseDiagram& h) {
    CellValues out;
    for (auto d : h.dim) out.push_back(d);
    return out;
}

struct Validation {
    bool valid = true;
    std::optional<std::size_t> witness;  // first violating cell
    std::string reason;
};

inline Validation validate(const HasseDiagram& h, const CellValues& g) {
    if (g.size() != h.size()) throw Error("discrete Morse function must assign a value to every cell");
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::size_t up = 0, down = 0;
        for (auto f : h.facets[i]) down += g[f] >= g[i];
        for (auto cf : h.cofacets[i]) up += g[cf] <= g[i];
        if (down > 1) return {false, i, "more than one exceptional face"};
        if (up > 1) return {false, i, "more than one exceptional coface"};
        if (down && up) return {false, i, "both an exceptional face and an exceptional coface"};
    }
    return {};
}

namespace detail {

inline void require_valid(const HasseDiagram& h, const CellValues& g) {
    const auto v = validate(h, g);
    if (!v.valid) throw Error("invalid discrete Morse function at cell " + std::to_string(*v.witness) + ": " + v.reason);
}

}  // namespace detail

/// Cells with neither an exceptional face nor an exceptional coface.
inline std::vector<std::size_t> critical_cells(const HasseDiagram& h, const CellValues& g) {
    detail::require_valid(h, g);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        bool critical = true;
        for (auto f : h.facets[i]) critical = critical && g[f] < g[i];
        for (auto cf : h.cofacets[i]) critical = critical && g[cf] > g[i];
        if (critical) out.push_back(i);
    }
    return out;
}

/// Exceptional pairs (face, coface) with g(face) >= g(coface).
inline std::vector<CellPair> matching(const HasseDiagram& h, const CellValues& g) {
    detail::require_valid(h, g);
    std::vector<CellPair> out;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (auto f : h.facets[i])
            if (g[f] >= g[i]) out.emplace_back(f, i);
    return out;
}

namespace detail {

// Topological order of the cells where every face precedes its cofaces except
// matched pairs, whose coface comes first. Ties go to the smallest key.
template <class Key>
std::vector<std::size_t> modified_hasse_order(const HasseDiagram& h, const std::vector<CellPair>& pairs, Key key) {
    const std::size_t n = h.size();
    std::vector<std::size_t> partner(n, SIZE_MAX);
    for (auto [f, c] : pairs) {
        if (partner[f] != SIZE_MAX || partner[c] != SIZE_MAX) throw Error("a cell appears in two matched pairs");
        if (std::find(h.facets[c].begin(), h.facets[c].end(), f) == h.facets[c].end())
            throw Error("matched cells are not a codimension-one face/coface pair");
        partner[f] = c;
        partner[c] = f;
    }
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    auto edge = [&](std::size_t a, std::size_t b) {
        out[a].push_back(b);
        ++indeg[b];
    };
    for (std::size_t c = 0; c < n; ++c) {
        for (auto f : h.facets[c]) {
            if (partner[c] == f)
                edge(c, f);
            else
                edge(f, c);
        }
        // codimension-two faces always precede
        std::vector<std::size_t> second;
        for (auto f : h.facets[c])
            for (auto ff : h.facets[f]) second.push_back(ff);
        std::sort(second.begin(), second.end());
        second.erase(std::unique(second.begin(), second.end()), second.end());
        for (auto ff : second) edge(ff, c);
    }
    using Item = std::pair<decltype(key(0)), std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (!indeg[i]) ready.emplace(key(i), i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        const auto i = ready.top().second;
        ready.pop();
        order.push_back(i);
        for (auto j : out[i])
            if (!--indeg[j]) ready.emplace(key(j), j);
    }
    if (order.size() != n) throw Error("matching is not acyclic");
    return order;
}

inline CellValues values_from_order(const std::vector<std::size_t>& order) {
    CellValues g(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) g[order[r]] = static_cast<double>(r);
    return g;
}

}  // namespace detail

/// Injective values with the same critical cells and matching, given by the
/// rank of each cell in a linear extension ordered by (value, dimension,
/// lexicographic vertex tuple).
inline CellValues genericize(const HasseDiagram& h, const CellValues& g) {
    const auto pairs = matching(h, g);
    // cell indices already sort by dimension, then lexicographically
    return detail::values_from_order(
        detail::modified_hasse_order(h, pairs, [&](std::size_t i) { return std::make_pair(g[i], i); }));
}

/// Synthesizes values from an acyclic matching by a linear extension.
inline CellValues values_from_matching(const HasseDiagram& h, const std::vector<CellPair>& pairs) {
    return detail::values_from_order(detail::modified_hasse_order(h, pairs, [](std::size_t i) { return i; }));
}

/// Random acyclic matching built by greedily adding shuffled pairs that keep
/// the modified Hasse diagram acyclic. `density` is the chance of trying a pair.
template <class Rng>
std::vector<CellPair> random_acyclic_matching(const HasseDiagram& h, Rng& rng, double density = 1.0) {
    std::vector<CellPair> candidates;
    for (std::size_t c = 0; c < h.size(); ++c)
        for (auto f : h.facets[c]) candidates.emplace_back(f, c);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::bernoulli_distribution take(density);
    std::vector<std::size_t> partner(h.size(), SIZE_MAX);
    std::vector<CellPair> chosen;
    // directed successors in the modified diagram
    auto successors = [&](std::size_t x, auto&& visit) {
        for (auto cf : h.cofacets[x])
            if (partner[x] != cf) visit(cf);
        if (partner[x] != SIZE_MAX && h.dim[partner[x]] < h.dim[x]) visit(partner[x]);
    };
    for (auto [f, c] : candidates) {
        if (!take(rng) || partner[f] != SIZE_MAX || partner[c] != SIZE_MAX) continue;
        // flipping f -> c into c -> f closes a cycle iff c is reachable from f
        // without the edge f -> c
        std::vector<char> seen(h.size(), 0);
        std::vector<std::size_t> stack;
        bool cycle = false;
        seen[f] = 1;
        successors(f, [&](std::size_t y) {
            if (y != c && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        });
        while (!stack.empty() && !cycle) {
            const auto x = stack.back();
            stack.pop_back();
            successors(x, [&](std::size_t y) {
                if (y == c) cycle = true;
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            });
        }
        if (cycle) continue;
        partner[f] = c;
        partner[c] = f;
        chosen.emplace_back(f, c);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

struct ConversionResult {
    Subdivision derived;              // bsd of the input with carriers
    VertexOrder order;                // f(v_S) ranked by genericized g(S)
    std::vector<VertexId> cell_vertex;  // Hasse cell index -> derived vertex v_S
    bool guarantees_withheld = false;   // input not verified as a manifold
    std::string note;
};

/// Induced PL function on the derived subdivision: f(v_S) = g(S) after
/// genericization.
inline ConversionResult to_pl_morse(const SimplicialComplex& c, const CellValues& g) {
    HasseDiagram h(c);
    const auto generic = genericize(h, g);
    ConversionResult out;
    out.derived = barycentric_subdivision(c);
    const auto& sd = out.derived.complex;
    out.cell_vertex.assign(h.size(), 0);
    std::vector<std::pair<double, VertexId>> ranked;
    for (VertexId v = 0; v < sd.num_vertices(); ++v) {
        const auto cell = h.index_of(out.derived.carrier[v], c);
        out.cell_vertex[cell] = v;
        ranked.emplace_back(generic[cell], v);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<Label> labels;
    for (auto [x, v] : ranked) labels.push_back(sd.label(v));
    out.order = VertexOrder::from_labels(sd, labels);
    const auto mc = check_manifold(c);
    if (mc.verdict != Verdict::yes) {
        out.guarantees_withheld = true;
        out.note = "input is not a verified combinatorial manifold: " + mc.witness;
    }
    return out;
}

}  // namespace plmorse
