#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "plmorse/plmorse.hpp"

namespace fixtures {

using namespace plmorse;

inline std::vector<std::pair<std::string, SimplicialComplex>> builtins() {
    return {{"torus7", torus7()},
            {"rp2_6", rp2_6()},
            {"dunce_hat8", dunce_hat8()},
            {"boundary_simplex_3", simplex_boundary(3)},
            {"boundary_simplex_4", simplex_boundary(4)},
            {"cyclic_4_7", cyclic_polytope_boundary(4, 7)}};
}

inline std::vector<std::pair<std::string, SimplicialComplex>> closed_manifolds() {
    return {{"torus7", torus7()},
            {"rp2_6", rp2_6()},
            {"boundary_simplex_3", simplex_boundary(3)},
            {"boundary_simplex_4", simplex_boundary(4)}};
}

/// Keeps each facet with probability 1/2; never empty.
template <class Rng>
SimplicialComplex random_subcomplex(const SimplicialComplex& c, Rng& rng) {
    std::bernoulli_distribution keep(0.5);
    std::vector<Simplex> facets;
    for (const auto& f : c.facets())
        if (keep(rng)) facets.push_back(f);
    if (facets.empty()) facets.push_back(c.facets()[rng() % c.facets().size()]);
    return c.subcomplex(std::move(facets));
}

/// 50 random subcomplexes drawn evenly from the built-ins.
inline std::vector<SimplicialComplex> random_subcomplexes(unsigned seed, std::size_t count = 50) {
    std::mt19937 rng(seed);
    const auto all = builtins();
    std::vector<SimplicialComplex> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_subcomplex(all[i % all.size()].second, rng));
    return out;
}

inline std::vector<Label> labels(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

inline VertexOrder order(const SimplicialComplex& c, std::initializer_list<int> xs) {
    return VertexOrder::from_labels(c, labels(xs));
}

/// Triangle disc with vertices a, b, c.
inline SimplicialComplex triangle_abc() { return SimplicialComplex::from_facets({{"a", "b", "c"}}); }

}  // namespace fixtures
