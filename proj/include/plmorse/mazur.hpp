#pragma once

// The dunce hat in the boundary of the cyclic 5-polytope with 8 vertices and
// its regular neighborhood: a contractible 4-manifold that is not a 4-ball.

#include <functional>
#include <string>
#include <vector>

#include "plmorse/constructions.hpp"
#include "plmorse/fundamental_group.hpp"
#include "plmorse/homology.hpp"
#include "plmorse/manifold.hpp"
#include "plmorse/quotient_search.hpp"

namespace plmorse {

struct MazurOptions {
    SearchOptions search;
    // Called with a short message before each stage.
    std::function<void(const std::string&)> progress;
};

struct MazurReport {
    std::size_t cyclic_facets = 0;
    bool embedded = false;                      // dunce hat is a subcomplex of the polytope boundary
    bool triangle_rule = false;                 // each triangle has 1, 8 or a consecutive pair
    std::vector<std::vector<Label>> non_faces;  // triples of 1..8 missing from the polytope boundary
    bool full_subcomplex = false;

    FVector neighborhood_f, boundary_f;
    long long neighborhood_euler = 0;
    HomologyProfile neighborhood_homology;  // reduced, integral
    bool neighborhood_acyclic = false;

    bool boundary_pseudomanifold = false;
    ManifoldCheck boundary_manifold;
    bool boundary_links_spheres = false;
    HomologyProfile boundary_homology;  // unreduced, integral
    bool homology_sphere = false;

    FVector reduced_f;            // after collapses and removal of 3-cells
    std::size_t raw_generators = 0, raw_relators = 0;
    Presentation presentation;    // simplified
    Abelianization abelianization;
    SearchOutcome quotient;
    bool certificate_verified = false;

    bool not_a_ball = false;
    std::string verdict;
};

namespace detail {

// Every codimension-one face lies in exactly two facets.
inline bool closed_pseudomanifold(const SimplicialComplex& c) {
    if (c.empty() || !c.is_pure()) return false;
    SimplexMap<int> count;
    for (const auto& f : c.facets())
        for_each_subset(f, f.size() - 1, [&](const Simplex& s) { ++count[s]; });
    return std::all_of(count.begin(), count.end(), [](const auto& e) { return e.second == 2; });
}

}  // namespace detail

inline MazurReport mazur_neighborhood(const MazurOptions& opt = {}) {
    auto say = [&](const std::string& s) {
        if (opt.progress) opt.progress(s);
    };
    MazurReport r;
    say("polytope and dunce hat");
    const auto c = cyclic_polytope_boundary(5, 8);
    const auto k = dunce_hat8();
    r.cyclic_facets = c.facets().size();
    r.embedded = is_subcomplex(c, k);
    r.full_subcomplex = is_full_subcomplex(c, k);
    r.triangle_rule = true;
    for (const auto& t : k.facet_labels()) {
        bool ok = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto x = t[i].integer();
            ok = ok || x == 1 || x == 8;
            for (std::size_t j = 0; j < t.size(); ++j) ok = ok || t[j].integer() == x + 1;
        }
        r.triangle_rule = r.triangle_rule && ok;
    }
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b)
            for (int e = b + 1; e <= 8; ++e)
                if (!c.contains(c.simplex({a, b, e}))) r.non_faces.push_back({a, b, e});

    say("regular neighborhood in the second derived subdivision");
    const auto n = regular_neighborhood(c, k);
    r.neighborhood_f = n.neighborhood.f_vector();
    r.boundary_f = n.boundary.f_vector();
    r.neighborhood_euler = euler_characteristic(n.neighborhood);

    say("homology of the neighborhood");
    r.neighborhood_homology = integral_homology(n.neighborhood, true);
    r.neighborhood_acyclic = r.neighborhood_homology.vanishes();

    say("boundary links");
    r.boundary_pseudomanifold = detail::closed_pseudomanifold(n.boundary);
    r.boundary_manifold = check_manifold(n.boundary);
    r.boundary_links_spheres = r.boundary_manifold.verdict == Verdict::yes && !r.boundary_manifold.has_boundary &&
                               n.boundary.dimension() == 3;

    say("homology of the boundary");
    r.boundary_homology = integral_homology(n.boundary);
    {
        const auto& h = r.boundary_homology;
        r.homology_sphere = h.betti == std::vector<std::size_t>{1, 0, 0, 1};
        for (const auto& t : h.torsion) r.homology_sphere = r.homology_sphere && t.empty();
    }

    say("fundamental group of the boundary");
    const auto reduced = pi1_reduce(n.boundary);
    r.reduced_f = reduced.f_vector();
    const auto raw = presentation(reduced, reduced.label(0));
    r.raw_generators = static_cast<std::size_t>(raw.generators);
    r.raw_relators = raw.relators.size();
    r.presentation = tietze_simplify(raw);
    r.abelianization = abelianization(r.presentation);

    say("finite quotient search");
    r.quotient = finite_quotient_search(r.presentation, opt.search);
    r.certificate_verified = r.quotient.certificate && verify_certificate(r.presentation, *r.quotient.certificate);

    r.not_a_ball = r.neighborhood_acyclic && r.homology_sphere && r.certificate_verified;
    if (r.not_a_ball)
        r.verdict = "neighborhood is NOT a 4-ball";
    else if (!r.quotient.certificate)
        r.verdict = "inconclusive: no finite quotient found";
    else
        r.verdict = "inconclusive";
    return r;
}

}  // namespace plmorse
