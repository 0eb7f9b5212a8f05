#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace plmorse;

namespace {

const auto Q = Coefficients::rationals();

std::size_t cell(const SimplicialComplex& c, const HasseDiagram& h, std::initializer_list<Label> ls) {
    return h.index_of(c.simplex(ls), c);
}

// Vertex 1 and triangle 234 critical: the cone from 1 collapses onto 1.
CellValues perfect_on_tetrahedron_boundary(const SimplicialComplex& s, const HasseDiagram& h) {
    std::vector<CellPair> pairs{{cell(s, h, {2}), cell(s, h, {1, 2})},         {cell(s, h, {3}), cell(s, h, {1, 3})},
                                {cell(s, h, {4}), cell(s, h, {1, 4})},         {cell(s, h, {2, 3}), cell(s, h, {1, 2, 3})},
                                {cell(s, h, {2, 4}), cell(s, h, {1, 2, 4})}, {cell(s, h, {3, 4}), cell(s, h, {1, 3, 4})}};
    return values_from_matching(h, pairs);
}

std::vector<std::size_t> critical_counts(const HasseDiagram& h, const CellValues& g, int d) {
    std::vector<std::size_t> n(static_cast<std::size_t>(d + 1), 0);
    for (auto i : critical_cells(h, g)) ++n[static_cast<std::size_t>(h.dim[i])];
    return n;
}

// Every face of S, not only codimension-one faces.
std::vector<std::size_t> all_proper_faces(const SimplicialComplex& c, const HasseDiagram& h, std::size_t i) {
    std::vector<std::size_t> out;
    const auto& s = h.cells[i];
    for (std::size_t k = 1; k < s.size(); ++k) for_each_subset(s, k, [&](const Simplex& t) { out.push_back(h.index_of(t, c)); });
    return out;
}

template <class Rng>
CellValues random_function(const HasseDiagram& h, Rng& rng) {
    std::uniform_real_distribution<double> density(0.3, 1.0);
    return values_from_matching(h, random_acyclic_matching(h, rng, density(rng)));
}

}  // namespace

TEST_CASE("validate examples", "[discrete_morse]") {
    for (const auto& [name, c] : fixtures::builtins()) {
        HasseDiagram h(c);
        CHECK(validate(h, dimension_function(h)).valid);
    }

    const auto t = simplex(2);
    HasseDiagram h(t);
    auto g = dimension_function(h);
    g[cell(t, h, {1, 2})] = 5;
    g[cell(t, h, {1, 3})] = 5;
    const auto v = validate(h, g);
    CHECK_FALSE(v.valid);
    REQUIRE(v.witness);
    CHECK(*v.witness == cell(t, h, {1, 2, 3}));

    // one exceptional face and one exceptional coface at the same cell
    auto g2 = dimension_function(h);
    g2[cell(t, h, {1})] = 1.5;
    g2[cell(t, h, {1, 2, 3})] = 0.5;
    CHECK_FALSE(validate(h, g2).valid);

    const auto s = simplex_boundary(3);
    HasseDiagram hs(s);
    CHECK(validate(hs, perfect_on_tetrahedron_boundary(s, hs)).valid);

    CHECK_THROWS_AS(validate(h, CellValues(3, 0.0)), Error);
}

TEST_CASE("critical cells and matching examples", "[discrete_morse]") {
    const auto s = simplex_boundary(3);
    HasseDiagram h(s);
    const auto dim = dimension_function(h);
    CHECK(critical_cells(h, dim).size() == h.size());
    CHECK(matching(h, dim).empty());

    const auto g = perfect_on_tetrahedron_boundary(s, h);
    const auto crit = critical_cells(h, g);
    REQUIRE(crit.size() == 2);
    CHECK(crit[0] == cell(s, h, {1}));
    CHECK(crit[1] == cell(s, h, {2, 3, 4}));
    CHECK(matching(h, g).size() == 6);

    auto bad = dim;
    bad[cell(s, h, {1, 2})] = 9;
    bad[cell(s, h, {1, 3})] = 9;
    CHECK_THROWS_AS(critical_cells(h, bad), Error);
    CHECK_THROWS_AS(matching(h, bad), Error);
}

TEST_CASE("critical cells satisfy the Euler relation", "[discrete_morse]") {
    std::mt19937 rng(71);
    for (const auto& [name, c] : fixtures::builtins()) {
        INFO(name);
        HasseDiagram h(c);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_function(h, rng);
            REQUIRE(validate(h, g).valid);
            long long alt = 0;
            for (auto i : critical_cells(h, g)) alt += h.dim[i] % 2 ? -1 : 1;
            CHECK(alt == euler_characteristic(c));
            // every non-critical cell is matched exactly once
            const auto pairs = matching(h, g);
            CHECK(critical_cells(h, g).size() + 2 * pairs.size() == h.size());
        }
    }
}

TEST_CASE("genericize examples", "[discrete_morse]") {
    const auto t = simplex(2);
    HasseDiagram h(t);
    const auto g = genericize(h, dimension_function(h));
    // cells are numbered by dimension then lexicographically
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(g[i] == static_cast<double>(i));
}

TEST_CASE("genericize keeps the combinatorics", "[discrete_morse]") {
    std::mt19937 rng(73);
    for (const auto& [name, c] : fixtures::builtins()) {
        INFO(name);
        HasseDiagram h(c);
        for (int trial = 0; trial < 10; ++trial) {
            // affine rescaling keeps validity; genericize must undo it
            auto coarse = random_function(h, rng);
            for (auto& y : coarse) y = 0.5 * y - 3.0;
            const auto x = genericize(h, coarse);
            CHECK(validate(h, x).valid);
            std::set<double> distinct(x.begin(), x.end());
            CHECK(distinct.size() == x.size());
            CHECK(critical_cells(h, x) == critical_cells(h, coarse));
            CHECK(matching(h, x) == matching(h, coarse));
            CHECK(genericize(h, x) == x);
            for (std::size_t i = 0; i < h.size(); ++i)
                for (auto f : all_proper_faces(c, h, i))
                    if (h.dim[f] + 1 < h.dim[i]) CHECK(x[f] < x[i]);
        }
        const auto dim = dimension_function(h);
        CHECK(genericize(h, genericize(h, dim)) == genericize(h, dim));
    }
}

TEST_CASE("values from matchings", "[discrete_morse]") {
    const auto t = simplex(2);
    HasseDiagram h(t);
    const auto a = cell(t, h, {1}), ab = cell(t, h, {1, 2}), bc = cell(t, h, {2, 3}), abc = cell(t, h, {1, 2, 3});
    const auto g = values_from_matching(h, {{a, ab}, {bc, abc}});
    CHECK(validate(h, g).valid);
    CHECK(matching(h, g) == std::vector<CellPair>{{a, ab}, {bc, abc}});
    CHECK_THROWS_AS(values_from_matching(h, {{a, ab}, {a, cell(t, h, {1, 3})}}), Error);
    CHECK_THROWS_AS(values_from_matching(h, {{a, bc}}), Error);

    // a closed gradient path around the boundary circle is not acyclic
    const auto c3 = cycle(3);
    HasseDiagram hc(c3);
    CHECK_THROWS_AS(values_from_matching(hc, {{cell(c3, hc, {1}), cell(c3, hc, {1, 2})},
                                              {cell(c3, hc, {2}), cell(c3, hc, {2, 3})},
                                              {cell(c3, hc, {3}), cell(c3, hc, {1, 3})}}),
                    Error);
}

TEST_CASE("conversion examples", "[discrete_morse]") {
    const auto s = simplex_boundary(3);
    HasseDiagram h(s);
    const auto perfect = to_pl_morse(s, perfect_on_tetrahedron_boundary(s, h));
    CHECK_FALSE(perfect.guarantees_withheld);
    CHECK(perfect.derived.complex.f_vector().counts == std::vector<std::size_t>{14, 36, 24});
    const auto rep = analyze(perfect.derived.complex, perfect.order);
    CHECK(std::count_if(rep.records.begin(), rep.records.end(), [](const auto& r) { return r.h_critical(); }) == 2);
    CHECK(rep.over(Q).mu == std::vector<std::size_t>{1, 0, 1});
    CHECK(rep.pl_morse.verdict == Verdict::yes);

    const auto dim = to_pl_morse(s, dimension_function(h));
    const auto rd = analyze(dim.derived.complex, dim.order);
    CHECK(rd.over(Q).mu == std::vector<std::size_t>{4, 6, 4});
    CHECK(rd.over(Q).euler_equation);
    CHECK(rd.euler_characteristic == 2);

    const auto d = dunce_hat8();
    const auto w = to_pl_morse(d, dimension_function(HasseDiagram(d)));
    CHECK(w.guarantees_withheld);
    CHECK_FALSE(w.note.empty());

    auto bad = dimension_function(h);
    bad[cell(s, h, {1, 2})] = 9;
    bad[cell(s, h, {1, 3})] = 9;
    CHECK_THROWS_AS(to_pl_morse(s, bad), Error);
}

TEST_CASE("conversion of g = dim on the triangle", "[discrete_morse]") {
    const auto t = simplex(2);
    HasseDiagram h(t);
    const auto conv = to_pl_morse(t, dimension_function(h));
    const auto& sd = conv.derived.complex;
    const auto rep = analyze(sd, conv.order);
    REQUIRE(rep.has_boundary);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& r = rep.record(sd.label(conv.cell_vertex[i]));
        if (h.dim[i] == 2) {
            CHECK(r.boundary.kind == BoundaryKind::interior);
            CHECK(r.index() == 2);
        } else {
            CHECK(r.boundary.kind == BoundaryKind::plus_critical);
            CHECK(r.boundary.index == h.dim[i]);
        }
    }
}

TEST_CASE("induced PL functions have the critical cells as critical vertices", "[discrete_morse]") {
    std::mt19937 rng(79);
    for (const auto& c : {simplex_boundary(3), simplex_boundary(4), torus7()}) {
        HasseDiagram h(c);
        const int d = c.dimension();
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_function(h, rng);
            const auto conv = to_pl_morse(c, g);
            REQUIRE_FALSE(conv.guarantees_withheld);
            const auto& sd = conv.derived.complex;
            const auto rep = analyze(sd, conv.order, {{Q, Coefficients::field(2)}, true});
            const auto crit = critical_cells(h, g);
            std::set<std::size_t> critical(crit.begin(), crit.end());
            for (std::size_t i = 0; i < h.size(); ++i) {
                const auto& r = rep.record(sd.label(conv.cell_vertex[i]));
                if (critical.count(i)) {
                    CHECK(r.h_critical());
                    CHECK(r.index() == h.dim[i]);
                    CHECK(r.over(Q).total == 1);
                    CHECK(r.indices.size() == 1);
                } else {
                    CHECK(r.status == Status::h_regular);
                    CHECK(r.strong_regularity == StrongRegularity::strongly_regular);
                }
            }
            auto expected = critical_counts(h, g, d);
            CHECK(rep.over(Q).mu == expected);
            CHECK(rep.pl_morse.verdict == Verdict::yes);
        }
    }
}

TEST_CASE("induced PL functions on discs classify boundary cells", "[discrete_morse]") {
    std::mt19937 rng(83);
    for (const auto& c : {simplex(2), cone(cycle(5))}) {
        HasseDiagram h(c);
        const auto bd = boundary_subcomplex(c);
        auto on_boundary = [&](std::size_t i) {
            Simplex s;
            for (auto v : h.cells[i]) {
                auto id = bd.find(c.label(v));
                if (!id) return false;
                s.push_back(*id);
            }
            return bd.contains(s);
        };
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_function(h, rng);
            const auto conv = to_pl_morse(c, g);
            const auto& sd = conv.derived.complex;
            const auto rep = analyze(sd, conv.order);
            const auto crit = critical_cells(h, g);
            std::vector<std::size_t> partner(h.size(), SIZE_MAX);
            for (auto [f, cf] : matching(h, g)) partner[f] = cf, partner[cf] = f;
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (!on_boundary(i)) continue;
                const auto& r = rep.record(sd.label(conv.cell_vertex[i]));
                INFO("cell " << i << " dim " << h.dim[i]);
                if (partner[i] == SIZE_MAX) {
                    CHECK(r.boundary.kind == BoundaryKind::plus_critical);
                    CHECK(r.boundary.index == h.dim[i]);
                } else if (on_boundary(partner[i])) {
                    CHECK(r.boundary.kind == BoundaryKind::boundary_regular);
                } else {
                    CHECK(r.boundary.kind == BoundaryKind::minus_critical);
                    CHECK(r.boundary.index == h.dim[i]);
                }
            }
        }
    }
}
