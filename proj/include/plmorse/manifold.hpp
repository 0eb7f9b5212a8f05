#pragma once

// Combinatorial manifold recognition through vertex links.

#include <string>

#include "plmorse/collapse.hpp"
#include "plmorse/homology.hpp"

namespace plmorse {

enum class Verdict { yes, no, unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

/// Outcome of recognizing a complex as a PL sphere or ball of a given dimension.
struct SphereBall {
    enum class Kind { sphere, ball, neither, unknown } kind;
    std::string reason;
};

namespace detail {

inline SphereBall neither(std::string why) { return {SphereBall::Kind::neither, std::move(why)}; }

inline bool collapses_to_point(const SimplicialComplex& c) {
    const auto k = collapse_simplify(c);
    return k.num_vertices() == 1 && k.dimension() == 0;
}

}  // namespace detail

/// Decides whether `c` is a PL k-sphere or k-ball. Exact for k <= 2. For
/// k >= 3 a positive answer requires a collapse certificate (c, or c minus
/// a facet, collapses to a point); homology obstructions give `neither`.
inline SphereBall sphere_or_ball(const SimplicialComplex& c, int k) {
    using K = SphereBall::Kind;
    if (k < 0) return c.empty() ? SphereBall{K::sphere, ""} : detail::neither("expected the empty complex");
    if (c.dimension() != k || !c.is_pure()) return detail::neither("not pure of dimension " + std::to_string(k));
    if (k == 0) {
        if (c.num_vertices() == 1) return {K::ball, ""};
        if (c.num_vertices() == 2) return {K::sphere, ""};
        return detail::neither(std::to_string(c.num_vertices()) + " points");
    }
    if (!is_connected(c)) return detail::neither("disconnected");
    bool boundary = false, unknown = false;
    std::string unknown_reason;
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        const auto l = link(c, Simplex{v});
        const auto r = sphere_or_ball(l, k - 1);
        if (r.kind == K::neither) return detail::neither("link of " + c.label(v).to_string() + ": " + r.reason);
        if (r.kind == K::unknown && !unknown) {
            unknown = true;
            unknown_reason = "link of " + c.label(v).to_string() + ": " + r.reason;
        }
        boundary = boundary || r.kind == K::ball;
    }
    if (k <= 2) {
        const auto chi = euler_characteristic(c);
        if (k == 1) return {boundary ? K::ball : K::sphere, ""};
        if (!boundary && chi == 2) return {K::sphere, ""};
        if (boundary && chi == 1) return {K::ball, ""};
        return detail::neither("surface with Euler characteristic " + std::to_string(chi));
    }
    const auto h = integral_homology(c, true);
    for (int j = 0; j < k; ++j)
        if (h.nonzero_in(j)) return detail::neither("reduced homology in degree " + std::to_string(j));
    const bool top = h.nonzero_in(k);
    if (boundary && top) return detail::neither("bounded manifold with top homology");
    if (!boundary && !top) return detail::neither("closed manifold without fundamental class");
    if (unknown) return {K::unknown, unknown_reason};
    if (boundary) {
        if (detail::collapses_to_point(c)) return {K::ball, ""};
        return {K::unknown, "homology ball without collapse certificate"};
    }
    if (detail::collapses_to_point(remove_facet(c, 0))) return {K::sphere, ""};
    return {K::unknown, "homology sphere without collapse certificate"};
}

struct ManifoldCheck {
    Verdict verdict = Verdict::yes;
    int dimension = -1;
    bool has_boundary = false;
    std::string witness;  // failing vertex and reason, when not `yes`
};

/// Combinatorial d-manifold (possibly with boundary): pure, and every vertex
/// link a PL (d-1)-sphere or ball. Exact for d <= 3.
inline ManifoldCheck check_manifold(const SimplicialComplex& c) {
    ManifoldCheck out;
    out.dimension = c.dimension();
    if (c.empty()) return out;
    if (!c.is_pure()) {
        out.verdict = Verdict::no;
        out.witness = "complex is not pure";
        return out;
    }
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        const auto r = sphere_or_ball(link(c, Simplex{v}), c.dimension() - 1);
        if (r.kind == SphereBall::Kind::neither) {
            out.verdict = Verdict::no;
            out.witness = "vertex " + c.label(v).to_string() + ": " + r.reason;
            return out;
        }
        if (r.kind == SphereBall::Kind::unknown && out.verdict == Verdict::yes) {
            out.verdict = Verdict::unknown;
            out.witness = "vertex " + c.label(v).to_string() + ": " + r.reason;
        }
        out.has_boundary = out.has_boundary || r.kind == SphereBall::Kind::ball;
    }
    return out;
}

}  // namespace plmorse
