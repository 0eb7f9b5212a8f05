#pragma once

// Simplicial homology over Z, Q and F_p.

#include <string>
#include <vector>

#include "plmorse/collapse.hpp"
#include "plmorse/elimination.hpp"

namespace plmorse {

/// Coefficient choice: the rationals (prime == 0) or a prime field F_p.
struct Coefficients {
    unsigned prime = 0;

    static Coefficients rationals() { return {}; }
    static Coefficients field(unsigned p) {
        if (!is_prime(p)) throw Error("coefficient characteristic " + std::to_string(p) + " is not prime");
        return {p};
    }
    bool is_rational() const { return prime == 0; }
    std::string name() const { return prime == 0 ? "Q" : "F" + std::to_string(prime); }

    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Parses "Q", "F2", "F3", ...
inline Coefficients parse_coefficients(const std::string& s) {
    if (s == "Q") return Coefficients::rationals();
    if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) {
        unsigned p = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw Error("bad coefficient field " + s);
            p = p * 10 + static_cast<unsigned>(s[i] - '0');
        }
        return Coefficients::field(p);
    }
    throw Error("bad coefficient field " + s);
}

/// Integral homology: Betti numbers and torsion coefficients per dimension.
/// Reduced profiles of the empty complex have H~_{-1} = Z (minus_one_rank = 1).
struct HomologyProfile {
    std::vector<std::size_t> betti;
    std::vector<std::vector<Integer>> torsion;
    bool reduced = false;
    std::size_t minus_one_rank = 0;

    int dim() const { return static_cast<int>(betti.size()) - 1; }

    bool vanishes() const {
        if (minus_one_rank) return false;
        for (std::size_t k = 0; k < betti.size(); ++k)
            if (betti[k] || !torsion[k].empty()) return false;
        return true;
    }

    /// True when H_k (reduced or not, per the profile) is non-zero.
    bool nonzero_in(int k) const {
        if (k == -1) return minus_one_rank != 0;
        if (k < 0 || k >= static_cast<int>(betti.size())) return false;
        return betti[static_cast<std::size_t>(k)] || !torsion[static_cast<std::size_t>(k)].empty();
    }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

struct HomologyOptions {
    // Collapse the complex first when it has more than this many facets.
    std::size_t collapse_threshold = 256;
};

namespace detail {

inline SimplicialComplex prepared(const SimplicialComplex& c, const HomologyOptions& opt) {
    if (c.facets().size() > opt.collapse_threshold) return collapse_simplify(c);
    return c;
}

template <class Field>
std::vector<std::size_t> boundary_ranks(const SimplicialComplex& c, Field f) {
    // ranks[k] = rank of boundary from k-chains, ranks[0] = 0
    std::vector<std::size_t> ranks(static_cast<std::size_t>(c.dimension() + 2), 0);
    for (int k = 1; k <= c.dimension(); ++k) ranks[static_cast<std::size_t>(k)] = rank_over(boundary_matrix(c, k), f);
    return ranks;
}

inline std::vector<std::size_t> betti_from_ranks(const SimplicialComplex& c, const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> b;
    for (int k = 0; k <= c.dimension(); ++k) {
        const auto n = c.faces(k).size();
        b.push_back(n - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
    }
    return b;
}

inline void reduce(std::vector<std::size_t>& b) {
    if (!b.empty()) --b[0];
}

}  // namespace detail

/// Betti numbers b_0..b_d over a field. The empty complex yields an empty vector.
inline std::vector<std::size_t> betti(const SimplicialComplex& c, Coefficients coeff, bool reduced = false,
                                      HomologyOptions opt = {}) {
    if (c.empty()) return {};
    const auto k = detail::prepared(c, opt);
    std::vector<std::size_t> b;
    if (coeff.is_rational())
        b = detail::betti_from_ranks(k, detail::boundary_ranks(k, RationalField{}));
    else
        b = detail::betti_from_ranks(k, detail::boundary_ranks(k, PrimeField{coeff.prime}));
    b.resize(static_cast<std::size_t>(c.dimension() + 1), 0);
    if (reduced) detail::reduce(b);
    return b;
}

inline HomologyProfile integral_homology(const SimplicialComplex& c, bool reduced = false, HomologyOptions opt = {}) {
    HomologyProfile h;
    h.reduced = reduced;
    if (c.empty()) {
        h.minus_one_rank = reduced ? 1 : 0;
        return h;
    }
    const auto k = detail::prepared(c, opt);
    const int d = k.dimension();
    std::vector<SmithForm> snf(static_cast<std::size_t>(d + 2));
    for (int j = 1; j <= d; ++j) snf[static_cast<std::size_t>(j)] = smith_normal_form(boundary_matrix(k, j));
    for (int j = 0; j <= c.dimension(); ++j) {
        if (j > d) {
            h.betti.push_back(0);
            h.torsion.emplace_back();
            continue;
        }
        const auto uj = static_cast<std::size_t>(j);
        h.betti.push_back(k.faces(j).size() - snf[uj].rank - snf[uj + 1].rank);
        std::vector<Integer> tors;
        for (const auto& x : snf[uj + 1].invariants)
            if (x > 1) tors.push_back(x);
        h.torsion.push_back(std::move(tors));
    }
    if (reduced) detail::reduce(h.betti);
    return h;
}

/// Vanishing reduced integral homology in every dimension.
inline bool is_z_acyclic(const SimplicialComplex& c) {
    if (c.empty()) throw Error("acyclicity of the empty complex is undefined");
    return integral_homology(c, true).vanishes();
}

/// Ranks of H~_{k-1}(L; F) for k = 0..top, i.e. the degree-shifted reduced
/// Betti numbers. An empty L contributes rank 1 at k = 0.
inline std::vector<std::size_t> shifted_reduced_ranks(const SimplicialComplex& l, Coefficients coeff, int top) {
    std::vector<std::size_t> mu(static_cast<std::size_t>(std::max(top, 0) + 1), 0);
    if (l.empty()) {
        mu[0] = 1;
        return mu;
    }
    const auto b = betti(l, coeff, true);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (j + 1 < mu.size())
            mu[j + 1] = b[j];
        else if (b[j])
            mu.resize(j + 2, 0), mu[j + 1] = b[j];
    return mu;
}

}  // namespace plmorse
