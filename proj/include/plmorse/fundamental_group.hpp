#pragma once

// Edge-path group presentations and Tietze simplification.

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "plmorse/collapse.hpp"
#include "plmorse/elimination.hpp"

namespace plmorse {

/// A word over generators 1..n; letter +i is generator i, -i its inverse.
using Word = std::vector<int>;

struct Presentation {
    int generators = 0;
    std::vector<Word> relators;

    std::size_t total_length() const {
        std::size_t n = 0;
        for (const auto& r : relators) n += r.size();
        return n;
    }
};

inline Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) x = -x;
    return out;
}

inline Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

/// Free and cyclic reduction.
inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t a = 0, b = r.size();
    while (b - a >= 2 && r[a] == -r[b - 1]) {
        ++a;
        --b;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

/// Canonical representative of the cyclic word up to rotation and inversion.
inline Word canonical_cyclic(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse(w)})
        for (std::size_t i = 0; i < base.size(); ++i) {
            Word rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
            if (rot < best) best = rot;
        }
    return best;
}

inline std::string word_to_string(const Word& w, const std::vector<std::string>& names = {}) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int g = std::abs(w[i]);
        if (i) s += " ";
        s += g <= static_cast<int>(names.size()) ? names[static_cast<std::size_t>(g - 1)] : "g" + std::to_string(g);
        if (w[i] < 0) s += "^-1";
    }
    return s;
}

/// Edge-path group of the 2-skeleton. Generators are the edges outside a BFS
/// spanning tree (neighbors in increasing label order), oriented from the
/// smaller to the larger vertex and numbered lexicographically; relators are
/// triangle boundaries.
inline Presentation presentation(const SimplicialComplex& c, const Label& basepoint) {
    const auto root = c.id_of(basepoint);
    if (!is_connected(c)) throw Error("fundamental group requires a connected complex");
    Presentation p;
    if (c.dimension() < 1) return p;
    const auto& edges = c.faces(1);
    std::vector<std::vector<VertexId>> adj(c.num_vertices());
    for (const auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> seen(c.num_vertices(), 0);
    SimplexSet tree;
    std::deque<VertexId> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                tree.insert(v < w ? Simplex{v, w} : Simplex{w, v});
                queue.push_back(w);
            }
    }
    std::vector<int> gen(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!tree.count(edges[i])) gen[i] = ++p.generators;
    if (c.dimension() < 2) return p;
    const auto& emap = c.face_map(1);
    for (const auto& t : c.faces(2)) {
        Word w;
        auto letter = [&](VertexId a, VertexId b, int sign) {
            const int g = gen[emap.at(Simplex{a, b})];
            if (g) w.push_back(sign * g);
        };
        letter(t[0], t[1], 1);
        letter(t[1], t[2], 1);
        letter(t[0], t[2], -1);
        p.relators.push_back(std::move(w));
    }
    return p;
}

/// Greedy deterministic Tietze simplification. Repeatedly picks a relator
/// in which some generator occurs exactly once, solves for that generator and
/// substitutes it everywhere, preferring the move that shortens the total
/// relator length most. Each move removes one generator, so the procedure
/// terminates; a move is skipped when it would push the total length past
/// `growth_cap` times the initial length.
inline Presentation tietze_simplify(const Presentation& in, double growth_cap = 2.0) {
    const auto ngen = static_cast<std::size_t>(in.generators);
    std::vector<Word> rels;
    for (const auto& r : in.relators) rels.push_back(cyclic_reduce(r));
    std::vector<char> active(ngen + 1, 1);
    active[0] = 0;
    std::vector<std::size_t> occ(ngen + 1, 0);
    std::vector<std::vector<std::size_t>> where(ngen + 1);
    std::vector<std::size_t> version(rels.size(), 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        total += rels[i].size();
        for (int x : rels[i]) {
            const auto g = static_cast<std::size_t>(std::abs(x));
            ++occ[g];
            where[g].push_back(i);
        }
    }
    const std::size_t cap =
        static_cast<std::size_t>(growth_cap * static_cast<double>(std::max<std::size_t>(total, 16)));

    struct Move {
        long long delta;
        std::size_t len, gen, rel, version;
        bool operator>(const Move& o) const {
            if (delta != o.delta) return delta > o.delta;
            if (len != o.len) return len > o.len;
            if (rel != o.rel) return rel > o.rel;
            return gen > o.gen;
        }
    };
    std::priority_queue<Move, std::vector<Move>, std::greater<>> heap;

    auto singles = [](const Word& r) {
        std::map<std::size_t, int> count;
        for (int x : r) ++count[static_cast<std::size_t>(std::abs(x))];
        std::vector<std::size_t> out;
        for (auto [g, n] : count)
            if (n == 1) out.push_back(g);
        return out;
    };
    auto delta_of = [&](std::size_t g, std::size_t len) {
        const auto l = static_cast<long long>(len);
        return (static_cast<long long>(occ[g]) - 1) * (l - 2) - l;
    };
    auto offer = [&](std::size_t i) {
        for (auto g : singles(rels[i])) heap.push({delta_of(g, rels[i].size()), rels[i].size(), g, i, version[i]});
    };
    for (std::size_t i = 0; i < rels.size(); ++i) offer(i);

    while (!heap.empty()) {
        const Move m = heap.top();
        heap.pop();
        if (m.version != version[m.rel] || !active[m.gen] || rels[m.rel].empty()) continue;
        const long long d = delta_of(m.gen, rels[m.rel].size());
        if (d != m.delta) {
            heap.push({d, m.len, m.gen, m.rel, m.version});
            continue;
        }
        if (d > 0 && total + static_cast<std::size_t>(d) > cap) continue;

        // rotate r to g^e * rest = 1, so g = rest^-1 (e = 1) or rest (e = -1)
        const Word r = rels[m.rel];
        const auto pos = static_cast<std::size_t>(
            std::find_if(r.begin(), r.end(), [&](int x) { return static_cast<std::size_t>(std::abs(x)) == m.gen; }) -
            r.begin());
        Word rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
        rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        const Word value = free_reduce(r[pos] > 0 ? inverse(rest) : rest);
        const Word value_inv = inverse(value);

        auto forget = [&](std::size_t i) {
            total -= rels[i].size();
            for (int x : rels[i]) --occ[static_cast<std::size_t>(std::abs(x))];
        };
        forget(m.rel);
        rels[m.rel].clear();
        ++version[m.rel];

        auto targets = where[m.gen];
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (auto i : targets) {
            if (i == m.rel || rels[i].empty()) continue;
            const auto g = static_cast<int>(m.gen);
            if (std::none_of(rels[i].begin(), rels[i].end(), [&](int x) { return std::abs(x) == g; })) continue;
            Word w;
            for (int x : rels[i]) {
                if (x == g)
                    w.insert(w.end(), value.begin(), value.end());
                else if (x == -g)
                    w.insert(w.end(), value_inv.begin(), value_inv.end());
                else
                    w.push_back(x);
            }
            forget(i);
            rels[i] = cyclic_reduce(w);
            ++version[i];
            total += rels[i].size();
            for (int x : rels[i]) {
                const auto h = static_cast<std::size_t>(std::abs(x));
                ++occ[h];
                where[h].push_back(i);
            }
        }
        active[m.gen] = 0;
        where[m.gen].clear();
        for (auto i : targets)
            if (!rels[i].empty()) offer(i);
    }

    // drop trivial and duplicate relators
    std::vector<Word> kept;
    std::map<Word, char> seen;
    for (auto& r : rels) {
        if (r.empty()) continue;
        if (seen.emplace(canonical_cyclic(r), 1).second) kept.push_back(std::move(r));
    }
    rels = std::move(kept);

    // renumber surviving generators
    std::vector<int> renum(active.size(), 0);
    Presentation out;
    for (std::size_t g = 1; g < active.size(); ++g)
        if (active[g]) renum[g] = ++out.generators;
    for (const auto& r : rels) {
        Word w;
        for (int x : r) w.push_back(x > 0 ? renum[static_cast<std::size_t>(x)] : -renum[static_cast<std::size_t>(-x)]);
        out.relators.push_back(std::move(w));
    }
    return out;
}

struct Abelianization {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

/// Smith normal form of the relator exponent-sum matrix.
inline Abelianization abelianization(const Presentation& p) {
    SparseIntMatrix m(p.relators.size(), static_cast<std::size_t>(p.generators));
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        std::map<int, long long> sums;
        for (int x : p.relators[i]) sums[std::abs(x)] += x > 0 ? 1 : -1;
        for (auto [g, s] : sums)
            if (s) m.set(i, static_cast<std::size_t>(g - 1), s);
    }
    const auto snf = smith_normal_form(m);
    Abelianization a;
    a.free_rank = static_cast<std::size_t>(p.generators) - snf.rank;
    for (const auto& d : snf.invariants)
        if (d > 1) a.torsion.push_back(d);
    return a;
}

/// Complex with the same fundamental group and few cells: alternate greedy
/// collapses with removal of top cells of dimension >= 3 (attaching such
/// cells does not change the fundamental group).
inline SimplicialComplex pi1_reduce(const SimplicialComplex& c) {
    SimplicialComplex k = collapse_simplify(c);
    while (k.dimension() >= 3) {
        std::size_t top = 0;
        while (static_cast<int>(k.facets()[top].size()) != k.dimension() + 1) ++top;
        k = collapse_simplify(remove_facet(k, top));
    }
    return skeleton(k, 2);
}

}  // namespace plmorse
