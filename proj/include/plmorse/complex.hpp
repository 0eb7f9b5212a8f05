#pragma once

// Finite abstract simplicial complexes stored by their facets.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "plmorse/label.hpp"

namespace plmorse {

/// Precondition or input violation reported by any module.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using VertexId = std::uint32_t;

/// Sorted, duplicate-free vertex ids of one complex.
using Simplex = boost::container::small_vector<VertexId, 6>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const { return boost::hash_range(s.begin(), s.end()); }
};

template <class T>
using SimplexMap = std::unordered_map<Simplex, T, SimplexHash>;
using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

inline bool is_face_of(const Simplex& s, const Simplex& t) {
    return s.size() <= t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
}

/// Calls fn(subset) for every size-k subset of s, in lexicographic order.
template <class Fn>
void for_each_subset(const Simplex& s, std::size_t k, Fn&& fn) {
    const std::size_t n = s.size();
    if (k > n) return;
    if (k == 0) {
        fn(Simplex{});
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Simplex sub(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) sub[i] = s[idx[i]];
        fn(static_cast<const Simplex&>(sub));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// f-vector: face counts for dimensions 0..d.
struct FVector {
    std::vector<std::size_t> counts;
    friend bool operator==(const FVector&, const FVector&) = default;
};

class SimplicialComplex {
  public:
    SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

    /// Builds a complex from facet label lists. Non-maximal facets are absorbed.
    static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facets) {
        std::vector<Label> labels;
        for (const auto& f : facets) {
            if (f.empty()) throw Error("empty facet");
            labels.insert(labels.end(), f.begin(), f.end());
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        std::vector<Simplex> ids;
        ids.reserve(facets.size());
        for (const auto& f : facets) {
            Simplex s;
            for (const auto& l : f) {
                auto it = std::lower_bound(labels.begin(), labels.end(), l);
                s.push_back(static_cast<VertexId>(it - labels.begin()));
            }
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw Error("duplicate vertex within a facet");
            ids.push_back(std::move(s));
        }
        return from_sorted_ids(std::move(labels), std::move(ids));
    }

    /// Builds a complex from facets given as ids into `labels`, which must be
    /// strictly increasing. Each facet must be a sorted duplicate-free id list.
    /// Unused labels are dropped.
    static SimplicialComplex from_sorted_ids(std::vector<Label> labels, std::vector<Simplex> facets) {
        SimplicialComplex c;
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        absorb_non_maximal(facets, labels.size());

        std::vector<char> used(labels.size(), 0);
        for (const auto& f : facets)
            for (auto v : f) used[v] = 1;
        std::vector<VertexId> remap(labels.size(), 0);
        VertexId next = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!used[i]) continue;
            remap[i] = next++;
            c.labels_.push_back(std::move(labels[i]));
        }
        if (next != labels.size())
            for (auto& f : facets)
                for (auto& v : f) v = remap[v];
        c.facets_ = std::move(facets);
        for (const auto& f : c.facets_) c.dim_ = std::max(c.dim_, static_cast<int>(f.size()) - 1);
        c.cache_->faces.resize(static_cast<std::size_t>(c.dim_ + 1));
        c.cache_->index.resize(static_cast<std::size_t>(c.dim_ + 1));
        return c;
    }

    /// Subcomplex generated by `facets` (ids of this complex), relabelled compactly.
    SimplicialComplex subcomplex(std::vector<Simplex> facets) const {
        for (const auto& f : facets)
            if (f.empty()) throw Error("empty facet");
        return from_sorted_ids(labels_, std::move(facets));
    }

    int dimension() const { return dim_; }
    bool empty() const { return facets_.empty(); }
    std::size_t num_vertices() const { return labels_.size(); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(VertexId v) const { return labels_.at(v); }
    const std::vector<Simplex>& facets() const { return facets_; }

    std::optional<VertexId> find(const Label& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || *it != l) return std::nullopt;
        return static_cast<VertexId>(it - labels_.begin());
    }

    VertexId id_of(const Label& l) const {
        auto v = find(l);
        if (!v) throw Error("unknown vertex " + l.to_string());
        return *v;
    }

    Simplex simplex(std::span<const Label> ls) const {
        Simplex s;
        for (const auto& l : ls) s.push_back(id_of(l));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("duplicate vertex in simplex");
        return s;
    }
    Simplex simplex(std::initializer_list<Label> ls) const {
        return simplex(std::span<const Label>(ls.begin(), ls.size()));
    }

    std::vector<Label> labels_of(const Simplex& s) const {
        std::vector<Label> out;
        out.reserve(s.size());
        for (auto v : s) out.push_back(labels_.at(v));
        return out;
    }

    std::vector<std::vector<Label>> facet_labels() const {
        std::vector<std::vector<Label>> out;
        out.reserve(facets_.size());
        for (const auto& f : facets_) out.push_back(labels_of(f));
        return out;
    }

    bool is_pure() const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const Simplex& f) { return static_cast<int>(f.size()) == dim_ + 1; });
    }

    /// k-faces in lexicographic order; cached after the first call.
    const std::vector<Simplex>& faces(int k) const {
        if (k < 0 || k > dim_) throw Error("face dimension " + std::to_string(k) + " out of range");
        std::lock_guard lock(cache_->mutex);
        auto& slot = cache_->faces[static_cast<std::size_t>(k)];
        if (!slot) {
            const auto size = static_cast<std::size_t>(k + 1);
            std::vector<Simplex> out;
            if (k == 0) {
                out.resize(labels_.size());
                for (VertexId v = 0; v < labels_.size(); ++v) out[v] = Simplex{v};
            } else if (k == dim_ && is_pure()) {
                out = facets_;
            } else {
                SimplexSet seen;
                for (const auto& f : facets_)
                    for_each_subset(f, size, [&](const Simplex& s) { seen.insert(s); });
                out.assign(seen.begin(), seen.end());
                std::sort(out.begin(), out.end());
            }
            slot = std::make_unique<std::vector<Simplex>>(std::move(out));
        }
        return *slot;
    }

    /// Position of s within faces(dim s), if s is a face.
    std::optional<std::size_t> face_index(const Simplex& s) const {
        const int k = static_cast<int>(s.size()) - 1;
        if (k < 0 || k > dim_) return std::nullopt;
        const auto& list = faces(k);
        auto it = std::lower_bound(list.begin(), list.end(), s);
        if (it == list.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - list.begin());
    }

    /// Hash index for faces(k), used by bulk lookups.
    const SimplexMap<std::size_t>& face_map(int k) const {
        const auto& list = faces(k);
        std::lock_guard lock(cache_->mutex);
        auto& slot = cache_->index[static_cast<std::size_t>(k)];
        if (!slot) {
            auto m = std::make_unique<SimplexMap<std::size_t>>();
            m->reserve(list.size());
            for (std::size_t i = 0; i < list.size(); ++i) m->emplace(list[i], i);
            slot = std::move(m);
        }
        return *slot;
    }

    bool contains(const Simplex& s) const {
        if (s.empty()) return true;
        return face_index(s).has_value();
    }

    /// Indices of facets containing vertex v.
    const std::vector<std::size_t>& facets_of_vertex(VertexId v) const {
        std::lock_guard lock(cache_->mutex);
        if (!cache_->incidence) {
            auto inc = std::make_unique<std::vector<std::vector<std::size_t>>>(labels_.size());
            for (std::size_t i = 0; i < facets_.size(); ++i)
                for (auto w : facets_[i]) (*inc)[w].push_back(i);
            cache_->incidence = std::move(inc);
        }
        return cache_->incidence->at(v);
    }

    FVector f_vector() const {
        FVector fv;
        for (int k = 0; k <= dim_; ++k) fv.counts.push_back(faces(k).size());
        return fv;
    }

    std::size_t num_simplices() const {
        std::size_t n = 0;
        for (int k = 0; k <= dim_; ++k) n += faces(k).size();
        return n;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

  private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::unique_ptr<std::vector<Simplex>>> faces;
        std::vector<std::unique_ptr<SimplexMap<std::size_t>>> index;
        std::unique_ptr<std::vector<std::vector<std::size_t>>> incidence;
    };

    static void absorb_non_maximal(std::vector<Simplex>& facets, std::size_t nverts) {
        if (facets.empty()) return;
        std::size_t lo = facets.front().size(), hi = lo;
        for (const auto& f : facets) {
            lo = std::min(lo, f.size());
            hi = std::max(hi, f.size());
        }
        if (lo == hi) return;
        std::vector<std::size_t> order(facets.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
        std::vector<std::vector<std::size_t>> incidence(nverts);
        std::vector<char> keep(facets.size(), 0);
        for (auto i : order) {
            const auto& f = facets[i];
            VertexId rare = f.front();
            for (auto v : f)
                if (incidence[v].size() < incidence[rare].size()) rare = v;
            bool covered = false;
            for (auto j : incidence[rare])
                if (is_face_of(f, facets[j])) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            keep[i] = 1;
            for (auto v : f) incidence[v].push_back(i);
        }
        std::vector<Simplex> out;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (keep[i]) out.push_back(std::move(facets[i]));
        facets = std::move(out);
    }

    std::vector<Label> labels_;
    std::vector<Simplex> facets_;
    int dim_ = -1;
    std::shared_ptr<Cache> cache_;
};

inline const std::vector<Simplex>& faces(const SimplicialComplex& c, int k) { return c.faces(k); }

inline long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    for (int k = 0; k <= c.dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.faces(k).size());
    return chi;
}

inline void require_face(const SimplicialComplex& c, const Simplex& s) {
    if (s.empty() || !c.contains(s)) throw Error("simplex is not a face of the complex");
}

/// All faces of facets containing s.
inline SimplicialComplex star(const SimplicialComplex& c, const Simplex& s) {
    require_face(c, s);
    std::vector<Simplex> out;
    for (auto i : c.facets_of_vertex(s.front()))
        if (is_face_of(s, c.facets()[i])) out.push_back(c.facets()[i]);
    return c.subcomplex(std::move(out));
}

/// {t : t ∪ s is a face, t ∩ s = ∅}; empty when s is a facet.
inline SimplicialComplex link(const SimplicialComplex& c, const Simplex& s) {
    require_face(c, s);
    std::vector<Simplex> out;
    for (auto i : c.facets_of_vertex(s.front())) {
        const auto& f = c.facets()[i];
        if (!is_face_of(s, f)) continue;
        Simplex t;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(t));
        if (!t.empty()) out.push_back(std::move(t));
    }
    return c.subcomplex(std::move(out));
}

inline SimplicialComplex star(const SimplicialComplex& c, const Label& v) { return star(c, Simplex{c.id_of(v)}); }
inline SimplicialComplex link(const SimplicialComplex& c, const Label& v) { return link(c, Simplex{c.id_of(v)}); }

/// Full subcomplex on the vertex ids marked in `keep` (indexed by vertex id).
inline SimplicialComplex span_ids(const SimplicialComplex& c, const std::vector<char>& keep) {
    std::vector<Simplex> out;
    for (const auto& f : c.facets()) {
        Simplex t;
        for (auto v : f)
            if (keep[v]) t.push_back(v);
        if (!t.empty()) out.push_back(std::move(t));
    }
    for (VertexId v = 0; v < c.num_vertices(); ++v)
        if (keep[v]) out.push_back(Simplex{v});
    return c.subcomplex(std::move(out));
}

/// Induced subcomplex on a set of vertex labels.
inline SimplicialComplex span(const SimplicialComplex& c, std::span<const Label> w) {
    std::vector<char> keep(c.num_vertices(), 0);
    for (const auto& l : w) keep[c.id_of(l)] = 1;
    return span_ids(c, keep);
}
inline SimplicialComplex span(const SimplicialComplex& c, const std::vector<Label>& w) {
    return span(c, std::span<const Label>(w));
}

/// k-skeleton.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
    if (k >= c.dimension()) return c;
    if (k < 0) return SimplicialComplex{};
    std::vector<Simplex> out = c.faces(k);
    return c.subcomplex(std::move(out));
}

inline std::string tuple_label(const std::vector<Label>& ls) {
    std::string s = "(";
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) s += ",";
        s += ls[i].to_string();
    }
    return s + ")";
}

/// Barycentric subdivision with its carrier map: new vertex id -> simplex of
/// the original complex.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> carrier;
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& c) {
    Subdivision out;
    if (c.empty()) return out;
    struct Node {
        std::string label;
        Simplex cell;
    };
    std::vector<Node> nodes;
    for (int k = 0; k <= c.dimension(); ++k)
        for (const auto& s : c.faces(k)) nodes.push_back({tuple_label(c.labels_of(s)), s});
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.label < b.label; });
    std::vector<Label> labels;
    labels.reserve(nodes.size());
    SimplexMap<VertexId> id;
    id.reserve(nodes.size());
    out.carrier.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        id.emplace(nodes[i].cell, static_cast<VertexId>(i));
        labels.emplace_back(std::move(nodes[i].label));
        out.carrier.push_back(std::move(nodes[i].cell));
    }

    std::vector<Simplex> facets;
    for (const auto& f : c.facets()) {
        const std::size_t m = f.size();
        std::vector<VertexId> by_mask(std::size_t{1} << m, 0);
        for (std::size_t mask = 1; mask < by_mask.size(); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            by_mask[mask] = id.at(s);
        }
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Simplex chain;
            std::size_t mask = 0;
            for (auto p : perm) {
                mask |= std::size_t{1} << p;
                chain.push_back(by_mask[mask]);
            }
            std::sort(chain.begin(), chain.end());
            facets.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = SimplicialComplex::from_sorted_ids(std::move(labels), std::move(facets));
    return out;
}

/// Faces of dimension d-1 lying in exactly one facet, for a pure d-complex
/// in which every (d-1)-face lies in at most two facets.
inline SimplicialComplex boundary_subcomplex(const SimplicialComplex& c) {
    if (c.dimension() <= 0) return SimplicialComplex{};
    if (!c.is_pure()) throw Error("boundary requires a pure complex");
    SimplexMap<int> count;
    for (const auto& f : c.facets())
        for_each_subset(f, f.size() - 1, [&](const Simplex& s) { ++count[s]; });
    std::vector<Simplex> out;
    for (auto& [s, n] : count) {
        if (n > 2) throw Error("not a pseudomanifold: a codimension-one face lies in three or more facets");
        if (n == 1) out.push_back(s);
    }
    return c.subcomplex(std::move(out));
}

inline std::int64_t fresh_integer_label(const SimplicialComplex& c) {
    std::int64_t m = -1;
    for (const auto& l : c.labels())
        if (l.is_integer()) m = std::max(m, l.integer());
    return m + 1;
}

/// Join with one fresh apex vertex.
inline SimplicialComplex cone(const SimplicialComplex& c) {
    const Label apex(fresh_integer_label(c));
    auto facets = c.facet_labels();
    if (facets.empty()) facets.push_back({});
    for (auto& f : facets) f.push_back(apex);
    return SimplicialComplex::from_facets(facets);
}

/// Join with two fresh vertices.
inline SimplicialComplex suspension(const SimplicialComplex& c) {
    const std::int64_t base = fresh_integer_label(c);
    std::vector<std::vector<Label>> facets;
    auto original = c.facet_labels();
    if (original.empty()) original.push_back({});
    for (const auto& f : original)
        for (std::int64_t pole : {base, base + 1}) {
            auto g = f;
            g.emplace_back(pole);
            facets.push_back(std::move(g));
        }
    return SimplicialComplex::from_facets(facets);
}

/// Connected component id per vertex, numbered in order of first vertex.
inline std::vector<std::size_t> vertex_components(const SimplicialComplex& c, std::size_t* count = nullptr) {
    const std::size_t n = c.num_vertices();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : c.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            auto a = find(f[0]), b = find(f[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::size_t> comp(n), root_id(n, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto r = find(v);
        if (root_id[r] == SIZE_MAX) root_id[r] = next++;
        comp[v] = root_id[r];
    }
    if (count) *count = next;
    return comp;
}

inline bool is_connected(const SimplicialComplex& c) {
    std::size_t n = 0;
    vertex_components(c, &n);
    return n == 1;
}

}  // namespace plmorse
