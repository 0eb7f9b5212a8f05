#pragma once

// Generic PL functions given by vertex orders: vertex classification, Morse
// relations, duality and sublevel sweeps.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "plmorse/homology.hpp"
#include "plmorse/manifold.hpp"

namespace plmorse {

/// A strict total order on the vertices of one complex; rank 0 is the
/// smallest function value.
class VertexOrder {
  public:
    VertexOrder() = default;

    /// Order listing every vertex label exactly once, lowest first.
    static VertexOrder from_labels(const SimplicialComplex& c, const std::vector<Label>& order) {
        if (order.size() != c.num_vertices())
            throw Error("order does not cover vertex set exactly: " + std::to_string(order.size()) + " labels for " +
                        std::to_string(c.num_vertices()) + " vertices");
        VertexOrder f;
        f.rank_.assign(c.num_vertices(), SIZE_MAX);
        for (std::size_t i = 0; i < order.size(); ++i) {
            auto id = c.find(order[i]);
            if (!id) throw Error("order does not cover vertex set exactly: unknown vertex " + order[i].to_string());
            if (f.rank_[*id] != SIZE_MAX)
                throw Error("order does not cover vertex set exactly: repeated vertex " + order[i].to_string());
            f.rank_[*id] = i;
            f.sequence_.push_back(*id);
        }
        return f;
    }

    /// Ranks vertices by value; equal values violate genericity.
    static VertexOrder from_values(const SimplicialComplex& c, const std::vector<std::pair<Label, double>>& values) {
        auto sorted = values;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i].second == sorted[i - 1].second)
                throw Error("function is not generic: " + sorted[i - 1].first.to_string() + " and " +
                            sorted[i].first.to_string() + " share a value");
        std::vector<Label> order;
        for (auto& [l, x] : sorted) order.push_back(l);
        return from_labels(c, order);
    }

    /// Vertices in label order.
    static VertexOrder natural(const SimplicialComplex& c) { return from_labels(c, c.labels()); }

    template <class Rng>
    static VertexOrder random(const SimplicialComplex& c, Rng& rng) {
        auto labels = c.labels();
        std::shuffle(labels.begin(), labels.end(), rng);
        return from_labels(c, labels);
    }

    std::size_t size() const { return sequence_.size(); }
    std::size_t rank(VertexId v) const { return rank_.at(v); }
    VertexId at(std::size_t r) const { return sequence_.at(r); }
    const std::vector<VertexId>& sequence() const { return sequence_; }

    /// The order of -f.
    VertexOrder reversed() const {
        VertexOrder g;
        g.sequence_.assign(sequence_.rbegin(), sequence_.rend());
        g.rank_.resize(rank_.size());
        for (std::size_t i = 0; i < g.sequence_.size(); ++i) g.rank_[g.sequence_[i]] = i;
        return g;
    }

    std::vector<Label> labels(const SimplicialComplex& c) const {
        std::vector<Label> out;
        for (auto v : sequence_) out.push_back(c.label(v));
        return out;
    }

    /// Restriction to a complex whose labels are a subset of those of m.
    VertexOrder restrict_to(const SimplicialComplex& m, const SimplicialComplex& sub) const {
        std::vector<Label> out;
        for (auto v : sequence_)
            if (sub.find(m.label(v))) out.push_back(m.label(v));
        return from_labels(sub, out);
    }

    void require_fits(const SimplicialComplex& c) const {
        if (rank_.size() != c.num_vertices()) throw Error("order does not cover vertex set exactly");
    }

  private:
    std::vector<std::size_t> rank_;
    std::vector<VertexId> sequence_;
};

namespace detail {

struct LinkSplit {
    SimplicialComplex link, lower, upper;
};

inline LinkSplit split_link(const SimplicialComplex& m, const VertexOrder& f, VertexId v) {
    f.require_fits(m);
    LinkSplit s;
    s.link = link(m, Simplex{v});
    std::vector<char> below(s.link.num_vertices()), above(s.link.num_vertices());
    const auto r = f.rank(v);
    for (VertexId w = 0; w < s.link.num_vertices(); ++w) {
        const bool lo = f.rank(m.id_of(s.link.label(w))) < r;
        below[w] = lo;
        above[w] = !lo;
    }
    s.lower = span_ids(s.link, below);
    s.upper = span_ids(s.link, above);
    return s;
}

/// Lower/upper split of an arbitrary complex `l` whose labels are vertices of m.
inline std::pair<SimplicialComplex, SimplicialComplex> split_by_rank(const SimplicialComplex& m, const VertexOrder& f,
                                                                     VertexId v, const SimplicialComplex& l) {
    std::vector<char> below(l.num_vertices()), above(l.num_vertices());
    for (VertexId w = 0; w < l.num_vertices(); ++w) {
        below[w] = f.rank(m.id_of(l.label(w))) < f.rank(v);
        above[w] = !below[w];
    }
    return {span_ids(l, below), span_ids(l, above)};
}

inline VertexId vertex_of(const SimplicialComplex& m, const Label& v) {
    auto id = m.find(v);
    if (!id) throw Error("unknown vertex " + v.to_string());
    return *id;
}

}  // namespace detail

/// span(lk(v), vertices ranked below v).
inline SimplicialComplex lower_link(const SimplicialComplex& m, const VertexOrder& f, const Label& v) {
    return detail::split_link(m, f, detail::vertex_of(m, v)).lower;
}

/// span(lk(v), vertices ranked above v).
inline SimplicialComplex upper_link(const SimplicialComplex& m, const VertexOrder& f, const Label& v) {
    return detail::split_link(m, f, detail::vertex_of(m, v)).upper;
}

enum class Status { minimum, maximum, h_regular, h_critical };
enum class StrongRegularity { strongly_regular, not_strongly_regular, unknown };
enum class BoundaryKind { interior, plus_critical, minus_critical, boundary_regular, degenerate_boundary };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::minimum: return "minimum";
        case Status::maximum: return "maximum";
        case Status::h_regular: return "h_regular";
        default: return "h_critical";
    }
}

inline std::string to_string(StrongRegularity s) {
    switch (s) {
        case StrongRegularity::strongly_regular: return "strongly_regular";
        case StrongRegularity::not_strongly_regular: return "not_strongly_regular";
        default: return "unknown";
    }
}

inline std::string to_string(BoundaryKind b) {
    switch (b) {
        case BoundaryKind::interior: return "interior";
        case BoundaryKind::plus_critical: return "plus_critical";
        case BoundaryKind::minus_critical: return "minus_critical";
        case BoundaryKind::boundary_regular: return "boundary_regular";
        default: return "degenerate_boundary";
    }
}

struct Nondegeneracy {
    Verdict verdict = Verdict::unknown;
    int index = -1;  // set when verdict is yes
};

struct BoundaryClass {
    BoundaryKind kind = BoundaryKind::interior;
    int index = -1;  // for plus_critical and minus_critical
    friend bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

struct FieldMultiplicity {
    Coefficients field;
    std::vector<std::size_t> mu;  // mu[k] = rank H~_{k-1}(lower link)
    std::size_t total = 0;
    friend bool operator==(const FieldMultiplicity&, const FieldMultiplicity&) = default;
};

struct CriticalityRecord {
    Label vertex;
    Status status = Status::h_regular;
    HomologyProfile lower_link_profile;  // reduced, integral
    std::vector<int> indices;            // k with H~_{k-1}(lower link; Z) != 0
    std::vector<FieldMultiplicity> multiplicities;
    StrongRegularity strong_regularity = StrongRegularity::unknown;
    Nondegeneracy nondegenerate;
    BoundaryClass boundary;
    std::optional<bool> duality;  // checked on closed manifolds only

    bool h_critical() const { return status != Status::h_regular; }
    int index() const { return indices.empty() ? -1 : indices.front(); }

    const FieldMultiplicity& over(Coefficients c) const {
        for (const auto& m : multiplicities)
            if (m.field == c) return m;
        throw Error("multiplicity over " + c.name() + " was not computed");
    }
};

namespace detail {

inline std::vector<int> critical_indices(const HomologyProfile& p) {
    std::vector<int> out;
    if (p.minus_one_rank) out.push_back(0);
    for (int j = 0; j <= p.dim(); ++j)
        if (p.nonzero_in(j)) out.push_back(j + 1);
    return out;
}

/// Index k when the reduced integral profile is that of S^{k-1}, else -1.
inline int sphere_index(const HomologyProfile& p) {
    if (p.minus_one_rank) return 0;
    int index = -1;
    for (int j = 0; j <= p.dim(); ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (!p.torsion[uj].empty() || p.betti[uj] > 1) return -1;
        if (p.betti[uj] == 1) {
            if (index >= 0) return -1;
            index = j + 1;
        }
    }
    return index;
}

/// Integral total multiplicity: free ranks plus torsion summands.
inline std::size_t integral_total(const HomologyProfile& p) {
    std::size_t n = p.minus_one_rank;
    for (std::size_t j = 0; j < p.betti.size(); ++j) n += p.betti[j] + p.torsion[j].size();
    return n;
}

inline Status status_of(const LinkSplit& s, const HomologyProfile& p) {
    if (s.lower.empty()) return Status::minimum;
    if (p.vanishes()) return Status::h_regular;
    if (s.lower.num_vertices() == s.link.num_vertices()) return Status::maximum;
    return Status::h_critical;
}

inline bool is_boundary_link(const SimplicialComplex& l, int d) {
    if (d <= 0) return false;
    if (d == 1) return l.num_vertices() == 1;
    return !boundary_subcomplex(l).empty();
}

inline StrongRegularity strong_regularity_of(const LinkSplit& s, const HomologyProfile& p, int d) {
    using SR = StrongRegularity;
    if (s.lower.empty() || s.upper.empty()) return SR::not_strongly_regular;
    if (d == 1) return s.lower.num_vertices() == 1 && s.upper.num_vertices() == 1 ? SR::strongly_regular
                                                                                   : SR::not_strongly_regular;
    if (d == 2) {
        const auto fv = s.lower.f_vector().counts;
        const std::size_t edges = fv.size() > 1 ? fv[1] : 0;
        return is_connected(s.lower) && edges + 1 == fv[0] ? SR::strongly_regular : SR::not_strongly_regular;
    }
    if (!p.vanishes()) return SR::not_strongly_regular;
    return d <= 4 ? SR::strongly_regular : SR::unknown;
}

inline Nondegeneracy nondegeneracy_of(const HomologyProfile& p, int d) {
    if (p.vanishes()) return {Verdict::no, -1};
    const int k = sphere_index(p);
    if (k < 0) return {Verdict::no, -1};
    if (k == 0 || k == d || d <= 3) return {Verdict::yes, k};
    if (d == 4 && k != 2) return {Verdict::yes, k};
    return {Verdict::unknown, -1};
}

inline BoundaryClass boundary_class_of(const SimplicialComplex& m, const VertexOrder& f, VertexId v,
                                       const LinkSplit& s, const HomologyProfile& p) {
    BoundaryClass b;
    if (!p.vanishes()) {
        b.kind = integral_total(p) > 1 ? BoundaryKind::degenerate_boundary : BoundaryKind::plus_critical;
        if (b.kind == BoundaryKind::plus_critical) b.index = critical_indices(p).front();
        return b;
    }
    const auto bl = boundary_subcomplex(s.link);
    const auto q = integral_homology(split_by_rank(m, f, v, bl).first, true);
    if (q.vanishes()) {
        b.kind = BoundaryKind::boundary_regular;
        return b;
    }
    b.kind = integral_total(q) > 1 ? BoundaryKind::degenerate_boundary : BoundaryKind::minus_critical;
    if (b.kind == BoundaryKind::minus_critical) b.index = critical_indices(q).front();
    return b;
}

}  // namespace detail

struct ClassifyOptions {
    std::vector<Coefficients> fields{Coefficients::rationals(), Coefficients::field(2)};
    // Manifold context enables strong regularity, nondegeneracy, boundary
    // classes and duality.
    bool manifold = false;
};

/// True when the link of v is a ball rather than a sphere (v on the boundary
/// of a combinatorial manifold).
inline bool is_boundary_vertex(const SimplicialComplex& m, const Label& v) {
    return detail::is_boundary_link(link(m, Simplex{detail::vertex_of(m, v)}), m.dimension());
}

/// Interior strong regularity for a combinatorial manifold m.
inline StrongRegularity strong_regularity(const SimplicialComplex& m, const VertexOrder& f, const Label& v) {
    const auto id = detail::vertex_of(m, v);
    const auto s = detail::split_link(m, f, id);
    if (detail::is_boundary_link(s.link, m.dimension()))
        throw Error("vertex " + v.to_string() + " lies on the boundary; use the boundary classifier");
    return detail::strong_regularity_of(s, integral_homology(s.lower, true), m.dimension());
}

/// Boundary class of v from the lower links in m and in the boundary of m.
inline BoundaryClass classify_boundary_vertex(const SimplicialComplex& m, const VertexOrder& f, const Label& v) {
    const auto id = detail::vertex_of(m, v);
    const auto s = detail::split_link(m, f, id);
    if (!detail::is_boundary_link(s.link, m.dimension()))
        throw Error("vertex " + v.to_string() + " is not on the boundary");
    return detail::boundary_class_of(m, f, id, s, integral_homology(s.lower, true));
}

namespace detail {

inline std::size_t total_rank(const SimplicialComplex& l, Coefficients field) {
    auto mu = shifted_reduced_ranks(l, field, 0);
    std::size_t n = 0;
    for (auto x : mu) n += x;
    return n;
}

}  // namespace detail

/// rk H~(lk-_M) + rk H~(lk+_M) >= rk H~(lk-_{dM}) at a boundary vertex, with
/// total ranks counting H~_{-1} of the empty complex.
inline bool boundary_rank_inequality(const SimplicialComplex& m, const VertexOrder& f, const Label& v,
                                     Coefficients field) {
    const auto id = detail::vertex_of(m, v);
    const auto s = detail::split_link(m, f, id);
    if (!detail::is_boundary_link(s.link, m.dimension()))
        throw Error("vertex " + v.to_string() + " is not on the boundary");
    const auto bl = boundary_subcomplex(s.link);
    const auto lower_boundary = detail::split_by_rank(m, f, id, bl).first;
    return detail::total_rank(s.lower, field) + detail::total_rank(s.upper, field) >=
           detail::total_rank(lower_boundary, field);
}

/// rank H~_{d-k-1}(lk+; F) == rank H~_{k-1}(lk-; F) for 1 <= k <= d-1.
inline bool duality_check(const SimplicialComplex& m, const VertexOrder& f, const Label& v, Coefficients field) {
    const int d = m.dimension();
    const auto s = detail::split_link(m, f, detail::vertex_of(m, v));
    if (detail::is_boundary_link(s.link, d)) throw Error("duality requires an interior vertex");
    const auto lb = betti(s.link, field, true);
    bool sphere = static_cast<int>(lb.size()) == d;
    for (int j = 0; sphere && j < d; ++j) sphere = lb[static_cast<std::size_t>(j)] == (j == d - 1 ? 1u : 0u);
    if (!sphere) throw Error("duality requires a closed manifold: link of " + v.to_string() + " is not a homology sphere");
    const auto lo = shifted_reduced_ranks(s.lower, field, d);
    const auto up = shifted_reduced_ranks(s.upper, field, d);
    for (int k = 1; k <= d - 1; ++k)
        if (lo[static_cast<std::size_t>(k)] != up[static_cast<std::size_t>(d - k)]) return false;
    return true;
}

inline CriticalityRecord classify_vertex(const SimplicialComplex& m, const VertexOrder& f, const Label& v,
                                         const ClassifyOptions& opt = {}) {
    const auto id = detail::vertex_of(m, v);
    const int d = m.dimension();
    const auto s = detail::split_link(m, f, id);
    CriticalityRecord r;
    r.vertex = v;
    r.lower_link_profile = integral_homology(s.lower, true);
    r.status = detail::status_of(s, r.lower_link_profile);
    r.indices = detail::critical_indices(r.lower_link_profile);
    for (const auto& field : opt.fields) {
        FieldMultiplicity fm{field, shifted_reduced_ranks(s.lower, field, d), 0};
        for (auto x : fm.mu) fm.total += x;
        r.multiplicities.push_back(std::move(fm));
    }
    if (!opt.manifold) return r;
    if (detail::is_boundary_link(s.link, d)) {
        r.boundary = detail::boundary_class_of(m, f, id, s, r.lower_link_profile);
        return r;
    }
    r.strong_regularity = detail::strong_regularity_of(s, r.lower_link_profile, d);
    r.nondegenerate = detail::nondegeneracy_of(r.lower_link_profile, d);
    return r;
}

struct FieldSummary {
    Coefficients field;
    std::vector<std::size_t> mu;     // weighted critical counts per index
    std::vector<std::size_t> betti;  // of the whole complex
    std::vector<bool> morse_inequality;
    bool euler_equation = false;
    bool tight = false;
};

struct PLMorseVerdict {
    Verdict verdict = Verdict::unknown;
    std::optional<Label> witness;
    std::string reason;
};

struct MorseReport {
    int dimension = -1;
    long long euler_characteristic = 0;
    Verdict manifold = Verdict::unknown;
    bool manifold_checks = false;  // strong regularity and verdicts computed
    bool has_boundary = false;
    std::vector<CriticalityRecord> records;  // vertex label order
    std::vector<FieldSummary> fields;
    PLMorseVerdict pl_morse;

    const CriticalityRecord& record(const Label& v) const {
        for (const auto& r : records)
            if (r.vertex == v) return r;
        throw Error("unknown vertex " + v.to_string());
    }
    const FieldSummary& over(Coefficients c) const {
        for (const auto& s : fields)
            if (s.field == c) return s;
        throw Error("report has no data over " + c.name());
    }
};

struct AnalyzeOptions {
    std::vector<Coefficients> fields{Coefficients::rationals(), Coefficients::field(2)};
    // nullopt: run check_manifold; true: assert manifold; false: no manifold checks.
    std::optional<bool> manifold;
};

namespace detail {

inline PLMorseVerdict pl_morse_from(const SimplicialComplex& m, const std::vector<CriticalityRecord>& records) {
    PLMorseVerdict out{Verdict::yes, std::nullopt, ""};
    std::optional<std::pair<Label, std::string>> unknown;
    for (const auto& r : records) {
        if (r.boundary.kind != BoundaryKind::interior) {
            if (r.boundary.kind == BoundaryKind::degenerate_boundary)
                return {Verdict::no, r.vertex, "degenerate boundary critical point"};
            continue;
        }
        if (r.strong_regularity == StrongRegularity::strongly_regular) continue;
        if (r.nondegenerate.verdict == Verdict::yes) continue;
        if (r.nondegenerate.verdict == Verdict::no) {
            const std::string why = r.status == Status::h_regular
                                        ? "H-regular but not strongly regular"
                                        : "degenerate critical point (total multiplicity " +
                                              std::to_string(integral_total(r.lower_link_profile)) + ")";
            return {Verdict::no, r.vertex, why};
        }
        if (!unknown) {
            const std::string why = m.dimension() == 4 ? "index-2 saddle: torus unknottedness is not checked"
                                                        : "strong regularity undecided";
            unknown.emplace(r.vertex, why);
        }
    }
    if (unknown) return {Verdict::unknown, unknown->first, unknown->second};
    return out;
}

}  // namespace detail

/// Decides whether f is a PL Morse function on a combinatorial manifold of
/// dimension at most 4 (index-2 saddles in dimension 4 stay undecided).
inline PLMorseVerdict check_pl_morse(const SimplicialComplex& m, const VertexOrder& f, bool assume_manifold = false) {
    if (m.dimension() >= 5) throw Error("PL Morse decision is unsupported in dimension >= 5");
    if (!assume_manifold) {
        const auto mc = check_manifold(m);
        if (mc.verdict == Verdict::no) throw Error("not a combinatorial manifold: " + mc.witness);
        if (mc.verdict == Verdict::unknown) return {Verdict::unknown, std::nullopt, "manifold check: " + mc.witness};
    }
    ClassifyOptions opt{{}, true};
    std::vector<CriticalityRecord> records;
    for (VertexId v = 0; v < m.num_vertices(); ++v) records.push_back(classify_vertex(m, f, m.label(v), opt));
    return detail::pl_morse_from(m, records);
}

inline MorseReport analyze(const SimplicialComplex& m, const VertexOrder& f, const AnalyzeOptions& opt = {}) {
    f.require_fits(m);
    MorseReport rep;
    rep.dimension = m.dimension();
    rep.euler_characteristic = euler_characteristic(m);
    if (opt.manifold) {
        rep.manifold = *opt.manifold ? Verdict::yes : Verdict::unknown;
        rep.manifold_checks = *opt.manifold;
        if (rep.manifold_checks)
            for (VertexId v = 0; v < m.num_vertices() && !rep.has_boundary; ++v)
                rep.has_boundary = detail::is_boundary_link(link(m, Simplex{v}), m.dimension());
    } else {
        const auto mc = check_manifold(m);
        rep.manifold = mc.verdict;
        rep.manifold_checks = mc.verdict == Verdict::yes;
        rep.has_boundary = mc.has_boundary;
    }
    const ClassifyOptions copt{opt.fields, rep.manifold_checks};
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
        auto r = classify_vertex(m, f, m.label(v), copt);
        if (rep.manifold_checks && !rep.has_boundary)
            r.duality = duality_check(m, f, m.label(v), opt.fields.empty() ? Coefficients::rationals() : opt.fields.front());
        rep.records.push_back(std::move(r));
    }
    const auto d = static_cast<std::size_t>(std::max(rep.dimension, 0));
    for (const auto& field : opt.fields) {
        FieldSummary s;
        s.field = field;
        s.mu.assign(d + 1, 0);
        for (const auto& r : rep.records) {
            const auto& mu = r.over(field).mu;
            for (std::size_t k = 0; k < mu.size() && k <= d; ++k) s.mu[k] += mu[k];
        }
        s.betti = betti(m, field);
        s.betti.resize(d + 1, 0);
        long long alt = 0;
        s.tight = true;
        for (std::size_t k = 0; k <= d; ++k) {
            s.morse_inequality.push_back(s.mu[k] >= s.betti[k]);
            s.tight = s.tight && s.mu[k] == s.betti[k];
            alt += (k % 2 ? -1 : 1) * static_cast<long long>(s.mu[k]);
        }
        s.euler_equation = alt == rep.euler_characteristic;
        rep.fields.push_back(std::move(s));
    }
    if (!rep.manifold_checks)
        rep.pl_morse = {Verdict::unknown, std::nullopt, "manifold checks are off"};
    else if (rep.dimension >= 5)
        rep.pl_morse = {Verdict::unknown, std::nullopt, "dimension >= 5 is unsupported"};
    else
        rep.pl_morse = detail::pl_morse_from(m, rep.records);
    return rep;
}

/// Unreduced Betti numbers b_0..b_d of span(first i vertices), i = 1..n.
inline std::vector<std::vector<std::size_t>> sweep(const SimplicialComplex& m, const VertexOrder& f,
                                                   Coefficients field) {
    f.require_fits(m);
    const auto d = static_cast<std::size_t>(std::max(m.dimension(), 0));
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> keep(m.num_vertices(), 0);
    for (auto v : f.sequence()) {
        keep[v] = 1;
        auto b = betti(span_ids(m, keep), field);
        b.resize(d + 1, 0);
        out.push_back(std::move(b));
    }
    return out;
}

/// Whether the Betti change caused by adding one vertex is explained by its
/// multiplicities: from the exact sequence of the pair, there must be ranks
/// t_k of the connecting maps with t_0 = 0, 0 <= t_k <= mu_k, t_{d+1} = 0 and
/// delta_k = mu_k - t_k - t_{k+1}.
inline bool sweep_step_consistent(const std::vector<std::size_t>& before, const std::vector<std::size_t>& after,
                                  const std::vector<std::size_t>& mu) {
    const std::size_t n = std::max({before.size(), after.size(), mu.size()});
    auto at = [](const std::vector<std::size_t>& v, std::size_t k) { return k < v.size() ? static_cast<long long>(v[k]) : 0LL; };
    long long t = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const long long delta = at(after, k) - at(before, k);
        const long long next = at(mu, k) - t - delta;
        if (next < 0 || next > at(mu, k + 1)) return false;
        t = next;
    }
    return t == 0;
}

/// Checks a whole sweep against per-vertex multiplicities over the same field.
inline bool sweep_consistent(const SimplicialComplex& m, const VertexOrder& f, Coefficients field) {
    const auto profiles = sweep(m, f, field);
    const auto d = m.dimension();
    std::vector<std::size_t> prev(static_cast<std::size_t>(std::max(d, 0) + 1), 0);
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto v = f.at(i);
        const auto mu = shifted_reduced_ranks(detail::split_link(m, f, v).lower, field, d);
        if (!sweep_step_consistent(prev, profiles[i], mu)) return false;
        prev = profiles[i];
    }
    return true;
}

}  // namespace plmorse
