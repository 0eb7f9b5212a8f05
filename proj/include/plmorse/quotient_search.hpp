#pragma once

// Search for homomorphisms onto small finite groups with non-trivial image.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "plmorse/finite_groups.hpp"
#include "plmorse/fundamental_group.hpp"

namespace plmorse {

struct GroupTarget {
    enum class Kind { symmetric, psl2 } kind;
    int parameter;

    std::string name() const { return (kind == Kind::symmetric ? "sym:" : "psl2:") + std::to_string(parameter); }
    friend bool operator==(const GroupTarget&, const GroupTarget&) = default;
};

/// Parses a comma-separated list such as "sym:2..8,psl2:13,psl2:29".
inline std::vector<GroupTarget> parse_targets(const std::string& spec) {
    std::vector<GroupTarget> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        const std::string item = spec.substr(start, end - start);
        start = end + 1;
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw Error("bad group target " + item);
        const std::string kind = item.substr(0, colon), range = item.substr(colon + 1);
        GroupTarget::Kind k;
        if (kind == "sym")
            k = GroupTarget::Kind::symmetric;
        else if (kind == "psl2")
            k = GroupTarget::Kind::psl2;
        else
            throw Error("unknown group family " + kind);
        int lo, hi;
        try {
            const auto dots = range.find("..");
            lo = std::stoi(range.substr(0, dots));
            hi = dots == std::string::npos ? lo : std::stoi(range.substr(dots + 2));
        } catch (const std::exception&) {
            throw Error("bad group target " + item);
        }
        if (lo > hi) throw Error("bad group target range " + item);
        for (int p = lo; p <= hi; ++p) out.push_back({k, p});
        if (start > spec.size()) break;
    }
    return out;
}

inline std::string default_targets() { return "sym:2..8,psl2:8,psl2:13,psl2:29,psl2:41"; }

struct QuotientCertificate {
    std::string target;
    std::vector<std::vector<int>> images;  // group-specific encoding
    std::vector<std::string> image_text;
    std::vector<std::string> transcript;
};

struct SearchOptions {
    std::vector<GroupTarget> targets = parse_targets(default_targets());
    double budget_seconds = 120;
    int max_generators = 4;
};

struct SearchOutcome {
    std::optional<QuotientCertificate> certificate;
    bool budget_exhausted = false;
    std::vector<std::string> searched;
};

namespace detail {

template <class G>
typename G::Element evaluate(const G& g, const Word& w, const std::vector<typename G::Element>& img,
                             const std::vector<typename G::Element>& inv) {
    auto acc = g.identity();
    for (int x : w) acc = g.multiply(acc, x > 0 ? img[static_cast<std::size_t>(x - 1)] : inv[static_cast<std::size_t>(-x - 1)]);
    return acc;
}

template <class G>
int element_order(const G& g, const typename G::Element& x) {
    int n = 1;
    for (auto y = x; !g.is_identity(y); y = g.multiply(y, x)) ++n;
    return n;
}

template <class G>
std::vector<std::string> transcript_for(const G& g, const Presentation& p, const std::vector<typename G::Element>& img) {
    std::vector<typename G::Element> inv;
    for (const auto& x : img) inv.push_back(g.inverse(x));
    std::vector<std::string> lines;
    lines.push_back("target " + g.name());
    for (std::size_t i = 0; i < img.size(); ++i) lines.push_back("g" + std::to_string(i + 1) + " -> " + g.describe(img[i]));
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        const bool ok = g.is_identity(evaluate(g, p.relators[r], img, inv));
        lines.push_back("relator " + std::to_string(r + 1) + (ok ? " = identity" : " != identity"));
    }
    bool nontrivial = false;
    for (const auto& x : img) nontrivial = nontrivial || !g.is_identity(x);
    lines.push_back(nontrivial ? "image non-trivial" : "image trivial");
    return lines;
}

// Backtracking over generator images: generator 1 up to conjugacy, the rest
// over all elements; a relator is checked once all its letters are assigned.
template <class G>
std::optional<std::vector<typename G::Element>> search_group(const G& g, const Presentation& p,
                                                             std::chrono::steady_clock::time_point deadline,
                                                             bool& timed_out) {
    using E = typename G::Element;
    const auto m = static_cast<std::size_t>(p.generators);
    if (m == 0) return std::nullopt;
    std::vector<std::vector<const Word*>> due(m);
    std::vector<int> power_bound(m, 0);  // relator g^n forces order | n
    for (const auto& r : p.relators) {
        if (r.empty()) continue;
        int top = 0;
        for (int x : r) top = std::max(top, std::abs(x));
        due[static_cast<std::size_t>(top - 1)].push_back(&r);
        if (std::all_of(r.begin(), r.end(), [&](int x) { return x == r.front(); })) {
            auto& b = power_bound[static_cast<std::size_t>(std::abs(r.front()) - 1)];
            const int n = static_cast<int>(r.size());
            b = b ? std::gcd(b, n) : n;
        }
    }
    const auto all = g.elements();
    const auto reps = g.class_representatives();
    std::vector<std::vector<E>> candidates(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& pool = i == 0 ? reps : all;
        for (const auto& x : pool)
            if (!power_bound[i] || power_bound[i] % element_order(g, x) == 0) candidates[i].push_back(x);
    }
    std::vector<E> img(m, g.identity()), inv(m, g.identity());
    std::size_t steps = 0;
    std::optional<std::vector<E>> found;

    auto rec = [&](auto&& self, std::size_t depth, bool nontrivial) -> bool {
        if (depth == m) {
            if (!nontrivial) return false;
            found = img;
            return true;
        }
        for (const auto& x : candidates[depth]) {
            if (++steps % 4096 == 0 && std::chrono::steady_clock::now() > deadline) {
                timed_out = true;
                return true;
            }
            const bool nt = nontrivial || !g.is_identity(x);
            if (depth + 1 == m && !nt) continue;
            img[depth] = x;
            inv[depth] = g.inverse(x);
            bool ok = true;
            for (const Word* r : due[depth])
                if (!g.is_identity(evaluate(g, *r, img, inv))) {
                    ok = false;
                    break;
                }
            if (ok && self(self, depth + 1, nt)) return true;
        }
        return false;
    };
    rec(rec, 0, false);
    if (timed_out) return std::nullopt;
    return found;
}

template <class G>
QuotientCertificate make_certificate(const G& g, const Presentation& p, const std::vector<typename G::Element>& img) {
    QuotientCertificate c;
    c.target = g.name();
    for (const auto& x : img) {
        c.images.push_back(g.encode(x));
        c.image_text.push_back(g.describe(x));
    }
    c.transcript = transcript_for(g, p, img);
    return c;
}

template <class G>
bool verify_in(const G& g, const Presentation& p, const QuotientCertificate& c) {
    if (c.images.size() != static_cast<std::size_t>(p.generators)) return false;
    std::vector<typename G::Element> img, inv;
    for (const auto& e : c.images) {
        img.push_back(g.decode(e));
        inv.push_back(g.inverse(img.back()));
    }
    for (const auto& r : p.relators)
        if (!g.is_identity(evaluate(g, r, img, inv))) return false;
    return std::any_of(img.begin(), img.end(), [&](const auto& x) { return !g.is_identity(x); });
}

}  // namespace detail

/// Tries targets in order; the first homomorphism with non-trivial image
/// wins. No certificate is not a proof of triviality.
inline SearchOutcome finite_quotient_search(const Presentation& p, const SearchOptions& opt = {}) {
    if (p.generators > opt.max_generators)
        throw Error("presentation has " + std::to_string(p.generators) + " generators; quotient search limit is " +
                    std::to_string(opt.max_generators));
    SearchOutcome out;
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opt.budget_seconds));
    for (const auto& t : opt.targets) {
        bool timed_out = false;
        out.searched.push_back(t.name());
        if (t.kind == GroupTarget::Kind::symmetric) {
            SymmetricGroup g(t.parameter);
            if (auto img = detail::search_group(g, p, deadline, timed_out)) {
                out.certificate = detail::make_certificate(g, p, *img);
                return out;
            }
        } else {
            PSL2 g(t.parameter);
            if (auto img = detail::search_group(g, p, deadline, timed_out)) {
                out.certificate = detail::make_certificate(g, p, *img);
                return out;
            }
        }
        if (timed_out) {
            out.budget_exhausted = true;
            return out;
        }
    }
    return out;
}

/// Re-evaluates every relator on the certificate's images.
inline bool verify_certificate(const Presentation& p, const QuotientCertificate& c) {
    const auto targets = parse_targets(c.target);
    if (targets.size() != 1) return false;
    const auto& t = targets.front();
    if (t.kind == GroupTarget::Kind::symmetric) return detail::verify_in(SymmetricGroup(t.parameter), p, c);
    return detail::verify_in(PSL2(t.parameter), p, c);
}

}  // namespace plmorse
