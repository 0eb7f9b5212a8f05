#pragma once

// Small finite groups used as quotient targets: symmetric groups and PSL(2,q).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "plmorse/complex.hpp"

namespace plmorse {

/// Permutations of {0..n-1}; product (a*b)(x) = a(b(x)).
class SymmetricGroup {
  public:
    using Element = std::vector<std::uint8_t>;

    explicit SymmetricGroup(int n) : n_(n) {
        if (n < 1 || n > 10) throw Error("symmetric group degree out of range");
    }

    std::string name() const { return "sym:" + std::to_string(n_); }
    int degree() const { return n_; }

    Element identity() const {
        Element e(static_cast<std::size_t>(n_));
        std::iota(e.begin(), e.end(), std::uint8_t{0});
        return e;
    }
    Element multiply(const Element& a, const Element& b) const {
        Element c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    }
    Element inverse(const Element& a) const {
        Element c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint8_t>(i);
        return c;
    }
    bool is_identity(const Element& a) const {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != i) return false;
        return true;
    }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        Element p = identity();
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }

    /// One element per cycle type.
    std::vector<Element> class_representatives() const {
        std::vector<Element> out;
        std::vector<int> part;
        partitions(n_, n_, part, out);
        return out;
    }

    std::string describe(const Element& a) const {
        std::string s;
        std::vector<char> seen(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (seen[i] || a[i] == i) continue;
            s += "(";
            for (std::size_t j = i; !seen[j]; j = a[j]) {
                seen[j] = 1;
                if (s.back() != '(') s += " ";
                s += std::to_string(j + 1);
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    std::vector<int> encode(const Element& a) const { return {a.begin(), a.end()}; }
    Element decode(const std::vector<int>& v) const {
        if (v.size() != static_cast<std::size_t>(n_)) throw Error("bad permutation encoding");
        Element e(v.begin(), v.end());
        auto s = e;
        std::sort(s.begin(), s.end());
        if (s != identity()) throw Error("bad permutation encoding");
        return e;
    }

  private:
    void partitions(int left, int max_part, std::vector<int>& part, std::vector<Element>& out) const {
        if (left == 0) {
            Element e(static_cast<std::size_t>(n_));
            std::size_t start = 0;
            for (int len : part) {
                for (int i = 0; i < len; ++i)
                    e[start + static_cast<std::size_t>(i)] =
                        static_cast<std::uint8_t>(start + static_cast<std::size_t>((i + 1) % len));
                start += static_cast<std::size_t>(len);
            }
            out.push_back(e);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            part.push_back(p);
            partitions(left - p, p, part, out);
            part.pop_back();
        }
    }

    int n_;
};

/// GF(q) for a prime power q, elements encoded 0..q-1 by base-p coefficients,
/// with full addition and multiplication tables.
class FiniteField {
  public:
    explicit FiniteField(int q) : q_(q) {
        if (q < 2 || q > 256) throw Error("field order out of range");
        p_ = 2;
        while (q % p_) ++p_;
        k_ = 0;
        for (int t = q; t > 1; t /= p_) {
            if (t % p_) throw Error("field order " + std::to_string(q) + " is not a prime power");
            ++k_;
        }
        modulus_ = find_irreducible();
        add_.resize(static_cast<std::size_t>(q * q));
        mul_.resize(static_cast<std::size_t>(q * q));
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[idx(a, b)] = static_cast<std::uint16_t>(poly_add(a, b));
                mul_[idx(a, b)] = static_cast<std::uint16_t>(poly_mulmod(a, b));
            }
        neg_.resize(static_cast<std::size_t>(q));
        inv_.assign(static_cast<std::size_t>(q), 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
                if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
            }
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

  private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<std::size_t>(k_), 0);
        for (int i = 0; i < k_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
        return d;
    }
    int poly_add(int a, int b) const {
        auto x = digits(a), y = digits(b);
        int r = 0;
        for (int i = k_ - 1; i >= 0; --i) r = r * p_ + (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p_;
        return r;
    }
    // Product of polynomials given by coefficient vectors, reduced modulo modulus_.
    int poly_mulmod(int a, int b) const {
        if (k_ == 1) return a * b % p_;
        auto x = digits(a), y = digits(b);
        std::vector<int> prod(static_cast<std::size_t>(2 * k_), 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p_;
        for (int deg = 2 * k_ - 1; deg >= k_; --deg) {
            const int c = prod[static_cast<std::size_t>(deg)];
            if (!c) continue;
            // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
            for (int i = 0; i < k_; ++i)
                prod[static_cast<std::size_t>(deg - k_ + i)] =
                    ((prod[static_cast<std::size_t>(deg - k_ + i)] - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
            prod[static_cast<std::size_t>(deg)] = 0;
        }
        int r = 0;
        for (int i = k_ - 1; i >= 0; --i) r = r * p_ + prod[static_cast<std::size_t>(i)];
        return r;
    }
    // Low coefficients of a monic irreducible polynomial of degree k.
    std::vector<int> find_irreducible() const {
        if (k_ == 1) return {0};
        int count = 1;
        for (int i = 0; i < k_; ++i) count *= p_;
        for (int code = 0; code < count; ++code) {
            std::vector<int> m = digits(code);
            if (m[0] == 0) continue;
            if (irreducible(m)) return m;
        }
        throw Error("no irreducible polynomial found");
    }
    // Trial division by every monic polynomial of degree 1..k/2.
    bool irreducible(const std::vector<int>& low) const {
        std::vector<int> f(low);
        f.push_back(1);
        for (int deg = 1; deg <= k_ / 2; ++deg) {
            int count = 1;
            for (int i = 0; i < deg; ++i) count *= p_;
            for (int code = 0; code < count; ++code) {
                std::vector<int> g(static_cast<std::size_t>(deg) + 1, 0);
                for (int i = 0, c = code; i < deg; ++i, c /= p_) g[static_cast<std::size_t>(i)] = c % p_;
                g[static_cast<std::size_t>(deg)] = 1;
                auto r = f;
                for (int top = static_cast<int>(r.size()) - 1; top >= deg; --top) {
                    const int c = r[static_cast<std::size_t>(top)];
                    if (!c) continue;
                    for (int i = 0; i <= deg; ++i)
                        r[static_cast<std::size_t>(top - deg + i)] =
                            ((r[static_cast<std::size_t>(top - deg + i)] - c * g[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
                }
                bool zero = true;
                for (int i = 0; i < deg; ++i) zero = zero && r[static_cast<std::size_t>(i)] == 0;
                if (zero) return false;
            }
        }
        return true;
    }

    int q_, p_, k_;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

/// PSL(2,q): 2x2 matrices of determinant 1 over GF(q) modulo ±I, each stored
/// as its lexicographically smaller representative.
class PSL2 {
  public:
    struct Element {
        std::uint16_t a, b, c, d;
        friend bool operator==(const Element&, const Element&) = default;
    };

    explicit PSL2(int q) : field_(q) {}

    std::string name() const { return "psl2:" + std::to_string(field_.order()); }
    const FiniteField& field() const { return field_; }

    Element identity() const { return {1, 0, 0, 1}; }
    Element multiply(const Element& x, const Element& y) const {
        const auto& f = field_;
        return normalize({static_cast<std::uint16_t>(f.add(f.mul(x.a, y.a), f.mul(x.b, y.c))),
                          static_cast<std::uint16_t>(f.add(f.mul(x.a, y.b), f.mul(x.b, y.d))),
                          static_cast<std::uint16_t>(f.add(f.mul(x.c, y.a), f.mul(x.d, y.c))),
                          static_cast<std::uint16_t>(f.add(f.mul(x.c, y.b), f.mul(x.d, y.d)))});
    }
    Element inverse(const Element& x) const {
        const auto& f = field_;
        return normalize({x.d, static_cast<std::uint16_t>(f.neg(x.b)), static_cast<std::uint16_t>(f.neg(x.c)), x.a});
    }
    bool is_identity(const Element& x) const { return x == identity(); }

    Element normalize(const Element& x) const {
        const auto& f = field_;
        Element y{static_cast<std::uint16_t>(f.neg(x.a)), static_cast<std::uint16_t>(f.neg(x.b)),
                  static_cast<std::uint16_t>(f.neg(x.c)), static_cast<std::uint16_t>(f.neg(x.d))};
        return key(y) < key(x) ? y : x;
    }

    std::vector<Element> elements() const {
        const int q = field_.order();
        std::vector<Element> out;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int d = 0; d < q; ++d) {
                        if (field_.sub(field_.mul(a, d), field_.mul(b, c)) != 1) continue;
                        Element e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                                  static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)};
                        if (normalize(e) == e) out.push_back(e);
                    }
        return out;
    }

    /// One element per conjugacy class, by orbit enumeration.
    std::vector<Element> class_representatives() const {
        const auto all = elements();
        std::unordered_map<std::uint32_t, char> seen;
        std::vector<Element> reps;
        for (const auto& g : all) {
            if (seen.count(key(g))) continue;
            reps.push_back(g);
            for (const auto& h : all) seen[key(multiply(multiply(h, g), inverse(h)))] = 1;
        }
        return reps;
    }

    std::string describe(const Element& x) const {
        return "[[" + std::to_string(x.a) + "," + std::to_string(x.b) + "],[" + std::to_string(x.c) + "," +
               std::to_string(x.d) + "]]";
    }

    std::vector<int> encode(const Element& x) const { return {x.a, x.b, x.c, x.d}; }
    Element decode(const std::vector<int>& v) const {
        const int q = field_.order();
        if (v.size() != 4 || std::any_of(v.begin(), v.end(), [&](int t) { return t < 0 || t >= q; }))
            throw Error("bad matrix encoding");
        Element e{static_cast<std::uint16_t>(v[0]), static_cast<std::uint16_t>(v[1]), static_cast<std::uint16_t>(v[2]),
                  static_cast<std::uint16_t>(v[3])};
        if (field_.sub(field_.mul(e.a, e.d), field_.mul(e.b, e.c)) != 1) throw Error("matrix is not in SL(2,q)");
        return normalize(e);
    }

    std::uint32_t key(const Element& x) const {
        const auto q = static_cast<std::uint32_t>(field_.order());
        return ((x.a * q + x.b) * q + x.c) * q + x.d;
    }

  private:
    FiniteField field_;
};

}  // namespace plmorse
