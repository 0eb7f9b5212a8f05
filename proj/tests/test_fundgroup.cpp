#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace plmorse;

namespace {

Word power(Word w, int n) {
    Word out;
    for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// u^5 = v^7 = (uv)^2 = 1
Presentation triangle_group_257() { return {2, {power({1}, 5), power({2}, 7), power({1, 2}, 2)}}; }

using Perm = std::vector<int>;

// independent evaluation in S_n, composing right to left as maps on points
bool relators_vanish_in_sym(const Presentation& p, const std::vector<std::vector<int>>& images) {
    const std::size_t n = images.front().size();
    std::vector<Perm> img, inv;
    for (const auto& x : images) {
        Perm a(x.begin(), x.end()), b(n);
        for (std::size_t i = 0; i < n; ++i) b[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
        img.push_back(a);
        inv.push_back(b);
    }
    for (const auto& r : p.relators) {
        Perm acc(n);
        std::iota(acc.begin(), acc.end(), 0);
        for (int x : r) {
            const auto& g = x > 0 ? img[static_cast<std::size_t>(x - 1)] : inv[static_cast<std::size_t>(-x - 1)];
            Perm next(n);
            for (std::size_t i = 0; i < n; ++i) next[i] = acc[static_cast<std::size_t>(g[i])];
            acc = next;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (acc[i] != static_cast<int>(i)) return false;
    }
    return true;
}

bool relators_vanish_in_psl(const Presentation& p, const std::vector<std::vector<int>>& images, long long q) {
    std::vector<oracle::Mat> img, inv;
    for (const auto& x : images) {
        img.push_back({x[0], x[1], x[2], x[3]});
        inv.push_back({x[3], (q - x[1]) % q, (q - x[2]) % q, x[0]});
    }
    for (const auto& r : p.relators) {
        oracle::Mat acc{1, 0, 0, 1};
        for (int x : r)
            acc = oracle::mul(acc, x > 0 ? img[static_cast<std::size_t>(x - 1)] : inv[static_cast<std::size_t>(-x - 1)], q);
        if (!oracle::is_scalar_identity(acc, q)) return false;
    }
    return true;
}

Presentation random_presentation(std::mt19937& rng) {
    std::uniform_int_distribution<int> gens(1, 3), rels(0, 3), len(1, 6);
    Presentation p;
    p.generators = gens(rng);
    std::uniform_int_distribution<int> letter(1, p.generators);
    std::bernoulli_distribution sign(0.5);
    const int r = rels(rng);
    for (int i = 0; i < r; ++i) {
        Word w;
        const int l = len(rng);
        for (int j = 0; j < l; ++j) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
        p.relators.push_back(w);
    }
    return p;
}

}  // namespace

TEST_CASE("word operations", "[fundgroup]") {
    CHECK(free_reduce({1, -1, 2}) == Word{2});
    CHECK(free_reduce({1, 2, -2, -1}).empty());
    CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
    CHECK(cyclic_reduce({1, 2, -1, 3}) == Word{1, 2, -1, 3});
    CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
    CHECK(canonical_cyclic({2, 1, 3}) == canonical_cyclic({1, 3, 2}));
    CHECK(canonical_cyclic({1, 2}) == canonical_cyclic({-2, -1}));
    CHECK(word_to_string({}) == "1");
    CHECK(word_to_string({1, -2}) == "g1 g2^-1");
    CHECK(word_to_string({1, -2}, {"u", "v"}) == "u v^-1");
}

TEST_CASE("edge-path presentations", "[fundgroup]") {
    const auto p = presentation(cycle(3), Label(1));
    CHECK(p.generators == 1);
    CHECK(p.relators.empty());

    const auto s = presentation(simplex_boundary(3), Label(1));
    CHECK(s.generators == 3);
    CHECK(s.relators.size() == 4);
    CHECK(abelianization(s).trivial());
    CHECK(tietze_simplify(s).generators == 0);

    const auto t = presentation(torus7(), Label(0));
    CHECK(t.generators == 21 - 6);
    CHECK(t.relators.size() == 14);
    const auto a = abelianization(t);
    CHECK(a.free_rank == 2);
    CHECK(a.torsion.empty());

    CHECK(presentation(simplex(0), Label(1)).generators == 0);
    CHECK_THROWS_AS(presentation(SimplicialComplex::from_facets({{1, 2}, {3, 4}}), Label(1)), Error);
    CHECK_THROWS_AS(presentation(cycle(3), Label(9)), Error);
}

TEST_CASE("tietze simplification examples", "[fundgroup]") {
    const auto a = tietze_simplify({2, {{2}}});
    CHECK(a.generators == 1);
    CHECK(a.relators.empty());

    const auto b = tietze_simplify({1, {{1, 1, -1}}});
    CHECK(b.generators == 0);
    CHECK(b.relators.empty());

    const auto d = pi1_reduce(barycentric_subdivision(dunce_hat8()).complex);
    const auto pd = tietze_simplify(presentation(d, d.label(0)));
    CHECK(pd.generators == 0);

    const auto r = tietze_simplify(presentation(rp2_6(), Label(1)));
    CHECK(r.generators == 1);
    REQUIRE(r.relators.size() == 1);
    CHECK(cyclic_reduce(r.relators.front()).size() == 2);
}

TEST_CASE("abelianization examples", "[fundgroup]") {
    Word second = power({2, 2, -1, -2, -1}, 2);
    second.push_back(2);
    const auto a = abelianization({2, {{1, 2, -1, -1, -1, -1, 2}, second}});
    CHECK(a.trivial());

    const auto z2 = abelianization({1, {{1, 1}}});
    CHECK(z2.free_rank == 0);
    CHECK(z2.torsion == std::vector<Integer>{2});

    const auto free2 = abelianization({2, {}});
    CHECK(free2.free_rank == 2);
    CHECK(abelianization({2, {{1, 2, -1, -2}}}).free_rank == 2);
    CHECK(abelianization({1, {{1, 1, 1, 1, 1, 1}}}).torsion == std::vector<Integer>{6});
}

TEST_CASE("abelianization matches first homology", "[fundgroup]") {
    for (const auto& [name, c] : fixtures::builtins()) {
        INFO(name);
        const auto a = abelianization(presentation(c, c.label(0)));
        const auto h = integral_homology(c);
        CHECK(a.free_rank == h.betti[1]);
        CHECK(a.torsion == h.torsion[1]);
    }
    const auto k = suspension(cycle(4));
    CHECK(abelianization(presentation(k, k.label(0))).trivial());
}

TEST_CASE("tietze moves preserve the abelianization", "[fundgroup]") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_presentation(rng);
        const auto q = tietze_simplify(p);
        const auto a = abelianization(p), b = abelianization(q);
        INFO("trial " << trial);
        CHECK(a.free_rank == b.free_rank);
        CHECK(a.torsion == b.torsion);
        CHECK(q.generators <= p.generators);
    }
}

TEST_CASE("group target parsing", "[fundgroup]") {
    const auto t = parse_targets("sym:2..4,psl2:13");
    REQUIRE(t.size() == 4);
    CHECK(t[0].name() == "sym:2");
    CHECK(t[2].name() == "sym:4");
    CHECK(t[3].name() == "psl2:13");
    CHECK(parse_targets(default_targets()).size() == 11);
    CHECK_THROWS_AS(parse_targets("alt:5"), Error);
    CHECK_THROWS_AS(parse_targets("sym:5..3"), Error);
    CHECK_THROWS_AS(parse_targets("sym"), Error);
}

TEST_CASE("finite group models", "[fundgroup]") {
    const SymmetricGroup s4(4);
    CHECK(s4.elements().size() == 24);
    CHECK(s4.class_representatives().size() == 5);
    for (int q : {5, 7, 8, 13}) {
        const PSL2 g(q);
        const std::size_t expected = static_cast<std::size_t>(q * (q * q - 1) / (q % 2 ? 2 : 1));
        CHECK(g.elements().size() == expected);
        for (const auto& x : g.class_representatives()) {
            CHECK(g.is_identity(g.multiply(x, g.inverse(x))));
            CHECK(g.decode(g.encode(x)) == x);
        }
    }
    CHECK(PSL2(5).class_representatives().size() == 5);
}

TEST_CASE("finite quotient search", "[fundgroup]") {
    const auto p = triangle_group_257();
    CHECK(abelianization(p).trivial());
    const auto out = finite_quotient_search(p);
    REQUIRE(out.certificate);
    CHECK_FALSE(out.budget_exhausted);
    CHECK(verify_certificate(p, *out.certificate));
    const auto t = parse_targets(out.certificate->target).front();
    REQUIRE(t.kind == GroupTarget::Kind::symmetric);
    CHECK(relators_vanish_in_sym(p, out.certificate->images));
    CHECK_FALSE(out.certificate->transcript.empty());

    SearchOptions psl;
    psl.targets = parse_targets("psl2:8,psl2:13,psl2:29");
    const auto q = finite_quotient_search(p, psl);
    REQUIRE(q.certificate);
    CHECK(q.certificate->target == "psl2:29");
    CHECK(verify_certificate(p, *q.certificate));
    CHECK(relators_vanish_in_psl(p, q.certificate->images, 29));
    CHECK(q.searched == std::vector<std::string>{"psl2:8", "psl2:13", "psl2:29"});
    CHECK(oracle::has_257_quotient(29));
    CHECK_FALSE(oracle::has_257_quotient(13));

    // a tampered certificate is rejected
    auto bad = *q.certificate;
    bad.images.front() = {1, 0, 0, 1};
    bad.images.back() = {1, 0, 0, 1};
    CHECK_FALSE(verify_certificate(p, bad));
}

TEST_CASE("quotient search edge cases", "[fundgroup]") {
    const auto z2 = finite_quotient_search({1, {{1, 1}}});
    REQUIRE(z2.certificate);
    CHECK(z2.certificate->target == "sym:2");
    CHECK(relators_vanish_in_sym({1, {{1, 1}}}, z2.certificate->images));

    SearchOptions small;
    small.targets = parse_targets("sym:2..5");
    const auto none = finite_quotient_search({2, {{1}, {2}}}, small);
    CHECK_FALSE(none.certificate);
    CHECK_FALSE(none.budget_exhausted);
    CHECK(none.searched.size() == 4);

    CHECK_THROWS_AS(finite_quotient_search({5, {}}), Error);
}
