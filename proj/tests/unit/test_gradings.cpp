#include <doctest.h>

#include <string>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/grading.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace laurent;

namespace {

const std::vector<std::string> XY{"x", "y"};

LaurentPoly P(const std::string& s, const std::vector<std::string>& names = XY)
{
    return parse_poly(s, names, Domain::rationals());
}

Grading G(std::initializer_list<long> w)
{
    IntVector v;
    for (long x : w) v.emplace_back(x);
    return Grading(v);
}

AlgebraPresentation presentation(std::vector<std::string> names, const std::vector<std::string>& relations,
                                 std::vector<std::pair<std::size_t, std::size_t>> pairs = {},
                                 std::vector<std::size_t> base = {})
{
    std::vector<LaurentPoly> rels;
    for (const auto& r : relations) rels.push_back(parse_poly(r, names, Domain::rationals()));
    return AlgebraPresentation(Domain::rationals(), std::move(names), std::move(pairs), std::move(rels), std::move(base));
}

// Every degree vector in the box that makes each relation homogeneous.
std::vector<IntVector> admissible_by_search(const AlgebraPresentation& P, long bound)
{
    std::vector<IntVector> out;
    oracle::box(P.generator_count(), bound, [&](const IntVector& d) {
        for (std::size_t b : P.base_generators())
            if (d[b] != 0) return;
        Grading g(d);
        for (const auto& r : P.relations()) {
            if (!is_homogeneous(g, r)) return;
            // Constants pin the common degree to zero.
            if (r.coefficient(zero_vector(r.rank())) != 0 && *support(g, r).begin() != 0) return;
        }
        out.push_back(d);
    });
    return out;
}

}  // namespace

TEST_CASE("support examples")
{
    CHECK(support(G({1, 1}), LaurentPoly(Domain::rationals(), 2)).empty());
    CHECK(support(G({1, 1}), P("x + y + x*y")) == std::set<Integer>{1, 2});
    CHECK(support(G({0, 0}), P("x^3 - y + 7")) == std::set<Integer>{0});
    CHECK_THROWS_AS(support(G({1}), P("x")), Error);
}

TEST_CASE("homogeneous components examples")
{
    auto comps = homogeneous_components(G({1, 1}), P("x + y + x*y"));
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(1) == P("x + y"));
    CHECK(comps.at(2) == P("x*y"));
    CHECK(homogeneous_components(G({1, 1}), P("x^2 - 3*x*y")).size() == 1);
    CHECK(homogeneous_components(G({1, 1}), LaurentPoly(Domain::rationals(), 2)).empty());
}

TEST_CASE("leading form examples")
{
    auto lf = leading_form(G({1, 1}), P("x + y + x*y"));
    CHECK(lf.degree == 2);
    CHECK(lf.form == P("x*y"));
    lf = leading_form(G({1, -1}), P("x + y"));
    CHECK(lf.degree == 1);
    CHECK(lf.form == P("x"));
    lf = leading_form(G({2, 1}), P("x - y^2"));
    CHECK(lf.degree == 2);
    CHECK(lf.form == P("x - y^2"));
    try {
        leading_form(G({1, 1}), LaurentPoly(Domain::rationals(), 2));
        FAIL("expected ZeroPolynomial");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroPolynomial);
    }
}

TEST_CASE("top form relation examples")
{
    const std::vector<std::string> x{"x"};
    auto px = [&](const std::string& s) { return parse_poly(s, x, Domain::rationals()); };
    // a^2 - x^2 = 0 for a = x.
    auto top = top_form_relation(G({1}), {{px("-x^2"), 0}, {px("1"), 2}}, px("x"));
    CHECK(top.degree == 2);
    REQUIRE(top.terms.size() == 2);
    CHECK(top.terms[0].power == 0);
    CHECK(top.terms[0].coefficient == px("-x^2"));
    CHECK(top.terms[1].power == 2);
    CHECK(top.terms[1].coefficient == px("1"));

    // Inhomogeneous a: x + 1 satisfies (x+1) - x - 1 = 0; top part is x - x.
    top = top_form_relation(G({1}), {{px("-x - 1"), 0}, {px("1"), 1}}, px("x + 1"));
    CHECK(top.degree == 1);
    CHECK(top.terms.size() == 2);

    try {
        top_form_relation(G({1}), {{px("1"), 0}}, px("x"));
        FAIL("expected NotARelation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotARelation);
    }
}

TEST_CASE("extension to adjoined variables")
{
    CHECK(extend_to_laurent_vars(G({1}), 1, IntVector{0}) == G({1, 0}));
    CHECK(extend_to_laurent_vars(G({0, 0}), 2, IntVector{1, 1}) == G({0, 0, 1, 1}));
    CHECK(extend_to_laurent_vars(G({3, -1}), 0, IntVector{}) == G({3, -1}));
}

TEST_CASE("grading lattice examples")
{
    auto cubic = presentation({"x", "y"}, {"x^2 - y^3 - 1"});
    CHECK(grading_lattice(cubic).lattice.empty());

    auto xy = presentation({"x", "y"}, {"x*y - 1"});
    auto L = grading_lattice(xy).lattice;
    REQUIRE(L.rank() == 1);
    CHECK((L.vector(0) == IntVector{1, -1} || L.vector(0) == IntVector{-1, 1}));

    auto free3 = presentation({"a", "b", "c"}, {});
    CHECK(grading_lattice(free3).lattice.rank() == 3);

    auto based = presentation({"a", "b"}, {}, {}, {1});
    CHECK(grading_lattice(based).lattice.rank() == 1);
}

TEST_CASE("neutrality examples")
{
    auto cubic = presentation({"x", "y"}, {"x^2 - y^3 - 1"});
    auto rep = presentation_neutral(cubic);
    CHECK(rep.algebra_neutral);
    CHECK(rep.neutral_generators == std::vector<std::size_t>{0, 1});

    auto xy = presentation({"x", "y"}, {"x*y - 1"});
    rep = presentation_neutral(xy);
    CHECK_FALSE(rep.algebra_neutral);
    CHECK(rep.neutral_generators.empty());

    auto line = presentation({"x"}, {});
    rep = presentation_neutral(line);
    CHECK_FALSE(rep.algebra_neutral);
    CHECK(rep.neutral_generators.empty());

    // y - x^2: degrees (1, 2) are admissible, nothing is neutral; z is pinned.
    auto mixed = presentation({"x", "y", "z"}, {"y - x^2", "z^2 - z - 1"});
    rep = presentation_neutral(mixed);
    CHECK(rep.neutral_generators == std::vector<std::size_t>{2});
}

TEST_CASE("grading lattice matches brute-force search")
{
    gen::Rng rng(77);
    const std::vector<std::string> names{"a", "b", "c"};
    for (int t = 0; t < 60; ++t) {
        const auto g = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<std::string> gens(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(g));
        std::vector<LaurentPoly> rels;
        const long count = rng.uniform(0, 2);
        for (long r = 0; r < count; ++r) {
            LaurentPoly rel(Domain::rationals(), g);
            const auto terms = static_cast<std::size_t>(rng.uniform(2, 3));
            while (rel.term_count() < terms) rel.add_term(gen::vec(rng, g, 0, 3), Coeff(rng.nonzero(-3, 3)));
            rels.push_back(rel);
        }
        std::vector<std::size_t> base;
        if (g > 1 && rng.uniform(0, 3) == 0) base.push_back(0);
        AlgebraPresentation P(Domain::rationals(), gens, {}, rels, base);
        auto L = grading_lattice(P).lattice;
        for (std::size_t i = 0; i < L.rank(); ++i) {
            Grading gr(L.vector(i));
            for (const auto& r : rels) CHECK(is_homogeneous(gr, r));
        }
        for (const auto& d : admissible_by_search(P, 3)) CHECK(L.contains(d));
    }
}

TEST_CASE("decomposition properties")
{
    gen::Rng rng(55);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        Grading g(gen::vec(rng, n, -3, 3));
        auto p = gen::poly(rng, n, static_cast<std::size_t>(rng.uniform(1, 5)), 3);
        auto comps = homogeneous_components(g, p);
        LaurentPoly sum(p.domain(), n);
        for (const auto& [deg, c] : comps) {
            CHECK(is_homogeneous(g, c));
            CHECK(support(g, c) == std::set<Integer>{deg});
            sum += c;
        }
        CHECK(sum == p);
        CHECK((support(g, p).size() == 1) == is_homogeneous(g, p));
        CHECK(leading_form(g, p).degree == *support(g, p).rbegin());

        // deg is additive on monomials.
        IntVector e1 = gen::vec(rng, n, -4, 4), e2 = gen::vec(rng, n, -4, 4);
        CHECK(g.degree(e1 + e2) == g.degree(e1) + g.degree(e2));
    }
}

TEST_CASE("top form relations vanish on random instances")
{
    gen::Rng rng(66);
    for (int t = 0; t < 100; ++t) {
        Grading g(gen::vec(rng, 2, -2, 2));
        auto a = gen::poly(rng, 2, static_cast<std::size_t>(rng.uniform(1, 3)), 2);
        auto h1 = gen::poly(rng, 2, static_cast<std::size_t>(rng.uniform(1, 3)), 2);
        auto h2 = gen::poly(rng, 2, static_cast<std::size_t>(rng.uniform(1, 2)), 2);
        // h2 a^2 + h1 a + h0 = 0 with h0 chosen to close the relation.
        auto h0 = -(h2 * a * a + h1 * a);
        std::vector<RelationTerm> rel{{h1, 1}, {h2, 2}};
        if (!h0.is_zero()) rel.push_back({h0, 0});
        auto top = top_form_relation(g, rel, a);
        auto lead_a = leading_form(g, a).form;
        LaurentPoly sum(a.domain(), 2);
        for (const auto& term : top.terms) sum += term.coefficient * pow(lead_a, term.power);
        CHECK(sum.is_zero());
        CHECK(top.terms.size() >= 2);
    }
}

TEST_CASE("positive support elements satisfy no degree-zero relation")
{
    // If min(support) > 0 then c_n * lead(p)^n is nonzero for any nonzero
    // degree-zero c_n, so the top part of sum c_i p^i cannot cancel.
    gen::Rng rng(88);
    for (int t = 0; t < 100; ++t) {
        Grading g(IntVector{1, 1});
        LaurentPoly p(Domain::rationals(), 2);
        while (p.term_count() < 2) {
            IntVector e = gen::vec(rng, 2, 0, 3);
            if (g.degree(e) > 0) p.add_term(e, gen::rational(rng));
        }
        REQUIRE(*support(g, p).begin() > 0);
        const long n = rng.uniform(1, 4);
        auto cn = LaurentPoly::monomial(Domain::rationals(), gen::rational(rng), IntVector{1, -1});
        CHECK_FALSE((cn * pow(leading_form(g, p).form, n)).is_zero());
    }
}
