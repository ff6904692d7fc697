#include <doctest.h>

#include <string>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/poly.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace laurent;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> X{"x"};

LaurentPoly P(const std::string& s, const std::vector<std::string>& names = XY, const Domain& d = Domain::rationals())
{
    return parse_poly(s, names, d);
}

template <class F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ParseError;
}

std::vector<Rational> random_point(gen::Rng& r, std::size_t n)
{
    std::vector<Rational> x(n);
    for (auto& v : x) v = gen::rational(r, 5);
    return x;
}

}  // namespace

TEST_CASE("domains")
{
    auto zz = Domain::integers();
    CHECK(zz.is_unit(Coeff(-1)));
    CHECK_FALSE(zz.is_unit(Coeff(2)));
    CHECK(kind_of([&] { zz.from_rational(Rational(1, 2)); }) == ErrorKind::NotInDomain);

    auto z6 = zz.localized_at(Coeff(6));
    CHECK(z6.tag() == "ZZ[1/6]");
    CHECK(z6.is_unit(Coeff(-12)));
    CHECK_FALSE(z6.is_unit(Coeff(5)));
    CHECK(z6.contains(Rational(7, 18)));
    CHECK(Domain::parse("ZZ[1/6]") == z6);

    auto f7 = Domain::prime_field(7);
    CHECK(f7.from_integer(-1) == 6);
    CHECK(f7.multiply(f7.invert_unit(Coeff(3)), Coeff(3)) == 1);
    CHECK(f7.from_rational(Rational(1, 2)) == 4);
    CHECK(Domain::parse("GF(7)") == f7);
    CHECK(Domain::parse("QQ") == Domain::rationals());
}

TEST_CASE("domain axioms on sampled triples")
{
    gen::Rng rng(3);
    std::vector<Domain> domains{Domain::rationals(), Domain::prime_field(11), Domain::integers(),
                                Domain::integers().localized_at(Coeff(10))};
    for (const auto& d : domains) {
        for (int t = 0; t < 200; ++t) {
            auto pick = [&] {
                if (d.kind() == DomainKind::Integers) {
                    Coeff q(rng.uniform(-20, 20));
                    if (!d.inverted().empty() && rng.coin()) q /= Coeff(d.inverted()[0]);
                    return d.from_rational(q);
                }
                return d.from_rational(gen::rational(rng));
            };
            Coeff a = pick(), b = pick(), c = pick();
            CHECK(d.add(d.add(a, b), c) == d.add(a, d.add(b, c)));
            CHECK(d.multiply(d.multiply(a, b), c) == d.multiply(a, d.multiply(b, c)));
            CHECK(d.multiply(a, d.add(b, c)) == d.add(d.multiply(a, b), d.multiply(a, c)));
            CHECK(d.add(a, d.negate(a)) == 0);
            if (a != 0 && b != 0) CHECK(d.multiply(a, b) != 0);
            if (d.is_unit(a)) CHECK(d.multiply(d.invert_unit(a), a) == d.one());
        }
    }
}

TEST_CASE("ring operation examples")
{
    CHECK(P("x + 1") + P("-x") == P("1"));
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK(P("x") * P("x^-1") == P("1"));
    CHECK(kind_of([] { (void)(P("x") + P("x", X)); }) == ErrorKind::RankMismatch);
    CHECK(kind_of([] { (void)(P("x") + P("x", XY, Domain::integers())); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("powers")
{
    CHECK(pow(P("x + 1"), 0) == P("1"));
    CHECK(pow(P("2*x"), -1) == P("1/2*x^-1"));
    CHECK(kind_of([] { pow(P("x + 1"), -1); }) == ErrorKind::NotAUnit);
    CHECK(pow(P("x + y"), 3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("unit classification examples")
{
    std::vector<std::string> x12{"x1", "x2"};
    auto u = is_unit_poly(P("5*x1^2*x2^-1", x12));
    REQUIRE(u.has_value());
    CHECK(u->coefficient == 5);
    CHECK(u->exponent == IntVector{2, -1});

    auto one = is_unit_poly(P("1"));
    REQUIRE(one.has_value());
    CHECK(one->coefficient == 1);
    CHECK(is_zero(one->exponent));

    CHECK_FALSE(is_unit_poly(P("x + 1")).has_value());
    CHECK_FALSE(is_unit_poly(LaurentPoly(Domain::rationals(), 2)).has_value());
    CHECK_FALSE(oracle::has_inverse_in_window({{0, 1}, {1, 1}}, 3));
}

TEST_CASE("unit inversion examples")
{
    std::vector<std::string> x12{"x1", "x2"};
    CHECK(invert_unit_poly(P("5*x1^2*x2^-1", x12)) == P("1/5*x1^-2*x2", x12));
    std::vector<std::string> y{"y"};
    CHECK(kind_of([&] { invert_unit_poly(P("2*y", y, Domain::integers())); }) == ErrorKind::NotAUnit);
    CHECK(invert_unit_poly(P("-y^-3", y)) == P("-y^3", y));
}

TEST_CASE("substitution examples")
{
    std::vector<std::string> y{"y1", "y2"}, z{"z1", "z2"};
    std::vector<LaurentPoly> images{P("z1*z2", z), P("z2", z)};
    CHECK(substitute(P("y1*y2", y), images) == P("z1*z2^2", z));

    gen::Rng rng(9);
    auto p = gen::poly(rng, 2, 4, 3);
    std::vector<LaurentPoly> vars{LaurentPoly::variable(p.domain(), 2, 0), LaurentPoly::variable(p.domain(), 2, 1)};
    CHECK(substitute(p, vars) == p);

    std::vector<std::string> one{"y"}, tgt{"z"};
    std::vector<LaurentPoly> bad{P("z + 1", tgt)};
    CHECK(kind_of([&] { substitute(P("y^-1", one), bad); }) == ErrorKind::NotAUnit);
}

TEST_CASE("ring axioms on random triples")
{
    gen::Rng rng(101);
    for (int t = 0; t < 500; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto a = gen::poly(rng, n, static_cast<std::size_t>(rng.uniform(1, 5)), 4);
        auto b = gen::poly(rng, n, static_cast<std::size_t>(rng.uniform(1, 5)), 4);
        auto c = gen::poly(rng, n, static_cast<std::size_t>(rng.uniform(1, 5)), 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK_FALSE((a * b).is_zero());
        const auto ab = a * b;
        for (const auto& [e, coef] : ab.terms()) CHECK(coef != 0);
        // Evaluation is a ring homomorphism: compare against the naive evaluator.
        auto x = random_point(rng, n);
        CHECK(oracle::evaluate(a * b + c, x) == oracle::evaluate(a, x) * oracle::evaluate(b, x) + oracle::evaluate(c, x));
    }
}

TEST_CASE("unit classification on random inputs")
{
    gen::Rng rng(202);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto p = gen::poly(rng, n, static_cast<std::size_t>(rng.uniform(2, 5)), 4);
        CHECK_FALSE(is_unit_poly(p).has_value());
    }
    for (int t = 0; t < 100; ++t) {
        auto u = gen::unit_monomial(rng, 3, 4);
        CHECK(invert_unit_poly(u) * u == LaurentPoly::constant(u.domain(), 3, 1));
    }
    for (int t = 0; t < 200; ++t) {
        auto p = gen::poly(rng, 1, static_cast<std::size_t>(rng.uniform(1, 3)), 3);
        oracle::Dense1 dense;
        for (const auto& [e, c] : p.terms()) dense[e[0].get_si()] = c;
        CHECK(is_unit_poly(p).has_value() == oracle::has_inverse_in_window(dense, 3));
    }
}

TEST_CASE("substitution composes")
{
    gen::Rng rng(303);
    auto nonnegative = [&](std::size_t terms) {
        LaurentPoly q(Domain::rationals(), 2);
        while (q.term_count() < terms) q.add_term(gen::vec(rng, 2, 0, 2), gen::rational(rng));
        return q;
    };
    for (int t = 0; t < 100; ++t) {
        // Unit images: every substitution is defined.
        auto p = gen::poly(rng, 2, 3, 2);
        std::vector<LaurentPoly> f{gen::unit_monomial(rng, 2, 2), gen::unit_monomial(rng, 2, 2)};
        std::vector<LaurentPoly> g{gen::unit_monomial(rng, 2, 2), gen::unit_monomial(rng, 2, 2)};
        std::vector<LaurentPoly> fg{substitute(f[0], g), substitute(f[1], g)};
        CHECK(substitute(substitute(p, f), g) == substitute(p, fg));

        // Polynomial (non-negative) inputs: arbitrary images are allowed.
        auto q = nonnegative(3);
        std::vector<LaurentPoly> f2{nonnegative(2), nonnegative(1)};
        std::vector<LaurentPoly> g2{nonnegative(2), nonnegative(2)};
        std::vector<LaurentPoly> fg2{substitute(f2[0], g2), substitute(f2[1], g2)};
        CHECK(substitute(substitute(q, f2), g2) == substitute(q, fg2));
    }
}

TEST_CASE("text round trip and ordering")
{
    auto p = P("5*x^2*y^-1 + 1/3");
    CHECK(to_string(p, XY) == "5*x^2*y^-1 + 1/3");
    CHECK(to_string(P("y + x + x*y - 2"), XY) == "x*y + x + y - 2");
    CHECK(to_string(LaurentPoly(Domain::rationals(), 2), XY) == "0");
    CHECK(to_string(P("-x"), XY) == "-x");
    CHECK(P("(x + 1)^2 - 2*(x)") == P("x^2 + 1"));

    gen::Rng rng(404);
    for (int t = 0; t < 200; ++t) {
        auto q = gen::poly(rng, 2, static_cast<std::size_t>(rng.uniform(1, 6)), 5);
        CHECK(P(to_string(q, XY)) == q);
    }
}

TEST_CASE("parse errors carry columns")
{
    try {
        P("x^2 + * y");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("column 7") != std::string::npos);
    }
    CHECK(kind_of([] { P("z"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { P("x^"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { P("1/0"); }) == ErrorKind::ParseError);
}

TEST_CASE("coefficient domains in polynomials")
{
    std::vector<std::string> t{"t"};
    auto f5 = Domain::prime_field(5);
    CHECK(P("3*t + 4*t", t, f5) == P("2*t", t, f5));
    CHECK(P("5*t", t, f5).is_zero());
    CHECK(kind_of([&] { P("1/2*t", t, Domain::integers()); }) == ErrorKind::NotInDomain);
    CHECK(is_unit_poly(P("2*t", t, Domain::integers().localized_at(Coeff(2)))).has_value());
}
