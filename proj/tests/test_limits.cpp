#include "doctest.h"

#include <string>
#include <vector>

#include "roadmap/eps_scalar.hpp"
#include "roadmap/limits.hpp"
#include "roadmap/parse.hpp"
#include "roadmap/representation.hpp"
#include "roadmap/triangular.hpp"

using namespace roadmap;

namespace {

using MPoly = MultiPoly<Rational>;
using EPoly = MultiPoly<EpsScalar>;
using EncE = TriangularThomEncoding<EpsScalar>;
using RepE = RealUnivariateRep<EpsScalar>;

MPoly mp(const std::string& s, const std::vector<std::string>& vars) {
    return parse_poly(s, vars);
}

EPoly ep(const std::string& s, const std::vector<std::string>& vars) {
    return promote_eps(parse_poly(s, vars));
}

EPoly ec(const std::vector<std::string>& vars, const EpsScalar& c) {
    return EPoly::constant(vars, c);
}

SignCondition sc(std::vector<int> v) { return SignCondition(std::move(v)); }

/// Sign of (first coordinate - q) at the represented point.
int cmp_value(const RealUnivariateRep<Rational>& rep, const Rational& q) {
    std::vector<std::string> one{"A"};
    return sign_at_rep_point(rep, mp("A", one) - MPoly::constant(one, q));
}

}  // namespace

TEST_CASE("limits: linear approach to the origin") {
    std::vector<std::string> u{"U"};
    EPoly ge = ep("U", u) - ec(u, EpsScalar::eps());
    EncE enc = EncE().extended("U", ge, sc({1}));
    RepE rep{enc, {ep("1", u), ep("U", u)}};

    BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
    CHECK(out.base.levels() == 0);
    CHECK(out.rep.enc.levels() == 1);
    CHECK(out.rep.enc.quasi_monic());
    CHECK(cmp_value(out.rep, Rational(0)) == 0);
}

TEST_CASE("limits: double root collapse") {
    // Root +eps of U^2 - eps^2 slides into the double root 0 of U^2; the
    // constant denominator must survive untouched (no derivative needed).
    // Oracle: substituting eps = 10^-9 puts the input coordinate at 10^-9,
    // so the limit must sit within 10^-6 of it.
    std::vector<std::string> u{"U"};
    EPoly ge = ep("U^2", u) - ec(u, EpsScalar::monomial(Rational(1), 2));

    for (int which = 0; which < 2; ++which) {
        SignCondition sigma = which == 0 ? sc({1, 1}) : sc({-1, 1});  // +eps / -eps
        EncE enc = EncE().extended("U", ge, sigma);
        RepE rep{enc, {ep("1", u), ep("U", u)}};
        BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
        CHECK(cmp_value(out.rep, Rational(0)) == 0);
        CHECK(cmp_value(out.rep, Rational(1001, 1000000000)) < 0);
        CHECK(cmp_value(out.rep, Rational(-999, 1000000000)) > 0);
        // The limit root of U^2 is the double root: derivative zero, second
        // derivative positive.
        size_t last = out.rep.enc.levels() - 1;
        CHECK(out.rep.enc.thom(last) == sc({0, 1}));
    }
}

TEST_CASE("limits: escape to infinity is detected") {
    std::vector<std::string> u{"U"};
    EPoly ge = ec(u, EpsScalar::eps()) * ep("U", u) - ep("1", u);
    EncE enc = EncE().extended("U", ge, sc({1}));
    RepE rep{enc, {ep("1", u), ep("U", u)}};
    CHECK_THROWS_WITH_AS(limit_of_bounded_point(rep), "point unbounded over R", std::domain_error);
}

TEST_CASE("limits: base point rides along") {
    // t = sqrt(2) as root of T^2 - 2; the point t - eps converges to t.
    std::vector<std::string> tv{"T", "U"};
    EncE base = EncE().extended("T", ep("T^2 - 2", {"T"}), sc({1, 1}));
    EPoly ge = ep("U - T", tv) + ec(tv, EpsScalar::eps());
    EncE enc = base.extended("U", ge, sc({1}));
    RepE rep{enc, {ep("1", tv), ep("U", tv)}};

    BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
    CHECK(out.base.levels() == 1);
    CHECK(out.rep.enc.quasi_monic());
    std::vector<std::string> one{"A"};
    CHECK(sign_at_rep_point(out.rep, mp("A^2 - 2", one)) == 0);
    CHECK(sign_at_rep_point(out.rep, mp("A", one)) > 0);
    // Mixed form: the coordinate equals the base coordinate itself.
    CHECK(sign_at_rep_point(out.rep, mp("T - A", {"T", "A"})) == 0);
}

TEST_CASE("limits: non-constant leading coefficient is cleared") {
    // Root of T*U - 1 + eps over t = sqrt(2): converges to 1/sqrt(2); the
    // output must be quasi-monic even though the input's leading coefficient
    // is the coordinate T.
    std::vector<std::string> tv{"T", "U"};
    EncE base = EncE().extended("T", ep("T^2 - 2", {"T"}), sc({1, 1}));
    EPoly ge = ep("T*U - 1", tv) + ec(tv, EpsScalar::eps());
    EncE enc = base.extended("U", ge, sc({1}));
    RepE rep{enc, {ep("1", tv), ep("U", tv)}};

    BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
    CHECK(out.rep.enc.quasi_monic());
    std::vector<std::string> one{"A"};
    CHECK(sign_at_rep_point(out.rep, mp("2*A^2 - 1", one)) == 0);
    CHECK(sign_at_rep_point(out.rep, mp("A", one)) > 0);
}

TEST_CASE("limits: common infinitesimal factor in the tuple cancels") {
    std::vector<std::string> u{"U"};
    EPoly ge = ep("U", u) - ec(u, EpsScalar::eps());
    EncE enc = EncE().extended("U", ge, sc({1}));
    RepE rep{enc, {ec(u, EpsScalar::eps()), ec(u, EpsScalar::eps()) * ep("U", u)}};

    BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
    CHECK(cmp_value(out.rep, Rational(0)) == 0);
}

TEST_CASE("limits: derivative tuple fires only when the denominator dies") {
    // Tuple (2U, 2U^2) represents the coordinate U; at the collapsed double
    // root the denominator vanishes to order one, so one derivative is taken.
    std::vector<std::string> u{"U"};
    EPoly ge = ep("U^2", u) - ec(u, EpsScalar::monomial(Rational(1), 2));
    EncE enc = EncE().extended("U", ge, sc({1, 1}));
    RepE rep{enc, {ep("2*U", u), ep("2*U^2", u)}};

    BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
    CHECK(cmp_value(out.rep, Rational(0)) == 0);
}

TEST_CASE("limits: nearby roots with distinct limits are separated") {
    std::vector<std::string> u{"U"};
    // (U - eps)(U - 1): one root goes to 0, the other stays at 1.
    EPoly ge = ep("U^2 - U", u) + ec(u, EpsScalar::eps()) * ep("1 - U", u);

    EncE enc0 = EncE().extended("U", ge, sc({-1, 1}));  // the root at eps
    RepE rep0{enc0, {ep("1", u), ep("U", u)}};
    CHECK(cmp_value(limit_of_bounded_point(rep0).rep, Rational(0)) == 0);

    EncE enc1 = EncE().extended("U", ge, sc({1, 1}));  // the root at 1
    RepE rep1{enc1, {ep("1", u), ep("U", u)}};
    CHECK(cmp_value(limit_of_bounded_point(rep1).rep, Rational(1)) == 0);
}

TEST_CASE("limits: exact points are fixed points") {
    std::vector<std::string> u{"U"};
    std::vector<Rational> values{Rational(0), Rational(2), Rational(-3, 2), Rational(7, 3)};
    std::vector<Rational> drifts{Rational(0), Rational(1), Rational(-2)};
    for (const Rational& a : values) {
        for (const Rational& c : drifts) {
            EPoly ge = ep("U", u) - ec(u, EpsScalar(a)) - ec(u, EpsScalar::monomial(c, 1));
            EncE enc = EncE().extended("U", ge, sc({1}));
            RepE rep{enc, {ep("1", u), ep("U", u)}};
            BoundedPointLimit<Rational> out = limit_of_bounded_point(rep);
            CHECK(cmp_value(out.rep, a) == 0);
        }
    }
}

TEST_CASE("limits: input validation") {
    std::vector<std::string> tv{"T", "U"};

    // Base level carrying the infinitesimal is rejected.
    EncE badbase =
        EncE().extended("T", ep("T", {"T"}) - ec({"T"}, EpsScalar::eps()), sc({1}));
    EncE enc1 = badbase.extended("U", ep("U - T", tv), sc({1}));
    RepE rep1{enc1, {ep("1", tv), ep("U", tv)}};
    CHECK_THROWS_AS(limit_of_bounded_point(rep1), std::invalid_argument);

    // Non-quasi-monic base is rejected.
    EncE negbase = EncE().extended("T", ep("-T", {"T"}), sc({-1}));
    EncE enc2 = negbase.extended("U", ep("U - T", tv), sc({1}));
    RepE rep2{enc2, {ep("1", tv), ep("U", tv)}};
    CHECK_THROWS_AS(limit_of_bounded_point(rep2), std::invalid_argument);
}
