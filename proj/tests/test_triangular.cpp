#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "roadmap/parse.hpp"
#include "roadmap/thom.hpp"
#include "roadmap/triangular.hpp"

using namespace roadmap;

namespace {

using RPoly = UPoly<Rational>;
using MPoly = MultiPoly<Rational>;
using Enc = TriangularThomEncoding<Rational>;

MPoly mp(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly(text, vars);
}

SignCondition sc(std::vector<int> v) { return SignCondition(std::move(v)); }

Rational eval_multi(const MPoly& p, const std::vector<Rational>& pt) {
    Rational out(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * pt[i];
        out = out + t;
    }
    return out;
}

/// p(T1, q(T1)) as a univariate polynomial (exact composition).
RPoly subst_level2(const MPoly& p, const MPoly& q1) {
    MPoly q = q1.with_vars(p.vars());
    MPoly acc(p.vars());
    for (int j = p.degree(1); j >= 0; --j) acc = acc * q + p.coeff_of(1, static_cast<unsigned>(j));
    return to_upoly(acc.with_vars({"T1"}), 0);
}

Rational pow2(int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(2);
    return r;
}

MPoly rnd_multi(std::mt19937& rng, const std::vector<std::string>& vars, int d1, int d2,
                int mag = 9) {
    std::uniform_int_distribution<int> coeff(-mag, mag);
    MPoly p(vars);
    MPoly x = MPoly::variable(vars, 0);
    MPoly y = vars.size() > 1 ? MPoly::variable(vars, 1) : MPoly(vars);
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= (vars.size() > 1 ? d2 : 0); ++j) {
            int c = coeff(rng);
            if (c == 0) continue;
            MPoly t = MPoly::constant(vars, Rational(c)) * x.pow(static_cast<unsigned>(i));
            if (vars.size() > 1) t = t * y.pow(static_cast<unsigned>(j));
            p += t;
        }
    return p;
}

struct Level1Point {
    Enc enc;
    RPoly h;  // squarefree part of the level polynomial, for the oracle
    oracle::RootInterval iv;
};

/// All real roots of f1 (a polynomial over {"T1"} with positive leading
/// coefficient) as one-level encodings paired with oracle isolating
/// intervals; both sides are produced in increasing root order.
std::vector<Level1Point> level1_points(const MPoly& f1m) {
    RPoly f1 = to_upoly(f1m, 0);
    std::vector<ThomEncoding<Rational>> encs = thom_encodings_of_roots(f1);
    std::vector<oracle::RootInterval> ivs = oracle::isolate_roots(f1);
    REQUIRE(encs.size() == ivs.size());
    RPoly h = oracle::squarefree_part(f1);
    std::vector<Level1Point> out;
    for (size_t i = 0; i < encs.size(); ++i)
        out.push_back({Enc({"T1"}, {f1m}, {encs[i].der}), h, ivs[i]});
    return out;
}

}  // namespace

TEST_CASE("pseudo-reduction modulo a triangular system") {
    MPoly f1 = mp("T1^2 - 2", {"T1"});
    Enc enc({"T1"}, {f1}, {sc({1, 1})});  // the positive root
    CHECK(enc.quasi_monic());

    CHECK(pseudo_reduce(mp("T1^2", {"T1"}), enc) == mp("2", {"T1"}));
    CHECK(pseudo_reduce(mp("T1^3", {"T1"}), enc) == mp("2*T1", {"T1"}));
    CHECK(pseudo_reduce(mp("-7", {"T1"}), enc) == mp("-7", {"T1"}));
    CHECK(pseudo_reduce(mp("5", {}), enc) == mp("5", {"T1"}).with_vars({"T1"}));

    // The exact positive factor: reducing T1^2 by T1^2 - 2 uses the even
    // power of the (unit) leading coefficient, so the factor is 1.
    auto [r, factor] = pseudo_reduce_with_factor(mp("3*T1^2", {"T1"}), enc);
    CHECK(r == mp("6", {"T1"}));
    CHECK(factor == Rational(1));

    // Scaled level polynomial: reducing by 2*T1^2 - 4 multiplies by 2^2.
    Enc enc2({"T1"}, {mp("2*T1^2 - 4", {"T1"})}, {sc({1, 1})});
    auto [r2, factor2] = pseudo_reduce_with_factor(mp("T1^2", {"T1"}), enc2);
    CHECK(factor2 == Rational(4));
    CHECK(r2 == mp("8", {"T1"}));  // 4 * t^2 = 8 at t = sqrt(2)

    Enc bad({"T1"}, {mp("-T1^2 + 2", {"T1"})}, {sc({-1, -1})});
    CHECK(!bad.quasi_monic());
    CHECK_THROWS_AS(pseudo_reduce(mp("T1", {"T1"}), bad), std::invalid_argument);
}

TEST_CASE("sign determination at a triangular point") {
    Enc empty;
    CHECK(triangular_sign_determination(empty, {mp("-7", {})}) == sc({-1}));
    CHECK(triangular_sign_determination(empty, {mp("0", {}), mp("5", {})}) == sc({0, 1}));

    MPoly f1 = mp("T1^2 - 2", {"T1"});
    Enc at_sqrt2({"T1"}, {f1}, {sc({1, 1})});
    CHECK(triangular_sign_determination(at_sqrt2, {mp("T1^3 - T1", {"T1"})}) == sc({1}));
    CHECK(triangular_sign_determination(at_sqrt2, {mp("T1^2 - 2", {"T1"}), mp("T1 - 2", {"T1"}),
                                                   mp("T1 + 1", {"T1"})}) == sc({0, -1, 1}));

    Enc at_minus_sqrt2({"T1"}, {f1}, {sc({-1, 1})});
    CHECK(triangular_sign_determination(at_minus_sqrt2, {mp("T1", {"T1"})}) == sc({-1}));

    // Two levels: t = (sqrt(2), 2^(1/4)).
    std::vector<Enc> exts = triangular_thom_encodings(at_sqrt2, mp("T2^2 - T1", {"T1", "T2"}), "T2");
    REQUIRE(exts.size() == 2);
    const Enc& fourth_root = exts[1];
    CHECK(triangular_sign_determination(fourth_root, {mp("T2^4 - 2", {"T1", "T2"})}) == sc({0}));
    CHECK(triangular_sign_determination(fourth_root, {mp("T2", {"T1", "T2"})}) == sc({1}));
    CHECK(triangular_sign_determination(fourth_root, {mp("T2 - T1", {"T1", "T2"})}) == sc({-1}));
    CHECK(triangular_sign_determination(exts[0], {mp("T2", {"T1", "T2"})}) == sc({-1}));

    // An encoding whose sign condition matches no root is rejected.
    Enc ghost({"T1"}, {f1}, {sc({0, 1})});
    CHECK_THROWS_AS(triangular_sign_determination(ghost, {mp("T1", {"T1"})}),
                    std::invalid_argument);
}

TEST_CASE("pseudo-inversion with dynamic encoding update") {
    SUBCASE("quartic whose level polynomial factors during inversion") {
        MPoly f1 = mp("T1^4 - T1^2 - 2", {"T1"});
        std::vector<ThomEncoding<Rational>> roots = thom_encodings_of_roots(to_upoly(f1, 0));
        REQUIRE(roots.size() == 2);  // +-sqrt(2)
        REQUIRE(roots[1].der == sc({1, 1, 1, 1}));
        Enc enc({"T1"}, {f1}, {roots[1].der});

        PseudoInverse<Rational> inv = pseudo_invert(mp("T1^2 + 1", {"T1"}), enc);
        CHECK(inv.enc.levels() == 1);
        CHECK(inv.enc.poly(0) == mp("T1^2 - 2", {"T1"}));
        CHECK(inv.enc.thom(0) == sc({1, 1}));
        CHECK(inv.g == mp("1", {"T1"}));
        CHECK(inv.c == Rational(3));
    }

    SUBCASE("inverse of T1 at sqrt(2)") {
        Enc enc({"T1"}, {mp("T1^2 - 2", {"T1"})}, {sc({1, 1})});
        PseudoInverse<Rational> inv = pseudo_invert(mp("T1", {"T1"}), enc);
        CHECK(inv.g == mp("T1", {"T1"}));
        CHECK(inv.c == Rational(2));
        CHECK(inv.enc == enc);
    }

    SUBCASE("vanishing input is rejected") {
        Enc enc({"T1"}, {mp("T1^2 - 2", {"T1"})}, {sc({1, 1})});
        CHECK_THROWS_WITH_AS(pseudo_invert(mp("T1^2 - 2", {"T1"}), enc),
                             doctest::Contains("not invertible at encoded point"),
                             std::domain_error);
        CHECK_THROWS_AS(pseudo_invert(mp("0", {"T1"}), enc), std::domain_error);
    }

    SUBCASE("constants and empty encodings") {
        Enc empty;
        PseudoInverse<Rational> inv = pseudo_invert(mp("-4", {}), empty);
        CHECK(inv.c == Rational(4));
        CHECK(inv.g == MPoly::constant({}, Rational(-1)));
        CHECK_THROWS_AS(pseudo_invert(mp("0", {}), empty), std::domain_error);
    }

    SUBCASE("repeated factor discovery keeps tracking the point") {
        // f1 = (T1 - 1)^2 (T1 + 1); inverting T1 - 1 at the root -1 forces
        // the shared factor out of the level polynomial twice.
        MPoly f1 = mp("T1^3 - T1^2 - T1 + 1", {"T1"});
        std::vector<ThomEncoding<Rational>> roots = thom_encodings_of_roots(to_upoly(f1, 0));
        REQUIRE(roots.size() == 2);
        Enc enc({"T1"}, {f1}, {roots[0].der});  // t = -1
        PseudoInverse<Rational> inv = pseudo_invert(mp("T1 - 1", {"T1"}), enc);
        // (t - 1) * g(t) = c > 0 with t = -1: g(-1) * (-2) = c.
        Rational g_at = eval_multi(inv.g, {Rational(-1)});
        CHECK(g_at * Rational(-2) == inv.c);
        CHECK(inv.c.sign() > 0);
        // The updated level polynomial still vanishes at -1.
        CHECK(eval_multi(inv.enc.poly(0), {Rational(-1)}) == Rational(0));
    }
}

TEST_CASE("ordered root encodings over a triangular point") {
    Enc empty;
    std::vector<Enc> r2 = triangular_thom_encodings(empty, mp("U^2 - 2", {"U"}), "U");
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].thom(0) == sc({-1, 1}));
    CHECK(r2[1].thom(0) == sc({1, 1}));
    CHECK(r2[0].poly(0) == mp("U^2 - 2", {"U"}));
    CHECK(r2[0].var(0) == "U");

    // Against the univariate kernel on a messier polynomial.
    MPoly h = mp("U^4 - 5*U^2 + 4", {"U"});  // roots -2, -1, 1, 2
    std::vector<Enc> r4 = triangular_thom_encodings(empty, h, "U");
    std::vector<ThomEncoding<Rational>> kern = thom_encodings_of_roots(to_upoly(h, 0));
    REQUIRE(r4.size() == kern.size());
    for (size_t i = 0; i < r4.size(); ++i) CHECK(r4[i].thom(0) == kern[i].der);

    Enc at_sqrt2({"T1"}, {mp("T1^2 - 2", {"T1"})}, {sc({1, 1})});
    std::vector<Enc> quarts =
        triangular_thom_encodings(at_sqrt2, mp("U^2 - T1", {"T1", "U"}), "U");
    REQUIRE(quarts.size() == 2);  // +-2^(1/4)
    CHECK(quarts[0].thom(1) == sc({-1, 1}));
    CHECK(quarts[1].thom(1) == sc({1, 1}));
    CHECK(quarts[0].levels() == 2);
    CHECK(quarts[0].var(1) == "U");

    CHECK(triangular_thom_encodings(at_sqrt2, mp("U^2 + T1", {"T1", "U"}), "U").empty());
    CHECK(triangular_thom_encodings(at_sqrt2, mp("7", {"T1", "U"}), "U").empty());

    // Leading coefficients vanishing at the point are dropped before root
    // finding; a polynomial vanishing identically at the point is an error.
    std::vector<Enc> dropped = triangular_thom_encodings(
        at_sqrt2, mp("(T1^2 - 2)*U^3 + U^2 - T1", {"T1", "U"}), "U");
    CHECK(dropped.size() == 2);
    CHECK_THROWS_WITH_AS(
        triangular_thom_encodings(at_sqrt2, mp("(T1^2 - 2)*U^2", {"T1", "U"}), "U"),
        doctest::Contains("identically zero"), std::domain_error);
}

TEST_CASE("ordering extensions of a common point") {
    Enc at_sqrt2({"T1"}, {mp("T1^2 - 2", {"T1"})}, {sc({1, 1})});
    std::vector<Enc> quarts =
        triangular_thom_encodings(at_sqrt2, mp("U^2 - T1", {"T1", "U"}), "U");
    REQUIRE(quarts.size() == 2);
    CHECK(compare_extensions(quarts[0], quarts[1]) < 0);
    CHECK(compare_extensions(quarts[1], quarts[0]) > 0);
    CHECK(compare_extensions(quarts[0], quarts[0]) == 0);

    // Different last-level polynomials over the same base: 1 < 2^(1/4).
    std::vector<Enc> unit = triangular_thom_encodings(at_sqrt2, mp("U - 1", {"T1", "U"}), "U");
    REQUIRE(unit.size() == 1);
    CHECK(compare_extensions(unit[0], quarts[1]) < 0);
    CHECK(compare_extensions(quarts[1], unit[0]) > 0);
    CHECK(compare_extensions(quarts[0], unit[0]) < 0);

    // The same number reached through different polynomials compares equal.
    std::vector<Enc> sq = triangular_thom_encodings(at_sqrt2, mp("U^2 - 1", {"T1", "U"}), "U");
    REQUIRE(sq.size() == 2);
    CHECK(compare_extensions(sq[1], unit[0]) == 0);
    CHECK(compare_extensions(unit[0], sq[1]) == 0);
    CHECK(compare_extensions(sq[0], unit[0]) < 0);

    Enc at_minus({"T1"}, {mp("T1^2 - 2", {"T1"})}, {sc({-1, 1})});
    std::vector<Enc> other = triangular_thom_encodings(at_minus, mp("U - 1", {"T1", "U"}), "U");
    CHECK_THROWS_AS(compare_extensions(unit[0], other[0]), std::invalid_argument);
}

TEST_CASE("sample points along a line over a triangular point") {
    Enc empty;

    SUBCASE("single linear member is pinned exactly") {
        TriangularSamplePoints<Rational> sp = triangular_sample_points(empty, {mp("X", {"X"})}, "X");
        REQUIRE(sp.roots.size() == 1);
        CHECK(sp.roots[0].thom(0) == sc({1}));
        REQUIRE(sp.samples.size() == 2);
        CHECK(sp.samples[0] == Rational(-1));
        CHECK(sp.samples[1] == Rational(1));
    }

    SUBCASE("two rational roots") {
        TriangularSamplePoints<Rational> sp =
            triangular_sample_points(empty, {mp("X^2 - 1", {"X"})}, "X");
        REQUIRE(sp.roots.size() == 2);
        CHECK(sp.roots[0].thom(0) == sc({-1, 1}));
        CHECK(sp.roots[1].thom(0) == sc({1, 1}));
        REQUIRE(sp.samples.size() == 3);
        CHECK(sp.samples[0] < Rational(-1));
        CHECK(Rational(-1) < sp.samples[1]);
        CHECK(sp.samples[1] < Rational(1));
        CHECK(Rational(1) < sp.samples[2]);
    }

    SUBCASE("interleaved members with algebraic and rational roots") {
        TriangularSamplePoints<Rational> sp =
            triangular_sample_points(empty, {mp("X^2 - 2", {"X"}), mp("X", {"X"})}, "X");
        REQUIRE(sp.roots.size() == 3);
        REQUIRE(sp.samples.size() == 4);
        CHECK(sp.roots[0].poly(0) == mp("X^2 - 2", {"X"}));
        CHECK(sp.roots[0].thom(0) == sc({-1, 1}));
        CHECK(sp.roots[1].poly(0) == mp("X", {"X"}));
        CHECK(sp.roots[2].thom(0) == sc({1, 1}));
        // -s0, s3 outside sqrt(2); s1 in (-sqrt2, 0); s2 in (0, sqrt2).
        CHECK(sp.samples[0].sign() < 0);
        CHECK(sp.samples[0] * sp.samples[0] > Rational(2));
        CHECK(sp.samples[1].sign() < 0);
        CHECK(sp.samples[1] * sp.samples[1] < Rational(2));
        CHECK(sp.samples[2].sign() > 0);
        CHECK(sp.samples[2] * sp.samples[2] < Rational(2));
        CHECK(sp.samples[3] * sp.samples[3] > Rational(2));
    }

    SUBCASE("shared roots are reported once") {
        TriangularSamplePoints<Rational> sp = triangular_sample_points(
            empty, {mp("X^2 - 1", {"X"}), mp("X - 1", {"X"})}, "X");
        REQUIRE(sp.roots.size() == 2);
        CHECK(sp.samples.size() == 3);
    }

    SUBCASE("no real roots yields one sample") {
        TriangularSamplePoints<Rational> sp =
            triangular_sample_points(empty, {mp("X^2 + 1", {"X"}), mp("3", {"X"})}, "X");
        CHECK(sp.roots.empty());
        REQUIRE(sp.samples.size() == 1);
    }

    SUBCASE("rational endpoint equal to the top root is bumped") {
        TriangularSamplePoints<Rational> sp =
            triangular_sample_points(empty, {mp("X^2 - X", {"X"})}, "X");
        REQUIRE(sp.roots.size() == 2);
        REQUIRE(sp.samples.size() == 3);
        CHECK(sp.samples[0].sign() < 0);
        CHECK(sp.samples[1].sign() > 0);
        CHECK(sp.samples[1] < Rational(1));
        CHECK(Rational(1) < sp.samples[2]);
    }

    SUBCASE("over an algebraic point") {
        Enc at_sqrt2({"T1"}, {mp("T1^2 - 2", {"T1"})}, {sc({1, 1})});
        // X^2 - T1 has roots +-2^(1/4) ~= +-1.189; X - 1 sits between them.
        TriangularSamplePoints<Rational> sp = triangular_sample_points(
            at_sqrt2, {mp("X^2 - T1", {"T1", "X"}), mp("X - 1", {"T1", "X"})}, "X");
        REQUIRE(sp.roots.size() == 3);
        REQUIRE(sp.samples.size() == 4);
        CHECK(sp.roots[1].poly(1) == mp("X - 1", {"T1", "X"}));
        CHECK(compare_extensions(sp.roots[0], sp.roots[1]) < 0);
        CHECK(compare_extensions(sp.roots[1], sp.roots[2]) < 0);
        // Sample 2 lies in (1, 2^(1/4)): its 4th power stays below 2.
        Rational s2 = sp.samples[2];
        CHECK(Rational(1) < s2);
        CHECK(s2 * s2 * s2 * s2 < Rational(2));

        CHECK_THROWS_WITH_AS(
            triangular_sample_points(at_sqrt2, {mp("(T1^2 - 2)*X", {"T1", "X"})}, "X"),
            doctest::Contains("identically zero"), std::domain_error);
    }
}

TEST_CASE("level-one operations agree exactly with the univariate oracle") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> deg(1, 4);
    std::uniform_int_distribution<int> lead(1, 5);
    int invert_checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        int d = deg(rng);
        MPoly f1 = rnd_multi(rng, {"T1"}, d - 1, 0);
        f1 += MPoly::constant({"T1"}, Rational(lead(rng))) *
              MPoly::variable({"T1"}, 0).pow(static_cast<unsigned>(d));
        for (Level1Point& pt : level1_points(f1)) {
            for (int k = 0; k < 3; ++k) {
                MPoly p = rnd_multi(rng, {"T1"}, 4, 0);
                int want = oracle::sign_at_root(pt.h, pt.iv, to_upoly(p.with_vars({"T1"}), 0));
                CHECK(triangular_sign_determination(pt.enc, {p})[0] == want);

                MPoly r = pseudo_reduce(p, pt.enc);
                CHECK(oracle::sign_at_root(pt.h, pt.iv, to_upoly(r, 0)) == want);

                if (want == 0) {
                    CHECK_THROWS_AS(pseudo_invert(p, pt.enc), std::domain_error);
                    continue;
                }
                PseudoInverse<Rational> inv = pseudo_invert(p, pt.enc);
                ++invert_checked;
                CHECK(inv.c.sign() > 0);
                // p * g - c vanishes at the encoded point, exactly.
                MPoly witness = p * inv.g - MPoly::constant({"T1"}, inv.c);
                CHECK(oracle::sign_at_root(pt.h, pt.iv, to_upoly(witness, 0)) == 0);
                // The updated encoding pins the same point: its level
                // polynomial vanishes there and its derivative signs match.
                MPoly nf = inv.enc.poly(0);
                CHECK(oracle::sign_at_root(pt.h, pt.iv, to_upoly(nf, 0)) == 0);
                RPoly d = to_upoly(nf, 0).derivative();
                for (size_t j = 0; j < inv.enc.thom(0).size(); ++j) {
                    CHECK(oracle::sign_at_root(pt.h, pt.iv, d) == inv.enc.thom(0)[j]);
                    d = d.derivative();
                }
            }
        }
    }
    CHECK(invert_checked > 100);
}

TEST_CASE("two-level operations agree exactly under a solvable second level") {
    // With a degree-one second level T2 - q(T1), every computation over the
    // two-level point can be checked by exact substitution T2 := q(T1) and
    // the univariate oracle at the first level.
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> deg(1, 3);
    std::uniform_int_distribution<int> lead(1, 4);
    int checked = 0;
    for (int iter = 0; iter < 30; ++iter) {
        int d = deg(rng);
        MPoly f1 = rnd_multi(rng, {"T1"}, d - 1, 0, 6);
        f1 += MPoly::constant({"T1"}, Rational(lead(rng))) *
              MPoly::variable({"T1"}, 0).pow(static_cast<unsigned>(d));
        MPoly q = rnd_multi(rng, {"T1"}, 2, 0, 4);
        MPoly level2 = mp("T2", {"T1", "T2"}) - q.with_vars({"T1", "T2"});
        for (Level1Point& pt : level1_points(f1)) {
            Enc enc2 = pt.enc.extended("T2", level2, sc({1}));
            for (int k = 0; k < 2; ++k) {
                MPoly p = rnd_multi(rng, {"T1", "T2"}, 3, 3, 6);
                RPoly composed = subst_level2(p, q);
                int want = oracle::sign_at_root(pt.h, pt.iv, composed);
                CHECK(triangular_sign_determination(enc2, {p})[0] == want);

                MPoly r = pseudo_reduce(p, enc2);
                CHECK(r.degree(1) == 0);  // second level is linear
                CHECK(oracle::sign_at_root(pt.h, pt.iv, subst_level2(r, q)) == want);

                if (want == 0) {
                    CHECK_THROWS_AS(pseudo_invert(p, enc2), std::domain_error);
                    continue;
                }
                PseudoInverse<Rational> inv = pseudo_invert(p, enc2);
                ++checked;
                CHECK(inv.c.sign() > 0);
                MPoly witness =
                    p.with_vars(inv.enc.vars()) * inv.g.with_vars(inv.enc.vars()) -
                    MPoly::constant(inv.enc.vars(), inv.c);
                CHECK(oracle::sign_at_root(pt.h, pt.iv, subst_level2(witness, q)) == 0);
                // Same point: both updated level polynomials vanish at
                // (t1, q(t1)).
                CHECK(oracle::sign_at_root(pt.h, pt.iv, subst_level2(inv.enc.poly(0), q)) == 0);
                CHECK(oracle::sign_at_root(pt.h, pt.iv, subst_level2(inv.enc.poly(1), q)) == 0);
            }
        }
    }
    CHECK(checked > 40);
}

TEST_CASE("triangular queries over the empty encoding match the kernel") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> deg(1, 5);
    Enc empty;
    for (int iter = 0; iter < 40; ++iter) {
        MPoly fm = rnd_multi(rng, {"X"}, deg(rng), 0);
        if (fm.degree(0) < 1) continue;
        MPoly gm = rnd_multi(rng, {"X"}, 3, 0);
        RPoly f = to_upoly(fm, 0);
        RPoly g = to_upoly(gm, 0);
        CHECK(triangular_tarski_query(empty, to_upoly_in(gm, 0), to_upoly_in(fm, 0)) ==
              tarski_query(g, f));

        std::vector<Enc> tri = triangular_thom_encodings(empty, fm, "X");
        std::vector<ThomEncoding<Rational>> kern = thom_encodings_of_roots(f);
        REQUIRE(tri.size() == kern.size());
        for (size_t i = 0; i < tri.size(); ++i) CHECK(tri[i].thom(0) == kern[i].der);
    }
}

TEST_CASE("sample points bracket every root of the family") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> deg(1, 4);
    std::uniform_int_distribution<int> nfam(1, 3);
    Enc empty;
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<MPoly> family;
        RPoly product(Rational(1));
        bool ok = true;
        int n = nfam(rng);
        for (int j = 0; j < n; ++j) {
            MPoly h = rnd_multi(rng, {"X"}, deg(rng), 0);
            if (h.is_zero()) {
                ok = false;
                break;
            }
            family.push_back(h);
            product = product * to_upoly(h, 0);
        }
        if (!ok) continue;
        TriangularSamplePoints<Rational> sp = triangular_sample_points(empty, family, "X");
        std::vector<oracle::RootInterval> ivs = oracle::isolate_roots(product);
        REQUIRE(sp.roots.size() == ivs.size());
        REQUIRE(sp.samples.size() == ivs.size() + 1);
        // No sample is a root, and consecutive samples bracket exactly one
        // distinct root of the product.
        RPoly psf = oracle::squarefree_part(product);
        for (const Rational& s : sp.samples) CHECK(product.eval(s).sign() != 0);
        for (size_t i = 0; i + 1 < sp.samples.size(); ++i) {
            CHECK(sp.samples[i] < sp.samples[i + 1]);
            if (psf.degree() > 0)
                CHECK(oracle::sturm_count(psf, sp.samples[i], sp.samples[i + 1]) == 1);
        }
        if (!sp.samples.empty() && psf.degree() > 0) {
            Rational b = oracle::root_bound(psf) + Rational(1);
            CHECK(oracle::sturm_count(psf, -b, sp.samples.front()) == 0);
            CHECK(oracle::sturm_count(psf, sp.samples.back(), b) == 0);
        }
        // Root encodings are strictly increasing.
        for (size_t i = 0; i + 1 < sp.roots.size(); ++i)
            CHECK(compare_extensions(sp.roots[i], sp.roots[i + 1]) < 0);
    }
}

TEST_CASE("numeric agreement at an approximated two-level point") {
    // Property from the build contract: for random (f, enc) with two levels,
    // the signs of f and of its pseudo-reduction agree at a high-precision
    // numeric approximation of t, and pseudo-inverses satisfy
    // f(t) g(t) = c to within 1e-9 relative error.
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> deg1(1, 3), deg2(1, 3), lead(1, 4);
    Rational width = Rational(1) / pow2(140);
    Rational margin = Rational(1) / pow2(40);
    Rational tol = Rational(1) / Rational(1000000000);
    int sign_checked = 0, invert_checked = 0;
    for (int iter = 0; iter < 15; ++iter) {
        int d1 = deg1(rng);
        MPoly f1 = rnd_multi(rng, {"T1"}, d1 - 1, 0, 5);
        f1 += MPoly::constant({"T1"}, Rational(lead(rng))) *
              MPoly::variable({"T1"}, 0).pow(static_cast<unsigned>(d1));
        // Second level with constant positive leading coefficient, so the
        // tower stays quasi-monic.
        int d2 = deg2(rng);
        MPoly f2 = rnd_multi(rng, {"T1", "T2"}, 2, d2 - 1, 5);
        f2 += MPoly::constant({"T1", "T2"}, Rational(lead(rng))) *
              MPoly::variable({"T1", "T2"}, 1).pow(static_cast<unsigned>(d2));

        for (Level1Point& pt : level1_points(f1)) {
            std::vector<Enc> exts;
            try {
                exts = triangular_thom_encodings(pt.enc, f2, "T2");
            } catch (const std::domain_error&) {
                continue;
            }
            oracle::RootInterval riv = oracle::refine(pt.h, pt.iv, width);
            Rational t1 = (riv.lo + riv.hi) / Rational(2);
            // Exact specialization of the second level at the rational t1.
            std::vector<Rational> c2;
            for (int j = 0; j <= f2.degree(1); ++j)
                c2.push_back(eval_multi(f2.coeff_of(1, static_cast<unsigned>(j)), {t1, Rational(0)}));
            RPoly f2s = RPoly::from_coeffs(std::move(c2));
            std::vector<oracle::RootInterval> fibers = oracle::isolate_roots(f2s);
            if (fibers.size() != exts.size()) continue;  // too close to a degeneracy
            RPoly f2sf = oracle::squarefree_part(f2s);
            for (size_t i = 0; i < exts.size(); ++i) {
                oracle::RootInterval fiv = oracle::refine(f2sf, fibers[i], width);
                Rational t2 = (fiv.lo + fiv.hi) / Rational(2);
                std::vector<Rational> at{t1, t2};
                MPoly p = rnd_multi(rng, {"T1", "T2"}, 3, 3, 5);
                Rational pv = eval_multi(p, at);
                MPoly r = pseudo_reduce(p, exts[i]);
                Rational rv = eval_multi(r, at);
                if (abs(pv) > margin && abs(rv) > margin) {
                    CHECK(pv.sign() == rv.sign());
                    ++sign_checked;
                }
                if (abs(pv) > margin) {
                    PseudoInverse<Rational> inv = pseudo_invert(p, exts[i]);
                    CHECK(inv.c.sign() > 0);
                    Rational lhs = pv * eval_multi(inv.g.with_vars({"T1", "T2"}), at);
                    CHECK(abs(lhs - inv.c) <= tol * inv.c);
                    // Updated encoding pins the same point numerically.
                    CHECK(abs(eval_multi(inv.enc.poly(0).with_vars({"T1", "T2"}), at)) <= tol);
                    CHECK(abs(eval_multi(inv.enc.poly(1).with_vars({"T1", "T2"}), at)) <= tol);
                    ++invert_checked;
                }
            }
        }
    }
    CHECK(sign_checked > 10);
    CHECK(invert_checked > 10);
}
