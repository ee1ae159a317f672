#include <doctest.h>

#include "random_gen.hpp"
#include "udual/charform.hpp"
#include "udual/jl.hpp"

using namespace udual;

namespace {
ExactComplex ec(long re) { return ExactComplex(rat(re)); }
ExactComplex ech(long num, long den) { return ExactComplex(rat(num, den)); }
Dparam dl(long a, int eps) { return Dparam::realChar(ec(a), eps); }
Dparam rd(long x, long y) { return Dparam::realDS(ec(x), ec(y)); }
Dparam qd(long x, long y) { return Dparam::quatDS(ec(x), ec(y)); }
Dparam qdh() { return Dparam::quatDS(ech(1, 2), ech(-1, 2)); }
}  // namespace

TEST_CASE("transfer of single classes") {
    CHECK(ljOnD(rd(3, 1)) == -lambdaMonomial(Algebra::Quaternion, {qd(3, 1)}));
    CHECK(ljOnD(dl(0, 0)).isZero());

    testing::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        Dparam p = rng.dparam(Algebra::Real);
        if (p.kind() != Dparam::Kind::RealDS) continue;
        RingElem img = ljOnD(p);
        REQUIRE(img.termCount() == 1);
        CHECK(supportOf(img.coords().begin()->first).entries == supportOfD(p).entries);
    }
}

TEST_CASE("ring morphism") {
    CHECK(ljRing(lambdaMonomial(Algebra::Real, {rd(1, 0), rd(2, 1)})) ==
          lambdaMonomial(Algebra::Quaternion, {qd(1, 0), qd(2, 1)}));
    CHECK(ljRing(lambdaMonomial(Algebra::Real, {rd(1, 0), dl(0, 0)})).isZero());

    testing::Rng rng(71);
    for (int trial = 0; trial < 120; ++trial) {
        RingElem a = rng.ringElem(Algebra::Real), b = rng.ringElem(Algebra::Real);
        CHECK(ljRing(a * b) == ljRing(a) * ljRing(b));
        CHECK(ljRing(a + b) == ljRing(a) + ljRing(b));
    }
}

TEST_CASE("transfer of ladder quotients") {
    auto t1 = ljSpeh(dl(0, 0), 4);
    REQUIRE(t1);
    CHECK(t1->sign == 1);
    CHECK(t1->rep == UnitaryRep(Algebra::Quaternion, {Speh{qdh(), 2}}));

    CHECK(!ljSpeh(dl(0, 0), 3));

    auto t2 = ljSpeh(rd(3, 1), 2);
    REQUIRE(t2);
    CHECK(t2->sign == 1);
    CHECK(t2->rep == UnitaryRep(Algebra::Quaternion, {Speh{qd(3, 1), 2}}));

    auto t3 = ljSpeh(rd(1, 0), 3);
    REQUIRE(t3);
    CHECK(t3->sign == -1);
    CHECK(t3->rep == UnitaryRep(Algebra::Quaternion, {Speh{qd(1, 0), 2}, Speh{qd(1, 0), 1}}));
}

TEST_CASE("transfer of unitary representations") {
    // an odd character factor kills the transfer
    UnitaryRep bad(Algebra::Real, {Speh{dl(0, 0), 3}, Speh{dl(0, 0), 1}});
    CHECK(!ljAbsUnitary(bad));

    UnitaryRep wall(Algebra::Real, {Speh{Dparam::realDS(ech(1, 2), ech(-1, 2)), 2}});
    auto tw = ljAbsUnitary(wall);
    REQUIRE(tw);
    CHECK(tw->sign == 1);
    CHECK(tw->rep == UnitaryRep(Algebra::Quaternion, {CompSeries{qdh(), 1, rat(1, 4)}}));

    // complementary series transfer with the same parameter
    UnitaryRep cs(Algebra::Real, {CompSeries{rd(1, -1), 1, rat(1, 4)}});
    auto tc = ljAbsUnitary(cs);
    REQUIRE(tc);
    CHECK(tc->rep == UnitaryRep(Algebra::Quaternion, {CompSeries{qd(1, -1), 1, rat(1, 4)}}));

    CHECK_THROWS_AS(ljAbsUnitary(UnitaryRep(Algebra::Real, {Speh{dl(0, 0), 1}})),
                    std::invalid_argument);
}

TEST_CASE("the introduction's transfer table for one-dimensional images") {
    Dparam delta = Dparam::realDS(ech(1, 2), ech(-1, 2));
    Dparam chi = qdh();
    for (int k = 1; k <= 7; ++k) {
        auto t = ljSpeh(delta, k);
        REQUIRE(t);
        CHECK(t->sign == (k % 2 == 0 ? 1 : -1));
        UnitaryRep expected =
            k == 1 ? UnitaryRep(Algebra::Quaternion, {Speh{chi, 1}})
            : k % 2 == 0
                ? UnitaryRep(Algebra::Quaternion, {CompSeries{chi, k / 2, rat(1, 4)}})
                : UnitaryRep(Algebra::Quaternion, {Speh{chi, (k + 1) / 2}, Speh{chi, (k - 1) / 2}});
        CHECK(t->rep == expected);
    }
}

TEST_CASE("epsilon sign") {
    CHECK(epsilonSign(UnitaryRep(Algebra::Real, {Speh{rd(1, 0), 3}})) == -1);
    CHECK(epsilonSign(UnitaryRep(Algebra::Real, {Speh{rd(1, 0), 2}})) == 1);
    CHECK_THROWS_AS(epsilonSign(UnitaryRep(Algebra::Real, {Speh{dl(0, 0), 3}, Speh{dl(0, 0), 1}})),
                    std::domain_error);

    testing::Rng rng(73);
    int seen = 0;
    for (int trial = 0; trial < 3000 && seen < 60; ++trial) {
        UnitaryRep a = rng.unitaryRep(Algebra::Real, 3), b = rng.unitaryRep(Algebra::Real, 3);
        if (degreeOf(a) % 2 || degreeOf(b) % 2) continue;
        if (!ljAbsUnitary(a) || !ljAbsUnitary(b)) continue;
        ++seen;
        CHECK(epsilonSign(a * b) == epsilonSign(a) * epsilonSign(b));
    }
    CHECK(seen == 60);
}

TEST_CASE("complementary series over the wall line transfer with the exact datum") {
    // LJ(pi(delta, m; a)) = nu^a LJ(u(delta, m)) x nu^-a LJ(u(delta, m)),
    // so the image datum must be the +-a twist pair of the wall-quotient datum
    Dparam base = Dparam::realDS(ech(1, 2), ech(-1, 2));
    for (int m = 1; m <= 4; ++m)
        for (long num : {1L, 2L, 3L}) {
            Rational a = rat(num, 8);
            auto img = ljAbsUnitary(UnitaryRep(Algebra::Real, {CompSeries{base, m, a}}));
            REQUIRE(img);
            LanglandsDatum d = toDatum(ubarExpand(ech(1, 2), m));
            LanglandsDatum expected(Algebra::Quaternion, {});
            for (const Dparam& p : d.elems) {
                expected = expected + LanglandsDatum(Algebra::Quaternion, {twist(p, ExactComplex(a))});
                expected =
                    expected + LanglandsDatum(Algebra::Quaternion, {twist(p, ExactComplex(Rational(-a)))});
            }
            CHECK(toDatum(img->rep) == expected);
        }
}

TEST_CASE("the unitary transfer preserves supports") {
    testing::Rng rng(83);
    int seen = 0;
    for (int trial = 0; trial < 3000 && seen < 80; ++trial) {
        UnitaryRep rep = rng.unitaryRep(Algebra::Real, 4);
        if (degreeOf(rep) % 2) continue;
        auto img = ljAbsUnitary(rep);
        if (!img) continue;
        ++seen;
        CHECK(supportOf(toDatum(rep)).entries == supportOf(toDatum(img->rep)).entries);
    }
    CHECK(seen == 80);
}

TEST_CASE("the sign character and the trivial character share one image") {
    for (int k = 1; k <= 3; ++k) {
        auto t0 = ljSpeh(dl(0, 0), 2 * k);
        auto t1 = ljSpeh(dl(0, 1), 2 * k);
        REQUIRE(t0);
        REQUIRE(t1);
        CHECK(t0->rep == t1->rep);
        CHECK(t0->sign == t1->sign);
    }
}

TEST_CASE("determinant-transfer consistency") {
    for (int n = 1; n <= 3; ++n) {
        for (long x : {5L, 4L}) {
            RingElem real = spehExpandEvaluated(Algebra::Real, ec(x), ec(0), n);
            RingElem quat = spehExpandEvaluated(Algebra::Quaternion, ec(x), ec(0), n);
            CHECK(ljRing(real) == quat * Int(n % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("compatibility generators") {
    CHECK(kDelta(rd(1, 0), 2) == 1);
    CHECK(kDelta(dl(0, 0), 2) == 2);
    CHECK(kDelta(CompatDatum{6, 3}, 4) == 2);
    CHECK(kDelta(CompatDatum{6, 3}, 6) == 1);
    CHECK(kDelta(CompatDatum{4, 2}, 8) == 4);

    UnitaryRep allDS(Algebra::Real, {Speh{rd(1, -1), 1}, CompSeries{rd(2, -2), 1, rat(1, 4)}});
    CHECK(kGamma(allDS, 2) == 1);
    UnitaryRep mixed(Algebra::Real, {Speh{dl(0, 0), 1}, Speh{rd(1, -1), 1}});
    CHECK(kGamma(mixed, 2) == 2);
    CHECK(kGammaFromFactors({2, 3}, 6) == 6);
    CHECK_THROWS_AS(kGammaFromFactors({4}, 6), std::invalid_argument);
    CHECK_THROWS_AS(kGamma(UnitaryRep(Algebra::Real, {Speh{rd(1, -1), 2}}), 2),
                    std::invalid_argument);

    CHECK(dCompatibleProduct({{2, true}, {4, true}}, 2));
    CHECK(!dCompatibleProduct({{3, true}}, 2));
    CHECK(!dCompatibleProduct({{2, false}}, 2));
    CHECK(dCompatibleProduct({}, 5));
}

TEST_CASE("inducing data match under the correspondence") {
    UnitaryRep real(Algebra::Real, {Speh{rd(3, 1), 2}});
    // exponent 2 base: still a legitimate ladder on the real side
    LanglandsDatum dr = inducingData(real);
    UnitaryRep quat(Algebra::Quaternion, {Speh{qd(3, 1), 2}});
    LanglandsDatum dq = inducingData(quat);
    REQUIRE(dr.size() == dq.size());
    for (size_t i = 0; i < dr.elems.size(); ++i)
        CHECK(jlOnSquareIntegrable(dr.elems[i]) == dq.elems[i]);

    // k = 1: single classes correspond directly
    CHECK(jlOnSquareIntegrable(inducingData(UnitaryRep(Algebra::Real, {Speh{rd(2, 0), 1}})).elems[0]) ==
          inducingData(UnitaryRep(Algebra::Quaternion, {Speh{qd(2, 0), 1}})).elems[0]);
}
