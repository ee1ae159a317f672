#include <doctest.h>

#include "oracles.hpp"
#include "random_gen.hpp"
#include "udual/charform.hpp"

using namespace udual;

namespace {
ExactComplex ec(long re) { return ExactComplex(rat(re)); }
ExactComplex ech(long num, long den) { return ExactComplex(rat(num, den)); }
Dparam gh(long xn, long xd, long yn, long yd) {
    return Dparam::complexChar(ech(xn, xd), ech(yn, yd));
}
}  // namespace

TEST_CASE("matrix entries") {
    SpehMatrix m = buildSpehMatrix(Algebra::Complex, ec(0), ec(0), 2);
    CHECK(entryAt(m, 1, 1) == CoherentVar{ech(1, 2), ech(1, 2)});
    CHECK(entryAt(m, 1, 2) == CoherentVar{ech(1, 2), ech(-1, 2)});
    CHECK(entryAt(m, 2, 1) == CoherentVar{ech(-1, 2), ech(1, 2)});
    CHECK(entryAt(m, 2, 2) == CoherentVar{ech(-1, 2), ech(-1, 2)});

    SpehMatrix one = buildSpehMatrix(Algebra::Real, ec(4), ec(1), 1);
    CHECK(entryAt(one, 1, 1) == CoherentVar{ec(4), ec(1)});

    CHECK_THROWS_AS(buildSpehMatrix(Algebra::Real, ech(1, 2), ec(0), 2), std::invalid_argument);
    CHECK_THROWS_AS(buildSpehMatrix(Algebra::Quaternion, ec(0), ec(1), 2), std::invalid_argument);

    // entry difference law: (x - y) + (j - i)
    testing::Rng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.intIn(1, 5);
        ExactComplex x = rng.smallComplex(false);
        ExactComplex y = x - ExactComplex(rat(rng.intIn(0, 4)));
        SpehMatrix mm = buildSpehMatrix(Algebra::Real, x, y, n);
        int i = rng.intIn(1, n), j = rng.intIn(1, n);
        CoherentVar v = entryAt(mm, i, j);
        CHECK(v.x - v.y == (x - y) + ExactComplex(rat(j - i)));
    }
}

TEST_CASE("two-by-two complex expansion") {
    RingElem det = detEvaluated(buildSpehMatrix(Algebra::Complex, ec(0), ec(0), 2));
    RingElem expected =
        lambdaMonomial(Algebra::Complex, {gh(1, 2, 1, 2), gh(-1, 2, -1, 2)}) -
        lambdaMonomial(Algebra::Complex, {gh(1, 2, -1, 2), gh(-1, 2, 1, 2)});
    CHECK(det == expected);
}

TEST_CASE("one-by-one determinants are the single entry") {
    CHECK(spehExpandEvaluated(Algebra::Complex, ec(3), ec(1), 1) ==
          lambdaMonomial(Algebra::Complex, {Dparam::complexChar(ec(3), ec(1))}));
    CHECK(spehExpandEvaluated(Algebra::Real, ec(3), ec(1), 1) ==
          lambdaMonomial(Algebra::Real, {Dparam::realDS(ec(3), ec(1))}));
}

TEST_CASE("determinants against the cofactor oracle") {
    testing::Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.intIn(1, 4);
        ExactComplex x = rng.smallComplex(false);
        ExactComplex y = x - ExactComplex(rat(rng.intIn(0, 3)));
        SpehMatrix m = buildSpehMatrix(Algebra::Complex, x, y, n);
        CHECK(detFormal(m) == testing::oracleDetFormal(m));
        CHECK(detEvaluated(m) == testing::oracleDetEvaluated(m));
        // real grids with every entry at or above the wall
        ExactComplex xr = x + ExactComplex(rat(n));
        SpehMatrix mr = buildSpehMatrix(Algebra::Real, xr, y, n);
        CHECK(detEvaluated(mr) == testing::oracleDetEvaluated(mr));
    }
}

TEST_CASE("wall entries resolve over R and kill over H") {
    // difference 1 at size 2 puts one entry exactly on the wall
    RingElem detR = detEvaluated(buildSpehMatrix(Algebra::Real, ec(1), ec(0), 2));
    RingElem expectedR =
        lambdaMonomial(Algebra::Real, {Dparam::realDS(ech(3, 2), ech(1, 2)),
                                       Dparam::realDS(ech(1, 2), ech(-1, 2))}) -
        lambdaMonomial(Algebra::Real, {Dparam::realDS(ech(3, 2), ech(-1, 2)),
                                       Dparam::realChar(ech(1, 2), 0), Dparam::realChar(ech(1, 2), 1)});
    CHECK(detR == expectedR);

    RingElem detH = detEvaluated(buildSpehMatrix(Algebra::Quaternion, ec(1), ec(0), 2));
    CHECK(detH == lambdaMonomial(Algebra::Quaternion, {Dparam::quatDS(ech(3, 2), ech(1, 2)),
                                                       Dparam::quatDS(ech(1, 2), ech(-1, 2))}));
}

TEST_CASE("below-wall entries abort evaluation") {
    CHECK_THROWS_AS(detEvaluated(buildSpehMatrix(Algebra::Quaternion, ec(1), ec(0), 3)),
                    WallCrossingError);
    CHECK_THROWS_AS(spehExpandEvaluated(Algebra::Real, ec(1), ec(0), 4), WallCrossingError);
    CHECK_NOTHROW(spehExpandEvaluated(Algebra::Real, ec(5), ec(0), 3));
    // formal mode carries the same grid without complaint
    CHECK_NOTHROW(spehExpandFormal(Algebra::Quaternion, ec(1), ec(0), 3));
}

TEST_CASE("the diagonal monomial carries coefficient one") {
    testing::Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.intIn(1, 4);
        Algebra alg = trial % 2 ? Algebra::Real : Algebra::Quaternion;
        ExactComplex y = rng.smallComplex(false);
        ExactComplex x = y + ExactComplex(rat(n + rng.intIn(0, 2)));
        RingElem u = spehExpandEvaluated(alg, x, y, n);
        std::vector<Dparam> diag;
        for (int i = 1; i <= n; ++i) {
            CoherentVar v = entryAt(buildSpehMatrix(alg, x, y, n), i, i);
            diag.push_back(alg == Algebra::Real ? Dparam::realDS(v.x, v.y)
                                                : Dparam::quatDS(v.x, v.y));
        }
        CHECK(u.coeff(LanglandsDatum(alg, diag)) == 1);
    }
}

TEST_CASE("condensation identities, evaluated") {
    // complex case across a parameter grid
    for (long twoBeta : {0L, 1L}) {
        for (long r = -2; r <= 2; ++r) {
            ExactComplex x = ExactComplex(rat(twoBeta, 2)) + ExactComplex(rat(r, 2));
            ExactComplex y = ExactComplex(rat(twoBeta, 2)) - ExactComplex(rat(r, 2));
            for (int n : {2, 3}) {
                IdentityReport rep = lewisCarrollCheck("14.3", x, y, n, EvalMode::Evaluated);
                CHECK(rep.holds);
            }
        }
    }
    CHECK(lewisCarrollCheck("14.5", ec(5), ec(0), 3, EvalMode::Evaluated).holds);
    CHECK(lewisCarrollCheck("14.7", ec(5), ec(0), 3, EvalMode::Evaluated).holds);
}

TEST_CASE("condensation identities, formal") {
    CHECK(lewisCarrollCheck("14.5", ec(1), ec(0), 3, EvalMode::Formal).holds);
    CHECK(lewisCarrollCheck("14.6", ec(1), ec(0), 3, EvalMode::Formal).holds);
    CHECK(lewisCarrollCheck("14.7", ec(2), ec(0), 2, EvalMode::Formal).holds);
    CHECK(lewisCarrollCheck("14.9", ec(1), ec(0), 2, EvalMode::Formal).holds);
    CHECK(lewisCarrollCheck("14.10", ec(1), ec(0), 2, EvalMode::Formal).holds);
    CHECK_THROWS_AS(lewisCarrollCheck("14.6", ec(1), ec(0), 3, EvalMode::Evaluated),
                    WallCrossingError);
    CHECK_THROWS_AS(lewisCarrollCheck("14.10", ec(1), ec(0), 2, EvalMode::Evaluated),
                    WallCrossingError);
    CHECK_THROWS_AS(lewisCarrollCheck("14.6", ec(2), ec(0), 3, EvalMode::Formal),
                    std::invalid_argument);
    CHECK_THROWS_AS(lewisCarrollCheck("9.9", ec(1), ec(0), 2, EvalMode::Formal),
                    std::invalid_argument);
}

TEST_CASE("condensation as a pure grid identity on random parameters") {
    testing::Rng rng(61);
    for (int trial = 0; trial < 12; ++trial) {
        int n = rng.intIn(2, 4);
        ExactComplex x = rng.smallComplex();
        ExactComplex y = x - ExactComplex(rat(rng.intIn(0, 4)));
        CHECK(lewisCarrollCheck("14.3", x, y, n, EvalMode::Formal).holds);
    }
    for (int trial = 0; trial < 8; ++trial) {
        int n = rng.intIn(2, 4);
        ExactComplex x = rng.smallComplex(false);
        // the stretched corner grid needs a dominant difference
        ExactComplex y = x - ExactComplex(rat(rng.intIn(1, 4)));
        CHECK(lewisCarrollCheck("14.5", x, y, n, EvalMode::Formal).holds);
        CHECK(lewisCarrollCheck("14.7", x, y, n, EvalMode::Formal).holds);
    }
}

TEST_CASE("primality probe") {
    PrimalityReport p2 = primalityProbe(Algebra::Complex, ec(0), ec(0), 2);
    CHECK(!p2.factorizationFound);
    CHECK(p2.partitionsChecked > 0);
    PrimalityReport p3 = primalityProbe(Algebra::Complex, ec(0), ec(0), 3);
    CHECK(!p3.factorizationFound);
    PrimalityReport p1 = primalityProbe(Algebra::Complex, ec(0), ec(0), 1);
    CHECK(!p1.factorizationFound);
    PrimalityReport q2 = primalityProbe(Algebra::Quaternion, ec(5), ec(0), 2);
    CHECK(!q2.factorizationFound);

    CHECK_THROWS_AS(primalityProbe(Algebra::Complex, ec(0), ec(0), 4), std::invalid_argument);
    // difference n-1 collides the two support halves over R/H
    CHECK_THROWS_AS(primalityProbe(Algebra::Real, ec(1), ec(0), 2), std::invalid_argument);
}

TEST_CASE("the probe does find genuine factorizations") {
    Dparam a = Dparam::quatDS(ec(9), ec(8));
    RingElem left = lambdaMonomial(Algebra::Quaternion, {a});
    // two data over one support keep the product multilinear and composite
    RingElem right =
        lambdaMonomial(Algebra::Quaternion, {Dparam::quatDS(ec(3), ec(2)), Dparam::quatDS(ec(1), ec(0))}) +
        lambdaMonomial(Algebra::Quaternion, {Dparam::quatDS(ec(3), ec(1)), Dparam::quatDS(ec(2), ec(0))}) *
            Int(2);
    PrimalityReport rep = primalityProbeOn(left * right);
    CHECK(rep.factorizationFound);

    // mixed supports are outside the probe's scope
    RingElem mixedSupport =
        left * lambdaMonomial(Algebra::Quaternion, {Dparam::quatDS(ec(3), ec(0))}) +
        left * lambdaMonomial(Algebra::Quaternion, {Dparam::quatDS(ec(3), ec(1))});
    CHECK_THROWS_AS(primalityProbeOn(mixedSupport), std::invalid_argument);
}
