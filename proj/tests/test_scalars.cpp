#include <doctest.h>

#include "random_gen.hpp"
#include "udual/dparam.hpp"

using namespace udual;

namespace {
ExactComplex ec(long re, long im = 0) { return ExactComplex(rat(re), rat(im)); }
ExactComplex ech(long num, long den) { return ExactComplex(rat(num, den)); }
}  // namespace

TEST_CASE("rational and complex basics") {
    CHECK(parseRational("3/2") == rat(3, 2));
    CHECK(parseRational("-4/6") == rat(-2, 3));
    CHECK(render(rat(-7, 2)) == "-7/2");
    CHECK_THROWS_AS(parseRational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational("a"), std::invalid_argument);
    CHECK(render(ExactComplex(rat(1, 2), rat(-1, 3))) == "1/2-1/3i");
    CHECK(isRationalInteger(ec(3) - ec(1)));
    CHECK(!isRationalInteger(ExactComplex(rat(1, 2))));
    CHECK(!isRationalInteger(ExactComplex(rat(1), rat(1))));
}

TEST_CASE("parameter constructors enforce integrality and the wall exclusion") {
    CHECK_THROWS_AS(Dparam::complexChar(ech(1, 2), ec(0)), std::invalid_argument);
    CHECK_THROWS_AS(Dparam::realDS(ec(1), ec(1)), std::invalid_argument);
    CHECK_THROWS_AS(Dparam::quatDS(ec(2), ec(2)), std::invalid_argument);
    CHECK_THROWS_AS(Dparam::quatDS(ech(3, 2), ec(0)), std::invalid_argument);
    CHECK_THROWS_AS(Dparam::realChar(ec(0), 2), std::invalid_argument);
    // unordered-pair equality
    CHECK(Dparam::quatDS(ec(1), ec(0)) == Dparam::quatDS(ec(0), ec(1)));
    CHECK(Dparam::realDS(ec(3), ec(1)) == Dparam::realDS(ec(1), ec(3)));
}

TEST_CASE("twist") {
    CHECK(twist(Dparam::complexChar(ec(0), ec(0)), ec(1)) == Dparam::complexChar(ec(1), ec(1)));
    CHECK(twist(Dparam::quatDS(ec(1), ec(0)), ec(0)) == Dparam::quatDS(ec(1), ec(0)));
    CHECK(twist(Dparam::realChar(ec(0), 1), ech(1, 2)) == Dparam::realChar(ech(1, 2), 1));
}

TEST_CASE("exponent") {
    CHECK(exponent(Dparam::complexChar(ec(2), ec(1))) == rat(3, 2));
    CHECK(exponent(Dparam::quatDS(ec(1), ec(0))) == rat(1, 2));
    CHECK(exponent(twist(Dparam::realDS(ec(3), ec(1)), ec(-2))) == 0);
}

TEST_CASE("unitaryPart") {
    auto [u1, e1] = unitaryPart(Dparam::complexChar(ec(1), ec(0)));
    CHECK(u1 == Dparam::complexChar(ech(1, 2), ech(-1, 2)));
    CHECK(e1 == rat(1, 2));
    auto [u2, e2] = unitaryPart(Dparam::quatDS(ec(1), ec(0)));
    CHECK(u2 == Dparam::quatDS(ech(1, 2), ech(-1, 2)));
    CHECK(e2 == rat(1, 2));
    auto [u3, e3] = unitaryPart(Dparam::realChar(ec(0), 1));
    CHECK(u3 == Dparam::realChar(ec(0), 1));
    CHECK(e3 == 0);
}

TEST_CASE("nuDelta") {
    CHECK(nuDelta(Dparam::complexChar(ec(3), ec(1))) == 1);
    CHECK(nuDelta(Dparam::quatDS(ec(1), ec(0))) == 2);
    CHECK(nuDelta(Dparam::quatDS(ec(5), ec(2))) == 1);
    CHECK(nuDelta(Dparam::realDS(ec(1), ec(0))) == 1);
    CHECK(nuDelta(Dparam::realChar(ec(0), 0)) == 1);
}

TEST_CASE("supportOfD and degreeOfD") {
    SupportMultiset s = supportOfD(Dparam::quatDS(ec(3), ec(1)));
    CHECK(s.entries == std::vector<ExactComplex>{ec(3), ec(1)});
    CHECK(supportOfD(Dparam::realChar(ec(0), 0)).entries == std::vector<ExactComplex>{ec(0)});
    SupportMultiset c = supportOfD(Dparam::complexChar(ec(1), ec(-1)));
    CHECK(c.entries == std::vector<ExactComplex>{ec(1)});
    CHECK(c.secondEntries == std::vector<ExactComplex>{ec(-1)});

    CHECK(degreeOfD(Dparam::realDS(ec(2), ec(0))) == 2);
    CHECK(degreeOfD(Dparam::quatDS(ec(2), ec(0))) == 1);
    CHECK(degreeOfD(Dparam::complexChar(ec(0), ec(0))) == 1);
}

TEST_CASE("square-integrable correspondence") {
    CHECK(jlOnSquareIntegrable(Dparam::realDS(ec(3), ec(1))) == Dparam::quatDS(ec(3), ec(1)));
    CHECK(jlOnSquareIntegrable(Dparam::realDS(ec(1), ec(0))) == Dparam::quatDS(ec(1), ec(0)));
    CHECK_THROWS_AS(jlOnSquareIntegrable(Dparam::realChar(ec(0), 0)), std::invalid_argument);
    CHECK_THROWS_AS(jlOnSquareIntegrable(Dparam::complexChar(ec(0), ec(0))), std::invalid_argument);
}

TEST_CASE("twist/exponent/unitaryPart properties on random parameters") {
    testing::Rng rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        Dparam p = rng.dparam(rng.algebra());
        Rational s = rng.smallRational(), t = rng.smallRational();
        CHECK(twist(p, ExactComplex(s + t)) == twist(twist(p, ExactComplex(s)), ExactComplex(t)));
        CHECK(exponent(twist(p, ExactComplex(s))) == exponent(p) + s);
        auto [u, e] = unitaryPart(p);
        CHECK(exponent(u) == 0);
        CHECK(twist(u, ExactComplex(e)) == p);
        if (p.kind() == Dparam::Kind::RealDS) {
            // the correspondence commutes with twists and preserves
            // support and exponent
            CHECK(jlOnSquareIntegrable(twist(p, ExactComplex(s))) ==
                  twist(jlOnSquareIntegrable(p), ExactComplex(s)));
            CHECK(supportOfD(jlOnSquareIntegrable(p)).entries == supportOfD(p).entries);
            CHECK(exponent(jlOnSquareIntegrable(p)) == exponent(p));
        }
    }
}
