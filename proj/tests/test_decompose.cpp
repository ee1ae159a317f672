#include <doctest.h>

#include "random_gen.hpp"
#include "udual/charform.hpp"
#include "udual/decompose.hpp"

using namespace udual;

namespace {
ExactComplex ec(long re) { return ExactComplex(rat(re)); }
Dparam g(long x, long y) { return Dparam::complexChar(ec(x), ec(y)); }
Dparam dl(long a, int eps) { return Dparam::realChar(ec(a), eps); }
Dparam rd(long x, long y) { return Dparam::realDS(ec(x), ec(y)); }
Dparam qd(long x, long y) { return Dparam::quatDS(ec(x), ec(y)); }
using V = Decomposition::Verdict;
}  // namespace

TEST_CASE("complex pairs") {
    Decomposition d = pairDecompose(g(0, 0), g(1, 1));
    REQUIRE(d.verdict == V::Reducible);
    REQUIRE(d.constituents.size() == 1);
    CHECK(d.constituents[0] == LanglandsDatum(Algebra::Complex, {g(0, 1), g(1, 0)}));
    REQUIRE(d.quotient);
    CHECK(*d.quotient == IrrLabel{LanglandsDatum(Algebra::Complex, {g(0, 0), g(1, 1)})});
    CHECK(!pairDecompose(g(0, 0), g(2, 2)).quotient);

    CHECK(pairDecompose(g(0, 0), g(0, 0)).verdict == V::Irreducible);
    CHECK(pairDecompose(g(0, 0),
                        Dparam::complexChar(ExactComplex(rat(1, 2)), ExactComplex(rat(1, 2))))
              .verdict == V::Irreducible);
    CHECK(pairDecompose(g(0, 0), g(2, 2)).verdict == V::Unknown);
    CHECK(pairDecompose(g(0, 0), g(1, 0)).verdict == V::Unknown);
}

TEST_CASE("real rank-1 pairs") {
    Decomposition d = pairDecompose(dl(0, 0), dl(1, 0));
    REQUIRE(d.verdict == V::Reducible);
    CHECK(d.constituents[0] == LanglandsDatum(Algebra::Real, {rd(1, 0)}));

    // parity failure: gap 1, equal signs required gap+1 odd
    CHECK(pairDecompose(dl(0, 0), dl(1, 1)).verdict == V::Irreducible);
    CHECK(pairDecompose(dl(0, 0), dl(0, 1)).verdict == V::Irreducible);
    CHECK(pairDecompose(dl(0, 0), Dparam::realChar(ExactComplex(rat(1, 2)), 0)).verdict ==
          V::Irreducible);
    // gap 2 with opposite signs is reducible
    CHECK(pairDecompose(dl(0, 0), dl(2, 1)).verdict == V::Reducible);
}

TEST_CASE("real discrete-series pairs") {
    Decomposition d = pairDecompose(rd(1, 0), rd(2, 1));
    REQUIRE(d.verdict == V::Reducible);
    CHECK(d.constituents[0] ==
          LanglandsDatum(Algebra::Real, {dl(1, 0), dl(1, 1), rd(2, 0)}));

    Decomposition d2 = pairDecompose(rd(3, 1), rd(4, 2));
    REQUIRE(d2.verdict == V::Reducible);
    CHECK(d2.constituents[0] == LanglandsDatum(Algebra::Real, {rd(3, 2), rd(4, 1)}));

    CHECK(pairDecompose(rd(3, 1), rd(3, 1)).verdict == V::Irreducible);
    CHECK(pairDecompose(rd(3, 1), rd(5, 3)).verdict == V::Unknown);
    CHECK(pairDecompose(rd(3, 1), rd(4, 1)).verdict == V::Unknown);
    CHECK(pairDecompose(dl(0, 0), rd(2, 1)).verdict == V::Unknown);
}

TEST_CASE("quaternionic pairs: the reducibility table") {
    // non-integral twist gap
    CHECK(pairDecompose(qd(2, 0), Dparam::quatDS(ExactComplex(rat(5, 2)), ExactComplex(rat(1, 2))))
              .verdict == V::Irreducible);
    // wall-adjacent unit gap
    CHECK(pairDecompose(qd(1, 0), qd(2, 1)).verdict == V::Irreducible);
    // unit gap away from the wall
    Decomposition d = pairDecompose(qd(3, 1), qd(4, 2));
    REQUIRE(d.verdict == V::Reducible);
    CHECK(d.constituents[0] == LanglandsDatum(Algebra::Quaternion, {qd(3, 2), qd(4, 1)}));
    // one-dimensional classes reduce first at twist gap two
    Decomposition d2 = pairDecompose(qd(1, 0), qd(3, 2));
    REQUIRE(d2.verdict == V::Reducible);
    CHECK(d2.constituents[0] == LanglandsDatum(Algebra::Quaternion, {qd(2, 1), qd(3, 0)}));
    // squares are irreducible
    CHECK(pairDecompose(qd(2, 0), qd(2, 0)).verdict == V::Irreducible);
    // off the table but provably reducible by the root criterion: undecided
    CHECK(pairDecompose(qd(3, 0), qd(5, 2)).verdict == V::Unknown);
}

TEST_CASE("reducible outputs share the support of the pair") {
    std::vector<std::pair<Dparam, Dparam>> cases = {
        {g(0, 0), g(1, 1)},   {dl(0, 0), dl(1, 0)}, {rd(1, 0), rd(2, 1)},
        {rd(3, 1), rd(4, 2)}, {qd(3, 1), qd(4, 2)}, {qd(1, 0), qd(3, 2)},
    };
    for (const auto& [p1, p2] : cases) {
        Decomposition d = pairDecompose(p1, p2);
        REQUIRE(d.verdict == V::Reducible);
        SupportMultiset s = supportOf(LanglandsDatum(p1.algebra(), {p1, p2}));
        for (const LanglandsDatum& c : d.constituents) CHECK(supportOf(c) == s);
        // the mixed-form identity determines the Lg expansion
        RingElem lg = lgExpansion(p1, p2, d);
        RingElem total = lg;
        for (const LanglandsDatum& c : d.constituents) total = total + lambdaMonomial(c);
        CHECK(total == lambdaMonomial(p1.algebra(), {p1, p2}));
    }
}

TEST_CASE("algebra mismatch is rejected") {
    CHECK_THROWS_AS(pairDecompose(g(0, 0), dl(0, 0)), std::invalid_argument);
}

TEST_CASE("the complex unit-gap series matches the two-by-two determinant") {
    // u(gamma(x,y),2) = lambda(pair) - lambda(cross) with the same cross
    // datum that pairDecompose reports
    testing::Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        ExactComplex x = rng.smallComplex(), y = x - ExactComplex(rat(rng.intIn(-3, 3)));
        RingElem u = spehExpandEvaluated(Algebra::Complex, x, y, 2);
        Dparam lo = Dparam::complexChar(x - ExactComplex(rat(1, 2)), y - ExactComplex(rat(1, 2)));
        Dparam hi = Dparam::complexChar(x + ExactComplex(rat(1, 2)), y + ExactComplex(rat(1, 2)));
        Decomposition d = pairDecompose(lo, hi);
        REQUIRE(d.verdict == V::Reducible);
        CHECK(u == lgExpansion(lo, hi, d));
    }
}
