#include "udual/decompose.hpp"

#include <optional>
#include <stdexcept>

#include "udual/bruhat.hpp"

namespace udual {

namespace {

using Verdict = Decomposition::Verdict;

Decomposition known(Verdict v, std::string why, std::vector<LanglandsDatum> cs = {}) {
    Decomposition d;
    d.verdict = v;
    d.certificate = std::move(why);
    d.constituents = std::move(cs);
    return d;
}

Decomposition unknown() { return known(Verdict::Unknown, "outside the explicitly decided cases"); }

// the real twist s with q = nu^s p, if the two parameters lie on one nu-line
std::optional<Rational> lineShift(const Dparam& p, const Dparam& q) {
    ExactComplex d1 = q.first() - p.first();
    if (p.kind() == Dparam::Kind::RealChar) {
        if (p.eps() != q.eps() || !d1.isReal()) return std::nullopt;
        return d1.re;
    }
    ExactComplex d2 = q.second() - p.second();
    if (!(d1 == d2) || !d1.isReal()) return std::nullopt;
    return d1.re;
}

Decomposition decomposeComplex(const Dparam& p1, const Dparam& p2) {
    auto shift = lineShift(p1, p2);
    if (!shift) return unknown();
    Rational a = *shift < 0 ? Rational(-*shift) : *shift;
    if (a < 1) return known(Verdict::Irreducible, "twist gap " + render(a) + " inside [0,1)");
    if (a == 1) {
        const Dparam& low = *shift > 0 ? p1 : p2;
        ExactComplex x = low.first(), y = low.second(), one(1);
        return known(Verdict::Reducible, "unit twist gap on a nu-line",
                     {LanglandsDatum(Algebra::Complex,
                                     {Dparam::complexChar(x, y + one), Dparam::complexChar(x + one, y)})});
    }
    return unknown();
}

Decomposition decomposeRealChars(const Dparam& p1, const Dparam& p2) {
    ExactComplex gap = p1.first() - p2.first();
    if (!isRationalInteger(gap) || gap.re == 0)
        return known(Verdict::Irreducible, "exponent gap not a nonzero integer");
    Int p = gap.re.get_num();
    Int parity = p + 1 - (p1.eps() - p2.eps());
    if (parity % 2 != 0) return known(Verdict::Irreducible, "sign-character parity fails");
    return known(Verdict::Reducible, "integral gap with matching parity",
                 {LanglandsDatum(Algebra::Real, {Dparam::realDS(p1.first(), p2.first())})});
}

Decomposition decomposeRealDS(const Dparam& p1, const Dparam& p2) {
    auto shift = lineShift(p1, p2);
    if (!shift) return unknown();
    Rational a = *shift < 0 ? Rational(-*shift) : *shift;
    if (a < 1) return known(Verdict::Irreducible, "twist gap " + render(a) + " inside [0,1)");
    if (a == 1) {
        const Dparam& low = *shift > 0 ? p1 : p2;
        ExactComplex x = low.first(), y = low.second(), one(1);
        ExactComplex r = x - y;
        if (r.re == 1) {
            // the shifted partner of the discrete series hits the wall; the
            // wall symbol stands for the length-two principal-series datum
            return known(Verdict::Reducible, "unit twist gap, wall-adjacent pair",
                         {limitDatum(LimitOfDiscreteSeries{x}) +
                          LanglandsDatum(Algebra::Real, {Dparam::realDS(x + one, y)})});
        }
        return known(Verdict::Reducible, "unit twist gap on a nu-line",
                     {LanglandsDatum(Algebra::Real,
                                     {Dparam::realDS(x, y + one), Dparam::realDS(x + one, y)})});
    }
    return unknown();
}

Decomposition decomposeQuat(const Dparam& p1, const Dparam& p2) {
    auto shift = lineShift(p1, p2);
    if (shift) {
        Rational a = *shift < 0 ? Rational(-*shift) : *shift;
        const Dparam& low = *shift > 0 ? p1 : p2;
        ExactComplex x = low.first(), y = low.second();
        Rational r = (x - y).re;
        ExactComplex one(1), two(2);
        if (a == 0) return known(Verdict::Irreducible, "square of a single class");
        if (r == 1 && a == 1)
            return known(Verdict::Irreducible, "wall-adjacent unit gap (translation to the wall)");
        if (r == 1 && a == 2)
            return known(Verdict::Reducible, "one-dimensional classes at the first reducibility point",
                         {LanglandsDatum(Algebra::Quaternion,
                                         {Dparam::quatDS(x + one, x), Dparam::quatDS(x + two, y)})});
        if (r > 1 && a == 1)
            return known(Verdict::Reducible, "unit twist gap on a nu-line",
                         {LanglandsDatum(Algebra::Quaternion,
                                         {Dparam::quatDS(x, y + one), Dparam::quatDS(x + one, y)})});
    }
    // exact irreducibility from the integral-root criterion
    CartanChar c = toCartanChar(LanglandsDatum(Algebra::Quaternion, {p1, p2}));
    ReducibilityReport rep = reducibilityWitness(c);
    if (rep.verdict == ReducibilityReport::Verdict::Irreducible)
        return known(Verdict::Irreducible, "no satisfying integral complex root");
    return unknown();
}

}  // namespace

Decomposition pairDecompose(const Dparam& p1, const Dparam& p2) {
    if (p1.algebra() != p2.algebra()) throw std::invalid_argument("pair over different algebras");
    Decomposition d;
    switch (p1.algebra()) {
        case Algebra::Complex: d = decomposeComplex(p1, p2); break;
        case Algebra::Real:
            if (p1.kind() == Dparam::Kind::RealChar && p2.kind() == Dparam::Kind::RealChar)
                d = decomposeRealChars(p1, p2);
            else if (p1.kind() == Dparam::Kind::RealDS && p2.kind() == Dparam::Kind::RealDS)
                d = decomposeRealDS(p1, p2);
            else
                d = unknown();
            break;
        case Algebra::Quaternion: d = decomposeQuat(p1, p2); break;
    }
    if (d.verdict != Decomposition::Verdict::Unknown)
        d.quotient = IrrLabel{LanglandsDatum(p1.algebra(), {p1, p2})};
    return d;
}

RingElem lgExpansion(const Dparam& p1, const Dparam& p2, const Decomposition& d) {
    if (d.verdict == Decomposition::Verdict::Unknown)
        throw std::invalid_argument("no expansion for an undecided pair");
    RingElem r = lambdaMonomial(p1.algebra(), {p1, p2});
    for (const LanglandsDatum& c : d.constituents) r = r - lambdaMonomial(c);
    return r;
}

}  // namespace udual
