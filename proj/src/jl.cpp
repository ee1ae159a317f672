#include "udual/jl.hpp"

#include <numeric>
#include <stdexcept>

namespace udual {

RingElem ljOnD(const Dparam& p) {
    if (p.algebra() != Algebra::Real)
        throw std::invalid_argument("the transfer starts from the real group");
    RingElem out(Algebra::Quaternion);
    if (p.kind() == Dparam::Kind::RealChar) return out;
    out.addTerm(LanglandsDatum(Algebra::Quaternion, {jlOnSquareIntegrable(p)}), -1);
    return out;
}

RingElem ljRing(const RingElem& r) {
    if (r.algebra() != Algebra::Real)
        throw std::invalid_argument("the transfer starts from the real group");
    RingElem out(Algebra::Quaternion);
    for (const auto& [a, c] : r.coords()) {
        RingElem img = RingElem::one(Algebra::Quaternion);
        for (const Dparam& p : a.elems) {
            img = img * ljOnD(p);
            if (img.isZero()) break;
        }
        out = out + img * c;
    }
    return out;
}

namespace {

// re-twist every factor of a rep by nu^e
UnitaryRep twistRep(const UnitaryRep& r, const Rational& e) {
    if (e == 0) return r;
    std::vector<UnitaryFactor> fs;
    for (const UnitaryFactor& f : r.factors) {
        if (std::holds_alternative<Speh>(f)) {
            const Speh& u = std::get<Speh>(f);
            fs.push_back(Speh{twist(u.base, ExactComplex(e)), u.len});
        } else {
            const CompSeries& p = std::get<CompSeries>(f);
            fs.push_back(CompSeries{twist(p.base, ExactComplex(e)), p.len, p.alpha});
        }
    }
    return UnitaryRep(r.alg, std::move(fs));
}

Dparam quatCharBase(const ExactComplex& alpha) {
    return Dparam::quatDS(alpha + ExactComplex(rat(1, 2)), alpha - ExactComplex(rat(1, 2)));
}

}  // namespace

std::optional<SignedUnitary> ljSpeh(const Dparam& base, int len) {
    if (base.algebra() != Algebra::Real)
        throw std::invalid_argument("the transfer starts from the real group");
    if (len < 1) throw std::invalid_argument("length must be positive");
    auto [anchor, e] = unitaryPart(base);
    if (anchor.kind() == Dparam::Kind::RealChar) {
        if (len % 2 != 0) return std::nullopt;
        SignedUnitary out;
        out.sign = 1;
        out.rep = twistRep(
            UnitaryRep(Algebra::Quaternion, {Speh{quatCharBase(anchor.first()), len / 2}}), e);
        return out;
    }
    // rank-2 discrete series: the image is the wall quotient at the same
    // length, expanded into the unitary basis
    SignedUnitary out;
    out.sign = len % 2 == 0 ? 1 : -1;
    ExactComplex d = anchor.first() - anchor.second();
    if (d.re == 1) {
        ExactComplex x = anchor.first();
        out.rep = twistRep(ubarExpand(x, len), e);
    } else {
        Dparam img = jlOnSquareIntegrable(anchor);
        out.rep = twistRep(UnitaryRep(Algebra::Quaternion, {Speh{img, len}}), e);
    }
    return out;
}

std::optional<SignedUnitary> ljAbsUnitary(const UnitaryRep& rep) {
    if (rep.alg != Algebra::Real)
        throw std::invalid_argument("the transfer starts from the real group");
    // twisted factors are fine (the transfer commutes with twists); only the
    // complementary-series range is structural
    for (const UnitaryFactor& f : rep.factors)
        if (std::holds_alternative<CompSeries>(f)) {
            const Rational& a = std::get<CompSeries>(f).alpha;
            if (!(a > 0 && 2 * a < 1))
                throw std::invalid_argument("complementary-series parameter outside (0, 1/2)");
        }
    if (degreeOf(rep) % 2 != 0)
        throw std::invalid_argument("transfer needs even total degree, got " +
                                    std::to_string(degreeOf(rep)));
    SignedUnitary out;
    out.sign = 1;
    out.rep = UnitaryRep(Algebra::Quaternion, {});
    for (const UnitaryFactor& f : rep.factors) {
        if (std::holds_alternative<Speh>(f)) {
            const Speh& u = std::get<Speh>(f);
            auto img = ljSpeh(u.base, u.len);
            if (!img) return std::nullopt;
            out.sign *= img->sign;
            out.rep = out.rep * img->rep;
            continue;
        }
        const CompSeries& p = std::get<CompSeries>(f);
        if (p.base.kind() == Dparam::Kind::RealChar) {
            if (p.len % 2 != 0) return std::nullopt;
            // same nu-units parameter; the quaternionic character line has a
            // doubled step, so the internal value halves
            out.rep = out.rep * UnitaryRep(Algebra::Quaternion,
                                           {CompSeries{quatCharBase(p.base.first()), p.len / 2,
                                                       p.alpha / 2}});
            continue;
        }
        ExactComplex d = p.base.first() - p.base.second();
        if (d.re != 1) {
            out.rep = out.rep *
                      UnitaryRep(Algebra::Quaternion,
                                 {CompSeries{jlOnSquareIntegrable(p.base), p.len, p.alpha}});
            continue;
        }
        // wall-adjacent base: the two twisted wall quotients regroup into
        // complementary-series factors on the doubled-step line
        Dparam img = jlOnSquareIntegrable(p.base);
        Rational aNu = p.alpha;  // nu units on the real side
        if (p.len % 2 == 0) {
            int half = p.len / 2;
            out.rep = out.rep * UnitaryRep(Algebra::Quaternion,
                                           {CompSeries{img, half, (aNu + rat(1, 2)) / 2},
                                            CompSeries{img, half, (rat(1, 2) - aNu) / 2}});
        } else if (p.len == 1) {
            out.rep = out.rep * UnitaryRep(Algebra::Quaternion, {CompSeries{img, 1, aNu / 2}});
        } else {
            out.rep = out.rep * UnitaryRep(Algebra::Quaternion,
                                           {CompSeries{img, p.len / 2 + 1, aNu / 2},
                                            CompSeries{img, p.len / 2, aNu / 2}});
        }
    }
    return out;
}

int epsilonSign(const UnitaryRep& rep) {
    auto img = ljAbsUnitary(rep);
    if (!img) throw std::domain_error("the transfer of this representation vanishes; no sign");
    return img->sign;
}

bool dCompatibleProduct(const std::vector<std::pair<int, bool>>& factors, int d) {
    for (const auto& [n, compatible] : factors)
        if (n % d != 0 || !compatible) return false;
    return true;
}

int kDelta(const CompatDatum& delta, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (delta.cuspLength < 1 || delta.degree % delta.cuspLength != 0)
        throw std::invalid_argument("support length must divide the degree");
    if (delta.degree % d == 0) return 1;
    int step = delta.degree / delta.cuspLength;
    return d / std::gcd(d, step);
}

int kDelta(const Dparam& delta, int d) {
    SupportMultiset s = supportOfD(delta);
    int len = static_cast<int>(std::max(s.entries.size(), s.secondEntries.size()));
    return kDelta(CompatDatum{degreeOfD(delta), len}, d);
}

int kGamma(const UnitaryRep& gamma, int d) {
    if (!isGenericUnitary(gamma)) throw std::invalid_argument("kGamma needs a generic representation");
    std::vector<int> ks;
    for (const UnitaryFactor& f : gamma.factors) {
        const Dparam& b = std::holds_alternative<Speh>(f) ? std::get<Speh>(f).base
                                                          : std::get<CompSeries>(f).base;
        ks.push_back(kDelta(b, d));
    }
    return kGammaFromFactors(ks, d);
}

int kGammaFromFactors(const std::vector<int>& factorKs, int d) {
    int k = 1;
    for (int f : factorKs) {
        if (f < 1 || d % f != 0)
            throw std::invalid_argument("factor generator " + std::to_string(f) + " does not divide d = " +
                                        std::to_string(d));
        k = std::lcm(k, f);
    }
    return k;
}

LanglandsDatum inducingData(const UnitaryRep& rep) { return toDatum(rep); }

}  // namespace udual
