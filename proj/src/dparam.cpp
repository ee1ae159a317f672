#include "udual/dparam.hpp"

#include <algorithm>
#include <stdexcept>

namespace udual {

std::string algebraName(Algebra a) {
    switch (a) {
        case Algebra::Real: return "R";
        case Algebra::Complex: return "C";
        case Algebra::Quaternion: return "H";
    }
    return "?";
}

Dparam::Dparam(Kind k, ExactComplex a, ExactComplex b, int eps)
    : kind_(k), first_(std::move(a)), second_(std::move(b)), eps_(eps) {}

Dparam Dparam::complexChar(ExactComplex x, ExactComplex y) {
    if (!isRationalInteger(x - y))
        throw std::invalid_argument("gamma(" + udual::render(x) + "," + udual::render(y) +
                                    "): x - y must be a rational integer");
    return Dparam(Kind::ComplexChar, std::move(x), std::move(y), 0);
}

Dparam Dparam::realChar(ExactComplex a, int eps) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("delta(a,eps): eps must be 0 or 1");
    return Dparam(Kind::RealChar, std::move(a), ExactComplex(), eps);
}

static void checkPair(const char* name, const ExactComplex& x, const ExactComplex& y, bool wallAllowed) {
    ExactComplex d = x - y;
    if (!isRationalInteger(d))
        throw std::invalid_argument(std::string(name) + "(" + render(x) + "," + render(y) +
                                    "): x - y must be a rational integer");
    if (!wallAllowed && d.re == 0)
        throw std::invalid_argument(std::string(name) + "(" + render(x) + "," + render(y) +
                                    "): the wall point x = y is excluded (that parameter is the zero"
                                    " class of the Grothendieck group, not a representation)");
}

Dparam Dparam::realDS(ExactComplex x, ExactComplex y) {
    checkPair("eta", x, y, false);
    if (lexLess(x, y)) std::swap(x, y);
    return Dparam(Kind::RealDS, std::move(x), std::move(y), 0);
}

Dparam Dparam::quatDS(ExactComplex x, ExactComplex y) {
    checkPair("etaH", x, y, false);
    if (lexLess(x, y)) std::swap(x, y);
    return Dparam(Kind::QuatDS, std::move(x), std::move(y), 0);
}

Algebra Dparam::algebra() const {
    switch (kind_) {
        case Kind::ComplexChar: return Algebra::Complex;
        case Kind::RealChar:
        case Kind::RealDS: return Algebra::Real;
        case Kind::QuatDS: return Algebra::Quaternion;
    }
    return Algebra::Real;
}

bool Dparam::operator==(const Dparam& o) const {
    return kind_ == o.kind_ && eps_ == o.eps_ && first_ == o.first_ && second_ == o.second_;
}

int cmp(const Dparam& a, const Dparam& b) {
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    if (int c = cmp(a.first(), b.first()); c != 0) return c;
    if (int c = cmp(a.second(), b.second()); c != 0) return c;
    if (a.eps() != b.eps()) return a.eps() < b.eps() ? -1 : 1;
    return 0;
}

bool Dparam::operator<(const Dparam& o) const { return cmp(*this, o) < 0; }

void sortDesc(std::vector<ExactComplex>& v) {
    std::sort(v.begin(), v.end(), [](const ExactComplex& a, const ExactComplex& b) { return cmp(a, b) > 0; });
}

bool SupportMultiset::operator==(const SupportMultiset& o) const {
    return alg == o.alg && entries == o.entries && secondEntries == o.secondEntries;
}

SupportMultiset& SupportMultiset::add(const SupportMultiset& o) {
    if (alg != o.alg) throw std::invalid_argument("support sum across algebras");
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    secondEntries.insert(secondEntries.end(), o.secondEntries.begin(), o.secondEntries.end());
    sortDesc(entries);
    sortDesc(secondEntries);
    return *this;
}

Dparam twist(const Dparam& p, const ExactComplex& s) {
    switch (p.kind()) {
        case Dparam::Kind::ComplexChar: return Dparam::complexChar(p.first() + s, p.second() + s);
        case Dparam::Kind::RealChar: return Dparam::realChar(p.first() + s, p.eps());
        case Dparam::Kind::RealDS: return Dparam::realDS(p.first() + s, p.second() + s);
        case Dparam::Kind::QuatDS: return Dparam::quatDS(p.first() + s, p.second() + s);
    }
    throw std::logic_error("unreachable");
}

Rational exponent(const Dparam& p) {
    if (p.kind() == Dparam::Kind::RealChar) return p.first().re;
    return (p.first().re + p.second().re) / 2;
}

std::pair<Dparam, Rational> unitaryPart(const Dparam& p) {
    Rational e = exponent(p);
    return {twist(p, ExactComplex(Rational(-e))), e};
}

Rational nuDelta(const Dparam& p) {
    if (p.kind() == Dparam::Kind::QuatDS) {
        ExactComplex d = p.first() - p.second();
        if (d.re == 1 || d.re == -1) return rat(2);
    }
    return rat(1);
}

SupportMultiset supportOfD(const Dparam& p) {
    SupportMultiset s;
    s.alg = p.algebra();
    switch (p.kind()) {
        case Dparam::Kind::ComplexChar:
            s.entries = {p.first()};
            s.secondEntries = {p.second()};
            break;
        case Dparam::Kind::RealChar: s.entries = {p.first()}; break;
        case Dparam::Kind::RealDS:
        case Dparam::Kind::QuatDS:
            s.entries = {p.first(), p.second()};
            sortDesc(s.entries);
            break;
    }
    return s;
}

int degreeOfD(const Dparam& p) { return p.kind() == Dparam::Kind::RealDS ? 2 : 1; }

Dparam jlOnSquareIntegrable(const Dparam& p) {
    if (p.kind() != Dparam::Kind::RealDS)
        throw std::invalid_argument("the square-integrable correspondence is only defined from the"
                                    " rank-2 real discrete series");
    return Dparam::quatDS(p.first(), p.second());
}

std::string render(const Dparam& p) {
    switch (p.kind()) {
        case Dparam::Kind::ComplexChar:
            return "gamma(" + render(p.first()) + "," + render(p.second()) + ")";
        case Dparam::Kind::RealChar:
            return "delta(" + render(p.first()) + "," + std::to_string(p.eps()) + ")";
        case Dparam::Kind::RealDS: return "eta(" + render(p.first()) + "," + render(p.second()) + ")";
        case Dparam::Kind::QuatDS: return "etaH(" + render(p.first()) + "," + render(p.second()) + ")";
    }
    return "?";
}

}  // namespace udual
