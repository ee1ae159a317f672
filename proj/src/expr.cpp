#include "udual/expr.hpp"

#include <cctype>

#include "udual/charform.hpp"

namespace udual {

LanglandsDatum twistDatum(const LanglandsDatum& a, const ExactComplex& s) {
    std::vector<Dparam> es;
    es.reserve(a.elems.size());
    for (const Dparam& p : a.elems) es.push_back(twist(p, s));
    return LanglandsDatum(a.alg, std::move(es));
}

RingElem twistRing(const RingElem& r, const ExactComplex& s) {
    RingElem out(r.algebra());
    for (const auto& [a, c] : r.coords()) out.addTerm(twistDatum(a, s), c);
    return out;
}

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }
    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    size_t pos() const { return pos_; }

    bool consume(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool consumeWord(const std::string& w) {
        skipSpace();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        size_t end = pos_ + w.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    bool peekDigit() {
        skipSpace();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    // unsigned "p" or "p/q"
    Rational unsignedRational() {
        skipSpace();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (start == pos_) fail("expected a number");
        try {
            return parseRational(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        return Rational();
    }

    Rational signedRational() {
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        Rational q = unsignedRational();
        return sign < 0 ? Rational(-q) : q;
    }

    int integer() {
        Rational q = signedRational();
        if (!isInteger(q)) fail("expected an integer");
        if (!q.get_num().fits_sint_p()) fail("integer out of range");
        return static_cast<int>(q.get_num().get_si());
    }

    // num [("+"|"-") num "i"]
    ExactComplex complexNumber() {
        Rational re = signedRational();
        skipSpace();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            size_t mark = pos_;
            int sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skipSpace();
            if (!peekDigit()) {
                pos_ = mark;
                return ExactComplex(re);
            }
            Rational im = unsignedRational();
            if (!consumeWord("i")) {
                pos_ = mark;
                return ExactComplex(re);
            }
            return ExactComplex(re, sign < 0 ? Rational(-im) : im);
        }
        return ExactComplex(re);
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  private:
    const std::string& text_;
    size_t pos_ = 0;
};

Dparam scanDparam(Scanner& s) {
    if (s.consumeWord("gamma")) {
        s.expect('(');
        ExactComplex x = s.complexNumber();
        s.expect(',');
        ExactComplex y = s.complexNumber();
        s.expect(')');
        try {
            return Dparam::complexChar(x, y);
        } catch (const std::invalid_argument& e) {
            s.fail(e.what());
        }
    }
    if (s.consumeWord("delta")) {
        s.expect('(');
        ExactComplex a = s.complexNumber();
        s.expect(',');
        int eps = s.integer();
        s.expect(')');
        try {
            return Dparam::realChar(a, eps);
        } catch (const std::invalid_argument& e) {
            s.fail(e.what());
        }
    }
    bool quat = false;
    if (s.consumeWord("etaH"))
        quat = true;
    else if (!s.consumeWord("eta"))
        s.fail("expected a parameter (gamma/delta/eta/etaH)");
    s.expect('(');
    ExactComplex x = s.complexNumber();
    s.expect(',');
    ExactComplex y = s.complexNumber();
    s.expect(')');
    try {
        return quat ? Dparam::quatDS(x, y) : Dparam::realDS(x, y);
    } catch (const std::invalid_argument& e) {
        s.fail(e.what());
    }
}

struct Atom {
    enum class Type { Param, SpehAtom, CompAtom } type = Type::Param;
    Dparam param = Dparam::realChar(ExactComplex(), 0);
    int len = 1;
    Rational alpha;        // internal nu_delta units
    ExactComplex twistBy;  // accumulated nu-twist
};

Atom scanAtom(Scanner& s, bool alphaInNuUnits) {
    if (s.consumeWord("nu")) {
        s.expect('^');
        Rational e = s.signedRational();
        s.expect('*');
        Atom a = scanAtom(s, alphaInNuUnits);
        a.twistBy += ExactComplex(e);
        return a;
    }
    if (s.consumeWord("u")) {
        Atom a;
        a.type = Atom::Type::SpehAtom;
        s.expect('(');
        a.param = scanDparam(s);
        s.expect(',');
        a.len = s.integer();
        s.expect(')');
        if (a.len < 1) s.fail("length must be positive");
        return a;
    }
    if (s.consumeWord("pi")) {
        Atom a;
        a.type = Atom::Type::CompAtom;
        s.expect('(');
        a.param = scanDparam(s);
        s.expect(',');
        a.len = s.integer();
        s.expect(';');
        a.alpha = s.signedRational();
        s.expect(')');
        if (a.len < 1) s.fail("length must be positive");
        if (alphaInNuUnits) a.alpha /= nuDelta(a.param);
        Rational lim = rat(1, 2);
        if (!(a.alpha > 0 && a.alpha < lim))
            s.fail("complementary-series parameter " + render(a.alpha) +
                   " (nu_delta units) outside the open interval (0, 1/2)");
        return a;
    }
    Atom a;
    a.type = Atom::Type::Param;
    a.param = scanDparam(s);
    return a;
}

RingElem atomToRing(const Atom& a, Scanner& s) {
    RingElem r(a.param.algebra());
    switch (a.type) {
        case Atom::Type::Param: r = lambdaMonomial(a.param.algebra(), {a.param}); break;
        case Atom::Type::SpehAtom:
        case Atom::Type::CompAtom: {
            if (a.param.kind() == Dparam::Kind::RealChar)
                s.fail("the ladder quotient of a rank-1 real character has no determinant expansion");
            if (a.param.kind() == Dparam::Kind::QuatDS && nuDelta(a.param) == 2 && a.len > 1)
                s.fail("the wall-adjacent quaternionic ladder has no determinant expansion; use the"
                       " transfer machinery instead");
            RingElem u;
            try {
                u = spehExpandEvaluated(a.param.algebra(), a.param.first(), a.param.second(), a.len);
            } catch (const WallCrossingError& e) {
                s.fail(e.what());
            } catch (const std::invalid_argument& e) {
                s.fail(e.what());
            }
            if (a.type == Atom::Type::SpehAtom) {
                r = u;
            } else {
                Rational shift = a.alpha * nuDelta(a.param);
                r = twistRing(u, ExactComplex(shift)) * twistRing(u, ExactComplex(Rational(-shift)));
            }
            break;
        }
    }
    if (!(a.twistBy == ExactComplex())) r = twistRing(r, a.twistBy);
    return r;
}

// a product term: either a pure integer (algebra inferred from the rest of
// the expression) or a concrete ring element
struct ProductTerm {
    Int scalar = 1;
    std::optional<RingElem> elem;
};

ProductTerm scanProduct(Scanner& s, bool alphaInNuUnits) {
    ProductTerm t;
    if (s.peekDigit()) {
        Rational q = s.unsignedRational();
        if (!isInteger(q)) s.fail("coefficients must be integers");
        t.scalar = q.get_num();
        if (s.atEnd() || s.peek() == '+' || s.peek() == '-') return t;
    }
    RingElem r = atomToRing(scanAtom(s, alphaInNuUnits), s);
    while (s.consumeWord("x")) r = r * atomToRing(scanAtom(s, alphaInNuUnits), s);
    t.elem = r * t.scalar;
    t.scalar = 1;
    return t;
}

}  // namespace

ExactComplex parseComplex(const std::string& text) {
    Scanner s(text);
    ExactComplex z = s.complexNumber();
    if (!s.atEnd()) s.fail("trailing input");
    return z;
}

Dparam parseDparam(const std::string& text) {
    Scanner s(text);
    Dparam p = scanDparam(s);
    if (!s.atEnd()) s.fail("trailing input");
    return p;
}

LanglandsDatum parseDatumProduct(const std::string& text) {
    Scanner s(text);
    std::vector<Dparam> elems;
    do {
        Atom a = scanAtom(s, false);
        if (a.type != Atom::Type::Param) s.fail("expected a product of parameters");
        elems.push_back(twist(a.param, a.twistBy));
    } while (s.consumeWord("x"));
    if (!s.atEnd()) s.fail("trailing input");
    if (elems.empty()) s.fail("empty datum");
    Algebra alg = elems.front().algebra();
    return LanglandsDatum(alg, std::move(elems));
}

RingElem parseRingExpr(const std::string& text, bool alphaInNuUnits) {
    Scanner s(text);
    std::vector<std::pair<Int, ProductTerm>> terms;
    Int sign = s.consume('-') ? -1 : 1;
    terms.emplace_back(sign, scanProduct(s, alphaInNuUnits));
    while (!s.atEnd()) {
        if (s.consume('+'))
            terms.emplace_back(1, scanProduct(s, alphaInNuUnits));
        else if (s.consume('-'))
            terms.emplace_back(-1, scanProduct(s, alphaInNuUnits));
        else
            s.fail("expected '+' or '-'");
    }
    Algebra alg = Algebra::Real;
    for (const auto& [sg, t] : terms)
        if (t.elem) {
            alg = t.elem->algebra();
            break;
        }
    RingElem r(alg);
    for (const auto& [sg, t] : terms) {
        if (t.elem)
            r = r + *t.elem * sg;
        else
            r = r + RingElem::one(alg) * (t.scalar * sg);
    }
    return r;
}

UnitaryRep parseUnitaryProduct(const std::string& text, bool strict, bool alphaInNuUnits) {
    Scanner s(text);
    std::vector<UnitaryFactor> fs;
    Algebra alg = Algebra::Real;
    bool first = true;
    do {
        Atom a = scanAtom(s, alphaInNuUnits);
        Dparam base = twist(a.param, a.twistBy);
        if (strict && exponent(base) != 0)
            s.fail("factor base " + render(base) + " has exponent " + render(exponent(base)) +
                   "; a unitary factor needs the centered form (exponent 0)");
        switch (a.type) {
            case Atom::Type::Param: fs.push_back(Speh{base, 1}); break;
            case Atom::Type::SpehAtom: fs.push_back(Speh{base, a.len}); break;
            case Atom::Type::CompAtom: fs.push_back(CompSeries{base, a.len, a.alpha}); break;
        }
        if (first) {
            alg = base.algebra();
            first = false;
        }
    } while (s.consumeWord("x"));
    if (!s.atEnd()) s.fail("trailing input");
    UnitaryRep rep(alg, std::move(fs));
    if (strict) validateUnitary(rep);
    return rep;
}

CartanChar parseCartanCharText(const std::string& text) {
    Scanner s(text);
    s.expect('(');
    std::vector<std::pair<ExactComplex, ExactComplex>> ps;
    do {
        s.expect('(');
        ExactComplex a = s.complexNumber();
        s.expect(',');
        ExactComplex b = s.complexNumber();
        s.expect(')');
        ps.emplace_back(a, b);
    } while (s.consume(','));
    s.expect(')');
    if (!s.atEnd()) s.fail("trailing input");
    try {
        return CartanChar(std::move(ps));
    } catch (const std::invalid_argument& e) {
        s.fail(e.what());
    }
}

std::string printUnitary(const UnitaryRep& r, bool alphaInNuUnits) {
    if (r.factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < r.factors.size(); ++i) {
        if (i) s += " x ";
        const UnitaryFactor& f = r.factors[i];
        if (std::holds_alternative<Speh>(f)) {
            s += render(f);
        } else {
            const CompSeries& p = std::get<CompSeries>(f);
            Rational a = alphaInNuUnits ? Rational(p.alpha * nuDelta(p.base)) : p.alpha;
            s += "pi(" + render(p.base) + "," + std::to_string(p.len) + ";" + render(a) + ")";
        }
    }
    return s;
}

}  // namespace udual
