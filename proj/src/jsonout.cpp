#include "udual/jsonout.hpp"

namespace udual {

using nlohmann::json;

json toJson(const Rational& q) { return render(q); }

json toJson(const ExactComplex& z) { return json{{"re", render(z.re)}, {"im", render(z.im)}}; }

json toJson(const Dparam& p) {
    switch (p.kind()) {
        case Dparam::Kind::ComplexChar:
            return json{{"type", "gamma"}, {"x", toJson(p.first())}, {"y", toJson(p.second())}};
        case Dparam::Kind::RealChar:
            return json{{"type", "delta"}, {"alpha", toJson(p.first())}, {"eps", p.eps()}};
        case Dparam::Kind::RealDS:
            return json{{"type", "eta"}, {"x", toJson(p.first())}, {"y", toJson(p.second())}};
        case Dparam::Kind::QuatDS:
            return json{{"type", "etaH"}, {"x", toJson(p.first())}, {"y", toJson(p.second())}};
    }
    return {};
}

json toJson(const LanglandsDatum& a) {
    json arr = json::array();
    for (const Dparam& p : a.elems) arr.push_back(toJson(p));
    return arr;
}

json toJson(const RingElem& r) {
    json arr = json::array();
    for (const auto& [a, c] : r.coords()) arr.push_back(json{{"coeff", c.get_str()}, {"datum", toJson(a)}});
    return arr;
}

json toJson(const UnitaryFactor& f) {
    if (std::holds_alternative<Speh>(f)) {
        const Speh& u = std::get<Speh>(f);
        return json{{"type", "u"}, {"base", toJson(u.base)}, {"n", u.len}};
    }
    const CompSeries& p = std::get<CompSeries>(f);
    return json{{"type", "pi"}, {"base", toJson(p.base)}, {"n", p.len}, {"alpha", render(p.alpha)}};
}

json toJson(const UnitaryRep& r, bool alphaInNuUnits) {
    json arr = json::array();
    for (const UnitaryFactor& f : r.factors) {
        json jf = toJson(f);
        if (alphaInNuUnits && jf["type"] == "pi") {
            const CompSeries& p = std::get<CompSeries>(f);
            jf["alpha"] = render(Rational(p.alpha * nuDelta(p.base)));
            jf["alphaUnits"] = "nu";
        }
        arr.push_back(jf);
    }
    return arr;
}

json toJson(const FormalPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const CoherentVar& v : m) mono.push_back(json{{"x", toJson(v.x)}, {"y", toJson(v.y)}});
        arr.push_back(json{{"coeff", c.get_str()}, {"symbols", mono}});
    }
    return arr;
}

json toJson(const IdentityReport& rep) {
    return json{{"holds", rep.holds}, {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"note", rep.note}};
}

json toJson(const Decomposition& d) {
    json out;
    switch (d.verdict) {
        case Decomposition::Verdict::Irreducible: out["verdict"] = "irreducible"; break;
        case Decomposition::Verdict::Reducible: out["verdict"] = "reducible"; break;
        case Decomposition::Verdict::Unknown: out["verdict"] = "unknown"; break;
    }
    out["certificate"] = d.certificate;
    if (d.quotient) out["quotient"] = toJson(d.quotient->datum);
    if (d.verdict == Decomposition::Verdict::Reducible) {
        json cs = json::array();
        for (const LanglandsDatum& c : d.constituents)
            cs.push_back(json{{"multiplicity", 1}, {"datum", toJson(c)}});
        out["constituents"] = cs;
    }
    return out;
}

json toJson(const ReducibilityReport& r) {
    json out;
    switch (r.verdict) {
        case ReducibilityReport::Verdict::Irreducible: out["verdict"] = "irreducible"; break;
        case ReducibilityReport::Verdict::Reducible: out["verdict"] = "reducible"; break;
        case ReducibilityReport::Verdict::Unknown: out["verdict"] = "unknown"; break;
    }
    if (r.witness) out["witness"] = json::array({r.witness->first, r.witness->second});
    return out;
}

json toJson(const CartanChar& c) {
    json arr = json::array();
    for (const auto& [a, b] : c.pairs) arr.push_back(json::array({toJson(a), toJson(b)}));
    return arr;
}

json toJson(const SignedUnitary& s) {
    return json{{"sign", s.sign}, {"factors", toJson(s.rep)}};
}

json toJson(const PrimalityReport& r) {
    json out{{"factorizationFound", r.factorizationFound}, {"partitionsChecked", r.partitionsChecked}};
    if (r.factorizationFound) {
        json vars = json::array();
        for (const Dparam& p : r.leftVariables) vars.push_back(toJson(p));
        out["leftVariables"] = vars;
    }
    return out;
}

}  // namespace udual
