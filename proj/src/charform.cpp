#include "udual/charform.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "udual/bruhat.hpp"
#include "udual/unitary.hpp"

namespace udual {

WallClass wallClass(const CoherentVar& v) {
    ExactComplex d = v.x - v.y;
    if (d.re > 0) return WallClass::Above;
    if (d.re == 0) return WallClass::Wall;
    return WallClass::Below;
}

FormalPoly FormalPoly::variable(const CoherentVar& v) {
    FormalPoly p;
    p.addTerm({v}, 1);
    return p;
}

FormalPoly FormalPoly::one() {
    FormalPoly p;
    p.addTerm({}, 1);
    return p;
}

void FormalPoly::addTerm(Monomial m, const Int& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalPoly FormalPoly::operator+(const FormalPoly& o) const {
    FormalPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

FormalPoly FormalPoly::operator-(const FormalPoly& o) const {
    FormalPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

FormalPoly FormalPoly::operator*(const FormalPoly& o) const {
    FormalPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            r.addTerm(std::move(m), c1 * c2);
        }
    return r;
}

std::string render(const FormalPoly& p) {
    if (p.isZero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else
            s += c < 0 ? " - " : " + ";
        if (abs != 1 || m.empty()) {
            s += abs.get_str();
            if (!m.empty()) s += " ";
        }
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) s += "*";
            s += "[" + render(m[i].x) + "," + render(m[i].y) + "]";
        }
    }
    return s;
}

SpehMatrix buildSpehMatrix(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    ExactComplex d = x - y;
    if (!isRationalInteger(d)) throw std::invalid_argument("x - y must be a rational integer");
    if (alg != Algebra::Complex && d.re < 0)
        throw std::invalid_argument("over R and H the dominant representative x - y >= 0 is required");
    return SpehMatrix{alg, x, y, n};
}

CoherentVar entryAt(const SpehMatrix& m, int i, int j) {
    Rational half = rat(m.n - 1, 2);
    return CoherentVar{m.x + ExactComplex(half - (i - 1)), m.y + ExactComplex(half - (j - 1))};
}

RingElem resolveEntry(Algebra alg, const CoherentVar& v) {
    switch (alg) {
        case Algebra::Complex: return lambdaMonomial(Algebra::Complex, {Dparam::complexChar(v.x, v.y)});
        case Algebra::Real:
            switch (wallClass(v)) {
                case WallClass::Above: return lambdaMonomial(Algebra::Real, {Dparam::realDS(v.x, v.y)});
                case WallClass::Wall: return lambdaMonomial(limitDatum(LimitOfDiscreteSeries{v.x}));
                case WallClass::Below:
                    throw WallCrossingError("coherent symbol [" + render(v.x) + "," + render(v.y) +
                                            "] lies below the wall; its value is unspecified");
            }
            break;
        case Algebra::Quaternion:
            switch (wallClass(v)) {
                case WallClass::Above:
                    return lambdaMonomial(Algebra::Quaternion, {Dparam::quatDS(v.x, v.y)});
                case WallClass::Wall: return RingElem::zero(Algebra::Quaternion);
                case WallClass::Below:
                    throw WallCrossingError("coherent symbol [" + render(v.x) + "," + render(v.y) +
                                            "] lies below the wall; its value is unspecified");
            }
            break;
    }
    throw std::logic_error("unreachable");
}

namespace {

void checkCap(int n, int cap) {
    if (n > cap)
        throw std::invalid_argument("matrix size " + std::to_string(n) + " exceeds the expansion cap " +
                                    std::to_string(cap));
}

int permutationSign(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

FormalPoly detFormal(const SpehMatrix& m, int cap) {
    checkCap(m.n, cap);
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 1);
    FormalPoly det;
    do {
        FormalPoly::Monomial mono;
        for (int i = 1; i <= m.n; ++i) mono.push_back(entryAt(m, i, perm[i - 1]));
        det.addTerm(std::move(mono), permutationSign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

RingElem detEvaluated(const SpehMatrix& m, int cap) {
    checkCap(m.n, cap);
    // scan first so an unresolvable entry aborts the whole determinant
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j)
            if (m.alg != Algebra::Complex && wallClass(entryAt(m, i, j)) == WallClass::Below)
                throw WallCrossingError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") of the " + std::to_string(m.n) +
                                        "-grid lies below the wall; evaluated expansion is undefined");
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 1);
    RingElem det(m.alg);
    do {
        RingElem term = RingElem::one(m.alg);
        for (int i = 1; i <= m.n && !term.isZero(); ++i)
            term = term * resolveEntry(m.alg, entryAt(m, i, perm[i - 1]));
        det = det + term * Int(permutationSign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

RingElem spehExpandEvaluated(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n, int cap) {
    return detEvaluated(buildSpehMatrix(alg, x, y, n), cap);
}

FormalPoly spehExpandFormal(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n, int cap) {
    return detFormal(buildSpehMatrix(alg, x, y, n), cap);
}

namespace {

ExactComplex half() { return ExactComplex(rat(1, 2)); }

struct CondensationSides {
    SpehMatrix big, interior, corner11, cornerKK, corner1K, cornerK1;
};

// minors of the (n+1)-grid at (x, y) are themselves shifted grids
CondensationSides condensation(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n) {
    CondensationSides s;
    s.big = buildSpehMatrix(alg, x, y, n + 1);
    s.interior = buildSpehMatrix(alg, x, y, n - 1);
    s.corner11 = buildSpehMatrix(alg, x - half(), y - half(), n);
    s.cornerKK = buildSpehMatrix(alg, x + half(), y + half(), n);
    s.corner1K = buildSpehMatrix(alg, x - half(), y + half(), n);
    s.cornerK1 = buildSpehMatrix(alg, x + half(), y - half(), n);
    return s;
}

IdentityReport checkFormal(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n) {
    CondensationSides s = condensation(alg, x, y, n);
    FormalPoly lhs = detFormal(s.corner11, n) * detFormal(s.cornerKK, n);
    FormalPoly rhs = detFormal(s.big, n + 1) * detFormal(s.interior, n) +
                     detFormal(s.corner1K, n) * detFormal(s.cornerK1, n);
    IdentityReport rep;
    rep.holds = lhs == rhs;
    rep.lhs = render(lhs);
    rep.rhs = render(rhs);
    rep.note = "formal condensation identity on the " + std::to_string(n + 1) + "-grid at (" +
               render(x) + "," + render(y) + ")";
    return rep;
}

IdentityReport checkEvaluated(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n) {
    CondensationSides s = condensation(alg, x, y, n);
    RingElem lhs = detEvaluated(s.corner11, n) * detEvaluated(s.cornerKK, n);
    RingElem rhs = detEvaluated(s.big, n + 1) * detEvaluated(s.interior, n) +
                   detEvaluated(s.corner1K, n) * detEvaluated(s.cornerK1, n);
    IdentityReport rep;
    rep.holds = lhs == rhs;
    rep.lhs = render(lhs);
    rep.rhs = render(rhs);
    rep.note = "evaluated condensation identity on the " + std::to_string(n + 1) + "-grid at (" +
               render(x) + "," + render(y) + ")";
    return rep;
}

// the wall-quotient bookkeeping behind the quaternionic wall identities: the
// unitary-basis expansion of the nu-stepped quotient matches its standard
// datum, the small evaluable determinants match it, and the product formulas
// cancel down to the u-level identity
bool wallQuotientConsistent(const ExactComplex& xRaw, int n, std::string& why) {
    // the identity family is twist-equivariant; run the bookkeeping at the
    // centered member of the line
    auto [anchor, e] = unitaryPart(Dparam::quatDS(xRaw, xRaw - ExactComplex(1)));
    ExactComplex x = anchor.first();
    Dparam base = anchor;
    for (int k = 1; k <= 2 * n + 1; ++k) {
        if (toDatum(ubarExpand(x, k)) != ubarStandardDatum(x, k)) {
            why = "wall quotient at length " + std::to_string(k) + " does not match its standard datum";
            return false;
        }
    }
    for (int k = 1; k <= 2; ++k) {
        RingElem det = detEvaluated(buildSpehMatrix(Algebra::Quaternion, x, x - ExactComplex(1), k));
        if (det != lambdaMonomial(toDatum(ubarExpand(x, k)))) {
            why = "evaluable wall determinant at length " + std::to_string(k) +
                  " does not match the wall quotient";
            return false;
        }
    }
    // cancellation of the square of u(base, n) out of the substituted sides
    LanglandsDatum uSquared = spehDatum({base, n}) + spehDatum({base, n});
    LanglandsDatum lhs = toDatum(ubarExpand(x, 2 * n));
    LanglandsDatum lhsShifted(Algebra::Quaternion, {});
    for (const Dparam& p : lhs.elems) {
        lhsShifted = lhsShifted + LanglandsDatum(Algebra::Quaternion, {twist(p, -half())});
        lhsShifted = lhsShifted + LanglandsDatum(Algebra::Quaternion, {twist(p, half())});
    }
    LanglandsDatum lhsTarget = uSquared;
    for (const Dparam& p : spehDatum({base, n}).elems) {
        lhsTarget = lhsTarget + LanglandsDatum(Algebra::Quaternion, {twist(p, ExactComplex(1))});
        lhsTarget = lhsTarget + LanglandsDatum(Algebra::Quaternion, {twist(p, ExactComplex(-1L))});
    }
    if (lhsShifted != lhsTarget) {
        why = "twisted wall quotient does not cancel to the unit-twisted ladder pair";
        return false;
    }
    if (n >= 2) {
        LanglandsDatum rhs1 = toDatum(ubarExpand(x, 2 * n + 1)) + toDatum(ubarExpand(x, 2 * n - 1));
        LanglandsDatum rhs1Target = uSquared + spehDatum({base, n + 1}) + spehDatum({base, n - 1});
        if (rhs1 != rhs1Target) {
            why = "odd wall quotients do not cancel to the neighbour ladder pair";
            return false;
        }
    }
    return true;
}

}  // namespace

IdentityReport lewisCarrollCheck(const std::string& id, const ExactComplex& x, const ExactComplex& y,
                                 int n, EvalMode mode) {
    if (n < 2) throw std::invalid_argument("the condensation identities need n >= 2");
    if (id == "14.3") {
        if (n > 6) throw std::invalid_argument("n > 6 exceeds the expansion budget");
        return mode == EvalMode::Formal ? checkFormal(Algebra::Complex, x, y, n)
                                        : checkEvaluated(Algebra::Complex, x, y, n);
    }
    if (id == "14.5") {
        if (n > 6) throw std::invalid_argument("n > 6 exceeds the expansion budget");
        return mode == EvalMode::Formal ? checkFormal(Algebra::Real, x, y, n)
                                        : checkEvaluated(Algebra::Real, x, y, n);
    }
    if (id == "14.7") {
        if (n > 6) throw std::invalid_argument("n > 6 exceeds the expansion budget");
        return mode == EvalMode::Formal ? checkFormal(Algebra::Quaternion, x, y, n)
                                        : checkEvaluated(Algebra::Quaternion, x, y, n);
    }
    if (id == "14.6") {
        if (n > 6) throw std::invalid_argument("n > 6 exceeds the expansion budget");
        if (!(x - y == ExactComplex(1)))
            throw std::invalid_argument("identity 14.6 lives at y = x - 1");
        if (mode == EvalMode::Evaluated)
            throw WallCrossingError("identity 14.6 involves below-wall symbols for every n >= 2;"
                                    " only the formal mode is defined");
        return checkFormal(Algebra::Real, x, y, n);
    }
    if (id == "14.9" || id == "14.10") {
        // the condensation grid has size 2n+1 and its side products carry
        // (2n+1)! * (2n-1)! monomials; n = 2 is the desk-scale budget
        if (n > 2) throw std::invalid_argument("n > 2 exceeds the expansion budget for the wall grids");
        if (!(x - y == ExactComplex(1)))
            throw std::invalid_argument("identity " + id + " lives at y = x - 1");
        if (mode == EvalMode::Evaluated)
            throw WallCrossingError("identity " + id + " involves below-wall symbols for every n >= 1;"
                                    " only the formal mode is defined");
        IdentityReport rep = checkFormal(Algebra::Quaternion, x, y, 2 * n);
        std::string why;
        bool wall = wallQuotientConsistent(x, n, why);
        rep.holds = rep.holds && wall;
        rep.note += "; wall-quotient bookkeeping " + std::string(wall ? "consistent" : ("failed: " + why));
        return rep;
    }
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

PrimalityReport primalityProbe(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n) {
    if (n > 3) throw std::invalid_argument("primality probe is budgeted for n <= 3");
    return primalityProbeOn(spehExpandEvaluated(alg, x, y, n));
}

PrimalityReport primalityProbeOn(const RingElem& e) {
    Algebra alg = e.algebra();
    if (e.isZero()) throw std::invalid_argument("expansion vanished; nothing to probe");
    auto deg = e.homogeneousDegree();
    if (!deg) throw std::invalid_argument("primality probe needs a homogeneous expansion");
    int n = *deg;
    SupportMultiset s = supportOf(e.coords().begin()->first);
    for (const auto& [mono, c] : e.coords())
        if (supportOf(mono) != s) throw std::invalid_argument("primality probe needs a single support");
    if (!isRegular(s.entries) || !isRegular(s.secondEntries))
        throw std::invalid_argument("primality probe needs a regular support");

    std::set<Dparam> varSet;
    for (const auto& [mono, c] : e.coords())
        for (const Dparam& p : mono.elems) varSet.insert(p);
    std::vector<Dparam> vars(varSet.begin(), varSet.end());
    size_t v = vars.size();

    PrimalityReport rep;
    if (n == 1) return rep;  // a single variable is prime outright

    auto sideOf = [&](const Dparam& p, unsigned long mask) {
        size_t idx = std::lower_bound(vars.begin(), vars.end(), p) - vars.begin();
        return (mask >> idx) & 1ul;
    };
    // fix variable 0 on the left side so each unordered partition is tried once
    for (unsigned long mask = 1; mask < (1ul << v); mask += 2) {
        if (mask == (1ul << v) - 1) continue;  // right side empty
        ++rep.partitionsChecked;
        bool ok = true;
        int leftDeg = -1;
        std::map<LanglandsDatum, std::map<LanglandsDatum, Int>> table;
        for (const auto& [mono, c] : e.coords()) {
            std::vector<Dparam> l, r;
            for (const Dparam& p : mono.elems) (sideOf(p, mask) ? l : r).push_back(p);
            if (leftDeg < 0) leftDeg = static_cast<int>(l.size());
            if (static_cast<int>(l.size()) != leftDeg) {
                ok = false;
                break;
            }
            table[LanglandsDatum(alg, l)][LanglandsDatum(alg, r)] = c;
        }
        if (!ok || leftDeg == 0 || leftDeg == n) continue;
        // rank-one test with a full product structure
        const auto& row0 = table.begin()->second;
        for (const auto& [l, row] : table) {
            if (row.size() != row0.size()) {
                ok = false;
                break;
            }
            for (const auto& [r, c] : row)
                if (row0.find(r) == row0.end()) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) {
            const LanglandsDatum& r0 = row0.begin()->first;
            Int c00 = row0.begin()->second;
            for (const auto& [l, row] : table) {
                const Int& cl0 = row.at(r0);
                for (const auto& [r, c] : row)
                    if (c * c00 != row0.at(r) * cl0) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
        }
        if (ok) {
            rep.factorizationFound = true;
            for (size_t i = 0; i < v; ++i)
                if ((mask >> i) & 1ul) rep.leftVariables.push_back(vars[i]);
            return rep;
        }
    }
    return rep;
}

}  // namespace udual
