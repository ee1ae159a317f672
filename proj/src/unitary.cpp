#include "udual/unitary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace udual {

int cmp(const UnitaryFactor& a, const UnitaryFactor& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (std::holds_alternative<Speh>(a)) {
        const Speh &x = std::get<Speh>(a), &y = std::get<Speh>(b);
        if (int c = cmp(x.base, y.base); c != 0) return c;
        return x.len == y.len ? 0 : (x.len < y.len ? -1 : 1);
    }
    const CompSeries &x = std::get<CompSeries>(a), &y = std::get<CompSeries>(b);
    if (int c = cmp(x.base, y.base); c != 0) return c;
    if (x.len != y.len) return x.len < y.len ? -1 : 1;
    return ::cmp(x.alpha, y.alpha);
}

bool operator==(const UnitaryFactor& a, const UnitaryFactor& b) { return cmp(a, b) == 0; }

static const Dparam& baseOf(const UnitaryFactor& f) {
    return std::holds_alternative<Speh>(f) ? std::get<Speh>(f).base : std::get<CompSeries>(f).base;
}

UnitaryRep::UnitaryRep(Algebra a, std::vector<UnitaryFactor> fs) : alg(a), factors(std::move(fs)) {
    for (const UnitaryFactor& f : factors) {
        if (baseOf(f).algebra() != alg) throw std::invalid_argument("factor over the wrong algebra");
        int len = std::holds_alternative<Speh>(f) ? std::get<Speh>(f).len : std::get<CompSeries>(f).len;
        if (len < 1) throw std::invalid_argument("factor length must be positive");
    }
    std::sort(factors.begin(), factors.end(), [](const UnitaryFactor& x, const UnitaryFactor& y) {
        return cmp(x, y) < 0;
    });
}

UnitaryRep UnitaryRep::operator*(const UnitaryRep& o) const {
    if (alg != o.alg) throw std::invalid_argument("product across algebras");
    std::vector<UnitaryFactor> fs = factors;
    fs.insert(fs.end(), o.factors.begin(), o.factors.end());
    return UnitaryRep(alg, std::move(fs));
}

int degreeOf(const Speh& u) { return u.len * degreeOfD(u.base); }
int degreeOf(const CompSeries& p) { return 2 * p.len * degreeOfD(p.base); }
int degreeOf(const UnitaryRep& r) {
    int d = 0;
    for (const UnitaryFactor& f : r.factors)
        d += std::holds_alternative<Speh>(f) ? degreeOf(std::get<Speh>(f)) : degreeOf(std::get<CompSeries>(f));
    return d;
}

void validateUnitary(const UnitaryRep& r) {
    for (const UnitaryFactor& f : r.factors) {
        if (exponent(baseOf(f)) != 0)
            throw std::invalid_argument("factor base " + render(baseOf(f)) +
                                        " is not centered (exponent " + render(exponent(baseOf(f))) +
                                        "); write the centered base and an explicit nu-twist instead");
        if (std::holds_alternative<CompSeries>(f)) {
            const Rational& a = std::get<CompSeries>(f).alpha;
            if (!(a > 0 && 2 * a < 1))
                throw std::invalid_argument("complementary-series parameter " + render(a) +
                                            " outside the open interval (0, 1/2)");
        }
    }
}

bool isUnitary(const UnitaryRep& r) {
    try {
        validateUnitary(r);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

LanglandsDatum spehDatum(const Speh& u) {
    Rational step = nuDelta(u.base);
    std::vector<Dparam> es;
    for (int j = 0; j < u.len; ++j) {
        Rational e = step * (rat(u.len - 1, 2) - j);
        es.push_back(twist(u.base, ExactComplex(e)));
    }
    return LanglandsDatum(u.base.algebra(), std::move(es));
}

LanglandsDatum toDatum(const UnitaryFactor& f, Algebra alg) {
    if (std::holds_alternative<Speh>(f)) return spehDatum(std::get<Speh>(f));
    const CompSeries& p = std::get<CompSeries>(f);
    Rational shift = p.alpha * nuDelta(p.base);
    LanglandsDatum d = spehDatum({p.base, p.len});
    std::vector<Dparam> es;
    for (const Dparam& q : d.elems) {
        es.push_back(twist(q, ExactComplex(shift)));
        es.push_back(twist(q, ExactComplex(Rational(-shift))));
    }
    return LanglandsDatum(alg, std::move(es));
}

LanglandsDatum toDatum(const UnitaryRep& r) {
    LanglandsDatum out(r.alg, {});
    for (const UnitaryFactor& f : r.factors) out = out + toDatum(f, r.alg);
    return out;
}

namespace {

// exponent multisets in nu_delta units, per line
struct Line {
    Dparam anchor;
    std::vector<Rational> exps;  // sorted descending
};

bool removeAll(std::vector<Rational>& pool, const std::vector<Rational>& vals) {
    for (const Rational& v : vals) {
        auto it = std::find(pool.begin(), pool.end(), v);
        if (it == pool.end()) return false;
        pool.erase(it);
    }
    return true;
}

// centered unit-step progression of length n: (n-1)/2 - j, shifted by s
std::vector<Rational> progression(int n, const Rational& s) {
    std::vector<Rational> v;
    for (int j = 0; j < n; ++j) v.push_back(rat(n - 1, 2) - j + s);
    return v;
}

struct Shape {
    bool isPair;  // pi-shape
    int n;
    Rational alpha;  // pi only
    bool operator<(const Shape& o) const {
        if (isPair != o.isPair) return isPair < o.isPair;
        if (n != o.n) return n < o.n;
        return alpha < o.alpha;
    }
};

void partitions(std::vector<Rational> pool, std::vector<Shape>& acc, std::set<std::vector<Shape>>& out) {
    if (pool.empty()) {
        std::vector<Shape> sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        out.insert(sorted);
        return;
    }
    Rational m = *std::max_element(pool.begin(), pool.end());
    // the factor containing the maximal exponent is either u(., n) with top
    // (n-1)/2 = m, or pi(., n; alpha) with top (n-1)/2 + alpha = m
    Rational nQ = 2 * m + 1;
    if (isInteger(nQ) && nQ > 0 && nQ <= static_cast<long>(pool.size())) {
        int n = static_cast<int>(nQ.get_num().get_si());
        std::vector<Rational> rest = pool;
        if (removeAll(rest, progression(n, 0))) {
            acc.push_back({false, n, 0});
            partitions(std::move(rest), acc, out);
            acc.pop_back();
        }
    }
    int maxLen = static_cast<int>(pool.size()) / 2;
    for (int n = 1; n <= maxLen; ++n) {
        Rational alpha = m - rat(n - 1, 2);
        if (!(alpha > 0 && 2 * alpha < 1)) continue;
        std::vector<Rational> rest = pool;
        if (!removeAll(rest, progression(n, alpha))) continue;
        if (!removeAll(rest, progression(n, -alpha))) continue;
        acc.push_back({true, n, alpha});
        partitions(std::move(rest), acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::optional<UnitaryRep> factorize(const LanglandsDatum& a) {
    std::map<Dparam, Line> lines;
    for (const Dparam& p : a.elems) {
        auto [anchor, e] = unitaryPart(p);
        auto [it, fresh] = lines.emplace(anchor, Line{anchor, {}});
        it->second.exps.push_back(e / nuDelta(anchor));
    }

    std::vector<UnitaryFactor> factors;
    for (auto& [anchor, line] : lines) {
        std::set<std::vector<Shape>> found;
        std::vector<Shape> acc;
        partitions(line.exps, acc, found);
        if (found.empty()) return std::nullopt;
        if (found.size() > 1)
            throw std::logic_error("non-unique unitary factorization of " + render(a) +
                                   "; the free-monoid model is breached");
        for (const Shape& s : *found.begin()) {
            if (s.isPair)
                factors.push_back(CompSeries{anchor, s.n, s.alpha});
            else
                factors.push_back(Speh{anchor, s.n});
        }
    }
    return UnitaryRep(a.alg, std::move(factors));
}

bool isGenericUnitary(const UnitaryRep& r) {
    for (const UnitaryFactor& f : r.factors) {
        int len = std::holds_alternative<Speh>(f) ? std::get<Speh>(f).len : std::get<CompSeries>(f).len;
        if (len != 1) return false;
    }
    return true;
}

UnitaryRep uGamma(const UnitaryRep& gamma, int k) {
    if (!isGenericUnitary(gamma)) throw std::invalid_argument("uGamma needs a generic representation");
    if (k < 1) throw std::invalid_argument("uGamma needs k >= 1");
    std::vector<UnitaryFactor> fs;
    for (const UnitaryFactor& f : gamma.factors) {
        if (std::holds_alternative<Speh>(f))
            fs.push_back(Speh{std::get<Speh>(f).base, k});
        else {
            CompSeries p = std::get<CompSeries>(f);
            fs.push_back(CompSeries{p.base, k, p.alpha});
        }
    }
    return UnitaryRep(gamma.alg, std::move(fs));
}

UnitaryRep ubarExpand(const ExactComplex& x, int k) {
    if (k < 1) throw std::invalid_argument("ubarExpand needs k >= 1");
    Dparam base = Dparam::quatDS(x, x - ExactComplex(1));
    if (exponent(base) != 0)
        throw std::invalid_argument("ubarExpand base etaH(" + render(x) + "," + render(x - ExactComplex(1)) +
                                    ") is not centered; re(x) must be 1/2");
    if (k == 1) return UnitaryRep(Algebra::Quaternion, {Speh{base, 1}});
    if (k % 2 == 0) return UnitaryRep(Algebra::Quaternion, {CompSeries{base, k / 2, rat(1, 4)}});
    return UnitaryRep(Algebra::Quaternion, {Speh{base, k / 2 + 1}, Speh{base, k / 2}});
}

LanglandsDatum ubarStandardDatum(const ExactComplex& x, int k) {
    Dparam base = Dparam::quatDS(x, x - ExactComplex(1));
    std::vector<Dparam> es;
    for (int j = 0; j < k; ++j) es.push_back(twist(base, ExactComplex(rat(k - 1, 2) - j)));
    return LanglandsDatum(Algebra::Quaternion, std::move(es));
}

std::string render(const UnitaryFactor& f) {
    if (std::holds_alternative<Speh>(f)) {
        const Speh& u = std::get<Speh>(f);
        return "u(" + render(u.base) + "," + std::to_string(u.len) + ")";
    }
    const CompSeries& p = std::get<CompSeries>(f);
    return "pi(" + render(p.base) + "," + std::to_string(p.len) + ";" + render(p.alpha) + ")";
}

std::string render(const UnitaryRep& r) {
    if (r.factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < r.factors.size(); ++i) {
        if (i) s += " x ";
        s += render(r.factors[i]);
    }
    return s;
}

}  // namespace udual
