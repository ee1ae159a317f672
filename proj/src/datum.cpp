#include "udual/datum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace udual {

LanglandsDatum::LanglandsDatum(Algebra a, std::vector<Dparam> es) : alg(a), elems(std::move(es)) {
    for (const Dparam& p : elems)
        if (p.algebra() != alg) throw std::invalid_argument("datum element over the wrong algebra");
    std::sort(elems.begin(), elems.end());
}

bool LanglandsDatum::operator<(const LanglandsDatum& o) const {
    if (alg != o.alg) return alg < o.alg;
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    for (size_t i = 0; i < elems.size(); ++i)
        if (int c = cmp(elems[i], o.elems[i]); c != 0) return c < 0;
    return false;
}

LanglandsDatum LanglandsDatum::operator+(const LanglandsDatum& o) const {
    if (alg != o.alg) throw std::invalid_argument("datum sum across algebras");
    std::vector<Dparam> es = elems;
    es.insert(es.end(), o.elems.begin(), o.elems.end());
    return LanglandsDatum(alg, std::move(es));
}

int degree(const LanglandsDatum& a) {
    int d = 0;
    for (const Dparam& p : a.elems) d += degreeOfD(p);
    return d;
}

LanglandsDatum limitDatum(const LimitOfDiscreteSeries& l) {
    return LanglandsDatum(Algebra::Real,
                          {Dparam::realChar(l.point, 0), Dparam::realChar(l.point, 1)});
}

std::vector<Dparam> standardSort(const LanglandsDatum& a) {
    std::vector<Dparam> v = a.elems;
    std::stable_sort(v.begin(), v.end(), [](const Dparam& p, const Dparam& q) {
        Rational ep = exponent(p), eq = exponent(q);
        if (ep != eq) return ep > eq;
        return cmp(p, q) < 0;
    });
    return v;
}

SupportMultiset supportOf(const LanglandsDatum& a) {
    SupportMultiset s;
    s.alg = a.alg;
    for (const Dparam& p : a.elems) s.add(supportOfD(p));
    return s;
}

namespace {

// all partitions of positions into singletons and pairs, recursing on the
// smallest unused position
void realTilings(const std::vector<ExactComplex>& w, std::vector<bool>& used, std::vector<Dparam>& acc,
                 std::set<LanglandsDatum>& out) {
    size_t i = 0;
    while (i < w.size() && used[i]) ++i;
    if (i == w.size()) {
        out.insert(LanglandsDatum(Algebra::Real, acc));
        return;
    }
    used[i] = true;
    for (int eps = 0; eps <= 1; ++eps) {
        acc.push_back(Dparam::realChar(w[i], eps));
        realTilings(w, used, acc, out);
        acc.pop_back();
    }
    for (size_t j = i + 1; j < w.size(); ++j) {
        if (used[j]) continue;
        ExactComplex d = w[i] - w[j];
        if (!isRationalInteger(d) || d.re == 0) continue;
        used[j] = true;
        acc.push_back(Dparam::realDS(w[i], w[j]));
        realTilings(w, used, acc, out);
        acc.pop_back();
        used[j] = false;
    }
    used[i] = false;
}

void quatTilings(const std::vector<ExactComplex>& w, std::vector<bool>& used, std::vector<Dparam>& acc,
                 std::set<LanglandsDatum>& out) {
    size_t i = 0;
    while (i < w.size() && used[i]) ++i;
    if (i == w.size()) {
        out.insert(LanglandsDatum(Algebra::Quaternion, acc));
        return;
    }
    used[i] = true;
    for (size_t j = i + 1; j < w.size(); ++j) {
        if (used[j]) continue;
        ExactComplex d = w[i] - w[j];
        if (!isRationalInteger(d) || d.re == 0) continue;
        used[j] = true;
        acc.push_back(Dparam::quatDS(w[i], w[j]));
        quatTilings(w, used, acc, out);
        acc.pop_back();
        used[j] = false;
    }
    used[i] = false;
}

void complexMatchings(const std::vector<ExactComplex>& xs, const std::vector<ExactComplex>& ys,
                      std::vector<bool>& used, size_t i, std::vector<Dparam>& acc,
                      std::set<LanglandsDatum>& out) {
    if (i == xs.size()) {
        out.insert(LanglandsDatum(Algebra::Complex, acc));
        return;
    }
    for (size_t j = 0; j < ys.size(); ++j) {
        if (used[j]) continue;
        if (!isRationalInteger(xs[i] - ys[j])) continue;
        used[j] = true;
        acc.push_back(Dparam::complexChar(xs[i], ys[j]));
        complexMatchings(xs, ys, used, i + 1, acc, out);
        acc.pop_back();
        used[j] = false;
    }
}

}  // namespace

std::vector<LanglandsDatum> enumerateData(const SupportMultiset& omega) {
    std::set<LanglandsDatum> out;
    std::vector<Dparam> acc;
    if (omega.alg == Algebra::Complex) {
        if (omega.entries.size() != omega.secondEntries.size())
            throw std::invalid_argument("complex support must be a couple of equal-size multisets");
        std::vector<bool> used(omega.secondEntries.size(), false);
        complexMatchings(omega.entries, omega.secondEntries, used, 0, acc, out);
    } else if (omega.alg == Algebra::Real) {
        std::vector<bool> used(omega.entries.size(), false);
        realTilings(omega.entries, used, acc, out);
    } else {
        if (omega.entries.size() % 2 != 0) return {};
        std::vector<bool> used(omega.entries.size(), false);
        quatTilings(omega.entries, used, acc, out);
    }
    return {out.begin(), out.end()};
}

std::string render(const LanglandsDatum& a) {
    if (a.elems.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < a.elems.size(); ++i) {
        if (i) s += " x ";
        s += render(a.elems[i]);
    }
    return s;
}

}  // namespace udual
