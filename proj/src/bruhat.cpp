#include "udual/bruhat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace udual {

CartanChar::CartanChar(std::vector<std::pair<ExactComplex, ExactComplex>> ps) : pairs(std::move(ps)) {
    for (auto& [a, b] : pairs) {
        ExactComplex d = a - b;
        if (!isRationalInteger(d) || d.re == 0)
            throw std::invalid_argument("Cartan character pair (" + render(a) + "," + render(b) +
                                        "): coordinates must differ by a nonzero integer");
        if (lexLess(a, b)) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        if (int c = cmp(p.first, q.first); c != 0) return c > 0;
        return cmp(p.second, q.second) > 0;
    });
}

ExactComplex CartanChar::nu(int k) const {
    const auto& p = pairs[(k - 1) / 2];
    return k % 2 == 1 ? p.first : p.second;
}

bool CartanChar::operator<(const CartanChar& o) const {
    if (pairs.size() != o.pairs.size()) return pairs.size() < o.pairs.size();
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (int c = cmp(pairs[i].first, o.pairs[i].first); c != 0) return c < 0;
        if (int c = cmp(pairs[i].second, o.pairs[i].second); c != 0) return c < 0;
    }
    return false;
}

CartanChar toCartanChar(const LanglandsDatum& a) {
    if (a.alg != Algebra::Quaternion)
        throw std::invalid_argument("Cartan characters parametrize the quaternionic case only");
    std::vector<std::pair<ExactComplex, ExactComplex>> ps;
    for (const Dparam& p : a.elems) ps.emplace_back(p.first(), p.second());
    return CartanChar(std::move(ps));
}

LanglandsDatum toDatum(const CartanChar& c) {
    std::vector<Dparam> es;
    for (const auto& [a, b] : c.pairs) es.push_back(Dparam::quatDS(a, b));
    return LanglandsDatum(Algebra::Quaternion, std::move(es));
}

std::vector<ExactComplex> supportOfChar(const CartanChar& c) {
    std::vector<ExactComplex> w;
    for (const auto& [a, b] : c.pairs) {
        w.push_back(a);
        w.push_back(b);
    }
    sortDesc(w);
    return w;
}

bool isRegular(const std::vector<ExactComplex>& omega) {
    for (size_t i = 0; i + 1 < omega.size(); ++i)
        for (size_t j = i + 1; j < omega.size(); ++j)
            if (omega[i] == omega[j]) return false;
    return true;
}

namespace {

bool positiveInteger(const ExactComplex& d) { return d.im == 0 && isInteger(d.re) && d.re > 0; }
bool positiveReal(const ExactComplex& d) { return d.im == 0 && d.re > 0; }

// the pair-mate condition of the reducibility criterion for a complex root
// at positions (k, l)
bool mateCondition(const CartanChar& c, int k, int l) {
    int i = (k + 1) / 2, j = (l + 1) / 2;
    const auto& pi = c.pairs[i - 1];
    const auto& pj = c.pairs[j - 1];
    bool kLambda = k % 2 == 1, lLambda = l % 2 == 1;
    if (kLambda == lLambda)
        return positiveReal(pi.first - pj.first) && positiveReal(pi.second - pj.second);
    return positiveReal(pi.first - pj.second) && positiveReal(pi.second - pj.first);
}

}  // namespace

std::vector<IntegralRoot> integralRoots(const CartanChar& c) {
    int m = 2 * static_cast<int>(c.rank());
    std::vector<IntegralRoot> roots;
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
            if (k == l) continue;
            if (!positiveInteger(c.nu(k) - c.nu(l))) continue;
            IntegralRoot r;
            r.k = k;
            r.l = l;
            r.kind = ((k + 1) / 2 == (l + 1) / 2) ? RootKind::ImaginaryCompact : RootKind::Complex;
            r.simple = true;
            for (int mid = 1; mid <= m && r.simple; ++mid) {
                if (mid == k || mid == l) continue;
                if (positiveInteger(c.nu(k) - c.nu(mid)) && positiveInteger(c.nu(mid) - c.nu(l)))
                    r.simple = false;
            }
            roots.push_back(r);
        }
    return roots;
}

namespace {

// the translated wall configuration {(a, a-1), (a-1, a-2)}: irreducible even
// though the necessary condition fires
bool isWallPair(const CartanChar& c) {
    if (c.rank() != 2) return false;
    const auto& p0 = c.pairs[0];
    const auto& p1 = c.pairs[1];
    ExactComplex one(1);
    return p0.first - p0.second == one && p1.first - p1.second == one && p0.second == p1.first;
}

}  // namespace

ReducibilityReport reducibilityWitness(const CartanChar& c) {
    ReducibilityReport rep;
    auto roots = integralRoots(c);
    if (isRegular(supportOfChar(c))) {
        for (const IntegralRoot& r : roots) {
            if (!r.simple || r.kind != RootKind::Complex) continue;
            if (mateCondition(c, r.k, r.l)) {
                rep.verdict = ReducibilityReport::Verdict::Reducible;
                rep.witness = std::make_pair(r.k, r.l);
                return rep;
            }
        }
        rep.verdict = ReducibilityReport::Verdict::Irreducible;
        return rep;
    }
    if (isWallPair(c)) {
        rep.verdict = ReducibilityReport::Verdict::Irreducible;
        return rep;
    }
    for (const IntegralRoot& r : roots) {
        if (r.kind != RootKind::Complex) continue;
        if (mateCondition(c, r.k, r.l)) {
            rep.verdict = ReducibilityReport::Verdict::Unknown;
            return rep;
        }
    }
    rep.verdict = ReducibilityReport::Verdict::Irreducible;
    return rep;
}

std::vector<CartanChar> elementaryOps(const CartanChar& c) {
    if (!isRegular(supportOfChar(c)))
        throw std::domain_error("elementary operations need a regular support");
    std::set<CartanChar> out;
    for (const IntegralRoot& r : integralRoots(c)) {
        if (!r.simple || r.kind != RootKind::Complex) continue;
        if (!mateCondition(c, r.k, r.l)) continue;
        auto ps = c.pairs;
        auto slot = [&ps](int k) -> ExactComplex& {
            auto& p = ps[(k - 1) / 2];
            return k % 2 == 1 ? p.first : p.second;
        };
        std::swap(slot(r.k), slot(r.l));
        out.insert(CartanChar(std::move(ps)));
    }
    return {out.begin(), out.end()};
}

OrderIdeal orderIdeal(const CartanChar& c) {
    OrderIdeal ideal;
    std::map<CartanChar, int> index;
    ideal.nodes.push_back(c);
    index[c] = 0;
    std::vector<int> queue = {0};
    for (size_t q = 0; q < queue.size(); ++q) {
        int cur = queue[q];
        for (const CartanChar& child : elementaryOps(ideal.nodes[cur])) {
            auto it = index.find(child);
            int ci;
            if (it == index.end()) {
                ci = static_cast<int>(ideal.nodes.size());
                ideal.nodes.push_back(child);
                index[child] = ci;
                queue.push_back(ci);
            } else {
                ci = it->second;
            }
            ideal.edges.emplace_back(ci, cur);
        }
    }
    return ideal;
}

namespace {

int longestBelow(int node, const std::vector<std::vector<int>>& children, std::vector<int>& depth,
                 std::vector<int>& state) {
    if (state[node] == 1) throw std::logic_error("cycle among elementary operations");
    if (state[node] == 2) return depth[node];
    state[node] = 1;
    int best = 0;
    for (int ch : children[node]) best = std::max(best, longestBelow(ch, children, depth, state) + 1);
    depth[node] = best;
    state[node] = 2;
    return best;
}

}  // namespace

int chainLength(const CartanChar& c) {
    OrderIdeal ideal = orderIdeal(c);
    size_t n = ideal.nodes.size();
    std::vector<std::vector<int>> children(n);
    for (auto [lo, hi] : ideal.edges) children[hi].push_back(lo);
    std::vector<int> depth(n, 0), state(n, 0);
    return longestBelow(0, children, depth, state);
}

std::string render(const CartanChar& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.pairs.size(); ++i) {
        if (i) s += ",";
        s += "(" + render(c.pairs[i].first) + "," + render(c.pairs[i].second) + ")";
    }
    return s + ")";
}

}  // namespace udual
