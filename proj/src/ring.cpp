#include "udual/ring.hpp"

#include <stdexcept>

namespace udual {

RingElem RingElem::one(Algebra a) {
    RingElem r(a);
    r.addTerm(LanglandsDatum(a, {}), 1);
    return r;
}

Int RingElem::coeff(const LanglandsDatum& a) const {
    auto it = coords_.find(a);
    return it == coords_.end() ? Int(0) : it->second;
}

void RingElem::addTerm(const LanglandsDatum& a, const Int& c) {
    if (c == 0) return;
    if (a.alg != alg_) throw std::invalid_argument("monomial over the wrong algebra");
    auto [it, inserted] = coords_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coords_.erase(it);
    }
}

RingElem RingElem::operator+(const RingElem& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("ring sum across algebras");
    RingElem r = *this;
    for (const auto& [a, c] : o.coords_) r.addTerm(a, c);
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("ring difference across algebras");
    RingElem r = *this;
    for (const auto& [a, c] : o.coords_) r.addTerm(a, -c);
    return r;
}

RingElem RingElem::operator-() const {
    RingElem r(alg_);
    for (const auto& [a, c] : coords_) r.addTerm(a, -c);
    return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("ring product across algebras");
    RingElem r(alg_);
    for (const auto& [a, ca] : coords_)
        for (const auto& [b, cb] : o.coords_) r.addTerm(a + b, ca * cb);
    return r;
}

RingElem RingElem::operator*(const Int& c) const {
    RingElem r(alg_);
    if (c == 0) return r;
    for (const auto& [a, ca] : coords_) r.addTerm(a, ca * c);
    return r;
}

std::optional<int> RingElem::homogeneousDegree() const {
    if (coords_.empty()) return std::nullopt;
    int d = degree(coords_.begin()->first);
    for (const auto& [a, c] : coords_)
        if (degree(a) != d) return std::nullopt;
    return d;
}

std::optional<LanglandsDatum> RingElem::leadingMonomial() const {
    if (coords_.empty()) return std::nullopt;
    return coords_.rbegin()->first;
}

RingElem lambdaMonomial(const LanglandsDatum& a) {
    RingElem r(a.alg);
    r.addTerm(a, 1);
    return r;
}

RingElem lambdaMonomial(Algebra alg, std::vector<Dparam> elems) {
    return lambdaMonomial(LanglandsDatum(alg, std::move(elems)));
}

std::string render(const RingElem& r) {
    if (r.isZero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [a, c] : r.coords()) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (abs != 1 || a.empty()) {
            s += abs.get_str();
            if (!a.empty()) s += " ";
        }
        if (!a.empty()) s += render(a);
    }
    return s;
}

}  // namespace udual
