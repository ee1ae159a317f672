#pragma once

#include <map>
#include <optional>

#include "udual/datum.hpp"

namespace udual {

// An element of the Grothendieck ring R of one algebra, in coordinates with
// respect to the basis of standard representations: a finite integer
// combination of lambda-monomials. R is the polynomial ring Z[D], so the
// product is free on monomials (multiset union) and extends bilinearly.
class RingElem {
  public:
    RingElem() = default;
    explicit RingElem(Algebra a) : alg_(a) {}

    static RingElem zero(Algebra a) { return RingElem(a); }
    static RingElem one(Algebra a);

    Algebra algebra() const { return alg_; }
    bool isZero() const { return coords_.empty(); }
    size_t termCount() const { return coords_.size(); }
    const std::map<LanglandsDatum, Int>& coords() const { return coords_; }

    Int coeff(const LanglandsDatum& a) const;
    void addTerm(const LanglandsDatum& a, const Int& c);

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator*(const Int& c) const;
    bool operator==(const RingElem& o) const { return alg_ == o.alg_ && coords_ == o.coords_; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    // degree of homogeneous elements; nullopt when mixed or zero
    std::optional<int> homogeneousDegree() const;

    // the largest monomial in the canonical order (zero element has none)
    std::optional<LanglandsDatum> leadingMonomial() const;

  private:
    Algebra alg_ = Algebra::Real;
    std::map<LanglandsDatum, Int> coords_;
};

RingElem lambdaMonomial(const LanglandsDatum& a);
RingElem lambdaMonomial(Algebra alg, std::vector<Dparam> elems);

std::string render(const RingElem& r);

}  // namespace udual
