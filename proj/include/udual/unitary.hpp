#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "udual/datum.hpp"

namespace udual {

// u(base, len): the Langlands quotient of the centered nu_delta-progression
// of len twists of base. Unitary when exponent(base) = 0; factors with
// twisted bases represent unramified twists of unitary representations.
struct Speh {
    Dparam base;
    int len = 1;
};

// pi(base, len; alpha) = nu_delta^alpha u(base,len) x nu_delta^-alpha
// u(base,len). alpha is measured in nu_delta units everywhere inside the
// engine; the basis condition is 0 < alpha < 1/2.
struct CompSeries {
    Dparam base;
    int len = 1;
    Rational alpha;
};

using UnitaryFactor = std::variant<Speh, CompSeries>;

int cmp(const UnitaryFactor& a, const UnitaryFactor& b);
bool operator==(const UnitaryFactor& a, const UnitaryFactor& b);

// A formal product of factors; the multiset of factors is the canonical form
// of an irreducible unitary representation (free commutative monoid).
struct UnitaryRep {
    Algebra alg = Algebra::Real;
    std::vector<UnitaryFactor> factors;  // canonically sorted

    UnitaryRep() = default;
    UnitaryRep(Algebra a, std::vector<UnitaryFactor> fs);

    bool operator==(const UnitaryRep& o) const { return alg == o.alg && factors == o.factors; }
    bool operator!=(const UnitaryRep& o) const { return !(*this == o); }

    UnitaryRep operator*(const UnitaryRep& o) const;  // multiset union
};

int degreeOf(const Speh& u);
int degreeOf(const CompSeries& p);
int degreeOf(const UnitaryRep& r);

// the basis constraints: every base has exponent 0, every alpha lies in
// (0, 1/2) strictly; throws std::invalid_argument otherwise
void validateUnitary(const UnitaryRep& r);
bool isUnitary(const UnitaryRep& r);

// the n-element datum of nu_delta-steps under u(base, n)
LanglandsDatum spehDatum(const Speh& u);

// datum of the standard module inducing the rep: multiset sum over factors;
// pi contributes the Speh datum twisted by +-alpha
LanglandsDatum toDatum(const UnitaryRep& r);
LanglandsDatum toDatum(const UnitaryFactor& f, Algebra alg);

// Inverse of toDatum on its image: groups the datum by nu-line, partitions
// each line's exponent multiset (in nu_delta units) into centered unit-step
// progressions and symmetric shifted progression pairs. The factorization is
// unique when it exists; two distinct valid partitions are an invariant
// breach and throw std::logic_error. Absent means the class is not unitary.
std::optional<UnitaryRep> factorize(const LanglandsDatum& a);

// true iff every factor has len 1
bool isGenericUnitary(const UnitaryRep& r);

// replace u(s,1) by u(s,k) and pi(d,1;a) by pi(d,k;a); input must be generic
UnitaryRep uGamma(const UnitaryRep& gamma, int k);

// The wall-adjacent quaternionic Langlands quotient built with step nu
// instead of nu_delta = nu^2, expressed in the unitary basis:
//   k = 2n+1 -> u(base, n+1) x u(base, n)
//   k = 2n   -> pi(base, n; 1/4)          (nu^{+-1/2} = nu_delta^{+-1/4})
// base is quatDS(x, x-1); requires exponent 0, i.e. re(x) = 1/2.
UnitaryRep ubarExpand(const ExactComplex& x, int k);

// the datum of the nu-stepped standard module the wall quotient comes from
LanglandsDatum ubarStandardDatum(const ExactComplex& x, int k);

std::string render(const UnitaryRep& r);
std::string render(const UnitaryFactor& f);

}  // namespace udual
