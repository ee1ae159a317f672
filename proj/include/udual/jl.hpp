#pragma once

#include <optional>

#include "udual/ring.hpp"
#include "udual/unitary.hpp"

namespace udual {

// image of a unitary transfer together with the sign of the character
// relation
struct SignedUnitary {
    int sign = 1;  // +-1
    UnitaryRep rep;
};

// abstract non-archimedean square-integrable datum for the compatibility
// arithmetic: its degree and the length of its support
struct CompatDatum {
    int degree = 1;
    int cuspLength = 1;  // divides degree
};

// the correspondence on single classes at Grothendieck-group level:
// rank-2 real discrete series map to minus the quaternionic class, rank-1
// characters die
RingElem ljOnD(const Dparam& p);

// the unique algebra-morphism extension to the whole ring
RingElem ljRing(const RingElem& r);

// transfer of a ladder quotient u(base, len) over R (base need not be
// centered; the transfer commutes with twists). nullopt when the character
// vanishes on transferring elements (rank-1 base with odd length).
std::optional<SignedUnitary> ljSpeh(const Dparam& base, int len);

// the sign-stripped transfer on unitary representations of even total
// degree; nullopt when some factor's character vanishes on transferring
// elements
std::optional<SignedUnitary> ljAbsUnitary(const UnitaryRep& rep);

// the sign in the character relation; requires the transfer to exist
int epsilonSign(const UnitaryRep& rep);

// a product of degree-n_i factors is d-compatible iff every degree is
// divisible by d and every factor is
bool dCompatibleProduct(const std::vector<std::pair<int, bool>>& factors, int d);

// the generator k0 of { k : u(delta, k) is d-compatible } = k0 N
int kDelta(const CompatDatum& delta, int d);
int kDelta(const Dparam& delta, int d);

// lcm of the factor generators for a generic unitary representation
int kGamma(const UnitaryRep& gamma, int d);
int kGammaFromFactors(const std::vector<int>& factorKs, int d);

// the multiset of square-integrable data inducing the representation
LanglandsDatum inducingData(const UnitaryRep& rep);

}  // namespace udual
