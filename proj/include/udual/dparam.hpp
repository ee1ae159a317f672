#pragma once

#include <string>
#include <utility>
#include <vector>

#include "udual/numeric.hpp"

namespace udual {

// The three division algebras over an archimedean local field.
enum class Algebra { Real, Complex, Quaternion };

// d with dim_F(A) = d^2
inline int algebraDim(Algebra a) { return a == Algebra::Quaternion ? 2 : 1; }
std::string algebraName(Algebra a);

// An irreducible essentially square integrable (mod center) representation.
//
//   ComplexChar  z |-> z^x zbar^y of C^x          (x - y integral)
//   RealChar     t |-> |t|^a sgn(t)^eps of R^x
//   RealDS       discrete series of GL(2,R), unordered pair {hi, lo},
//                hi - lo a nonzero integer
//   QuatDS       irreducible of H^x, unordered pair {hi, lo},
//                hi - lo a nonzero integer (the wall hi = lo is excluded:
//                that parameter is the zero class, not a representation)
//
// Pairs are stored dominant-first. Equality on the pair kinds is multiset
// equality by construction.
class Dparam {
  public:
    enum class Kind { ComplexChar, RealChar, RealDS, QuatDS };

    static Dparam complexChar(ExactComplex x, ExactComplex y);
    static Dparam realChar(ExactComplex a, int eps);
    static Dparam realDS(ExactComplex x, ExactComplex y);
    static Dparam quatDS(ExactComplex x, ExactComplex y);

    Kind kind() const { return kind_; }
    Algebra algebra() const;

    // first/second coordinate; for pair kinds these are {hi, lo}; RealChar
    // keeps its exponent in first().
    const ExactComplex& first() const { return first_; }
    const ExactComplex& second() const { return second_; }
    int eps() const { return eps_; }

    bool operator==(const Dparam& o) const;
    bool operator!=(const Dparam& o) const { return !(*this == o); }
    // canonical order: kind tag, then (re, im) lexicographically on the
    // stored (pre-sorted) coordinates, then eps
    bool operator<(const Dparam& o) const;

  private:
    Dparam(Kind k, ExactComplex a, ExactComplex b, int eps);
    Kind kind_;
    ExactComplex first_, second_;
    int eps_ = 0;
};

int cmp(const Dparam& a, const Dparam& b);

// The wall parameter over R: not a member of D. It stands for the length-2
// Langlands datum (realChar(x,0), realChar(x,1)), an irreducible principal
// series of GL(2,R).
struct LimitOfDiscreteSeries {
    ExactComplex point;
};

// The infinitesimal character as a multiset of complex numbers; over C it is
// a couple of multisets. Entries are kept sorted descending.
struct SupportMultiset {
    Algebra alg = Algebra::Real;
    std::vector<ExactComplex> entries;
    std::vector<ExactComplex> secondEntries;  // used only over C

    bool operator==(const SupportMultiset& o) const;
    SupportMultiset& add(const SupportMultiset& o);  // multiset sum, same algebra
};

void sortDesc(std::vector<ExactComplex>& v);

// twist by the unramified character nu^s
Dparam twist(const Dparam& p, const ExactComplex& s);

// e(p) with p = nu^{e(p)} p^u
Rational exponent(const Dparam& p);

// (p^u, e) with twist(p^u, e) = p and exponent(p^u) = 0
std::pair<Dparam, Rational> unitaryPart(const Dparam& p);

// the exponent a0 with nu_delta = nu^{a0}: smallest a > 0 with p x nu^a p
// reducible. 1 everywhere except the one-dimensional quaternionic case.
Rational nuDelta(const Dparam& p);

SupportMultiset supportOfD(const Dparam& p);

int degreeOfD(const Dparam& p);

// the square-integrable correspondence on the 2 <-> 1 step: RealDS{x,y} to
// QuatDS{x,y}; rejects rank-1 and complex inputs
Dparam jlOnSquareIntegrable(const Dparam& p);

std::string render(const Dparam& p);

}  // namespace udual
